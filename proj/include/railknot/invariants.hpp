#pragma once

// Invariants of rail diagrams and knotoid diagrams.
//
// f2_word reads a word in the free group on the two rail meridians x1, x2
// from the over-type rail crossings along the arc; its double-coset normal
// form (strip left x1-powers, strip right x2-powers after free reduction) is
// unchanged by every equivalence move. The Kauffman bracket is computed two
// independent ways: a flat state sum over all smoothings, and a recursive
// skein evaluation kept as a cross-check oracle.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "railknot/knotoid_diagram.hpp"
#include "railknot/rail_diagram.hpp"

namespace railknot {

// --- free group words ---

// letter encoding: +1 = x1, -1 = x1^-1, +2 = x2, -2 = x2^-1
using F2Word = std::vector<int>;

inline F2Word free_reduce(const F2Word& w) {
  F2Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

inline F2Word f2_normal_form(const F2Word& w) {
  F2Word r = free_reduce(w);
  size_t lo = 0;
  while (lo < r.size() && (r[lo] == 1 || r[lo] == -1)) ++lo;
  size_t hi = r.size();
  while (hi > lo && (r[hi - 1] == 2 || r[hi - 1] == -2)) --hi;
  return F2Word(r.begin() + lo, r.begin() + hi);
}

inline std::string format_word(const F2Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(std::abs(letter));
    if (letter < 0) out += "^-1";
  }
  return out;
}

inline std::optional<F2Word> parse_word(const std::string& s) {
  F2Word w;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
  skip_ws();
  if (s.substr(i) == "ε" || s.substr(i).empty()) return w;
  while (i < s.size()) {
    if (s[i] != 'x' || i + 1 >= s.size()) return std::nullopt;
    int gen = s[i + 1] - '0';
    if (gen != 1 && gen != 2) return std::nullopt;
    i += 2;
    int sign = 1;
    if (i + 2 < s.size() && s.compare(i, 3, "^-1") == 0) {
      sign = -1;
      i += 3;
    }
    w.push_back(sign * gen);
    skip_ws();
  }
  return w;
}

// Word read along the arc: an over-type rail crossing on rail i contributes
// x_i when the arc crosses left to right, x_i^-1 right to left. Under-type
// crossings contribute nothing. Requires a valid diagram.
inline F2Word f2_word(const RailDiagram& d, const RailAnalysis& an) {
  F2Word w;
  for (const auto& st : an.walk) {
    if (st.v < 0 || d.verts[st.v].kind != VKind::RailX) continue;
    if (!d.verts[st.v].arc_over) continue;
    int gen = d.verts[st.v].rail;
    // left-to-right iff the outgoing arc dart is the ccw predecessor of the
    // rail's up dart
    bool l2r = d.sigma[st.out] == an.up_dart[st.v];
    w.push_back(l2r ? gen : -gen);
  }
  return w;
}

inline F2Word f2_word(const RailDiagram& d) {
  auto res = analyze(d);
  if (!res.ok()) return {};
  return f2_word(d, res.analysis);
}

// --- crossing signs / writhe ---

// +1 iff the outgoing under dart is the immediate ccw successor of the
// outgoing over dart.
namespace inv_detail {

template <typename D>
int walk_writhe(const D& d, const std::vector<ArcStep>& walk, const std::vector<char>& is_xing,
                const std::vector<Dart>& over_darts) {
  // collect out-darts per crossing in pass order
  std::map<int, std::vector<Dart>> outs;
  for (const auto& st : walk)
    if (st.v >= 0 && is_xing[st.v]) outs[st.v].push_back(st.out);
  int w = 0;
  for (auto& [v, oo] : outs) {
    if (oo.size() != 2) continue;
    Dart o = over_darts[v];
    bool first_over = oo[0] == o || oo[0] == d.sigma[d.sigma[o]];
    Dart over_out = first_over ? oo[0] : oo[1];
    Dart under_out = first_over ? oo[1] : oo[0];
    w += d.sigma[over_out] == under_out ? 1 : -1;
  }
  return w;
}

}  // namespace inv_detail

inline int writhe(const KnotoidDiagram& d) {
  auto res = analyze(d);
  if (!res.ok()) return 0;
  std::vector<char> is_xing(d.vertex_count(), 0);
  std::vector<Dart> over(d.vertex_count(), kNoDart);
  for (int v = 0; v < d.vertex_count(); ++v) {
    is_xing[v] = d.verts[v].kind == KKind::Xing;
    over[v] = d.verts[v].over_dart;
  }
  return inv_detail::walk_writhe(d, res.analysis.walk, is_xing, over);
}

inline int writhe(const RailDiagram& d) {
  auto res = analyze(d);
  if (!res.ok()) return 0;
  std::vector<char> is_xing(d.vertex_count(), 0);
  std::vector<Dart> over(d.vertex_count(), kNoDart);
  for (int v = 0; v < d.vertex_count(); ++v) {
    is_xing[v] = d.verts[v].kind == VKind::Xing;
    over[v] = d.verts[v].over_dart;
  }
  return inv_detail::walk_writhe(d, res.analysis.walk, is_xing, over);
}

// --- Laurent polynomials in A ---

struct LaurentPoly {
  std::map<int, long long> coeff;  // exponent -> coefficient, no zeros stored

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return term(1, 0); }
  static LaurentPoly term(long long c, int e) {
    LaurentPoly p;
    if (c != 0) p.coeff[e] = c;
    return p;
  }
  bool operator==(const LaurentPoly& o) const { return coeff == o.coeff; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly& add(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeff) {
      long long v = (coeff[e] += c);
      if (v == 0) coeff.erase(e);
    }
    return *this;
  }
  LaurentPoly mul(const LaurentPoly& o) const {
    LaurentPoly out;
    for (auto& [e1, c1] : coeff)
      for (auto& [e2, c2] : o.coeff) {
        long long v = (out.coeff[e1 + e2] += c1 * c2);
        if (v == 0) out.coeff.erase(e1 + e2);
      }
    return out;
  }
  std::string to_string() const {
    if (coeff.empty()) return "0";
    std::string out;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += std::to_string(it->second) + "*A^" + std::to_string(it->first);
    }
    return out;
  }
};

// (-A^2 - A^-2)^k
inline LaurentPoly loop_factor_pow(int k) {
  LaurentPoly delta;
  delta.coeff[2] = -1;
  delta.coeff[-2] = -1;
  LaurentPoly out = LaurentPoly::one();
  for (int i = 0; i < k; ++i) out = out.mul(delta);
  return out;
}

struct BracketResult {
  std::optional<LaurentPoly> poly;
  std::string error;
  bool ok() const { return poly.has_value(); }
};

namespace inv_detail {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// smoothing pairs at a crossing: the A-smoothing merges the two regions swept
// by rotating the over strand counterclockwise onto the under strand, which
// joins each over dart with its ccw predecessor; B joins with the successor.
// With the sign convention used here this makes the positive kink evaluate
// to -A^3, as the writhe normalization requires.
inline std::array<std::pair<Dart, Dart>, 2> smoothing_pairs(const KnotoidDiagram& d, int v,
                                                            bool a_smoothing) {
  Dart o1 = d.verts[v].over_dart;
  Dart o2 = d.sigma[d.sigma[o1]];
  if (!a_smoothing) return {{{o1, d.sigma[o1]}, {o2, d.sigma[o2]}}};
  Dart p1 = d.sigma[d.sigma[d.sigma[o1]]];  // ccw predecessor of o1
  Dart p2 = d.sigma[d.sigma[d.sigma[o2]]];
  return {{{o1, p1}, {o2, p2}}};
}

}  // namespace inv_detail

// State-sum bracket: sum over all 2^n smoothings of A^(a-b) d^loops where
// d = -A^2 - A^-2 and the open component contributes no factor.
inline BracketResult bracket(const KnotoidDiagram& d, int crossing_limit = 16) {
  BracketResult out;
  auto res = analyze(d);
  if (!res.ok()) {
    out.error = "invalid diagram: " + res.report.joined();
    return out;
  }
  std::vector<int> xings;
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.verts[v].kind == KKind::Xing) xings.push_back(v);
  int n = static_cast<int>(xings.size());
  if (n > crossing_limit) {
    out.error = "crossing limit exceeded";
    return out;
  }
  LaurentPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    inv_detail::UF uf(d.dart_count());
    for (Dart x = 0; x < d.dart_count(); ++x) uf.unite(x, d.alpha[x]);
    int a_count = 0;
    for (int i = 0; i < n; ++i) {
      bool a_sm = (mask >> i & 1) == 0;
      a_count += a_sm;
      for (auto [p, q] : inv_detail::smoothing_pairs(d, xings[i], a_sm)) uf.unite(p, q);
    }
    std::vector<char> seen(d.dart_count(), 0);
    int comps = 0;
    for (Dart x = 0; x < d.dart_count(); ++x) {
      int r = uf.find(x);
      if (!seen[r]) {
        seen[r] = 1;
        ++comps;
      }
    }
    int loops = comps - 1;  // the leg-to-head component carries no factor
    LaurentPoly term = LaurentPoly::term(1, a_count - (n - a_count));
    total.add(term.mul(loop_factor_pow(loops)));
  }
  out.poly = std::move(total);
  return out;
}

// Recursive skein evaluation; an independent route to the same value.
namespace inv_detail {

struct SkeinState {
  // ports are darts; `join` holds the current pairings created by smoothings,
  // alpha stays fixed
  const KnotoidDiagram* d;
  std::vector<Dart> join;  // kNoDart when not yet joined

  int count_loops() const {
    UF uf(d->dart_count());
    for (Dart x = 0; x < d->dart_count(); ++x) {
      uf.unite(x, d->alpha[x]);
      if (join[x] != kNoDart) uf.unite(x, join[x]);
    }
    std::vector<char> seen(d->dart_count(), 0);
    int comps = 0;
    for (Dart x = 0; x < d->dart_count(); ++x) {
      int r = uf.find(x);
      if (!seen[r]) {
        seen[r] = 1;
        ++comps;
      }
    }
    return comps - 1;
  }
};

inline LaurentPoly skein_rec(SkeinState& st, std::vector<int>& remaining) {
  if (remaining.empty()) return loop_factor_pow(st.count_loops());
  int v = remaining.back();
  remaining.pop_back();
  LaurentPoly out;
  for (bool a_sm : {true, false}) {
    auto pairs = smoothing_pairs(*st.d, v, a_sm);
    for (auto [p, q] : pairs) {
      st.join[p] = q;
      st.join[q] = p;
    }
    LaurentPoly sub = skein_rec(st, remaining);
    out.add(LaurentPoly::term(1, a_sm ? 1 : -1).mul(sub));
    for (auto [p, q] : pairs) st.join[p] = st.join[q] = kNoDart;
  }
  remaining.push_back(v);
  return out;
}

}  // namespace inv_detail

inline BracketResult bracket_skein_oracle(const KnotoidDiagram& d, int crossing_limit = 8) {
  BracketResult out;
  auto res = analyze(d);
  if (!res.ok()) {
    out.error = "invalid diagram: " + res.report.joined();
    return out;
  }
  std::vector<int> xings;
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.verts[v].kind == KKind::Xing) xings.push_back(v);
  if (static_cast<int>(xings.size()) > crossing_limit) {
    out.error = "crossing limit exceeded";
    return out;
  }
  inv_detail::SkeinState st{&d, std::vector<Dart>(d.dart_count(), kNoDart)};
  out.poly = inv_detail::skein_rec(st, xings);
  return out;
}

// bracket times (-A^3)^(-writhe)
inline BracketResult normalized_bracket(const KnotoidDiagram& d, int crossing_limit = 16) {
  BracketResult raw = bracket(d, crossing_limit);
  if (!raw.ok()) return raw;
  int w = writhe(d);
  LaurentPoly factor = LaurentPoly::term(w % 2 == 0 ? 1 : -1, -3 * w);
  raw.poly = raw.poly->mul(factor);
  return raw;
}

}  // namespace railknot
