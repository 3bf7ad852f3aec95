#pragma once

// Local rewrite moves on rail diagrams.
//
// Eleven kinds: the Reidemeister moves r1/r2/r3, their rail versions where a
// rail strand is involved, and the slide move that carries an endpoint past a
// rail crossing. Planar isotopies are identities in the map representation
// and have no code. Every apply validates its output and returns the exact
// inverse site, so move paths replay and invert mechanically.
//
// Move variants are the over/under-coherent instances of each local pattern:
//   r2-/rail-r2- need one strand over at both crossings (equal flags on a
//   rail bigon); r3/rail-r3 need the three strands linearly ordered; slide
//   needs the transversal strand on the same side at the rail and at the
//   arc crossing.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "railknot/rail_diagram.hpp"

namespace railknot {

enum class MoveKind : std::uint8_t {
  R1Minus,
  R1Plus,
  R2Minus,
  R2Plus,
  R3,
  RailR1Minus,
  RailR1Plus,
  RailR2Minus,
  RailR2Plus,
  RailR3,
  Slide,
};

constexpr int kMoveKindCount = 11;

inline const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Minus: return "r1-";
    case MoveKind::R1Plus: return "r1+";
    case MoveKind::R2Minus: return "r2-";
    case MoveKind::R2Plus: return "r2+";
    case MoveKind::R3: return "r3";
    case MoveKind::RailR1Minus: return "rail-r1-";
    case MoveKind::RailR1Plus: return "rail-r1+";
    case MoveKind::RailR2Minus: return "rail-r2-";
    case MoveKind::RailR2Plus: return "rail-r2+";
    case MoveKind::RailR3: return "rail-r3";
    case MoveKind::Slide: return "slide";
  }
  return "?";
}

// flag bits, meaning depends on the kind
constexpr int kFlagSide = 1;   // r1+: which through dart takes the anchor edge
constexpr int kFlagOver = 2;   // r1+/r2+/rail-r1+: the moving strand is over
constexpr int kFlagAbove = 4;  // rail-r1+: wrap above (toward the rail top)
constexpr int kFlagAdd = 8;    // slide: crossing-adding direction

struct MoveSite {
  MoveKind kind = MoveKind::R1Minus;
  std::vector<Dart> darts;
  int flags = 0;

  bool operator==(const MoveSite& o) const {
    return kind == o.kind && darts == o.darts && flags == o.flags;
  }
  std::string to_string() const {
    std::string s = move_kind_name(kind);
    s += '@';
    for (size_t i = 0; i < darts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(darts[i]);
    }
    if (flags) s += ":" + std::to_string(flags);
    return s;
  }
  static std::optional<MoveSite> from_string(const std::string& s) {
    auto at = s.find('@');
    if (at == std::string::npos) return std::nullopt;
    MoveSite m;
    std::string kind = s.substr(0, at);
    bool found = false;
    for (int k = 0; k < kMoveKindCount; ++k) {
      if (kind == move_kind_name(static_cast<MoveKind>(k))) {
        m.kind = static_cast<MoveKind>(k);
        found = true;
      }
    }
    if (!found) return std::nullopt;
    std::string rest = s.substr(at + 1);
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
      try {
        m.flags = std::stoi(rest.substr(colon + 1));
      } catch (...) {
        return std::nullopt;
      }
      rest = rest.substr(0, colon);
    }
    std::string cur;
    for (char c : rest + ",") {
      if (c == ',') {
        if (cur.empty()) return std::nullopt;
        try {
          m.darts.push_back(std::stoi(cur));
        } catch (...) {
          return std::nullopt;
        }
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    return m;
  }
};

struct ApplyResult {
  RailDiagram diagram;
  MoveSite inverse;
  std::string error;
  bool ok() const { return error.empty(); }
};

namespace move_detail {

inline std::vector<Dart> face_from(const RailDiagram& d, Dart start) {
  std::vector<Dart> orbit;
  Dart cur = start;
  do {
    orbit.push_back(cur);
    cur = d.alpha[d.sigma[cur]];
  } while (cur != start && orbit.size() <= d.alpha.size());
  return orbit;
}

// is the strand containing `x` the over strand at its vertex
inline bool strand_over(const RailDiagram& d, const RailAnalysis& an, Dart x) {
  int v = d.vert[x];
  if (d.verts[v].kind == VKind::Xing) return d.xing_over_contains(v, x);
  if (d.verts[v].kind == VKind::RailX) {
    bool on_rail = an.dart_on_rail(x);
    return d.verts[v].arc_over ? !on_rail : on_rail;
  }
  return false;
}

inline bool edge_on_rail(const RailDiagram&, const RailAnalysis& an, Dart x) {
  return an.rail_of_dart[x] != 0;
}

inline void reverse_trivalent_cycle(RailDiagram& d, int v) {
  Dart anchor = kNoDart;
  for (Dart x = 0; x < d.dart_count() && anchor == kNoDart; ++x)
    if (d.vert[x] == v) anchor = x;
  Dart a = d.sigma[anchor], b = d.sigma[a];
  d.set_cycle({anchor, b, a});
}

// bigon/triangle discovery on a freshly built diagram, for inverse sites
inline std::optional<std::vector<Dart>> find_face_with_vertices(const RailDiagram& d,
                                                                std::vector<int> want) {
  std::sort(want.begin(), want.end());
  for (const auto& f : face_orbits_raw(d.alpha, d.sigma)) {
    if (f.size() != want.size()) continue;
    std::vector<int> vs;
    for (Dart x : f) vs.push_back(d.vert[x]);
    std::sort(vs.begin(), vs.end());
    if (vs == want) return f;
  }
  return std::nullopt;
}

inline Dart min_dart(const std::vector<Dart>& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace move_detail

// --- apply ---

ApplyResult apply_move(const RailDiagram& d, const MoveSite& m);

namespace move_detail {

inline ApplyResult fail(const std::string& msg) {
  ApplyResult r;
  r.error = msg;
  return r;
}

inline ApplyResult apply_r1_plus(const RailDiagram& d0, const RailAnalysis& an,
                                 const MoveSite& m) {
  if (m.darts.size() != 1) return fail("r1+ needs one dart");
  Dart a = m.darts[0];
  if (a < 0 || a >= d0.dart_count()) return fail("dart out of range");
  if (edge_on_rail(d0, an, a)) return fail("r1+ needs an arc edge");
  RailDiagram d = d0;
  Dart A2 = d.alpha[a];
  int X = d.new_vertex({VKind::Xing});
  Dart t0 = d.new_dart(X), t1 = d.new_dart(X), t2 = d.new_dart(X), t3 = d.new_dart(X);
  d.set_cycle({t0, t1, t2, t3});
  d.link(t0, t1);
  if (m.flags & kFlagSide) {
    d.link(a, t3);
    d.link(A2, t2);
  } else {
    d.link(a, t2);
    d.link(A2, t3);
  }
  d.verts[X].over_dart = (m.flags & kFlagOver) ? t1 : t0;
  ApplyResult out;
  out.diagram = std::move(d);
  out.inverse = {MoveKind::R1Minus, {t0}, 0};
  return out;
}

inline ApplyResult apply_r1_minus(const RailDiagram& d0, const MoveSite& m) {
  if (m.darts.size() != 1) return fail("r1- needs one dart");
  Dart t0 = m.darts[0];
  if (t0 < 0 || t0 >= d0.dart_count()) return fail("dart out of range");
  int X = d0.vert[t0];
  if (d0.verts[X].kind != VKind::Xing) return fail("r1- site is not a crossing");
  Dart t1 = d0.sigma[t0];
  if (d0.alpha[t0] != t1) return fail("r1- site is not a monogon");
  Dart t2 = d0.sigma[t1], t3 = d0.sigma[t2];
  Dart P = d0.alpha[t2], Q = d0.alpha[t3];
  if (d0.vert[P] == X || d0.vert[Q] == X) return fail("r1- site is degenerate");
  bool over_flag = d0.xing_over_contains(X, t1);  // pair {t1, t3} over
  RailDiagram d = d0;
  auto remap = d.smooth_out({X});
  ApplyResult out;
  out.inverse = {MoveKind::R1Plus, {remap[P]},
                 (over_flag ? kFlagOver : 0)};  // anchor P, side 0
  out.diagram = std::move(d);
  return out;
}

inline ApplyResult apply_r2_plus(const RailDiagram& d0, const RailAnalysis& an,
                                 const MoveSite& m) {
  if (m.darts.size() != 2) return fail("r2+ needs two darts");
  Dart a = m.darts[0], b = m.darts[1];
  if (a < 0 || b < 0 || a >= d0.dart_count() || b >= d0.dart_count() || a == b)
    return fail("bad darts");
  if (d0.alpha[a] == b) return fail("r2+ darts on the same edge");
  // must share a face
  auto face = face_from(d0, a);
  if (std::find(face.begin(), face.end(), b) == face.end())
    return fail("r2+ darts not on a common face");
  bool a_rail = edge_on_rail(d0, an, a), b_rail = edge_on_rail(d0, an, b);
  if (a_rail && b_rail) return fail("cannot cross two rails");
  bool rail_kind = a_rail || b_rail;
  if (rail_kind != (m.kind == MoveKind::RailR2Plus))
    return fail("wrong kind for this edge pair");
  bool a_over = (m.flags & kFlagOver) != 0;

  RailDiagram d = d0;
  Dart A2 = d.alpha[a], B2 = d.alpha[b];
  int rail_id = rail_kind ? an.rail_of_dart[a_rail ? a : b] : 0;
  VKind kind = rail_kind ? VKind::RailX : VKind::Xing;
  int X1 = d.new_vertex({kind});
  int X2 = d.new_vertex({kind});
  Dart e1 = d.new_dart(X1), n1 = d.new_dart(X1), w1 = d.new_dart(X1), s1 = d.new_dart(X1);
  Dart e2 = d.new_dart(X2), n2 = d.new_dart(X2), w2 = d.new_dart(X2), s2 = d.new_dart(X2);
  d.set_cycle({e1, n1, w1, s1});
  d.set_cycle({e2, n2, w2, s2});
  d.link(a, s1);
  d.link(A2, s2);
  d.link(n1, n2);
  d.link(b, e2);
  d.link(B2, w1);
  d.link(e1, w2);
  if (kind == VKind::Xing) {
    d.verts[X1].over_dart = a_over ? n1 : e1;
    d.verts[X2].over_dart = a_over ? n2 : e2;
  } else {
    bool arc_over = a_rail ? !a_over : a_over;
    d.verts[X1].rail = d.verts[X2].rail = rail_id;
    d.verts[X1].arc_over = d.verts[X2].arc_over = arc_over;
  }
  ApplyResult out;
  out.inverse = {rail_kind ? MoveKind::RailR2Minus : MoveKind::R2Minus, {std::min(n2, e1)}, 0};
  out.diagram = std::move(d);
  return out;
}

inline ApplyResult apply_r2_minus(const RailDiagram& d0, const RailAnalysis& an,
                                  const MoveSite& m) {
  if (m.darts.size() != 1) return fail("r2- needs one dart");
  Dart x = m.darts[0];
  if (x < 0 || x >= d0.dart_count()) return fail("dart out of range");
  Dart y = d0.alpha[d0.sigma[x]];
  if (y == x || d0.alpha[d0.sigma[y]] != x) return fail("not a bigon");
  int V1 = d0.vert[x], V2 = d0.vert[y];
  if (V1 == V2) return fail("degenerate bigon");
  VKind k1 = d0.verts[V1].kind, k2 = d0.verts[V2].kind;
  bool rail_kind = m.kind == MoveKind::RailR2Minus;
  if (rail_kind) {
    if (k1 != VKind::RailX || k2 != VKind::RailX) return fail("rail-r2- needs two rail crossings");
    if (d0.verts[V1].rail != d0.verts[V2].rail) return fail("rail mismatch");
    if (d0.verts[V1].arc_over != d0.verts[V2].arc_over)
      return fail("rail bigon with mixed flags is not a move");
    // one side must be the rail
    bool s1_rail = edge_on_rail(d0, an, d0.sigma[x]);
    bool s2_rail = edge_on_rail(d0, an, d0.sigma[y]);
    if (s1_rail == s2_rail) return fail("bigon not bounded by the rail");
  } else {
    if (k1 != VKind::Xing || k2 != VKind::Xing) return fail("r2- needs two crossings");
    // coherence: one strand over at both
    bool s1_over = d0.xing_over_contains(V1, d0.sigma[x]) && d0.xing_over_contains(V2, y);
    bool s2_over = d0.xing_over_contains(V1, x) && d0.xing_over_contains(V2, d0.sigma[y]);
    if (!s1_over && !s2_over) return fail("bigon strands are interleaved");
  }
  // reject the tight configurations whose inverse is not a plain r2+
  Dart exts[4] = {d0.alpha[d0.sigma[d0.sigma[d0.sigma[y]]]],
                  d0.alpha[d0.sigma[d0.sigma[d0.sigma[x]]]],
                  d0.alpha[d0.sigma[d0.sigma[x]]], d0.alpha[d0.sigma[d0.sigma[y]]]};
  for (Dart e : exts)
    if (d0.vert[e] == V1 || d0.vert[e] == V2) return fail("tight bigon, remove the kink first");
  // inverse parameters (creation anchors), see apply_r2_plus for the frame
  Dart inv_a = d0.alpha[d0.sigma[d0.sigma[d0.sigma[y]]]];
  Dart inv_b = d0.alpha[d0.sigma[d0.sigma[d0.sigma[x]]]];
  bool a_over;
  if (rail_kind) {
    // the inverse creation's a-strand is the one through dart x at V1
    bool inv_a_on_rail = an.dart_on_rail(x);
    a_over = inv_a_on_rail ? !d0.verts[V1].arc_over : d0.verts[V1].arc_over;
  } else {
    a_over = d0.xing_over_contains(V1, x);
  }
  RailDiagram d = d0;
  auto remap = d.smooth_out({V1, V2});
  ApplyResult out;
  out.inverse = {rail_kind ? MoveKind::RailR2Plus : MoveKind::R2Plus,
                 {remap[inv_a], remap[inv_b]}, a_over ? kFlagOver : 0};
  out.diagram = std::move(d);
  return out;
}

inline ApplyResult apply_r3(const RailDiagram& d0, const RailAnalysis& an, const MoveSite& m) {
  if (m.darts.size() != 1) return fail("r3 needs one dart");
  Dart t = m.darts[0];
  if (t < 0 || t >= d0.dart_count()) return fail("dart out of range");
  auto orbit = face_from(d0, t);
  if (orbit.size() != 3) return fail("not a triangle face");
  Dart d1 = orbit[0], d2 = orbit[1], d3 = orbit[2];
  int V1 = d0.vert[d1], V2 = d0.vert[d2], V3 = d0.vert[d3];
  if (V1 == V2 || V2 == V3 || V1 == V3) return fail("degenerate triangle");
  for (int v : {V1, V2, V3}) {
    VKind k = d0.verts[v].kind;
    if (k != VKind::Xing && k != VKind::RailX) return fail("triangle corner is not a crossing");
  }
  int rail_sides = 0;
  for (Dart s : {d0.sigma[d1], d0.sigma[d2], d0.sigma[d3]}) rail_sides += edge_on_rail(d0, an, s);
  if (rail_sides > 1) return fail("triangle with two rail sides");
  bool rail_kind = rail_sides == 1;
  if (rail_kind != (m.kind == MoveKind::RailR3)) return fail("wrong kind for this triangle");
  // linear over-order: compare each side strand against the previous one
  bool r1 = strand_over(d0, an, d0.sigma[d1]);
  bool r2 = strand_over(d0, an, d0.sigma[d2]);
  bool r3 = strand_over(d0, an, d0.sigma[d3]);
  if (r1 == r2 && r2 == r3) return fail("cyclic over-relation, no r3 move");
  // ext darts must leave the triangle
  Dart ds[3] = {d1, d2, d3};
  Dart ext_a[3], ext_b[3];
  for (int i = 0; i < 3; ++i) {
    Dart s = ds[i], next = ds[(i + 1) % 3];
    ext_a[i] = d0.alpha[d0.sigma[d0.sigma[d0.sigma[s]]]];
    ext_b[i] = d0.alpha[d0.sigma[d0.sigma[next]]];
    for (Dart e : {ext_a[i], ext_b[i]})
      if (d0.vert[e] == V1 || d0.vert[e] == V2 || d0.vert[e] == V3)
        return fail("tight triangle, strands double back");
  }
  RailDiagram d = d0;
  for (int i = 0; i < 3; ++i) {
    Dart s = ds[i], next = ds[(i + 1) % 3];
    Dart inner_s = d0.sigma[s];              // strand dart at v(s)
    Dart outer_s = d0.sigma[d0.sigma[d0.sigma[s]]];
    Dart outer_n = d0.sigma[d0.sigma[next]];
    d.link(next, ext_a[i]);
    d.link(outer_n, outer_s);
    d.link(inner_s, ext_b[i]);
  }
  ApplyResult out;
  Dart nt = std::min({d0.sigma[d0.sigma[d1]], d0.sigma[d0.sigma[d2]], d0.sigma[d0.sigma[d3]]});
  out.inverse = {m.kind, {nt}, 0};
  out.diagram = std::move(d);
  return out;
}

inline ApplyResult apply_rail_r1_plus(const RailDiagram& d0, const RailAnalysis& an,
                                      const MoveSite& m) {
  if (m.darts.size() != 1) return fail("rail-r1+ needs one dart");
  Dart mm = m.darts[0];
  if (mm < 0 || mm >= d0.dart_count()) return fail("dart out of range");
  int E = d0.vert[mm];
  VKind k = d0.verts[E].kind;
  if ((k != VKind::Leg && k != VKind::Head) || an.arc_dart[E] != mm)
    return fail("rail-r1+ anchor must be an endpoint arc dart");
  bool above = (m.flags & kFlagAbove) != 0;
  bool over = (m.flags & kFlagOver) != 0;
  int rail = k == VKind::Leg ? 1 : 2;
  RailDiagram d = d0;
  Dart u = an.up_dart[E], w = an.down_dart[E];
  bool bit = d.sigma[u] == mm;  // arc immediately ccw after the up dart
  int X = d.new_vertex({VKind::RailX});
  d.verts[X].rail = rail;
  d.verts[X].arc_over = over;
  Dart x_up = d.new_dart(X), x_m = d.new_dart(X), x_dn = d.new_dart(X), x_c = d.new_dart(X);
  if (bit)
    d.set_cycle({x_up, x_c, x_dn, x_m});
  else
    d.set_cycle({x_up, x_m, x_dn, x_c});
  Dart M = d.alpha[mm];
  if (above) {
    Dart U = d.alpha[u];
    d.link(u, x_dn);
    d.link(U, x_up);
  } else {
    Dart W = d.alpha[w];
    d.link(w, x_up);
    d.link(W, x_dn);
  }
  d.link(mm, x_m);
  d.link(M, x_c);
  reverse_trivalent_cycle(d, E);
  auto bigon = find_face_with_vertices(d, {E, X});
  if (!bigon) return fail("rail-r1+ surgery failed to produce the end bigon");
  ApplyResult out;
  out.inverse = {MoveKind::RailR1Minus, {min_dart(*bigon)}, 0};
  out.diagram = std::move(d);
  return out;
}

inline ApplyResult apply_rail_r1_minus(const RailDiagram& d0, const RailAnalysis& an,
                                       const MoveSite& m) {
  if (m.darts.size() != 1) return fail("rail-r1- needs one dart");
  Dart x = m.darts[0];
  if (x < 0 || x >= d0.dart_count()) return fail("dart out of range");
  Dart y = d0.alpha[d0.sigma[x]];
  if (y == x || d0.alpha[d0.sigma[y]] != x) return fail("not a bigon");
  int A = d0.vert[x], B = d0.vert[y];
  int E, X;
  if ((d0.verts[A].kind == VKind::Leg || d0.verts[A].kind == VKind::Head) &&
      d0.verts[B].kind == VKind::RailX) {
    E = A;
    X = B;
  } else if ((d0.verts[B].kind == VKind::Leg || d0.verts[B].kind == VKind::Head) &&
             d0.verts[A].kind == VKind::RailX) {
    E = B;
    X = A;
  } else {
    return fail("rail-r1- bigon must join an endpoint and a rail crossing");
  }
  int rail = d0.verts[E].kind == VKind::Leg ? 1 : 2;
  if (d0.verts[X].rail != rail) return fail("rail mismatch");
  bool over = d0.verts[X].arc_over;
  // above iff X precedes E on the rail walk
  bool above = false;
  for (int v : an.rail_vertices[rail - 1]) {
    if (v == X) {
      above = true;
      break;
    }
    if (v == E) break;
  }
  Dart mm = an.arc_dart[E];
  RailDiagram d = d0;
  auto remap = d.smooth_out({X});
  reverse_trivalent_cycle(d, d.vert[remap[mm]]);
  ApplyResult out;
  out.inverse = {MoveKind::RailR1Plus, {remap[mm]},
                 (over ? kFlagOver : 0) | (above ? kFlagAbove : 0)};
  out.diagram = std::move(d);
  return out;
}

inline ApplyResult apply_slide_add(const RailDiagram& d0, const RailAnalysis& an,
                                   const MoveSite& m) {
  Dart e = m.darts[0];
  if (e < 0 || e >= d0.dart_count()) return fail("dart out of range");
  int E = d0.vert[e];
  VKind k = d0.verts[E].kind;
  if (k != VKind::Leg && k != VKind::Head) return fail("slide needs an endpoint");
  if (e != an.up_dart[E] && e != an.down_dart[E]) return fail("slide dart must be a rail dart");
  Dart xE = d0.alpha[e];
  int X = d0.vert[xE];
  if (d0.verts[X].kind != VKind::RailX) return fail("no rail crossing next to the endpoint");
  Dart mm = an.arc_dart[E];
  Dart M = d0.alpha[mm];
  // the transversal strand must not be the endpoint's own arc edge
  Dart xU = an.up_dart[X], xD = an.down_dart[X];
  Dart sWest = d0.sigma[xU], sEast = d0.sigma[xD];
  if (M == sWest || M == sEast) return fail("endpoint's own edge crosses here; use rail-r1");
  Dart uE = an.up_dart[E];
  bool west_E = d0.sigma[uE] == mm;
  Dart sSide = west_E ? sWest : sEast;
  Dart SA = d0.alpha[sSide];
  if (SA == mm) return fail("endpoint's own edge crosses here; use rail-r1");

  RailDiagram d = d0;
  // rail order swap
  Dart eP = e == uE ? an.down_dart[E] : uE;
  Dart xQ = d.opposite(xE);
  Dart p = d.alpha[eP], q = d.alpha[xQ];
  d.link(p, xE);
  d.link(xQ, eP);
  d.link(e, q);
  // new crossing between the endpoint edge and the transversal strand
  int Y = d.new_vertex({VKind::Xing});
  Dart yA = d.new_dart(Y), yB = d.new_dart(Y), yC = d.new_dart(Y), yD = d.new_dart(Y);
  bool orient = d.sigma[xU] == sSide;
  if (orient)
    d.set_cycle({yA, yB, yC, yD});
  else
    d.set_cycle({yA, yD, yC, yB});
  d.link(yA, sSide);
  d.link(yC, SA);
  d.link(yB, mm);
  d.link(yD, M);
  d.verts[Y].over_dart = d.verts[X].arc_over ? yA : yB;
  auto tri = find_face_with_vertices(d, {E, X, Y});
  if (!tri) return fail("slide surgery failed to produce the triangle");
  ApplyResult out;
  out.inverse = {MoveKind::Slide, {min_dart(*tri)}, 0};
  out.diagram = std::move(d);
  return out;
}

inline ApplyResult apply_slide_remove(const RailDiagram& d0, const RailAnalysis& an,
                                      const MoveSite& m) {
  Dart t = m.darts[0];
  if (t < 0 || t >= d0.dart_count()) return fail("dart out of range");
  auto orbit = face_from(d0, t);
  if (orbit.size() != 3) return fail("not a triangle face");
  int E = -1, X = -1, Y = -1;
  for (Dart x : orbit) {
    int v = d0.vert[x];
    switch (d0.verts[v].kind) {
      case VKind::Leg:
      case VKind::Head: E = v; break;
      case VKind::RailX: X = v; break;
      case VKind::Xing: Y = v; break;
      default: return fail("slide triangle has an unexpected corner");
    }
  }
  if (E < 0 || X < 0 || Y < 0) return fail("slide triangle needs endpoint, rail crossing, crossing");
  int rail = d0.verts[E].kind == VKind::Leg ? 1 : 2;
  if (d0.verts[X].rail != rail) return fail("rail mismatch");
  // coherence: the transversal strand is on the same side at X and at Y
  Dart s_at_y = kNoDart;
  for (Dart x : orbit) {
    if (d0.vert[x] == Y) {
      // the side from Y toward X is edge(sigma[x]) or edge(x); identify the
      // strand dart at Y that runs toward X
      Dart cand1 = d0.sigma[x], cand2 = x;
      s_at_y = d0.vert[d0.alpha[cand1]] == X ? cand1 : cand2;
    }
  }
  if (s_at_y == kNoDart || d0.vert[d0.alpha[s_at_y]] != X)
    return fail("slide triangle sides out of order");
  bool s_over_at_y = d0.xing_over_contains(Y, s_at_y);
  if (s_over_at_y != d0.verts[X].arc_over) return fail("transversal strand changes level");
  // the rail edge E-X must be a side
  bool has_rail_side = false;
  for (Dart x : orbit) {
    Dart s = d0.sigma[x];
    if (edge_on_rail(d0, an, s)) has_rail_side = true;
  }
  if (!has_rail_side) return fail("slide triangle not resting on the rail");

  RailDiagram d = d0;
  Dart uE = an.up_dart[E], dE = an.down_dart[E];
  Dart eX = d0.vert[d0.alpha[uE]] == X ? uE : dE;
  if (d0.vert[d0.alpha[eX]] != X) return fail("endpoint and rail crossing not adjacent");
  Dart eP = eX == uE ? dE : uE;
  Dart xE = d0.alpha[eX];
  Dart xQ = d0.opposite(xE);
  Dart p_old = d0.alpha[eP], q_old = d0.alpha[xQ];
  // p/q are never at Y (they live on the rail), safe across the smoothing
  auto remap = d.smooth_out({Y});
  Dart reP = remap[eP], rxE = remap[xE], rxQ = remap[xQ], reX = remap[eX];
  Dart rp = remap[p_old], rq = remap[q_old];
  d.link(rp, rxE);
  d.link(rxQ, reP);
  d.link(reX, rq);
  ApplyResult out;
  out.inverse = {MoveKind::Slide, {reP}, kFlagAdd};
  out.diagram = std::move(d);
  return out;
}

}  // namespace move_detail

inline ApplyResult apply_move(const RailDiagram& d, const MoveSite& m) {
  using namespace move_detail;
  auto res = analyze(d);
  if (!res.ok()) return fail("invalid input diagram: " + res.report.joined());
  const RailAnalysis& an = res.analysis;
  ApplyResult out;
  switch (m.kind) {
    case MoveKind::R1Plus: out = apply_r1_plus(d, an, m); break;
    case MoveKind::R1Minus: out = apply_r1_minus(d, m); break;
    case MoveKind::R2Plus:
    case MoveKind::RailR2Plus: out = apply_r2_plus(d, an, m); break;
    case MoveKind::R2Minus:
    case MoveKind::RailR2Minus: out = apply_r2_minus(d, an, m); break;
    case MoveKind::R3:
    case MoveKind::RailR3: out = apply_r3(d, an, m); break;
    case MoveKind::RailR1Plus: out = apply_rail_r1_plus(d, an, m); break;
    case MoveKind::RailR1Minus: out = apply_rail_r1_minus(d, an, m); break;
    case MoveKind::Slide:
      out = (m.flags & kFlagAdd) ? apply_slide_add(d, an, m) : apply_slide_remove(d, an, m);
      break;
    default: return fail("unknown move kind");
  }
  if (!out.ok()) return out;
  auto check = validate(out.diagram);
  if (!check.ok())
    return fail(std::string("move produced an invalid diagram (") + m.to_string() +
                "): " + check.joined());
  return out;
}

inline MoveSite inverse_site(const RailDiagram& d, const MoveSite& m,
                             const RailDiagram& /*d_after*/) {
  return apply_move(d, m).inverse;
}

// --- enumeration ---

namespace move_detail {

// canonical ids for deterministic site ordering
inline std::vector<int> canonical_ids(const RailDiagram& d) {
  int n = d.dart_count();
  std::vector<int> id(n, -1);
  std::vector<Dart> order;
  id[d.inf_darts[0]] = 0;
  order.push_back(d.inf_darts[0]);
  for (size_t i = 0; i < order.size(); ++i) {
    for (Dart y : {d.sigma[order[i]], d.alpha[order[i]]}) {
      if (id[y] < 0) {
        id[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  return id;
}

inline void sort_sites(const RailDiagram& d, std::vector<MoveSite>& sites) {
  auto id = canonical_ids(d);
  std::stable_sort(sites.begin(), sites.end(), [&](const MoveSite& a, const MoveSite& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    std::vector<int> ia, ib;
    for (Dart x : a.darts) ia.push_back(id[x]);
    for (Dart x : b.darts) ib.push_back(id[x]);
    if (ia != ib) return ia < ib;
    return a.flags < b.flags;
  });
}

}  // namespace move_detail

inline std::vector<MoveSite> enumerate_reductions(const RailDiagram& d) {
  using namespace move_detail;
  std::vector<MoveSite> sites;
  auto res = analyze(d);
  if (!res.ok()) return sites;
  const RailAnalysis& an = res.analysis;
  for (const auto& f : an.faces) {
    if (f.size() == 1) {
      Dart x = f[0];
      if (d.verts[d.vert[x]].kind == VKind::Xing) {
        MoveSite m{MoveKind::R1Minus, {x}, 0};
        if (apply_move(d, m).ok()) sites.push_back(m);
      }
    } else if (f.size() == 2) {
      Dart x = std::min(f[0], f[1]);
      int v1 = d.vert[f[0]], v2 = d.vert[f[1]];
      VKind k1 = d.verts[v1].kind, k2 = d.verts[v2].kind;
      MoveKind kind;
      if (k1 == VKind::Xing && k2 == VKind::Xing)
        kind = MoveKind::R2Minus;
      else if (k1 == VKind::RailX && k2 == VKind::RailX)
        kind = MoveKind::RailR2Minus;
      else if ((k1 == VKind::Leg || k1 == VKind::Head || k2 == VKind::Leg ||
                k2 == VKind::Head) &&
               (k1 == VKind::RailX || k2 == VKind::RailX))
        kind = MoveKind::RailR1Minus;
      else
        continue;
      MoveSite m{kind, {x}, 0};
      if (apply_move(d, m).ok()) sites.push_back(m);
    } else if (f.size() == 3) {
      bool has_end = false, has_railx = false, has_xing = false;
      for (Dart x : f) {
        VKind k = d.verts[d.vert[x]].kind;
        has_end |= k == VKind::Leg || k == VKind::Head;
        has_railx |= k == VKind::RailX;
        has_xing |= k == VKind::Xing;
      }
      if (has_end && has_railx && has_xing) {
        MoveSite m{MoveKind::Slide, {min_dart(f)}, 0};
        if (apply_move(d, m).ok()) sites.push_back(m);
      }
    }
  }
  sort_sites(d, sites);
  return sites;
}

inline std::vector<MoveSite> enumerate_creations(const RailDiagram& d, int max_crossings) {
  using namespace move_detail;
  std::vector<MoveSite> sites;
  auto res = analyze(d);
  if (!res.ok()) return sites;
  const RailAnalysis& an = res.analysis;
  int cur = d.crossing_count();
  auto try_add = [&](MoveSite m) {
    if (apply_move(d, m).ok()) sites.push_back(std::move(m));
  };

  if (cur + 1 <= max_crossings) {
    // r1+: per arc edge, both sides, both levels
    for (Dart x = 0; x < d.dart_count(); ++x) {
      if (x >= d.alpha[x]) continue;
      if (edge_on_rail(d, an, x)) continue;
      for (int side : {0, kFlagSide})
        for (int over : {0, kFlagOver}) try_add({MoveKind::R1Plus, {x}, side | over});
    }
    // rail-r1+: per endpoint, above/below, over/under
    for (int E : {an.leg_vertex, an.head_vertex}) {
      Dart mm = an.arc_dart[E];
      for (int above : {0, kFlagAbove})
        for (int over : {0, kFlagOver}) try_add({MoveKind::RailR1Plus, {mm}, above | over});
    }
    // slide (adding): per endpoint rail dart whose neighbor is a rail crossing
    for (int E : {an.leg_vertex, an.head_vertex}) {
      for (Dart e : {an.up_dart[E], an.down_dart[E]}) {
        if (d.verts[d.vert[d.alpha[e]]].kind == VKind::RailX)
          try_add({MoveKind::Slide, {e}, kFlagAdd});
      }
    }
  }
  if (cur + 2 <= max_crossings) {
    // r2+/rail-r2+: unordered dart pairs on a common face
    for (const auto& f : an.faces) {
      for (size_t i = 0; i < f.size(); ++i) {
        for (size_t j = i + 1; j < f.size(); ++j) {
          Dart a = f[i], b = f[j];
          if (d.alpha[a] == b) continue;
          bool ar = edge_on_rail(d, an, a), br = edge_on_rail(d, an, b);
          if (ar && br) continue;
          MoveKind kind = (ar || br) ? MoveKind::RailR2Plus : MoveKind::R2Plus;
          for (int over : {0, kFlagOver}) try_add({kind, {a, b}, over});
        }
      }
    }
  }
  // r3/rail-r3: triangle faces of crossings with a linear over-order
  for (const auto& f : an.faces) {
    if (f.size() != 3) continue;
    bool all_cross = true;
    int rails = 0;
    for (Dart x : f) {
      VKind k = d.verts[d.vert[x]].kind;
      if (k != VKind::Xing && k != VKind::RailX) all_cross = false;
    }
    if (!all_cross) continue;
    for (Dart x : f)
      if (edge_on_rail(d, an, d.sigma[x])) ++rails;
    MoveKind kind = rails == 1 ? MoveKind::RailR3 : MoveKind::R3;
    try_add({kind, {min_dart(f)}, 0});
  }
  sort_sites(d, sites);
  return sites;
}

// --- greedy simplification ---

struct SimplifyResult {
  RailDiagram diagram;
  std::vector<MoveSite> path;  // sites as applied, referencing intermediate diagrams
};

inline SimplifyResult simplify(const RailDiagram& d) {
  SimplifyResult out;
  out.diagram = d;
  while (true) {
    auto sites = enumerate_reductions(out.diagram);
    if (sites.empty()) break;
    auto applied = apply_move(out.diagram, sites.front());
    if (!applied.ok()) break;
    out.path.push_back(sites.front());
    out.diagram = std::move(applied.diagram);
  }
  return out;
}

}  // namespace railknot
