#pragma once

// Text formats.
//
//   rail-arc v1    one "v x y z" line per vertex, rationals as p/q
//   rkd v1         rail diagram: inf/alpha/sigma/hint sections
//   knd v1         knotoid diagram
//   thd v1         theta diagram (edges carry upper/middle/lower classes)
//
// Serialization is canonical: vertices ordered by their smallest dart,
// rotation cycles started at the smallest dart, alpha pairs sorted. Parsing
// accepts any dart labeling (dense 0..n-1); serializing a parsed file
// reproduces the canonical ordering byte for byte.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "railknot/geometry.hpp"
#include "railknot/knotoid_diagram.hpp"
#include "railknot/rail_diagram.hpp"
#include "railknot/theta_diagram.hpp"

namespace railknot {

struct ParseError {
  int line = 0;
  std::string message;
  std::string to_string() const {
    return "line " + std::to_string(line) + ": " + message;
  }
};

template <typename T>
struct Parsed {
  std::optional<T> value;
  ParseError error;
  bool ok() const { return value.has_value(); }
};

namespace io_detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline bool parse_int(const std::string& tok, int& out) {
  if (tok.empty()) return false;
  size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  out = std::stoi(tok);
  return true;
}

// "a-b" dart pair
inline bool parse_pair(const std::string& tok, int& a, int& b) {
  auto dash = tok.find('-', 1);  // skip a possible leading minus
  if (dash == std::string::npos) return false;
  return parse_int(tok.substr(0, dash), a) && parse_int(tok.substr(dash + 1), b);
}

}  // namespace io_detail

// --- rail arcs ---

inline std::string serialize_arc(const RailArc3D& a) {
  std::string out = "rail-arc v1\n";
  for (const auto& p : a.vertices) {
    out += "v " + format_rat(p.x) + " " + format_rat(p.y) + " " + format_rat(p.z) + "\n";
  }
  return out;
}

inline Parsed<RailArc3D> parse_arc(const std::string& text) {
  Parsed<RailArc3D> res;
  auto lines = io_detail::lines_of(text);
  if (lines.empty() || io_detail::split_ws(lines[0]) != std::vector<std::string>{"rail-arc", "v1"}) {
    res.error = {1, "expected header 'rail-arc v1'"};
    return res;
  }
  RailArc3D arc;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = io_detail::split_ws(lines[i]);
    if (toks.empty()) continue;
    if (toks[0] != "v" || toks.size() != 4) {
      res.error = {static_cast<int>(i + 1), "expected 'v x y z'"};
      return res;
    }
    auto x = parse_rat(toks[1]), y = parse_rat(toks[2]), z = parse_rat(toks[3]);
    if (!x || !y || !z) {
      res.error = {static_cast<int>(i + 1), "malformed rational"};
      return res;
    }
    arc.vertices.push_back(Vec3(*x, *y, *z));
  }
  if (arc.vertices.size() < 2) {
    res.error = {static_cast<int>(lines.size()), "arc needs at least two vertices"};
    return res;
  }
  res.value = std::move(arc);
  return res;
}

// --- diagrams ---

namespace io_detail {

// orders vertices by smallest dart and emits cycles starting at it
template <typename D>
std::vector<std::pair<Dart, int>> vertex_order(const D& d) {
  std::vector<Dart> best(d.vertex_count(), -1);
  for (Dart x = 0; x < d.dart_count(); ++x) {
    int v = d.vert[x];
    if (best[v] < 0 || x < best[v]) best[v] = x;
  }
  std::vector<std::pair<Dart, int>> order;
  for (int v = 0; v < d.vertex_count(); ++v) order.push_back({best[v], v});
  std::sort(order.begin(), order.end());
  return order;
}

template <typename D>
std::vector<Dart> cycle_from_min(const D& d, Dart min_dart) {
  std::vector<Dart> cyc;
  Dart cur = min_dart;
  do {
    cyc.push_back(cur);
    cur = d.sigma[cur];
  } while (cur != min_dart);
  return cyc;
}

template <typename D>
std::string alpha_line(const D& d) {
  std::string out = "alpha:";
  for (Dart x = 0; x < d.dart_count(); ++x) {
    if (x < d.alpha[x]) out += " " + std::to_string(x) + "-" + std::to_string(d.alpha[x]);
  }
  return out + "\n";
}

inline std::string hint_suffix(const std::optional<Vec2>& h) {
  if (!h) return "";
  return " @ " + format_rat(h->x) + " " + format_rat(h->y);
}

}  // namespace io_detail

inline std::string serialize_diagram(const RailDiagram& d) {
  std::string out = "rkd v1\n";
  out += "inf:";
  for (Dart x : d.inf_darts) out += " " + std::to_string(x);
  out += "\n";
  out += io_detail::alpha_line(d);
  for (auto [mind, v] : io_detail::vertex_order(d)) {
    const auto& info = d.verts[v];
    out += "sigma: ";
    out += vkind_name(info.kind);
    if (info.kind == VKind::Xing) out += " over=" + std::to_string(info.over_dart);
    if (info.kind == VKind::RailX) {
      out += " rail=" + std::to_string(info.rail);
      out += info.arc_over ? " side=over" : " side=under";
    }
    out += " :";
    for (Dart x : io_detail::cycle_from_min(d, mind)) out += " " + std::to_string(x);
    out += io_detail::hint_suffix(info.hint);
    out += "\n";
  }
  return out;
}

namespace io_detail {

struct SigmaLine {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<int> cycle;
  std::optional<Vec2> hint;
};

inline bool parse_sigma_line(const std::vector<std::string>& toks, SigmaLine& out,
                             std::string& err) {
  // sigma: <kind> [k=v ...] : d0 d1 ... [@ x y]
  size_t i = 1;
  if (i >= toks.size()) {
    err = "missing vertex kind";
    return false;
  }
  out.kind = toks[i++];
  while (i < toks.size() && toks[i] != ":") {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos) {
      err = "expected key=value or ':'";
      return false;
    }
    out.attrs.push_back({toks[i].substr(0, eq), toks[i].substr(eq + 1)});
    ++i;
  }
  if (i >= toks.size()) {
    err = "missing ':' before rotation cycle";
    return false;
  }
  ++i;  // skip ':'
  while (i < toks.size() && toks[i] != "@") {
    int v;
    if (!parse_int(toks[i], v)) {
      err = "bad dart id '" + toks[i] + "'";
      return false;
    }
    out.cycle.push_back(v);
    ++i;
  }
  if (i < toks.size() && toks[i] == "@") {
    if (i + 2 >= toks.size()) {
      err = "hint needs two coordinates";
      return false;
    }
    auto x = parse_rat(toks[i + 1]), y = parse_rat(toks[i + 2]);
    if (!x || !y) {
      err = "malformed hint rational";
      return false;
    }
    out.hint = Vec2(*x, *y);
  }
  if (out.cycle.empty()) {
    err = "empty rotation cycle";
    return false;
  }
  return true;
}

}  // namespace io_detail

inline Parsed<RailDiagram> parse_diagram(const std::string& text) {
  using namespace io_detail;
  Parsed<RailDiagram> res;
  auto lines = lines_of(text);
  if (lines.empty() || split_ws(lines[0]) != std::vector<std::string>{"rkd", "v1"}) {
    res.error = {1, "expected header 'rkd v1'"};
    return res;
  }
  std::vector<std::pair<int, int>> alpha_pairs;
  std::vector<SigmaLine> sigmas;
  std::vector<int> inf;
  bool saw_inf = false, saw_alpha = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i]);
    if (toks.empty() || toks[0][0] == '#') continue;
    int lineno = static_cast<int>(i + 1);
    if (toks[0] == "inf:") {
      saw_inf = true;
      for (size_t j = 1; j < toks.size(); ++j) {
        int v;
        if (!parse_int(toks[j], v)) {
          res.error = {lineno, "bad dart id in inf:"};
          return res;
        }
        inf.push_back(v);
      }
      if (inf.size() != 4) {
        res.error = {lineno, "inf: needs exactly four darts"};
        return res;
      }
    } else if (toks[0] == "alpha:") {
      saw_alpha = true;
      for (size_t j = 1; j < toks.size(); ++j) {
        int a, b;
        if (!parse_pair(toks[j], a, b)) {
          res.error = {lineno, "bad alpha pair '" + toks[j] + "'"};
          return res;
        }
        alpha_pairs.push_back({a, b});
      }
    } else if (toks[0] == "sigma:") {
      SigmaLine sl;
      std::string err;
      if (!parse_sigma_line(toks, sl, err)) {
        res.error = {lineno, err};
        return res;
      }
      sigmas.push_back(std::move(sl));
    } else {
      res.error = {lineno, "unknown section '" + toks[0] + "'"};
      return res;
    }
  }
  if (!saw_inf) {
    res.error = {static_cast<int>(lines.size()), "missing inf: section"};
    return res;
  }
  if (!saw_alpha) {
    res.error = {static_cast<int>(lines.size()), "missing alpha: section"};
    return res;
  }
  int n = static_cast<int>(alpha_pairs.size()) * 2;
  RailDiagram d;
  d.alpha.assign(n, kNoDart);
  d.sigma.assign(n, kNoDart);
  d.vert.assign(n, -1);
  auto dart_ok = [&](int x) { return x >= 0 && x < n; };
  for (auto [a, b] : alpha_pairs) {
    if (!dart_ok(a) || !dart_ok(b) || a == b || d.alpha[a] != kNoDart || d.alpha[b] != kNoDart) {
      res.error = {0, "alpha pairs do not form a dense fixed-point-free involution"};
      return res;
    }
    d.alpha[a] = b;
    d.alpha[b] = a;
  }
  for (const auto& sl : sigmas) {
    DiagramVertex v;
    if (sl.kind == "inf") v.kind = VKind::Inf;
    else if (sl.kind == "leg") v.kind = VKind::Leg;
    else if (sl.kind == "head") v.kind = VKind::Head;
    else if (sl.kind == "xing") v.kind = VKind::Xing;
    else if (sl.kind == "railx") v.kind = VKind::RailX;
    else {
      res.error = {0, "unknown vertex kind '" + sl.kind + "'"};
      return res;
    }
    for (auto& [k, val] : sl.attrs) {
      if (k == "over" && v.kind == VKind::Xing) {
        if (!parse_int(val, v.over_dart)) {
          res.error = {0, "bad over= value"};
          return res;
        }
      } else if (k == "rail" && v.kind == VKind::RailX) {
        if (!parse_int(val, v.rail)) {
          res.error = {0, "bad rail= value"};
          return res;
        }
      } else if (k == "side" && v.kind == VKind::RailX) {
        if (val != "over" && val != "under") {
          res.error = {0, "side= must be over or under"};
          return res;
        }
        v.arc_over = val == "over";
      } else {
        res.error = {0, "unknown attribute '" + k + "' for kind " + sl.kind};
        return res;
      }
    }
    v.hint = sl.hint;
    int vid = d.new_vertex(v);
    for (size_t j = 0; j < sl.cycle.size(); ++j) {
      int x = sl.cycle[j];
      if (!dart_ok(x) || d.vert[x] != -1) {
        res.error = {0, "rotation cycles must partition the darts"};
        return res;
      }
      d.vert[x] = vid;
      d.sigma[x] = sl.cycle[(j + 1) % sl.cycle.size()];
    }
  }
  for (Dart x = 0; x < n; ++x) {
    if (d.vert[x] < 0 || d.alpha[x] == kNoDart) {
      res.error = {0, "dart " + std::to_string(x) + " missing from alpha or sigma"};
      return res;
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (!dart_ok(inf[i])) {
      res.error = {0, "inf: dart out of range"};
      return res;
    }
    d.inf_darts[i] = inf[i];
  }
  auto rep = validate(d);
  if (!rep.ok()) {
    res.error = {0, "invalid diagram: " + rep.joined()};
    return res;
  }
  res.value = std::move(d);
  return res;
}

inline std::string serialize_diagram(const KnotoidDiagram& d) {
  std::string out = "knd v1\n";
  out += io_detail::alpha_line(d);
  for (auto [mind, v] : io_detail::vertex_order(d)) {
    const auto& info = d.verts[v];
    out += "sigma: ";
    switch (info.kind) {
      case KKind::Leg: out += "leg"; break;
      case KKind::Head: out += "head"; break;
      case KKind::Xing: out += "xing over=" + std::to_string(info.over_dart); break;
    }
    out += " :";
    for (Dart x : io_detail::cycle_from_min(d, mind)) out += " " + std::to_string(x);
    out += io_detail::hint_suffix(info.hint);
    out += "\n";
  }
  return out;
}

inline Parsed<KnotoidDiagram> parse_knotoid(const std::string& text) {
  using namespace io_detail;
  Parsed<KnotoidDiagram> res;
  auto lines = lines_of(text);
  if (lines.empty() || split_ws(lines[0]) != std::vector<std::string>{"knd", "v1"}) {
    res.error = {1, "expected header 'knd v1'"};
    return res;
  }
  std::vector<std::pair<int, int>> alpha_pairs;
  std::vector<SigmaLine> sigmas;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i]);
    if (toks.empty() || toks[0][0] == '#') continue;
    int lineno = static_cast<int>(i + 1);
    if (toks[0] == "alpha:") {
      for (size_t j = 1; j < toks.size(); ++j) {
        int a, b;
        if (!parse_pair(toks[j], a, b)) {
          res.error = {lineno, "bad alpha pair"};
          return res;
        }
        alpha_pairs.push_back({a, b});
      }
    } else if (toks[0] == "sigma:") {
      SigmaLine sl;
      std::string err;
      if (!parse_sigma_line(toks, sl, err)) {
        res.error = {lineno, err};
        return res;
      }
      sigmas.push_back(std::move(sl));
    } else {
      res.error = {lineno, "unknown section '" + toks[0] + "'"};
      return res;
    }
  }
  int n = static_cast<int>(alpha_pairs.size()) * 2;
  KnotoidDiagram d;
  d.alpha.assign(n, kNoDart);
  d.sigma.assign(n, kNoDart);
  d.vert.assign(n, -1);
  auto dart_ok = [&](int x) { return x >= 0 && x < n; };
  for (auto [a, b] : alpha_pairs) {
    if (!dart_ok(a) || !dart_ok(b) || a == b || d.alpha[a] != kNoDart || d.alpha[b] != kNoDart) {
      res.error = {0, "alpha pairs do not form a dense fixed-point-free involution"};
      return res;
    }
    d.alpha[a] = b;
    d.alpha[b] = a;
  }
  for (const auto& sl : sigmas) {
    KnotoidVertex v;
    if (sl.kind == "leg") v.kind = KKind::Leg;
    else if (sl.kind == "head") v.kind = KKind::Head;
    else if (sl.kind == "xing") v.kind = KKind::Xing;
    else {
      res.error = {0, "unknown vertex kind '" + sl.kind + "'"};
      return res;
    }
    for (auto& [k, val] : sl.attrs) {
      if (k == "over" && v.kind == KKind::Xing) {
        if (!parse_int(val, v.over_dart)) {
          res.error = {0, "bad over= value"};
          return res;
        }
      } else {
        res.error = {0, "unknown attribute '" + k + "'"};
        return res;
      }
    }
    v.hint = sl.hint;
    int vid = d.new_vertex(v);
    for (size_t j = 0; j < sl.cycle.size(); ++j) {
      int x = sl.cycle[j];
      if (!dart_ok(x) || d.vert[x] != -1) {
        res.error = {0, "rotation cycles must partition the darts"};
        return res;
      }
      d.vert[x] = vid;
      d.sigma[x] = sl.cycle[(j + 1) % sl.cycle.size()];
    }
  }
  for (Dart x = 0; x < n; ++x)
    if (d.vert[x] < 0 || d.alpha[x] == kNoDart) {
      res.error = {0, "dart missing from alpha or sigma"};
      return res;
    }
  auto rep = validate(d);
  if (!rep.ok()) {
    res.error = {0, "invalid diagram: " + rep.joined()};
    return res;
  }
  res.value = std::move(d);
  return res;
}

inline std::string serialize_diagram(const ThetaDiagram& d) {
  std::string out = "thd v1\n";
  out += "alpha:";
  for (Dart x = 0; x < d.dart_count(); ++x)
    if (x < d.alpha[x]) out += " " + std::to_string(x) + "-" + std::to_string(d.alpha[x]);
  out += "\n";
  for (int ci = 0; ci < 3; ++ci) {
    out += "class ";
    out += edge_class_name(static_cast<EdgeClass>(ci));
    out += ":";
    for (Dart x = 0; x < d.dart_count(); ++x)
      if (x < d.alpha[x] && d.eclass[x] == static_cast<EdgeClass>(ci))
        out += " " + std::to_string(x);
    out += "\n";
  }
  for (auto [mind, v] : io_detail::vertex_order(d)) {
    const auto& info = d.verts[v];
    out += "sigma: ";
    switch (info.kind) {
      case TKind::Node0: out += "node0"; break;
      case TKind::Node1: out += "node1"; break;
      case TKind::Xing: out += "xing over=" + std::to_string(info.over_dart); break;
    }
    out += " :";
    for (Dart x : io_detail::cycle_from_min(d, mind)) out += " " + std::to_string(x);
    out += io_detail::hint_suffix(info.hint);
    out += "\n";
  }
  return out;
}

inline Parsed<ThetaDiagram> parse_theta(const std::string& text) {
  using namespace io_detail;
  Parsed<ThetaDiagram> res;
  auto lines = lines_of(text);
  if (lines.empty() || split_ws(lines[0]) != std::vector<std::string>{"thd", "v1"}) {
    res.error = {1, "expected header 'thd v1'"};
    return res;
  }
  std::vector<std::pair<int, int>> alpha_pairs;
  std::vector<SigmaLine> sigmas;
  std::vector<std::pair<int, EdgeClass>> class_marks;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i]);
    if (toks.empty() || toks[0][0] == '#') continue;
    int lineno = static_cast<int>(i + 1);
    if (toks[0] == "alpha:") {
      for (size_t j = 1; j < toks.size(); ++j) {
        int a, b;
        if (!parse_pair(toks[j], a, b)) {
          res.error = {lineno, "bad alpha pair"};
          return res;
        }
        alpha_pairs.push_back({a, b});
      }
    } else if (toks[0] == "class") {
      if (toks.size() < 2) {
        res.error = {lineno, "class line needs a class name"};
        return res;
      }
      EdgeClass c;
      std::string name = toks[1];
      if (!name.empty() && name.back() == ':') name.pop_back();
      if (name == "upper") c = EdgeClass::Upper;
      else if (name == "middle") c = EdgeClass::Middle;
      else if (name == "lower") c = EdgeClass::Lower;
      else {
        res.error = {lineno, "unknown edge class '" + name + "'"};
        return res;
      }
      for (size_t j = 2; j < toks.size(); ++j) {
        int x;
        if (!parse_int(toks[j], x)) {
          res.error = {lineno, "bad dart id in class line"};
          return res;
        }
        class_marks.push_back({x, c});
      }
    } else if (toks[0] == "sigma:") {
      SigmaLine sl;
      std::string err;
      if (!parse_sigma_line(toks, sl, err)) {
        res.error = {lineno, err};
        return res;
      }
      sigmas.push_back(std::move(sl));
    } else {
      res.error = {lineno, "unknown section '" + toks[0] + "'"};
      return res;
    }
  }
  int n = static_cast<int>(alpha_pairs.size()) * 2;
  ThetaDiagram d;
  d.alpha.assign(n, kNoDart);
  d.sigma.assign(n, kNoDart);
  d.vert.assign(n, -1);
  d.eclass.assign(n, EdgeClass::Middle);
  std::vector<char> class_set(n, 0);
  auto dart_ok = [&](int x) { return x >= 0 && x < n; };
  for (auto [a, b] : alpha_pairs) {
    if (!dart_ok(a) || !dart_ok(b) || a == b || d.alpha[a] != kNoDart || d.alpha[b] != kNoDart) {
      res.error = {0, "alpha pairs do not form a dense fixed-point-free involution"};
      return res;
    }
    d.alpha[a] = b;
    d.alpha[b] = a;
  }
  for (auto [x, c] : class_marks) {
    if (!dart_ok(x) || d.alpha[x] == kNoDart) {
      res.error = {0, "class mark on unknown dart"};
      return res;
    }
    d.eclass[x] = c;
    d.eclass[d.alpha[x]] = c;
    class_set[x] = class_set[d.alpha[x]] = 1;
  }
  for (Dart x = 0; x < n; ++x)
    if (!class_set[x]) {
      res.error = {0, "edge without a class mark"};
      return res;
    }
  for (const auto& sl : sigmas) {
    ThetaVertex v;
    if (sl.kind == "node0") v.kind = TKind::Node0;
    else if (sl.kind == "node1") v.kind = TKind::Node1;
    else if (sl.kind == "xing") v.kind = TKind::Xing;
    else {
      res.error = {0, "unknown vertex kind '" + sl.kind + "'"};
      return res;
    }
    for (auto& [k, val] : sl.attrs) {
      if (k == "over" && v.kind == TKind::Xing) {
        if (!parse_int(val, v.over_dart)) {
          res.error = {0, "bad over= value"};
          return res;
        }
      } else {
        res.error = {0, "unknown attribute '" + k + "'"};
        return res;
      }
    }
    v.hint = sl.hint;
    int vid = d.new_vertex(v);
    for (size_t j = 0; j < sl.cycle.size(); ++j) {
      int x = sl.cycle[j];
      if (!dart_ok(x) || d.vert[x] != -1) {
        res.error = {0, "rotation cycles must partition the darts"};
        return res;
      }
      d.vert[x] = vid;
      d.sigma[x] = sl.cycle[(j + 1) % sl.cycle.size()];
    }
  }
  for (Dart x = 0; x < n; ++x)
    if (d.vert[x] < 0) {
      res.error = {0, "dart missing from sigma"};
      return res;
    }
  auto rep = validate(d);
  if (!rep.ok()) {
    res.error = {0, "invalid diagram: " + rep.joined()};
    return res;
  }
  res.value = std::move(d);
  return res;
}

}  // namespace railknot
