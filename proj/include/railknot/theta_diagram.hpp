#pragma once

// Theta-curve diagrams: two trivalent nodes joined by three edge-walks
// (upper, middle, lower), with crossings between the walks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "railknot/rail_diagram.hpp"

namespace railknot {

enum class TKind : std::uint8_t { Node0, Node1, Xing };
enum class EdgeClass : std::uint8_t { Upper, Middle, Lower };

inline const char* edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::Upper: return "upper";
    case EdgeClass::Middle: return "middle";
    case EdgeClass::Lower: return "lower";
  }
  return "?";
}

struct ThetaVertex {
  TKind kind = TKind::Xing;
  Dart over_dart = kNoDart;
  std::optional<Vec2> hint;
};

struct ThetaDiagram {
  std::vector<Dart> alpha, sigma;
  std::vector<int> vert;
  std::vector<ThetaVertex> verts;
  std::vector<EdgeClass> eclass;  // per dart; both darts of an edge agree

  int dart_count() const { return static_cast<int>(alpha.size()); }
  int vertex_count() const { return static_cast<int>(verts.size()); }
  Dart new_dart(int vertex, EdgeClass c) {
    alpha.push_back(kNoDart);
    sigma.push_back(kNoDart);
    vert.push_back(vertex);
    eclass.push_back(c);
    return dart_count() - 1;
  }
  int new_vertex(const ThetaVertex& v) {
    verts.push_back(v);
    return vertex_count() - 1;
  }
  void link(Dart a, Dart b) {
    alpha[a] = b;
    alpha[b] = a;
  }
  void set_cycle(const std::vector<Dart>& darts) {
    for (size_t i = 0; i < darts.size(); ++i) sigma[darts[i]] = darts[(i + 1) % darts.size()];
  }
  Dart opposite(Dart d) const { return sigma[sigma[d]]; }
  int crossing_count() const {
    int n = 0;
    for (const auto& v : verts) n += v.kind == TKind::Xing;
    return n;
  }
};

struct ThetaAnalysis {
  int node0 = -1, node1 = -1;
  // per class: the full walk node0 -> node1 as arc steps
  std::array<std::vector<ArcStep>, 3> walks;
  std::vector<std::vector<Dart>> faces;
};

struct ThetaAnalyzeResult {
  ThetaAnalysis analysis;
  ValidationReport report;
  bool ok() const { return report.ok(); }
};

inline ThetaAnalyzeResult analyze(const ThetaDiagram& d) {
  ThetaAnalyzeResult res;
  auto& rep = res.report;
  auto& an = res.analysis;
  int n = d.dart_count();
  if (n == 0 || n % 2 != 0) {
    rep.add("dart set empty or odd");
    return res;
  }
  for (Dart x = 0; x < n; ++x) {
    if (d.alpha[x] < 0 || d.alpha[x] >= n || d.sigma[x] < 0 || d.sigma[x] >= n ||
        d.vert[x] < 0 || d.vert[x] >= d.vertex_count()) {
      rep.add("alpha/sigma/vert out of range");
      return res;
    }
  }
  for (Dart x = 0; x < n; ++x) {
    if (d.alpha[d.alpha[x]] != x || d.alpha[x] == x) {
      rep.add("alpha not a fixed-point-free involution");
      return res;
    }
    if (d.eclass[x] != d.eclass[d.alpha[x]]) {
      rep.add("edge with mismatched class at its two darts");
      return res;
    }
  }
  std::vector<int> deg(d.vertex_count(), 0);
  for (Dart x = 0; x < n; ++x) {
    ++deg[d.vert[x]];
    if (d.vert[d.sigma[x]] != d.vert[x]) {
      rep.add("sigma cycle crosses vertices");
      return res;
    }
  }
  int n0 = -1, n1 = -1;
  for (int v = 0; v < d.vertex_count(); ++v) {
    switch (d.verts[v].kind) {
      case TKind::Node0:
        if (n0 >= 0) rep.add("more than one node0");
        n0 = v;
        if (deg[v] != 3) rep.add("node degree != 3");
        break;
      case TKind::Node1:
        if (n1 >= 0) rep.add("more than one node1");
        n1 = v;
        if (deg[v] != 3) rep.add("node degree != 3");
        break;
      case TKind::Xing: {
        if (deg[v] != 4) rep.add("xing degree != 4");
        Dart o = d.verts[v].over_dart;
        if (o == kNoDart || d.vert[o] != v) rep.add("xing over_dart not at vertex");
        break;
      }
    }
  }
  if (n0 < 0) rep.add("no node0");
  if (n1 < 0) rep.add("no node1");
  if (!rep.ok()) return res;
  an.node0 = n0;
  an.node1 = n1;

  // node darts: one of each class
  auto node_dart = [&](int v, EdgeClass c) -> Dart {
    Dart found = kNoDart;
    for (Dart x = 0; x < n; ++x)
      if (d.vert[x] == v && d.eclass[x] == c) {
        if (found != kNoDart) return kNoDart;
        found = x;
      }
    return found;
  };
  for (int ci = 0; ci < 3; ++ci) {
    EdgeClass c = static_cast<EdgeClass>(ci);
    Dart start = node_dart(n0, c), expect_end = node_dart(n1, c);
    if (start == kNoDart || expect_end == kNoDart) {
      rep.add(std::string("nodes do not carry exactly one ") + edge_class_name(c) + " dart");
      return res;
    }
    // walk the class-c strand from node0 to node1 through crossings
    auto& walk = an.walks[ci];
    walk.push_back({n0, kNoDart, start});
    Dart cur = start;
    int steps = 0;
    while (true) {
      if (++steps > n + 2) {
        rep.add("edge walk does not terminate");
        return res;
      }
      Dart e = d.alpha[cur];
      int v = d.vert[e];
      if (v == n1) {
        if (e != expect_end) {
          rep.add("edge walk reaches node1 with the wrong class");
          return res;
        }
        walk.push_back({v, e, kNoDart});
        break;
      }
      if (v == n0 || d.verts[v].kind != TKind::Xing) {
        rep.add("edge walk revisits a node");
        return res;
      }
      if (d.eclass[d.sigma[d.sigma[e]]] != c) {
        rep.add("edge walk changes class at a crossing");
        return res;
      }
      Dart out = d.sigma[d.sigma[e]];
      walk.push_back({v, e, out});
      cur = out;
    }
  }
  // every crossing visited exactly twice overall, on distinct strands
  {
    std::map<int, std::vector<Dart>> passes;
    for (const auto& w : an.walks)
      for (const auto& st : w)
        if (st.v >= 0 && d.verts[st.v].kind == TKind::Xing) passes[st.v].push_back(st.in);
    for (int v = 0; v < d.vertex_count(); ++v) {
      if (d.verts[v].kind != TKind::Xing) continue;
      auto it = passes.find(v);
      if (it == passes.end() || it->second.size() != 2 ||
          d.sigma[d.sigma[it->second[0]]] == it->second[1]) {
        rep.add("xing not visited exactly twice on distinct strands");
        return res;
      }
    }
  }
  an.faces = face_orbits_raw(d.alpha, d.sigma);
  if (static_cast<long>(d.vertex_count()) - n / 2 + static_cast<long>(an.faces.size()) != 2) {
    rep.add("diagram is not planar (V - E + F != 2)");
    return res;
  }
  return res;
}

inline ValidationReport validate(const ThetaDiagram& d) { return analyze(d).report; }

// Rooted at node0's upper dart.
inline std::string canonical_code(const ThetaDiagram& d) {
  int n = d.dart_count();
  Dart root = kNoDart;
  for (Dart x = 0; x < n; ++x)
    if (d.verts[d.vert[x]].kind == TKind::Node0 && d.eclass[x] == EdgeClass::Upper) root = x;
  if (root == kNoDart) return "th1|invalid";
  std::vector<int> id(n, -1);
  std::vector<Dart> order;
  id[root] = 0;
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i) {
    for (Dart y : {d.sigma[order[i]], d.alpha[order[i]]}) {
      if (id[y] < 0) {
        id[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::string out = "th1|";
  for (Dart x : order) {
    out += std::to_string(id[d.sigma[x]]);
    out += ',';
    out += std::to_string(id[d.alpha[x]]);
    out += ',';
    out += std::to_string(static_cast<int>(d.eclass[x]));
    out += ';';
  }
  out += '|';
  std::vector<std::pair<int, int>> vorder;
  std::vector<int> best(d.vertex_count(), -1);
  for (Dart x = 0; x < n; ++x) {
    int v = d.vert[x];
    if (best[v] < 0 || id[x] < best[v]) best[v] = id[x];
  }
  for (int v = 0; v < d.vertex_count(); ++v) vorder.push_back({best[v], v});
  std::sort(vorder.begin(), vorder.end());
  for (auto [mind, v] : vorder) {
    switch (d.verts[v].kind) {
      case TKind::Node0: out += "n0;"; break;
      case TKind::Node1: out += "n1;"; break;
      case TKind::Xing: {
        Dart o = d.verts[v].over_dart;
        out += "x:";
        out += std::to_string(std::min(id[o], id[d.sigma[d.sigma[o]]]));
        out += ';';
        break;
      }
    }
  }
  return out;
}

}  // namespace railknot
