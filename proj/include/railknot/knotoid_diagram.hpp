#pragma once

// Knotoid diagrams: a single open arc in the plane with over/under data.
// Same dart-map machinery as rail diagrams, but the endpoints have degree 1
// and there is no rail structure. Modeled on the sphere (no marked outer
// face), so the Euler test still reads V - E + F = 2.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "railknot/rail_diagram.hpp"

namespace railknot {

enum class KKind : std::uint8_t { Leg, Head, Xing };

struct KnotoidVertex {
  KKind kind = KKind::Xing;
  Dart over_dart = kNoDart;
  std::optional<Vec2> hint;
};

struct KnotoidDiagram {
  std::vector<Dart> alpha, sigma;
  std::vector<int> vert;
  std::vector<KnotoidVertex> verts;

  int dart_count() const { return static_cast<int>(alpha.size()); }
  int vertex_count() const { return static_cast<int>(verts.size()); }

  Dart new_dart(int vertex) {
    alpha.push_back(kNoDart);
    sigma.push_back(kNoDart);
    vert.push_back(vertex);
    return dart_count() - 1;
  }
  int new_vertex(const KnotoidVertex& v) {
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
    for (const auto& v : verts) n += v.kind == KKind::Xing;
    return n;
  }
};

struct KnotoidAnalysis {
  int leg_vertex = -1, head_vertex = -1;
  std::vector<ArcStep> walk;
  std::vector<std::vector<Dart>> faces;
};

struct KnotoidAnalyzeResult {
  KnotoidAnalysis analysis;
  ValidationReport report;
  bool ok() const { return report.ok(); }
};

inline KnotoidAnalyzeResult analyze(const KnotoidDiagram& d) {
  KnotoidAnalyzeResult res;
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
  for (Dart x = 0; x < n; ++x)
    if (d.alpha[d.alpha[x]] != x || d.alpha[x] == x) {
      rep.add("alpha not a fixed-point-free involution");
      return res;
    }
  {
    std::vector<char> hit(n, 0);
    for (Dart x = 0; x < n; ++x) hit[d.sigma[x]] = 1;
    if (std::count(hit.begin(), hit.end(), 1) != n) {
      rep.add("sigma not a permutation");
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
  int leg = -1, head = -1;
  for (int v = 0; v < d.vertex_count(); ++v) {
    switch (d.verts[v].kind) {
      case KKind::Leg:
        if (leg >= 0) rep.add("more than one leg");
        leg = v;
        if (deg[v] != 1) rep.add("leg degree != 1");
        break;
      case KKind::Head:
        if (head >= 0) rep.add("more than one head");
        head = v;
        if (deg[v] != 1) rep.add("head degree != 1");
        break;
      case KKind::Xing: {
        if (deg[v] != 4) rep.add("xing degree != 4");
        Dart o = d.verts[v].over_dart;
        if (o == kNoDart || d.vert[o] != v) rep.add("xing over_dart not at vertex");
        break;
      }
    }
  }
  if (leg < 0) rep.add("no leg");
  if (head < 0) rep.add("no head");
  if (!rep.ok()) return res;
  an.leg_vertex = leg;
  an.head_vertex = head;

  // single open walk, each crossing passed twice on distinct strands
  Dart m = kNoDart;
  for (Dart x = 0; x < n; ++x)
    if (d.vert[x] == leg) m = x;
  an.walk.push_back({leg, kNoDart, m});
  std::map<int, std::vector<Dart>> passes;
  Dart cur = m;
  int steps = 0;
  while (true) {
    if (++steps > n + 2) {
      rep.add("arc walk does not terminate");
      return res;
    }
    Dart e = d.alpha[cur];
    int v = d.vert[e];
    if (v == head) {
      an.walk.push_back({v, e, kNoDart});
      break;
    }
    if (v == leg || d.verts[v].kind != KKind::Xing) {
      rep.add("arc walk revisits an endpoint");
      return res;
    }
    passes[v].push_back(e);
    Dart out = d.sigma[d.sigma[e]];
    an.walk.push_back({v, e, out});
    cur = out;
  }
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.verts[v].kind != KKind::Xing) continue;
    auto it = passes.find(v);
    if (it == passes.end() || it->second.size() != 2) {
      rep.add("xing not visited exactly twice");
      return res;
    }
    if (d.sigma[d.sigma[it->second[0]]] == it->second[1]) {
      rep.add("arc passes a xing twice along the same strand");
      return res;
    }
  }
  an.faces = face_orbits_raw(d.alpha, d.sigma);
  if (static_cast<long>(d.vertex_count()) - n / 2 + static_cast<long>(an.faces.size()) != 2) {
    rep.add("diagram is not planar (V - E + F != 2)");
    return res;
  }
  return res;
}

inline ValidationReport validate(const KnotoidDiagram& d) { return analyze(d).report; }

inline KnotoidDiagram trivial_knotoid() {
  KnotoidDiagram d;
  int leg = d.new_vertex({KKind::Leg});
  int head = d.new_vertex({KKind::Head});
  Dart m = d.new_dart(leg), n = d.new_dart(head);
  d.set_cycle({m});
  d.set_cycle({n});
  d.link(m, n);
  return d;
}

// Rooted at the leg dart.
inline std::string canonical_code(const KnotoidDiagram& d) {
  int n = d.dart_count();
  std::vector<int> id(n, -1);
  std::vector<Dart> order;
  Dart root = kNoDart;
  for (Dart x = 0; x < n; ++x)
    if (d.verts[d.vert[x]].kind == KKind::Leg) root = x;
  if (root == kNoDart) return "kn1|invalid";
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
  std::string out = "kn1|";
  for (Dart x : order) {
    out += std::to_string(id[d.sigma[x]]);
    out += ',';
    out += std::to_string(id[d.alpha[x]]);
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
      case KKind::Leg: out += "l;"; break;
      case KKind::Head: out += "h;"; break;
      case KKind::Xing: {
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
