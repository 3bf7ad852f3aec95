#pragma once

// Combinatorial-map representation of rail knotoid diagrams.
//
// A diagram is a set of darts (half-edges) with an edge involution `alpha`
// and a vertex rotation `sigma` whose cycles list the darts around each
// vertex in counterclockwise order. Faces are the orbits of alpha∘sigma.
// The plane is compactified to a sphere with a single degree-4 vertex at
// infinity where the four rail ends meet, which makes the Euler test
// V - E + F = 2 available as a global sanity check.
//
// Vertex kinds:
//   Inf    degree 4, the four rail ends
//   Leg    degree 3, arc start on rail 1
//   Head   degree 3, arc end on rail 2
//   Xing   degree 4, arc self-crossing; `over_dart` marks the over strand
//   RailX  degree 4, arc/rail crossing; `arc_over` says the arc is in front
//
// Rail membership of darts at a RailX, and the up/down/arc roles at the
// endpoints, are not stored: the rail walks and the arc walk derive them,
// and validation fails when no consistent reading exists.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "railknot/rational.hpp"

namespace railknot {

using Dart = int;
constexpr Dart kNoDart = -1;

enum class VKind : std::uint8_t { Inf, Leg, Head, Xing, RailX };

inline const char* vkind_name(VKind k) {
  switch (k) {
    case VKind::Inf: return "inf";
    case VKind::Leg: return "leg";
    case VKind::Head: return "head";
    case VKind::Xing: return "xing";
    case VKind::RailX: return "railx";
  }
  return "?";
}

struct DiagramVertex {
  VKind kind = VKind::Xing;
  Dart over_dart = kNoDart;  // Xing only: a dart of the over strand pair
  bool arc_over = false;     // RailX only
  int rail = 0;              // RailX only: 1 or 2
  std::optional<Vec2> hint;  // plane position, rendering only
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(const std::string& v) { violations.push_back(v); }
  std::string joined() const {
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v;
    }
    return s;
  }
};

struct RailDiagram {
  std::vector<Dart> alpha, sigma;
  std::vector<int> vert;             // dart -> vertex index
  std::vector<DiagramVertex> verts;
  std::array<Dart, 4> inf_darts{kNoDart, kNoDart, kNoDart, kNoDart};  // l1 top, l1 bottom, l2 bottom, l2 top

  int dart_count() const { return static_cast<int>(alpha.size()); }
  int vertex_count() const { return static_cast<int>(verts.size()); }
  int edge_count() const { return dart_count() / 2; }

  Dart new_dart(int vertex) {
    Dart d = dart_count();
    alpha.push_back(kNoDart);
    sigma.push_back(kNoDart);
    vert.push_back(vertex);
    return d;
  }

  int new_vertex(const DiagramVertex& v) {
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

  std::vector<Dart> cycle_of(Dart d) const {
    std::vector<Dart> out;
    Dart cur = d;
    do {
      out.push_back(cur);
      cur = sigma[cur];
    } while (cur != d && out.size() <= alpha.size());
    return out;
  }

  int degree(int v) const {
    int n = 0;
    for (Dart d = 0; d < dart_count(); ++d)
      if (vert[d] == v) ++n;
    return n;
  }

  // pair partner at a degree-4 vertex (the opposite dart of the same strand)
  Dart opposite(Dart d) const { return sigma[sigma[d]]; }

  bool xing_over_contains(int v, Dart d) const {
    Dart o = verts[v].over_dart;
    return d == o || d == sigma[sigma[o]];
  }

  int count_kind(VKind k) const {
    int n = 0;
    for (const auto& v : verts)
      if (v.kind == k) ++n;
    return n;
  }
  int crossing_count() const { return count_kind(VKind::Xing) + count_kind(VKind::RailX); }

  // Removes the given vertices and all their darts, rethreading alpha through
  // the strand pairs of the removed vertices (degree-4 smoothing). Rotations
  // of surviving vertices are untouched. Dart ids are compacted; the returned
  // map sends old surviving dart ids to new ones.
  std::vector<Dart> smooth_out(const std::vector<int>& removed);
};

inline std::vector<Dart> RailDiagram::smooth_out(const std::vector<int>& removed) {
  std::vector<char> gone_v(verts.size(), 0);
  for (int v : removed) gone_v[v] = 1;
  std::vector<char> gone_d(alpha.size(), 0);
  for (Dart d = 0; d < dart_count(); ++d)
    if (gone_v[vert[d]]) gone_d[d] = 1;

  // chase alpha through removed darts: inside a removed vertex a strand
  // continues through the opposite dart
  auto chase = [&](Dart d) {
    Dart cur = alpha[d];
    while (cur != kNoDart && gone_d[cur]) cur = alpha[opposite(cur)];
    return cur;
  };
  std::vector<Dart> new_alpha(alpha.size(), kNoDart);
  for (Dart d = 0; d < dart_count(); ++d)
    if (!gone_d[d]) new_alpha[d] = chase(d);

  // compact
  std::vector<Dart> remap(alpha.size(), kNoDart);
  Dart next = 0;
  for (Dart d = 0; d < dart_count(); ++d)
    if (!gone_d[d]) remap[d] = next++;
  std::vector<int> vremap(verts.size(), -1);
  int nv = 0;
  for (int v = 0; v < vertex_count(); ++v)
    if (!gone_v[v]) vremap[v] = nv++;

  std::vector<Dart> a2(next), s2(next);
  std::vector<int> vt2(next);
  for (Dart d = 0; d < dart_count(); ++d) {
    if (gone_d[d]) continue;
    a2[remap[d]] = remap[new_alpha[d]];
    s2[remap[d]] = remap[sigma[d]];
    vt2[remap[d]] = vremap[vert[d]];
  }
  std::vector<DiagramVertex> verts2(nv);
  for (int v = 0; v < vertex_count(); ++v) {
    if (gone_v[v]) continue;
    verts2[vremap[v]] = verts[v];
    if (verts2[vremap[v]].over_dart != kNoDart)
      verts2[vremap[v]].over_dart = remap[verts2[vremap[v]].over_dart];
  }
  alpha = std::move(a2);
  sigma = std::move(s2);
  vert = std::move(vt2);
  verts = std::move(verts2);
  for (auto& d : inf_darts) d = remap[d];
  return remap;
}

// --- analysis (walk derivation) ---

struct ArcStep {
  int v = -1;
  Dart in = kNoDart;   // dart at v pointing back along the arc (kNoDart at the leg)
  Dart out = kNoDart;  // dart at v pointing forward (kNoDart at the head)
};

struct RailAnalysis {
  // vertices on each rail in top-to-bottom order (includes the endpoint)
  std::array<std::vector<int>, 2> rail_vertices;
  // per vertex on a rail: the dart pointing toward the top of its rail
  std::vector<Dart> up_dart;    // indexed by vertex, kNoDart elsewhere
  std::vector<Dart> down_dart;
  std::vector<Dart> arc_dart;   // Leg/Head: the arc dart
  std::vector<int> rail_of_dart;  // 1 or 2 for darts of rail edges, else 0
  std::vector<ArcStep> walk;    // leg first, head last
  std::vector<std::vector<Dart>> faces;
  int leg_vertex = -1, head_vertex = -1, inf_vertex = -1;

  bool dart_on_rail(Dart x) const { return rail_of_dart[x] != 0; }
};

struct AnalyzeResult {
  RailAnalysis analysis;
  ValidationReport report;
  bool ok() const { return report.ok(); }
};

std::vector<std::vector<Dart>> face_orbits_raw(const std::vector<Dart>& alpha,
                                               const std::vector<Dart>& sigma);

inline std::vector<std::vector<Dart>> face_orbits_raw(const std::vector<Dart>& alpha,
                                                      const std::vector<Dart>& sigma) {
  int n = static_cast<int>(alpha.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Dart>> orbits;
  for (Dart d = 0; d < n; ++d) {
    if (seen[d]) continue;
    std::vector<Dart> orbit;
    Dart cur = d;
    while (!seen[cur]) {
      seen[cur] = 1;
      orbit.push_back(cur);
      cur = alpha[sigma[cur]];
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

AnalyzeResult analyze(const RailDiagram& d);

inline AnalyzeResult analyze(const RailDiagram& d) {
  AnalyzeResult res;
  auto& rep = res.report;
  auto& an = res.analysis;
  int n = d.dart_count();

  // structural checks
  if (n == 0 || n % 2 != 0) {
    rep.add("dart set empty or odd");
    return res;
  }
  if (static_cast<int>(d.sigma.size()) != n || static_cast<int>(d.vert.size()) != n) {
    rep.add("inconsistent array sizes");
    return res;
  }
  for (Dart x = 0; x < n; ++x) {
    if (d.alpha[x] < 0 || d.alpha[x] >= n || d.sigma[x] < 0 || d.sigma[x] >= n) {
      rep.add("alpha/sigma out of range");
      return res;
    }
  }
  for (Dart x = 0; x < n; ++x) {
    if (d.alpha[d.alpha[x]] != x || d.alpha[x] == x) {
      rep.add("alpha not a fixed-point-free involution");
      return res;
    }
  }
  {
    std::vector<char> hit(n, 0);
    for (Dart x = 0; x < n; ++x) hit[d.sigma[x]] = 1;
    for (Dart x = 0; x < n; ++x)
      if (!hit[x]) {
        rep.add("sigma not a permutation");
        return res;
      }
  }
  // vertex/dart consistency
  int nv = d.vertex_count();
  std::vector<int> deg(nv, 0);
  for (Dart x = 0; x < n; ++x) {
    if (d.vert[x] < 0 || d.vert[x] >= nv) {
      rep.add("dart with invalid vertex id");
      return res;
    }
    ++deg[d.vert[x]];
    if (d.vert[d.sigma[x]] != d.vert[x]) {
      rep.add("sigma cycle crosses vertices");
      return res;
    }
  }
  for (int v = 0; v < nv; ++v) {
    // each vertex must be a single sigma cycle
    Dart anchor = kNoDart;
    for (Dart x = 0; x < n && anchor == kNoDart; ++x)
      if (d.vert[x] == v) anchor = x;
    if (anchor == kNoDart) {
      rep.add("vertex with no darts");
      return res;
    }
    int cyc = static_cast<int>(d.cycle_of(anchor).size());
    if (cyc != deg[v]) {
      rep.add("vertex darts form more than one rotation cycle");
      return res;
    }
  }

  int inf = -1, leg = -1, head = -1;
  for (int v = 0; v < nv; ++v) {
    switch (d.verts[v].kind) {
      case VKind::Inf:
        if (inf >= 0) rep.add("more than one inf vertex");
        inf = v;
        if (deg[v] != 4) rep.add("inf degree != 4");
        break;
      case VKind::Leg:
        if (leg >= 0) rep.add("more than one leg");
        leg = v;
        if (deg[v] != 3) rep.add("leg degree != 3");
        break;
      case VKind::Head:
        if (head >= 0) rep.add("more than one head");
        head = v;
        if (deg[v] != 3) rep.add("head degree != 3");
        break;
      case VKind::Xing: {
        if (deg[v] != 4) rep.add("xing degree != 4");
        Dart o = d.verts[v].over_dart;
        if (o == kNoDart || o >= n || d.vert[o] != v) rep.add("xing over_dart not at vertex");
        break;
      }
      case VKind::RailX:
        if (deg[v] != 4) rep.add("railx degree != 4");
        if (d.verts[v].rail != 1 && d.verts[v].rail != 2) rep.add("railx rail id invalid");
        break;
    }
  }
  if (inf < 0) rep.add("no inf vertex");
  if (leg < 0) rep.add("no leg");
  if (head < 0) rep.add("no head");
  if (!rep.ok()) return res;
  an.inf_vertex = inf;
  an.leg_vertex = leg;
  an.head_vertex = head;

  // pinned rotation at infinity: role order is (l1t, l1b, l2b, l2t); the
  // stored rotation there is the reversed cycle l1t -> l2t -> l2b -> l1b,
  // the orientation a sphere compactification forces.
  const Dart l1t = d.inf_darts[0], l1b = d.inf_darts[1], l2b = d.inf_darts[2],
             l2t = d.inf_darts[3];
  for (Dart x : d.inf_darts) {
    if (x < 0 || x >= n || d.vert[x] != inf) {
      rep.add("inf_darts not the darts of the inf vertex");
      return res;
    }
  }
  if (l1t == l1b || l1t == l2b || l1t == l2t || l1b == l2b || l1b == l2t || l2b == l2t) {
    rep.add("inf_darts not distinct");
    return res;
  }
  if (!(d.sigma[l1t] == l2t && d.sigma[l2t] == l2b && d.sigma[l2b] == l1b &&
        d.sigma[l1b] == l1t)) {
    rep.add("inf rotation not in pinned order");
    return res;
  }

  an.up_dart.assign(nv, kNoDart);
  an.down_dart.assign(nv, kNoDart);
  an.arc_dart.assign(nv, kNoDart);
  an.rail_of_dart.assign(n, 0);

  // rail walk: from the top dart down to the bottom dart, passing the
  // endpoint exactly once and RailX vertices of that rail through their
  // entered strand pair. The only ambiguity is which of the endpoint's two
  // remaining darts continues the rail; both readings are tried, at most one
  // can reach the bottom dart.
  auto walk_rail = [&](int rail, Dart top, Dart bottom, int endpoint) -> bool {
    auto try_walk = [&](int which, std::vector<int>& vs,
                        std::vector<std::pair<int, std::array<Dart, 3>>>& marks) -> bool {
      Dart down = top;
      bool endpoint_seen = false;
      int steps = 0;
      while (true) {
        if (++steps > n) return false;
        Dart e = d.alpha[down];
        int v = d.vert[e];
        if (v == inf) return e == bottom && endpoint_seen;
        if (std::count(vs.begin(), vs.end(), v)) return false;
        if (v == endpoint) {
          endpoint_seen = true;
          std::vector<Dart> cand;
          for (Dart x : d.cycle_of(e))
            if (x != e) cand.push_back(x);
          if (cand.size() != 2) return false;
          vs.push_back(v);
          marks.push_back({v, {e, cand[which], cand[1 - which]}});
          down = cand[which];
          continue;
        }
        if (v == leg || v == head) return false;  // wrong endpoint for this rail
        if (d.verts[v].kind != VKind::RailX || d.verts[v].rail != rail) return false;
        vs.push_back(v);
        marks.push_back({v, {e, d.sigma[d.sigma[e]], kNoDart}});
        down = d.sigma[d.sigma[e]];
      }
    };
    for (int which : {0, 1}) {
      std::vector<int> vs;
      std::vector<std::pair<int, std::array<Dart, 3>>> marks;  // vertex, {up, down, arc}
      if (try_walk(which, vs, marks)) {
        an.rail_vertices[rail - 1] = vs;
        an.rail_of_dart[top] = rail;
        an.rail_of_dart[bottom] = rail;
        for (auto& m : marks) {
          an.up_dart[m.first] = m.second[0];
          an.down_dart[m.first] = m.second[1];
          an.rail_of_dart[m.second[0]] = rail;
          an.rail_of_dart[m.second[1]] = rail;
          if (m.second[2] != kNoDart) an.arc_dart[m.first] = m.second[2];
        }
        return true;
      }
    }
    return false;
  };

  if (!walk_rail(1, l1t, l1b, leg)) {
    rep.add("rail 1 is not a simple top-to-bottom path through the leg");
    return res;
  }
  if (!walk_rail(2, l2t, l2b, head)) {
    rep.add("rail 2 is not a simple top-to-bottom path through the head");
    return res;
  }
  // every RailX lies on exactly one rail walk, matching its stored id
  for (int v = 0; v < nv; ++v) {
    if (d.verts[v].kind != VKind::RailX) continue;
    if (an.up_dart[v] == kNoDart) {
      rep.add("railx not reached by its rail walk");
      return res;
    }
  }

  // arc walk from the leg's arc dart
  {
    Dart m = an.arc_dart[leg];
    an.walk.push_back({leg, kNoDart, m});
    std::map<int, int> xing_passes;
    std::vector<char> railx_passed(nv, 0);
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
        if (e != an.arc_dart[head]) {
          rep.add("arc enters the head through a rail dart");
          return res;
        }
        an.walk.push_back({v, e, kNoDart});
        break;
      }
      if (v == leg || v == inf) {
        rep.add("arc walk hits leg or inf");
        return res;
      }
      if (d.verts[v].kind == VKind::RailX) {
        // must enter through the non-rail pair
        if (e == an.up_dart[v] || e == an.down_dart[v] || d.sigma[d.sigma[e]] == an.up_dart[v]) {
          rep.add("arc passes a railx through its rail strand");
          return res;
        }
        if (railx_passed[v]) {
          rep.add("arc passes a railx twice");
          return res;
        }
        railx_passed[v] = 1;
      } else if (d.verts[v].kind == VKind::Xing) {
        if (++xing_passes[v] > 2) {
          rep.add("arc passes a xing more than twice");
          return res;
        }
      } else {
        rep.add("arc walk hits a vertex of unexpected kind");
        return res;
      }
      Dart out = d.sigma[d.sigma[e]];
      an.walk.push_back({v, e, out});
      cur = out;
    }
    for (int v = 0; v < nv; ++v) {
      if (d.verts[v].kind == VKind::Xing && xing_passes[v] != 2) {
        rep.add("xing not visited exactly twice by the arc");
        return res;
      }
      if (d.verts[v].kind == VKind::RailX && !railx_passed[v]) {
        rep.add("railx not visited by the arc");
        return res;
      }
    }
    // the two passes of a xing must use the two distinct strand pairs
    std::map<int, std::vector<Dart>> pass_darts;
    for (const auto& st : an.walk) {
      if (st.v >= 0 && d.verts[st.v].kind == VKind::Xing) pass_darts[st.v].push_back(st.in);
    }
    for (auto& [v, ins] : pass_darts) {
      if (ins.size() == 2 && (ins[0] == ins[1] || d.sigma[d.sigma[ins[0]]] == ins[1])) {
        rep.add("arc passes a xing twice along the same strand");
        return res;
      }
    }
  }

  // genus
  an.faces = face_orbits_raw(d.alpha, d.sigma);
  long V = nv, E = n / 2, F = static_cast<long>(an.faces.size());
  if (V - E + F != 2) {
    rep.add("diagram is not planar (V - E + F != 2)");
    return res;
  }
  return res;
}

inline ValidationReport validate(const RailDiagram& d) { return analyze(d).report; }

// --- construction ---

inline RailDiagram trivial_diagram() {
  RailDiagram d;
  int inf = d.new_vertex({VKind::Inf});
  int leg = d.new_vertex({VKind::Leg});
  int head = d.new_vertex({VKind::Head});
  Dart a = d.new_dart(inf), b = d.new_dart(inf), c = d.new_dart(inf), e = d.new_dart(inf);
  Dart u = d.new_dart(leg), w = d.new_dart(leg), m = d.new_dart(leg);
  Dart p = d.new_dart(head), n = d.new_dart(head), q = d.new_dart(head);
  d.inf_darts = {a, b, c, e};
  d.set_cycle({a, e, c, b});   // reversed role order, see analyze()
  d.set_cycle({u, w, m});      // arc leaves the leg into the strip
  d.set_cycle({p, n, q});
  d.link(a, u);
  d.link(b, w);
  d.link(c, q);
  d.link(e, p);
  d.link(m, n);
  d.verts[leg].hint = Vec2(Rat(0), Rat(0));
  d.verts[head].hint = Vec2(Rat(1), Rat(0));
  return d;
}

// --- canonical code ---

// Rooted traversal from the l1-top dart with first-visit numbering; two
// diagrams get equal codes iff they are isomorphic as rooted typed maps.
// Geometry hints are deliberately not read.
inline std::string canonical_code(const RailDiagram& d) {
  int n = d.dart_count();
  std::vector<int> id(n, -1);
  std::vector<Dart> order;
  order.reserve(n);
  auto visit = [&](Dart x) {
    if (id[x] < 0) {
      id[x] = static_cast<int>(order.size());
      order.push_back(x);
    }
  };
  visit(d.inf_darts[0]);
  for (size_t i = 0; i < order.size(); ++i) {
    visit(d.sigma[order[i]]);
    visit(d.alpha[order[i]]);
  }
  std::string out = "rk1|";
  for (Dart x : order) {
    out += std::to_string(id[d.sigma[x]]);
    out += ',';
    out += std::to_string(id[d.alpha[x]]);
    out += ';';
  }
  // vertex annotations in order of their minimal canonical dart
  std::vector<std::pair<int, int>> vorder;  // (min canonical id, vertex)
  {
    std::vector<int> best(d.vertex_count(), -1);
    for (Dart x = 0; x < n; ++x) {
      int v = d.vert[x];
      if (best[v] < 0 || id[x] < best[v]) best[v] = id[x];
    }
    for (int v = 0; v < d.vertex_count(); ++v) vorder.push_back({best[v], v});
    std::sort(vorder.begin(), vorder.end());
  }
  out += '|';
  for (auto [mind, v] : vorder) {
    const auto& info = d.verts[v];
    out += vkind_name(info.kind);
    if (info.kind == VKind::Xing) {
      out += info.over_dart != kNoDart && id[info.over_dart] >= 0
                 ? (std::string(":") + std::to_string(std::min(id[info.over_dart],
                                                               id[d.sigma[d.sigma[info.over_dart]]])))
                 : ":?";
    } else if (info.kind == VKind::RailX) {
      out += ':';
      out += std::to_string(info.rail);
      out += info.arc_over ? "o" : "u";
    }
    out += ';';
  }
  out += '|';
  for (Dart x : d.inf_darts) {
    out += std::to_string(id[x]);
    out += ',';
  }
  return out;
}

// Relabels darts and vertices by the given dart permutation (new = perm[old]).
inline RailDiagram relabel(const RailDiagram& d, const std::vector<Dart>& perm) {
  int n = d.dart_count();
  RailDiagram out;
  out.alpha.assign(n, kNoDart);
  out.sigma.assign(n, kNoDart);
  out.vert.assign(n, -1);
  out.verts = d.verts;
  for (Dart x = 0; x < n; ++x) {
    out.alpha[perm[x]] = perm[d.alpha[x]];
    out.sigma[perm[x]] = perm[d.sigma[x]];
    out.vert[perm[x]] = d.vert[x];
  }
  for (auto& v : out.verts)
    if (v.over_dart != kNoDart) v.over_dart = perm[v.over_dart];
  for (int i = 0; i < 4; ++i) out.inf_darts[i] = perm[d.inf_darts[i]];
  return out;
}

}  // namespace railknot
