#pragma once

// Piecewise-linear rail arcs with exact rational coordinates, and the two
// projections that produce diagrams.
//
// Fixed frame: the rail plane is {y = 0}; rail 1 is {x = 0, y = 0}, rail 2 is
// {x = 1, y = 0}, both running along the z axis. The rail-plane projection is
// (x,y,z) -> (x,z) with "over" meaning larger y (viewer at y = +inf); the
// perpendicular projection is (x,y,z) -> (x,y) with "over" meaning larger z.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "railknot/knotoid_diagram.hpp"
#include "railknot/rail_diagram.hpp"
#include "railknot/rational.hpp"
#include "railknot/rng.hpp"

namespace railknot {

struct RailArc3D {
  std::vector<Vec3> vertices;

  int segment_count() const { return static_cast<int>(vertices.size()) - 1; }
  const Vec3& seg_a(int i) const { return vertices[i]; }
  const Vec3& seg_b(int i) const { return vertices[i + 1]; }
};

inline Vec3 rail_base(int rail) { return Vec3(Rat(rail - 1), Rat(0), Rat(0)); }
inline Vec3 rail_dir() { return Vec3(Rat(0), Rat(0), Rat(1)); }

// --- validity ---

inline ValidationReport validate_arc(const RailArc3D& a) {
  ValidationReport rep;
  int n = static_cast<int>(a.vertices.size());
  if (n < 2) {
    rep.add("arc needs at least one segment");
    return rep;
  }
  const Vec3& first = a.vertices.front();
  const Vec3& last = a.vertices.back();
  if (!(first.x == 0 && first.y == 0)) rep.add("first vertex not on rail 1");
  if (!(last.x == 1 && last.y == 0)) rep.add("last vertex not on rail 2");
  for (int i = 0; i + 1 < n; ++i) {
    if (a.vertices[i] == a.vertices[i + 1]) {
      rep.add("zero-length segment");
      return rep;
    }
  }
  // interior off the rails: a segment may touch a rail only at the arc's own
  // endpoint
  for (int i = 0; i + 1 < n; ++i) {
    for (int rail = 1; rail <= 2; ++rail) {
      Vec2 p(a.seg_a(i).x, a.seg_a(i).y), q(a.seg_b(i).x, a.seg_b(i).y);
      Vec2 R(Rat(rail - 1), Rat(0));
      if (!on_segment2(R, p, q)) continue;
      if (p == q) {
        rep.add("segment lies on a rail");
        return rep;
      }
      // parameter where the segment meets the rail
      Vec2 d = q - p;
      Rat t = rat_abs(d.x) >= rat_abs(d.y) ? Rat((R.x - p.x) / d.x) : Rat((R.y - p.y) / d.y);
      bool allowed = (rail == 1 && i == 0 && t == 0) || (rail == 2 && i == n - 2 && t == 1);
      if (!allowed) {
        rep.add("interior touches rail " + std::to_string(rail));
        return rep;
      }
    }
  }
  // embedded
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j + 1 < n; ++j) {
      if (j == i + 1) {
        // consecutive: reject a collinear fold-back
        Vec3 d1 = a.seg_b(i) - a.seg_a(i), d2 = a.seg_b(j) - a.seg_a(j);
        if (norm2(cross(d1, d2)) == 0 && dot(d1, d2) < 0) {
          rep.add("not embedded: consecutive segments fold back");
          return rep;
        }
        continue;
      }
      if (segments_intersect3(a.seg_a(i), a.seg_b(i), a.seg_a(j), a.seg_b(j))) {
        rep.add("not embedded: segments " + std::to_string(i) + " and " + std::to_string(j) +
                " intersect");
        return rep;
      }
    }
  }
  return rep;
}

// --- genericity ---

namespace geo_detail {

inline Vec2 proj_rail(const Vec3& p) { return Vec2(p.x, p.z); }
inline Vec2 proj_perp(const Vec3& p) { return Vec2(p.x, p.y); }

struct CrossEvent {
  int seg_i, seg_j;   // seg_i < seg_j
  Rat ti, tj;         // parameters along each segment
  Vec2 point;
  bool first_over;    // strand of seg_i is the over strand
};

struct RailEvent {
  int rail;           // 1 or 2
  int seg;
  Rat t;
  Rat z;              // position along the rail
  bool arc_over;      // arc in front (y > 0)
};

// shared scan used by both genericity checks and both projections;
// proj selects the projection, depth gives the "over" coordinate
template <typename Proj, typename Depth>
inline bool scan_crossings(const RailArc3D& a, Proj proj, Depth depth, bool rail_lines,
                           std::vector<CrossEvent>& xs, std::vector<RailEvent>& rs,
                           ValidationReport& rep) {
  int n = a.segment_count();
  std::vector<Vec2> pv;
  for (const auto& v : a.vertices) pv.push_back(proj(v));
  for (int i = 0; i < n; ++i) {
    if (pv[i] == pv[i + 1]) {
      rep.add("segment " + std::to_string(i) + " projects to a point");
      return false;
    }
  }
  // distinct projected vertices
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pv[i] == pv[j]) {
        rep.add("two vertices share a projected position");
        return false;
      }
  // vertices off non-adjacent segments
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == j || i + 1 == j) continue;
      if (on_segment2(pv[j], pv[i], pv[i + 1])) {
        rep.add("vertex " + std::to_string(j) + " projects onto segment " + std::to_string(i));
        return false;
      }
    }
  }
  if (rail_lines) {
    // vertices off the rail lines, except the endpoints on their own rails
    for (int j = 0; j <= n; ++j) {
      bool is_leg = j == 0, is_head = j == n;
      if ((pv[j].x == 0 && !is_leg) || (pv[j].x == 1 && !is_head)) {
        rep.add("vertex " + std::to_string(j) + " projects onto a rail line");
        return false;
      }
    }
    // end segments leave their rails transversally
    if (pv[1].x == pv[0].x) {
      rep.add("first segment projects along its rail line");
      return false;
    }
    if (pv[n - 1].x == pv[n].x) {
      rep.add("last segment projects along its rail line");
      return false;
    }
  }
  // pairwise crossings
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto r = intersect_segments2(pv[i], pv[i + 1], pv[j], pv[j + 1]);
      if (r.kind == SegIntersect2::None) continue;
      if (r.kind == SegIntersect2::Overlap) {
        rep.add("segments " + std::to_string(i) + " and " + std::to_string(j) +
                " overlap in projection");
        return false;
      }
      if (j == i + 1) {
        if (r.point != pv[j]) {
          rep.add("adjacent segments meet off their shared vertex");
          return false;
        }
        continue;
      }
      if (!(r.t1 > 0 && r.t1 < 1 && r.t2 > 0 && r.t2 < 1)) {
        rep.add("non-transversal crossing between segments " + std::to_string(i) + " and " +
                std::to_string(j));
        return false;
      }
      CrossEvent ev;
      ev.seg_i = i;
      ev.seg_j = j;
      ev.ti = r.t1;
      ev.tj = r.t2;
      ev.point = r.point;
      Rat di = depth(a, i, r.t1), dj = depth(a, j, r.t2);
      if (di == dj) {
        rep.add("projected double point with equal depth");
        return false;
      }
      ev.first_over = di > dj;
      xs.push_back(ev);
    }
  }
  // distinct crossing positions (no triple points)
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i].point == xs[j].point) {
        rep.add("triple point in projection");
        return false;
      }
  if (rail_lines) {
    for (int rail = 1; rail <= 2; ++rail) {
      Rat rx(rail - 1);
      for (int i = 0; i < n; ++i) {
        Rat x0 = pv[i].x, x1 = pv[i + 1].x;
        bool spans = (x0 < rx && x1 > rx) || (x0 > rx && x1 < rx);
        if (!spans) continue;
        Rat t = Rat((rx - x0) / (x1 - x0));
        RailEvent ev;
        ev.rail = rail;
        ev.seg = i;
        ev.t = t;
        ev.z = a.seg_a(i).z + Rat((a.seg_b(i).z - a.seg_a(i).z) * t);
        Rat y = a.seg_a(i).y + Rat((a.seg_b(i).y - a.seg_a(i).y) * t);
        if (y == 0) {
          rep.add("arc crosses the rail plane on a rail line");
          return false;
        }
        ev.arc_over = y > 0;
        rs.push_back(ev);
      }
      // distinct rail-event heights, also distinct from the endpoint on that rail
      std::vector<Rat> zs;
      for (const auto& ev : rs)
        if (ev.rail == rail) zs.push_back(ev.z);
      zs.push_back(rail == 1 ? a.vertices.front().z : a.vertices.back().z);
      for (size_t i = 0; i < zs.size(); ++i)
        for (size_t j = i + 1; j < zs.size(); ++j)
          if (zs[i] == zs[j]) {
            rep.add("two rail events at the same height on rail " + std::to_string(rail));
            return false;
          }
    }
    // crossings stay off the rail lines
    for (const auto& ev : xs)
      if (ev.point.x == 0 || ev.point.x == 1) {
        rep.add("arc double point on a rail line");
        return false;
      }
  }
  return true;
}

inline Rat depth_y(const RailArc3D& a, int seg, const Rat& t) {
  return a.seg_a(seg).y + Rat((a.seg_b(seg).y - a.seg_a(seg).y) * t);
}
inline Rat depth_z(const RailArc3D& a, int seg, const Rat& t) {
  return a.seg_a(seg).z + Rat((a.seg_b(seg).z - a.seg_a(seg).z) * t);
}

}  // namespace geo_detail

inline ValidationReport is_generic_railplane(const RailArc3D& a) {
  ValidationReport rep = validate_arc(a);
  if (!rep.ok()) return rep;
  std::vector<geo_detail::CrossEvent> xs;
  std::vector<geo_detail::RailEvent> rs;
  geo_detail::scan_crossings(a, geo_detail::proj_rail, geo_detail::depth_y, true, xs, rs, rep);
  return rep;
}

inline ValidationReport is_generic_perpendicular(const RailArc3D& a) {
  ValidationReport rep = validate_arc(a);
  if (!rep.ok()) return rep;
  std::vector<geo_detail::CrossEvent> xs;
  std::vector<geo_detail::RailEvent> rs;
  geo_detail::scan_crossings(a, geo_detail::proj_perp, geo_detail::depth_z, false, xs, rs, rep);
  return rep;
}

// --- projections ---

template <typename T>
struct ProjectResult {
  std::optional<T> diagram;
  ValidationReport report;
  bool ok() const { return diagram.has_value(); }
};

inline ProjectResult<RailDiagram> project_railplane(const RailArc3D& a) {
  using namespace geo_detail;
  ProjectResult<RailDiagram> out;
  out.report = validate_arc(a);
  if (!out.report.ok()) return out;
  std::vector<CrossEvent> xs;
  std::vector<RailEvent> rs;
  if (!scan_crossings(a, proj_rail, depth_y, true, xs, rs, out.report)) return out;

  RailDiagram d;
  int inf = d.new_vertex({VKind::Inf});
  int leg = d.new_vertex({VKind::Leg});
  int head = d.new_vertex({VKind::Head});
  d.verts[leg].hint = proj_rail(a.vertices.front());
  d.verts[head].hint = proj_rail(a.vertices.back());

  // arc-ordered event list; each entry is one pass of a vertex
  struct Pass {
    int seg;
    Rat t;
    int vertex;
    Vec2 dir;        // projected direction of the strand here
    Dart in = kNoDart, out = kNoDart;
    int which = 0;   // 0: first pass of a xing / the only pass
  };
  std::vector<Pass> passes;
  std::vector<int> xvert(xs.size()), rvert(rs.size());
  for (size_t k = 0; k < xs.size(); ++k) {
    DiagramVertex v;
    v.kind = VKind::Xing;
    v.hint = xs[k].point;
    xvert[k] = d.new_vertex(v);
    Vec2 di = proj_rail(a.seg_b(xs[k].seg_i)) - proj_rail(a.seg_a(xs[k].seg_i));
    Vec2 dj = proj_rail(a.seg_b(xs[k].seg_j)) - proj_rail(a.seg_a(xs[k].seg_j));
    passes.push_back({xs[k].seg_i, xs[k].ti, xvert[k], di, kNoDart, kNoDart, 0});
    passes.push_back({xs[k].seg_j, xs[k].tj, xvert[k], dj, kNoDart, kNoDart, 1});
  }
  for (size_t k = 0; k < rs.size(); ++k) {
    DiagramVertex v;
    v.kind = VKind::RailX;
    v.rail = rs[k].rail;
    v.arc_over = rs[k].arc_over;
    v.hint = Vec2(Rat(rs[k].rail - 1), rs[k].z);
    rvert[k] = d.new_vertex(v);
    Vec2 dir = proj_rail(a.seg_b(rs[k].seg)) - proj_rail(a.seg_a(rs[k].seg));
    passes.push_back({rs[k].seg, rs[k].t, rvert[k], dir, kNoDart, kNoDart, 0});
  }
  std::sort(passes.begin(), passes.end(), [](const Pass& p, const Pass& q) {
    if (p.seg != q.seg) return p.seg < q.seg;
    return p.t < q.t;
  });

  // darts along the arc
  Dart leg_m = d.new_dart(leg);
  Dart head_n = d.new_dart(head);
  for (auto& p : passes) {
    p.in = d.new_dart(p.vertex);
    p.out = d.new_dart(p.vertex);
  }
  Dart prev_out = leg_m;
  for (auto& p : passes) {
    d.link(prev_out, p.in);
    prev_out = p.out;
  }
  d.link(prev_out, head_n);

  // over strands
  for (size_t k = 0; k < xs.size(); ++k) {
    // of the two passes at this vertex, pick the one matching first_over
    for (const auto& p : passes) {
      if (p.vertex != xvert[k]) continue;
      bool is_first = p.which == 0;
      if (is_first == xs[k].first_over) {
        d.verts[xvert[k]].over_dart = p.out;
        break;
      }
    }
  }

  // rail darts: for each rail, events sorted by z descending
  Dart i_l1t = d.new_dart(inf), i_l1b = d.new_dart(inf), i_l2b = d.new_dart(inf),
       i_l2t = d.new_dart(inf);
  d.inf_darts = {i_l1t, i_l1b, i_l2b, i_l2t};
  d.set_cycle({i_l1t, i_l2t, i_l2b, i_l1b});

  struct RailStop {
    Rat z;
    int vertex;
    Dart up = kNoDart, down = kNoDart;
  };
  for (int rail = 1; rail <= 2; ++rail) {
    std::vector<RailStop> stops;
    if (rail == 1)
      stops.push_back({a.vertices.front().z, leg});
    else
      stops.push_back({a.vertices.back().z, head});
    for (size_t k = 0; k < rs.size(); ++k)
      if (rs[k].rail == rail) stops.push_back({rs[k].z, rvert[k]});
    std::sort(stops.begin(), stops.end(), [](const RailStop& p, const RailStop& q) {
      return p.z > q.z;
    });
    for (auto& s : stops) {
      s.up = d.new_dart(s.vertex);
      s.down = d.new_dart(s.vertex);
    }
    Dart top = rail == 1 ? i_l1t : i_l2t;
    Dart bottom = rail == 1 ? i_l1b : i_l2b;
    Dart prev = top;
    for (auto& s : stops) {
      d.link(prev, s.up);
      prev = s.down;
    }
    d.link(prev, bottom);
    // rotations at the rail vertices
    for (auto& s : stops) {
      std::vector<std::pair<Vec2, Dart>> dirs;
      dirs.push_back({Vec2(Rat(0), Rat(1)), s.up});
      dirs.push_back({Vec2(Rat(0), Rat(-1)), s.down});
      if (s.vertex == leg) {
        dirs.push_back({proj_rail(a.vertices[1]) - proj_rail(a.vertices[0]), leg_m});
      } else if (s.vertex == head) {
        int n = a.segment_count();
        dirs.push_back({proj_rail(a.vertices[n - 1]) - proj_rail(a.vertices[n]), head_n});
      } else {
        for (const auto& p : passes) {
          if (p.vertex != s.vertex) continue;
          dirs.push_back({p.dir, p.out});
          dirs.push_back({Vec2(Rat(0), Rat(0)) - p.dir, p.in});
        }
      }
      std::sort(dirs.begin(), dirs.end(),
                [](const auto& x, const auto& y) { return angle_less(x.first, y.first); });
      std::vector<Dart> cyc;
      for (auto& [dir, dart] : dirs) cyc.push_back(dart);
      d.set_cycle(cyc);
    }
  }

  // rotations at arc crossings
  for (size_t k = 0; k < xs.size(); ++k) {
    std::vector<std::pair<Vec2, Dart>> dirs;
    for (const auto& p : passes) {
      if (p.vertex != xvert[k]) continue;
      dirs.push_back({p.dir, p.out});
      dirs.push_back({Vec2(Rat(0), Rat(0)) - p.dir, p.in});
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& x, const auto& y) { return angle_less(x.first, y.first); });
    std::vector<Dart> cyc;
    for (auto& [dir, dart] : dirs) cyc.push_back(dart);
    d.set_cycle(cyc);
  }

  auto rep = validate(d);
  if (!rep.ok()) {
    out.report.add("projection produced an invalid diagram: " + rep.joined());
    return out;
  }
  out.diagram = std::move(d);
  return out;
}

inline ProjectResult<KnotoidDiagram> project_perpendicular(const RailArc3D& a) {
  using namespace geo_detail;
  ProjectResult<KnotoidDiagram> out;
  out.report = validate_arc(a);
  if (!out.report.ok()) return out;
  std::vector<CrossEvent> xs;
  std::vector<RailEvent> rs;
  if (!scan_crossings(a, proj_perp, depth_z, false, xs, rs, out.report)) return out;

  KnotoidDiagram d;
  int leg = d.new_vertex({KKind::Leg});
  int head = d.new_vertex({KKind::Head});
  d.verts[leg].hint = proj_perp(a.vertices.front());
  d.verts[head].hint = proj_perp(a.vertices.back());

  struct Pass {
    int seg;
    Rat t;
    int vertex;
    Vec2 dir;
    Dart in = kNoDart, out = kNoDart;
    int which = 0;
  };
  std::vector<Pass> passes;
  std::vector<int> xvert(xs.size());
  for (size_t k = 0; k < xs.size(); ++k) {
    KnotoidVertex v;
    v.kind = KKind::Xing;
    v.hint = xs[k].point;
    xvert[k] = d.new_vertex(v);
    Vec2 di = proj_perp(a.seg_b(xs[k].seg_i)) - proj_perp(a.seg_a(xs[k].seg_i));
    Vec2 dj = proj_perp(a.seg_b(xs[k].seg_j)) - proj_perp(a.seg_a(xs[k].seg_j));
    passes.push_back({xs[k].seg_i, xs[k].ti, xvert[k], di, kNoDart, kNoDart, 0});
    passes.push_back({xs[k].seg_j, xs[k].tj, xvert[k], dj, kNoDart, kNoDart, 1});
  }
  std::sort(passes.begin(), passes.end(), [](const Pass& p, const Pass& q) {
    if (p.seg != q.seg) return p.seg < q.seg;
    return p.t < q.t;
  });
  Dart leg_m = d.new_dart(leg);
  Dart head_n = d.new_dart(head);
  d.set_cycle({leg_m});
  d.set_cycle({head_n});
  for (auto& p : passes) {
    p.in = d.new_dart(p.vertex);
    p.out = d.new_dart(p.vertex);
  }
  Dart prev_out = leg_m;
  for (auto& p : passes) {
    d.link(prev_out, p.in);
    prev_out = p.out;
  }
  d.link(prev_out, head_n);
  for (size_t k = 0; k < xs.size(); ++k) {
    for (const auto& p : passes) {
      if (p.vertex != xvert[k]) continue;
      if ((p.which == 0) == xs[k].first_over) {
        d.verts[xvert[k]].over_dart = p.out;
        break;
      }
    }
  }
  for (size_t k = 0; k < xs.size(); ++k) {
    std::vector<std::pair<Vec2, Dart>> dirs;
    for (const auto& p : passes) {
      if (p.vertex != xvert[k]) continue;
      dirs.push_back({p.dir, p.out});
      dirs.push_back({Vec2(Rat(0), Rat(0)) - p.dir, p.in});
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& x, const auto& y) { return angle_less(x.first, y.first); });
    std::vector<Dart> cyc;
    for (auto& [dir, dart] : dirs) cyc.push_back(dart);
    d.set_cycle(cyc);
  }
  auto rep = validate(d);
  if (!rep.ok()) {
    out.report.add("projection produced an invalid diagram: " + rep.joined());
    return out;
  }
  out.diagram = std::move(d);
  return out;
}

// --- perturbation ---

struct PerturbResult {
  std::optional<RailArc3D> arc;
  std::string error;
  bool ok() const { return arc.has_value(); }
};

// Moves vertices by less than a quarter of the minimum feature distance, so
// embeddedness and rail avoidance survive; endpoints slide along their rails
// only. Returns the input unchanged when it is already generic for both
// projections.
inline PerturbResult perturb(const RailArc3D& a, std::uint64_t seed) {
  PerturbResult out;
  auto base = validate_arc(a);
  if (!base.ok()) {
    out.error = "invalid arc: " + base.joined();
    return out;
  }
  if (is_generic_railplane(a).ok() && is_generic_perpendicular(a).ok()) {
    out.arc = a;
    return out;
  }
  // minimum feature distance (squared)
  int n = a.segment_count();
  Rat d2(-1);
  auto upd = [&](const Rat& v) {
    if (d2 < 0 || v < d2) d2 = v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      upd(dist2_segments3(a.seg_a(i), a.seg_b(i), a.seg_a(j), a.seg_b(j)));
  for (int i = 0; i < n; ++i) {
    for (int rail = 1; rail <= 2; ++rail) {
      if (rail == 1 && i == 0) continue;  // touches at the leg
      if (rail == 2 && i == n - 1) continue;
      upd(dist2_segment_line3(a.seg_a(i), a.seg_b(i), rail_base(rail), rail_dir()));
    }
  }
  if (d2 == 0) {
    out.error = "perturbation bound collapsed to zero";
    return out;
  }
  if (d2 < 0) d2 = 1;  // single-segment arc: any small move is safe
  // b with 48 b^2 <= d2, so 3 (b per axis)^2 stays within (d/4)^2
  Rat b(1);
  while (Rat(48) * b * b > d2) b = b / 2;

  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rat bb = attempt >= 32 ? Rat(b / 2) : b;
    RailArc3D c = a;
    long den = 64;
    for (size_t i = 0; i < c.vertices.size(); ++i) {
      bool endpoint = i == 0 || i + 1 == c.vertices.size();
      Rat dz = rng.rat_in(-bb, bb, den);
      if (!endpoint) {
        c.vertices[i].x += rng.rat_in(-bb, bb, den);
        c.vertices[i].y += rng.rat_in(-bb, bb, den);
      }
      c.vertices[i].z += dz;
    }
    if (!validate_arc(c).ok()) continue;
    if (!is_generic_railplane(c).ok()) continue;
    if (!is_generic_perpendicular(c).ok()) continue;
    out.arc = std::move(c);
    return out;
  }
  out.error = "no generic perturbation found";
  return out;
}

// --- random arcs ---

inline RailArc3D random_arc(int segments, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RailArc3D a;
    a.vertices.push_back(Vec3(Rat(0), Rat(0), rng.rat_in(Rat(0), Rat(2), 8)));
    for (int i = 1; i < segments; ++i) {
      a.vertices.push_back(Vec3(rng.rat_in(Rat(-1), Rat(2), 8),
                                rng.rat_in(Rat(-3) / 2, Rat(3) / 2, 8),
                                rng.rat_in(Rat(0), Rat(3), 8)));
    }
    a.vertices.push_back(Vec3(Rat(1), Rat(0), rng.rat_in(Rat(1), Rat(3), 8)));
    if (!validate_arc(a).ok()) continue;
    if (!is_generic_railplane(a).ok()) continue;
    if (!is_generic_perpendicular(a).ok()) continue;
    return a;
  }
  // fall back to the straight arc, always valid and generic
  RailArc3D a;
  a.vertices = {Vec3(Rat(0), Rat(0), Rat(0)), Vec3(Rat(1), Rat(0), Rat(1))};
  return a;
}

}  // namespace railknot
