#pragma once

// Exact rational arithmetic and the 2D/3D predicates used by the geometric
// layer. Every incidence decision in this library is made with rationals;
// floating point appears only in SVG layout.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace railknot {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sgn(const Rat& a) { return a.sign(); }

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// --- parsing / formatting ("p/q" or plain integer) ---

inline std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rat(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::string format_rat(const Rat& a) {
  if (denominator(a) == 1) return numerator(a).str();
  return numerator(a).str() + "/" + denominator(a).str();
}

// --- vectors ---

struct Vec2 {
  Rat x, y;
  Vec2() : x(0), y(0) {}
  Vec2(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

struct Vec3 {
  Rat x, y, z;
  Vec3() : x(0), y(0), z(0) {}
  Vec3(Rat px, Rat py, Rat pz) : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(const Rat& s) const { return {x * s, y * s, z * s}; }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const Vec3& o) const { return !(*this == o); }
};

inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Rat norm2(const Vec2& a) { return dot(a, a); }
inline Rat norm2(const Vec3& a) { return dot(a, a); }

// orientation of the triangle p->q->r: >0 counterclockwise, <0 clockwise, 0 collinear
inline int orient2d(const Vec2& p, const Vec2& q, const Vec2& r) {
  return sgn(cross(q - p, r - p));
}

// Compares direction vectors by counterclockwise angle from the positive x
// axis, exactly. Both must be nonzero.
inline int angle_class(const Vec2& d) {
  // half 0: angle in [0, pi), half 1: [pi, 2pi)
  if (sgn(d.y) > 0) return 0;
  if (sgn(d.y) < 0) return 1;
  return sgn(d.x) > 0 ? 0 : 1;
}

inline bool angle_less(const Vec2& a, const Vec2& b) {
  int ha = angle_class(a), hb = angle_class(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

// --- 2D segment predicates ---

inline bool on_segment2(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (orient2d(a, b, p) != 0) return false;
  return dot(p - a, p - b) <= 0;
}

inline bool strictly_inside_segment2(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (orient2d(a, b, p) != 0) return false;
  return dot(p - a, p - b) < 0;
}

struct SegIntersect2 {
  enum Kind { None, Point, Overlap } kind = None;
  Vec2 point;     // for Kind::Point
  Rat t1, t2;     // parameters along each segment at the point
};

// Exact intersection of closed segments [a1,b1] and [a2,b2].
inline SegIntersect2 intersect_segments2(const Vec2& a1, const Vec2& b1, const Vec2& a2,
                                         const Vec2& b2) {
  SegIntersect2 out;
  Vec2 r = b1 - a1, s = b2 - a2;
  Rat rxs = cross(r, s);
  Vec2 qp = a2 - a1;
  if (rxs == 0) {
    if (cross(qp, r) != 0) return out;  // parallel, disjoint lines
    // collinear: check for overlap
    Rat rr = dot(r, r);
    if (rr == 0) {
      // first segment is a point
      if (on_segment2(a1, a2, b2)) {
        out.kind = SegIntersect2::Point;
        out.point = a1;
        out.t1 = 0;
        out.t2 = 0;
      }
      return out;
    }
    Rat t0 = dot(qp, r) / rr;
    Rat t1 = t0 + dot(s, r) / rr;
    Rat lo = t0 < t1 ? t0 : t1, hi = t0 < t1 ? t1 : t0;
    if (hi < 0 || lo > 1) return out;
    Rat clo = lo > 0 ? lo : Rat(0), chi = hi < 1 ? hi : Rat(1);
    if (clo == chi) {
      out.kind = SegIntersect2::Point;
      out.point = a1 + r * clo;
      out.t1 = clo;
    } else {
      out.kind = SegIntersect2::Overlap;
    }
    return out;
  }
  Rat t = cross(qp, s) / rxs;
  Rat u = cross(qp, r) / rxs;
  if (t < 0 || t > 1 || u < 0 || u > 1) return out;
  out.kind = SegIntersect2::Point;
  out.point = a1 + r * t;
  out.t1 = t;
  out.t2 = u;
  return out;
}

// true if p is inside or on the boundary of triangle abc (any orientation)
inline bool point_in_triangle2(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
  int o = orient2d(a, b, c);
  if (o == 0) return on_segment2(p, a, b) || on_segment2(p, b, c) || on_segment2(p, a, c);
  int s1 = orient2d(a, b, p), s2 = orient2d(b, c, p), s3 = orient2d(c, a, p);
  if (o < 0) { s1 = -s1; s2 = -s2; s3 = -s3; }
  return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

inline bool point_strictly_in_triangle2(const Vec2& p, const Vec2& a, const Vec2& b,
                                        const Vec2& c) {
  int o = orient2d(a, b, c);
  if (o == 0) return false;
  int s1 = orient2d(a, b, p), s2 = orient2d(b, c, p), s3 = orient2d(c, a, p);
  if (o < 0) { s1 = -s1; s2 = -s2; s3 = -s3; }
  return s1 > 0 && s2 > 0 && s3 > 0;
}

// --- 3D segment predicates ---

// Do two closed 3D segments share a point?
inline bool segments_intersect3(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2) {
  Vec3 r = q1 - p1, s = q2 - p2, w = p2 - p1;
  Vec3 rxs = cross(r, s);
  if (norm2(rxs) != 0) {
    // skew or intersecting lines; coplanar test first
    if (dot(w, rxs) != 0) return false;
    Rat denom = norm2(rxs);
    Rat t = dot(cross(w, s), rxs) / denom;
    Rat u = dot(cross(w, r), rxs) / denom;
    return t >= 0 && t <= 1 && u >= 0 && u <= 1;
  }
  // parallel lines
  if (norm2(cross(w, r)) != 0 && norm2(r) != 0) return false;
  if (norm2(r) == 0 && norm2(s) == 0) return p1 == p2;
  // collinear (or one degenerate): project on the longer direction
  Vec3 d = norm2(r) != 0 ? r : s;
  Vec3 base = norm2(r) != 0 ? p1 : p2;
  Rat dd = norm2(d);
  auto par = [&](const Vec3& p) { return dot(p - base, d) / dd; };
  if (norm2(cross(p2 - base, d)) != 0 || norm2(cross(q2 - base, d)) != 0 ||
      norm2(cross(p1 - base, d)) != 0 || norm2(cross(q1 - base, d)) != 0)
    return false;
  Rat a0 = par(p1), a1 = par(q1), b0 = par(p2), b1 = par(q2);
  if (a0 > a1) std::swap(a0, a1);
  if (b0 > b1) std::swap(b0, b1);
  return !(a1 < b0 || b1 < a0);
}

// squared distance from point to closed segment
inline Rat dist2_point_segment3(const Vec3& p, const Vec3& a, const Vec3& b) {
  Vec3 ab = b - a;
  Rat den = norm2(ab);
  if (den == 0) return norm2(p - a);
  Rat t = dot(p - a, ab) / den;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  Vec3 c = a + ab * t;
  return norm2(p - c);
}

// squared distance between two closed segments
inline Rat dist2_segments3(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2) {
  if (segments_intersect3(p1, q1, p2, q2)) return Rat(0);
  Rat best = dist2_point_segment3(p1, p2, q2);
  auto upd = [&](Rat v) { if (v < best) best = v; };
  upd(dist2_point_segment3(q1, p2, q2));
  upd(dist2_point_segment3(p2, p1, q1));
  upd(dist2_point_segment3(q2, p1, q1));
  // interior-interior minimum for skew lines
  Vec3 r = q1 - p1, s = q2 - p2, w = p2 - p1;
  Rat a = norm2(r), b = dot(r, s), c = norm2(s), d = dot(r, w), e = dot(s, w);
  Rat den = a * c - b * b;
  if (den != 0) {
    Rat t = (d * c - b * e) / den;
    Rat u = (d * b - a * e) / den;
    if (t >= 0 && t <= 1 && u >= 0 && u <= 1) {
      Vec3 c1 = p1 + r * t, c2 = p2 + s * u;
      upd(norm2(c1 - c2));
    }
  }
  return best;
}

// squared distance between a point and an infinite line through a with direction d
inline Rat dist2_point_line3(const Vec3& p, const Vec3& a, const Vec3& d) {
  Rat den = norm2(d);
  Vec3 w = p - a;
  return norm2(cross(w, d)) / den;
}

// squared distance between a closed segment and an infinite line
inline Rat dist2_segment_line3(const Vec3& p, const Vec3& q, const Vec3& a, const Vec3& d) {
  Vec3 r = q - p;
  Vec3 rxd = cross(r, d);
  Vec3 w = a - p;
  if (norm2(rxd) != 0) {
    // if the common perpendicular foot lies inside the segment, use it
    Rat den = norm2(rxd);
    Rat t = dot(cross(w, d), rxd) / den;
    if (t >= 0 && t <= 1) {
      // distance between the (infinite) lines
      Rat num = dot(w, rxd);
      return (num * num) / den;
    }
  }
  Rat d1 = dist2_point_line3(p, a, d);
  Rat d2 = dist2_point_line3(q, a, d);
  return d1 < d2 ? d1 : d2;
}

}  // namespace railknot
