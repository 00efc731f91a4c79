#pragma once

#include <cmath>
#include <vector>

namespace polygeo {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return dot(a, a); }
inline Vec2 normalize(Vec2 a) {
  double n = norm(a);
  return n > 0.0 ? Vec2{a.x / n, a.y / n} : Vec2{1.0, 0.0};
}
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(Vec3 a, double s) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double norm2(Vec3 a) { return dot(a, a); }
inline Vec3 normalize(Vec3 a) {
  double n = norm(a);
  return n > 0.0 ? Vec3{a.x / n, a.y / n, a.z / n} : Vec3{1.0, 0.0, 0.0};
}

// Orientation-preserving planar isometry p -> R(c,s) p + t.
struct Isometry2 {
  double c = 1.0, s = 0.0;
  Vec2 t{0.0, 0.0};

  Vec2 apply(Vec2 p) const { return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y}; }
  Vec2 apply_dir(Vec2 d) const { return {c * d.x - s * d.y, s * d.x + c * d.y}; }
  double rotation_angle() const { return std::atan2(s, c); }

  // this after other: (this * other)(p) = this(other(p))
  Isometry2 compose(const Isometry2& o) const {
    Isometry2 r;
    r.c = c * o.c - s * o.s;
    r.s = s * o.c + c * o.s;
    double n = std::hypot(r.c, r.s);
    r.c /= n;
    r.s /= n;
    r.t = apply(o.t);
    return r;
  }
  Isometry2 inverse() const {
    Isometry2 r;
    r.c = c;
    r.s = -s;
    r.t = {-(r.c * t.x - r.s * t.y), -(r.s * t.x + r.c * t.y)};
    return r;
  }
};

// Proper intersection test for two 2D segments; endpoints within tol of a
// shared point do not count as an intersection.
bool segments_cross(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double tol);

// Distance from point to segment.
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

} // namespace polygeo
