#include "polygeo/geom.hpp"

#include <algorithm>

namespace polygeo {

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double len2 = norm2(ab);
  if (len2 == 0.0) return norm(p - a);
  double u = dot(p - a, ab) / len2;
  u = std::clamp(u, 0.0, 1.0);
  return norm(p - (a + u * ab));
}

bool segments_cross(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double tol) {
  // Shared endpoints (within tol) are not intersections.
  auto near = [tol](Vec2 p, Vec2 q) { return norm(p - q) <= tol; };
  bool share = near(a0, b0) || near(a0, b1) || near(a1, b0) || near(a1, b1);

  Vec2 da = a1 - a0, db = b1 - b0;
  double denom = cross(da, db);
  if (std::abs(denom) < 1e-15 * (norm(da) * norm(db) + 1e-300)) {
    // Parallel: overlap counts as crossing unless confined to shared endpoints.
    double d0 = point_segment_distance(b0, a0, a1);
    double d1 = point_segment_distance(b1, a0, a1);
    if (d0 > tol && d1 > tol) return false;
    // Collinear-ish: check interval overlap along da.
    Vec2 u = normalize(da);
    double s0 = 0.0, s1 = dot(a1 - a0, u);
    double t0 = dot(b0 - a0, u), t1 = dot(b1 - a0, u);
    if (t0 > t1) std::swap(t0, t1);
    double lo = std::max(std::min(s0, s1), t0);
    double hi = std::min(std::max(s0, s1), t1);
    return hi - lo > tol;
  }
  double s = cross(b0 - a0, db) / denom;
  double u = cross(b0 - a0, da) / denom;
  if (s < -1e-15 || s > 1.0 + 1e-15 || u < -1e-15 || u > 1.0 + 1e-15) return false;
  Vec2 x = a0 + s * da;
  if (share) {
    // Only reject if the intersection point coincides with the shared endpoint.
    if ((near(a0, b0) && near(x, a0)) || (near(a0, b1) && near(x, a0)) ||
        (near(a1, b0) && near(x, a1)) || (near(a1, b1) && near(x, a1)))
      return false;
  }
  // Interior touches at an endpoint of only one segment count as crossings
  // (a path touching another link mid-segment is a self-intersection).
  double la = norm(da), lb = norm(db);
  bool interior_a = s * la > tol && (1.0 - s) * la > tol;
  bool interior_b = u * lb > tol && (1.0 - u) * lb > tol;
  return interior_a || interior_b;
}

} // namespace polygeo
