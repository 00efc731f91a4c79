#include "polygeo/builtins.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "polygeo/sevencubes.hpp"

namespace polygeo {

namespace {

Vec3 centroid(const std::vector<Vec3>& pts) {
  Vec3 c{};
  for (const Vec3& p : pts) c = c + p;
  return (1.0 / pts.size()) * c;
}

// Orients each cycle so its Newell normal points away from the solid centroid.
std::vector<std::vector<int>> orient_outward(const std::vector<Vec3>& verts,
                                             std::vector<std::vector<int>> cycles) {
  Vec3 c = centroid(verts);
  for (auto& cyc : cycles) {
    Vec3 nrm{};
    Vec3 fc{};
    for (size_t i = 0; i < cyc.size(); ++i) {
      Vec3 a = verts[cyc[i]];
      Vec3 b = verts[cyc[(i + 1) % cyc.size()]];
      nrm.x += (a.y - b.y) * (a.z + b.z);
      nrm.y += (a.z - b.z) * (a.x + b.x);
      nrm.z += (a.x - b.x) * (a.y + b.y);
      fc = fc + a;
    }
    fc = (1.0 / cyc.size()) * fc;
    if (dot(nrm, fc - c) < 0) std::reverse(cyc.begin(), cyc.end());
  }
  return cycles;
}

// Orders the vertex set of a planar convex face by angle about its centroid.
std::vector<int> order_face(const std::vector<Vec3>& verts, std::vector<int> ids, Vec3 axis) {
  Vec3 fc{};
  for (int v : ids) fc = fc + verts[v];
  fc = (1.0 / ids.size()) * fc;
  Vec3 u = normalize(verts[ids[0]] - fc);
  Vec3 w = cross(normalize(axis), u);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    Vec3 da = verts[a] - fc, db = verts[b] - fc;
    return std::atan2(dot(da, w), dot(da, u)) < std::atan2(dot(db, w), dot(db, u));
  });
  return ids;
}

} // namespace

Mesh make_regular_tetrahedron(double edge) {
  double s = edge / (2.0 * std::sqrt(2.0));
  std::vector<Vec3> v = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  std::vector<std::vector<int>> f = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  return Mesh::build(v, orient_outward(v, f));
}

Mesh make_cube(double edge) {
  double a = edge;
  std::vector<Vec3> v = {{0, 0, 0}, {a, 0, 0}, {a, a, 0}, {0, a, 0},
                         {0, 0, a}, {a, 0, a}, {a, a, a}, {0, a, a}};
  std::vector<std::vector<int>> f = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                     {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
  return Mesh::build(v, orient_outward(v, f));
}

Mesh make_octahedron(double edge) {
  double s = edge / std::sqrt(2.0);
  std::vector<Vec3> v = {{s, 0, 0}, {-s, 0, 0}, {0, s, 0}, {0, -s, 0}, {0, 0, s}, {0, 0, -s}};
  std::vector<std::vector<int>> f = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                                     {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return Mesh::build(v, orient_outward(v, f));
}

Mesh make_icosahedron(double edge) {
  const double phi = (std::sqrt(5.0) + 1.0) / 2.0;
  double s = edge / 2.0;
  std::vector<Vec3> v;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      v.push_back({0, a * s, b * s});
      v.push_back({a * s, b * s, 0});
      v.push_back({b * s, 0, a * s});
    }
  // Faces: all triples at pairwise distance = edge.
  std::vector<std::vector<int>> f;
  const double tol = 1e-9 * edge;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      for (int k = j + 1; k < 12; ++k)
        if (std::abs(norm(v[i] - v[j]) - edge) < tol && std::abs(norm(v[j] - v[k]) - edge) < tol &&
            std::abs(norm(v[i] - v[k]) - edge) < tol)
          f.push_back({i, j, k});
  return Mesh::build(v, orient_outward(v, f));
}

Mesh make_dodecahedron(double edge) {
  const double phi = (std::sqrt(5.0) + 1.0) / 2.0;
  double s = edge * phi / 2.0; // unit-coordinate model has edge 2/phi
  std::vector<Vec3> v;
  for (double a : {-1.0, 1.0})
    for (double b : {-1.0, 1.0})
      for (double c : {-1.0, 1.0}) v.push_back({a * s, b * s, c * s});
  for (double a : {-1.0, 1.0})
    for (double b : {-1.0, 1.0}) {
      v.push_back({0, a * s / phi, b * s * phi});
      v.push_back({a * s / phi, b * s * phi, 0});
      v.push_back({b * s * phi, 0, a * s / phi});
    }
  // Face centers point along icosahedron vertex directions.
  std::vector<Vec3> dirs;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      dirs.push_back({0, a, b});
      dirs.push_back({a, b, 0});
      dirs.push_back({b, 0, a});
    }
  std::vector<std::vector<int>> f;
  for (const Vec3& u : dirs) {
    double best = -1e300;
    for (const Vec3& p : v) best = std::max(best, dot(p, u));
    std::vector<int> ids;
    for (int i = 0; i < 20; ++i)
      if (dot(v[i], u) > best - 1e-9 * s) ids.push_back(i);
    f.push_back(order_face(v, ids, u));
  }
  return Mesh::build(v, orient_outward(v, f));
}

Mesh make_disphenoid(double p, double q, double r) {
  if (!(p > 0 && q > 0 && r > 0)) throw NonAcuteTriangleError("triangle sides must be positive");
  double x2 = (-p * p + q * q + r * r) / 8.0;
  double y2 = (p * p - q * q + r * r) / 8.0;
  double z2 = (p * p + q * q - r * r) / 8.0;
  if (x2 <= 0 || y2 <= 0 || z2 <= 0)
    throw NonAcuteTriangleError("disphenoid requires an acute triangle");
  double x = std::sqrt(x2), y = std::sqrt(y2), z = std::sqrt(z2);
  // |AB|=|CD|=p, |AC|=|BD|=q, |BC|=|AD|=r
  std::vector<Vec3> v = {{x, y, z}, {x, -y, -z}, {-x, y, -z}, {-x, -y, z}};
  std::vector<std::vector<int>> f = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  return Mesh::build(v, orient_outward(v, f));
}

Mesh make_right_pyramid(double base_side, double lateral_edge) {
  const double circum = base_side / std::sqrt(3.0);
  if (lateral_edge <= circum)
    throw MeshError("lateral edge too short for a right pyramid over this base");
  double h = std::sqrt(lateral_edge * lateral_edge - circum * circum);
  std::vector<Vec3> v;
  for (int i = 0; i < 3; ++i) {
    double ang = 2.0 * std::numbers::pi * i / 3.0;
    v.push_back({circum * std::cos(ang), circum * std::sin(ang), 0.0});
  }
  v.push_back({0, 0, h});
  std::vector<std::vector<int>> f = {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
  return Mesh::build(v, orient_outward(v, f));
}

Mesh builtin(const std::string& name, const std::vector<double>& params) {
  auto arg = [&](size_t i, double dflt) { return i < params.size() ? params[i] : dflt; };
  if (name == "regular_tetrahedron") return make_regular_tetrahedron(arg(0, 1.0));
  if (name == "cube") return make_cube(arg(0, 1.0));
  if (name == "octahedron") return make_octahedron(arg(0, 1.0));
  if (name == "icosahedron") return make_icosahedron(arg(0, 1.0));
  if (name == "dodecahedron") return make_dodecahedron(arg(0, 1.0));
  if (name == "disphenoid") {
    if (params.size() != 3) throw MeshError("disphenoid expects p q r");
    return make_disphenoid(params[0], params[1], params[2]);
  }
  if (name == "right_pyramid") {
    if (params.size() != 2) throw MeshError("right_pyramid expects base_side lateral_edge");
    return make_right_pyramid(params[0], params[1]);
  }
  if (name == "seven_cubes") return build_seven_cubes(arg(0, 1.0));
  throw MeshError("unknown builtin '" + name + "'");
}

} // namespace polygeo
