#include "polygeo/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace polygeo {

namespace {
constexpr double kPi = std::numbers::pi;
}

Mesh Mesh::build(std::vector<Vec3> vertices, std::vector<std::vector<int>> face_cycles) {
  Mesh m;
  m.vertices = std::move(vertices);
  if (m.vertices.empty() || face_cycles.empty()) throw ParseError("empty mesh");

  Vec3 lo = m.vertices[0], hi = m.vertices[0];
  for (const Vec3& p : m.vertices) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  m.bbox_diag_ = std::max(norm(hi - lo), 1e-30);

  m.faces.resize(face_cycles.size());
  for (size_t f = 0; f < face_cycles.size(); ++f) {
    const auto& cyc = face_cycles[f];
    if (cyc.size() < 3) throw ParseError("face with fewer than 3 vertices");
    for (int v : cyc)
      if (v < 0 || v >= m.vertex_count()) throw ParseError("vertex index out of range");
    for (size_t i = 0; i < cyc.size(); ++i)
      for (size_t j = i + 1; j < cyc.size(); ++j)
        if (cyc[i] == cyc[j]) throw ParseError("repeated vertex in face cycle");
    m.faces[f].vertices = cyc;
  }

  m.compute_frames();
  m.validate_planarity();
  m.compute_edges(face_cycles);
  m.compute_dihedrals();
  m.compute_fans();
  return m;
}

void Mesh::compute_frames() {
  for (Face& f : faces) {
    const int n = static_cast<int>(f.vertices.size());
    // Newell normal; robust for any planar simple polygon.
    Vec3 nrm{};
    for (int i = 0; i < n; ++i) {
      Vec3 a = vertices[f.vertices[i]];
      Vec3 b = vertices[f.vertices[(i + 1) % n]];
      nrm.x += (a.y - b.y) * (a.z + b.z);
      nrm.y += (a.z - b.z) * (a.x + b.x);
      nrm.z += (a.x - b.x) * (a.y + b.y);
    }
    if (norm(nrm) < 1e-30) throw NonPlanarFaceError("degenerate face normal");
    f.normal = normalize(nrm);
    f.origin = vertices[f.vertices[0]];
    f.bu = normalize(vertices[f.vertices[1]] - f.origin);
    f.bv = cross(f.normal, f.bu);
    f.local.resize(n);
    for (int i = 0; i < n; ++i) {
      Vec3 d = vertices[f.vertices[i]] - f.origin;
      f.local[i] = {dot(d, f.bu), dot(d, f.bv)};
    }
  }
}

void Mesh::validate_planarity() const {
  const double tol = 1e-9 * bbox_diag_;
  for (const Face& f : faces) {
    for (int v : f.vertices) {
      double d = dot(vertices[v] - f.origin, f.normal);
      if (std::abs(d) > tol) throw NonPlanarFaceError("non-planar face");
    }
  }
}

void Mesh::compute_edges(const std::vector<std::vector<int>>& cycles) {
  std::map<std::pair<int, int>, int> directed_seen; // (a,b) -> edge id
  for (size_t f = 0; f < cycles.size(); ++f) {
    const auto& cyc = cycles[f];
    const int n = static_cast<int>(cyc.size());
    faces[f].edges.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % n];
      if (directed_seen.count({a, b}))
        throw NonManifoldError("directed edge used twice (inconsistent orientation)");
      auto rev = directed_seen.find({b, a});
      if (rev == directed_seen.end()) {
        Edge e;
        e.a = a;
        e.b = b;
        e.f0 = static_cast<int>(f);
        e.side0 = i;
        e.length = norm(vertices[b] - vertices[a]);
        edges.push_back(e);
        int id = static_cast<int>(edges.size()) - 1;
        directed_seen[{a, b}] = id;
        faces[f].edges[i] = id;
      } else {
        Edge& e = edges[rev->second];
        if (e.f1 != -1) throw NonManifoldError("edge with more than two faces");
        e.f1 = static_cast<int>(f);
        e.side1 = i;
        directed_seen[{a, b}] = rev->second;
        faces[f].edges[i] = rev->second;
      }
    }
  }
  for (const Edge& e : edges)
    if (e.f1 == -1) throw OpenSurfaceError("boundary edge (open surface)");
}

void Mesh::compute_dihedrals() {
  for (Edge& e : edges) {
    Vec3 d = normalize(vertices[e.b] - vertices[e.a]);
    Vec3 n0 = faces[e.f0].normal;
    Vec3 n1 = faces[e.f1].normal;
    double s = dot(cross(n0, n1), d);
    double c = dot(n0, n1);
    e.dihedral = kPi - std::atan2(s, c); // interior angle in (0, 2*pi)
    e.flat = std::abs(e.dihedral - kPi) < 1e-9;
  }
}

void Mesh::compute_fans() {
  fans_.assign(vertices.size(), {});
  // corner angle helper
  auto corner_angle = [&](int f, int ci) {
    const Face& face = faces[f];
    const int n = static_cast<int>(face.vertices.size());
    Vec2 v = face.local[ci];
    Vec2 a = face.local[(ci + 1) % n] - v;
    Vec2 b = face.local[(ci + n - 1) % n] - v;
    double ang = std::atan2(cross(a, b), dot(a, b));
    if (ang < 0) ang += 2 * kPi;
    return ang;
  };

  for (int v = 0; v < vertex_count(); ++v) {
    // find one incident face
    int f0 = -1;
    for (int f = 0; f < face_count() && f0 < 0; ++f)
      if (corner_index(f, v) >= 0) f0 = f;
    if (f0 < 0) throw ParseError("isolated vertex");

    VertexFan fan;
    int f = f0;
    do {
      int ci = corner_index(f, v);
      fan.faces.push_back(f);
      fan.angles.push_back(corner_angle(f, ci));
      // advance across the face-cycle edge that ends at v: side (ci-1, ci)
      const Face& face = faces[f];
      const int n = static_cast<int>(face.vertices.size());
      int side = (ci + n - 1) % n;
      int e = face.edges[side];
      fan.edges.push_back(e);
      f = other_face(e, f);
    } while (f != f0);
    // edges[i] currently separates faces[i] and faces[i+1]; rotate so that
    // edges[i] separates faces[i-1] and faces[i].
    std::rotate(fan.edges.begin(), fan.edges.begin() + (fan.edges.size() - 1), fan.edges.end());
    for (double a : fan.angles) fan.total += a;
    if (fan.faces.size() != 0) fans_[v] = std::move(fan);
  }
}

AngleReport Mesh::angle_sum(int v) const {
  const VertexFan& fan = fans_.at(v);
  return {v, fan.total, 2 * kPi - fan.total};
}

bool Mesh::is_disphenoid() const {
  if (vertex_count() != 4) return false;
  for (int v = 0; v < 4; ++v)
    if (std::abs(angle_sum(v).angle_sum - kPi) > 1e-9) return false;
  return true;
}

Vec2 Mesh::vertex_local(int face, int vertex) const {
  int ci = corner_index(face, vertex);
  if (ci < 0) throw MeshError("vertex not on face");
  return faces[face].local[ci];
}

int Mesh::corner_index(int face, int vertex) const {
  const auto& vs = faces[face].vertices;
  for (size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == vertex) return static_cast<int>(i);
  return -1;
}

int Mesh::side_index(int face, int edge) const {
  const auto& es = faces[face].edges;
  for (size_t i = 0; i < es.size(); ++i)
    if (es[i] == edge) return static_cast<int>(i);
  return -1;
}

int Mesh::other_face(int edge, int face) const {
  const Edge& e = edges[edge];
  if (e.f0 == face) return e.f1;
  if (e.f1 == face) return e.f0;
  throw MeshError("face not incident to edge");
}

Vec3 Mesh::position(const SurfacePoint& sp) const {
  switch (sp.kind) {
    case SurfacePoint::Kind::Vertex:
      return vertices.at(sp.id);
    case SurfacePoint::Kind::EdgeInterior: {
      const Edge& e = edges.at(sp.id);
      return vertices[e.a] + sp.t * (vertices[e.b] - vertices[e.a]);
    }
    case SurfacePoint::Kind::FaceInterior: {
      const Face& f = faces.at(sp.id);
      return f.origin + sp.uv.x * f.bu + sp.uv.y * f.bv;
    }
  }
  throw MeshError("bad surface point");
}

Vec2 Mesh::local_in_face(const SurfacePoint& sp, int face) const {
  switch (sp.kind) {
    case SurfacePoint::Kind::Vertex:
      return vertex_local(face, sp.id);
    case SurfacePoint::Kind::EdgeInterior: {
      const Edge& e = edges.at(sp.id);
      int side = side_index(face, sp.id);
      if (side < 0) throw MeshError("edge not on face");
      const Face& f = faces[face];
      const int n = static_cast<int>(f.vertices.size());
      Vec2 pa, pb; // local coords of e.a and e.b
      if (f.vertices[side] == e.a) {
        pa = f.local[side];
        pb = f.local[(side + 1) % n];
      } else {
        pb = f.local[side];
        pa = f.local[(side + 1) % n];
      }
      return pa + sp.t * (pb - pa);
    }
    case SurfacePoint::Kind::FaceInterior:
      if (sp.id != face) throw MeshError("face mismatch");
      return sp.uv;
  }
  throw MeshError("bad surface point");
}

int Mesh::find_vertex(Vec3 p) const {
  const double t = tol();
  for (int v = 0; v < vertex_count(); ++v)
    if (norm(vertices[v] - p) < t) return v;
  return -1;
}

int Mesh::find_edge_containing(Vec3 p) const {
  const double t = tol();
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges[e];
    Vec3 a = vertices[ed.a], b = vertices[ed.b];
    Vec3 ab = b - a;
    double u = dot(p - a, ab) / norm2(ab);
    if (u < t / ed.length || u > 1.0 - t / ed.length) continue;
    if (norm(p - (a + u * ab)) < t) return e;
  }
  return -1;
}

double Mesh::edge_param(int e, Vec3 p) const {
  const Edge& ed = edges[e];
  Vec3 a = vertices[ed.a], b = vertices[ed.b];
  return dot(p - a, b - a) / norm2(b - a);
}

int Mesh::find_face_containing(Vec3 p) const {
  const double t = tol();
  for (int f = 0; f < face_count(); ++f) {
    const Face& face = faces[f];
    if (std::abs(dot(p - face.origin, face.normal)) > t) continue;
    Vec3 d = p - face.origin;
    Vec2 q{dot(d, face.bu), dot(d, face.bv)};
    // strictly inside: positive side of every edge for a CCW convex cycle;
    // general polygons handled by winding.
    const int n = static_cast<int>(face.vertices.size());
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) {
      Vec2 a = face.local[i], b = face.local[(i + 1) % n];
      if (cross(b - a, q - a) / norm(b - a) < t) inside = false;
    }
    if (inside) return f;
  }
  return -1;
}

double total_defect(const Mesh& mesh) {
  double s = 0.0;
  for (int v = 0; v < mesh.vertex_count(); ++v) s += mesh.angle_sum(v).defect;
  return s;
}

} // namespace polygeo
