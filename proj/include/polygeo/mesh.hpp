#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polygeo/geom.hpp"

namespace polygeo {

struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : MeshError {
  using MeshError::MeshError;
};
struct NonManifoldError : MeshError {
  using MeshError::MeshError;
};
struct NonPlanarFaceError : MeshError {
  using MeshError::MeshError;
};
struct OpenSurfaceError : MeshError {
  using MeshError::MeshError;
};
struct NonAcuteTriangleError : MeshError {
  using MeshError::MeshError;
};

// Tagged location on the surface.
struct SurfacePoint {
  enum class Kind { FaceInterior, EdgeInterior, Vertex };
  Kind kind = Kind::Vertex;
  int id = -1;   // face, edge or vertex index depending on kind
  Vec2 uv{};     // local face coordinates (FaceInterior)
  double t = 0;  // parameter in (0,1) along the edge's stored direction (EdgeInterior)

  static SurfacePoint face(int f, Vec2 uv) { return {Kind::FaceInterior, f, uv, 0.0}; }
  static SurfacePoint edge(int e, double t) { return {Kind::EdgeInterior, e, {}, t}; }
  static SurfacePoint vertex(int v) { return {Kind::Vertex, v, {}, 0.0}; }
};

struct AngleReport {
  int vertex = -1;
  double angle_sum = 0.0;
  double defect = 0.0; // 2*pi - angle_sum, may be negative
};

struct Edge {
  int a = -1, b = -1;      // vertex ids; direction a->b as it appears in face f0
  int f0 = -1, f1 = -1;    // incident faces; f0 contains directed (a,b)
  int side0 = -1, side1 = -1; // index of the edge within each face's boundary cycle
  double dihedral = 0.0;   // interior dihedral angle in (0, 2*pi); pi marks a flat edge
  bool flat = false;
  double length = 0.0;
};

struct Face {
  std::vector<int> vertices;  // oriented cycle (outward CCW)
  std::vector<int> edges;     // edge id for side i = (v[i], v[i+1])
  Vec3 normal{};              // unit outward normal
  Vec3 origin{};              // local frame: origin at first vertex
  Vec3 bu{}, bv{};            // orthonormal in-plane axes; bv = normal x bu
  std::vector<Vec2> local;    // per-vertex local 2D coordinates

  Vec2 local_of(int side) const { return local[side]; }
};

// Closed orientable polyhedral surface. Immutable after construction.
class Mesh {
public:
  std::vector<Vec3> vertices;
  std::vector<Face> faces;
  std::vector<Edge> edges;

  // Builds edge adjacency, local frames, dihedral angles; throws on invalid input.
  static Mesh build(std::vector<Vec3> vertices, std::vector<std::vector<int>> face_cycles);

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  double scale() const { return bbox_diag_; } // bounding-box diagonal
  double tol(double eps = 1e-9) const { return eps * bbox_diag_; }

  AngleReport angle_sum(int v) const;
  bool is_disphenoid() const;

  // Faces incident to a vertex in fan order around it (consistent orientation),
  // together with the directed boundary edges separating consecutive fan faces.
  struct VertexFan {
    std::vector<int> faces;        // k faces in cyclic order
    std::vector<int> edges;        // k edges; edges[i] separates faces[i-1] and faces[i]
    std::vector<double> angles;    // corner angle of faces[i] at the vertex
    double total = 0.0;            // angle sum
  };
  const VertexFan& vertex_fan(int v) const { return fans_[v]; }

  // Local coordinates of a vertex inside an incident face.
  Vec2 vertex_local(int face, int vertex) const;
  // Corner index of vertex within face cycle, or -1.
  int corner_index(int face, int vertex) const;
  // Side index of edge within face cycle, or -1.
  int side_index(int face, int edge) const;
  int other_face(int edge, int face) const;

  // 3D position of a surface point.
  Vec3 position(const SurfacePoint& sp) const;
  // Local coordinates of a surface point within the given incident face.
  Vec2 local_in_face(const SurfacePoint& sp, int face) const;

  // Geometric lookups used by builders and tests (tolerance-scaled).
  int find_vertex(Vec3 p) const;
  int find_edge_containing(Vec3 p) const;   // strictly inside an edge
  int find_face_containing(Vec3 p) const;   // strictly inside a face
  double edge_param(int e, Vec3 p) const;

private:
  double bbox_diag_ = 1.0;
  std::vector<VertexFan> fans_;

  void compute_frames();
  void compute_edges(const std::vector<std::vector<int>>& cycles);
  void compute_dihedrals();
  void compute_fans();
  void validate_planarity() const;
};

// Sum of angle defects over all vertices (4*pi for genus 0).
double total_defect(const Mesh& mesh);

} // namespace polygeo
