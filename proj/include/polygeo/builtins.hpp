#pragma once

#include <string>
#include <vector>

#include "polygeo/mesh.hpp"

namespace polygeo {

Mesh make_regular_tetrahedron(double edge);
Mesh make_cube(double edge);
Mesh make_octahedron(double edge);
Mesh make_icosahedron(double edge);
Mesh make_dodecahedron(double edge);

// Isosceles tetrahedron with all four faces congruent to the acute triangle
// (p,q,r). Vertices ordered A,B,C,D with |AB|=|CD|=p, |AC|=|BD|=q, |BC|=|AD|=r.
// Throws NonAcuteTriangleError unless p^2+q^2 > r^2 for every permutation.
Mesh make_disphenoid(double p, double q, double r);

// Right pyramid over an equilateral triangle; apex above the centroid.
Mesh make_right_pyramid(double base_side, double lateral_edge);

// Dispatch by name: regular_tetrahedron, cube, octahedron, icosahedron,
// dodecahedron, disphenoid, right_pyramid, seven_cubes.
Mesh builtin(const std::string& name, const std::vector<double>& params);

} // namespace polygeo
