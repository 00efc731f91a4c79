#pragma once

#include <iosfwd>
#include <string>

#include "polygeo/mesh.hpp"

namespace polygeo {

// ASCII OFF. '#' comments allowed; counts line is "V F E" (E ignored).
Mesh load_off(std::istream& in);
Mesh load_off_file(const std::string& path);

// Writes with 17 significant digits so that load_off round-trips coordinates.
void save_off(std::ostream& out, const Mesh& mesh);
void save_off_file(const std::string& path, const Mesh& mesh);
std::string off_text(const Mesh& mesh);

// Stable content digest of the canonical OFF text (FNV-1a 64, hex).
std::string mesh_hash(const Mesh& mesh);

} // namespace polygeo
