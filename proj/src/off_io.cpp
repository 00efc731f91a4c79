#include "polygeo/off_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace polygeo {

namespace {

// Next token, skipping whitespace and '#' comments.
bool next_token(std::istream& in, std::string& tok) {
  for (;;) {
    if (!(in >> tok)) return false;
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return true;
  }
}

double parse_double(std::istream& in, const char* what) {
  std::string tok;
  if (!next_token(in, tok)) throw ParseError(std::string("unexpected end of OFF while reading ") + what);
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (...) {
    throw ParseError(std::string("bad number '") + tok + "' in OFF");
  }
  if (pos != tok.size()) throw ParseError(std::string("bad number '") + tok + "' in OFF");
  return v;
}

long parse_int(std::istream& in, const char* what) {
  std::string tok;
  if (!next_token(in, tok)) throw ParseError(std::string("unexpected end of OFF while reading ") + what);
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (...) {
    throw ParseError(std::string("bad integer '") + tok + "' in OFF");
  }
  if (pos != tok.size()) throw ParseError(std::string("bad integer '") + tok + "' in OFF");
  return v;
}

} // namespace

Mesh load_off(std::istream& in) {
  std::string tok;
  if (!next_token(in, tok) || tok != "OFF") throw ParseError("missing OFF header");
  long nv = parse_int(in, "vertex count");
  long nf = parse_int(in, "face count");
  (void)parse_int(in, "edge count");
  if (nv <= 0 || nf <= 0) throw ParseError("non-positive counts in OFF");

  std::vector<Vec3> verts(nv);
  for (long i = 0; i < nv; ++i) {
    verts[i].x = parse_double(in, "vertex");
    verts[i].y = parse_double(in, "vertex");
    verts[i].z = parse_double(in, "vertex");
  }
  std::vector<std::vector<int>> cycles(nf);
  for (long i = 0; i < nf; ++i) {
    long k = parse_int(in, "face size");
    if (k < 3 || k > nv) throw ParseError("bad face size in OFF");
    cycles[i].resize(k);
    for (long j = 0; j < k; ++j) {
      long v = parse_int(in, "face index");
      if (v < 0 || v >= nv) throw ParseError("face index out of range in OFF");
      cycles[i][j] = static_cast<int>(v);
    }
  }
  return Mesh::build(std::move(verts), std::move(cycles));
}

Mesh load_off_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_off(in);
}

void save_off(std::ostream& out, const Mesh& mesh) {
  out << "OFF\n";
  out << mesh.vertex_count() << " " << mesh.face_count() << " " << mesh.edge_count() << "\n";
  char buf[96];
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v.x, v.y, v.z);
    out << buf;
  }
  for (const Face& f : mesh.faces) {
    out << f.vertices.size();
    for (int v : f.vertices) out << " " << v;
    out << "\n";
  }
}

void save_off_file(const std::string& path, const Mesh& mesh) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  save_off(out, mesh);
}

std::string off_text(const Mesh& mesh) {
  std::ostringstream ss;
  save_off(ss, mesh);
  return ss.str();
}

std::string mesh_hash(const Mesh& mesh) {
  std::string text = off_text(mesh);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace polygeo
