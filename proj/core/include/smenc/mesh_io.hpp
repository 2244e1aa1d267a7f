#pragma once

#include <string>

#include "smenc/mesh.hpp"

namespace smenc {

/// Writes a lifted surface as text: one "v <x> <y> <z>" line per vertex with
/// 17 significant digits, then one "f <i> <j> <k>" line per face with 1-based
/// indices.  The file is written atomically (temp file + rename); an empty
/// surface is an error and leaves no file behind.
void write_surface(const LiftedSurface& surface, const std::string& path);

/// Parses the text format back.  Vertex values round-trip bit-identically;
/// the vertex star is rebuilt, the triangulation is taken as stored.
LiftedSurface read_surface(const std::string& path);

} // namespace smenc
