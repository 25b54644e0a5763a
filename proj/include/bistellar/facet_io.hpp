#pragma once

#include <iosfwd>
#include <string>

#include "bistellar/manifold.hpp"

namespace bistellar {

/// Facet-list text format: one facet per line, vertex labels as base-10
/// integers separated by single spaces; lines starting with '#' and blank
/// lines are ignored. The dimension is inferred from the first facet.
TriangulatedManifold parse_facet_stream(std::istream& in);
TriangulatedManifold parse_facet_string(const std::string& text);
TriangulatedManifold parse_facet_file(const std::string& path);

/// Emits the bit-exact round-trip form: facets sorted lexicographically,
/// vertices ascending, one facet per line.
std::string emit_facets(const TriangulatedManifold& K);

/// Signed variant used for open (non-manifold) oriented complexes such as
/// the local move complexes: a line may begin with '-' or '+' to carry the
/// facet's orientation sign; no validation beyond parsing.
std::vector<OrientedSimplex> parse_signed_facet_stream(std::istream& in);
std::vector<OrientedSimplex> parse_signed_facet_string(const std::string& text);
std::vector<OrientedSimplex> parse_signed_facet_file(const std::string& path);

}  // namespace bistellar
