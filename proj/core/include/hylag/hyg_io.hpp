#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hylag/hypergraph.hpp"

namespace hylag {

/// HYG v1: first line "r n", then one edge per line as space-separated
/// ascending vertex ids. Lines starting with '#' and blank lines are ignored
/// on input. write_hyg emits the canonical form (no comments, edges in
/// lexicographic order), so write(read(write(g))) is byte-identical.
Hypergraph read_hyg(std::istream& in);
Hypergraph read_hyg_file(const std::filesystem::path& path);

void write_hyg(std::ostream& out, const Hypergraph& g);
void write_hyg_file(const std::filesystem::path& path, const Hypergraph& g);

std::string to_hyg_string(const Hypergraph& g);

}  // namespace hylag
