#pragma once

#include <fstream>
#include <iosfwd>
#include <string>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"

namespace aec {

/// Edge list: a header line "n m", then m lines "u v" with 0-based vertices.
/// DIMACS input ("p edge n m", "e u v" with 1-based vertices, "c" comments)
/// is accepted as well. '#' starts a comment; blank lines are skipped.
/// Throws Parse, or the graph errors (SelfLoop, DuplicateEdge, ...).
Graph read_graph(std::istream& is);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& os, const Graph& g);

/// One "u v color" line per colored edge in edge order, then "palette k".
/// The reader takes the palette line anywhere and stores colors without any
/// properness check.
void write_coloring(std::ostream& os, const Coloring& c);
Coloring read_coloring(std::istream& is, const Graph& g);
Coloring read_coloring_file(const std::string& path, const Graph& g);

/// Opens a file for reading or throws Io.
std::ifstream open_input(const std::string& path);

}  // namespace aec
