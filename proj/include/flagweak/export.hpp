#pragma once

// Text exports of diagrams, Moebius tables and chain graphs, and structural
// comparison against stored golden diagrams.

#include <filesystem>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "flagweak/chains.hpp"
#include "flagweak/io.hpp"
#include "flagweak/order.hpp"

namespace flagweak {

/// Nodes labeled "<element>\nfinv=<k>", b edges black, a edges red.
std::string to_dot(const HasseDiagram& hasse, Notation notation = Notation::General);

/// {"r","n","nodes":[{"id","window","finv"}],"edges":[{"from","to","gen"}]}
std::string to_json(const HasseDiagram& hasse, Notation notation = Notation::General, int indent = -1);

/// Rows "from,to,mobius,class" for every comparable pair, in id order.
std::string mobius_csv(const HasseDiagram& hasse, Notation notation = Notation::General);

/// Vertices are chain words; edges carry the move kind.
std::string to_dot(const ChainGraph& graph);

// Layout-free view of a diagram: element strings and (from, to, kind) edges,
// kind being 'a' or 'b'.
struct DiagramShape {
  int r = 0;
  int n = 0;
  std::set<std::string> nodes;
  std::set<std::tuple<std::string, std::string, char>> edges;

  friend bool operator==(const DiagramShape&, const DiagramShape&) = default;
};

DiagramShape shape_of(const HasseDiagram& hasse, Notation notation);

/// Reads {"r","n","nodes":[...],"edges":[{"from","to","kind"}]}.
DiagramShape load_golden(const std::filesystem::path& path);

/// Human-readable differences; empty when the shapes agree.
std::vector<std::string> compare_shapes(const DiagramShape& expected, const DiagramShape& actual);

}  // namespace flagweak
