#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "molscope/exact.hpp"
#include "molscope/mols.hpp"
#include "molscope/plex.hpp"

namespace molscope {

// Simple undirected graph with a colour per vertex. Isomorphisms must map
// each vertex to one of the same colour.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(int num_vertices);

  void add_edge(int u, int v);
  void set_color(int v, int color) { colors_[static_cast<std::size_t>(v)] = color; }

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }
  int color(int v) const { return colors_[static_cast<std::size_t>(v)]; }
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const int> colors() const { return colors_; }
  bool adjacent(int u, int v) const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<int> colors_;
  int num_edges_ = 0;
};

enum class EquivalenceMode {
  SpeciesMols,
  IsotopismList,
  IsotopismSet,
  TrisotopismList,
  TrisotopismSet,
  SpeciesLS,
};

const char* to_string(EquivalenceMode mode);

// Vertex layout of the orthogonal-array graph of width w and order n.
struct OaGraphLayout {
  int n;
  int width;
  int column_vertex(int col) const { return col; }
  int symbol_vertex(int col, int sym) const { return width + col * n + sym; }
  int row_vertex(int row) const { return width + width * n + row; }
  int num_vertices() const { return width + width * n + n * n; }
};

/// Column vertices, one vertex per (column, symbol), one per array row.
/// Column vertices join their n symbol vertices; row vertices join the
/// symbol vertex of their entry in each column. The mode only changes the
/// colours of the column vertices.
ColoredGraph encode_graph(const OrthogonalArray& oa, EquivalenceMode mode);

// Colour histogram followed by the adjacency bitmap of the canonically
// relabelled graph. Equal exactly for colour-preserving isomorphic graphs.
class CanonicalCertificate {
 public:
  CanonicalCertificate() = default;
  explicit CanonicalCertificate(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string hex() const;
  /// Throws Parse on malformed input.
  static CanonicalCertificate from_hex(std::string_view hex);

  auto operator<=>(const CanonicalCertificate&) const = default;

 private:
  std::string bytes_;
};

struct CanonicalForm {
  CanonicalCertificate certificate;
  // labeling[v] is the canonical position of vertex v.
  std::vector<int> labeling;
  // Generators of the automorphism group, each a vertex image table.
  std::vector<std::vector<int>> generators;
  ExactInt group_order;
};

/// Individualization-refinement search: equitable colour refinement, then
/// branching on the non-singleton cell with the most non-trivial joins. A first pass finds
/// generators for the pointwise stabiliser chain of the leftmost path, which
/// yields the group order; a second pass keeps the least leaf, pruning
/// subtrees by automorphism orbits and by refinement traces.
CanonicalForm canonical_form(const ColoredGraph& graph);
CanonicalCertificate canonical_certificate(const ColoredGraph& graph);
ExactInt automorphism_order(const ColoredGraph& graph);

CanonicalCertificate certificate(const MolsList& mols, EquivalenceMode mode);
CanonicalCertificate certificate(const OrthogonalArray& oa, EquivalenceMode mode);

/// |autoparatopism group| (SpeciesMols colouring; SpeciesLS for k = 1).
ExactInt par_order(const MolsList& mols);
/// |autotopism group| (IsotopismList colouring).
ExactInt atp_order(const MolsList& mols);

/// Autoparatopism generators acting on the cells r*n+c (the array rows).
std::vector<CellPermutation> autoparatopism_cell_generators(const MolsList& mols);

/// Autoparatopism generators acting on the array columns.
std::vector<std::vector<int>> autoparatopism_column_generators(const MolsList& mols);

}  // namespace molscope
