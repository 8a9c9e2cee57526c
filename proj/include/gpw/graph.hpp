#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpw {

/// Bit i set means vertex i (in the graph's stored order) is a member.
using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(std::size_t i) { return VertexMask{1} << i; }

/// Finite simplicial graph with an ordered list of distinct labels.
///
/// The vertex order is part of the value and drives every tie-break
/// (witnesses, canonical forms, census output). Isomorphism ignores it.
/// Graphs hold at most kMaxVertices vertices.
class SimpleGraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> labels);
  SimpleGraph(std::vector<std::string> labels,
              const std::vector<std::pair<std::string, std::string>>& edges);
  SimpleGraph(std::vector<std::string> labels,
              const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  /// Builds from per-vertex neighbour masks; the masks must be symmetric
  /// and loop-free.
  static SimpleGraph from_adjacency(std::vector<std::string> labels,
                                    std::vector<VertexMask> adjacency);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// Throws std::invalid_argument for an unknown label.
  std::size_t index_of(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label) const;
  VertexMask mask_of(const std::vector<std::string>& labels) const;

  bool adjacent(std::size_t u, std::size_t v) const {
    return (adjacency_[u] >> v) & 1U;
  }
  VertexMask neighbors(std::size_t v) const { return adjacency_[v]; }
  const std::vector<VertexMask>& adjacency() const { return adjacency_; }
  std::size_t degree(std::size_t v) const;
  VertexMask all_vertices() const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

  std::vector<std::string> labels_of(VertexMask mask) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void add_edge(std::size_t u, std::size_t v);

  std::vector<std::string> labels_;
  std::vector<VertexMask> adjacency_;
};

SimpleGraph opposite(const SimpleGraph& g);

/// Keeps the vertices in `keep` (in g's order) and every edge between them.
SimpleGraph induced_subgraph(const SimpleGraph& g, VertexMask keep);
SimpleGraph induced_subgraph(const SimpleGraph& g,
                             const std::vector<std::string>& keep);

VertexMask link_mask(const SimpleGraph& g, std::size_t v);
VertexMask star_mask(const SimpleGraph& g, std::size_t v);
std::vector<std::string> link(const SimpleGraph& g, std::string_view v);
std::vector<std::string> star(const SimpleGraph& g, std::string_view v);

/// Simple contraction of the edge {u, v}: the endpoints merge into a vertex
/// labelled "u*v" placed at the earlier endpoint's position; loops and
/// duplicate edges disappear.
SimpleGraph contract_edge(const SimpleGraph& g, std::string_view u,
                          std::string_view v);

/// Contraction performed in the opposite graph, read back through
/// complementation. {u, v} must be a non-edge of g.
SimpleGraph co_contract(const SimpleGraph& g, std::string_view u,
                        std::string_view v);

struct GraphDouble {
  SimpleGraph graph;
  /// retraction[i] is the index in the source graph of double vertex i.
  std::vector<std::size_t> retraction;
};

/// Two copies of g minus t glued along lk(t). The first copy keeps g's
/// labels and order; second-copy vertices outside lk(t) follow with a
/// trailing prime.
GraphDouble double_along_link(const SimpleGraph& g, std::string_view t);

/// Shortest induced cycle of length >= min_len, least index set among those
/// of that length. The cycle starts at its least vertex and continues
/// through the smaller of that vertex's two cycle neighbours.
std::optional<std::vector<std::size_t>> find_hole(const SimpleGraph& g,
                                                  std::size_t min_len = 5);

enum class CycleKind { kHole, kAntihole };

struct CycleWitness {
  CycleKind kind;
  std::vector<std::size_t> cycle;  // cyclic order in g (hole) or g^opp
};

struct WeakChordality {
  bool weakly_chordal = true;
  std::optional<CycleWitness> witness;
};

WeakChordality weak_chordality(const SimpleGraph& g);
bool is_weakly_chordal(const SimpleGraph& g);
bool is_chordal(const SimpleGraph& g);
bool is_complete(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
/// Vertex sets of connected components of g restricted to `within`,
/// ordered by least vertex.
std::vector<VertexMask> components(const SimpleGraph& g, VertexMask within);

/// True when the vertices of `cycle` induce exactly the cycle in the given
/// order.
bool is_induced_cycle(const SimpleGraph& g,
                      const std::vector<std::size_t>& cycle);

struct Separation {
  SimpleGraph first;      // induced on A u S
  SimpleGraph second;     // induced on V \ A
  SimpleGraph separator;  // induced on S, complete
  VertexMask first_mask = 0;
  VertexMask second_mask = 0;
  VertexMask separator_mask = 0;
};

/// Decomposition of a chordal, non-complete graph along a complete
/// separator of least size (then least index set). Disconnected input
/// splits along the empty separator. Returns nullopt for complete graphs;
/// throws std::invalid_argument for non-chordal input.
std::optional<Separation> complete_separator(const SimpleGraph& g);

/// A bijection map[i] = image in h of vertex i of g, or nullopt.
std::optional<std::vector<std::size_t>> are_isomorphic(const SimpleGraph& g,
                                                       const SimpleGraph& h);

/// An injective map from pattern vertices into g whose image induces a copy
/// of the pattern; map[i] is the image of pattern vertex i.
std::optional<std::vector<std::size_t>> has_induced(const SimpleGraph& g,
                                                    const SimpleGraph& pattern);

/// Graph6 bit order code of g's upper triangle, most significant bit first.
/// Defined for graphs with at most 11 vertices.
std::uint64_t adjacency_code(const SimpleGraph& g);

/// Canonical relabelling: vertices sorted by an isomorphism-invariant key,
/// then the least adjacency code over all orders compatible with the key.
/// Labels of the result are "0".."n-1". At most 11 vertices.
SimpleGraph canonical_form(const SimpleGraph& g);

/// Streams one canonical representative per isomorphism class of graphs on
/// n vertices (1 <= n <= 7) in increasing graph6 order.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(std::size_t n);
  std::optional<SimpleGraph> next();

 private:
  std::size_t n_;
  std::uint64_t next_code_ = 0;
  std::uint64_t end_code_;
};

std::vector<SimpleGraph> enumerate_graphs(std::size_t n);

/// Graph on vertices "0".."n-1" whose upper triangle bits, graph6 order
/// most significant first, are `code`.
SimpleGraph graph_from_code(std::size_t n, std::uint64_t code);

}  // namespace gpw
