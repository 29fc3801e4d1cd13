#ifndef DERGRAPH_GRAPH_HPP
#define DERGRAPH_GRAPH_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dergraph/bitmatrix.hpp"
#include "dergraph/group.hpp"

namespace dergraph {

inline constexpr std::size_t kDefaultVertexCap = 4096;

// Derangement indicators for every element, cross-checked against the
// complementary count obtained by unioning all point stabilizers.
struct DerangementSet {
  std::vector<char> flags; // flags[i] != 0 iff element i has no fixed point
  std::size_t count = 0;
};
DerangementSet derangement_set(const PermutationGroup& g);

// Cayley graph of the group whose connection set is its derangements:
// vertices i and j are adjacent iff elements[i] * elements[j]^-1 is a
// derangement. Immutable after build().
class DerangementGraph {
public:
  static DerangementGraph build(std::shared_ptr<const PermutationGroup> group,
                                std::size_t vertex_cap = kDefaultVertexCap);

  const PermutationGroup& group() const { return *group_; }
  std::shared_ptr<const PermutationGroup> group_ptr() const { return group_; }

  std::size_t n_vertices() const { return adj_.rows(); }
  const BitMatrix& adjacency() const { return adj_; }
  bool adjacent(Vertex i, Vertex j) const { return adj_.get(i, j); }

  const std::vector<char>& derangement_flags() const { return flags_; }
  std::size_t derangement_count() const { return derangement_count_; }

  // Tampering hook for negative tests of the verification suite.
  BitMatrix& mutable_adjacency_for_test() { return adj_; }

private:
  std::shared_ptr<const PermutationGroup> group_;
  BitMatrix adj_;
  std::vector<char> flags_;
  std::size_t derangement_count_ = 0;
};

enum class JoinKind { complete_graph, nontrivial_join, not_a_join };

const char* to_string(JoinKind k);

// Decomposition of the graph induced by H = <elements with a fixed point>:
// the complement's connected components are exactly the right cosets of H,
// so the graph is a join of the cosets precisely when H is proper.
struct JoinDecomposition {
  std::vector<Vertex> h_g;               // sorted element indices of H
  std::size_t index = 0;                 // [G : H]
  std::vector<std::vector<Vertex>> parts; // right cosets of H; parts[0] contains vertex 0
  JoinKind kind = JoinKind::not_a_join;
  bool complete_multipartite = false;
  bool h_g_derangement_free = false;
};

// Subgroup generated by all elements with a fixed point; verified closed
// under conjugation by the group's generators.
std::vector<Vertex> compute_h_g(const PermutationGroup& g);

// Classifies the join structure. The complete-multipartite answer is
// computed twice, structurally from H and directly from the bitmap; a
// disagreement is a bug and throws std::logic_error.
JoinDecomposition join_decomposition(const DerangementGraph& graph);

// Connected components of the complement graph, each sorted, ordered by
// least vertex. Computed from the bitmap alone.
std::vector<std::vector<Vertex>> complement_components(const DerangementGraph& graph);

// Lexicographically least triangle (i < j < k), if any.
std::optional<std::array<Vertex, 3>> find_triangle(const DerangementGraph& graph);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<std::int8_t> coloring;  // valid 2-coloring when bipartite
  std::vector<Vertex> odd_cycle;      // closed odd walk witness otherwise
};
BipartiteResult bipartite_check(const DerangementGraph& graph);

} // namespace dergraph

#endif
