#ifndef DERGRAPH_GROUP_HPP
#define DERGRAPH_GROUP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dergraph/perm.hpp"

namespace dergraph {

// Index of an element in a group's canonical element list; doubles as a
// vertex index in the derangement graph.
using Vertex = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 20000;

// A fully enumerated permutation group. Elements are produced by
// breadth-first closure from the identity, expanding by the generators in
// input order, each new BFS level sorted lexicographically by image array
// before it is appended. The ordering is therefore a pure function of the
// generator list, which is what makes vertex indices reproducible.
// Immutable after construction.
class PermutationGroup {
public:
  static PermutationGroup generate(std::vector<Permutation> generators,
                                   std::size_t max_order = kDefaultMaxOrder,
                                   std::string name = "");

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(Vertex i) const { return elements_[i]; }

  bool contains(const Permutation& p) const { return index_.count(p) != 0; }
  std::optional<Vertex> find(const Permutation& p) const;
  Vertex index_of(const Permutation& p) const; // throws if absent

  // Index of elements[a] * elements[b].
  Vertex product(Vertex a, Vertex b) const;
  Vertex inverse(Vertex a) const { return inverse_[a]; }
  // Index of elements[g]^-1 * elements[x] * elements[g].
  Vertex conjugate(Vertex x, Vertex g) const;

private:
  PermutationGroup() = default;

  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<Vertex> inverse_;
  std::unordered_map<Permutation, Vertex, PermHash> index_;
};

// Orbit of a point under the group's generators, sorted.
std::vector<Point> orbit(const PermutationGroup& g, Point start);

bool is_transitive(const PermutationGroup& g);

// All elements fixing the point, as sorted element indices.
std::vector<Vertex> stabilizer(const PermutationGroup& g, Point p);

// Smallest block of imprimitivity containing both points, computed by
// union-find refinement; requires a transitive group. Sorted.
std::vector<Point> minimal_block(const PermutationGroup& g, Point a, Point b);

bool is_primitive(const PermutationGroup& g); // requires a transitive group

// Whether the point set is a block: each generator maps it onto itself or
// onto a disjoint set.
bool is_block(const PermutationGroup& g, std::span<const Point> set);

// Partition of {0..n-1} into translates of one block.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;
  std::size_t block_size = 0;
};
BlockSystem block_system_from(const PermutationGroup& g, std::span<const Point> block);

// Closure of a subset of element indices under product (and hence inverse),
// always containing the identity. Sorted.
std::vector<Vertex> subgroup_generated(const PermutationGroup& g, std::span<const Vertex> subset);

// First element in canonical order that is a single cycle through all
// points. Such an element generates a regular cyclic subgroup, a clique of
// size degree in the derangement graph.
std::optional<Vertex> find_regular_cycle(const PermutationGroup& g);

} // namespace dergraph

#endif
