#ifndef DERGRAPH_EXTREMAL_HPP
#define DERGRAPH_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dergraph/graph.hpp"
#include "dergraph/rational.hpp"

namespace dergraph {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::size_t kDefaultEnumCap = 10'000;

struct SolveOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Disables the join shortcuts and the matched clique-coclique bound exit in
  // max_coclique, forcing the plain branch-and-bound route. Used by the
  // cross-checking suites.
  bool force_generic = false;
};

enum class CocliqueRoute {
  multipartite_part, // complete multipartite: a part is maximum
  join_recursion,    // solved on the induced subgraph of the identity part
  bound_match,       // best known coclique met the clique-cover upper bound
  search,            // branch and bound ran to completion
  exhausted,         // budget ran out; only bounds are known
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<Vertex> witness;
  bool exact = false;
  std::uint64_t nodes = 0;
};

struct CocliqueResult {
  std::size_t size = 0; // best coclique found (a lower bound when !exact)
  std::vector<Vertex> witness;
  bool exact = false;
  std::size_t lower = 0;
  std::size_t upper = 0;
  CocliqueRoute route = CocliqueRoute::search;
  std::uint64_t nodes = 0;
};

// Exact maximum clique by branch and bound with greedy-coloring bounds,
// seeded with a regular cyclic subgroup when one exists. Cliques in a
// derangement graph map a point to pairwise distinct images, so clique size
// is capped by the degree; hitting the cap ends the search.
CliqueResult max_clique(const DerangementGraph& graph, const SolveOptions& opts = {});

// Exact maximum coclique (independent set). Structural shortcuts first:
// a complete multipartite graph has a part as maximum coclique; a
// nontrivial join restricts to the identity part. The generic route fixes
// vertex 0 (every vertex of a vertex-transitive graph lies in some maximum
// coclique) and runs branch and bound on the complement, bounded above by
// n / (best clique found). On budget exhaustion returns bounds.
CocliqueResult max_coclique(const DerangementGraph& graph, const SolveOptions& opts = {});

struct DensityRecord {
  std::size_t alpha = 0;
  std::size_t omega = 0;
  std::optional<Rational> rho; // set iff exact
  bool exact = false;
  std::size_t alpha_lower = 0;
  std::size_t alpha_upper = 0;
  CocliqueResult coclique;
  CliqueResult clique;
};

// rho = degree * alpha / |G| as an exact rational; transitive groups only.
DensityRecord intersection_density(const DerangementGraph& graph, const SolveOptions& opts = {});

// The n^2 sets {g : g maps p to q}, indexed p * n + q, each verified to be a
// coclique of size |G| / degree. Transitive groups only.
std::vector<std::vector<Vertex>> canonical_cocliques(const DerangementGraph& graph);

enum class Flag : std::int8_t { no = 0, yes = 1, indeterminate = 2 };

enum class CocliqueClass { canonical, union_of_canonical_span, other };

struct CocliqueCertificate {
  std::vector<Vertex> vertices;
  CocliqueClass classification = CocliqueClass::other;
};

struct EkrOptions {
  std::size_t enum_cap = kDefaultEnumCap;      // max number of maximum cocliques
  std::uint64_t enum_node_budget = 20'000'000; // backtracking node budget
};

struct EkrReport {
  Flag ekr = Flag::indeterminate;
  Flag strict_ekr = Flag::indeterminate;
  Flag ekr_module = Flag::indeterminate;
  bool enumeration_complete = false;
  std::vector<CocliqueCertificate> maximum_cocliques; // filled when enumeration completed
};

// EKR: alpha equals |G| / degree. Strict: every maximum coclique is
// canonical. Module: every maximum coclique's indicator vector lies in the
// rational span of the canonical indicators (exact Gaussian elimination).
// Requires an exact alpha; if the enumeration caps are hit, the strict and
// module flags come back indeterminate.
EkrReport ekr_flags(const DerangementGraph& graph, const DensityRecord& density,
                    const EkrOptions& opts = {});

// Enumerate every maximum coclique (given exact alpha). Returns nullopt if
// either cap is exceeded.
std::optional<std::vector<std::vector<Vertex>>> enumerate_maximum_cocliques(
    const DerangementGraph& graph, std::size_t alpha, const EkrOptions& opts = {});

// Whether the conjugates of the given proper subgroups cover the group.
// Each subgroup is validated (closed, proper); throws otherwise.
bool check_normal_covering(const PermutationGroup& g,
                           const std::vector<std::vector<Vertex>>& subgroups);

// Verifies density monotonicity for a transitive subgroup h <= g acting on
// the same points: returns rho(g) <= rho(h). Throws if h is not a subgroup
// of g, either is intransitive, or either density is inexact.
bool density_monotonicity_check(const DerangementGraph& g_graph,
                                const DerangementGraph& h_graph,
                                const SolveOptions& opts = {});

} // namespace dergraph

#endif
