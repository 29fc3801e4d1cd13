#include "dergraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "dergraph/error.hpp"

namespace dergraph {

DerangementSet derangement_set(const PermutationGroup& g) {
  DerangementSet d;
  d.flags.resize(g.order(), 0);
  for (Vertex i = 0; i < g.order(); ++i) {
    if (g.element(i).is_derangement()) {
      d.flags[i] = 1;
      ++d.count;
    }
  }

  // Independent count: union of the point stabilizers.
  std::vector<char> fixes_something(g.order(), 0);
  for (Point p = 0; p < g.degree(); ++p)
    for (Vertex i : stabilizer(g, p)) fixes_something[i] = 1;
  std::size_t non_derangements = 0;
  for (char c : fixes_something) non_derangements += c != 0;
  if (g.order() - non_derangements != d.count)
    throw std::logic_error("derangement count disagrees with stabilizer-union count");
  return d;
}

DerangementGraph DerangementGraph::build(std::shared_ptr<const PermutationGroup> group,
                                         std::size_t vertex_cap) {
  const PermutationGroup& g = *group;
  if (g.order() > vertex_cap)
    throw Error(Errc::cap_exceeded, "group order " + std::to_string(g.order()) +
                                        " exceeds vertex cap " + std::to_string(vertex_cap));
  DerangementGraph out;
  out.group_ = std::move(group);
  DerangementSet d = derangement_set(g);
  out.flags_ = std::move(d.flags);
  out.derangement_count_ = d.count;

  const std::size_t n = g.order();
  out.adj_ = BitMatrix(n, n);
  std::vector<Vertex> dix;
  for (Vertex i = 0; i < n; ++i)
    if (out.flags_[i]) dix.push_back(i);

  // Neighbors of h are exactly { d * h : d derangement }.
  for (Vertex i = 0; i < n; ++i)
    for (Vertex d_idx : dix) out.adj_.set(i, g.product(d_idx, i));
  return out;
}

const char* to_string(JoinKind k) {
  switch (k) {
    case JoinKind::complete_graph: return "complete-graph";
    case JoinKind::nontrivial_join: return "nontrivial-join";
    case JoinKind::not_a_join: return "not-a-join";
  }
  return "?";
}

std::vector<Vertex> compute_h_g(const PermutationGroup& g) {
  DerangementSet d = derangement_set(g);
  std::vector<Vertex> fixers;
  for (Vertex i = 0; i < g.order(); ++i)
    if (!d.flags[i]) fixers.push_back(i);
  std::vector<Vertex> h = subgroup_generated(g, fixers);

  // The generating set is invariant under conjugation, so its closure must
  // be a normal subgroup; anything else is a bug.
  for (const auto& gen : g.generators()) {
    Vertex gi = g.index_of(gen);
    for (Vertex x : h) {
      Vertex c = g.conjugate(x, gi);
      if (!std::binary_search(h.begin(), h.end(), c))
        throw std::logic_error("fixed-point subgroup failed its normality check");
    }
  }
  return h;
}

namespace {

std::vector<std::vector<Vertex>> right_cosets(const PermutationGroup& g,
                                              const std::vector<Vertex>& subgroup) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> cosets;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> coset;
    coset.reserve(subgroup.size());
    for (Vertex h : subgroup) coset.push_back(g.product(h, v));
    std::sort(coset.begin(), coset.end());
    for (Vertex u : coset) seen[u] = 1;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

} // namespace

std::vector<std::vector<Vertex>> complement_components(const DerangementGraph& graph) {
  const auto& ops = kern::active_ops();
  const std::size_t n = graph.n_vertices();
  const std::size_t w = graph.adjacency().words_per_row();

  BitRow unvisited(n), reach(n);
  unvisited.fill_first(n);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;

  long start;
  while ((start = next_set_bit(unvisited.data(), w, 0)) >= 0) {
    std::vector<Vertex> comp;
    unvisited.clear(static_cast<std::size_t>(start));
    stack.assign(1, static_cast<Vertex>(start));
    comp.push_back(static_cast<Vertex>(start));
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      // complement neighbors among unvisited: unvisited & ~adj(u)
      ops.andnot_into(reach.data(), unvisited.data(), graph.adjacency().row(u), w);
      reach.clear(u);
      for_each_bit(reach.data(), w, [&](std::size_t v) {
        unvisited.clear(v);
        stack.push_back(static_cast<Vertex>(v));
        comp.push_back(static_cast<Vertex>(v));
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return comps;
}

JoinDecomposition join_decomposition(const DerangementGraph& graph) {
  const PermutationGroup& g = graph.group();
  const auto& ops = kern::active_ops();
  const std::size_t w = graph.adjacency().words_per_row();

  JoinDecomposition jd;
  jd.h_g = compute_h_g(g);
  jd.index = g.order() / jd.h_g.size();
  jd.parts = right_cosets(g, jd.h_g);

  if (jd.h_g.size() == 1)
    jd.kind = JoinKind::complete_graph;
  else if (jd.h_g.size() == g.order())
    jd.kind = JoinKind::not_a_join;
  else
    jd.kind = JoinKind::nontrivial_join;

  jd.h_g_derangement_free = true;
  for (Vertex v : jd.h_g)
    if (graph.derangement_flags()[v]) {
      jd.h_g_derangement_free = false;
      break;
    }

  if (jd.kind == JoinKind::nontrivial_join) {
    // Every cross-part pair must be an edge.
    BitRow mask(graph.n_vertices());
    for (std::size_t a = 0; a < jd.parts.size(); ++a) {
      for (std::size_t i = 0; i < mask.words(); ++i) mask.data()[i] = 0;
      for (Vertex v : jd.parts[a]) mask.set(v);
      for (std::size_t b = 0; b < jd.parts.size(); ++b) {
        if (a == b) continue;
        for (Vertex u : jd.parts[b])
          if (!ops.subset_of(mask.data(), graph.adjacency().row(u), w))
            throw std::logic_error("join decomposition found a missing cross-part edge");
      }
    }
  }

  // Structural route: proper, non-identity, derangement-free subgroup.
  bool structural = jd.kind == JoinKind::nontrivial_join && jd.h_g_derangement_free;

  // Direct route, from the bitmap alone: the complement must split into at
  // least two components, each of which is an independent set of the graph,
  // with at least one of size > 1.
  auto comps = complement_components(graph);
  bool direct = comps.size() >= 2;
  std::size_t largest = 0;
  BitRow mask(graph.n_vertices());
  for (const auto& comp : comps) {
    largest = std::max(largest, comp.size());
    if (!direct) break;
    for (std::size_t i = 0; i < mask.words(); ++i) mask.data()[i] = 0;
    for (Vertex v : comp) mask.set(v);
    for (Vertex v : comp)
      if (ops.and_any(mask.data(), graph.adjacency().row(v), w)) {
        direct = false;
        break;
      }
  }
  direct = direct && largest >= 2;

  if (structural != direct)
    throw std::logic_error("complete-multipartite checks disagree (structural vs direct)");
  jd.complete_multipartite = structural;
  return jd;
}

std::optional<std::array<Vertex, 3>> find_triangle(const DerangementGraph& graph) {
  const auto& ops = kern::active_ops();
  const std::size_t n = graph.n_vertices();
  const std::size_t w = graph.adjacency().words_per_row();
  std::vector<Word> common(w);
  for (Vertex i = 0; i < n; ++i) {
    const Word* ri = graph.adjacency().row(i);
    long j = next_set_bit(ri, w, i + 1);
    for (; j >= 0; j = next_set_bit(ri, w, static_cast<std::size_t>(j) + 1)) {
      ops.and_into(common.data(), ri, graph.adjacency().row(static_cast<std::size_t>(j)), w);
      long k = next_set_bit(common.data(), w, static_cast<std::size_t>(j) + 1);
      if (k >= 0)
        return std::array<Vertex, 3>{i, static_cast<Vertex>(j), static_cast<Vertex>(k)};
    }
  }
  return std::nullopt;
}

BipartiteResult bipartite_check(const DerangementGraph& graph) {
  const std::size_t n = graph.n_vertices();
  const std::size_t w = graph.adjacency().words_per_row();
  BipartiteResult res;
  res.coloring.assign(n, -1);
  std::vector<long> parent(n, -1);
  std::vector<Vertex> queue;

  for (Vertex root = 0; root < n; ++root) {
    if (res.coloring[root] != -1) continue;
    res.coloring[root] = 0;
    queue.assign(1, root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex u = queue[qi];
      const Word* ru = graph.adjacency().row(u);
      for (long vl = next_set_bit(ru, w, 0); vl >= 0;
           vl = next_set_bit(ru, w, static_cast<std::size_t>(vl) + 1)) {
        Vertex v = static_cast<Vertex>(vl);
        if (res.coloring[v] == -1) {
          res.coloring[v] = static_cast<std::int8_t>(1 - res.coloring[u]);
          parent[v] = u;
          queue.push_back(v);
        } else if (res.coloring[v] == res.coloring[u]) {
          // Odd cycle: join the two BFS tree paths at their meeting point.
          std::vector<Vertex> pu{u}, pv{v};
          std::vector<char> on_pu(n, 0);
          on_pu[u] = 1;
          for (long x = parent[u]; x >= 0; x = parent[static_cast<std::size_t>(x)]) {
            pu.push_back(static_cast<Vertex>(x));
            on_pu[static_cast<std::size_t>(x)] = 1;
          }
          while (!on_pu[pv.back()]) pv.push_back(static_cast<Vertex>(parent[pv.back()]));
          Vertex meet = pv.back();
          res.odd_cycle.clear();
          for (Vertex x : pu) {
            res.odd_cycle.push_back(x);
            if (x == meet) break;
          }
          for (std::size_t k = pv.size() - 1; k-- > 0;) res.odd_cycle.push_back(pv[k]);
          res.bipartite = false;
          res.coloring.clear();
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  return res;
}

} // namespace dergraph
