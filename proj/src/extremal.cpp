#include "dergraph/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "dergraph/error.hpp"

namespace dergraph {

namespace {

void verify_clique(const BitMatrix& adj, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!adj.get(vs[i], vs[j]))
        throw std::logic_error("clique witness failed adjacency re-verification");
}

void verify_coclique(const BitMatrix& adj, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adj.get(vs[i], vs[j]))
        throw std::logic_error("coclique witness failed non-adjacency re-verification");
}

// Tomita-style maximum clique: greedy coloring bound, candidates retired in
// reverse color order, deterministic ascending-index scans throughout.
class CliqueSearch {
public:
  CliqueSearch(const BitMatrix& adj, std::size_t cap, std::uint64_t budget)
      : adj_(adj), w_(adj.words_per_row()), cap_(cap), budget_(budget) {}

  // base: vertices fixed into every clique explored; cands: allowed extensions;
  // best0: incumbent (any valid clique of the whole graph).
  CliqueResult run(const std::vector<Vertex>& base, const BitRow& cands,
                   std::vector<Vertex> best0) {
    best_ = std::move(best0);
    cur_ = base;
    if (best_.size() < cap_ && !(cur_.size() >= cap_)) expand(cands.data(), 0);
    CliqueResult r;
    r.size = best_.size();
    r.witness = best_;
    r.exact = !exhausted_ || best_.size() >= cap_;
    r.nodes = nodes_;
    return r;
  }

private:
  struct Scratch {
    std::vector<Word> remaining, child, uncolored, avail;
    std::vector<Vertex> order;
    std::vector<std::size_t> color;
  };

  void expand(const Word* cands, std::size_t depth) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (scratch_.size() <= depth) scratch_.resize(depth + 1);
    Scratch& sc = scratch_[depth];
    const auto& ops = kern::active_ops();

    // Greedy coloring; vertices come out grouped by color, ascending.
    sc.uncolored.assign(cands, cands + w_);
    sc.avail.resize(w_);
    sc.order.clear();
    sc.color.clear();
    std::size_t c = 0;
    while (true) {
      long v0 = next_set_bit(sc.uncolored.data(), w_, 0);
      if (v0 < 0) break;
      ++c;
      sc.avail = sc.uncolored;
      long v = v0;
      while (v >= 0) {
        sc.order.push_back(static_cast<Vertex>(v));
        sc.color.push_back(c);
        clear_bit(sc.uncolored.data(), static_cast<std::size_t>(v));
        clear_bit(sc.avail.data(), static_cast<std::size_t>(v));
        ops.andnot_into(sc.avail.data(), sc.avail.data(),
                        adj_.row(static_cast<std::size_t>(v)), w_);
        v = next_set_bit(sc.avail.data(), w_, static_cast<std::size_t>(v) + 1);
      }
    }

    if (sc.order.empty()) {
      if (cur_.size() > best_.size()) {
        best_ = cur_;
        if (best_.size() >= cap_) done_ = true;
      }
      return;
    }

    sc.remaining.assign(cands, cands + w_);
    sc.child.resize(w_);
    for (std::size_t idx = sc.order.size(); idx-- > 0;) {
      if (cur_.size() + sc.color[idx] <= best_.size()) return;
      Vertex v = sc.order[idx];
      cur_.push_back(v);
      ops.and_into(sc.child.data(), sc.remaining.data(), adj_.row(v), w_);
      bool leaf = next_set_bit(sc.child.data(), w_, 0) < 0;
      if (leaf) {
        if (cur_.size() > best_.size()) {
          best_ = cur_;
          if (best_.size() >= cap_) done_ = true;
        }
      } else {
        expand(sc.child.data(), depth + 1);
      }
      cur_.pop_back();
      if (done_ || exhausted_) return;
      clear_bit(sc.remaining.data(), v);
    }
  }

  const BitMatrix& adj_;
  std::size_t w_;
  std::size_t cap_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool done_ = false;
  std::vector<Vertex> cur_, best_;
  std::vector<Scratch> scratch_;
};

std::vector<Vertex> greedy_clique(const BitMatrix& adj, std::size_t n) {
  const auto& ops = kern::active_ops();
  const std::size_t w = adj.words_per_row();
  BitRow cand(n);
  cand.fill_first(n);
  std::vector<Vertex> out;
  long v = next_set_bit(cand.data(), w, 0);
  while (v >= 0) {
    out.push_back(static_cast<Vertex>(v));
    ops.and_into(cand.data(), cand.data(), adj.row(static_cast<std::size_t>(v)), w);
    v = next_set_bit(cand.data(), w, static_cast<std::size_t>(v) + 1);
  }
  return out;
}

// Smallest orbit size: in any clique of a derangement graph, all elements
// move a fixed point to pairwise distinct images inside that point's orbit,
// so this is a hard upper bound on clique size.
std::size_t min_orbit_size(const PermutationGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::size_t best = g.degree();
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p]) continue;
    auto orb = orbit(g, p);
    for (Point q : orb) seen[q] = true;
    best = std::min(best, orb.size());
  }
  return best;
}

BitMatrix complement_of(const BitMatrix& adj, std::size_t n) {
  BitMatrix comp(n, n);
  const std::size_t w = adj.words_per_row();
  const std::size_t tail = n % kWordBits;
  for (std::size_t i = 0; i < n; ++i) {
    Word* dst = comp.row(i);
    const Word* src = adj.row(i);
    for (std::size_t k = 0; k < w; ++k) dst[k] = ~src[k];
    if (tail) dst[w - 1] &= (Word(1) << tail) - 1;
    clear_bit(dst, i);
  }
  return comp;
}

} // namespace

CliqueResult max_clique(const DerangementGraph& graph, const SolveOptions& opts) {
  const PermutationGroup& g = graph.group();
  const std::size_t n = graph.n_vertices();
  const std::size_t cap = min_orbit_size(g);

  std::vector<Vertex> seed;
  if (auto cyc = find_regular_cycle(g)) {
    std::vector<Vertex> one{*cyc};
    seed = subgroup_generated(g, one);
  }
  auto greedy = greedy_clique(graph.adjacency(), n);
  if (greedy.size() > seed.size()) seed = std::move(greedy);
  verify_clique(graph.adjacency(), seed);

  // Every vertex of a Cayley graph lies in some maximum clique (translate),
  // so the search is rooted at vertex 0.
  BitRow cands(n);
  const std::size_t w = graph.adjacency().words_per_row();
  for (std::size_t k = 0; k < w; ++k) cands.data()[k] = graph.adjacency().row(0)[k];

  CliqueSearch search(graph.adjacency(), cap, opts.node_budget);
  CliqueResult r = search.run({0}, cands, std::move(seed));
  verify_clique(graph.adjacency(), r.witness);
  return r;
}

namespace {

CocliqueResult coclique_on_graph(const DerangementGraph& graph, const SolveOptions& opts,
                                 const JoinDecomposition* precomputed);

// Nontrivial join: solve on the identity part, which is the derangement
// graph of the fixed-point subgroup acting on the same points.
CocliqueResult coclique_via_part(const DerangementGraph& graph, const JoinDecomposition& jd,
                                 const SolveOptions& opts) {
  const PermutationGroup& g = graph.group();
  std::vector<Permutation> sub_elems;
  sub_elems.reserve(jd.h_g.size());
  for (Vertex v : jd.h_g) sub_elems.push_back(g.element(v));
  auto sub = std::make_shared<const PermutationGroup>(
      PermutationGroup::generate(sub_elems, jd.h_g.size(), g.name() + "|part"));
  DerangementGraph part = DerangementGraph::build(sub, sub->order());

  CocliqueResult inner = coclique_on_graph(part, opts, nullptr);
  CocliqueResult r = inner;
  r.route = CocliqueRoute::join_recursion;
  r.witness.clear();
  for (Vertex v : inner.witness) r.witness.push_back(g.index_of(sub->element(v)));
  std::sort(r.witness.begin(), r.witness.end());
  verify_coclique(graph.adjacency(), r.witness);
  return r;
}

CocliqueResult coclique_on_graph(const DerangementGraph& graph, const SolveOptions& opts,
                                 const JoinDecomposition* precomputed) {
  const PermutationGroup& g = graph.group();
  const std::size_t n = graph.n_vertices();

  if (!opts.force_generic) {
    JoinDecomposition local;
    const JoinDecomposition* jd = precomputed;
    if (!jd) {
      local = join_decomposition(graph);
      jd = &local;
    }
    if (jd->complete_multipartite) {
      CocliqueResult r;
      r.size = jd->h_g.size();
      r.witness = jd->h_g;
      r.exact = true;
      r.lower = r.upper = r.size;
      r.route = CocliqueRoute::multipartite_part;
      verify_coclique(graph.adjacency(), r.witness);
      return r;
    }
    if (jd->kind == JoinKind::nontrivial_join) return coclique_via_part(graph, *jd, opts);
  }

  // Best clique found gives the clique-cover style upper bound n / omega for
  // this vertex-transitive graph.
  CliqueResult cliq = max_clique(graph, opts);
  std::size_t upper = opts.force_generic ? n : n / std::max<std::size_t>(cliq.size, 1);

  // Seeds: the largest point stabilizer is always a coclique; so is a greedy
  // independent set.
  std::size_t best_point = 0, best_orb = g.degree() + 1;
  for (Point p = 0; p < g.degree(); ++p) {
    std::size_t o = orbit(g, p).size();
    if (o < best_orb) {
      best_orb = o;
      best_point = p;
    }
  }
  std::vector<Vertex> seed = stabilizer(g, static_cast<Point>(best_point));
  if (opts.force_generic) seed.clear();

  BitMatrix comp = complement_of(graph.adjacency(), n);
  {
    auto greedy = greedy_clique(comp, n);
    if (greedy.size() > seed.size()) seed = std::move(greedy);
  }
  verify_coclique(graph.adjacency(), seed);

  CocliqueResult r;
  if (!opts.force_generic && seed.size() >= upper) {
    r.size = seed.size();
    r.witness = std::move(seed);
    r.exact = true;
    r.lower = r.upper = r.size;
    r.route = CocliqueRoute::bound_match;
    r.nodes = cliq.nodes;
    verify_coclique(graph.adjacency(), r.witness);
    return r;
  }

  const std::size_t w = comp.words_per_row();
  BitRow cands(n);
  for (std::size_t k = 0; k < w; ++k) cands.data()[k] = comp.row(0)[k];
  CliqueSearch search(comp, upper, opts.node_budget);
  CliqueResult found = search.run({0}, cands, std::move(seed));

  r.size = found.size;
  r.witness = std::move(found.witness);
  std::sort(r.witness.begin(), r.witness.end());
  r.exact = found.exact;
  r.lower = r.size;
  r.upper = r.exact ? r.size : upper;
  r.route = r.exact ? CocliqueRoute::search : CocliqueRoute::exhausted;
  r.nodes = cliq.nodes + found.nodes;
  verify_coclique(graph.adjacency(), r.witness);
  return r;
}

} // namespace

CocliqueResult max_coclique(const DerangementGraph& graph, const SolveOptions& opts) {
  return coclique_on_graph(graph, opts, nullptr);
}

DensityRecord intersection_density(const DerangementGraph& graph, const SolveOptions& opts) {
  const PermutationGroup& g = graph.group();
  if (!is_transitive(g))
    throw Error(Errc::intransitive, "intersection density is defined for transitive groups");

  DensityRecord d;
  d.clique = max_clique(graph, opts);
  d.coclique = max_coclique(graph, opts);
  d.alpha = d.coclique.size;
  d.omega = d.clique.size;
  d.exact = d.coclique.exact;
  d.alpha_lower = d.coclique.lower;
  d.alpha_upper = d.coclique.upper;

  const std::size_t n = g.degree();
  // Products of witnessed clique and coclique sizes can never beat the
  // vertex count in a vertex-transitive graph.
  if (d.alpha * d.omega > g.order())
    throw std::logic_error("clique-coclique bound violated; solver bug");
  if (d.exact) {
    d.rho = Rational(static_cast<std::int64_t>(n * d.alpha),
                     static_cast<std::int64_t>(g.order()));
    if (*d.rho < Rational(1)) throw std::logic_error("intersection density below 1");
    if (n >= 2 && !(*d.rho < Rational(static_cast<std::int64_t>(n))))
      throw std::logic_error("intersection density not below the degree");
    if (n >= 3 && *d.rho > Rational(static_cast<std::int64_t>(n), 3))
      throw std::logic_error("intersection density above degree/3");
  }
  return d;
}

std::vector<std::vector<Vertex>> canonical_cocliques(const DerangementGraph& graph) {
  const PermutationGroup& g = graph.group();
  if (!is_transitive(g))
    throw Error(Errc::intransitive, "canonical cocliques are defined for transitive groups");
  const std::size_t n = g.degree();
  const std::size_t expected = g.order() / n;

  std::vector<std::vector<Vertex>> sets(n * n);
  for (Vertex i = 0; i < g.order(); ++i) {
    const Permutation& p = g.element(i);
    for (Point a = 0; a < n; ++a) sets[a * n + p(a)].push_back(i);
  }
  for (const auto& s : sets) {
    if (s.size() != expected)
      throw std::logic_error("canonical coclique has unexpected size");
    verify_coclique(graph.adjacency(), s);
  }
  return sets;
}

namespace {

// Row-echelon basis over exact rationals with membership queries.
class RationalSpan {
public:
  explicit RationalSpan(std::size_t dim) : dim_(dim) {}

  void insert(std::vector<Rational> v) {
    reduce(v);
    for (std::size_t c = 0; c < dim_; ++c) {
      if (v[c] != Rational(0)) {
        Rational inv = Rational(1) / v[c];
        for (std::size_t k = c; k < dim_; ++k) v[k] = v[k] * inv;
        rows_.emplace(c, std::move(v));
        return;
      }
    }
  }

  bool contains(std::vector<Rational> v) const {
    reduce(v);
    for (const auto& x : v)
      if (x != Rational(0)) return false;
    return true;
  }

private:
  void reduce(std::vector<Rational>& v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == Rational(0)) continue;
      Rational f = v[pivot];
      for (std::size_t k = pivot; k < dim_; ++k) v[k] = v[k] - f * row[k];
    }
  }

  std::size_t dim_;
  std::map<std::size_t, std::vector<Rational>> rows_; // pivot column -> row
};

std::vector<Rational> indicator(const std::vector<Vertex>& set, std::size_t dim) {
  std::vector<Rational> v(dim, Rational(0));
  for (Vertex x : set) v[x] = Rational(1);
  return v;
}

} // namespace

std::optional<std::vector<std::vector<Vertex>>> enumerate_maximum_cocliques(
    const DerangementGraph& graph, std::size_t alpha, const EkrOptions& opts) {
  const std::size_t n = graph.n_vertices();
  const std::size_t w = graph.adjacency().words_per_row();
  const auto& ops = kern::active_ops();

  std::vector<std::vector<Vertex>> found;
  std::vector<Vertex> cur;
  std::vector<BitRow> masks(alpha + 1, BitRow(n));
  masks[0].fill_first(n);
  std::uint64_t nodes = 0;
  bool aborted = false;

  std::vector<std::vector<Vertex>> cand_lists(alpha + 1);

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (aborted) return;
    if (++nodes > opts.enum_node_budget) {
      aborted = true;
      return;
    }
    if (cur.size() == alpha) {
      if (found.size() >= opts.enum_cap) {
        aborted = true;
        return;
      }
      found.push_back(cur);
      return;
    }
    auto& cands = cand_lists[depth];
    cands.clear();
    for_each_bit(masks[depth].data(), w, [&](std::size_t v) {
      cands.push_back(static_cast<Vertex>(v));
    });
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (cur.size() + (cands.size() - k) < alpha) break;
      Vertex v = cands[k];
      // survivors past v that are non-neighbors of v
      ops.andnot_into(masks[depth + 1].data(), masks[depth].data(), graph.adjacency().row(v), w);
      for (std::size_t i = 0; i <= v / kWordBits && i < w; ++i) {
        if (i < v / kWordBits)
          masks[depth + 1].data()[i] = 0;
        else
          masks[depth + 1].data()[i] &= ~((Word(2) << (v % kWordBits)) - 1);
      }
      cur.push_back(v);
      self(self, depth + 1);
      cur.pop_back();
      if (aborted) return;
    }
  };
  rec(rec, 0);

  if (aborted) return std::nullopt;
  std::sort(found.begin(), found.end());
  return found;
}

EkrReport ekr_flags(const DerangementGraph& graph, const DensityRecord& density,
                    const EkrOptions& opts) {
  EkrReport rep;
  const PermutationGroup& g = graph.group();
  if (!is_transitive(g))
    throw Error(Errc::intransitive, "EKR flags are defined for transitive groups");
  if (!density.exact) return rep; // everything stays indeterminate

  const std::size_t canon_size = g.order() / g.degree();
  rep.ekr = density.alpha == canon_size ? Flag::yes : Flag::no;

  auto all = enumerate_maximum_cocliques(graph, density.alpha, opts);
  if (!all) return rep; // strict and module stay indeterminate

  rep.enumeration_complete = true;
  auto canon = canonical_cocliques(graph);
  for (auto& s : canon) std::sort(s.begin(), s.end());
  std::set<std::vector<Vertex>> canon_set(canon.begin(), canon.end());

  RationalSpan span(g.order());
  for (const auto& s : canon) span.insert(indicator(s, g.order()));

  bool all_canonical = true, all_in_span = true;
  for (const auto& m : *all) {
    CocliqueCertificate cert;
    cert.vertices = m;
    if (canon_set.count(m)) {
      cert.classification = CocliqueClass::canonical;
    } else if (span.contains(indicator(m, g.order()))) {
      cert.classification = CocliqueClass::union_of_canonical_span;
      all_canonical = false;
    } else {
      cert.classification = CocliqueClass::other;
      all_canonical = false;
      all_in_span = false;
    }
    rep.maximum_cocliques.push_back(std::move(cert));
  }

  rep.strict_ekr = (rep.ekr == Flag::yes && all_canonical) ? Flag::yes : Flag::no;
  rep.ekr_module = all_in_span ? Flag::yes : Flag::no;
  return rep;
}

bool check_normal_covering(const PermutationGroup& g,
                           const std::vector<std::vector<Vertex>>& subgroups) {
  if (subgroups.empty())
    throw Error(Errc::invalid_argument, "covering check needs at least one subgroup");
  std::vector<char> covered(g.order(), 0);
  for (const auto& raw : subgroups) {
    std::vector<Vertex> h(raw.begin(), raw.end());
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    auto closure = subgroup_generated(g, h);
    if (closure != h && !(h.empty() || closure == h)) {
      // allow the caller to omit the identity but nothing else
      std::vector<Vertex> with_id = h;
      if (with_id.empty() || with_id[0] != 0) with_id.insert(with_id.begin(), 0);
      if (closure != with_id)
        throw Error(Errc::invalid_argument, "input set is not a closed subgroup");
      h = std::move(with_id);
    }
    if (h.size() >= g.order())
      throw Error(Errc::invalid_argument, "covering subgroups must be proper");
    for (Vertex conj_by = 0; conj_by < g.order(); ++conj_by)
      for (Vertex x : h) covered[g.conjugate(x, conj_by)] = 1;
  }
  for (char c : covered)
    if (!c) return false;
  return true;
}

bool density_monotonicity_check(const DerangementGraph& g_graph,
                                const DerangementGraph& h_graph, const SolveOptions& opts) {
  const PermutationGroup& g = g_graph.group();
  const PermutationGroup& h = h_graph.group();
  if (g.degree() != h.degree())
    throw Error(Errc::invalid_argument, "groups act on different point sets");
  for (const auto& e : h.elements())
    if (!g.contains(e))
      throw Error(Errc::invalid_argument, "second group is not a subgroup of the first");
  if (!is_transitive(g) || !is_transitive(h))
    throw Error(Errc::intransitive, "density monotonicity needs transitive groups");

  DensityRecord dg = intersection_density(g_graph, opts);
  DensityRecord dh = intersection_density(h_graph, opts);
  if (!dg.exact || !dh.exact)
    throw Error(Errc::invalid_argument, "density monotonicity needs exact densities");
  return *dg.rho <= *dh.rho;
}

} // namespace dergraph
