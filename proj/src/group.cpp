#include "dergraph/group.hpp"

#include <algorithm>
#include <numeric>

#include "dergraph/error.hpp"

namespace dergraph {

PermutationGroup PermutationGroup::generate(std::vector<Permutation> generators,
                                            std::size_t max_order, std::string name) {
  if (generators.empty())
    throw Error(Errc::invalid_argument, "generator list must be nonempty");
  const std::size_t degree = generators[0].degree();
  if (degree < 1) throw Error(Errc::invalid_argument, "degree must be at least 1");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(Errc::invalid_argument, "generators have mismatched degrees");
  if (max_order < 1) throw Error(Errc::invalid_argument, "max_order must be at least 1");

  PermutationGroup grp;
  grp.degree_ = degree;
  grp.name_ = std::move(name);
  grp.generators_ = std::move(generators);

  grp.elements_.push_back(Permutation::identity(degree));
  grp.index_.emplace(grp.elements_[0], 0);

  std::vector<Vertex> frontier{0};
  while (!frontier.empty()) {
    std::vector<Permutation> fresh;
    for (Vertex x : frontier) {
      for (const auto& s : grp.generators_) {
        Permutation y = grp.elements_[x] * s;
        if (grp.index_.emplace(y, 0).second) fresh.push_back(std::move(y));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    frontier.clear();
    for (auto& y : fresh) {
      if (grp.elements_.size() >= max_order)
        throw Error(Errc::cap_exceeded, "group closure exceeds max_order " +
                                            std::to_string(max_order));
      Vertex id = static_cast<Vertex>(grp.elements_.size());
      grp.index_[y] = id;
      grp.elements_.push_back(std::move(y));
      frontier.push_back(id);
    }
  }

  grp.inverse_.resize(grp.elements_.size());
  for (Vertex i = 0; i < grp.elements_.size(); ++i)
    grp.inverse_[i] = grp.index_.at(grp.elements_[i].inverse());
  return grp;
}

std::optional<Vertex> PermutationGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex PermutationGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw Error(Errc::invalid_argument, "permutation is not an element of the group");
  return it->second;
}

Vertex PermutationGroup::product(Vertex a, Vertex b) const {
  return index_.at(elements_[a] * elements_[b]);
}

Vertex PermutationGroup::conjugate(Vertex x, Vertex g) const {
  return index_.at(elements_[inverse_[g]] * elements_[x] * elements_[g]);
}

std::vector<Point> orbit(const PermutationGroup& g, Point start) {
  if (start >= g.degree())
    throw Error(Errc::invalid_argument, "orbit: point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{start}, frontier{start};
  seen[start] = true;
  while (!frontier.empty()) {
    std::vector<Point> next;
    for (Point p : frontier) {
      for (const auto& s : g.generators()) {
        Point q = s(p);
        if (!seen[q]) {
          seen[q] = true;
          out.push_back(q);
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(const PermutationGroup& g) { return orbit(g, 0).size() == g.degree(); }

std::vector<Vertex> stabilizer(const PermutationGroup& g, Point p) {
  if (p >= g.degree())
    throw Error(Errc::invalid_argument, "stabilizer: point out of range");
  std::vector<Vertex> out;
  for (Vertex i = 0; i < g.order(); ++i)
    if (g.element(i)(p) == p) out.push_back(i);
  return out;
}

std::vector<Point> minimal_block(const PermutationGroup& g, Point a, Point b) {
  if (!is_transitive(g))
    throw Error(Errc::intransitive, "minimal_block requires a transitive group");
  if (a == b || a >= g.degree() || b >= g.degree())
    throw Error(Errc::invalid_argument, "minimal_block needs two distinct points in range");

  const std::size_t n = g.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<std::pair<Point, Point>> queue;
  auto merge = [&](Point x, Point y) {
    Point rx = find(x), ry = find(y);
    if (rx == ry) return;
    if (rx > ry) std::swap(rx, ry);
    parent[ry] = rx;
    queue.emplace_back(x, y);
  };

  merge(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const auto& s : g.generators()) merge(s(x), s(y));
  }

  Point root = find(a);
  std::vector<Point> block;
  for (std::size_t p = 0; p < n; ++p)
    if (find(static_cast<Point>(p)) == root) block.push_back(static_cast<Point>(p));
  return block;
}

bool is_primitive(const PermutationGroup& g) {
  if (!is_transitive(g))
    throw Error(Errc::intransitive, "is_primitive requires a transitive group");
  for (Point b = 1; b < g.degree(); ++b)
    if (minimal_block(g, 0, b).size() != g.degree()) return false;
  return true;
}

bool is_block(const PermutationGroup& g, std::span<const Point> set) {
  std::vector<bool> in(g.degree(), false);
  for (Point p : set) in[p] = true;
  for (const auto& s : g.generators()) {
    std::size_t inside = 0;
    for (Point p : set)
      if (in[s(p)]) ++inside;
    if (inside != 0 && inside != set.size()) return false;
  }
  return true;
}

BlockSystem block_system_from(const PermutationGroup& g, std::span<const Point> block) {
  std::vector<Point> sorted(block.begin(), block.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::vector<Point>> blocks{sorted};
  std::vector<std::vector<Point>> frontier{sorted};
  auto known = [&](const std::vector<Point>& b) {
    return std::find(blocks.begin(), blocks.end(), b) != blocks.end();
  };
  while (!frontier.empty()) {
    std::vector<std::vector<Point>> next;
    for (const auto& b : frontier) {
      for (const auto& s : g.generators()) {
        std::vector<Point> img;
        img.reserve(b.size());
        for (Point p : b) img.push_back(s(p));
        std::sort(img.begin(), img.end());
        if (!known(img)) {
          blocks.push_back(img);
          next.push_back(std::move(img));
        }
      }
    }
    frontier = std::move(next);
  }

  std::size_t covered = 0;
  for (const auto& b : blocks) covered += b.size();
  if (covered != g.degree() || blocks.size() * sorted.size() != g.degree())
    throw Error(Errc::invalid_argument, "set does not generate a block system");
  std::sort(blocks.begin(), blocks.end());
  return BlockSystem{std::move(blocks), sorted.size()};
}

std::vector<Vertex> subgroup_generated(const PermutationGroup& g,
                                       std::span<const Vertex> subset) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<Vertex> gens;
  for (Vertex v : subset) {
    if (v >= g.order())
      throw Error(Errc::invalid_argument, "subgroup_generated: index out of range");
    if (!in[v]) {
      in[v] = true;
      gens.push_back(v);
    }
    Vertex vi = g.inverse(v);
    if (!in[vi]) {
      in[vi] = true;
      gens.push_back(vi);
    }
  }

  std::vector<Vertex> frontier;
  for (Vertex i = 0; i < g.order(); ++i)
    if (in[i]) frontier.push_back(i);
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      for (Vertex s : gens) {
        Vertex y = g.product(x, s);
        if (!in[y]) {
          in[y] = true;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Vertex> out;
  for (Vertex i = 0; i < g.order(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::optional<Vertex> find_regular_cycle(const PermutationGroup& g) {
  const std::size_t n = g.degree();
  for (Vertex i = 0; i < g.order(); ++i) {
    const Permutation& p = g.element(i);
    Point cur = p(0);
    std::size_t len = 1;
    while (cur != 0 && len <= n) {
      cur = p(cur);
      ++len;
    }
    if (len == n) return i;
  }
  return std::nullopt;
}

} // namespace dergraph
