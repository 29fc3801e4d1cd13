#ifndef DERGRAPH_PERM_HPP
#define DERGRAPH_PERM_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dergraph {

using Point = std::uint16_t;

// A permutation of {0..n-1} stored as its image array.
// Products use the right-action convention: (a * b) sends p to b(a(p)),
// i.e. "apply a, then b". Image arrays compare lexicographically.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  // Validates that images is a bijection on {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  std::vector<Point> fixed_points() const;
  bool is_derangement() const;

  // Nontrivial cycles, each rotated to start at its least point,
  // ordered by that least point.
  std::vector<std::vector<Point>> cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Accepts 1-based cycle notation, e.g. "(1,2)(3,4)" or "()", with arbitrary
// whitespace, or a 0-based image list in brackets, e.g. "[1,0,3,2]".
// Points absent from the cycles are fixed.
Permutation parse_permutation(std::string_view text, std::size_t degree);

// 1-based cycle notation; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

} // namespace dergraph

#endif
