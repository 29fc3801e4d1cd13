#include "dergraph/bitkernels.hpp"

#include <bit>

// Reference kernels. Plain word loops; the compiler may vectorize these, but
// correctness never depends on it. Every other variant is tested against this.

namespace dergraph::kern {

namespace {

void s_and_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void s_andnot_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void s_or_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

std::size_t s_count(const Word* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

std::size_t s_and_count(const Word* a, const Word* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

bool s_and_any(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool s_subset_of(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

} // namespace

const Ops& scalar_ops() {
  static const Ops ops{
      "scalar",  s_and_into, s_andnot_into, s_or_into,
      s_count,   s_and_count, s_and_any,    s_subset_of,
  };
  return ops;
}

} // namespace dergraph::kern
