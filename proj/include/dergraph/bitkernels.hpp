#ifndef DERGRAPH_BITKERNELS_HPP
#define DERGRAPH_BITKERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace dergraph::kern {

using Word = std::uint64_t;

// Word-array set operations: the inner loops of graph construction and of the
// branch-and-bound solvers. One scalar reference implementation plus optional
// SIMD variants; the active set is picked at runtime from CPU capabilities and
// can be overridden (DERGRAPH_KERNEL environment variable or set_active()).
// All implementations must be bit-exact interchangeable; tests enforce it.
struct Ops {
  const char* name;
  void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
  void (*andnot_into)(Word* dst, const Word* a, const Word* b, std::size_t n); // a & ~b
  void (*or_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
  std::size_t (*count)(const Word* a, std::size_t n);
  std::size_t (*and_count)(const Word* a, const Word* b, std::size_t n);
  bool (*and_any)(const Word* a, const Word* b, std::size_t n);
  bool (*subset_of)(const Word* a, const Word* b, std::size_t n); // a & ~b == 0
};

const Ops& scalar_ops();

// All implementations usable on this machine (scalar first).
std::vector<const Ops*> available_ops();

// Active implementation; defaults to the widest supported variant.
const Ops& active_ops();

// Force a specific implementation by name ("scalar", "avx2"). Throws
// std::invalid_argument for names not available on this machine.
void set_active(std::string_view name);

} // namespace dergraph::kern

#endif
