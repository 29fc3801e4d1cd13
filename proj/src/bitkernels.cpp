#include "dergraph/bitkernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dergraph::kern {

#ifdef DERGRAPH_HAVE_AVX2
const Ops& avx2_ops_impl(); // defined in bitkernels_avx2.cpp

static bool cpu_has_avx2() {
#if defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

std::vector<const Ops*> available_ops() {
  std::vector<const Ops*> v{&scalar_ops()};
#ifdef DERGRAPH_HAVE_AVX2
  if (cpu_has_avx2()) v.push_back(&avx2_ops_impl());
#endif
  return v;
}

namespace {

const Ops* pick_default() {
  auto avail = available_ops();
  const Ops* chosen = avail.back(); // widest supported
  if (const char* env = std::getenv("DERGRAPH_KERNEL")) {
    for (const Ops* o : avail)
      if (std::string_view(o->name) == env) return o;
    // Unknown name in the environment: fall through to the default rather
    // than failing startup.
  }
  return chosen;
}

const Ops*& active_slot() {
  static const Ops* active = pick_default();
  return active;
}

} // namespace

const Ops& active_ops() { return *active_slot(); }

void set_active(std::string_view name) {
  for (const Ops* o : available_ops()) {
    if (name == o->name) {
      active_slot() = o;
      return;
    }
  }
  throw std::invalid_argument("unknown or unsupported kernel variant: " + std::string(name));
}

} // namespace dergraph::kern
