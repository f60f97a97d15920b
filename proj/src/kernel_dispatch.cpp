#include <atomic>

#include "lechlab/errors.hpp"
#include "lechlab/kernel.hpp"

namespace lechlab::kernel {

namespace {

using CountFn = int64_t (*)(const int32_t*, int, const int32_t*, int);

CountFn pickBest() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return &countAvx2;
#endif
#if defined(__aarch64__)
  return &countNeon;
#endif
  return &countScalar;
}

std::atomic<CountFn> gActive{nullptr};

CountFn active() {
  CountFn fn = gActive.load(std::memory_order_acquire);
  if (!fn) {
    fn = pickBest();
    gActive.store(fn, std::memory_order_release);
  }
  return fn;
}

}  // namespace

int64_t count(const int32_t* box, int d, const int32_t* gens, int m) {
  return active()(box, d, gens, m);
}

std::string activeKernel() {
  const CountFn fn = active();
#if defined(__x86_64__) || defined(_M_X64)
  if (fn == &countAvx2) return "avx2";
#endif
#if defined(__aarch64__)
  if (fn == &countNeon) return "neon";
#endif
  return "scalar";
}

void forceKernel(const std::string& name) {
  if (name == "auto") {
    gActive.store(pickBest(), std::memory_order_release);
    return;
  }
  if (name == "scalar") {
    gActive.store(&countScalar, std::memory_order_release);
    return;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (name == "avx2") {
    if (!__builtin_cpu_supports("avx2"))
      throw InputError("kernel avx2 not supported on this CPU");
    gActive.store(&countAvx2, std::memory_order_release);
    return;
  }
#endif
#if defined(__aarch64__)
  if (name == "neon") {
    gActive.store(&countNeon, std::memory_order_release);
    return;
  }
#endif
  throw InputError("unknown kernel variant: " + name);
}

}  // namespace lechlab::kernel
