#ifndef LECHLAB_KERNEL_HPP
#define LECHLAB_KERNEL_HPP

#include <cstdint>
#include <string>

namespace lechlab::kernel {

/// Staircase counting kernel.
///
/// Counts lattice points v in the half-open box
///   [0, box[0]) x ... x [0, box[d-1])
/// that are dominated by NO generator (componentwise >=). `gens` is a
/// flat row-major m x d array. With m = 0 this is the box volume.
///
/// The count is assembled column-wise along coordinate 0: for a fixed
/// suffix (v_1,...,v_{d-1}) the points below the staircase form the
/// prefix [0, min over active generators of g_0), where a generator is
/// active when its suffix coordinates are all <= the suffix. Exact
/// integer arithmetic; scalar and SIMD variants agree bit for bit.
int64_t countScalar(const int32_t* box, int d, const int32_t* gens, int m);

#if defined(__x86_64__) || defined(_M_X64)
int64_t countAvx2(const int32_t* box, int d, const int32_t* gens, int m);
#endif
#if defined(__aarch64__)
int64_t countNeon(const int32_t* box, int d, const int32_t* gens, int m);
#endif

/// Dispatched entry point. The implementation is picked once at first
/// use from CPU capabilities (AVX2 on x86-64, NEON on aarch64, scalar
/// otherwise).
int64_t count(const int32_t* box, int d, const int32_t* gens, int m);

/// Name of the variant `count` currently dispatches to.
std::string activeKernel();

/// Test hook: force "scalar", "avx2", "neon" or "auto". Throws
/// InputError for a variant this CPU cannot run.
void forceKernel(const std::string& name);

}  // namespace lechlab::kernel

#endif
