#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <vector>

#include "lechlab/kernel.hpp"

namespace lechlab::kernel {

// AVX2 variant: lanes run along coordinate 1, the column minimum along
// coordinate 0 is folded per lane. Generators are prefiltered against the
// fixed coordinates 2..d-1, leaving (g1, g0) pairs for the vector loop.
__attribute__((target("avx2")))
int64_t countAvx2(const int32_t* box, int d, const int32_t* gens, int m) {
  if (d <= 1) return countScalar(box, d, gens, m);
  const int32_t b0 = box[0];
  const int32_t b1 = box[1];
  if (b0 <= 0 || b1 <= 0) return 0;
  for (int i = 2; i < d; ++i)
    if (box[i] <= 0) return 0;

  std::vector<int32_t> s(d > 2 ? d - 2 : 0, 0);  // coords 2..d-1
  std::vector<int32_t> fg1, fg0;
  fg1.reserve(m);
  fg0.reserve(m);

  const __m256i ramp = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i vb0 = _mm256_set1_epi32(b0);

  int64_t total = 0;
  for (;;) {
    fg1.clear();
    fg0.clear();
    for (int j = 0; j < m; ++j) {
      const int32_t* g = gens + static_cast<size_t>(j) * d;
      bool active = true;
      for (int i = 2; i < d; ++i) {
        if (s[i - 2] < g[i]) { active = false; break; }
      }
      if (active) {
        fg1.push_back(g[1]);
        fg0.push_back(g[0]);
      }
    }

    int32_t v1 = 0;
    for (; v1 + 8 <= b1; v1 += 8) {
      __m256i lanes = _mm256_add_epi32(_mm256_set1_epi32(v1), ramp);
      __m256i minv = vb0;
      for (size_t j = 0; j < fg1.size(); ++j) {
        // lanes >= g1  <=>  lanes > g1 - 1 (exponents are >= 0)
        __m256i mask = _mm256_cmpgt_epi32(lanes, _mm256_set1_epi32(fg1[j] - 1));
        __m256i cand = _mm256_blendv_epi8(vb0, _mm256_set1_epi32(fg0[j]), mask);
        minv = _mm256_min_epi32(minv, cand);
      }
      alignas(32) int32_t out[8];
      _mm256_store_si256(reinterpret_cast<__m256i*>(out), minv);
      for (int k = 0; k < 8; ++k) total += out[k];
    }
    for (; v1 < b1; ++v1) {
      int32_t lim = b0;
      for (size_t j = 0; j < fg1.size(); ++j)
        if (v1 >= fg1[j] && fg0[j] < lim) lim = fg0[j];
      total += lim;
    }

    int i = 0;
    while (i < d - 2) {
      if (++s[i] < box[i + 2]) break;
      s[i] = 0;
      ++i;
    }
    if (d <= 2 || i == d - 2) break;
  }
  return total;
}

}  // namespace lechlab::kernel

#endif
