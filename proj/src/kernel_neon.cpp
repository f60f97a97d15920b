#if defined(__aarch64__)

#include <arm_neon.h>

#include <vector>

#include "lechlab/kernel.hpp"

namespace lechlab::kernel {

// NEON variant, mirrors the AVX2 layout with 4-wide lanes.
int64_t countNeon(const int32_t* box, int d, const int32_t* gens, int m) {
  if (d <= 1) return countScalar(box, d, gens, m);
  const int32_t b0 = box[0];
  const int32_t b1 = box[1];
  if (b0 <= 0 || b1 <= 0) return 0;
  for (int i = 2; i < d; ++i)
    if (box[i] <= 0) return 0;

  std::vector<int32_t> s(d > 2 ? d - 2 : 0, 0);
  std::vector<int32_t> fg1, fg0;
  fg1.reserve(m);
  fg0.reserve(m);

  const int32_t rampArr[4] = {0, 1, 2, 3};
  const int32x4_t ramp = vld1q_s32(rampArr);
  const int32x4_t vb0 = vdupq_n_s32(b0);

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
    for (; v1 + 4 <= b1; v1 += 4) {
      int32x4_t lanes = vaddq_s32(vdupq_n_s32(v1), ramp);
      int32x4_t minv = vb0;
      for (size_t j = 0; j < fg1.size(); ++j) {
        uint32x4_t mask = vcgeq_s32(lanes, vdupq_n_s32(fg1[j]));
        int32x4_t cand = vbslq_s32(mask, vdupq_n_s32(fg0[j]), vb0);
        minv = vminq_s32(minv, cand);
      }
      int32_t out[4];
      vst1q_s32(out, minv);
      total += int64_t(out[0]) + out[1] + out[2] + out[3];
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
