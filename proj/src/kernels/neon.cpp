#include "gridsep/kernels.hpp"

#include <arm_neon.h>

namespace gridsep::kernels::detail {

std::int64_t sum_abs_diff_neon(const std::int32_t* a, const std::int32_t* b, std::size_t n) noexcept {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const int32x4_t d = vabdq_s32(vld1q_s32(a + k), vld1q_s32(b + k));
        acc = vpadalq_u32(acc, vreinterpretq_u32_s32(d));
    }
    std::int64_t total = static_cast<std::int64_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
    if (k < n) {
        total += sum_abs_diff_scalar(a + k, b + k, n - k);
    }
    return total;
}

} // namespace gridsep::kernels::detail
