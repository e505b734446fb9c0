#include "gridsep/kernels.hpp"

#include <cstdlib>

namespace gridsep::kernels::detail {

std::int64_t sum_abs_diff_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n) noexcept {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
        acc += std::llabs(static_cast<std::int64_t>(a[k]) - b[k]);
    }
    return acc;
}

} // namespace gridsep::kernels::detail
