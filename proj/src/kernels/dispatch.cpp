#include "gridsep/error.hpp"
#include "gridsep/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace gridsep::kernels {

namespace {

constexpr int kNoOverride = -1;
std::atomic<int> g_override{kNoOverride};

bool cpu_supports(Backend b) noexcept {
    switch (b) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
#if defined(GRIDSEP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Backend::Neon:
#if defined(GRIDSEP_HAVE_NEON)
        return true; // mandatory on AArch64
#else
        return false;
#endif
    }
    return false;
}

Backend detect() noexcept {
    if (const char* env = std::getenv("GRIDSEP_SIMD")) {
        const std::string want(env);
        if (want == "scalar") {
            return Backend::Scalar;
        }
        if (want == "avx2" && cpu_supports(Backend::Avx2)) {
            return Backend::Avx2;
        }
        if (want == "neon" && cpu_supports(Backend::Neon)) {
            return Backend::Neon;
        }
    }
    if (cpu_supports(Backend::Avx2)) {
        return Backend::Avx2;
    }
    if (cpu_supports(Backend::Neon)) {
        return Backend::Neon;
    }
    return Backend::Scalar;
}

std::int64_t run_sad(Backend backend, const std::int32_t* a, const std::int32_t* b, std::size_t n) noexcept {
    switch (backend) {
#if defined(GRIDSEP_HAVE_AVX2)
    case Backend::Avx2:
        return detail::sum_abs_diff_avx2(a, b, n);
#endif
#if defined(GRIDSEP_HAVE_NEON)
    case Backend::Neon:
        return detail::sum_abs_diff_neon(a, b, n);
#endif
    default:
        return detail::sum_abs_diff_scalar(a, b, n);
    }
}

// Reference: one term per neighbor pair, in the order the pairs are listed.
std::int64_t plane_edge_sum_scalar(const std::int32_t* p, int n1, int n2, bool wrap) noexcept {
    std::int64_t acc = 0;
    auto at = [&](int i, int j) { return static_cast<std::int64_t>(p[i * n2 + j]); };
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            if (j + 1 < n2) {
                acc += std::llabs(at(i, j) - at(i, j + 1));
            } else if (wrap) {
                acc += std::llabs(at(i, j) - at(i, 0));
            }
            if (i + 1 < n1) {
                acc += std::llabs(at(i, j) - at(i + 1, j));
            } else if (wrap) {
                acc += std::llabs(at(i, j) - at(0, j));
            }
        }
    }
    return acc;
}

// Same sum, regrouped into contiguous slices so the abs-diff kernel sees long runs.
std::int64_t plane_edge_sum_sliced(Backend backend, const std::int32_t* p, int n1, int n2, bool wrap) noexcept {
    const auto cols = static_cast<std::size_t>(n2);
    std::int64_t acc = 0;
    if (n1 > 1) {
        acc += run_sad(backend, p, p + cols, static_cast<std::size_t>(n1 - 1) * cols);
    }
    if (n2 > 1) {
        for (int i = 0; i < n1; ++i) {
            const std::int32_t* row = p + static_cast<std::size_t>(i) * cols;
            acc += run_sad(backend, row, row + 1, cols - 1);
        }
    }
    if (wrap) {
        acc += run_sad(backend, p + static_cast<std::size_t>(n1 - 1) * cols, p, cols);
        for (int i = 0; i < n1; ++i) {
            const std::int32_t* row = p + static_cast<std::size_t>(i) * cols;
            acc += std::llabs(static_cast<std::int64_t>(row[cols - 1]) - row[0]);
        }
    }
    return acc;
}

} // namespace

std::string_view backend_name(Backend b) noexcept {
    switch (b) {
    case Backend::Scalar:
        return "scalar";
    case Backend::Avx2:
        return "avx2";
    case Backend::Neon:
        return "neon";
    }
    return "unknown";
}

bool backend_available(Backend b) noexcept { return cpu_supports(b); }

Backend active_backend() noexcept {
    const int forced = g_override.load(std::memory_order_relaxed);
    if (forced != kNoOverride) {
        return static_cast<Backend>(forced);
    }
    static const Backend detected = detect();
    return detected;
}

void force_backend(Backend b) {
    if (!backend_available(b)) {
        throw InvalidArgument("SIMD backend not available: " + std::string(backend_name(b)));
    }
    g_override.store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_backend() noexcept { g_override.store(kNoOverride, std::memory_order_relaxed); }

std::int64_t sum_abs_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b) noexcept {
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    return run_sad(active_backend(), a.data(), b.data(), n);
}

std::int64_t sum_abs_diff(Backend backend, std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    if (!backend_available(backend)) {
        throw InvalidArgument("SIMD backend not available: " + std::string(backend_name(backend)));
    }
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    return run_sad(backend, a.data(), b.data(), n);
}

std::int64_t plane_edge_sum(std::span<const std::int32_t> plane, int n1, int n2, bool wrap) noexcept {
    const Backend backend = active_backend();
    if (backend == Backend::Scalar) {
        return plane_edge_sum_scalar(plane.data(), n1, n2, wrap);
    }
    return plane_edge_sum_sliced(backend, plane.data(), n1, n2, wrap);
}

std::int64_t plane_edge_sum(Backend backend, std::span<const std::int32_t> plane, int n1, int n2, bool wrap) {
    if (!backend_available(backend)) {
        throw InvalidArgument("SIMD backend not available: " + std::string(backend_name(backend)));
    }
    if (plane.size() != static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2)) {
        throw InvalidArgument("plane size does not match grid dimensions");
    }
    if (backend == Backend::Scalar) {
        return plane_edge_sum_scalar(plane.data(), n1, n2, wrap);
    }
    return plane_edge_sum_sliced(backend, plane.data(), n1, n2, wrap);
}

} // namespace gridsep::kernels
