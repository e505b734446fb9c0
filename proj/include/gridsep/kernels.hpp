#pragma once

// Data-parallel inner loops of the objective. Every kernel has a scalar
// reference and optional SIMD variants; the dispatcher picks the widest one
// the running CPU supports. All variants must agree bit-for-bit with the
// scalar reference (integer arithmetic, no reassociation hazards).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace gridsep::kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b) noexcept;

// Compiled in and supported by the running CPU.
bool backend_available(Backend b) noexcept;

// Widest available backend, unless overridden with force_backend() or the
// GRIDSEP_SIMD environment variable ("scalar", "avx2", "neon").
Backend active_backend() noexcept;

// Overrides dispatch for the whole process. Throws InvalidArgument if the
// backend is not available.
void force_backend(Backend b);
void reset_backend() noexcept;

// sum_k |a[k] - b[k]| over min(a.size(), b.size()) elements. Each difference
// must fit in an int32.
std::int64_t sum_abs_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b) noexcept;
std::int64_t sum_abs_diff(Backend backend, std::span<const std::int32_t> a,
                          std::span<const std::int32_t> b);

// Sum of |plane[x] - plane[y]| over the neighbor pairs of an n1 x n2 grid
// stored row-major. With wrap = true the wrap-around pairs of the torus are
// added (4-regular multiset; a dimension of length 2 contributes its pair twice).
std::int64_t plane_edge_sum(std::span<const std::int32_t> plane, int n1, int n2, bool wrap) noexcept;
std::int64_t plane_edge_sum(Backend backend, std::span<const std::int32_t> plane, int n1, int n2,
                            bool wrap);

namespace detail {
std::int64_t sum_abs_diff_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n) noexcept;
#if defined(GRIDSEP_HAVE_AVX2)
std::int64_t sum_abs_diff_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n) noexcept;
#endif
#if defined(GRIDSEP_HAVE_NEON)
std::int64_t sum_abs_diff_neon(const std::int32_t* a, const std::int32_t* b, std::size_t n) noexcept;
#endif
} // namespace detail

} // namespace gridsep::kernels
