// NEON kernel variants for aarch64.

#include <bit>
#include <cstdint>

#include <arm_neon.h>

#include "drglab/kernels.hpp"

namespace drglab::kernels::neon {

namespace {

// Popcount of each 64-bit lane: per-byte counts widened pairwise up to u64.
inline uint64x2_t popcount_lanes(uint64x2_t v) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
    return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes)));
}

} // namespace

std::size_t popcount(const std::uint64_t* a, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_u64(acc, popcount_lanes(vld1q_u64(a + i)));
    std::size_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vaddq_u64(acc, popcount_lanes(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i))));
    std::size_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

void or_accumulate(std::uint64_t* acc, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_u64(acc + i, vorrq_u64(vld1q_u64(acc + i), vld1q_u64(src + i)));
    for (; i < n; ++i) acc[i] |= src[i];
}

std::int64_t signed_parity_sum(std::uint64_t chi, const std::uint64_t* masks, std::size_t n) {
    const uint64x2_t vchi = vdupq_n_u64(chi);
    const uint64x2_t one = vdupq_n_u64(1);
    uint64x2_t odd_acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t counts = popcount_lanes(vandq_u64(vld1q_u64(masks + i), vchi));
        odd_acc = vaddq_u64(odd_acc, vandq_u64(counts, one));
    }
    std::int64_t odd =
        static_cast<std::int64_t>(vgetq_lane_u64(odd_acc, 0) + vgetq_lane_u64(odd_acc, 1));
    for (; i < n; ++i) odd += std::popcount(chi & masks[i]) & 1;
    return static_cast<std::int64_t>(n) - 2 * odd;
}

void rotate_pair(double* x, double* y, double c, double s, std::size_t n) {
    // vmul/vsub/vadd only (no vfma) to stay bit-identical with the scalar
    // reference.
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vx = vld1q_f64(x + i);
        const float64x2_t vy = vld1q_f64(y + i);
        vst1q_f64(x + i, vsubq_f64(vmulq_f64(vc, vx), vmulq_f64(vs, vy)));
        vst1q_f64(y + i, vaddq_f64(vmulq_f64(vs, vx), vmulq_f64(vc, vy)));
    }
    for (; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

} // namespace drglab::kernels::neon
