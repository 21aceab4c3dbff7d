// AVX2 kernel variants. Compiled with -mavx2 on x86-64 only; callers must
// check CPU support before routing here (kernels.cpp does).

#include <bit>
#include <cstdint>

#include <immintrin.h>

#include "drglab/kernels.hpp"

namespace drglab::kernels::avx2 {

namespace {

// Per-byte popcount via the nibble lookup trick.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::uint64_t hsum_epi64(__m256i v) {
    const __m128i lo = _mm256_castsi256_si128(v);
    const __m128i hi = _mm256_extracti128_si256(v, 1);
    const __m128i sum = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(sum, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(sum, 1));
}

} // namespace

std::size_t popcount(const std::uint64_t* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    std::size_t total = hsum_epi64(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i v = _mm256_and_si256(va, vb);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    std::size_t total = hsum_epi64(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

void or_accumulate(std::uint64_t* acc, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_or_si256(va, vs));
    }
    for (; i < n; ++i) acc[i] |= src[i];
}

std::int64_t signed_parity_sum(std::uint64_t chi, const std::uint64_t* masks, std::size_t n) {
    // _mm256_sad_epu8 against zero collapses byte counts into one count per
    // 64-bit lane, which is exactly the per-mask popcount.
    const __m256i vchi = _mm256_set1_epi64x(static_cast<long long>(chi));
    const __m256i one = _mm256_set1_epi64x(1);
    __m256i odd_acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
        const __m256i v = _mm256_and_si256(m, vchi);
        const __m256i counts = _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256());
        odd_acc = _mm256_add_epi64(odd_acc, _mm256_and_si256(counts, one));
    }
    std::int64_t odd = static_cast<std::int64_t>(hsum_epi64(odd_acc));
    for (; i < n; ++i) odd += std::popcount(chi & masks[i]) & 1;
    return static_cast<std::int64_t>(n) - 2 * odd;
}

void rotate_pair(double* x, double* y, double c, double s, std::size_t n) {
    // Plain mul/add/sub, no FMA, so results match the scalar reference bit
    // for bit.
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(x + i, _mm256_sub_pd(_mm256_mul_pd(vc, vx), _mm256_mul_pd(vs, vy)));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_mul_pd(vs, vx), _mm256_mul_pd(vc, vy)));
    }
    for (; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

} // namespace drglab::kernels::avx2
