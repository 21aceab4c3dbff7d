#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Bit-row and rotation kernels behind the graph and spectra code.
//
// Every kernel has a scalar reference implementation plus, where the target
// supports it, an AVX2 or NEON variant selected once at startup. The variants
// compute exactly the same values (same operations, same order per element),
// so the equivalence tests assert bitwise equality.

namespace drglab::kernels {

enum class Backend { scalar, avx2, neon };

// Scalar reference implementations. Always available; the SIMD variants are
// tested against these.
namespace scalar {
std::size_t popcount(const std::uint64_t* a, std::size_t n);
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
void or_accumulate(std::uint64_t* acc, const std::uint64_t* src, std::size_t n);
// Sum of (-1)^(popcount(chi & m)) over the n masks m. The character-sum core.
std::int64_t signed_parity_sum(std::uint64_t chi, const std::uint64_t* masks, std::size_t n);
// Plane rotation: x'[i] = c*x[i] - s*y[i], y'[i] = s*x[i] + c*y[i].
void rotate_pair(double* x, double* y, double c, double s, std::size_t n);
} // namespace scalar

#if defined(DRGLAB_HAVE_AVX2)
namespace avx2 {
std::size_t popcount(const std::uint64_t* a, std::size_t n);
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
void or_accumulate(std::uint64_t* acc, const std::uint64_t* src, std::size_t n);
std::int64_t signed_parity_sum(std::uint64_t chi, const std::uint64_t* masks, std::size_t n);
void rotate_pair(double* x, double* y, double c, double s, std::size_t n);
} // namespace avx2
#endif

#if defined(DRGLAB_HAVE_NEON)
namespace neon {
std::size_t popcount(const std::uint64_t* a, std::size_t n);
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
void or_accumulate(std::uint64_t* acc, const std::uint64_t* src, std::size_t n);
std::int64_t signed_parity_sum(std::uint64_t chi, const std::uint64_t* masks, std::size_t n);
void rotate_pair(double* x, double* y, double c, double s, std::size_t n);
} // namespace neon
#endif

bool backend_supported(Backend b);
Backend active_backend();
void set_backend(Backend b); // throws InputError if unsupported on this host
std::string_view backend_name(Backend b);

// Dispatched entry points; resolve to the active backend.
std::size_t popcount(const std::uint64_t* a, std::size_t n);
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
void or_accumulate(std::uint64_t* acc, const std::uint64_t* src, std::size_t n);
std::int64_t signed_parity_sum(std::uint64_t chi, const std::uint64_t* masks, std::size_t n);
void rotate_pair(double* x, double* y, double c, double s, std::size_t n);

} // namespace drglab::kernels
