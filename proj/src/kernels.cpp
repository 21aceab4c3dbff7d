#include "drglab/kernels.hpp"

#include <atomic>
#include <bit>

#include "drglab/errors.hpp"

namespace drglab::kernels {

namespace scalar {

std::size_t popcount(const std::uint64_t* a, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

void or_accumulate(std::uint64_t* acc, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] |= src[i];
}

std::int64_t signed_parity_sum(std::uint64_t chi, const std::uint64_t* masks, std::size_t n) {
    std::int64_t odd = 0;
    for (std::size_t i = 0; i < n; ++i) odd += std::popcount(chi & masks[i]) & 1;
    return static_cast<std::int64_t>(n) - 2 * odd;
}

void rotate_pair(double* x, double* y, double c, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

} // namespace scalar

namespace {

struct Vtable {
    std::size_t (*popcount)(const std::uint64_t*, std::size_t);
    std::size_t (*and_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    void (*or_accumulate)(std::uint64_t*, const std::uint64_t*, std::size_t);
    std::int64_t (*signed_parity_sum)(std::uint64_t, const std::uint64_t*, std::size_t);
    void (*rotate_pair)(double*, double*, double, double, std::size_t);
};

constexpr Vtable kScalar{scalar::popcount, scalar::and_popcount, scalar::or_accumulate,
                         scalar::signed_parity_sum, scalar::rotate_pair};

#if defined(DRGLAB_HAVE_AVX2)
constexpr Vtable kAvx2{avx2::popcount, avx2::and_popcount, avx2::or_accumulate,
                       avx2::signed_parity_sum, avx2::rotate_pair};
#endif

#if defined(DRGLAB_HAVE_NEON)
constexpr Vtable kNeon{neon::popcount, neon::and_popcount, neon::or_accumulate,
                       neon::signed_parity_sum, neon::rotate_pair};
#endif

Backend detect_best() {
#if defined(DRGLAB_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
#if defined(DRGLAB_HAVE_NEON)
    return Backend::neon;
#endif
    return Backend::scalar;
}

const Vtable* vtable_for(Backend b) {
    switch (b) {
    case Backend::scalar: return &kScalar;
#if defined(DRGLAB_HAVE_AVX2)
    case Backend::avx2: return &kAvx2;
#endif
#if defined(DRGLAB_HAVE_NEON)
    case Backend::neon: return &kNeon;
#endif
    default: return nullptr;
    }
}

std::atomic<const Vtable*> g_vtable{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const Vtable* active() {
    const Vtable* v = g_vtable.load(std::memory_order_acquire);
    if (!v) {
        Backend best = detect_best();
        g_backend.store(best, std::memory_order_relaxed);
        v = vtable_for(best);
        g_vtable.store(v, std::memory_order_release);
    }
    return v;
}

} // namespace

bool backend_supported(Backend b) {
    if (b == Backend::scalar) return true;
#if defined(DRGLAB_HAVE_AVX2)
    if (b == Backend::avx2) return __builtin_cpu_supports("avx2");
#endif
#if defined(DRGLAB_HAVE_NEON)
    if (b == Backend::neon) return true;
#endif
    return false;
}

Backend active_backend() {
    active();
    return g_backend.load(std::memory_order_relaxed);
}

void set_backend(Backend b) {
    if (!backend_supported(b))
        throw InputError("kernel backend not supported on this host: " +
                         std::string(backend_name(b)));
    g_backend.store(b, std::memory_order_relaxed);
    g_vtable.store(vtable_for(b), std::memory_order_release);
}

std::string_view backend_name(Backend b) {
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    }
    return "unknown";
}

std::size_t popcount(const std::uint64_t* a, std::size_t n) { return active()->popcount(a, n); }

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return active()->and_popcount(a, b, n);
}

void or_accumulate(std::uint64_t* acc, const std::uint64_t* src, std::size_t n) {
    active()->or_accumulate(acc, src, n);
}

std::int64_t signed_parity_sum(std::uint64_t chi, const std::uint64_t* masks, std::size_t n) {
    return active()->signed_parity_sum(chi, masks, n);
}

void rotate_pair(double* x, double* y, double c, double s, std::size_t n) {
    active()->rotate_pair(x, y, c, s, n);
}

} // namespace drglab::kernels
