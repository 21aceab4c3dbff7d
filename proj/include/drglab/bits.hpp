#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace drglab {

// Fixed-width bitset over uint64 words; small helper shared by the graph and
// group code.
inline int bits_words(int n_bits) { return (n_bits + 63) / 64; }

inline void bit_set(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void bit_clear(std::uint64_t* w, int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool bit_test(const std::uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1u; }

template <typename F>
void for_each_bit(const std::uint64_t* words, int n_words, F&& f) {
    for (int i = 0; i < n_words; ++i) {
        std::uint64_t w = words[i];
        while (w) {
            f(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
}

inline bool any_bit(const std::uint64_t* words, int n_words) {
    for (int i = 0; i < n_words; ++i)
        if (words[i]) return true;
    return false;
}

// Mask covering bits [0, n_bits) in the last word; full words elsewhere.
inline std::uint64_t tail_mask(int n_bits) {
    const int r = n_bits & 63;
    return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

} // namespace drglab
