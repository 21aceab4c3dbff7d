#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "drglab/graph.hpp"

namespace drglab {

// Element of Z_2^n as an n-bit value. Coordinate i of the tuple is bit i-1,
// so the basis word e_i is 1 << (i-1).
struct Word {
    int n = 0;
    std::uint32_t bits = 0;

    int weight() const { return std::popcount(bits); }
    friend bool operator==(const Word&, const Word&) = default;
};

inline Word basis_word(int n, int i) { return Word{n, std::uint32_t{1} << (i - 1)}; }

// Connection set of a Cayley graph over Z_2^n: distinct nonzero words. Every
// element of Z_2^n is an involution, so inverse-closure is automatic.
struct ConnectionSet {
    int n = 0;
    std::vector<Word> members; // ascending by bits, validated on construction

    static ConnectionSet from_words(int n, std::vector<std::uint32_t> words);
    // All nonzero words of weight in [1, max_weight].
    static ConnectionSet up_to_weight(int n, int max_weight);
};

// Desk-scale cap shared by the Z_2^n families (2^n vertices) and the Johnson
// constructor (binomial(n,k) vertices).
inline constexpr int family_vertex_cap = 4096;

Graph hypercube(int n);                              // 1 <= n <= 12
Graph cayley_z2n(int n, const ConnectionSet& s);     // vertex x ~ x ^ s
Graph hypercube_square(int n);                       // 2 <= n <= 12
Graph johnson(int n, int k);                         // colex-ordered k-subsets of [n]
Graph cycle(int n);                                  // n >= 3
Graph cocktail_party(int m);                         // K_{m x 2}, m >= 2

// Vertex labels of johnson(n, k): bitmasks of the k-subsets in colex order
// (element i of [n] is bit i-1).
std::vector<std::uint32_t> johnson_labels(int n, int k);

// The weight-<=2 sphere T around 0 in the square of the hypercube, mapped
// onto the 2-subsets of [n+1]: e_i -> {i, n+1} and e_i + e_j -> {i, j}. The
// composite with the induced subgraph on T is an isomorphism onto
// johnson(n+1, 2); to_johnson is given on the induced (ascending-word)
// vertex ids.
struct SphereJohnsonIso {
    int n = 0;
    std::vector<std::uint32_t> sphere_words; // T in ascending order
    std::vector<int> to_johnson;             // induced id -> johnson(n+1,2) vertex id
};

SphereJohnsonIso sphere_to_johnson_map(int n); // n >= 2

long long binomial(int n, int k);

} // namespace drglab
