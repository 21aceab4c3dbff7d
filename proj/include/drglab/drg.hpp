#pragma once

#include <array>
#include <variant>
#include <vector>

#include "drglab/graph.hpp"

namespace drglab {

// {b_0..b_{D-1}; c_1..c_D} with exact integers; b.size() == c.size() == D.
struct IntersectionArray {
    std::vector<long long> b;
    std::vector<long long> c;

    int diameter() const { return static_cast<int>(c.size()); }
    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

// Two (base, vertex) pairs at the same distance whose c- or b-count differ;
// recounting from the stored bases reproduces the two values.
struct DrFailureWitness {
    enum class Kind { c_mismatch, b_mismatch };
    Kind kind = Kind::c_mismatch;
    int distance = 0;
    int base1 = 0, u1 = 0; // where the reference count was established
    int base2 = 0, u2 = 0; // where the differing count was found
    long long value1 = 0, value2 = 0;
};

using IntersectionResult = std::variant<IntersectionArray, DrFailureWitness>;

// BFS level sets around v: result[i] holds the vertices at distance i,
// ascending. StructureError on disconnected input.
std::vector<std::vector<int>> distance_partition(const Graph& g, int v);

// Checks every base vertex; scan order is ascending base, then ascending
// vertex, c-count before b-count, so the first witness is reproducible
// bit for bit.
IntersectionResult intersection_numbers(const Graph& g);

IntersectionArray predicted_array_qn(int n);  // hypercube, n >= 2
IntersectionArray predicted_array_qn2(int n); // square of the hypercube, n >= 4

struct SrgParams {
    long long n = 0, k = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct NotSrgWitness {
    bool adjacent_pair = false; // which count family disagreed
    int u1 = 0, v1 = 0;
    int u2 = 0, v2 = 0;
    long long value1 = 0, value2 = 0;
};

using SrgResult = std::variant<SrgParams, NotSrgWitness>;

// Requires a connected regular graph of diameter 2 (StructureError
// otherwise).
SrgResult srg_params(const Graph& g);

// (n, n-k-1, n-2-2k+mu, n-2k+lambda); InputError if an entry is negative.
SrgParams srg_complement_params(const SrgParams& p);

struct AntipodalResult {
    bool antipodal = true;
    std::array<int, 3> counterexample{-1, -1, -1}; // (u, v, w) when not antipodal
};

AntipodalResult is_antipodal(const Graph& g);

} // namespace drglab
