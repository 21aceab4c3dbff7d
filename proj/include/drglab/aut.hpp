#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "drglab/graph.hpp"

namespace drglab {

using BigInt = boost::multiprecision::cpp_int;

struct Permutation {
    std::vector<int> images; // images[v] is the image of v

    static Permutation identity(int degree);
    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int v) const { return images[static_cast<std::size_t>(v)]; }
    bool is_identity() const;
    Permutation inverse() const;
    // (a.then(b))(v) == b(a(v))
    Permutation then(const Permutation& next) const;
    bool is_bijection() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Point stabilizer chain with the fixed base 0,1,...,degree-1; levels are
// materialized lazily, so only the bases with non-trivial orbits cost
// anything. Supports membership sifting and exact order.
class StabilizerChain {
public:
    explicit StabilizerChain(int degree);
    ~StabilizerChain();
    StabilizerChain(StabilizerChain&&) noexcept;
    StabilizerChain& operator=(StabilizerChain&&) noexcept;

    int degree() const { return degree_; }
    // Absorb p into the group; returns true if the group grew.
    bool add(const Permutation& p);
    bool contains(const Permutation& p) const;
    BigInt order() const;

    // Orbit of the seed points under the generators stored at levels >= from
    // (those all fix the points 0..from-1). Degree must be <= 64.
    std::uint64_t orbit_mask(std::uint64_t seeds, int from_level) const;

private:
    struct Level;
    int degree_;
    std::vector<std::unique_ptr<Level>> levels_;

    std::pair<Permutation, int> sift(Permutation p, int from_level) const;
    void extend(int level, const Permutation& p);
};

struct GeneratorSet {
    int degree = 0;
    std::vector<Permutation> gens;
    BigInt order = 1;
};

inline constexpr int aut_vertex_cap = 64;

// Full automorphism group by partition backtracking with orbit pruning;
// every returned generator is re-verified edge-preserving. Caps at
// aut_vertex_cap vertices (ResourceError).
GeneratorSet automorphisms(const Graph& g);

// The structural generators of the automorphism group of the square of the
// hypercube: translations, coordinate permutations, and one GF(2) linear
// extension swapping the basis clique with a neighboring maximal clique.
// Each is checked to preserve adjacency; a failure raises IntegrityError.
GeneratorSet claimed_generators_qn2(int n); // n >= 4

bool is_vertex_transitive(const Graph& g, const GeneratorSet& gens);
bool is_edge_transitive(const Graph& g, const GeneratorSet& gens);
bool is_arc_transitive(const Graph& g, const GeneratorSet& gens);

// One orbit of ordered pairs per distance value 0..D. Connected graphs only;
// capped at 256 vertices.
bool is_distance_transitive(const Graph& g, const GeneratorSet& gens);

struct BlockSystem {
    int block_size = 0;
    std::vector<std::vector<int>> blocks; // sorted by smallest member
};

// Smallest non-trivial block system of the generated group acting on the
// vertices (seeded with the pairs (0, v), ties broken by smallest v), or
// nullopt when the action is primitive. StructureError if intransitive.
std::optional<BlockSystem> find_block_system(const Graph& g, const GeneratorSet& gens);

struct AutomorphicVerdict {
    enum class Kind { Automorphic, NotAutomorphic, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::string reason;
};

// Distance-transitive + primitive + not complete + excluded from being a
// line graph (by eigenvalue or by root arithmetic).
AutomorphicVerdict is_automorphic_graph(const Graph& g);

} // namespace drglab
