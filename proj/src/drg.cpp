#include "drglab/drg.hpp"

#include <algorithm>
#include <string>

#include "drglab/bits.hpp"
#include "drglab/errors.hpp"
#include "drglab/families.hpp"
#include "drglab/kernels.hpp"

namespace drglab {

std::vector<std::vector<int>> distance_partition(const Graph& g, int v) {
    const DistanceRow d = bfs_distances(g, v);
    int ecc = 0;
    for (int u = 0; u < g.n_vertices(); ++u) {
        if (!d.reachable(u)) throw StructureError("distance partition needs a connected graph");
        ecc = std::max(ecc, d.dist[static_cast<std::size_t>(u)]);
    }
    std::vector<std::vector<int>> levels(static_cast<std::size_t>(ecc) + 1);
    for (int u = 0; u < g.n_vertices(); ++u)
        levels[static_cast<std::size_t>(d.dist[static_cast<std::size_t>(u)])].push_back(u);
    return levels;
}

IntersectionResult intersection_numbers(const Graph& g) {
    if (!regular_valency(g).has_value())
        throw StructureError("intersection numbers need a regular graph");
    if (!is_connected(g)) throw StructureError("intersection numbers need a connected graph");

    const int n = g.n_vertices();
    const int w = g.words_per_row();
    const int dia = diameter(g);

    // Reference counts, filled lazily at the first (base, u) seen for each
    // distance; -1 means not yet established.
    std::vector<long long> ref_c(static_cast<std::size_t>(dia) + 1, -1);
    std::vector<long long> ref_b(static_cast<std::size_t>(dia) + 1, -1);
    std::vector<std::pair<int, int>> ref_c_at(static_cast<std::size_t>(dia) + 1, {-1, -1});
    std::vector<std::pair<int, int>> ref_b_at(static_cast<std::size_t>(dia) + 1, {-1, -1});

    std::vector<std::uint64_t> level_bits;
    for (int base = 0; base < n; ++base) {
        const DistanceRow d = bfs_distances(g, base);
        int ecc = 0;
        for (int u = 0; u < n; ++u) ecc = std::max(ecc, d.dist[static_cast<std::size_t>(u)]);
        // Unequal eccentricities are themselves a distance-regularity failure
        // (the level would be missing from one base); they surface below as a
        // count mismatch at the boundary, so only the level sets are built
        // here.
        level_bits.assign(static_cast<std::size_t>(ecc + 1) * w, 0);
        for (int u = 0; u < n; ++u)
            bit_set(level_bits.data() + static_cast<std::size_t>(d.dist[static_cast<std::size_t>(u)]) * w, u);

        for (int u = 0; u < n; ++u) {
            const int i = d.dist[static_cast<std::size_t>(u)];
            if (i == 0) continue;
            const long long c = static_cast<long long>(kernels::and_popcount(
                g.row(u), level_bits.data() + static_cast<std::size_t>(i - 1) * w, static_cast<std::size_t>(w)));
            if (ref_c[static_cast<std::size_t>(i)] < 0) {
                ref_c[static_cast<std::size_t>(i)] = c;
                ref_c_at[static_cast<std::size_t>(i)] = {base, u};
            } else if (ref_c[static_cast<std::size_t>(i)] != c) {
                DrFailureWitness wit;
                wit.kind = DrFailureWitness::Kind::c_mismatch;
                wit.distance = i;
                wit.base1 = ref_c_at[static_cast<std::size_t>(i)].first;
                wit.u1 = ref_c_at[static_cast<std::size_t>(i)].second;
                wit.base2 = base;
                wit.u2 = u;
                wit.value1 = ref_c[static_cast<std::size_t>(i)];
                wit.value2 = c;
                return wit;
            }
            const long long b =
                i < ecc ? static_cast<long long>(kernels::and_popcount(
                              g.row(u), level_bits.data() + static_cast<std::size_t>(i + 1) * w,
                              static_cast<std::size_t>(w)))
                        : 0;
            if (i < dia) {
                if (ref_b[static_cast<std::size_t>(i)] < 0) {
                    ref_b[static_cast<std::size_t>(i)] = b;
                    ref_b_at[static_cast<std::size_t>(i)] = {base, u};
                } else if (ref_b[static_cast<std::size_t>(i)] != b) {
                    DrFailureWitness wit;
                    wit.kind = DrFailureWitness::Kind::b_mismatch;
                    wit.distance = i;
                    wit.base1 = ref_b_at[static_cast<std::size_t>(i)].first;
                    wit.u1 = ref_b_at[static_cast<std::size_t>(i)].second;
                    wit.base2 = base;
                    wit.u2 = u;
                    wit.value1 = ref_b[static_cast<std::size_t>(i)];
                    wit.value2 = b;
                    return wit;
                }
            }
        }
        // b_0 is the valency; also establish it from the base itself.
        if (ref_b[0] < 0) {
            ref_b[0] = g.degree(base);
            ref_b_at[0] = {base, base};
        }
    }

    IntersectionArray arr;
    arr.b.assign(ref_b.begin(), ref_b.begin() + dia);
    arr.c.assign(ref_c.begin() + 1, ref_c.end());
    return arr;
}

IntersectionArray predicted_array_qn(int n) {
    if (n < 2) throw InputError("hypercube array defined for n >= 2");
    IntersectionArray a;
    for (int i = 0; i < n; ++i) a.b.push_back(n - i);
    for (int i = 1; i <= n; ++i) a.c.push_back(i);
    return a;
}

IntersectionArray predicted_array_qn2(int n) {
    if (n < 4) throw InputError("closed-form array defined for n >= 4");
    const int dia = (n + 1) / 2;
    IntersectionArray a;
    a.b.push_back(binomial(n + 1, 2));
    for (int i = 1; i <= dia - 1; ++i) {
        a.b.push_back(binomial(n - 2 * i + 1, 2));
        a.c.push_back(binomial(2 * i, 2));
    }
    a.c.push_back(n % 2 == 1 ? binomial(n + 1, 2) : binomial(n, 2));
    return a;
}

SrgResult srg_params(const Graph& g) {
    const auto valency = regular_valency(g);
    if (!valency.has_value()) throw StructureError("strongly regular parameters need a regular graph");
    if (!is_connected(g)) throw StructureError("strongly regular parameters need a connected graph");
    if (diameter(g) != 2) throw StructureError("strongly regular parameters need diameter 2");

    const int n = g.n_vertices();
    const int w = g.words_per_row();
    long long lambda = -1, mu = -1;
    int lu = -1, lv = -1, mu_u = -1, mu_v = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const long long common = static_cast<long long>(
                kernels::and_popcount(g.row(u), g.row(v), static_cast<std::size_t>(w)));
            if (g.adjacent(u, v)) {
                if (lambda < 0) {
                    lambda = common;
                    lu = u;
                    lv = v;
                } else if (lambda != common) {
                    return NotSrgWitness{true, lu, lv, u, v, lambda, common};
                }
            } else {
                if (mu < 0) {
                    mu = common;
                    mu_u = u;
                    mu_v = v;
                } else if (mu != common) {
                    return NotSrgWitness{false, mu_u, mu_v, u, v, mu, common};
                }
            }
        }
    }
    return SrgParams{n, *valency, lambda, mu};
}

SrgParams srg_complement_params(const SrgParams& p) {
    const SrgParams q{p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lambda};
    if (q.k < 0 || q.lambda < 0 || q.mu < 0)
        throw InputError("complement parameters infeasible (negative entry)");
    return q;
}

AntipodalResult is_antipodal(const Graph& g) {
    const int dia = diameter(g); // also rejects disconnected input
    const int n = g.n_vertices();
    std::vector<std::vector<int>> far(static_cast<std::size_t>(n));
    std::vector<DistanceRow> rows(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        rows[static_cast<std::size_t>(u)] = bfs_distances(g, u);
        for (int v = 0; v < n; ++v)
            if (rows[static_cast<std::size_t>(u)].dist[static_cast<std::size_t>(v)] == dia)
                far[static_cast<std::size_t>(u)].push_back(v);
    }
    // Pairs scanned in descending vertex order: for the even square of the
    // hypercube this surfaces the (all-ones, all-ones^e_1) counterexample
    // first.
    for (int u = 0; u < n; ++u) {
        const auto& fu = far[static_cast<std::size_t>(u)];
        const int m = static_cast<int>(fu.size());
        for (int i = m - 1; i >= 0; --i) {
            for (int j = i - 1; j >= 0; --j) {
                const int v = fu[static_cast<std::size_t>(i)];
                const int x = fu[static_cast<std::size_t>(j)];
                if (rows[static_cast<std::size_t>(v)].dist[static_cast<std::size_t>(x)] != dia)
                    return AntipodalResult{false, {u, v, x}};
            }
        }
    }
    return AntipodalResult{};
}

} // namespace drglab
