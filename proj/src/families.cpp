#include "drglab/families.hpp"

#include <algorithm>
#include <string>

#include "drglab/errors.hpp"

namespace drglab {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ConnectionSet ConnectionSet::from_words(int n, std::vector<std::uint32_t> words) {
    if (n < 1 || n > 12) throw ResourceError("Z_2^n families support 1 <= n <= 12");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    ConnectionSet s;
    s.n = n;
    s.members.reserve(words.size());
    for (const std::uint32_t w : words) {
        if (w == 0) throw InputError("connection set must not contain the zero word");
        if (w >= (std::uint32_t{1} << n))
            throw InputError("connection set word exceeds dimension " + std::to_string(n));
        s.members.push_back(Word{n, w});
    }
    return s;
}

ConnectionSet ConnectionSet::up_to_weight(int n, int max_weight) {
    std::vector<std::uint32_t> words;
    for (std::uint32_t w = 1; w < (std::uint32_t{1} << n); ++w)
        if (std::popcount(w) <= max_weight) words.push_back(w);
    return from_words(n, std::move(words));
}

namespace {

Graph build_cayley(int n, const ConnectionSet& s, std::string name) {
    if (s.n != n) throw InputError("connection set dimension mismatch");
    const int n_vertices = 1 << n;
    GraphBuilder b(n_vertices);
    for (int x = 0; x < n_vertices; ++x) {
        for (const Word& w : s.members) {
            const int y = x ^ static_cast<int>(w.bits);
            if (y > x) b.add_edge(x, y);
        }
    }
    return std::move(b).build(std::move(name));
}

} // namespace

Graph cayley_z2n(int n, const ConnectionSet& s) {
    if (n < 1 || n > 12) throw ResourceError("Z_2^n families support 1 <= n <= 12");
    return build_cayley(n, s,
                        "Cay(Z2^" + std::to_string(n) + ";" + std::to_string(s.members.size()) + ")");
}

Graph hypercube(int n) {
    if (n < 1 || n > 12) throw ResourceError("hypercube supports 1 <= n <= 12");
    return build_cayley(n, ConnectionSet::up_to_weight(n, 1), "Q" + std::to_string(n));
}

Graph hypercube_square(int n) {
    if (n < 2 || n > 12) throw ResourceError("square of the hypercube supports 2 <= n <= 12");
    return build_cayley(n, ConnectionSet::up_to_weight(n, 2), "Q" + std::to_string(n) + "^2");
}

std::vector<std::uint32_t> johnson_labels(int n, int k) {
    // Ascending bitmask order is exactly colex order on k-subsets.
    std::vector<std::uint32_t> labels;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
        if (std::popcount(m) == k) labels.push_back(m);
    return labels;
}

Graph johnson(int n, int k) {
    if (k < 1 || k >= n) throw ResourceError("johnson requires 1 <= k < n");
    if (n > 30 || binomial(n, k) > family_vertex_cap)
        throw ResourceError("johnson graph exceeds the desk-scale vertex cap");
    const std::vector<std::uint32_t> labels = johnson_labels(n, k);
    const int m = static_cast<int>(labels.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (std::popcount(labels[static_cast<std::size_t>(i)] & labels[static_cast<std::size_t>(j)]) == k - 1)
                b.add_edge(i, j);
    return std::move(b).build("J(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

Graph cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build("C" + std::to_string(n));
}

Graph cocktail_party(int m) {
    if (m < 2) throw InputError("cocktail-party graph needs m >= 2");
    const int n = 2 * m;
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u / 2 == v / 2)) b.add_edge(u, v); // {2i, 2i+1} are the non-adjacent pairs
    return std::move(b).build("CP(" + std::to_string(m) + ")");
}

SphereJohnsonIso sphere_to_johnson_map(int n) {
    if (n < 2) throw InputError("sphere-to-Johnson map needs n >= 2");
    if (n > 12) throw ResourceError("Z_2^n families support 1 <= n <= 12");

    const std::vector<std::uint32_t> jlabels = johnson_labels(n + 1, 2);
    std::vector<int> jrank(std::size_t{1} << (n + 1), -1);
    for (int i = 0; i < static_cast<int>(jlabels.size()); ++i)
        jrank[jlabels[static_cast<std::size_t>(i)]] = i;

    SphereJohnsonIso iso;
    iso.n = n;
    for (std::uint32_t w = 1; w < (std::uint32_t{1} << n); ++w)
        if (std::popcount(w) <= 2) iso.sphere_words.push_back(w);

    iso.to_johnson.reserve(iso.sphere_words.size());
    for (const std::uint32_t w : iso.sphere_words) {
        std::uint32_t pair_mask;
        if (std::popcount(w) == 1) {
            pair_mask = w | (std::uint32_t{1} << n); // e_i -> {i, n+1}
        } else {
            pair_mask = w; // e_i + e_j -> {i, j}
        }
        iso.to_johnson.push_back(jrank[pair_mask]);
    }
    return iso;
}

} // namespace drglab
