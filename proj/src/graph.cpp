#include "drglab/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "drglab/bits.hpp"
#include "drglab/errors.hpp"
#include "drglab/kernels.hpp"
#include "drglab/parallel.hpp"

namespace drglab {

GraphBuilder::GraphBuilder(int n_vertices) : n_(n_vertices), words_(bits_words(n_vertices)) {
    if (n_vertices <= 0) throw InputError("graph needs at least one vertex");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                         std::to_string(v) + ") with n=" + std::to_string(n_));
    if (u == v) throw InputError("loop edge rejected at vertex " + std::to_string(u));
    bit_set(bits_.data() + static_cast<std::size_t>(u) * words_, v);
    bit_set(bits_.data() + static_cast<std::size_t>(v) * words_, u);
}

Graph GraphBuilder::build(std::string name) && {
    return Graph(n_, words_, std::move(bits_), std::move(name));
}

Graph::Graph(int n, int words, std::vector<std::uint64_t> bits, std::string name)
    : n_(n), words_(words), bits_(std::move(bits)), name_(std::move(name)) {
    validate();
}

void Graph::validate() const {
    const std::uint64_t tail = tail_mask(n_);
    for (int u = 0; u < n_; ++u) {
        if (adjacent(u, u)) throw IntegrityError("loop at vertex " + std::to_string(u));
        if (row(u)[words_ - 1] & ~tail) throw IntegrityError("adjacency bits beyond vertex range");
    }
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v) != adjacent(v, u))
                throw IntegrityError("asymmetric adjacency at (" + std::to_string(u) + "," +
                                     std::to_string(v) + ")");
}

int Graph::degree(int u) const {
    return static_cast<int>(kernels::popcount(row(u), static_cast<std::size_t>(words_)));
}

long long Graph::n_edges() const {
    long long twice = 0;
    for (int u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree(u)));
    for_each_bit(row(u), words_, [&](int v) { out.push_back(v); });
    return out;
}

Graph from_edge_list(int n_vertices, const std::vector<std::pair<int, int>>& edges,
                     std::string name) {
    GraphBuilder b(n_vertices);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build(std::move(name));
}

DistanceRow bfs_distances(const Graph& g, int source) {
    const int n = g.n_vertices();
    if (source < 0 || source >= n) throw InputError("bfs source out of range");
    const int w = g.words_per_row();

    DistanceRow out;
    out.source = source;
    out.dist.assign(static_cast<std::size_t>(n), DistanceRow::unreachable);
    out.dist[static_cast<std::size_t>(source)] = 0;

    std::vector<std::uint64_t> visited(static_cast<std::size_t>(w), 0);
    std::vector<std::uint64_t> frontier(static_cast<std::size_t>(w), 0);
    std::vector<std::uint64_t> next(static_cast<std::size_t>(w), 0);
    bit_set(visited.data(), source);
    bit_set(frontier.data(), source);

    int level = 0;
    while (any_bit(frontier.data(), w)) {
        ++level;
        std::fill(next.begin(), next.end(), 0);
        for_each_bit(frontier.data(), w, [&](int u) {
            kernels::or_accumulate(next.data(), g.row(u), static_cast<std::size_t>(w));
        });
        for (int i = 0; i < w; ++i) next[static_cast<std::size_t>(i)] &= ~visited[static_cast<std::size_t>(i)];
        for_each_bit(next.data(), w, [&](int v) { out.dist[static_cast<std::size_t>(v)] = level; });
        for (int i = 0; i < w; ++i) visited[static_cast<std::size_t>(i)] |= next[static_cast<std::size_t>(i)];
        frontier.swap(next);
    }
    return out;
}

Graph square(const Graph& g) {
    const int n = g.n_vertices();
    const int w = g.words_per_row();
    GraphBuilder b(n);
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(w));
    for (int u = 0; u < n; ++u) {
        std::copy(g.row(u), g.row(u) + w, acc.begin());
        for_each_bit(g.row(u), w, [&](int v) {
            kernels::or_accumulate(acc.data(), g.row(v), static_cast<std::size_t>(w));
        });
        bit_clear(acc.data(), u);
        for_each_bit(acc.data(), w, [&](int v) {
            if (v > u) b.add_edge(u, v);
        });
    }
    return std::move(b).build("square(" + g.name() + ")");
}

Graph complement(const Graph& g) {
    const int n = g.n_vertices();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return std::move(b).build("complement(" + g.name() + ")");
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) throw InputError("induced subgraph needs a non-empty vertex set");
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.front() < 0 || vs.back() >= g.n_vertices())
        throw InputError("induced subgraph vertex out of range");

    const int m = static_cast<int>(vs.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]))
                b.add_edge(i, j);
    return InducedSubgraph{std::move(b).build("induced(" + g.name() + ")"), std::move(vs)};
}

bool is_connected(const Graph& g) {
    const DistanceRow d = bfs_distances(g, 0);
    for (int v = 0; v < g.n_vertices(); ++v)
        if (!d.reachable(v)) return false;
    return true;
}

std::optional<int> regular_valency(const Graph& g) {
    const int k = g.degree(0);
    for (int v = 1; v < g.n_vertices(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

int diameter(const Graph& g) {
    if (!is_connected(g)) throw StructureError("diameter undefined for disconnected graph");
    const int n = g.n_vertices();
    std::vector<int> ecc(static_cast<std::size_t>(n), 0);
    parallel_for(n, [&](int s) {
        const DistanceRow d = bfs_distances(g, s);
        int e = 0;
        for (int v = 0; v < n; ++v) e = std::max(e, d.dist[static_cast<std::size_t>(v)]);
        ecc[static_cast<std::size_t>(s)] = e;
    });
    return *std::max_element(ecc.begin(), ecc.end());
}

std::optional<int> girth(const Graph& g) {
    const int n = g.n_vertices();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));

    for (int root = 0; root < n && best > 3; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.clear();
        queue.push_back(root);
        dist[static_cast<std::size_t>(root)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for_each_bit(g.row(u), g.words_per_row(), [&](int v) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                }
            });
        }
        // Non-tree edges close cycles; min over all roots is exact.
        for (const int u : queue) {
            for_each_bit(g.row(u), g.words_per_row(), [&](int v) {
                if (v <= u) return;
                if (parent[static_cast<std::size_t>(u)] == v || parent[static_cast<std::size_t>(v)] == u) return;
                if (dist[static_cast<std::size_t>(v)] < 0) return;
                best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1);
            });
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool is_bipartite(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (dist[static_cast<std::size_t>(root)] >= 0) continue;
        queue.clear();
        queue.push_back(root);
        dist[static_cast<std::size_t>(root)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            bool odd_cycle = false;
            for_each_bit(g.row(u), g.words_per_row(), [&](int v) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                } else if (((dist[static_cast<std::size_t>(v)] ^ dist[static_cast<std::size_t>(u)]) & 1) == 0) {
                    odd_cycle = true;
                }
            });
            if (odd_cycle) return false;
        }
    }
    return true;
}

namespace {

// Vertex invariant used for isomorphism pruning: degree plus the histogram
// of BFS distances (unreachable vertices counted in a separate bucket).
using VertexInvariant = std::vector<int>;

std::vector<VertexInvariant> vertex_invariants(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<VertexInvariant> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const DistanceRow d = bfs_distances(g, v);
        VertexInvariant h;
        h.push_back(g.degree(v));
        int far = 0;
        std::vector<int> counts;
        for (int u = 0; u < n; ++u) {
            const int dv = d.dist[static_cast<std::size_t>(u)];
            if (dv == DistanceRow::unreachable) {
                ++far;
                continue;
            }
            if (static_cast<std::size_t>(dv) >= counts.size()) counts.resize(static_cast<std::size_t>(dv) + 1, 0);
            ++counts[static_cast<std::size_t>(dv)];
        }
        h.push_back(far);
        h.insert(h.end(), counts.begin(), counts.end());
        inv[static_cast<std::size_t>(v)] = std::move(h);
    }
    return inv;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    int n;
    std::vector<std::uint64_t> b_rows;  // single-word rows, n <= 64
    std::vector<int> order;             // mapping order of a's vertices
    std::vector<int> map;               // a vertex -> b vertex, -1 unset
    std::uint64_t full_mask;

    bool dfs(int depth, std::vector<std::uint64_t> cand, std::uint64_t used) {
        if (depth == n) return true;
        const int av = order[static_cast<std::size_t>(depth)];
        std::uint64_t m = cand[static_cast<std::size_t>(av)] & ~used;
        while (m) {
            const int bv = std::countr_zero(m);
            m &= m - 1;
            std::vector<std::uint64_t> next = cand;
            bool dead = false;
            for (int d2 = depth + 1; d2 < n && !dead; ++d2) {
                const int av2 = order[static_cast<std::size_t>(d2)];
                const std::uint64_t allowed =
                    a.adjacent(av2, av) ? b_rows[static_cast<std::size_t>(bv)]
                                        : (~b_rows[static_cast<std::size_t>(bv)] & full_mask);
                next[static_cast<std::size_t>(av2)] &= allowed;
                if ((next[static_cast<std::size_t>(av2)] & ~(used | (std::uint64_t{1} << bv))) == 0)
                    dead = true;
            }
            if (dead) continue;
            map[static_cast<std::size_t>(av)] = bv;
            if (dfs(depth + 1, std::move(next), used | (std::uint64_t{1} << bv))) return true;
            map[static_cast<std::size_t>(av)] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.n_vertices() != h.n_vertices()) return std::nullopt;
    const int n = g.n_vertices();
    if (n > iso_vertex_cap)
        throw ResourceError("isomorphism search capped at " + std::to_string(iso_vertex_cap) +
                            " vertices");
    if (g.n_edges() != h.n_edges()) return std::nullopt;

    const auto inv_g = vertex_invariants(g);
    const auto inv_h = vertex_invariants(h);

    // Class candidates: a g-vertex may only map to h-vertices with the same
    // invariant.
    std::map<VertexInvariant, std::uint64_t> h_classes;
    for (int v = 0; v < n; ++v) h_classes[inv_h[static_cast<std::size_t>(v)]] |= std::uint64_t{1} << v;

    std::vector<std::uint64_t> cand(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const auto it = h_classes.find(inv_g[static_cast<std::size_t>(v)]);
        if (it == h_classes.end()) return std::nullopt;
        cand[static_cast<std::size_t>(v)] = it->second;
    }

    IsoSearch s{g, h, n, {}, {}, std::vector<int>(static_cast<std::size_t>(n), -1), tail_mask(n)};
    s.b_rows.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) s.b_rows[static_cast<std::size_t>(v)] = h.row(v)[0] & s.full_mask;

    // Most-constrained vertices first.
    s.order.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) s.order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) {
        return std::popcount(cand[static_cast<std::size_t>(x)]) < std::popcount(cand[static_cast<std::size_t>(y)]);
    });

    if (!s.dfs(0, cand, 0)) return std::nullopt;

    // Verify the witness before handing it out.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != h.adjacent(s.map[static_cast<std::size_t>(u)], s.map[static_cast<std::size_t>(v)]))
                throw IntegrityError("isomorphism witness failed verification");
    return s.map;
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

} // namespace drglab
