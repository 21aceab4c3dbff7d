#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace drglab {

class Graph;

// Incrementally assembles an adjacency structure, then freezes it into an
// immutable Graph. add_edge validates endpoints and rejects loops;
// duplicates are harmless.
class GraphBuilder {
public:
    explicit GraphBuilder(int n_vertices);
    void add_edge(int u, int v);
    Graph build(std::string name) &&;

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

// Immutable simple undirected graph with dense bit-row adjacency. Vertex ids
// are 0..n_vertices()-1. Instances are safe to share across threads; every
// operation on them is a pure function.
class Graph {
public:
    int n_vertices() const { return n_; }
    int words_per_row() const { return words_; }
    const std::string& name() const { return name_; }

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }
    bool adjacent(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    int degree(int u) const;
    long long n_edges() const;

    // Neighbours of u in ascending order.
    std::vector<int> neighbors(int u) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    friend class GraphBuilder;
    Graph(int n, int words, std::vector<std::uint64_t> bits, std::string name);
    void validate() const; // symmetry + no loops; throws IntegrityError

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::string name_;
};

// BFS distances from a single source. Vertices in other components hold
// DistanceRow::unreachable (a sentinel, not -1, so it never enters
// arithmetic by accident).
struct DistanceRow {
    static constexpr int unreachable = std::numeric_limits<int>::max();
    int source = 0;
    std::vector<int> dist;

    bool reachable(int v) const { return dist[static_cast<std::size_t>(v)] != unreachable; }
};

Graph from_edge_list(int n_vertices, const std::vector<std::pair<int, int>>& edges,
                     std::string name = "graph");

DistanceRow bfs_distances(const Graph& g, int source);

// Same vertex set; u ~ v iff 1 <= d_g(u,v) <= 2. Works componentwise on
// disconnected inputs (distances across components are infinite, so no new
// edges appear between components).
Graph square(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices; // new id -> old id, ascending
};

// vertices may arrive in any order; they are deduplicated and sorted.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool is_connected(const Graph& g);
// Valency if the graph is regular.
std::optional<int> regular_valency(const Graph& g);

int diameter(const Graph& g); // StructureError if disconnected
std::optional<int> girth(const Graph& g); // nullopt for forests
bool is_bipartite(const Graph& g);

// Backtracking isomorphism search with (degree, distance-histogram)
// invariants for pruning. Intended for graphs up to iso_vertex_cap vertices;
// larger inputs raise ResourceError. The witness is verified edge-preserving
// before it is returned.
inline constexpr int iso_vertex_cap = 64;
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

} // namespace drglab
