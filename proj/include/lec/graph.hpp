#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lec {

using Vertex = int;

// Canonical undirected edge, endpoints ordered u < v.
struct EdgeId {
    Vertex u = -1;
    Vertex v = -1;

    EdgeId() = default;
    EdgeId(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool operator==(const EdgeId&) const = default;
    bool operator<(const EdgeId& o) const { return u != o.u ? u < o.u : v < o.v; }
};

// Static undirected simple graph. Immutable after construction; vertices are
// dense integers 0..n-1 and edges carry stable indices into edges().
class Graph {
public:
    Graph() = default;

    // Validates simplicity (throws ParseError on self-loops or duplicates).
    static Graph fromEdges(int n, const std::vector<std::pair<Vertex, Vertex>>& edgeList);

    int vertexCount() const { return n_; }
    int edgeCount() const { return static_cast<int>(edges_.size()); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int maxDegree() const { return max_degree_; }

    const std::vector<EdgeId>& edges() const { return edges_; }
    const EdgeId& edge(int index) const { return edges_[index]; }

    // Edge indices incident to v, ascending.
    const std::vector<int>& incidentEdges(Vertex v) const { return incident_[v]; }

    bool hasEdge(Vertex u, Vertex v) const { return edgeIndex(u, v) >= 0; }

    // Index into edges() or -1.
    int edgeIndex(Vertex u, Vertex v) const;

    // deg(e) = deg(u) + deg(v) - 2, the number of adjacent edges.
    int edgeDegree(int index) const {
        const EdgeId& e = edges_[index];
        return degree(e.u) + degree(e.v) - 2;
    }

private:
    int n_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<EdgeId> edges_;
    std::vector<std::vector<int>> incident_;
};

// Single-source shortest path hop counts; -1 marks unreachable vertices.
std::vector<int> bfsDistances(const Graph& g, Vertex source);

// Distances truncated to radius k (entries beyond k are -1). Cheaper than a
// full sweep when only a local ball is needed.
std::vector<int> bfsDistancesUpTo(const Graph& g, Vertex source, int radius);

// Vertices within distance k of source, sorted ascending.
std::vector<Vertex> ballVertices(const Graph& g, Vertex source, int radius);

// G^k: edge {u,v} iff 0 < dist(u,v) <= k.
Graph powerGraph(const Graph& g, int k);

// Line graph plus the mapping from line-graph vertex to originating edge.
struct LineGraphResult {
    Graph graph;
    std::vector<EdgeId> vertexToEdge;  // index = line-graph vertex = edge index in g
};
LineGraphResult lineGraph(const Graph& g);

// Subgraph on the same vertex set with the given edge indices removed.
Graph removeEdges(const Graph& g, const std::vector<int>& edgeIndices);

// Induced subgraph; returns the graph on remapped ids 0..k-1 plus the map
// back to original vertex ids (sorted ascending).
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> toOriginal;
    std::vector<int> toLocal;  // -1 for vertices outside the set
};
InducedSubgraph inducedSubgraph(const Graph& g, const std::vector<Vertex>& vertices);

enum class GraphModel {
    RegularRandom,
    RegularHighGirth,
    Tree,
    Cycle,
    StarGadget,
};

struct GeneratorSpec {
    GraphModel model = GraphModel::RegularRandom;
    int n = 0;
    int d = 0;
    std::optional<int> girthMin;
    std::uint64_t seed = 0;
};

// Deterministic for a fixed spec. Throws InfeasibleSpec when the model
// constraints cannot be met (odd n*d, girth target out of reach, ...).
Graph generate(const GeneratorSpec& spec);

GraphModel parseModel(const std::string& name);

// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

}  // namespace lec
