#pragma once

#include <optional>
#include <vector>

#include "lec/coloring.hpp"
#include "lec/graph.hpp"

namespace lec {

// A rooted tree inside the base graph, described by parent pointers. Vertices
// not in the tree have parent -2; the root has parent -1.
struct ClusterTree {
    Vertex root = -1;
    std::vector<Vertex> vertices;   // sorted
    std::vector<Vertex> parentOf;   // size n, -2 = outside
    std::vector<int> depthOf;       // size n, -1 = outside

    bool contains(Vertex v) const { return parentOf[v] != -2; }
    std::vector<Vertex> layer(int k) const {
        std::vector<Vertex> out;
        for (Vertex v : vertices)
            if (depthOf[v] == k) out.push_back(v);
        return out;
    }
    // Tree edges whose shallower endpoint is at depth k.
    std::vector<int> layerEdges(const Graph& g, int k) const;
    std::vector<int> treeEdges(const Graph& g) const;
    int maxDepth() const;
};

// Colors on colored edges with exactly one endpoint in `layerVertices`.
std::vector<int> layerColors(const Graph& g, const PartialEdgeColoring& coloring,
                             const std::vector<Vertex>& layerVertices);

// Extend the coloring to the edges of an uncolored star via a saturating
// matching in the edge/color availability graph. Returns nullopt when no
// extension exists. starEdges must share the center vertex.
std::optional<PartialEdgeColoring> extendStar(const Graph& g,
                                              const PartialEdgeColoring& coloring,
                                              const std::vector<int>& starEdges);

// Recolor at most one of the two assigned edges so that the colors adjacent
// to tree layer k span at least maxDegree distinct values. Both edges must be
// colored, independent, and incident to tree leaves at depth k; the reserved
// color paletteSize-1 must be absent around layer k.
PartialEdgeColoring switchColors(const Graph& g, const PartialEdgeColoring& coloring,
                                 const ClusterTree& tree, int edge1, int edge2, int k);

// Extend the coloring to the whole tree, given a layer witnessing the
// colorful condition. Throws InvariantBroken if the per-layer invariant could
// not be maintained (precondition violation or bug).
PartialEdgeColoring extendTree(const Graph& g, const PartialEdgeColoring& coloring,
                               const ClusterTree& tree, int witnessedLayer);

// Extend the coloring to a connected uncolored component that contains an
// even cycle or a vertex of degree < maxDegree. componentEdges lists the
// uncolored edges; evenCycle may be empty when relying on a low-degree vertex.
PartialEdgeColoring extendEasyComponent(const Graph& g,
                                        const PartialEdgeColoring& coloring,
                                        const std::vector<int>& componentEdges,
                                        const std::vector<int>& evenCycle);

struct BruteForceOptions {
    int maxEdges = 16;
    long long nodeBudget = 20'000'000;
};

struct BruteForceResult {
    bool exists = false;
    PartialEdgeColoring witness;  // valid only when exists
};

// Exhaustive backtracking over available colors; sound and complete within
// the budget. Throws BudgetExceeded past the limits.
BruteForceResult bruteForceExtensionExists(const Graph& g,
                                           const PartialEdgeColoring& coloring,
                                           const std::vector<int>& uncoloredEdges,
                                           const BruteForceOptions& opts = {});

}  // namespace lec
