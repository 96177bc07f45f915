#pragma once

#include <optional>
#include <vector>

#include "lec/graph.hpp"
#include "lec/sim.hpp"
#include "lec/symmetry.hpp"

namespace lec {

// Rooted vertex partition plus the BFS forest it was grown along. alpha/beta
// are the declared parameters: every root keeps its alpha-ball, and every
// vertex sits within beta hops of its root (so tree diameter <= 2*beta).
struct Clustering {
    std::vector<Vertex> rootOf;
    std::vector<Vertex> parentOf;  // -1 at roots
    std::vector<int> depthOf;
    std::vector<int> forestEdges;  // edge indices into the base graph
    int alpha = 4;
    int beta = 8;

    std::vector<Vertex> roots() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < static_cast<int>(rootOf.size()); ++v)
            if (rootOf[v] == v) out.push_back(v);
        return out;
    }

    std::vector<std::vector<Vertex>> clusterMembers() const;
};

struct ClusterRun {
    Clustering clustering;
    long rounds = 0;
};

// Grow clusters from a ruling set of G^8 by synchronous flooding; each vertex
// joins its closest root, ties broken by minimum root id then minimum parent
// id. powerBeta is the ruling set's beta on G^8 (1 for an MIS).
// Throws NotDominating when some vertex is never reached.
ClusterRun cluster(const Graph& g, const RulingSet& rulingSetOnPower8, int powerBeta);

enum class ClusterClass {
    EasyEvenCycle,
    EasyLowDegree,
    NeedsAssignment,
};

struct Classification {
    std::vector<ClusterClass> classOf;          // indexed like roots()
    std::vector<std::vector<int>> witnessCycle; // edge indices; empty unless EasyEvenCycle
    std::vector<Vertex> rootIndex;              // root vertex per cluster slot
    int indexOfRoot(Vertex root) const;
};

// Even-cycle detection runs on each cluster's induced subgraph. A cluster is
// NeedsAssignment only if it has no even cycle and every vertex has full
// degree in g.
Classification classifyClusters(const Graph& g, const Clustering& cl);

// Edge set of one even cycle inside the induced subgraph on `vertices`, or
// nullopt if none exists. Exposed for tests; classifyClusters uses it.
std::optional<std::vector<int>> findEvenCycle(const Graph& g,
                                              const std::vector<Vertex>& vertices);

// g minus the clustering forest. Max degree drops to Delta-1 whenever every
// cluster has >= 2 vertices.
Graph residualGraph(const Graph& g, const Clustering& cl);

struct LeafSelection {
    bool ok = false;              // false = InsufficientLeaves, cluster falls back
    int depth = 0;
    std::vector<Vertex> leaves;   // all tree leaves at that depth
};

// For each NeedsAssignment cluster, pick the depth >= 1 holding the most tree
// leaves; a cluster whose best layer is below `threshold` is marked !ok.
std::vector<LeafSelection> selectProposalLeaves(const Graph& g, const Clustering& cl,
                                                const Classification& cls,
                                                int threshold);

}  // namespace lec
