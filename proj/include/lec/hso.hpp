#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lec/clustering.hpp"
#include "lec/graph.hpp"
#include "lec/symmetry.hpp"

namespace lec {

struct Hypergraph {
    int vertexCount = 0;
    std::vector<std::vector<int>> edgeVertices;  // hyperedge -> incident vertices, sorted
    std::vector<std::vector<int>> vertexEdges;   // vertex -> incident hyperedges, sorted

    static Hypergraph fromEdges(int vertexCount, std::vector<std::vector<int>> edges);

    int edgeCount() const { return static_cast<int>(edgeVertices.size()); }
    int rank(int e) const { return static_cast<int>(edgeVertices[e].size()); }
    int degree(int v) const { return static_cast<int>(vertexEdges[v].size()); }
    int maxRank() const;
    int minDegree() const;
};

// Total orientation: every hyperedge is outgoing for exactly one incident
// vertex. primaryWin records, per vertex, the one hyperedge it owes its
// sinklessness to (-1 if the solver left it unmatched).
struct Orientation {
    std::vector<int> winnerOf;    // hyperedge -> vertex
    std::vector<int> primaryWin;  // vertex -> hyperedge
};

struct HsoResult {
    Orientation orientation;
    long rounds = 0;
    long minDegree = 0;
    long maxRank = 0;
    bool strongGateHolds = false;  // delta >= 320 r log2 r (randomized theorem gate)
    int attemptsUsed = 1;
};

// Deterministic sinkless orientation. pre: minDegree > maxRank.
HsoResult solveHsoDet(const Hypergraph& h, long maxRounds);

// Randomized variant: seeded solve order; validity is checked and failed
// attempts retried. The stronger theorem gate is reported, not required.
HsoResult solveHsoRand(const Hypergraph& h, std::uint64_t seed, long maxRounds,
                       int maxAttempts = 3, int forceRejectAttempts = 0);

// Split every vertex into two halves, dividing its incident hyperedges as
// evenly as possible (sizes differ by at most one). Halves of vertex v are
// 2v and 2v+1. pre: every vertex has degree >= 2.
Hypergraph splitVertices(const Hypergraph& h);

// One vertex's proposal: the target edge (index into the base graph) and the
// shortest path used, from the proposer to the nearer endpoint inclusive.
struct Proposal {
    int targetEdge = -1;
    std::vector<Vertex> path;
};

struct ProposalMap {
    std::map<Vertex, Proposal> byVertex;
};

// Canonical proposals for the selected leaves of every NeedsAssignment
// cluster, plus the conscripted proposals of the vertices on their paths.
// Distances are measured in `gr` (the graph the targets were computed on);
// target indices refer to `g`. Throws NoNearbyTarget if a leaf has no target
// within distance 2 (distance 1 for matching targets).
ProposalMap buildProposals(const Graph& g, const Graph& gr, const EdgeSet& targetsOnGr,
                           const Clustering& cl, const Classification& cls,
                           const std::vector<LeafSelection>& leaves);

struct AuxHypergraph {
    Hypergraph h;                        // vertices = participating cluster slots
    std::vector<int> slotOfVertex;       // hypergraph vertex -> classification slot
    std::vector<int> vertexOfSlot;       // classification slot -> hypergraph vertex or -1
    std::vector<int> targetOfEdge;       // hyperedge -> edge index in g
    // leaf proposers per (hyperedge, hypergraph vertex), sorted ascending
    std::map<std::pair<int, int>, std::vector<Vertex>> proposers;
    long minDegree = 0;
    long maxRank = 0;
    bool gateHolds = false;  // minDegree > maxRank
};

// Hyperedge membership comes from the selected leaves' proposals (conscripted
// path proposals keep the matching argument intact but do not add members).
AuxHypergraph buildAuxHypergraph(const Graph& g, const ProposalMap& proposals,
                                 const Clustering& cl, const Classification& cls,
                                 const std::vector<LeafSelection>& leaves);

struct AssignedPair {
    int slot = -1;       // classification slot of the cluster
    int depth = 0;       // common tree depth of the two winning leaves
    int edge1 = -1;      // edge indices in g
    int edge2 = -1;
    Vertex leaf1 = -1;
    Vertex leaf2 = -1;
};

struct RearrangeResult {
    EdgeSet mPrime;  // on g edge indices
    std::vector<AssignedPair> pairs;
};

// chi: move each kept winning hyperedge's target next to the leaf that won
// it; each cluster keeps one edge per half and discards the rest. Throws
// MatchingViolation if the result is not a matching in g minus the forest.
RearrangeResult rearrangeMatching(const Graph& g, const AuxHypergraph& aux,
                                  const Hypergraph& split, const Orientation& orientation,
                                  const ProposalMap& proposals, const Clustering& cl,
                                  const std::vector<LeafSelection>& leaves);

}  // namespace lec
