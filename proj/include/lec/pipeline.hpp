#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lec/clustering.hpp"
#include "lec/coloring.hpp"
#include "lec/extension.hpp"
#include "lec/graph.hpp"
#include "lec/hso.hpp"
#include "lec/sim.hpp"

namespace lec {

enum class Variant { Mis, Det, Rand };

Variant parseVariant(const std::string& name);
std::string variantName(Variant v);

struct PipelineConfig {
    Variant variant = Variant::Det;
    std::uint64_t seed = 0;
    int leafThreshold = -1;       // -1: max(2 * Delta^2, 4)
    long maxRounds = -1;          // -1: generous default budget
    bool enableFallbacks = true;
    int smallDeltaThreshold = 6;  // below this, the centralized colorer runs
    int randMaxRetries = 3;
    int forceRejectAttempts = 0;  // test hook for the retry path
};

enum class PipelineStatus { Ok, Infeasible, Budget, Error };

struct PipelineResult {
    PipelineStatus status = PipelineStatus::Ok;
    std::string statusDetail;
    PartialEdgeColoring coloring;
    RoundTrace trace;
    std::vector<std::string> fallbackEvents;

    // classification summary
    int clusterCount = 0;
    int easyCycleClusters = 0;
    int easyLowDegreeClusters = 0;
    int needsAssignmentClusters = 0;
    int gatePassedClusters = 0;
    int fallbackClusters = 0;

    bool hypergraphBuilt = false;
    long hyperMinDegree = 0;
    long hyperMaxRank = 0;
    bool gateHolds = true;  // vacuously true when no hypergraph was built

    // Rearranged matching and the per-cluster assigned pairs (including
    // fallback grabs); gatePassedSlots lists the clusters served by the
    // orientation rather than a fallback.
    EdgeSet mPrime;
    std::vector<AssignedPair> assignedPairs;
    std::vector<int> gatePassedSlots;

    int retriesUsed = 0;

    int colorsUsed() const {
        int best = 0;
        for (int c : coloring.colorOf) best = std::max(best, c + 1);
        return best;
    }
};

PipelineResult runMisVariant(const Graph& g, const PipelineConfig& cfg);
PipelineResult runDetVariant(const Graph& g, const PipelineConfig& cfg);
PipelineResult runRandVariant(const Graph& g, const PipelineConfig& cfg);
PipelineResult runPipeline(const Graph& g, const PipelineConfig& cfg);

struct FallbackRun {
    PipelineStatus status = PipelineStatus::Ok;
    std::string statusDetail;
    PartialEdgeColoring coloring;
};

// Centralized greedy-plus-backtracking colorer with at most 2*Delta-2 colors,
// for graphs below the small-Delta threshold. Reports Infeasible honestly
// when no such coloring exists (odd cycles at Delta = 2) and Budget when the
// search runs out.
FallbackRun smallDeltaFallback(const Graph& g);

// Rooted view of one cluster, shared by switching and extension.
ClusterTree clusterTreeOf(const Graph& g, const Clustering& cl, Vertex root);

}  // namespace lec
