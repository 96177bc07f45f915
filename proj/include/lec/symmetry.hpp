#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lec/coloring.hpp"
#include "lec/graph.hpp"
#include "lec/sim.hpp"

namespace lec {

struct VertexColoring {
    int paletteSize = 0;
    std::vector<int> colorOf;
};

struct RulingSet {
    std::vector<char> member;
    int alpha = 2;
    int beta = 1;

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < static_cast<int>(member.size()); ++v)
            if (member[v]) out.push_back(v);
        return out;
    }
};

enum class EdgeSetKind { Matching, TwoEdgeRuling };

struct EdgeSet {
    EdgeSetKind kind = EdgeSetKind::Matching;
    std::vector<char> member;  // by edge index of the graph it was computed on

    std::vector<int> memberIndices() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(member.size()); ++i)
            if (member[i]) out.push_back(i);
        return out;
    }
};

struct ColoringRun {
    VertexColoring coloring;
    long rounds = 0;
};

struct RulingRun {
    RulingSet set;
    long rounds = 0;
};

struct EdgeSetRun {
    EdgeSet set;
    long virtualRounds = 0;
    int overhead = 1;  // line-graph simulation factor
};

struct EdgeColoringRun {
    PartialEdgeColoring coloring;
    long virtualRounds = 0;
    int overhead = 1;
};

// One color-reduction round: palette m -> p^2 via degree-d polynomials over
// F_p, valid whenever p > d * maxDegree and p^(d+1) >= m.
struct LinialStep {
    long p = 0;
    int d = 0;
};

// The full reduction schedule from an m0-coloring; empty when no step shrinks
// the palette. All nodes compute this locally from (n, maxDegree), so no
// coordination rounds are spent on it.
std::vector<LinialStep> linialSchedule(long m0, int maxDegree);

// Final palette after running the schedule: min(m0, fixpoint) <= 9 * maxDeg^2.
long linialPaletteSize(long m0, int maxDegree);

// O(maxDeg^2)-coloring in O(log* n) rounds, started from the identity
// coloring by ids.
ColoringRun linialColoring(const Graph& g);

// (2,c)-ruling set for W given a proper d-coloring, in O(c * d^(1/c)) rounds.
RulingRun rulingSetFromColoring(const Graph& g, const VertexColoring& coloring,
                                const std::vector<char>& inW, int c);

// linialColoring followed by rulingSetFromColoring with c = ceil(log2 max(Delta,2)).
RulingRun detRulingSetLogDelta(const Graph& g);

struct RandRulingOptions {
    int maxAttempts = 3;
    int forceRejectAttempts = 0;  // test hook: reject the first k attempts
};

// Randomized (2, O(log Delta) cap O(log log n))-ruling set: silent coin-flip
// sparsification phases, one domination repair, then a staged ruling set on
// the survivors. Throws ValidityCheckFailed when every attempt is rejected.
RulingRun randRulingSet(const Graph& g, std::uint64_t seed,
                        const RandRulingOptions& opts = {});

// MIS = (2,1)-ruling set, computed as coloring-then-sweep.
RulingRun mis(const Graph& g);

// MIS on the line graph. Overhead 3 covers hosting a line-graph vertex on its
// two endpoints (gather, compute, scatter).
EdgeSetRun maximalMatching(const Graph& g);

// Independent edge set with every non-isolated vertex within 2 hops of a
// member (which implies every edge is within distance 2 of a member).
EdgeSetRun twoEdgeRulingSet(const Graph& g);

// Proper list edge coloring, greedy over line-graph color classes. lists[i]
// must have at least edgeDegree(i)+1 entries; pass {} with uniformPalette > 0
// for the shared palette [0, uniformPalette).
EdgeColoringRun greedyListEdgeColoring(const Graph& g,
                                       const std::vector<std::vector<int>>& lists,
                                       int uniformPalette = 0);

// ---- power-graph providers used by the pipeline (implicit G^8) ----

struct PowerRulingResult {
    RulingSet set;       // alpha/beta measured on G^8
    long virtualRounds = 0;
    std::string route;   // which strategy produced it
    int attempts = 1;    // > 1 only for the randomized provider
};

// Moore bound on |ball_r(v)| in a graph of max degree d.
long long ballSizeBound(int d, int r);

// MIS of G^8 via the sweep program on the implicit power layer.
PowerRulingResult misOnPower8(const Graph& g, long maxRounds);

// (2, O(log Delta))-ruling set of G^8. On graphs small enough that G^8 may be
// complete, a min-id wave solves it in O(1) power rounds; otherwise falls
// back to the coloring route.
PowerRulingResult detRulingSetOnPower8(const Graph& g, long maxRounds);

PowerRulingResult randRulingSetOnPower8(const Graph& g, std::uint64_t seed,
                                        long maxRounds,
                                        const RandRulingOptions& opts = {});

}  // namespace lec
