#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lec/graph.hpp"

namespace lec {

// Messages are opaque byte strings; the model imposes no size bound but the
// maximum observed size is recorded for diagnostics.
using Msg = std::string;
using Output = std::vector<std::int64_t>;

struct NodeCtx {
    Vertex id = 0;
    int degree = 0;  // -1 on implicit power-graph layers (see runOnPower)
    int n = 0;
    int maxDegree = 0;
    std::uint64_t seed = 0;  // per-node stream seed, derived from the run seed
};

// What a node does in one activation. Messages are delivered next round.
// Setting `output` terminates the node: the sends of this final activation
// still go out, but the node never speaks again afterwards.
struct NodeAction {
    std::vector<std::pair<Vertex, Msg>> sends;  // unicast to a neighbor id
    bool broadcast = false;
    Msg broadcastPayload;
    std::optional<Output> output;
    long wakeAt = -1;  // next self-activation round; -1 = only wake on message
};

// State lives in the derived object; the constructor is the init step.
// Activations must be pure in (state, round, inbox): a node that is not
// activated behaves as if it took an identity transition, so event-driven
// execution coincides with full round-synchronous execution.
class NodeProgram {
public:
    virtual ~NodeProgram() = default;
    virtual void onRound(const NodeCtx& ctx, long round,
                         const std::vector<std::pair<Vertex, Msg>>& inbox,
                         NodeAction& action) = 0;
};

using ProgramFactory = std::function<std::unique_ptr<NodeProgram>(const NodeCtx&)>;

struct PhaseTrace {
    std::string phase;
    long virtualRounds = 0;
    long baseRounds = 0;
    int overhead = 1;
};

struct RoundTrace {
    std::vector<PhaseTrace> phases;
    std::size_t maxMessageBytes = 0;
    double wallSeconds = 0;  // diagnostics only; never serialized

    long totalBaseRounds() const {
        long total = 0;
        for (const auto& p : phases) total += p.baseRounds;
        return total;
    }
    void addPhase(const std::string& phase, long virtualRounds, int overhead) {
        phases.push_back({phase, virtualRounds, virtualRounds * overhead, overhead});
    }
    void append(const RoundTrace& other) {
        for (const auto& p : other.phases) phases.push_back(p);
        maxMessageBytes = std::max(maxMessageBytes, other.maxMessageBytes);
        wallSeconds += other.wallSeconds;
    }
};

struct SimResult {
    std::vector<Output> outputs;
    long rounds = 0;  // round index in which the last node terminated
    std::size_t maxMessageBytes = 0;
};

// Lockstep execution on g until every node has produced terminal output.
// Deterministic in (g, factory, maxRounds, seed). Throws RoundBudgetExceeded
// if some node is still running after round maxRounds.
SimResult runSync(const Graph& g, const ProgramFactory& factory, long maxRounds,
                  std::uint64_t seed);

// Executes a broadcast-only program on the implicit power graph g^k without
// materializing it: a broadcast from v reaches ball_k(v), one virtual round
// costs k base rounds. ctx.degree is -1 (unknown without a ball sweep);
// ctx.maxDegree is the supplied power-graph bound.
SimResult runOnPower(const Graph& g, int k, const ProgramFactory& factory,
                     long maxRounds, std::uint64_t seed, int powerMaxDegree);

// Virtual nodes mapped onto connected host sets of a base graph; one virtual
// round is realized by `overhead` base rounds of gather-compute-scatter.
struct VirtualLayer {
    Graph virtualGraph;
    std::vector<std::vector<Vertex>> hostSets;  // per virtual node, base vertices
    int overhead = 1;
};

// Throws PreconditionViolation if the layer is malformed (overhead < 1 or a
// host set not connected in the base graph).
void validateLayer(const Graph& base, const VirtualLayer& layer);

SimResult runOnVirtual(const VirtualLayer& layer, const ProgramFactory& factory,
                       long maxRounds, std::uint64_t seed);

// Induced radius-k view around every vertex, obtained in exactly k rounds.
struct BallView {
    Vertex center = 0;
    std::vector<Vertex> vertices;               // sorted ascending, includes center
    std::vector<int> dist;                      // parallel to vertices
    std::vector<std::pair<Vertex, Vertex>> inducedEdges;
};

struct GatherResult {
    std::vector<BallView> views;
    long rounds = 0;  // == k
};

GatherResult gatherBall(const Graph& g, int k);

}  // namespace lec
