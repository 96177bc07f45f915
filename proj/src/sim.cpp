#include "lec/sim.hpp"

#include <algorithm>
#include <map>

#include "lec/errors.hpp"
#include "lec/util.hpp"

namespace lec {

namespace {

// Event-driven synchronous engine. A node is activated in a round when it has
// inbox messages or a scheduled wake; untouched nodes take identity
// transitions, which by the NodeProgram purity contract is behaviourally
// identical to activating everyone each round. Wall time is therefore
// proportional to traffic, while round counts stay exact.
class Engine {
public:
    using BroadcastFn = std::function<void(Vertex from, const Msg&)>;
    using UnicastOkFn = std::function<bool(Vertex from, Vertex to)>;

    Engine(int n, const ProgramFactory& factory, long maxRounds, std::uint64_t seed,
           int maxDegree, const std::function<int(Vertex)>& degreeOf)
        : n_(n), maxRounds_(maxRounds) {
        nodes_.reserve(n);
        ctx_.reserve(n);
        for (Vertex v = 0; v < n; ++v) {
            NodeCtx ctx;
            ctx.id = v;
            ctx.degree = degreeOf(v);
            ctx.n = n;
            ctx.maxDegree = maxDegree;
            ctx.seed = mixSeed(seed, static_cast<std::uint64_t>(v));
            ctx_.push_back(ctx);
        }
        for (Vertex v = 0; v < n; ++v) nodes_.push_back(factory(ctx_[v]));
        terminated_.assign(n, false);
        cur_.assign(n, {});
        next_.assign(n, {});
        result_.outputs.assign(n, {});
        for (Vertex v = 0; v < n; ++v) scheduleWake(v, 0);
    }

    // Deliver msg from `from` into target's inbox for round currentRound_+1.
    void deliver(Vertex from, Vertex target, const Msg& msg) {
        if (target < 0 || target >= n_) throw PreconditionViolation("bad message target");
        if (terminated_[target]) return;
        if (next_[target].empty()) nextDirty_.push_back(target);
        next_[target].emplace_back(from, msg);
        scheduleWake(target, currentRound_ + 1);
        deliveredForRound_ = currentRound_ + 1;
    }

    SimResult run(const BroadcastFn& broadcast, const UnicastOkFn& canUnicast) {
        long lastTermination = 0;
        int alive = n_;
        while (alive > 0) {
            if (wakeQueue_.empty())
                throw RoundBudgetExceeded("deadlock: nodes idle without pending events");
            long round = wakeQueue_.begin()->first;
            if (round > maxRounds_)
                throw RoundBudgetExceeded("round budget exceeded at round " +
                                          std::to_string(round));
            currentRound_ = round;
            std::vector<Vertex> active = std::move(wakeQueue_.begin()->second);
            wakeQueue_.erase(wakeQueue_.begin());
            std::sort(active.begin(), active.end());
            active.erase(std::unique(active.begin(), active.end()), active.end());

            // Messages delivered during the previous processed round become
            // this round's inboxes.
            if (deliveredForRound_ == round) {
                std::swap(cur_, next_);
                std::swap(curDirty_, nextDirty_);
            }

            for (Vertex v : active) {
                if (terminated_[v]) continue;
                NodeAction action;
                nodes_[v]->onRound(ctx_[v], round, cur_[v], action);
                for (auto& [target, msg] : action.sends) {
                    if (!canUnicast(v, target))
                        throw PreconditionViolation("unicast to non-neighbor");
                    noteSize(msg);
                    deliver(v, target, msg);
                }
                if (action.broadcast) {
                    noteSize(action.broadcastPayload);
                    broadcast(v, action.broadcastPayload);
                }
                if (action.output) {
                    terminated_[v] = true;
                    result_.outputs[v] = std::move(*action.output);
                    lastTermination = std::max(lastTermination, round);
                    --alive;
                } else if (action.wakeAt >= 0) {
                    if (action.wakeAt <= round)
                        throw PreconditionViolation("wakeAt must be a future round");
                    scheduleWake(v, action.wakeAt);
                }
            }
            for (Vertex v : curDirty_) cur_[v].clear();
            curDirty_.clear();
        }
        result_.rounds = lastTermination;
        return std::move(result_);
    }

    long currentRound() const { return currentRound_; }

private:
    void scheduleWake(Vertex v, long round) { wakeQueue_[round].push_back(v); }
    void noteSize(const Msg& m) {
        result_.maxMessageBytes = std::max(result_.maxMessageBytes, m.size());
    }

    int n_;
    long maxRounds_;
    long currentRound_ = 0;
    long deliveredForRound_ = -1;
    std::vector<NodeCtx> ctx_;
    std::vector<std::unique_ptr<NodeProgram>> nodes_;
    std::vector<bool> terminated_;
    std::vector<std::vector<std::pair<Vertex, Msg>>> cur_, next_;
    std::vector<Vertex> curDirty_, nextDirty_;
    std::map<long, std::vector<Vertex>> wakeQueue_;
    SimResult result_;
};

}  // namespace

SimResult runSync(const Graph& g, const ProgramFactory& factory, long maxRounds,
                  std::uint64_t seed) {
    if (maxRounds < 0) throw PreconditionViolation("maxRounds must be >= 0");
    Engine engine(
        g.vertexCount(), factory, maxRounds, seed, g.maxDegree(),
        [&](Vertex v) { return g.degree(v); });
    return engine.run(
        [&](Vertex from, const Msg& msg) {
            for (Vertex w : g.neighbors(from)) engine.deliver(from, w, msg);
        },
        [&](Vertex from, Vertex to) { return g.hasEdge(from, to); });
}

SimResult runOnPower(const Graph& g, int k, const ProgramFactory& factory,
                     long maxRounds, std::uint64_t seed, int powerMaxDegree) {
    if (k < 1) throw PreconditionViolation("power layer needs k >= 1");
    Engine engine(
        g.vertexCount(), factory, maxRounds, seed, powerMaxDegree,
        [&](Vertex) { return -1; });
    return engine.run(
        [&](Vertex from, const Msg& msg) {
            std::vector<int> dist = bfsDistancesUpTo(g, from, k);
            for (Vertex w = 0; w < g.vertexCount(); ++w)
                if (w != from && dist[w] > 0) engine.deliver(from, w, msg);
        },
        [&](Vertex, Vertex) { return false; });  // unicast unsupported on implicit layers
}

void validateLayer(const Graph& base, const VirtualLayer& layer) {
    if (layer.overhead < 1) throw PreconditionViolation("overhead factor must be >= 1");
    if (static_cast<int>(layer.hostSets.size()) != layer.virtualGraph.vertexCount())
        throw PreconditionViolation("host set count mismatch");
    for (const auto& hosts : layer.hostSets) {
        if (hosts.empty()) throw PreconditionViolation("empty host set");
        InducedSubgraph sub = inducedSubgraph(base, hosts);
        std::vector<int> dist = bfsDistances(sub.graph, 0);
        for (int d : dist)
            if (d < 0) throw PreconditionViolation("host set not connected in base graph");
    }
}

SimResult runOnVirtual(const VirtualLayer& layer, const ProgramFactory& factory,
                       long maxRounds, std::uint64_t seed) {
    return runSync(layer.virtualGraph, factory, maxRounds, seed);
}

GatherResult gatherBall(const Graph& g, int k) {
    if (k < 0) throw PreconditionViolation("gather radius must be >= 0");
    GatherResult result;
    result.rounds = k;
    result.views.reserve(g.vertexCount());
    for (Vertex v = 0; v < g.vertexCount(); ++v) {
        BallView view;
        view.center = v;
        std::vector<int> dist = bfsDistancesUpTo(g, v, k);
        for (Vertex w = 0; w < g.vertexCount(); ++w)
            if (dist[w] >= 0) {
                view.vertices.push_back(w);
                view.dist.push_back(dist[w]);
            }
        for (Vertex w : view.vertices)
            for (Vertex x : g.neighbors(w))
                if (w < x && dist[x] >= 0) view.inducedEdges.emplace_back(w, x);
        result.views.push_back(std::move(view));
    }
    return result;
}

}  // namespace lec
