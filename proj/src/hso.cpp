#include "lec/hso.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "lec/errors.hpp"
#include "lec/util.hpp"

namespace lec {

Hypergraph Hypergraph::fromEdges(int vertexCount, std::vector<std::vector<int>> edges) {
    Hypergraph h;
    h.vertexCount = vertexCount;
    h.edgeVertices = std::move(edges);
    h.vertexEdges.assign(vertexCount, {});
    for (int e = 0; e < h.edgeCount(); ++e) {
        auto& vs = h.edgeVertices[e];
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (vs.empty()) throw PreconditionViolation("empty hyperedge");
        for (int v : vs) {
            if (v < 0 || v >= vertexCount)
                throw PreconditionViolation("hyperedge vertex out of range");
            h.vertexEdges[v].push_back(e);
        }
    }
    return h;
}

int Hypergraph::maxRank() const {
    int r = 0;
    for (const auto& e : edgeVertices) r = std::max(r, static_cast<int>(e.size()));
    return r;
}

int Hypergraph::minDegree() const {
    int d = vertexCount == 0 ? 0 : degree(0);
    for (int v = 1; v < vertexCount; ++v) d = std::min(d, degree(v));
    return d;
}

namespace {

using Inbox = std::vector<std::pair<Vertex, Msg>>;

// Canonical orientation every node of a component computes identically from
// full knowledge: a vertex-saturating matching via augmenting paths in the
// given order, then fillers for the remaining hyperedges.
struct CanonicalSolve {
    std::vector<int> winnerOf;
    std::vector<int> primaryWin;
    bool saturated = true;
};

CanonicalSolve canonicalOrientation(const Hypergraph& h, std::uint64_t orderSeed) {
    const int n = h.vertexCount;
    const int m = h.edgeCount();
    std::vector<int> vertexOrder(n);
    std::iota(vertexOrder.begin(), vertexOrder.end(), 0);
    std::vector<std::vector<int>> pref(n);
    for (int v = 0; v < n; ++v) pref[v] = h.vertexEdges[v];
    if (orderSeed != 0) {
        SplitMix64 rng(orderSeed);
        for (std::size_t i = vertexOrder.size(); i > 1; --i)
            std::swap(vertexOrder[i - 1], vertexOrder[rng.bounded(i)]);
        for (int v = 0; v < n; ++v)
            for (std::size_t i = pref[v].size(); i > 1; --i)
                std::swap(pref[v][i - 1], pref[v][rng.bounded(i)]);
    }
    std::vector<int> matchEdge(n, -1);   // vertex -> hyperedge
    std::vector<int> matchVertex(m, -1); // hyperedge -> vertex
    std::vector<int> visited(m, -1);
    int stamp = 0;
    // Kuhn's augmenting path over the incidence bipartite graph.
    std::function<bool(int)> tryAugment = [&](int v) -> bool {
        for (int e : pref[v]) {
            if (visited[e] == stamp) continue;
            visited[e] = stamp;
            if (matchVertex[e] < 0 || tryAugment(matchVertex[e])) {
                matchVertex[e] = v;
                matchEdge[v] = e;
                return true;
            }
        }
        return false;
    };
    CanonicalSolve out;
    for (int v : vertexOrder) {
        ++stamp;
        if (!tryAugment(v)) out.saturated = false;
    }
    out.winnerOf.assign(m, -1);
    out.primaryWin = matchEdge;
    for (int e = 0; e < m; ++e) {
        if (matchVertex[e] >= 0) {
            out.winnerOf[e] = matchVertex[e];
        } else if (orderSeed != 0) {
            SplitMix64 rng(mixSeed(orderSeed, 0x66696c6cULL + e));
            out.winnerOf[e] =
                h.edgeVertices[e][rng.bounded(h.edgeVertices[e].size())];
        } else {
            out.winnerOf[e] = h.edgeVertices[e].front();
        }
    }
    return out;
}

// Gather program on the incidence bipartite graph: flood membership deltas
// until the component is known, then output the locally computed canonical
// answer. Augmenting paths never cross components, so the shared full solve
// restricted to a component equals the component's own solve.
class HsoGatherProgram : public NodeProgram {
public:
    HsoGatherProgram(const Hypergraph* h, std::uint64_t orderSeed,
                     std::shared_ptr<std::optional<CanonicalSolve>> cache)
        : h_(h), orderSeed_(orderSeed), cache_(std::move(cache)) {}

    void onRound(const NodeCtx& ctx, long round, const Inbox& inbox,
                 NodeAction& action) override {
        if (round == 0) {
            known_.insert(ctx.id);
            Msg m;
            pushI64(m, ctx.id);
            action.broadcast = true;
            action.broadcastPayload = std::move(m);
            action.wakeAt = 1;
            return;
        }
        std::vector<std::int64_t> fresh;
        for (const auto& [from, msg] : inbox)
            for (std::size_t i = 0; i < i64Count(msg); ++i) {
                std::int64_t id = readI64(msg, i);
                if (known_.insert(id).second) fresh.push_back(id);
            }
        if (!fresh.empty()) {
            Msg m;
            for (std::int64_t id : fresh) pushI64(m, id);
            action.broadcast = true;
            action.broadcastPayload = std::move(m);
            action.wakeAt = round + 1;
            return;
        }
        // Silence: the ball stopped growing, so it is the whole component.
        if (!cache_->has_value()) *cache_ = canonicalOrientation(*h_, orderSeed_);
        const CanonicalSolve& solve = **cache_;
        int vhCount = h_->vertexCount;
        action.output = Output{ctx.id < vhCount
                                   ? solve.primaryWin[ctx.id]
                                   : solve.winnerOf[ctx.id - vhCount]};
    }

private:
    const Hypergraph* h_;
    std::uint64_t orderSeed_;
    std::shared_ptr<std::optional<CanonicalSolve>> cache_;
    std::set<std::int64_t> known_;
};

Graph incidenceGraph(const Hypergraph& h) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int e = 0; e < h.edgeCount(); ++e)
        for (int v : h.edgeVertices[e]) edges.emplace_back(v, h.vertexCount + e);
    return Graph::fromEdges(h.vertexCount + h.edgeCount(), edges);
}

bool sinklessOk(const Hypergraph& h, const Orientation& o) {
    if (static_cast<int>(o.winnerOf.size()) != h.edgeCount()) return false;
    std::vector<char> hasOut(h.vertexCount, 0);
    for (int e = 0; e < h.edgeCount(); ++e) {
        int w = o.winnerOf[e];
        if (w < 0 || !std::binary_search(h.edgeVertices[e].begin(),
                                         h.edgeVertices[e].end(), w))
            return false;
        hasOut[w] = 1;
    }
    for (int v = 0; v < h.vertexCount; ++v)
        if (!hasOut[v]) return false;
    return true;
}

HsoResult solveHso(const Hypergraph& h, std::uint64_t seed, long maxRounds,
                   int maxAttempts, int forceRejectAttempts, bool deterministic) {
    HsoResult result;
    result.minDegree = h.minDegree();
    result.maxRank = h.maxRank();
    {
        double r = std::max<double>(result.maxRank, 2);
        result.strongGateHolds =
            result.minDegree >= 320.0 * r * std::log2(r);
    }
    if (h.vertexCount == 0) {
        result.orientation.winnerOf.assign(h.edgeCount(), -1);
        for (int e = 0; e < h.edgeCount(); ++e)
            result.orientation.winnerOf[e] = -1;
        if (h.edgeCount() > 0)
            throw PreconditionViolation("hyperedges without vertices");
        return result;
    }
    if (result.minDegree <= result.maxRank)
        throw PreconditionViolation("sinkless orientation needs min degree > max rank");

    Graph incidence = incidenceGraph(h);
    for (int attempt = 0; attempt < maxAttempts; ++attempt) {
        std::uint64_t orderSeed =
            deterministic ? 0 : mixSeed(seed, 0x68736f00ULL + attempt);
        auto cache = std::make_shared<std::optional<CanonicalSolve>>();
        const Hypergraph* hp = &h;
        ProgramFactory factory = [hp, orderSeed, cache](const NodeCtx&) {
            return std::make_unique<HsoGatherProgram>(hp, orderSeed, cache);
        };
        SimResult sim = runSync(incidence, factory, maxRounds, orderSeed);
        Orientation o;
        o.winnerOf.assign(h.edgeCount(), -1);
        o.primaryWin.assign(h.vertexCount, -1);
        for (int v = 0; v < h.vertexCount; ++v)
            o.primaryWin[v] = static_cast<int>(sim.outputs[v][0]);
        for (int e = 0; e < h.edgeCount(); ++e)
            o.winnerOf[e] = static_cast<int>(sim.outputs[h.vertexCount + e][0]);
        result.rounds = sim.rounds;
        result.attemptsUsed = attempt + 1;
        bool ok = attempt >= forceRejectAttempts && sinklessOk(h, o);
        for (int v = 0; v < h.vertexCount && ok; ++v)
            if (o.primaryWin[v] < 0) ok = false;
        if (ok) {
            result.orientation = std::move(o);
            return result;
        }
        if (deterministic)
            throw InvariantBroken("deterministic orientation failed despite degree gate");
    }
    throw ValidityCheckFailed("sinkless orientation rejected on every attempt");
}

}  // namespace

HsoResult solveHsoDet(const Hypergraph& h, long maxRounds) {
    return solveHso(h, 0, maxRounds, 1, 0, true);
}

HsoResult solveHsoRand(const Hypergraph& h, std::uint64_t seed, long maxRounds,
                       int maxAttempts, int forceRejectAttempts) {
    return solveHso(h, seed, maxRounds, maxAttempts, forceRejectAttempts, false);
}

Hypergraph splitVertices(const Hypergraph& h) {
    for (int v = 0; v < h.vertexCount; ++v)
        if (h.degree(v) < 2)
            throw DegreeTooSmall("vertex " + std::to_string(v) + " has degree < 2");
    std::vector<std::vector<int>> edges(h.edgeCount());
    for (int v = 0; v < h.vertexCount; ++v) {
        const auto& inc = h.vertexEdges[v];  // sorted ascending
        for (std::size_t i = 0; i < inc.size(); ++i)
            edges[inc[i]].push_back(2 * v + static_cast<int>(i % 2));
    }
    return Hypergraph::fromEdges(2 * h.vertexCount, std::move(edges));
}

ProposalMap buildProposals(const Graph& g, const Graph& gr, const EdgeSet& targetsOnGr,
                           const Clustering& cl, const Classification& cls,
                           const std::vector<LeafSelection>& leaves) {
    const int n = gr.vertexCount();
    std::vector<int> targetIdx = targetsOnGr.memberIndices();
    // Multi-source BFS layers from target endpoints.
    std::vector<int> dist(n, -1);
    std::vector<Vertex> frontier;
    // Canonical proposal of the already-settled vertices.
    std::vector<int> targetOf(n, -1);   // g edge index
    std::vector<Vertex> nextHop(n, -1); // next vertex on the path (dist >= 1)
    for (int ei : targetIdx) {
        const EdgeId& e = gr.edge(ei);
        int gIdx = g.edgeIndex(e.u, e.v);
        for (Vertex v : {e.u, e.v}) {
            if (dist[v] == 0) {
                targetOf[v] = std::min(targetOf[v], gIdx);
                continue;
            }
            dist[v] = 0;
            targetOf[v] = gIdx;
            frontier.push_back(v);
        }
    }
    for (int layer = 1; layer <= 2; ++layer) {
        std::vector<Vertex> next;
        for (Vertex v = 0; v < n; ++v) {
            if (dist[v] >= 0) continue;
            int bestTarget = -1;
            Vertex bestHop = -1;
            for (Vertex w : gr.neighbors(v)) {
                if (dist[w] != layer - 1) continue;
                if (bestTarget < 0 || targetOf[w] < bestTarget ||
                    (targetOf[w] == bestTarget && w < bestHop)) {
                    bestTarget = targetOf[w];
                    bestHop = w;
                }
            }
            if (bestTarget >= 0) {
                dist[v] = layer;
                targetOf[v] = bestTarget;
                nextHop[v] = bestHop;
                next.push_back(v);
            }
        }
        (void)next;
    }

    auto pathOf = [&](Vertex v) {
        std::vector<Vertex> path{v};
        Vertex cur = v;
        while (dist[cur] > 0) {
            cur = nextHop[cur];
            path.push_back(cur);
        }
        return path;
    };

    int allowed = targetsOnGr.kind == EdgeSetKind::Matching ? 1 : 2;
    ProposalMap out;
    for (std::size_t slot = 0; slot < leaves.size(); ++slot) {
        if (cls.classOf[slot] != ClusterClass::NeedsAssignment || !leaves[slot].ok)
            continue;
        for (Vertex leaf : leaves[slot].leaves) {
            if (dist[leaf] < 0 || dist[leaf] > allowed)
                throw NoNearbyTarget("leaf " + std::to_string(leaf) +
                                     " has no target within distance " +
                                     std::to_string(allowed));
            std::vector<Vertex> path = pathOf(leaf);
            for (std::size_t i = 0; i < path.size(); ++i) {
                Vertex p = path[i];
                if (out.byVertex.count(p)) continue;  // already settled, same canon
                Proposal prop;
                prop.targetEdge = targetOf[p];
                prop.path.assign(path.begin() + i, path.end());
                out.byVertex.emplace(p, std::move(prop));
            }
        }
    }
    (void)cl;
    return out;
}

AuxHypergraph buildAuxHypergraph(const Graph& g, const ProposalMap& proposals,
                                 const Clustering& cl, const Classification& cls,
                                 const std::vector<LeafSelection>& leaves) {
    AuxHypergraph out;
    out.vertexOfSlot.assign(cls.classOf.size(), -1);
    std::map<int, int> edgeIndexOfTarget;
    std::vector<std::vector<int>> edges;

    // Participating slots in root order.
    for (std::size_t slot = 0; slot < leaves.size(); ++slot) {
        if (cls.classOf[slot] != ClusterClass::NeedsAssignment || !leaves[slot].ok)
            continue;
        out.vertexOfSlot[slot] = static_cast<int>(out.slotOfVertex.size());
        out.slotOfVertex.push_back(static_cast<int>(slot));
    }
    for (std::size_t slot = 0; slot < leaves.size(); ++slot) {
        if (out.vertexOfSlot[slot] < 0) continue;
        int hv = out.vertexOfSlot[slot];
        for (Vertex leaf : leaves[slot].leaves) {
            const Proposal& p = proposals.byVertex.at(leaf);
            auto [it, inserted] = edgeIndexOfTarget.try_emplace(
                p.targetEdge, static_cast<int>(edges.size()));
            if (inserted) {
                edges.emplace_back();
                out.targetOfEdge.push_back(p.targetEdge);
            }
            edges[it->second].push_back(hv);
            out.proposers[{it->second, hv}].push_back(leaf);
        }
    }
    for (auto& [key, list] : out.proposers) std::sort(list.begin(), list.end());
    out.h = Hypergraph::fromEdges(static_cast<int>(out.slotOfVertex.size()),
                                  std::move(edges));
    out.minDegree = out.h.minDegree();
    out.maxRank = out.h.maxRank();
    out.gateHolds = out.h.vertexCount > 0 && out.minDegree > out.maxRank;
    (void)g;
    (void)cl;
    return out;
}

RearrangeResult rearrangeMatching(const Graph& g, const AuxHypergraph& aux,
                                  const Hypergraph& split, const Orientation& orientation,
                                  const ProposalMap& proposals, const Clustering& cl,
                                  const std::vector<LeafSelection>& leaves) {
    RearrangeResult out;
    out.mPrime.kind = EdgeSetKind::Matching;
    out.mPrime.member.assign(g.edgeCount(), 0);

    auto chiEdge = [&](int hyperedge, int hv) {
        const auto& props = aux.proposers.at({hyperedge, hv});
        Vertex winner = props.front();  // minimum proposing leaf
        const Proposal& p = proposals.byVertex.at(winner);
        int moved;
        if (p.path.size() == 1) {
            moved = p.targetEdge;
        } else {
            moved = g.edgeIndex(p.path[0], p.path[1]);
            if (moved < 0) throw InvariantBroken("proposal path edge missing");
        }
        return std::make_pair(moved, winner);
    };

    for (std::size_t i = 0; i < aux.slotOfVertex.size(); ++i) {
        int hv = static_cast<int>(i);
        int slot = aux.slotOfVertex[i];
        AssignedPair pair;
        pair.slot = slot;
        pair.depth = leaves[slot].depth;
        int e1 = orientation.primaryWin[2 * hv];
        int e2 = orientation.primaryWin[2 * hv + 1];
        if (e1 < 0 || e2 < 0)
            throw InvariantBroken("cluster half without a won hyperedge");
        (void)split;
        auto [m1, w1] = chiEdge(e1, hv);
        auto [m2, w2] = chiEdge(e2, hv);
        pair.edge1 = m1;
        pair.leaf1 = w1;
        pair.edge2 = m2;
        pair.leaf2 = w2;
        out.mPrime.member[m1] = 1;
        out.mPrime.member[m2] = 1;
        out.pairs.push_back(pair);
    }

    // The moved set must stay a matching, and must avoid the forest.
    std::vector<char> seen(g.vertexCount(), 0);
    std::vector<char> forest(g.edgeCount(), 0);
    for (int ei : cl.forestEdges) forest[ei] = 1;
    for (int ei = 0; ei < g.edgeCount(); ++ei) {
        if (!out.mPrime.member[ei]) continue;
        if (forest[ei]) throw MatchingViolation("moved edge lies on the forest");
        const EdgeId& e = g.edge(ei);
        if (seen[e.u] || seen[e.v])
            throw MatchingViolation("moved edges share endpoint " +
                                    std::to_string(seen[e.u] ? e.u : e.v));
        seen[e.u] = seen[e.v] = 1;
    }
    return out;
}

}  // namespace lec
