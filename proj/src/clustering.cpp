#include "lec/clustering.hpp"

#include <algorithm>
#include <map>

#include "lec/errors.hpp"
#include "lec/util.hpp"

namespace lec {

namespace {

using Inbox = std::vector<std::pair<Vertex, Msg>>;

// Synchronous flooding from the ruling set: a vertex adopts the first root
// announcement it hears, ties broken by (root id, parent id).
class ClusterProgram : public NodeProgram {
public:
    explicit ClusterProgram(bool isRoot) : isRoot_(isRoot) {}

    void onRound(const NodeCtx& ctx, long round, const Inbox& inbox,
                 NodeAction& action) override {
        if (round == 0 && isRoot_) {
            Msg m;
            pushI64(m, ctx.id);
            action.broadcast = true;
            action.broadcastPayload = std::move(m);
            action.output = Output{ctx.id, -1, 0};
            return;
        }
        if (!inbox.empty()) {
            Vertex bestRoot = -1, bestParent = -1;
            for (const auto& [from, msg] : inbox) {
                Vertex root = static_cast<Vertex>(readI64(msg, 0));
                if (bestRoot < 0 || root < bestRoot ||
                    (root == bestRoot && from < bestParent)) {
                    bestRoot = root;
                    bestParent = from;
                }
            }
            Msg m;
            pushI64(m, bestRoot);
            action.broadcast = true;
            action.broadcastPayload = std::move(m);
            action.output = Output{bestRoot, bestParent, round};
            return;
        }
        if (round >= ctx.n + 2) {
            action.output = Output{-1, -1, -1};  // never reached
            return;
        }
        action.wakeAt = ctx.n + 2;
    }

private:
    bool isRoot_;
};

}  // namespace

std::vector<std::vector<Vertex>> Clustering::clusterMembers() const {
    std::vector<Vertex> rs = roots();
    std::vector<int> slotOfRoot(rootOf.size(), -1);
    for (int i = 0; i < static_cast<int>(rs.size()); ++i) slotOfRoot[rs[i]] = i;
    std::vector<std::vector<Vertex>> members(rs.size());
    for (Vertex v = 0; v < static_cast<int>(rootOf.size()); ++v)
        if (rootOf[v] >= 0) members[slotOfRoot[rootOf[v]]].push_back(v);
    return members;
}

ClusterRun cluster(const Graph& g, const RulingSet& rulingSetOnPower8, int powerBeta) {
    const int n = g.vertexCount();
    if (static_cast<int>(rulingSetOnPower8.member.size()) != n)
        throw PreconditionViolation("ruling set size mismatch");
    ProgramFactory factory = [&rulingSetOnPower8](const NodeCtx& ctx) {
        return std::make_unique<ClusterProgram>(rulingSetOnPower8.member[ctx.id] != 0);
    };
    SimResult sim = runSync(g, factory, static_cast<long>(n) + 4, 0);

    ClusterRun out;
    out.rounds = sim.rounds;
    Clustering& cl = out.clustering;
    cl.alpha = 4;
    cl.beta = 8 * std::max(powerBeta, 1);
    cl.rootOf.assign(n, -1);
    cl.parentOf.assign(n, -1);
    cl.depthOf.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        const Output& o = sim.outputs[v];
        if (o[0] < 0) throw NotDominating("vertex " + std::to_string(v) + " never reached");
        cl.rootOf[v] = static_cast<Vertex>(o[0]);
        cl.parentOf[v] = static_cast<Vertex>(o[1]);
        cl.depthOf[v] = static_cast<int>(o[2]);
        if (cl.parentOf[v] >= 0) {
            int ei = g.edgeIndex(v, cl.parentOf[v]);
            if (ei < 0) throw InvariantBroken("tree edge not present in graph");
            cl.forestEdges.push_back(ei);
        }
    }
    std::sort(cl.forestEdges.begin(), cl.forestEdges.end());
    return out;
}

namespace {

// Biconnected components of an induced subgraph, as lists of subgraph edge
// indices. Iterative Hopcroft-Tarjan with an explicit edge stack.
std::vector<std::vector<int>> blocks(const Graph& sub) {
    const int n = sub.vertexCount();
    std::vector<int> disc(n, -1), low(n, 0), parentEdge(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> edgeStack;
    int timer = 0;

    struct Frame {
        Vertex v;
        std::size_t nextIncident;
    };

    for (Vertex start = 0; start < n; ++start) {
        if (disc[start] >= 0) continue;
        std::vector<Frame> stack{{start, 0}};
        disc[start] = low[start] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = sub.incidentEdges(f.v);
            if (f.nextIncident < inc.size()) {
                int ei = inc[f.nextIncident++];
                if (ei == parentEdge[f.v]) continue;
                const EdgeId& e = sub.edge(ei);
                Vertex w = e.u == f.v ? e.v : e.u;
                if (disc[w] < 0) {
                    edgeStack.push_back(ei);
                    disc[w] = low[w] = timer++;
                    parentEdge[w] = ei;
                    stack.push_back({w, 0});
                } else if (disc[w] < disc[f.v]) {
                    edgeStack.push_back(ei);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Vertex w = f.v;
                stack.pop_back();
                if (stack.empty()) break;
                Vertex v = stack.back().v;
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    // Pop one block, delimited by the tree edge (v, w).
                    std::vector<int> block;
                    while (!edgeStack.empty()) {
                        int ei = edgeStack.back();
                        edgeStack.pop_back();
                        block.push_back(ei);
                        if (ei == parentEdge[w]) break;
                    }
                    out.push_back(std::move(block));
                }
            }
        }
    }
    return out;
}

struct BlockView {
    std::vector<int> edges;          // subgraph edge indices
    std::vector<Vertex> vertices;    // subgraph vertex ids, sorted
};

BlockView makeView(const Graph& sub, const std::vector<int>& blockEdges) {
    BlockView view;
    view.edges = blockEdges;
    for (int ei : blockEdges) {
        view.vertices.push_back(sub.edge(ei).u);
        view.vertices.push_back(sub.edge(ei).v);
    }
    std::sort(view.vertices.begin(), view.vertices.end());
    view.vertices.erase(std::unique(view.vertices.begin(), view.vertices.end()),
                        view.vertices.end());
    return view;
}

// BFS spanning tree of the block; parent edge per vertex (subgraph edge ids).
struct BlockTree {
    std::map<Vertex, int> depth;
    std::map<Vertex, int> parentEdge;  // -1 at the BFS root
    std::vector<int> nonTree;          // block edges outside the tree
};

BlockTree blockTree(const Graph& sub, const BlockView& view) {
    BlockTree t;
    std::map<Vertex, std::vector<int>> inc;
    for (int ei : view.edges) {
        inc[sub.edge(ei).u].push_back(ei);
        inc[sub.edge(ei).v].push_back(ei);
    }
    Vertex root = view.vertices.front();
    t.depth[root] = 0;
    t.parentEdge[root] = -1;
    std::vector<Vertex> frontier{root};
    std::vector<char> treeEdge(sub.edgeCount(), 0);
    while (!frontier.empty()) {
        std::vector<Vertex> next;
        for (Vertex v : frontier)
            for (int ei : inc[v]) {
                const EdgeId& e = sub.edge(ei);
                Vertex w = e.u == v ? e.v : e.u;
                if (!t.depth.count(w)) {
                    t.depth[w] = t.depth[v] + 1;
                    t.parentEdge[w] = ei;
                    treeEdge[ei] = 1;
                    next.push_back(w);
                }
            }
        frontier = std::move(next);
    }
    for (int ei : view.edges)
        if (!treeEdge[ei]) t.nonTree.push_back(ei);
    return t;
}

// Tree path between two block vertices as a list of subgraph edge ids.
std::vector<int> treePath(const Graph& sub, const BlockTree& t, Vertex a, Vertex b) {
    std::vector<int> fromA, fromB;
    Vertex x = a, y = b;
    auto step = [&](Vertex& v, std::vector<int>& acc) {
        int ei = t.parentEdge.at(v);
        acc.push_back(ei);
        const EdgeId& e = sub.edge(ei);
        v = e.u == v ? e.v : e.u;
    };
    while (x != y) {
        int dx = t.depth.at(x), dy = t.depth.at(y);
        if (dx >= dy)
            step(x, fromA);
        else
            step(y, fromB);
    }
    std::reverse(fromB.begin(), fromB.end());
    fromA.insert(fromA.end(), fromB.begin(), fromB.end());
    return fromA;
}

std::vector<int> fundamentalCycle(const Graph& sub, const BlockTree& t, int nonTreeEdge) {
    const EdgeId& e = sub.edge(nonTreeEdge);
    std::vector<int> cycle = treePath(sub, t, e.u, e.v);
    cycle.push_back(nonTreeEdge);
    return cycle;
}

// An even cycle inside one block with more edges than vertices. Every block
// that is neither an edge nor an odd cycle contains one; the construction is
// the classical ear argument.
std::vector<int> evenCycleInDenseBlock(const Graph& sub, const BlockView& view) {
    BlockTree t = blockTree(sub, view);
    for (int ei : t.nonTree) {
        std::vector<int> cyc = fundamentalCycle(sub, t, ei);
        if (cyc.size() % 2 == 0) return cyc;
    }
    // All fundamental cycles odd: take one and attach an ear or chord.
    std::vector<int> base = fundamentalCycle(sub, t, t.nonTree.front());
    std::vector<char> onCycleEdge(sub.edgeCount(), 0);
    std::vector<char> onCycleVertex(sub.vertexCount(), 0);
    for (int ei : base) {
        onCycleEdge[ei] = 1;
        onCycleVertex[sub.edge(ei).u] = 1;
        onCycleVertex[sub.edge(ei).v] = 1;
    }
    std::map<Vertex, std::vector<int>> inc;
    for (int ei : view.edges) {
        inc[sub.edge(ei).u].push_back(ei);
        inc[sub.edge(ei).v].push_back(ei);
    }
    // Cycle order: each cycle vertex has exactly two cycle edges, so walking
    // away from the previous edge traces the cycle once.
    std::vector<Vertex> order;
    {
        std::map<Vertex, std::vector<int>> cycleInc;
        for (int ei : base) {
            cycleInc[sub.edge(ei).u].push_back(ei);
            cycleInc[sub.edge(ei).v].push_back(ei);
        }
        Vertex start = sub.edge(base.front()).u;
        Vertex cur = start;
        int prevEdge = -1;
        do {
            order.push_back(cur);
            int nextEdge = -1;
            for (int ei : cycleInc[cur])
                if (ei != prevEdge) {
                    nextEdge = ei;
                    break;
                }
            const EdgeId& e = sub.edge(nextEdge);
            cur = e.u == cur ? e.v : e.u;
            prevEdge = nextEdge;
        } while (cur != start);
    }
    auto positionOf = [&](Vertex v) {
        return static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin());
    };
    auto arcEdges = [&](int fromPos, int toPos) {
        // Edges along the cycle from position fromPos forward to toPos.
        std::vector<int> arc;
        int L = static_cast<int>(order.size());
        int pos = fromPos;
        while (pos != toPos) {
            Vertex a = order[pos], b = order[(pos + 1) % L];
            for (int ei : inc[a])
                if (onCycleEdge[ei]) {
                    const EdgeId& e = sub.edge(ei);
                    if ((e.u == a && e.v == b) || (e.v == a && e.u == b)) {
                        arc.push_back(ei);
                        break;
                    }
                }
            pos = (pos + 1) % L;
        }
        return arc;
    };

    // Find an ear: a path leaving the cycle at x and re-entering at z != x,
    // interior disjoint from the cycle. A chord is the degenerate case.
    for (int startEdge : view.edges) {
        if (onCycleEdge[startEdge]) continue;
        const EdgeId& se = sub.edge(startEdge);
        Vertex x, y;
        if (onCycleVertex[se.u]) {
            x = se.u;
            y = se.v;
        } else if (onCycleVertex[se.v]) {
            x = se.v;
            y = se.u;
        } else {
            continue;
        }
        std::vector<int> ear{startEdge};
        Vertex z = -1;
        if (onCycleVertex[y] && y != x) {
            z = y;  // chord
        } else if (!onCycleVertex[y]) {
            // BFS from y through non-cycle vertices, avoiding x, until the
            // cycle is hit again.
            std::map<Vertex, int> via;  // vertex -> edge used to reach it
            via[y] = startEdge;
            std::vector<Vertex> frontier{y};
            Vertex hit = -1;
            int hitEdge = -1;
            while (!frontier.empty() && hit < 0) {
                std::vector<Vertex> next;
                for (Vertex v : frontier) {
                    for (int ei : inc[v]) {
                        const EdgeId& e = sub.edge(ei);
                        Vertex w = e.u == v ? e.v : e.u;
                        if (w == x || via.count(w)) continue;
                        if (onCycleVertex[w]) {
                            hit = w;
                            hitEdge = ei;
                            via[w] = ei;
                            break;
                        }
                        via[w] = ei;
                        next.push_back(w);
                    }
                    if (hit >= 0) break;
                }
                frontier = std::move(next);
            }
            if (hit < 0) continue;  // this start edge leads nowhere new
            // Reconstruct the ear path x -> y -> ... -> hit.
            std::vector<int> back;
            Vertex cur = hit;
            int curEdge = hitEdge;
            while (cur != y) {
                back.push_back(curEdge);
                const EdgeId& e = sub.edge(curEdge);
                cur = e.u == cur ? e.v : e.u;
                curEdge = via.at(cur);
            }
            std::reverse(back.begin(), back.end());
            ear.insert(ear.end(), back.begin(), back.end());
            z = hit;
        } else {
            continue;
        }
        int px = positionOf(x), pz = positionOf(z);
        std::vector<int> arc1 = arcEdges(px, pz);
        std::vector<int> arc2 = arcEdges(pz, px);
        std::vector<int>& arc = (ear.size() + arc1.size()) % 2 == 0 ? arc1 : arc2;
        std::vector<int> cycle = ear;
        cycle.insert(cycle.end(), arc.begin(), arc.end());
        if (cycle.size() % 2 != 0)
            throw InvariantBroken("ear construction produced an odd cycle");
        return cycle;
    }
    throw InvariantBroken("dense block without a reachable ear");
}

}  // namespace

std::optional<std::vector<int>> findEvenCycle(const Graph& g,
                                              const std::vector<Vertex>& vertices) {
    InducedSubgraph sub = inducedSubgraph(g, vertices);
    std::vector<std::vector<int>> comps = blocks(sub.graph);
    for (const auto& blockEdges : comps) {
        if (blockEdges.size() <= 1) continue;
        BlockView view = makeView(sub.graph, blockEdges);
        std::vector<int> found;
        if (view.edges.size() == view.vertices.size()) {
            if (view.edges.size() % 2 == 0) found = view.edges;  // the block is an even cycle
        } else if (view.edges.size() > view.vertices.size()) {
            found = evenCycleInDenseBlock(sub.graph, view);
        }
        if (!found.empty()) {
            std::vector<int> mapped;
            for (int ei : found) {
                const EdgeId& e = sub.graph.edge(ei);
                mapped.push_back(g.edgeIndex(sub.toOriginal[e.u], sub.toOriginal[e.v]));
            }
            std::sort(mapped.begin(), mapped.end());
            return mapped;
        }
    }
    return std::nullopt;
}

int Classification::indexOfRoot(Vertex root) const {
    auto it = std::lower_bound(rootIndex.begin(), rootIndex.end(), root);
    if (it == rootIndex.end() || *it != root) return -1;
    return static_cast<int>(it - rootIndex.begin());
}

Classification classifyClusters(const Graph& g, const Clustering& cl) {
    Classification out;
    out.rootIndex = cl.roots();
    auto members = cl.clusterMembers();
    const int delta = g.maxDegree();
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool lowDegree = false;
        for (Vertex v : members[i])
            if (g.degree(v) < delta) {
                lowDegree = true;
                break;
            }
        if (lowDegree) {
            out.classOf.push_back(ClusterClass::EasyLowDegree);
            out.witnessCycle.emplace_back();
            continue;
        }
        if (auto cyc = findEvenCycle(g, members[i])) {
            out.classOf.push_back(ClusterClass::EasyEvenCycle);
            out.witnessCycle.push_back(std::move(*cyc));
            continue;
        }
        out.classOf.push_back(ClusterClass::NeedsAssignment);
        out.witnessCycle.emplace_back();
    }
    return out;
}

Graph residualGraph(const Graph& g, const Clustering& cl) {
    Graph res = removeEdges(g, cl.forestEdges);
    auto members = cl.clusterMembers();
    bool allHaveTwo = true;
    for (const auto& m : members)
        if (m.size() < 2) allHaveTwo = false;
    if (allHaveTwo && res.maxDegree() > g.maxDegree() - 1)
        throw InvariantBroken("residual degree bound violated");
    return res;
}

std::vector<LeafSelection> selectProposalLeaves(const Graph& g, const Clustering& cl,
                                                const Classification& cls,
                                                int threshold) {
    (void)g;
    auto members = cl.clusterMembers();
    std::vector<char> hasChild(cl.rootOf.size(), 0);
    for (Vertex v = 0; v < static_cast<int>(cl.rootOf.size()); ++v)
        if (cl.parentOf[v] >= 0) hasChild[cl.parentOf[v]] = 1;
    std::vector<LeafSelection> out(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (cls.classOf[i] != ClusterClass::NeedsAssignment) continue;
        std::map<int, std::vector<Vertex>> byDepth;
        for (Vertex v : members[i])
            if (!hasChild[v] && cl.depthOf[v] >= 1) byDepth[cl.depthOf[v]].push_back(v);
        int bestDepth = -1;
        std::size_t bestCount = 0;
        for (const auto& [depth, leaves] : byDepth)
            if (leaves.size() > bestCount) {
                bestCount = leaves.size();
                bestDepth = depth;
            }
        LeafSelection& sel = out[i];
        if (bestDepth >= 1 && static_cast<int>(bestCount) >= threshold) {
            sel.ok = true;
            sel.depth = bestDepth;
            sel.leaves = byDepth[bestDepth];
            std::sort(sel.leaves.begin(), sel.leaves.end());
        }
    }
    return out;
}

}  // namespace lec
