#include "lec/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lec/errors.hpp"
#include "lec/extension.hpp"
#include "lec/util.hpp"
#include "lec/verify.hpp"

namespace lec {

Variant parseVariant(const std::string& name) {
    if (name == "mis") return Variant::Mis;
    if (name == "det") return Variant::Det;
    if (name == "rand") return Variant::Rand;
    throw ParseError("unknown variant: " + name);
}

std::string variantName(Variant v) {
    switch (v) {
        case Variant::Mis: return "mis";
        case Variant::Det: return "det";
        case Variant::Rand: return "rand";
    }
    return "?";
}

ClusterTree clusterTreeOf(const Graph& g, const Clustering& cl, Vertex root) {
    ClusterTree t;
    t.root = root;
    t.parentOf.assign(g.vertexCount(), -2);
    t.depthOf.assign(g.vertexCount(), -1);
    for (Vertex v = 0; v < g.vertexCount(); ++v)
        if (cl.rootOf[v] == root) {
            t.vertices.push_back(v);
            t.parentOf[v] = cl.parentOf[v];
            t.depthOf[v] = cl.depthOf[v];
        }
    return t;
}

namespace {

const char* kPhaseNames[] = {"ruling_set",  "clustering", "residual_coloring",
                             "targets",     "proposals",  "hso",
                             "rearrange",   "color_switch", "extension"};

void ensureAllPhases(RoundTrace& trace) {
    std::set<std::string> present;
    for (const auto& p : trace.phases) present.insert(p.phase);
    for (const char* name : kPhaseNames)
        if (!present.count(name)) trace.phases.push_back({name, 0, 0, 1});
    // Keep the canonical order for stable serialization.
    std::vector<PhaseTrace> ordered;
    for (const char* name : kPhaseNames)
        for (const auto& p : trace.phases)
            if (p.phase == name) ordered.push_back(p);
    trace.phases = std::move(ordered);
}

// Connected components of the edge set, as lists of edge indices.
std::vector<std::vector<int>> edgeComponents(const Graph& g) {
    std::vector<int> comp(g.vertexCount(), -1);
    int k = 0;
    for (Vertex s = 0; s < g.vertexCount(); ++s) {
        if (comp[s] >= 0 || g.degree(s) == 0) continue;
        std::vector<Vertex> stack{s};
        comp[s] = k;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = k;
                    stack.push_back(w);
                }
        }
        ++k;
    }
    std::vector<std::vector<int>> out(k);
    for (int ei = 0; ei < g.edgeCount(); ++ei) out[comp[g.edge(ei).u]].push_back(ei);
    return out;
}

PipelineResult directSmallDegree(const Graph& g) {
    // Delta <= 2: paths and cycles, handled by the easy-component extender.
    PipelineResult r;
    int palette = std::max(2 * g.maxDegree() - 2, 0);
    r.coloring = PartialEdgeColoring::empty(g, palette);
    if (g.maxDegree() == 1 && g.edgeCount() > 0) {
        r.status = PipelineStatus::Infeasible;
        r.statusDetail = "palette 2*Delta-2 is empty at Delta=1";
        ensureAllPhases(r.trace);
        return r;
    }
    for (const auto& compEdges : edgeComponents(g)) {
        if (compEdges.empty()) continue;
        bool hasEndpoint = false;
        std::set<Vertex> vs;
        for (int ei : compEdges) {
            vs.insert(g.edge(ei).u);
            vs.insert(g.edge(ei).v);
        }
        for (Vertex v : vs)
            if (g.degree(v) < 2) hasEndpoint = true;
        if (hasEndpoint) {
            r.coloring = extendEasyComponent(g, r.coloring, compEdges, {});
        } else if (compEdges.size() % 2 == 0) {
            r.coloring = extendEasyComponent(g, r.coloring, compEdges, compEdges);
        } else {
            r.status = PipelineStatus::Infeasible;
            r.statusDetail = "odd cycle is not (2*Delta-2)-edge colorable at Delta=2";
            ensureAllPhases(r.trace);
            return r;
        }
    }
    r.fallbackEvents.push_back("direct-small-delta");
    r.trace.addPhase("extension", 1, 1);
    ensureAllPhases(r.trace);
    return r;
}

struct PairBook {
    std::map<int, AssignedPair> bySlot;
    std::vector<char> matchedVertex;
};

}  // namespace

FallbackRun smallDeltaFallback(const Graph& g) {
    FallbackRun out;
    const int delta = g.maxDegree();
    int palette = std::max(2 * delta - 2, 0);
    out.coloring = PartialEdgeColoring::empty(g, palette);
    if (g.edgeCount() == 0) return out;
    if (palette == 0) {
        out.status = PipelineStatus::Infeasible;
        out.statusDetail = "palette 2*Delta-2 is empty at Delta=1";
        return out;
    }
    for (const auto& compEdges : edgeComponents(g)) {
        if (compEdges.empty()) continue;
        // Greedy, most constrained edge first.
        PartialEdgeColoring attempt = out.coloring;
        bool stuck = false;
        std::vector<int> todo = compEdges;
        while (!todo.empty() && !stuck) {
            int pick = -1;
            std::size_t best = 0;
            std::size_t pickPos = 0;
            for (std::size_t i = 0; i < todo.size(); ++i) {
                std::size_t a = availableColors(g, attempt, todo[i]).size();
                if (pick < 0 || a < best) {
                    pick = todo[i];
                    best = a;
                    pickPos = i;
                }
            }
            if (best == 0) {
                stuck = true;
                break;
            }
            attempt.colorOf[pick] = availableColors(g, attempt, pick).front();
            todo.erase(todo.begin() + pickPos);
        }
        if (!stuck) {
            out.coloring = attempt;
            continue;
        }
        // Exhaustive per-component search within budget.
        BruteForceOptions opts;
        opts.maxEdges = 26;
        try {
            BruteForceResult bf = bruteForceExtensionExists(g, out.coloring, compEdges, opts);
            if (!bf.exists) {
                out.status = PipelineStatus::Infeasible;
                out.statusDetail = "a component admits no (2*Delta-2)-edge coloring";
                return out;
            }
            out.coloring = bf.witness;
        } catch (const BudgetExceeded& e) {
            out.status = PipelineStatus::Budget;
            out.statusDetail = e.what();
            return out;
        }
    }
    return out;
}

namespace {

PipelineResult runFull(const Graph& g, const PipelineConfig& cfg) {
    const int delta = g.maxDegree();
    const int palette = 2 * delta - 2;
    PipelineResult r;
    r.coloring = PartialEdgeColoring::empty(g, palette);
    r.mPrime.kind = EdgeSetKind::Matching;
    r.mPrime.member.assign(g.edgeCount(), 0);
    long budget = cfg.maxRounds > 0 ? cfg.maxRounds
                                    : 64L * std::max(g.vertexCount(), 64) + 4096;

    // Phase 1: ruling set on G^8, clustering, residual coloring.
    PowerRulingResult prr;
    switch (cfg.variant) {
        case Variant::Mis:
            prr = misOnPower8(g, budget);
            break;
        case Variant::Det:
            prr = detRulingSetOnPower8(g, budget);
            break;
        case Variant::Rand: {
            RandRulingOptions opts;
            opts.maxAttempts = cfg.randMaxRetries;
            opts.forceRejectAttempts = cfg.forceRejectAttempts;
            prr = randRulingSetOnPower8(g, cfg.seed, budget, opts);
            break;
        }
    }
    r.retriesUsed += prr.attempts - 1;
    r.trace.addPhase("ruling_set", prr.virtualRounds, 8);

    ClusterRun cr = cluster(g, prr.set, prr.set.beta);
    const Clustering& cl = cr.clustering;
    const int beta = cl.beta;
    Classification cls = classifyClusters(g, cl);
    // Clustering phase includes the local gather that classification runs on
    // (radius beta, so 2*beta+1 base rounds).
    r.trace.phases.push_back(
        {"clustering", cr.rounds + 2L * beta + 1, cr.rounds + 2L * beta + 1, 1});

    r.clusterCount = static_cast<int>(cls.classOf.size());
    for (ClusterClass c : cls.classOf) {
        if (c == ClusterClass::EasyEvenCycle) ++r.easyCycleClusters;
        if (c == ClusterClass::EasyLowDegree) ++r.easyLowDegreeClusters;
        if (c == ClusterClass::NeedsAssignment) ++r.needsAssignmentClusters;
    }

    // Withheld edges: one even cycle per easy-even-cycle cluster stays
    // uncolored through phase 1 so its extender has a cycle to work with.
    std::vector<int> removed = cl.forestEdges;
    for (const auto& cyc : cls.witnessCycle)
        removed.insert(removed.end(), cyc.begin(), cyc.end());
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    Graph gr = removeEdges(g, removed);

    EdgeColoringRun baseColors =
        greedyListEdgeColoring(gr, {}, std::max(2 * delta - 3, 1));
    for (int i = 0; i < gr.edgeCount(); ++i) {
        const EdgeId& e = gr.edge(i);
        r.coloring.colorOf[g.edgeIndex(e.u, e.v)] = baseColors.coloring.colorOf[i];
    }
    r.trace.addPhase("residual_coloring", baseColors.virtualRounds, baseColors.overhead);

    // Phase 2: assign two exclusive colored edges to every cluster that
    // needs them.
    PairBook pairs;
    pairs.matchedVertex.assign(g.vertexCount(), 0);
    std::vector<int> lastResort;
    std::vector<LeafSelection> leaves;

    if (r.needsAssignmentClusters > 0) {
        EdgeSetRun targets = cfg.variant == Variant::Mis ? maximalMatching(gr)
                                                         : twoEdgeRulingSet(gr);
        r.trace.addPhase("targets", targets.virtualRounds, targets.overhead);

        int threshold = cfg.leafThreshold > 0 ? cfg.leafThreshold
                                              : std::max(2 * delta * delta, 4);
        leaves = selectProposalLeaves(g, cl, cls, threshold);
        for (std::size_t slot = 0; slot < leaves.size(); ++slot)
            if (cls.classOf[slot] == ClusterClass::NeedsAssignment && !leaves[slot].ok)
                r.fallbackEvents.push_back(
                    "insufficient-leaves root=" + std::to_string(cls.rootIndex[slot]));

        ProposalMap proposals = buildProposals(g, gr, targets.set, cl, cls, leaves);
        r.trace.addPhase("proposals", 4, 1);

        AuxHypergraph aux = buildAuxHypergraph(g, proposals, cl, cls, leaves);
        r.hypergraphBuilt = aux.h.vertexCount > 0;
        r.hyperMinDegree = aux.minDegree;
        r.hyperMaxRank = aux.maxRank;
        r.gateHolds = !r.hypergraphBuilt || aux.gateHolds;

        // The split halves must each keep degree above the rank, so clusters
        // below 2*(rank+1) incident targets are resolved by the fallback.
        while (aux.h.vertexCount > 0) {
            int rank = aux.h.maxRank();
            std::vector<int> bad;
            for (int hv = 0; hv < aux.h.vertexCount; ++hv)
                if (aux.h.degree(hv) < 2 * (rank + 1)) bad.push_back(hv);
            if (bad.empty()) break;
            for (int hv : bad) {
                int slot = aux.slotOfVertex[hv];
                leaves[slot].ok = false;
                r.fallbackEvents.push_back("gate-degraded root=" +
                                           std::to_string(cls.rootIndex[slot]));
            }
            aux = buildAuxHypergraph(g, proposals, cl, cls, leaves);
        }

        if (aux.h.vertexCount > 0) {
            Hypergraph split = splitVertices(aux.h);
            HsoResult hso =
                cfg.variant == Variant::Rand
                    ? solveHsoRand(split, mixSeed(cfg.seed, 0x68736fULL), budget,
                                   cfg.randMaxRetries, cfg.forceRejectAttempts)
                    : solveHsoDet(split, budget);
            r.retriesUsed += hso.attemptsUsed - 1;
            r.trace.addPhase("hso", hso.rounds, 2 * (beta + 2) + 1);

            RearrangeResult rr = rearrangeMatching(g, aux, split, hso.orientation,
                                                   proposals, cl, leaves);
            r.trace.addPhase("rearrange", 2, 1);
            r.mPrime = rr.mPrime;
            for (const AssignedPair& p : rr.pairs) {
                pairs.bySlot[p.slot] = p;
                r.gatePassedSlots.push_back(p.slot);
                for (int ei : {p.edge1, p.edge2}) {
                    pairs.matchedVertex[g.edge(ei).u] = 1;
                    pairs.matchedVertex[g.edge(ei).v] = 1;
                }
            }
            r.gatePassedClusters = static_cast<int>(rr.pairs.size());
        }

        // Fallback: degraded clusters grab two free colored edges at a common
        // leaf depth, sequentially by root id.
        std::vector<char> isGrEdge(g.edgeCount(), 0);
        for (int i = 0; i < gr.edgeCount(); ++i) {
            const EdgeId& e = gr.edge(i);
            isGrEdge[g.edgeIndex(e.u, e.v)] = 1;
        }
        std::vector<char> hasChild(g.vertexCount(), 0);
        for (Vertex v = 0; v < g.vertexCount(); ++v)
            if (cl.parentOf[v] >= 0) hasChild[cl.parentOf[v]] = 1;
        for (std::size_t slot = 0; slot < leaves.size(); ++slot) {
            if (cls.classOf[slot] != ClusterClass::NeedsAssignment) continue;
            if (pairs.bySlot.count(static_cast<int>(slot))) continue;
            ++r.fallbackClusters;
            Vertex root = cls.rootIndex[slot];
            std::map<int, std::vector<Vertex>> byDepth;
            for (Vertex v = 0; v < g.vertexCount(); ++v)
                if (cl.rootOf[v] == root && !hasChild[v] && cl.depthOf[v] >= 1)
                    byDepth[cl.depthOf[v]].push_back(v);
            AssignedPair grabbed;
            for (const auto& [depth, leafList] : byDepth) {
                grabbed = AssignedPair{};
                for (Vertex leaf : leafList) {
                    for (int ei : g.incidentEdges(leaf)) {
                        if (!isGrEdge[ei] || !r.coloring.isColored(ei)) continue;
                        const EdgeId& e = g.edge(ei);
                        if (pairs.matchedVertex[e.u] || pairs.matchedVertex[e.v]) continue;
                        if (grabbed.edge1 >= 0) {
                            const EdgeId& f = g.edge(grabbed.edge1);
                            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v)
                                continue;
                            grabbed.edge2 = ei;
                            grabbed.leaf2 = leaf;
                            break;
                        }
                        grabbed.edge1 = ei;
                        grabbed.leaf1 = leaf;
                        break;  // one edge per leaf is enough
                    }
                    if (grabbed.edge2 >= 0) break;
                }
                if (grabbed.edge2 >= 0) {
                    grabbed.slot = static_cast<int>(slot);
                    grabbed.depth = depth;
                    break;
                }
            }
            if (grabbed.edge2 >= 0) {
                pairs.bySlot[grabbed.slot] = grabbed;
                for (int ei : {grabbed.edge1, grabbed.edge2}) {
                    pairs.matchedVertex[g.edge(ei).u] = 1;
                    pairs.matchedVertex[g.edge(ei).v] = 1;
                    r.mPrime.member[ei] = 1;
                }
                r.fallbackEvents.push_back("fallback-grab root=" + std::to_string(root));
            } else {
                lastResort.push_back(static_cast<int>(slot));
                r.fallbackEvents.push_back("fallback-grab-failed root=" +
                                           std::to_string(root));
            }
        }

        // Phase 3a: color switching per assigned cluster.
        bool anySwitch = false;
        for (auto& [slot, pair] : pairs.bySlot) {
            ClusterTree tree = clusterTreeOf(g, cl, cls.rootIndex[slot]);
            try {
                r.coloring =
                    switchColors(g, r.coloring, tree, pair.edge1, pair.edge2, pair.depth);
                anySwitch = true;
            } catch (const PreconditionViolation& e) {
                lastResort.push_back(slot);
                r.fallbackEvents.push_back("switch-failed root=" +
                                           std::to_string(cls.rootIndex[slot]) + ": " +
                                           e.what());
            }
        }
        r.trace.addPhase("color_switch", anySwitch ? 1 : 0, 2 * beta + 1);
        for (auto& [slot, pair] : pairs.bySlot) r.assignedPairs.push_back(pair);
    }

    // Phase 3b: extension, cluster by cluster (their uncolored edge sets are
    // vertex disjoint, so sequential application equals the parallel run).
    std::set<int> lastResortSet(lastResort.begin(), lastResort.end());
    std::vector<std::string> extendFailures;
    for (std::size_t slot = 0; slot < cls.classOf.size(); ++slot) {
        Vertex root = cls.rootIndex[slot];
        ClusterTree tree = clusterTreeOf(g, cl, root);
        std::vector<int> treeEdges = tree.treeEdges(g);
        switch (cls.classOf[slot]) {
            case ClusterClass::EasyLowDegree:
                r.coloring = extendEasyComponent(g, r.coloring, treeEdges, {});
                break;
            case ClusterClass::EasyEvenCycle: {
                std::vector<int> comp = treeEdges;
                comp.insert(comp.end(), cls.witnessCycle[slot].begin(),
                            cls.witnessCycle[slot].end());
                std::sort(comp.begin(), comp.end());
                comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
                r.coloring =
                    extendEasyComponent(g, r.coloring, comp, cls.witnessCycle[slot]);
                break;
            }
            case ClusterClass::NeedsAssignment: {
                int layer = -1;
                auto it = pairs.bySlot.find(static_cast<int>(slot));
                if (it != pairs.bySlot.end() && !lastResortSet.count(slot))
                    layer = it->second.depth;
                bool done = false;
                if (layer >= 1) {
                    try {
                        r.coloring = extendTree(g, r.coloring, tree, layer);
                        done = true;
                    } catch (const InvariantBroken& e) {
                        r.fallbackEvents.push_back("extend-tree-failed root=" +
                                                   std::to_string(root) + ": " + e.what());
                    }
                }
                if (!done) {
                    // Last resort: find any colorful layer, else brute force.
                    const int deltaNow = g.maxDegree();
                    int bestLayer = -1, bestCount = -1;
                    for (int k = 1; k <= tree.maxDepth(); ++k) {
                        int c = static_cast<int>(
                            layerColors(g, r.coloring, tree.layer(k)).size());
                        if (c > bestCount) {
                            bestCount = c;
                            bestLayer = k;
                        }
                    }
                    if (bestLayer >= 1 && bestCount >= deltaNow) {
                        try {
                            r.coloring = extendTree(g, r.coloring, tree, bestLayer);
                            done = true;
                        } catch (const InvariantBroken&) {
                        }
                    }
                    if (!done && treeEdges.size() <= 16) {
                        BruteForceResult bf =
                            bruteForceExtensionExists(g, r.coloring, treeEdges);
                        if (bf.exists) {
                            r.coloring = bf.witness;
                            done = true;
                        }
                    }
                    if (!done)
                        extendFailures.push_back("cluster root=" + std::to_string(root));
                }
                break;
            }
        }
    }
    r.trace.addPhase("extension", 1, 2 * beta + 1);
    ensureAllPhases(r.trace);

    if (!extendFailures.empty()) {
        r.status = PipelineStatus::Budget;
        r.statusDetail = "unextended clusters:";
        for (const auto& s : extendFailures) r.statusDetail += " " + s;
        return r;
    }
    CheckReport finalCheck = checkProperColoring(g, r.coloring, palette, true);
    if (!finalCheck.pass) {
        r.status = PipelineStatus::Error;
        r.statusDetail = "final checker: " + finalCheck.counterexample;
    }
    return r;
}

}  // namespace

PipelineResult runPipeline(const Graph& g, const PipelineConfig& cfg) {
    if (g.edgeCount() == 0) {
        PipelineResult r;
        r.coloring = PartialEdgeColoring::empty(g, std::max(2 * g.maxDegree() - 2, 0));
        ensureAllPhases(r.trace);
        return r;
    }
    if (g.maxDegree() <= 2) return directSmallDegree(g);
    if (g.maxDegree() < cfg.smallDeltaThreshold && cfg.enableFallbacks) {
        FallbackRun fb = smallDeltaFallback(g);
        PipelineResult r;
        r.status = fb.status;
        r.statusDetail = fb.statusDetail;
        r.coloring = fb.coloring;
        r.fallbackEvents.push_back("small-delta-fallback");
        r.trace.addPhase("extension", 1, 1);
        ensureAllPhases(r.trace);
        return r;
    }
    return runFull(g, cfg);
}

PipelineResult runMisVariant(const Graph& g, const PipelineConfig& cfg) {
    PipelineConfig c = cfg;
    c.variant = Variant::Mis;
    return runPipeline(g, c);
}

PipelineResult runDetVariant(const Graph& g, const PipelineConfig& cfg) {
    PipelineConfig c = cfg;
    c.variant = Variant::Det;
    return runPipeline(g, c);
}

PipelineResult runRandVariant(const Graph& g, const PipelineConfig& cfg) {
    PipelineConfig c = cfg;
    c.variant = Variant::Rand;
    return runPipeline(g, c);
}

}  // namespace lec
