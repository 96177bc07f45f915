#include "lec/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lec {

CheckReport checkProperColoring(const Graph& g, const PartialEdgeColoring& coloring,
                                int paletteBound, bool requireTotal) {
    CheckReport report{"proper-coloring"};
    for (int ei = 0; ei < g.edgeCount(); ++ei) {
        ++report.count;
        int c = coloring.colorOf[ei];
        if (c < 0) {
            if (requireTotal)
                report.fail("edge " + std::to_string(ei) + " uncolored");
            continue;
        }
        if (c >= paletteBound)
            report.fail("edge " + std::to_string(ei) + " color " + std::to_string(c) +
                        " exceeds palette " + std::to_string(paletteBound));
    }
    for (Vertex v = 0; v < g.vertexCount(); ++v) {
        const auto& inc = g.incidentEdges(v);
        std::set<int> seen;
        for (int ei : inc) {
            int c = coloring.colorOf[ei];
            if (c < 0) continue;
            if (!seen.insert(c).second)
                report.fail("vertex " + std::to_string(v) + " has two incident edges of color " +
                            std::to_string(c));
        }
    }
    return report;
}

CheckReport checkClustering(const Graph& g, const Clustering& cl) {
    CheckReport report{"clustering"};
    const int n = g.vertexCount();
    for (Vertex v = 0; v < n; ++v) {
        ++report.count;
        Vertex r = cl.rootOf[v];
        if (r < 0 || r >= n || cl.rootOf[r] != r) {
            report.fail("vertex " + std::to_string(v) + " has invalid root");
            return report;
        }
        if (v == r) {
            if (cl.depthOf[v] != 0 || cl.parentOf[v] != -1)
                report.fail("root " + std::to_string(v) + " with nonzero depth or parent");
            continue;
        }
        Vertex p = cl.parentOf[v];
        if (p < 0 || !g.hasEdge(v, p) || cl.rootOf[p] != r ||
            cl.depthOf[p] != cl.depthOf[v] - 1)
            report.fail("vertex " + std::to_string(v) + " has inconsistent parent");
        if (cl.depthOf[v] > cl.beta)
            report.fail("vertex " + std::to_string(v) + " deeper than beta");
    }
    if (!report.pass) return report;
    // Forest edge set must be exactly the parent edges.
    std::set<int> forest(cl.forestEdges.begin(), cl.forestEdges.end());
    std::size_t parentEdges = 0;
    for (Vertex v = 0; v < n; ++v)
        if (cl.parentOf[v] >= 0) {
            ++parentEdges;
            if (!forest.count(g.edgeIndex(v, cl.parentOf[v])))
                report.fail("missing forest edge at vertex " + std::to_string(v));
        }
    if (forest.size() != parentEdges) report.fail("stray forest edges");
    // Root containment: the alpha-ball around each root stays in its cluster.
    for (Vertex r : cl.roots()) {
        std::vector<int> dist = bfsDistancesUpTo(g, r, cl.alpha);
        for (Vertex v = 0; v < n; ++v)
            if (dist[v] >= 0 && cl.rootOf[v] != r)
                report.fail("vertex " + std::to_string(v) + " inside N^alpha(" +
                            std::to_string(r) + ") but clustered elsewhere");
    }
    return report;
}

CheckReport checkRulingSet(const Graph& g, const RulingSet& rs) {
    CheckReport report{"ruling-set"};
    std::vector<Vertex> members = rs.members();
    report.count = static_cast<long>(members.size());
    for (Vertex v : members) {
        std::vector<int> dist = bfsDistancesUpTo(g, v, rs.alpha - 1);
        for (Vertex w : members)
            if (w != v && dist[w] >= 0)
                report.fail("members " + std::to_string(v) + "," + std::to_string(w) +
                            " at distance < alpha");
    }
    if (g.vertexCount() == 0) return report;
    if (members.empty()) {
        report.fail("empty ruling set on a nonempty graph");
        return report;
    }
    std::vector<int> dist(g.vertexCount(), -1);
    std::vector<Vertex> frontier;
    for (Vertex v : members) {
        dist[v] = 0;
        frontier.push_back(v);
    }
    int d = 0;
    while (!frontier.empty() && d < rs.beta) {
        std::vector<Vertex> next;
        for (Vertex v : frontier)
            for (Vertex w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = d + 1;
                    next.push_back(w);
                }
        frontier = std::move(next);
        ++d;
    }
    for (Vertex v = 0; v < g.vertexCount(); ++v)
        if (dist[v] < 0)
            report.fail("vertex " + std::to_string(v) + " not dominated within beta");
    return report;
}

CheckReport checkMatching(const Graph& g, const EdgeSet& es, bool requireMaximal) {
    CheckReport report{"matching"};
    std::vector<char> matched(g.vertexCount(), 0);
    for (int ei = 0; ei < g.edgeCount(); ++ei) {
        if (!es.member[ei]) continue;
        ++report.count;
        const EdgeId& e = g.edge(ei);
        if (matched[e.u] || matched[e.v])
            report.fail("edges share endpoint at edge " + std::to_string(ei));
        matched[e.u] = matched[e.v] = 1;
    }
    if (requireMaximal)
        for (int ei = 0; ei < g.edgeCount(); ++ei) {
            if (es.member[ei]) continue;
            const EdgeId& e = g.edge(ei);
            if (!matched[e.u] && !matched[e.v])
                report.fail("edge " + std::to_string(ei) + " could be added");
        }
    return report;
}

CheckReport checkTwoEdgeRuling(const Graph& g, const EdgeSet& es) {
    CheckReport report{"two-edge-ruling"};
    std::vector<char> covered(g.vertexCount(), 0);
    for (int ei = 0; ei < g.edgeCount(); ++ei) {
        if (!es.member[ei]) continue;
        ++report.count;
        covered[g.edge(ei).u] = 1;
        covered[g.edge(ei).v] = 1;
    }
    // Independence: members share no endpoint.
    std::vector<int> memberAt(g.vertexCount(), -1);
    for (int ei = 0; ei < g.edgeCount(); ++ei) {
        if (!es.member[ei]) continue;
        for (Vertex v : {g.edge(ei).u, g.edge(ei).v}) {
            if (memberAt[v] >= 0)
                report.fail("members " + std::to_string(memberAt[v]) + "," +
                            std::to_string(ei) + " share endpoint " + std::to_string(v));
            memberAt[v] = ei;
        }
    }
    // Domination: every non-isolated vertex within 2 hops of a member edge.
    std::vector<int> dist(g.vertexCount(), -1);
    std::vector<Vertex> frontier;
    for (Vertex v = 0; v < g.vertexCount(); ++v)
        if (covered[v]) {
            dist[v] = 0;
            frontier.push_back(v);
        }
    for (int d = 0; d < 2 && !frontier.empty(); ++d) {
        std::vector<Vertex> next;
        for (Vertex v : frontier)
            for (Vertex w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = d + 1;
                    next.push_back(w);
                }
        frontier = std::move(next);
    }
    for (Vertex v = 0; v < g.vertexCount(); ++v)
        if (g.degree(v) > 0 && dist[v] < 0)
            report.fail("vertex " + std::to_string(v) + " not within 2 hops of a member");
    return report;
}

CheckReport checkSinkless(const Hypergraph& h, const Orientation& orientation,
                          int requiredOutgoing) {
    CheckReport report{"sinkless"};
    std::vector<int> outgoing(h.vertexCount, 0);
    for (int e = 0; e < h.edgeCount(); ++e) {
        ++report.count;
        int w = orientation.winnerOf[e];
        if (w < 0 ||
            !std::binary_search(h.edgeVertices[e].begin(), h.edgeVertices[e].end(), w)) {
            report.fail("hyperedge " + std::to_string(e) + " has no incident winner");
            continue;
        }
        ++outgoing[w];
    }
    for (int v = 0; v < h.vertexCount; ++v)
        if (outgoing[v] < requiredOutgoing)
            report.fail("vertex " + std::to_string(v) + " has only " +
                        std::to_string(outgoing[v]) + " outgoing hyperedges");
    return report;
}

CheckReport checkColorfulCondition(const Graph& g, const PartialEdgeColoring& coloring,
                                   const ClusterTree& tree, int delta) {
    CheckReport report{"colorful-condition"};
    int best = 0;
    for (int k = 1; k <= tree.maxDepth(); ++k) {
        ++report.count;
        std::vector<Vertex> layer = tree.layer(k);
        if (layer.empty()) continue;
        best = std::max(best,
                        static_cast<int>(layerColors(g, coloring, layer).size()));
    }
    if (best < delta)
        report.fail("no layer reaches " + std::to_string(delta) + " colors (best " +
                    std::to_string(best) + ")");
    return report;
}

}  // namespace lec
