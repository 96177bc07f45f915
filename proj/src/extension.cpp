#include "lec/extension.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lec/errors.hpp"

namespace lec {

std::vector<int> ClusterTree::layerEdges(const Graph& g, int k) const {
    std::vector<int> out;
    for (Vertex v : vertices) {
        if (depthOf[v] != k + 1) continue;
        Vertex p = parentOf[v];
        if (p >= 0) out.push_back(g.edgeIndex(v, p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ClusterTree::treeEdges(const Graph& g) const {
    std::vector<int> out;
    for (Vertex v : vertices)
        if (parentOf[v] >= 0) out.push_back(g.edgeIndex(v, parentOf[v]));
    std::sort(out.begin(), out.end());
    return out;
}

int ClusterTree::maxDepth() const {
    int d = 0;
    for (Vertex v : vertices) d = std::max(d, depthOf[v]);
    return d;
}

std::vector<int> layerColors(const Graph& g, const PartialEdgeColoring& coloring,
                             const std::vector<Vertex>& layerVertices) {
    std::vector<char> inLayer(g.vertexCount(), 0);
    for (Vertex v : layerVertices) inLayer[v] = 1;
    std::set<int> colors;
    for (Vertex v : layerVertices)
        for (int ei : g.incidentEdges(v)) {
            const EdgeId& e = g.edge(ei);
            if (inLayer[e.u] && inLayer[e.v]) continue;  // both endpoints inside
            int c = coloring.colorOf[ei];
            if (c >= 0) colors.insert(c);
        }
    return {colors.begin(), colors.end()};
}

std::optional<PartialEdgeColoring> extendStar(const Graph& g,
                                              const PartialEdgeColoring& coloring,
                                              const std::vector<int>& starEdges) {
    if (starEdges.empty()) return coloring;
    for (int ei : starEdges)
        if (coloring.isColored(ei))
            throw PreconditionViolation("star edge already colored");

    const int k = static_cast<int>(starEdges.size());
    std::vector<std::vector<int>> avail(k);
    for (int i = 0; i < k; ++i) avail[i] = availableColors(g, coloring, starEdges[i]);

    // Saturating matching edges -> colors via augmenting paths.
    std::vector<int> colorOwner(coloring.paletteSize, -1);
    std::vector<char> visited;
    std::function<bool(int)> tryColor = [&](int i) -> bool {
        for (int c : avail[i]) {
            if (visited[c]) continue;
            visited[c] = 1;
            if (colorOwner[c] < 0 || tryColor(colorOwner[c])) {
                colorOwner[c] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < k; ++i) {
        visited.assign(coloring.paletteSize, 0);
        if (!tryColor(i)) return std::nullopt;
    }
    PartialEdgeColoring out = coloring;
    for (int c = 0; c < coloring.paletteSize; ++c)
        if (colorOwner[c] >= 0) out.colorOf[starEdges[colorOwner[c]]] = c;
    return out;
}

PartialEdgeColoring switchColors(const Graph& g, const PartialEdgeColoring& coloring,
                                 const ClusterTree& tree, int edge1, int edge2, int k) {
    const int delta = g.maxDegree();
    const int reserved = coloring.paletteSize - 1;
    const EdgeId& e1 = g.edge(edge1);
    const EdgeId& e2 = g.edge(edge2);
    if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v)
        throw PreconditionViolation("assigned edges are adjacent");
    if (!coloring.isColored(edge1) || !coloring.isColored(edge2))
        throw PreconditionViolation("assigned edges must be colored");
    std::vector<char> hasChild(g.vertexCount(), 0);
    for (Vertex v : tree.vertices)
        if (tree.parentOf[v] >= 0) hasChild[tree.parentOf[v]] = 1;
    for (int ei : {edge1, edge2}) {
        const EdgeId& e = g.edge(ei);
        bool leafAtK = false;
        for (Vertex v : {e.u, e.v})
            if (tree.contains(v) && tree.depthOf[v] == k && !hasChild[v]) leafAtK = true;
        if (!leafAtK)
            throw PreconditionViolation("assigned edge not at a depth-k leaf");
    }
    std::vector<Vertex> layer = tree.layer(k);
    std::vector<int> before = layerColors(g, coloring, layer);
    if (static_cast<int>(before.size()) >= delta) return coloring;
    // Below delta colors, the reserved color cannot already sit next to the
    // layer (a winning leaf alone contributes delta-1 smaller colors).
    if (std::binary_search(before.begin(), before.end(), reserved))
        throw PreconditionViolation("reserved color already present at layer");

    for (int ei : {edge1, edge2}) {
        PartialEdgeColoring trial = coloring;
        trial.colorOf[ei] = reserved;
        // Properness: the reserved color must not occur on an adjacent edge.
        bool proper = true;
        const EdgeId& e = g.edge(ei);
        for (Vertex endpoint : {e.u, e.v})
            for (int other : g.incidentEdges(endpoint))
                if (other != ei && trial.colorOf[other] == reserved) proper = false;
        if (!proper) continue;
        std::vector<int> after = layerColors(g, trial, layer);
        if (static_cast<int>(after.size()) >= delta) return trial;
    }
    throw PreconditionViolation("switching could not reach the colorful condition");
}

namespace {

int minAvailable(const Graph& g, const PartialEdgeColoring& coloring, int edgeIndex) {
    std::vector<int> avail = availableColors(g, coloring, edgeIndex);
    if (avail.empty())
        throw InvariantBroken("no available color for edge " + std::to_string(edgeIndex));
    return avail.front();
}

// Cyclic edge order of a cycle given as an edge set.
std::vector<int> cycleOrder(const Graph& g, const std::vector<int>& cycleEdges) {
    std::map<Vertex, std::vector<int>> inc;
    for (int ei : cycleEdges) {
        inc[g.edge(ei).u].push_back(ei);
        inc[g.edge(ei).v].push_back(ei);
    }
    std::vector<int> order;
    int cur = cycleEdges.front();
    Vertex pivot = g.edge(cur).v;  // walk towards v first
    order.push_back(cur);
    while (static_cast<int>(order.size()) < static_cast<int>(cycleEdges.size())) {
        const auto& cand = inc[pivot];
        int next = cand[0] == cur ? cand[1] : cand[0];
        order.push_back(next);
        const EdgeId& e = g.edge(next);
        pivot = e.u == pivot ? e.v : e.u;
        cur = next;
    }
    return order;
}

void colorEvenCycle(const Graph& g, PartialEdgeColoring& coloring,
                    const std::vector<int>& cycleEdges) {
    std::vector<int> order = cycleOrder(g, cycleEdges);
    const int len = static_cast<int>(order.size());
    std::vector<std::vector<int>> avail(len);
    for (int i = 0; i < len; ++i) {
        avail[i] = availableColors(g, coloring, order[i]);
        if (avail[i].size() < 2)
            throw InvariantBroken("cycle edge with fewer than two available colors");
    }
    auto setsEqual = [&](int i, int j) { return avail[i] == avail[j]; };
    int startPos = -1;
    int startColor = -1;
    for (int i = 0; i < len && startPos < 0; ++i) {
        int j = (i + 1) % len;
        if (setsEqual(i, j)) continue;
        // A color of edge i that its successor cannot take.
        for (int c : avail[i])
            if (!std::binary_search(avail[j].begin(), avail[j].end(), c)) {
                startPos = i;
                startColor = c;
                break;
            }
        if (startPos < 0) {
            // avail[i] strictly inside avail[j]: start from j in the other
            // direction with a color j has and i lacks.
            for (int c : avail[j])
                if (!std::binary_search(avail[i].begin(), avail[i].end(), c)) {
                    // Reverse the traversal: relabel so that j plays "first".
                    std::reverse(order.begin(), order.end());
                    std::reverse(avail.begin(), avail.end());
                    startPos = static_cast<int>(order.size()) - 1 - j;
                    startColor = c;
                    break;
                }
        }
    }
    if (startPos < 0) {
        // All availability sets equal: alternate the two smallest colors.
        int a = avail[0][0], b = avail[0][1];
        for (int i = 0; i < len; ++i) coloring.colorOf[order[i]] = i % 2 == 0 ? a : b;
        return;
    }
    // Color startPos with the blocking color, then walk away from its
    // successor; every edge keeps one spare color, the successor keeps two.
    coloring.colorOf[order[startPos]] = startColor;
    for (int step = 1; step < len; ++step) {
        int pos = (startPos - step % len + len) % len;
        coloring.colorOf[order[pos]] = minAvailable(g, coloring, order[pos]);
    }
}

}  // namespace

PartialEdgeColoring extendTree(const Graph& g, const PartialEdgeColoring& coloring,
                               const ClusterTree& tree, int witnessedLayer) {
    if (witnessedLayer < 1) throw PreconditionViolation("witnessed layer must be >= 1");
    PartialEdgeColoring out = coloring;
    const int delta = g.maxDegree();
    const int deepest = tree.maxDepth();

    // Layers at or below the witness take arbitrary available colors, deepest
    // first; the parent edge is still uncolored so one color is always free.
    for (int k = deepest - 1; k >= witnessedLayer; --k)
        for (int ei : tree.layerEdges(g, k)) out.colorOf[ei] = minAvailable(g, out, ei);

    // Above the witness, each layer must keep >= delta distinct colors next
    // to it; greedy coloring plus a single-edge repair realizes the lemma's
    // two-edge choice.
    for (int k = std::min(witnessedLayer, deepest) - 1; k >= 1; --k) {
        std::vector<int> edges = tree.layerEdges(g, k);
        for (int ei : edges) out.colorOf[ei] = minAvailable(g, out, ei);
        std::vector<Vertex> layer = tree.layer(k);
        if (static_cast<int>(layerColors(g, out, layer).size()) >= delta) continue;
        bool repaired = false;
        for (int ei : edges) {
            int old = out.colorOf[ei];
            out.colorOf[ei] = -1;
            std::vector<int> currentSet = layerColors(g, out, layer);
            std::set<int> current(currentSet.begin(), currentSet.end());
            for (int c : availableColors(g, out, ei)) {
                if (current.count(c)) continue;
                out.colorOf[ei] = c;
                repaired = true;
                break;
            }
            if (repaired) break;
            out.colorOf[ei] = old;
        }
        if (!repaired ||
            static_cast<int>(layerColors(g, out, layer).size()) < delta)
            throw InvariantBroken("layer invariant lost at depth " + std::to_string(k));
    }

    std::vector<int> rootEdges = tree.layerEdges(g, 0);
    auto finished = extendStar(g, out, rootEdges);
    if (!finished)
        throw InvariantBroken("star extension failed at the root layer");
    return *finished;
}

PartialEdgeColoring extendEasyComponent(const Graph& g,
                                        const PartialEdgeColoring& coloring,
                                        const std::vector<int>& componentEdges,
                                        const std::vector<int>& evenCycle) {
    PartialEdgeColoring out = coloring;
    if (componentEdges.empty()) return out;
    std::vector<char> inComponent(g.edgeCount(), 0);
    for (int ei : componentEdges) inComponent[ei] = 1;
    std::vector<char> onCycle(g.edgeCount(), 0);
    for (int ei : evenCycle) {
        if (!inComponent[ei])
            throw PreconditionViolation("cycle edge outside the component");
        onCycle[ei] = 1;
    }

    // Anchor vertices: the even cycle, or a vertex of degree < maxDegree.
    std::vector<Vertex> anchors;
    if (!evenCycle.empty()) {
        std::set<Vertex> s;
        for (int ei : evenCycle) {
            s.insert(g.edge(ei).u);
            s.insert(g.edge(ei).v);
        }
        anchors.assign(s.begin(), s.end());
    } else {
        std::set<Vertex> componentVertices;
        for (int ei : componentEdges) {
            componentVertices.insert(g.edge(ei).u);
            componentVertices.insert(g.edge(ei).v);
        }
        for (Vertex v : componentVertices)
            if (g.degree(v) < g.maxDegree()) {
                anchors.push_back(v);
                break;
            }
        if (anchors.empty())
            throw PreconditionViolation(
                "component has neither an even cycle nor a low-degree vertex");
    }

    // BFS distances within the uncolored subgraph.
    std::vector<int> dist(g.vertexCount(), -1);
    std::vector<Vertex> frontier;
    for (Vertex v : anchors) {
        dist[v] = 0;
        frontier.push_back(v);
    }
    int d = 0;
    while (!frontier.empty()) {
        std::vector<Vertex> next;
        for (Vertex v : frontier)
            for (int ei : g.incidentEdges(v)) {
                if (!inComponent[ei]) continue;
                const EdgeId& e = g.edge(ei);
                Vertex w = e.u == v ? e.v : e.u;
                if (dist[w] < 0) {
                    dist[w] = d + 1;
                    next.push_back(w);
                }
            }
        frontier = std::move(next);
        ++d;
    }

    std::vector<std::pair<int, int>> peel;  // (-distance, edge)
    for (int ei : componentEdges) {
        if (onCycle[ei]) continue;
        const EdgeId& e = g.edge(ei);
        if (dist[e.u] < 0 || dist[e.v] < 0)
            throw PreconditionViolation("component not connected to the anchor");
        peel.emplace_back(-std::min(dist[e.u], dist[e.v]), ei);
    }
    std::sort(peel.begin(), peel.end());
    for (auto [negDist, ei] : peel) out.colorOf[ei] = minAvailable(g, out, ei);

    if (!evenCycle.empty()) colorEvenCycle(g, out, evenCycle);
    return out;
}

BruteForceResult bruteForceExtensionExists(const Graph& g,
                                           const PartialEdgeColoring& coloring,
                                           const std::vector<int>& uncoloredEdges,
                                           const BruteForceOptions& opts) {
    if (static_cast<int>(uncoloredEdges.size()) > opts.maxEdges)
        throw BudgetExceeded("too many uncolored edges for exhaustive search");
    for (int ei : uncoloredEdges)
        if (coloring.isColored(ei))
            throw PreconditionViolation("target edge already colored");

    BruteForceResult result;
    PartialEdgeColoring work = coloring;
    long long budget = opts.nodeBudget;
    std::vector<char> pending(g.edgeCount(), 0);
    for (int ei : uncoloredEdges) pending[ei] = 1;

    std::function<bool(int)> search = [&](int remaining) -> bool {
        if (remaining == 0) return true;
        if (--budget <= 0) throw BudgetExceeded("exhaustive search budget exceeded");
        // Most constrained edge first.
        int pick = -1;
        std::vector<int> pickAvail;
        for (int ei : uncoloredEdges) {
            if (!pending[ei]) continue;
            std::vector<int> avail = availableColors(g, work, ei);
            if (pick < 0 || avail.size() < pickAvail.size()) {
                pick = ei;
                pickAvail = std::move(avail);
                if (pickAvail.empty()) return false;
            }
        }
        pending[pick] = 0;
        for (int c : pickAvail) {
            work.colorOf[pick] = c;
            if (search(remaining - 1)) return true;
        }
        work.colorOf[pick] = -1;
        pending[pick] = 1;
        return false;
    };
    result.exists = search(static_cast<int>(uncoloredEdges.size()));
    if (result.exists) result.witness = work;
    return result;
}

}  // namespace lec
