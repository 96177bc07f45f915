#include "lec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "lec/errors.hpp"
#include "lec/util.hpp"

namespace lec {

Graph Graph::fromEdges(int n, const std::vector<std::pair<Vertex, Vertex>>& edgeList) {
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.edges_.reserve(edgeList.size());
    for (auto [a, b] : edgeList) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError("edge endpoint out of range");
        if (a == b) throw ParseError("self-loop rejected");
        g.edges_.emplace_back(a, b);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
        throw ParseError("duplicate edge rejected");
    g.incident_.assign(n, {});
    for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
        const EdgeId& e = g.edges_[i];
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
        g.incident_[e.u].push_back(i);
        g.incident_[e.v].push_back(i);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    for (const auto& nb : g.adj_)
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));
    return g;
}

int Graph::edgeIndex(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    EdgeId key(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it != edges_.end() && *it == key) return static_cast<int>(it - edges_.begin());
    return -1;
}

std::vector<int> bfsDistances(const Graph& g, Vertex source) {
    return bfsDistancesUpTo(g, source, g.vertexCount());
}

std::vector<int> bfsDistancesUpTo(const Graph& g, Vertex source, int radius) {
    std::vector<int> dist(g.vertexCount(), -1);
    if (source < 0 || source >= g.vertexCount()) return dist;
    std::vector<Vertex> frontier{source};
    dist[source] = 0;
    int d = 0;
    while (!frontier.empty() && d < radius) {
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
    return dist;
}

std::vector<Vertex> ballVertices(const Graph& g, Vertex source, int radius) {
    std::vector<int> dist = bfsDistancesUpTo(g, source, radius);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertexCount(); ++v)
        if (dist[v] >= 0) out.push_back(v);
    return out;
}

Graph powerGraph(const Graph& g, int k) {
    if (k < 1) throw PreconditionViolation("powerGraph requires k >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < g.vertexCount(); ++v) {
        std::vector<int> dist = bfsDistancesUpTo(g, v, k);
        for (Vertex w = v + 1; w < g.vertexCount(); ++w)
            if (dist[w] > 0) edges.emplace_back(v, w);
    }
    return Graph::fromEdges(g.vertexCount(), edges);
}

LineGraphResult lineGraph(const Graph& g) {
    LineGraphResult result;
    result.vertexToEdge = g.edges();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < g.vertexCount(); ++v) {
        const auto& inc = g.incidentEdges(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                edges.emplace_back(inc[i], inc[j]);
    }
    // Two edges sharing both endpoints is impossible in a simple graph, but a
    // pair sharing two vertices via different endpoints is not; dedupe anyway.
    std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
        auto ca = std::minmax(a.first, a.second);
        auto cb = std::minmax(b.first, b.second);
        return ca < cb;
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](auto a, auto b) {
                                return std::minmax(a.first, a.second) ==
                                       std::minmax(b.first, b.second);
                            }),
                edges.end());
    result.graph = Graph::fromEdges(g.edgeCount(), edges);
    return result;
}

Graph removeEdges(const Graph& g, const std::vector<int>& edgeIndices) {
    std::vector<char> drop(g.edgeCount(), 0);
    for (int idx : edgeIndices) drop[idx] = 1;
    std::vector<std::pair<Vertex, Vertex>> kept;
    kept.reserve(g.edgeCount());
    for (int i = 0; i < g.edgeCount(); ++i)
        if (!drop[i]) kept.emplace_back(g.edge(i).u, g.edge(i).v);
    return Graph::fromEdges(g.vertexCount(), kept);
}

InducedSubgraph inducedSubgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    InducedSubgraph out;
    out.toOriginal = vertices;
    std::sort(out.toOriginal.begin(), out.toOriginal.end());
    out.toOriginal.erase(std::unique(out.toOriginal.begin(), out.toOriginal.end()),
                         out.toOriginal.end());
    out.toLocal.assign(g.vertexCount(), -1);
    for (int i = 0; i < static_cast<int>(out.toOriginal.size()); ++i)
        out.toLocal[out.toOriginal[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v : out.toOriginal)
        for (Vertex w : g.neighbors(v))
            if (v < w && out.toLocal[w] >= 0)
                edges.emplace_back(out.toLocal[v], out.toLocal[w]);
    out.graph = Graph::fromEdges(static_cast<int>(out.toOriginal.size()), edges);
    return out;
}

namespace {

// Shortest cycle visible from BFS at v; exact girth when minimized over all
// vertices, and already exact from a single vertex of a vertex-transitive graph.
int shortestCycleFrom(const Graph& g, Vertex v, int bound) {
    std::vector<int> dist(g.vertexCount(), -1);
    std::vector<int> parentEdge(g.vertexCount(), -1);
    std::vector<Vertex> frontier{v};
    dist[v] = 0;
    int best = bound;
    int d = 0;
    while (!frontier.empty() && 2 * d < best) {
        std::vector<Vertex> next;
        for (Vertex x : frontier) {
            for (int ei : g.incidentEdges(x)) {
                if (ei == parentEdge[x]) continue;
                const EdgeId& e = g.edge(ei);
                Vertex y = e.u == x ? e.v : e.u;
                if (dist[y] < 0) {
                    dist[y] = d + 1;
                    parentEdge[y] = ei;
                    next.push_back(y);
                } else {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        frontier = std::move(next);
        ++d;
    }
    return best;
}

constexpr int kNoCycle = 1 << 28;

int girthValue(const Graph& g) {
    int best = kNoCycle;
    for (Vertex v = 0; v < g.vertexCount(); ++v)
        best = std::min(best, shortestCycleFrom(g, v, best));
    return best;
}

std::uint64_t edgeKey(int n, Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * n + b;
}

// Pairing (configuration) model with local swap repair of loops and parallel
// edges. Plain rejection never terminates for d >= 5 or so; swaps keep the
// degree sequence and are the standard fix.
Graph regularRandom(int n, int d, std::uint64_t seed) {
    if (d < 0 || n < 0) throw InfeasibleSpec("negative size");
    if (d >= n && !(n == 0 || d == 0)) throw InfeasibleSpec("regular graph needs d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw InfeasibleSpec("regular graph needs n*d even");
    if (d == 0 || n == 0) return Graph::fromEdges(n, {});

    SplitMix64 rng(mixSeed(seed, 0x7265670000ULL));
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    for (std::size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[rng.bounded(i)]);

    std::size_t m = stubs.size() / 2;
    std::vector<std::pair<Vertex, Vertex>> pairs(m);
    std::unordered_set<std::uint64_t> present;
    present.reserve(m * 2);
    auto isBad = [&](Vertex a, Vertex b) {
        return a == b || present.count(edgeKey(n, a, b)) > 0;
    };
    for (std::size_t i = 0; i < m; ++i) {
        pairs[i] = {stubs[2 * i], stubs[2 * i + 1]};
        if (pairs[i].first != pairs[i].second) {
            // Multi-edges are tolerated here and repaired below.
            present.insert(edgeKey(n, pairs[i].first, pairs[i].second));
        }
    }
    // Rebuild the multiset properly: track counts via a vector of bad indices.
    auto collectBad = [&]() {
        present.clear();
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i < m; ++i) {
            auto [a, b] = pairs[i];
            if (a == b || !present.insert(edgeKey(n, a, b)).second) bad.push_back(i);
        }
        return bad;
    };
    std::vector<std::size_t> bad = collectBad();
    std::uint64_t budget = 2000ULL * m + 100000ULL;
    while (!bad.empty()) {
        if (budget-- == 0) throw InfeasibleSpec("regular-random repair budget exceeded");
        std::size_t i = bad.back();
        std::size_t j = rng.bounded(m);
        if (i == j) continue;
        auto [a, b] = pairs[i];
        auto [c, e] = pairs[j];
        // Try (a,c)(b,e), then (a,e)(b,c).
        bool done = false;
        for (int variant = 0; variant < 2 && !done; ++variant) {
            Vertex p = variant == 0 ? c : e;
            Vertex q = variant == 0 ? e : c;
            if (isBad(a, p) || isBad(b, q)) continue;
            if (EdgeId(a, p) == EdgeId(b, q)) continue;
            auto jKey = edgeKey(n, c, e);
            if (c != e && present.count(jKey)) present.erase(jKey);
            pairs[i] = {a, p};
            pairs[j] = {b, q};
            present.insert(edgeKey(n, a, p));
            present.insert(edgeKey(n, b, q));
            bad.pop_back();
            done = true;
        }
        if (!done) continue;
        // The partner pair may itself have been bad; rescan lazily when the
        // list empties to keep the common path cheap.
        if (bad.empty()) bad = collectBad();
    }
    std::vector<std::pair<Vertex, Vertex>> edges(pairs.begin(), pairs.end());
    return Graph::fromEdges(n, edges);
}

// Bipartite Sidon-set construction: both sides are Z_q with q = n/2 and
// vertex i is joined to q + ((i + s) mod q) for every s in a Sidon set S of
// size d. Distinct pairwise differences rule out 4-cycles and bipartiteness
// rules out odd ones, so the girth is at least 6. This reaches any even n
// down to the Moore-type bound q >= d(d-1)+1, which rejection sampling cannot
// touch for d >= 4 (expected short-cycle counts are in the hundreds).
std::optional<Graph> sidonBipartite(int n, int d, std::uint64_t seed, int attempts) {
    if (n % 2 != 0 || d < 1) return std::nullopt;
    int q = n / 2;
    if (static_cast<long long>(d) * (d - 1) > q - 1) return std::nullopt;
    SplitMix64 rng(mixSeed(seed, 0x7369646fULL));
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<int> candidates(q - 1);
        for (int i = 1; i < q; ++i) candidates[i - 1] = i;
        for (std::size_t i = candidates.size(); i > 1; --i)
            std::swap(candidates[i - 1], candidates[rng.bounded(i)]);
        std::vector<char> diffUsed(q, 0);
        std::vector<int> S{0};
        auto tryAdd = [&](int s) {
            std::vector<int> newDiffs;
            for (int t : S) {
                int d1 = (s - t + q) % q;
                int d2 = (t - s + q) % q;
                if (d1 == 0 || diffUsed[d1] || diffUsed[d2]) return false;
                newDiffs.push_back(d1);
                newDiffs.push_back(d2);
            }
            // Differences within the new pair set must also be fresh among
            // themselves (s-t values for distinct t collide only via Sidon).
            std::sort(newDiffs.begin(), newDiffs.end());
            for (std::size_t i = 1; i < newDiffs.size(); ++i)
                if (newDiffs[i] == newDiffs[i - 1]) return false;
            for (int x : newDiffs) diffUsed[x] = 1;
            S.push_back(s);
            return true;
        };
        tryAdd(1);  // difference 1 keeps the graph connected
        for (int s : candidates)
            if (static_cast<int>(S.size()) < d && s != 1) tryAdd(s);
        if (static_cast<int>(S.size()) < d) continue;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int i = 0; i < q; ++i)
            for (int s : S) edges.emplace_back(i, q + (i + s) % q);
        return Graph::fromEdges(n, edges);
    }
    return std::nullopt;
}

Graph highGirth(int n, int d, int girthMin, std::uint64_t seed) {
    // Expected count of cycles shorter than girthMin in the pairing model
    // decides whether rejection has any chance at all.
    double mu = 0;
    for (int len = 3; len < girthMin; ++len)
        mu += std::pow(static_cast<double>(d - 1), len) / (2.0 * len);
    if (mu < 9.0) {
        int attempts = static_cast<int>(std::min(5000.0, 40.0 * std::exp(mu))) + 20;
        for (int i = 0; i < attempts; ++i) {
            Graph cand = regularRandom(n, d, mixSeed(seed, i));
            if (girthValue(cand) >= girthMin) return cand;
        }
    }
    if (girthMin <= 6) {
        if (auto cand = sidonBipartite(n, d, seed, 64)) {
            if (girthValue(*cand) >= girthMin) return *cand;
        }
    }
    throw InfeasibleSpec("girth target not met within attempt budget");
}

Graph randomTree(int n, int d, std::uint64_t seed) {
    if (n <= 0) return Graph::fromEdges(std::max(n, 0), {});
    int cap = d > 0 ? d : n;
    if (n >= 3 && cap < 2) throw InfeasibleSpec("tree needs degree cap >= 2");
    SplitMix64 rng(mixSeed(seed, 0x74726565ULL));
    std::vector<int> deg(n, 0);
    std::vector<Vertex> open{0};
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::size_t pick = rng.bounded(open.size());
        Vertex parent = open[pick];
        edges.emplace_back(parent, v);
        if (++deg[parent] >= cap) {
            open[pick] = open.back();
            open.pop_back();
        }
        deg[v] = 1;
        if (deg[v] < cap) open.push_back(v);
        if (open.empty() && v + 1 < n) throw InfeasibleSpec("degree cap too tight for tree");
    }
    return Graph::fromEdges(n, edges);
}

// Star of degree d whose leaves are padded with d-1 pendant spokes each: the
// smallest family on which partial colorings around an uncolored star can be
// enumerated exhaustively.
Graph starGadget(int d) {
    if (d < 1) throw InfeasibleSpec("star gadget needs d >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    int next = 1 + d;
    for (int leaf = 1; leaf <= d; ++leaf) {
        edges.emplace_back(0, leaf);
        for (int i = 0; i < d - 1; ++i) edges.emplace_back(leaf, next++);
    }
    return Graph::fromEdges(next, edges);
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
    switch (spec.model) {
        case GraphModel::RegularRandom:
            return regularRandom(spec.n, spec.d, spec.seed);
        case GraphModel::RegularHighGirth: {
            if (!spec.girthMin) throw InfeasibleSpec("regular-high-girth requires girthMin");
            if ((static_cast<long long>(spec.n) * spec.d) % 2 != 0)
                throw InfeasibleSpec("regular graph needs n*d even");
            if (spec.d >= spec.n) throw InfeasibleSpec("regular graph needs d < n");
            return highGirth(spec.n, spec.d, *spec.girthMin, spec.seed);
        }
        case GraphModel::Tree:
            return randomTree(spec.n, spec.d, spec.seed);
        case GraphModel::Cycle: {
            if (spec.n < 3) throw InfeasibleSpec("cycle needs n >= 3");
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (Vertex v = 0; v < spec.n; ++v) edges.emplace_back(v, (v + 1) % spec.n);
            return Graph::fromEdges(spec.n, edges);
        }
        case GraphModel::StarGadget:
            return starGadget(spec.d);
    }
    throw InfeasibleSpec("unknown model");
}

GraphModel parseModel(const std::string& name) {
    if (name == "regular" || name == "regular-random") return GraphModel::RegularRandom;
    if (name == "regular-high-girth" || name == "high-girth") return GraphModel::RegularHighGirth;
    if (name == "tree") return GraphModel::Tree;
    if (name == "cycle") return GraphModel::Cycle;
    if (name == "star-gadget") return GraphModel::StarGadget;
    throw ParseError("unknown graph model: " + name);
}

std::optional<int> girth(const Graph& g) {
    int v = girthValue(g);
    if (v >= kNoCycle) return std::nullopt;
    return v;
}

}  // namespace lec
