#include "lec/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <set>

#include "lec/errors.hpp"
#include "lec/util.hpp"

namespace lec {

namespace {

// Smallest integer b >= 1 with b^e >= m.
long intRootCeil(long m, int e) {
    if (m <= 1) return 1;
    long b = std::max(1L, static_cast<long>(std::floor(std::pow(static_cast<double>(m),
                                                                1.0 / e))) -
                              2);
    auto powAtLeast = [&](long base) {
        long long acc = 1;
        for (int i = 0; i < e; ++i) {
            acc *= base;
            if (acc >= m) return true;
        }
        return acc >= m;
    };
    while (!powAtLeast(b)) ++b;
    return b;
}

bool powerReaches(long base, int exp, long target) {
    long long acc = 1;
    for (int i = 0; i < exp; ++i) {
        acc *= base;
        if (acc >= target) return true;
    }
    return acc >= target;
}

}  // namespace

std::vector<LinialStep> linialSchedule(long m0, int maxDegree) {
    std::vector<LinialStep> steps;
    long m = m0;
    long deg = std::max(maxDegree, 0);
    while (true) {
        long bestPalette = m;
        LinialStep best;
        for (int d = 1; d <= 48; ++d) {
            long pMin = std::max<long>(d * deg + 1, 2);
            long pRoot = intRootCeil(m, d + 1);
            long p = nextPrimeAtLeast(std::max(pMin, pRoot));
            if (!powerReaches(p, d + 1, m)) continue;  // cannot encode all colors
            long palette = p * p;
            if (palette < bestPalette) {
                bestPalette = palette;
                best = {p, d};
            }
        }
        if (bestPalette >= m) break;
        steps.push_back(best);
        m = bestPalette;
    }
    return steps;
}

long linialPaletteSize(long m0, int maxDegree) {
    long m = m0;
    for (const LinialStep& s : linialSchedule(m0, maxDegree)) m = s.p * s.p;
    return m;
}

namespace {

using Inbox = std::vector<std::pair<Vertex, Msg>>;
using Runner = std::function<SimResult(const ProgramFactory&, long)>;

// ---------------------------------------------------------------------------
// Linial color reduction
// ---------------------------------------------------------------------------

class LinialProgram : public NodeProgram {
public:
    LinialProgram(long color, std::shared_ptr<const std::vector<LinialStep>> steps)
        : color_(color), steps_(std::move(steps)) {}

    void onRound(const NodeCtx&, long round, const Inbox& inbox,
                 NodeAction& action) override {
        if (steps_->empty()) {
            action.output = Output{color_};
            return;
        }
        if (round > 0) {
            const LinialStep& st = (*steps_)[round - 1];
            std::vector<long> neighborColors;
            neighborColors.reserve(inbox.size());
            for (const auto& [from, msg] : inbox)
                neighborColors.push_back(static_cast<long>(readI64(msg, 0)));
            color_ = reduce(color_, neighborColors, st);
            if (round == static_cast<long>(steps_->size())) {
                action.output = Output{color_};
                return;
            }
        }
        Msg m;
        pushI64(m, color_);
        action.broadcast = true;
        action.broadcastPayload = std::move(m);
        action.wakeAt = round + 1;
    }

private:
    static long evalPoly(long color, long p, int d, long x) {
        // Digits of color in base p are the coefficients, low to high.
        long acc = 0;
        long c = color;
        std::array<long, 64> digits{};
        for (int i = 0; i <= d; ++i) {
            digits[i] = c % p;
            c /= p;
        }
        for (int i = d; i >= 0; --i) acc = (acc * x + digits[i]) % p;
        return acc;
    }

    static long reduce(long color, const std::vector<long>& neighbors,
                       const LinialStep& st) {
        for (long x = 0; x < st.p; ++x) {
            long fx = evalPoly(color, st.p, st.d, x);
            bool ok = true;
            for (long g : neighbors) {
                if (g == color) throw InvariantBroken("improper coloring fed to reduction");
                if (evalPoly(g, st.p, st.d, x) == fx) {
                    ok = false;
                    break;
                }
            }
            if (ok) return x * st.p + fx;
        }
        throw InvariantBroken("no separating evaluation point found");
    }

    long color_;
    std::shared_ptr<const std::vector<LinialStep>> steps_;
};

ColoringRun runLinial(const Runner& run, int n, int maxDegreeBound, long maxRounds) {
    auto steps = std::make_shared<const std::vector<LinialStep>>(
        linialSchedule(n, maxDegreeBound));
    ProgramFactory factory = [steps](const NodeCtx& ctx) {
        return std::make_unique<LinialProgram>(ctx.id, steps);
    };
    SimResult sim = run(factory, maxRounds);
    ColoringRun out;
    out.rounds = sim.rounds;
    out.coloring.paletteSize = static_cast<int>(linialPaletteSize(n, maxDegreeBound));
    out.coloring.colorOf.resize(n);
    for (int v = 0; v < n; ++v) out.coloring.colorOf[v] = static_cast<int>(sim.outputs[v][0]);
    return out;
}

// ---------------------------------------------------------------------------
// Staged ruling set (the c-level block sweep)
// ---------------------------------------------------------------------------

// Static timetable shared by every node: level 1 sweeps single color classes,
// level l merges the b_l block results, one block per round.
struct RuleSchedule {
    int c = 1;
    std::vector<long> blockCount;  // b_l, index 1..c
    std::vector<long> blockSize;   // m_{l-1} = ceil(m_l / b_l)
    std::vector<long> start;       // first merge round of level l
    long total = 0;

    static RuleSchedule build(long m, int c) {
        RuleSchedule s;
        s.c = std::max(c, 1);
        s.blockCount.assign(s.c + 1, 1);
        s.blockSize.assign(s.c + 1, 1);
        s.start.assign(s.c + 1, 0);
        std::vector<long> msize(s.c + 1, 1);
        msize[s.c] = std::max(m, 1L);
        for (int l = s.c; l >= 2; --l) {
            s.blockCount[l] = intRootCeil(msize[l], l);
            s.blockSize[l] = (msize[l] + s.blockCount[l] - 1) / s.blockCount[l];
            msize[l - 1] = s.blockSize[l];
        }
        s.blockCount[1] = msize[1];
        s.blockSize[1] = 1;
        s.start[1] = 0;
        for (int l = 2; l <= s.c; ++l) s.start[l] = s.start[l - 1] + s.blockCount[l - 1];
        s.total = s.start[s.c] + s.blockCount[s.c];
        return s;
    }
};

// Per-node view of the timetable: join slots and instance keys derived from
// the node's color.
struct RuleCore {
    std::shared_ptr<const RuleSchedule> sched;
    std::vector<long> slot;  // index 1..c
    std::vector<long> q;     // instance key per level
    std::vector<char> blocked;
    int pending = 1;
    long baseRound = 0;

    void init(long color, std::shared_ptr<const RuleSchedule> s, long base) {
        sched = std::move(s);
        baseRound = base;
        int c = sched->c;
        slot.assign(c + 1, 0);
        q.assign(c + 1, 0);
        blocked.assign(c + 1, 0);
        std::vector<long> digit(c + 1, 0);
        long x = color;
        q[c] = 0;
        for (int l = c; l >= 2; --l) {
            digit[l] = x / sched->blockSize[l];
            x %= sched->blockSize[l];
            q[l - 1] = q[l] * sched->blockCount[l] + digit[l];
        }
        digit[1] = x;
        for (int l = 1; l <= c; ++l) slot[l] = baseRound + sched->start[l] + digit[l];
    }

    void onJoinMsg(long level, long key) {
        if (level >= pending && level <= sched->c && key == q[level])
            blocked[level] = 1;
    }

    // Returns: 0 = nothing due, 1 = joined a level (payload filled),
    //          2 = blocked (node is a non-member), 3 = joined the top level.
    int act(long round, long& levelOut, long& keyOut) {
        if (pending > sched->c || slot[pending] != round) return 0;
        if (blocked[pending]) return 2;
        levelOut = pending;
        keyOut = q[pending];
        if (pending == sched->c) return 3;
        ++pending;
        return 1;
    }

    long nextSlot() const { return pending <= sched->c ? slot[pending] : -1; }
};

constexpr std::int64_t kMsgRuleJoin = 1;
constexpr std::int64_t kMsgSurvive = 2;
constexpr std::int64_t kMsgWaveJoin = 3;
constexpr std::int64_t kMsgWaveCand = 4;
constexpr std::int64_t kMsgWaveDrop = 5;

class RuleProgram : public NodeProgram {
public:
    RuleProgram(bool inW, long color, std::shared_ptr<const RuleSchedule> sched) {
        inW_ = inW;
        if (inW_) core_.init(color, std::move(sched), 0);
    }

    void onRound(const NodeCtx&, long round, const Inbox& inbox,
                 NodeAction& action) override {
        if (!inW_) {
            action.output = Output{0};
            return;
        }
        for (const auto& [from, msg] : inbox)
            if (readI64(msg, 0) == kMsgRuleJoin)
                core_.onJoinMsg(readI64(msg, 1), readI64(msg, 2));
        // A node blocked at its pending level can never join any later level,
        // and its earlier announcements are already out.
        if (core_.pending <= core_.sched->c && core_.blocked[core_.pending]) {
            action.output = Output{0};
            return;
        }
        long level, key;
        switch (core_.act(round, level, key)) {
            case 2:
                action.output = Output{0};
                return;
            case 1:
            case 3: {
                Msg m;
                pushI64(m, kMsgRuleJoin);
                pushI64(m, level);
                pushI64(m, key);
                action.broadcast = true;
                action.broadcastPayload = std::move(m);
                if (level == core_.sched->c) {
                    action.output = Output{1};
                    return;
                }
                action.wakeAt = core_.nextSlot();
                return;
            }
            default:
                if (core_.nextSlot() > round) action.wakeAt = core_.nextSlot();
                return;
        }
    }

private:
    bool inW_ = false;
    RuleCore core_;
};

RulingRun runRule(const Runner& run, int n, const std::vector<int>& colors,
                  const std::vector<char>& inW, long palette, int c, long maxRounds) {
    auto sched = std::make_shared<const RuleSchedule>(RuleSchedule::build(palette, c));
    ProgramFactory factory = [&colors, &inW, sched](const NodeCtx& ctx) {
        return std::make_unique<RuleProgram>(inW[ctx.id] != 0, colors[ctx.id], sched);
    };
    SimResult sim = run(factory, std::max(maxRounds, sched->total + 2));
    RulingRun out;
    out.rounds = sim.rounds;
    out.set.alpha = 2;
    out.set.beta = c;
    out.set.member.assign(n, 0);
    for (int v = 0; v < n; ++v) out.set.member[v] = sim.outputs[v][0] == 1;
    return out;
}

// ---------------------------------------------------------------------------
// Min-id wave: canonical MIS of G^8 when the graph is small enough that a
// handful of ruling vertices cover everything.
// ---------------------------------------------------------------------------

class WaveProgram : public NodeProgram {
public:
    void onRound(const NodeCtx& ctx, long round, const Inbox& inbox,
                 NodeAction& action) override {
        bool dominatedNow = false;
        for (const auto& [from, msg] : inbox) {
            std::int64_t kind = readI64(msg, 0);
            std::int64_t id = readI64(msg, 1);
            if (kind == kMsgWaveJoin) dominatedNow = true;
            if (kind == kMsgWaveCand) candidates_.insert(id);
            if (kind == kMsgWaveDrop) candidates_.erase(id);
        }
        if (round == 0) {
            if (ctx.id == 0) {
                emit(action, kMsgWaveJoin, 0);
                action.output = Output{1};
            } else {
                action.wakeAt = 1;
            }
            return;
        }
        if (dominatedNow) {
            if (announced_) emit(action, kMsgWaveDrop, ctx.id);
            action.output = Output{0};
            return;
        }
        if (round == 1) {
            announced_ = true;
            emit(action, kMsgWaveCand, ctx.id);
            action.wakeAt = 2;
            return;
        }
        // round >= 2: all initial candidacies are known; join when locally minimal.
        if (candidates_.empty() || ctx.id < *candidates_.begin()) {
            emit(action, kMsgWaveJoin, ctx.id);
            action.output = Output{1};
        }
        // otherwise wait for a join/drop message
    }

private:
    static void emit(NodeAction& action, std::int64_t kind, std::int64_t id) {
        Msg m;
        pushI64(m, kind);
        pushI64(m, id);
        action.broadcast = true;
        action.broadcastPayload = std::move(m);
    }

    bool announced_ = false;
    std::set<std::int64_t> candidates_;
};

// ---------------------------------------------------------------------------
// Randomized ruling set: silent sparsification, one repair wave, then the
// staged sweep on the survivors (colors = ids).
// ---------------------------------------------------------------------------

class RandRulingProgram : public NodeProgram {
public:
    RandRulingProgram(int phases, std::shared_ptr<const RuleSchedule> sched)
        : phases_(phases), sched_(std::move(sched)) {}

    void onRound(const NodeCtx& ctx, long round, const Inbox& inbox,
                 NodeAction& action) override {
        for (const auto& [from, msg] : inbox) {
            std::int64_t kind = readI64(msg, 0);
            if (kind == kMsgSurvive) survivorNearby_ = true;
            if (kind == kMsgRuleJoin && inS0_)
                core_.onJoinMsg(readI64(msg, 1), readI64(msg, 2));
        }
        if (round == 0) {
            SplitMix64 rng(mixSeed(ctx.seed, 0x72616e64ULL));
            bool survive = true;
            for (int i = 0; i < phases_ && survive; ++i) survive = rng.coin();
            survivor_ = survive;
            if (survivor_) {
                enterS0(ctx);
                Msg m;
                pushI64(m, kMsgSurvive);
                action.broadcast = true;
                action.broadcastPayload = std::move(m);
            }
            action.wakeAt = 1;
            return;
        }
        if (round == 1) {
            if (!survivor_ && !survivorNearby_) {
                // Domination repair: nobody survived within one hop.
                enterS0(ctx);
                Msg m;
                pushI64(m, kMsgSurvive);
                action.broadcast = true;
                action.broadcastPayload = std::move(m);
            }
            action.wakeAt = 2;
            return;
        }
        if (!inS0_) {
            action.output = Output{0};
            return;
        }
        if (core_.pending <= core_.sched->c && core_.blocked[core_.pending]) {
            action.output = Output{0};
            return;
        }
        long level, key;
        switch (core_.act(round, level, key)) {
            case 2:
                action.output = Output{0};
                return;
            case 1:
            case 3: {
                Msg m;
                pushI64(m, kMsgRuleJoin);
                pushI64(m, level);
                pushI64(m, key);
                action.broadcast = true;
                action.broadcastPayload = std::move(m);
                if (level == core_.sched->c) {
                    action.output = Output{1};
                    return;
                }
                action.wakeAt = core_.nextSlot();
                return;
            }
            default:
                if (core_.nextSlot() > round) action.wakeAt = core_.nextSlot();
                return;
        }
    }

private:
    void enterS0(const NodeCtx& ctx) {
        inS0_ = true;
        core_.init(ctx.id, sched_, 2);
    }

    int phases_;
    std::shared_ptr<const RuleSchedule> sched_;
    bool survivor_ = false;
    bool survivorNearby_ = false;
    bool inS0_ = false;
    RuleCore core_;
};

struct RandRunOutcome {
    RulingSet set;
    long rounds = 0;
};

RandRunOutcome runRandRuling(const Runner& run, int n, long degreeBound, long maxRounds) {
    int phases = 1;
    {
        double dd = std::max<double>(degreeBound, 4);
        phases = std::max(1, static_cast<int>(std::ceil(std::log2(std::log2(dd)))));
    }
    int cB = 2;
    {
        double ln = std::max(2.0, std::log2(std::max(n, 2)));
        cB = std::max(2, static_cast<int>(std::ceil(std::log2(ln))));
    }
    auto sched = std::make_shared<const RuleSchedule>(RuleSchedule::build(std::max(n, 1), cB));
    ProgramFactory factory = [phases, sched](const NodeCtx&) {
        return std::make_unique<RandRulingProgram>(phases, sched);
    };
    SimResult sim = run(factory, std::max(maxRounds, sched->total + 4));
    RandRunOutcome out;
    out.rounds = sim.rounds;
    out.set.alpha = 2;
    out.set.beta = 1 + cB;
    out.set.member.assign(n, 0);
    for (int v = 0; v < n; ++v) out.set.member[v] = sim.outputs[v][0] == 1;
    return out;
}

// Host-side validity check shared by the randomized providers.
bool rulingSetValid(const Graph& g, const RulingSet& rs) {
    auto members = rs.members();
    for (Vertex v : members)
        for (Vertex w : g.neighbors(v))
            if (rs.member[w]) return false;
    if (g.vertexCount() == 0) return true;
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
    for (int x : dist)
        if (x < 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Greedy list edge coloring on line-graph color classes
// ---------------------------------------------------------------------------

class GreedySlotProgram : public NodeProgram {
public:
    GreedySlotProgram(long slot, std::vector<int> list)
        : slot_(slot), list_(std::move(list)) {}

    void onRound(const NodeCtx&, long round, const Inbox& inbox,
                 NodeAction& action) override {
        for (const auto& [from, msg] : inbox) taken_.insert(static_cast<int>(readI64(msg, 0)));
        if (round < slot_) {
            action.wakeAt = slot_;
            return;
        }
        for (int c : list_) {
            if (taken_.count(c)) continue;
            Msg m;
            pushI64(m, c);
            action.broadcast = true;
            action.broadcastPayload = std::move(m);
            action.output = Output{c};
            return;
        }
        throw InvariantBroken("greedy edge coloring ran out of list colors");
    }

private:
    long slot_;
    std::vector<int> list_;
    std::set<int> taken_;
};

}  // namespace

ColoringRun linialColoring(const Graph& g) {
    Runner run = [&g](const ProgramFactory& f, long maxR) {
        return runSync(g, f, maxR, 0);
    };
    return runLinial(run, g.vertexCount(), g.maxDegree(), 4L * g.vertexCount() + 64);
}

RulingRun rulingSetFromColoring(const Graph& g, const VertexColoring& coloring,
                                const std::vector<char>& inW, int c) {
    if (c < 1) throw PreconditionViolation("ruling set needs c >= 1");
    std::vector<int> colors = coloring.colorOf;
    Runner run = [&g](const ProgramFactory& f, long maxR) {
        return runSync(g, f, maxR, 0);
    };
    return runRule(run, g.vertexCount(), colors, inW, coloring.paletteSize, c,
                   4L * coloring.paletteSize + 64);
}

RulingRun detRulingSetLogDelta(const Graph& g) {
    ColoringRun col = linialColoring(g);
    int c = static_cast<int>(std::ceil(std::log2(std::max(g.maxDegree(), 2))));
    c = std::max(c, 1);
    std::vector<char> all(g.vertexCount(), 1);
    RulingRun rs = rulingSetFromColoring(g, col.coloring, all, c);
    rs.rounds += col.rounds;
    return rs;
}

RulingRun randRulingSet(const Graph& g, std::uint64_t seed,
                        const RandRulingOptions& opts) {
    for (int attempt = 0; attempt < opts.maxAttempts; ++attempt) {
        std::uint64_t attemptSeed = mixSeed(seed, 0xabcdULL + attempt);
        Runner run = [&g, attemptSeed](const ProgramFactory& f, long maxR) {
            return runSync(g, f, maxR, attemptSeed);
        };
        RandRunOutcome out =
            runRandRuling(run, g.vertexCount(), g.maxDegree(), 8L * g.vertexCount() + 64);
        bool ok = attempt >= opts.forceRejectAttempts &&
                  rulingSetValid(g, out.set);
        if (ok) {
            RulingRun rr;
            rr.set = std::move(out.set);
            rr.rounds = out.rounds;
            return rr;
        }
    }
    throw ValidityCheckFailed("randomized ruling set rejected on every attempt");
}

RulingRun mis(const Graph& g) {
    ColoringRun col = linialColoring(g);
    std::vector<char> all(g.vertexCount(), 1);
    RulingRun rs = rulingSetFromColoring(g, col.coloring, all, 1);
    rs.rounds += col.rounds;
    rs.set.alpha = 2;
    rs.set.beta = 1;
    return rs;
}

EdgeSetRun maximalMatching(const Graph& g) {
    LineGraphResult lg = lineGraph(g);
    RulingRun r = mis(lg.graph);
    EdgeSetRun out;
    out.set.kind = EdgeSetKind::Matching;
    out.set.member = r.set.member;
    out.virtualRounds = r.rounds;
    out.overhead = 3;
    return out;
}

EdgeSetRun twoEdgeRulingSet(const Graph& g) {
    LineGraphResult lg = lineGraph(g);
    ColoringRun col = linialColoring(lg.graph);
    std::vector<char> all(lg.graph.vertexCount(), 1);
    RulingRun r = rulingSetFromColoring(lg.graph, col.coloring, all, 2);
    EdgeSetRun out;
    out.set.kind = EdgeSetKind::TwoEdgeRuling;
    out.set.member = r.set.member;
    out.virtualRounds = r.rounds + col.rounds;
    out.overhead = 3;
    return out;
}

EdgeColoringRun greedyListEdgeColoring(const Graph& g,
                                       const std::vector<std::vector<int>>& lists,
                                       int uniformPalette) {
    LineGraphResult lg = lineGraph(g);
    int m = g.edgeCount();
    std::vector<std::vector<int>> effective;
    const std::vector<std::vector<int>>* use = &lists;
    if (lists.empty()) {
        if (uniformPalette <= 0 && m > 0)
            throw PreconditionViolation("need lists or a uniform palette");
        effective.assign(m, {});
        for (auto& l : effective) {
            l.resize(uniformPalette);
            for (int c = 0; c < uniformPalette; ++c) l[c] = c;
        }
        use = &effective;
    }
    if (static_cast<int>(use->size()) != m)
        throw PreconditionViolation("list count must match edge count");
    int palette = uniformPalette;
    for (int e = 0; e < m; ++e) {
        if (static_cast<int>((*use)[e].size()) < g.edgeDegree(e) + 1)
            throw ListTooSmall("list smaller than deg(e)+1 at edge " + std::to_string(e));
        for (int c : (*use)[e]) palette = std::max(palette, c + 1);
    }
    EdgeColoringRun out;
    out.coloring = PartialEdgeColoring::empty(g, palette);
    out.overhead = 3;
    if (m == 0) return out;

    ColoringRun col = linialColoring(lg.graph);
    const auto& listsRef = *use;
    ProgramFactory factory = [&col, &listsRef](const NodeCtx& ctx) {
        return std::make_unique<GreedySlotProgram>(col.coloring.colorOf[ctx.id],
                                                   listsRef[ctx.id]);
    };
    SimResult sim = runSync(lg.graph, factory, col.coloring.paletteSize + 2, 0);
    out.virtualRounds = col.rounds + sim.rounds;
    for (int e = 0; e < m; ++e) out.coloring.colorOf[e] = static_cast<int>(sim.outputs[e][0]);
    return out;
}

// ---------------------------------------------------------------------------
// Power-graph providers
// ---------------------------------------------------------------------------

long long ballSizeBound(int d, int r) {
    long long total = 1;
    long long layer = d;
    for (int i = 0; i < r; ++i) {
        total += layer;
        if (total > (1LL << 60)) return 1LL << 60;
        layer *= std::max(d - 1, 1);
        if (layer > (1LL << 60)) layer = 1LL << 60;
    }
    return total;
}

namespace {

long powerMaxDegree(const Graph& g, int k) {
    long best = 0;
    for (Vertex v = 0; v < g.vertexCount(); ++v) {
        long c = static_cast<long>(ballVertices(g, v, k).size()) - 1;
        best = std::max(best, c);
    }
    return best;
}

Runner powerRunner(const Graph& g, int k, std::uint64_t seed, long degBound) {
    return [&g, k, seed, degBound](const ProgramFactory& f, long maxR) {
        return runOnPower(g, k, f, maxR, seed, static_cast<int>(degBound));
    };
}

bool powerRulingValid(const Graph& g, const RulingSet& rs, int k) {
    // Independence on G^k plus domination within k * beta base hops.
    auto members = rs.members();
    for (Vertex v : members) {
        std::vector<int> dist = bfsDistancesUpTo(g, v, k);
        for (Vertex w : members)
            if (w != v && dist[w] > 0) return false;
    }
    if (g.vertexCount() == 0) return true;
    if (members.empty()) return false;
    std::vector<int> dist(g.vertexCount(), -1);
    std::vector<Vertex> frontier;
    for (Vertex v : members) {
        dist[v] = 0;
        frontier.push_back(v);
    }
    long limit = static_cast<long>(k) * rs.beta;
    long d = 0;
    while (!frontier.empty() && d < limit) {
        std::vector<Vertex> next;
        for (Vertex v : frontier)
            for (Vertex w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = static_cast<int>(d + 1);
                    next.push_back(w);
                }
        frontier = std::move(next);
        ++d;
    }
    for (int x : dist)
        if (x < 0) return false;
    return true;
}

}  // namespace

PowerRulingResult misOnPower8(const Graph& g, long maxRounds) {
    int n = g.vertexCount();
    long degBound = std::min<long long>(std::max(n - 1, 0), ballSizeBound(g.maxDegree(), 8) - 1);
    Runner run = powerRunner(g, 8, 0, degBound);
    ColoringRun col = runLinial(run, n, static_cast<int>(degBound), maxRounds);
    std::vector<char> all(n, 1);
    RulingRun rs = runRule(run, n, col.coloring.colorOf, all, col.coloring.paletteSize, 1,
                           maxRounds);
    PowerRulingResult out;
    out.set = std::move(rs.set);
    out.set.alpha = 2;
    out.set.beta = 1;
    out.virtualRounds = col.rounds + rs.rounds;
    out.route = "power-sweep";
    return out;
}

PowerRulingResult detRulingSetOnPower8(const Graph& g, long maxRounds) {
    int n = g.vertexCount();
    PowerRulingResult out;
    if (n == 0) {
        out.set.member.clear();
        out.route = "empty";
        return out;
    }
    if (static_cast<long long>(n) <= ballSizeBound(g.maxDegree(), 8)) {
        // G^8 is plausibly a clique: a min-id wave settles everything in O(1)
        // power rounds and stays flat across sizes.
        ProgramFactory factory = [](const NodeCtx&) {
            return std::make_unique<WaveProgram>();
        };
        SimResult sim = runOnPower(g, 8, factory, maxRounds, 0, n - 1);
        out.set.member.assign(n, 0);
        for (int v = 0; v < n; ++v) out.set.member[v] = sim.outputs[v][0] == 1;
        out.set.alpha = 2;
        out.set.beta = 1;
        out.virtualRounds = sim.rounds;
        out.route = "min-id-wave";
        return out;
    }
    long degBound = powerMaxDegree(g, 8);
    Runner run = powerRunner(g, 8, 0, degBound);
    ColoringRun col = runLinial(run, n, static_cast<int>(degBound), maxRounds);
    int c = std::max(1, static_cast<int>(std::ceil(std::log2(std::max<long>(degBound, 2)))));
    std::vector<char> all(n, 1);
    RulingRun rs =
        runRule(run, n, col.coloring.colorOf, all, col.coloring.paletteSize, c, maxRounds);
    out.set = std::move(rs.set);
    out.virtualRounds = col.rounds + rs.rounds;
    out.route = "coloring";
    return out;
}

PowerRulingResult randRulingSetOnPower8(const Graph& g, std::uint64_t seed,
                                        long maxRounds, const RandRulingOptions& opts) {
    int n = g.vertexCount();
    long degBound =
        std::min<long long>(std::max(n - 1, 0), ballSizeBound(g.maxDegree(), 8) - 1);
    for (int attempt = 0; attempt < opts.maxAttempts; ++attempt) {
        std::uint64_t attemptSeed = mixSeed(seed, 0x9999ULL + attempt);
        Runner run = powerRunner(g, 8, attemptSeed, degBound);
        RandRunOutcome o = runRandRuling(run, n, degBound, maxRounds);
        if (attempt >= opts.forceRejectAttempts && powerRulingValid(g, o.set, 8)) {
            PowerRulingResult out;
            out.set = std::move(o.set);
            out.virtualRounds = o.rounds;
            out.route = "rand-two-stage";
            out.attempts = attempt + 1;
            return out;
        }
    }
    throw ValidityCheckFailed("randomized power ruling set rejected on every attempt");
}

}  // namespace lec
