// Command-line driver: generate instances, run the coloring pipeline, verify
// colorings, and benchmark round counts.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
// exceeded / infeasible.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lec/errors.hpp"
#include "lec/io.hpp"
#include "lec/pipeline.hpp"
#include "lec/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

int runGen(const std::string& model, int n, int d, int girthMin, std::uint64_t seed,
           const std::string& outPath) {
    lec::GeneratorSpec spec;
    spec.model = lec::parseModel(model);
    spec.n = n;
    spec.d = d;
    if (girthMin > 0) spec.girthMin = girthMin;
    spec.seed = seed;
    lec::Graph g = lec::generate(spec);
    if (outPath.empty())
        lec::writeEdgeList(std::cout, g);
    else
        lec::writeEdgeListFile(outPath, g);
    return kExitOk;
}

int runRun(const std::string& inPath, const std::string& variant, std::uint64_t seed,
           bool seedSet, const std::string& coloringPath, const std::string& tracePath,
           int leafThreshold, long maxRounds, bool noFallback, int delta0) {
    lec::Graph g = lec::readEdgeListFile(inPath);
    lec::PipelineConfig cfg;
    cfg.variant = lec::parseVariant(variant);
    if (cfg.variant == lec::Variant::Rand && !seedSet)
        throw lec::ParseError("rand variant requires --seed");
    cfg.seed = seed;
    cfg.leafThreshold = leafThreshold;
    cfg.maxRounds = maxRounds;
    cfg.enableFallbacks = !noFallback;
    if (delta0 >= 0) cfg.smallDeltaThreshold = delta0;
    lec::PipelineResult result = lec::runPipeline(g, cfg);

    if (!coloringPath.empty()) lec::writeColoringFile(coloringPath, g, result.coloring);
    if (!tracePath.empty()) lec::writeTraceFile(tracePath, g, result, variant, seed);

    int palette = std::max(2 * g.maxDegree() - 2, 0);
    if (result.status == lec::PipelineStatus::Infeasible ||
        result.status == lec::PipelineStatus::Budget) {
        std::cerr << "status: "
                  << (result.status == lec::PipelineStatus::Infeasible ? "infeasible"
                                                                       : "budget")
                  << " (" << result.statusDetail << ")\n";
        return kExitBudget;
    }
    lec::CheckReport check = lec::checkProperColoring(g, result.coloring, palette, true);
    std::cout << "n=" << g.vertexCount() << " m=" << g.edgeCount()
              << " maxDegree=" << g.maxDegree() << " palette=" << palette
              << " colorsUsed=" << result.colorsUsed()
              << " totalBaseRounds=" << result.trace.totalBaseRounds()
              << " checker=" << (check.pass ? "pass" : "fail") << '\n';
    if (!check.pass) {
        std::cerr << "checker: " << check.counterexample << '\n';
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int runVerify(const std::string& inPath, const std::string& coloringPath) {
    lec::Graph g = lec::readEdgeListFile(inPath);
    int palette = std::max(2 * g.maxDegree() - 2, 0);
    lec::PartialEdgeColoring coloring = lec::readColoringFile(coloringPath, g, palette);
    lec::CheckReport check = lec::checkProperColoring(g, coloring, palette, true);
    if (!check.pass) {
        std::cerr << "verification failed: " << check.counterexample << '\n';
        return kExitVerifyFailed;
    }
    std::cout << "coloring is a proper edge coloring with at most " << palette
              << " colors\n";
    return kExitOk;
}

int runBench(int d, const std::vector<int>& nList, const std::string& variant,
             int seeds, const std::string& csvPath) {
    lec::Variant var = lec::parseVariant(variant);
    std::ostringstream csv;
    csv << "n,maxDegree,variant,seed,totalBaseRounds";
    const char* phases[] = {"ruling_set",  "clustering", "residual_coloring",
                            "targets",     "proposals",  "hso",
                            "rearrange",   "color_switch", "extension"};
    for (const char* p : phases) csv << ',' << p;
    csv << ",fallbacks\n";
    for (int n : nList) {
        for (int seed = 0; seed < seeds; ++seed) {
            lec::GeneratorSpec spec;
            spec.model = lec::GraphModel::RegularRandom;
            spec.n = n;
            spec.d = d;
            spec.seed = static_cast<std::uint64_t>(seed);
            lec::Graph g = lec::generate(spec);
            lec::PipelineConfig cfg;
            cfg.variant = var;
            cfg.seed = static_cast<std::uint64_t>(seed);
            lec::PipelineResult result = lec::runPipeline(g, cfg);
            csv << n << ',' << g.maxDegree() << ',' << variant << ',' << seed << ','
                << result.trace.totalBaseRounds();
            for (const char* p : phases) {
                long rounds = 0;
                for (const auto& ph : result.trace.phases)
                    if (ph.phase == p) rounds += ph.baseRounds;
                csv << ',' << rounds;
            }
            csv << ',' << result.fallbackEvents.size() << '\n';
        }
    }
    if (csvPath.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(csvPath);
        if (!out) throw lec::ParseError("cannot write " + csvPath);
        out << csv.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LOCAL-model (2*Delta-2)-edge coloring toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a graph instance");
    std::string model = "regular";
    int n = 0, d = 0, girthMin = 0;
    std::uint64_t seed = 0;
    std::string outPath;
    gen->add_option("--model", model, "regular|regular-high-girth|tree|cycle|star-gadget");
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--d", d, "target degree");
    gen->add_option("--girth-min", girthMin, "minimum girth (high-girth model)");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", outPath, "output edge-list file (stdout if omitted)");

    auto* run = app.add_subcommand("run", "run a coloring variant on an instance");
    std::string inPath, variant = "det", coloringPath, tracePath;
    std::uint64_t runSeed = 0;
    bool seedSet = false;
    int leafThreshold = -1, delta0 = -1;
    long maxRounds = -1;
    bool noFallback = false;
    run->add_option("--in", inPath, "input edge-list file")->required();
    run->add_option("--variant", variant, "mis|det|rand");
    run->add_option("--seed", runSeed, "run seed (required for rand)")
        ->each([&seedSet](const std::string&) { seedSet = true; });
    run->add_option("--out-coloring", coloringPath, "coloring output file");
    run->add_option("--out-trace", tracePath, "trace output file");
    run->add_option("--leaf-threshold", leafThreshold, "proposal leaf threshold");
    run->add_option("--max-rounds", maxRounds, "round budget");
    run->add_flag("--no-fallback", noFallback, "disable the small-degree fallback");
    run->add_option("--delta0", delta0, "small-degree threshold (default 6)");

    auto* verify = app.add_subcommand("verify", "check a coloring file");
    std::string vIn, vColoring;
    verify->add_option("--in", vIn, "input edge-list file")->required();
    verify->add_option("--coloring", vColoring, "coloring file")->required();

    auto* bench = app.add_subcommand("bench", "round-count benchmark over sizes");
    int bd = 8, bSeeds = 1;
    std::vector<int> bnList;
    std::string bVariant = "det", csvPath;
    bench->add_option("--d", bd, "degree");
    bench->add_option("--n-list", bnList, "sizes to run")->required();
    bench->add_option("--variant", bVariant, "mis|det|rand");
    bench->add_option("--seeds", bSeeds, "seeds per size");
    bench->add_option("--csv", csvPath, "CSV output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return runGen(model, n, d, girthMin, seed, outPath);
        if (run->parsed())
            return runRun(inPath, variant, runSeed, seedSet, coloringPath, tracePath,
                          leafThreshold, maxRounds, noFallback, delta0);
        if (verify->parsed()) return runVerify(vIn, vColoring);
        if (bench->parsed()) return runBench(bd, bnList, bVariant, bSeeds, csvPath);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    } catch (const lec::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const lec::InfeasibleSpec& e) {
        std::cerr << "infeasible spec: " << e.what() << '\n';
        return kExitInputError;
    } catch (const lec::RoundBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const lec::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const lec::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitInputError;
}
