#include "lec/io.hpp"

#include <fstream>
#include <sstream>

#include "lec/errors.hpp"

namespace lec {

Graph readEdgeList(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty edge-list input");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError("bad header line");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw ParseError("unexpected end of edge list");
        std::istringstream row(line);
        long long u, v;
        if (!(row >> u >> v)) throw ParseError("bad edge line: " + line);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("endpoint out of range");
        if (u >= v) throw ParseError("edges must satisfy u < v: " + line);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::fromEdges(static_cast<int>(n), edges);
}

void writeEdgeList(std::ostream& out, const Graph& g) {
    out << g.vertexCount() << ' ' << g.edgeCount() << '\n';
    for (const EdgeId& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph readEdgeListFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return readEdgeList(in);
}

void writeEdgeListFile(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    writeEdgeList(out, g);
}

void writeColoring(std::ostream& out, const Graph& g,
                   const PartialEdgeColoring& coloring) {
    for (int i = 0; i < g.edgeCount(); ++i)
        out << g.edge(i).u << ' ' << g.edge(i).v << ' ' << coloring.colorOf[i] << '\n';
}

PartialEdgeColoring readColoring(std::istream& in, const Graph& g, int paletteSize) {
    PartialEdgeColoring c = PartialEdgeColoring::empty(g, paletteSize);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        long long u, v, col;
        if (!(row >> u >> v >> col)) throw ParseError("bad coloring line: " + line);
        int ei = g.edgeIndex(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (ei < 0) throw ParseError("coloring references missing edge: " + line);
        c.colorOf[ei] = static_cast<int>(col);
    }
    return c;
}

void writeColoringFile(const std::string& path, const Graph& g,
                       const PartialEdgeColoring& coloring) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    writeColoring(out, g, coloring);
}

PartialEdgeColoring readColoringFile(const std::string& path, const Graph& g,
                                     int paletteSize) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return readColoring(in, g, paletteSize);
}

namespace {

const char* statusName(PipelineStatus s) {
    switch (s) {
        case PipelineStatus::Ok: return "ok";
        case PipelineStatus::Infeasible: return "infeasible";
        case PipelineStatus::Budget: return "budget";
        case PipelineStatus::Error: return "error";
    }
    return "?";
}

}  // namespace

void writeTrace(std::ostream& out, const Graph& g, const PipelineResult& result,
                const std::string& variant, std::uint64_t seed) {
    for (const PhaseTrace& p : result.trace.phases) {
        out << "{\"record\":\"phase\",\"phase\":\"" << p.phase
            << "\",\"virtualRounds\":" << p.virtualRounds
            << ",\"baseRounds\":" << p.baseRounds << ",\"overhead\":" << p.overhead
            << "}\n";
    }
    out << "{\"record\":\"summary\",\"n\":" << g.vertexCount() << ",\"m\":" << g.edgeCount()
        << ",\"maxDegree\":" << g.maxDegree() << ",\"variant\":\"" << variant
        << "\",\"seed\":" << seed << ",\"status\":\"" << statusName(result.status)
        << "\",\"palette\":" << result.coloring.paletteSize
        << ",\"colorsUsed\":" << result.colorsUsed()
        << ",\"totalBaseRounds\":" << result.trace.totalBaseRounds()
        << ",\"clusters\":" << result.clusterCount
        << ",\"easyCycle\":" << result.easyCycleClusters
        << ",\"easyLowDegree\":" << result.easyLowDegreeClusters
        << ",\"needsAssignment\":" << result.needsAssignmentClusters
        << ",\"gatePassed\":" << result.gatePassedClusters
        << ",\"gateHolds\":" << (result.gateHolds ? "true" : "false")
        << ",\"hyperMinDegree\":" << result.hyperMinDegree
        << ",\"hyperMaxRank\":" << result.hyperMaxRank
        << ",\"retries\":" << result.retriesUsed << ",\"fallbacks\":[";
    for (std::size_t i = 0; i < result.fallbackEvents.size(); ++i) {
        if (i) out << ',';
        out << '"' << result.fallbackEvents[i] << '"';
    }
    out << "]}\n";
}

void writeTraceFile(const std::string& path, const Graph& g, const PipelineResult& result,
                    const std::string& variant, std::uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    writeTrace(out, g, result, variant, seed);
}

}  // namespace lec
