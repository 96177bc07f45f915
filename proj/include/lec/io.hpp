#pragma once

#include <iosfwd>
#include <string>

#include "lec/coloring.hpp"
#include "lec/graph.hpp"
#include "lec/pipeline.hpp"

namespace lec {

// Edge-list format: first line "n m", then m lines "u v" with 0 <= u < v < n.
// The reader rejects self-loops, duplicates and malformed input.
Graph readEdgeList(std::istream& in);
void writeEdgeList(std::ostream& out, const Graph& g);

Graph readEdgeListFile(const std::string& path);
void writeEdgeListFile(const std::string& path, const Graph& g);

// Coloring format: one "u v c" line per edge, sorted by (u, v).
void writeColoring(std::ostream& out, const Graph& g, const PartialEdgeColoring& coloring);
PartialEdgeColoring readColoring(std::istream& in, const Graph& g, int paletteSize);
void writeColoringFile(const std::string& path, const Graph& g,
                       const PartialEdgeColoring& coloring);
PartialEdgeColoring readColoringFile(const std::string& path, const Graph& g,
                                     int paletteSize);

// Line-oriented structured log: one JSON object per phase, then a summary
// record. Wall-clock time is deliberately excluded so replays are
// byte-identical.
void writeTrace(std::ostream& out, const Graph& g, const PipelineResult& result,
                const std::string& variant, std::uint64_t seed);
void writeTraceFile(const std::string& path, const Graph& g, const PipelineResult& result,
                    const std::string& variant, std::uint64_t seed);

}  // namespace lec
