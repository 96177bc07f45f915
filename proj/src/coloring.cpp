#include "lec/coloring.hpp"

#include <vector>

namespace lec {

std::vector<int> availableColors(const Graph& g, const PartialEdgeColoring& coloring,
                                 int edgeIndex) {
    std::vector<char> used(coloring.paletteSize, 0);
    const EdgeId& e = g.edge(edgeIndex);
    for (Vertex endpoint : {e.u, e.v})
        for (int other : g.incidentEdges(endpoint)) {
            if (other == edgeIndex) continue;
            int c = coloring.colorOf[other];
            if (c >= 0 && c < coloring.paletteSize) used[c] = 1;
        }
    std::vector<int> out;
    for (int c = 0; c < coloring.paletteSize; ++c)
        if (!used[c]) out.push_back(c);
    return out;
}

}  // namespace lec
