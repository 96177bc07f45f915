#pragma once

#include <vector>

#include "lec/graph.hpp"

namespace lec {

// Partial edge coloring over a fixed graph; colorOf is indexed by edge index,
// -1 means uncolored. Properness on the colored part is an invariant the
// checkers enforce, not something this struct maintains.
struct PartialEdgeColoring {
    int paletteSize = 0;
    std::vector<int> colorOf;

    static PartialEdgeColoring empty(const Graph& g, int paletteSize) {
        PartialEdgeColoring c;
        c.paletteSize = paletteSize;
        c.colorOf.assign(g.edgeCount(), -1);
        return c;
    }

    bool isColored(int edgeIndex) const { return colorOf[edgeIndex] >= 0; }

    int coloredCount() const {
        int k = 0;
        for (int c : colorOf) k += c >= 0;
        return k;
    }

    bool total() const { return coloredCount() == static_cast<int>(colorOf.size()); }
};

// Palette colors not used by any colored edge adjacent to edgeIndex.
std::vector<int> availableColors(const Graph& g, const PartialEdgeColoring& coloring,
                                 int edgeIndex);

}  // namespace lec
