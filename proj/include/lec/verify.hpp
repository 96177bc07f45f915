#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lec/clustering.hpp"
#include "lec/coloring.hpp"
#include "lec/extension.hpp"
#include "lec/graph.hpp"
#include "lec/hso.hpp"
#include "lec/symmetry.hpp"

namespace lec {

// Checkers are omniscient host-side oracles, independent of the algorithms
// they certify. pass <=> no counterexample.
struct CheckReport {
    std::string checkName;
    bool pass = true;
    std::string counterexample;  // empty when pass
    long count = 0;              // items inspected

    void fail(const std::string& witness) {
        if (pass) {
            pass = false;
            counterexample = witness;
        }
    }
};

// Adjacent colored edges must differ; colors must fit the palette bound.
// requireTotal additionally rejects uncolored edges.
CheckReport checkProperColoring(const Graph& g, const PartialEdgeColoring& coloring,
                                int paletteBound, bool requireTotal);

// Partition, root containment N^alpha(r) within the cluster, per-vertex tree
// depth <= beta (hence tree diameter <= 2 beta), and forest validity.
CheckReport checkClustering(const Graph& g, const Clustering& cl);

// Pairwise distance >= alpha among members, domination of every vertex
// within beta.
CheckReport checkRulingSet(const Graph& g, const RulingSet& rs);

// requireMaximal additionally demands every non-member edge share an endpoint
// with a member.
CheckReport checkMatching(const Graph& g, const EdgeSet& es, bool requireMaximal);

// Members pairwise non-adjacent; every non-isolated vertex within 2 hops of
// a member edge (the edge-to-edge version follows).
CheckReport checkTwoEdgeRuling(const Graph& g, const EdgeSet& es);

// Every hyperedge oriented to an incident vertex; every vertex owns at least
// requiredOutgoing hyperedges.
CheckReport checkSinkless(const Hypergraph& h, const Orientation& orientation,
                          int requiredOutgoing);

// Some tree layer k >= 1 sees at least `delta` distinct adjacent colors.
CheckReport checkColorfulCondition(const Graph& g, const PartialEdgeColoring& coloring,
                                   const ClusterTree& tree, int delta);

// girth(g) lives in graph.hpp; re-exported here because it doubles as the
// checker for generator girth contracts.
using lec::girth;

}  // namespace lec
