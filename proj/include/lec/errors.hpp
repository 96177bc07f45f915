#pragma once

#include <stdexcept>
#include <string>

namespace lec {

// Base class for all contract violations raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

// Generator cannot satisfy the requested spec (odd n*d, girth target unreachable, ...).
struct InfeasibleSpec : Error {
    using Error::Error;
};

// A node program was still running when the round budget ran out.
struct RoundBudgetExceeded : Error {
    using Error::Error;
};

// Input ruling set does not dominate the graph.
struct NotDominating : Error {
    using Error::Error;
};

// A proposing vertex has no target edge within the required distance.
struct NoNearbyTarget : Error {
    using Error::Error;
};

// splitVertices requires minimum degree 2.
struct DegreeTooSmall : Error {
    using Error::Error;
};

// greedyListEdgeColoring requires |list(e)| >= deg(e)+1.
struct ListTooSmall : Error {
    using Error::Error;
};

// A randomized subroutine produced output the checker rejected; retry with a fresh seed.
struct ValidityCheckFailed : Error {
    using Error::Error;
};

struct PreconditionViolation : Error {
    using Error::Error;
};

// Rearranged edge set failed the matching checker.
struct MatchingViolation : Error {
    using Error::Error;
};

// Exhaustive search ran past its configured budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// An internal invariant of a color extension procedure failed.
struct InvariantBroken : Error {
    using Error::Error;
};

}  // namespace lec
