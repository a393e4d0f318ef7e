#pragma once

#include <map>
#include <vector>

#include "ada/ops.hpp"
#include "ada/params.hpp"

namespace ada {

// Bounded window of the orbit of a parameter under allowed elementary
// operations. The true orbit is infinite upward in denominator; every
// checkable property lives on a window bounded by the wild-circle
// ramification order r_max.
struct OrbitEdge {
    int source = 0;
    int target = 0;
    Operation op;
};

struct OrbitGraph {
    std::vector<ADAParameter> nodes; // discovery (BFS) order, deduplicated
    std::vector<OrbitEdge> edges;

    int find_node(const ADAParameter& t) const; // -1 when absent
};

enum class TwistPolicy {
    None,            // type-I operations only (alpha = 1)
    EigenvaluesOfC0, // alpha ranges over the eigenvalues of the current C0,
                     // plus normalizing twists T_{lambda^-1}
};

// All slopes s/(l*s +- rho) with denominator <= r_max, deduplicated and
// sorted ascending. Throws SlopeOne for s = 1.
std::vector<Slope> slope_set(const Slope& slope, int r_max);

// The s = 1 orbit slopes {1/l : 1 <= l <= r_max}.
std::vector<Slope> s1_slope_set(int r_max);

// Breadth-first closure under allowed operations whose target denominator
// stays within r_max. Deterministic node and edge order.
OrbitGraph enumerate(const ADAParameter& t, int r_max, TwistPolicy policy);

// Node counts per slope, checked against the orbit-structure theorem:
// s > 2 and s = 1 force count 1 per slope, s = 2 forces a uniform count in
// {1, 2}. Throws StructureViolation with the witness slope. Meaningful for
// graphs built with TwistPolicy::None.
std::map<Slope, int> count_per_slope(const OrbitGraph& g);

} // namespace ada
