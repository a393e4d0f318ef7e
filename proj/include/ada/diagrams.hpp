#pragma once

#include <string>
#include <vector>

#include "ada/orbits.hpp"
#include "ada/params.hpp"

namespace ada {

// Generalized graph attached to AD-A formal data: symmetric integer
// multiplicity matrix B (possibly negative entries, even diagonal;
// B_ii counts twice the loops) plus a dimension vector.
struct DiagramVertex {
    std::string name; // wild circle "q<i>", or leg position "t0", "t0.<j>", "tinf", ...
    int dim = 1;

    friend bool operator==(const DiagramVertex&, const DiagramVertex&) = default;
};

struct Diagram {
    std::vector<DiagramVertex> vertices;
    std::vector<std::vector<long long>> b;

    int size() const { return static_cast<int>(vertices.size()); }

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

// Core vertices only: one vertex per wild circle (dimension 1) and the
// tame vertices at 0 and infinity when their dimensions are positive.
// Multiplicities: wild loops (r-1)(s-r-1), wild-wild r(s-r), wild-tame0 r,
// wild-tameinf s-r, tame0-tameinf 1.
Diagram core_diagram(const ADAParameter& t);

// Core plus the leg of tau(C0) fused at the tame-0 vertex and the leg of
// C_inf fused at the tame-infinity vertex.
Diagram full_diagram(const ADAParameter& t);

// (d, d) for the Cartan matrix C = 2*Id - B.
long long cartan_pairing(const Diagram& d);

// Dimension of the wild character variety: 2 - (d, d).
long long wcv_dimension(const Diagram& d);

// True iff no negative edge or loop multiplicities.
bool is_nonnegative(const Diagram& d);

// Exact isomorphism test: a vertex bijection preserving both B and the
// dimension vector. Backtracking with per-vertex invariant pruning.
bool are_isomorphic(const Diagram& a, const Diagram& b);

struct GammaPlus {
    ADAParameter parameter;
    Diagram diagram;
};

// The unique nonnegative diagram in the orbit, by the explicit closed
// forms: for s >= 2 the parameter (F-)^kappa . t, for s = 1 the slope-1
// endpoint (star-shaped diagram). Supported for standard, standard type-I
// and generalized type-I inputs; throws Unsupported otherwise.
GammaPlus gamma_plus(const ADAParameter& t);

// Orbit scan with TwistPolicy::EigenvaluesOfC0: all nonnegative diagrams
// of minimal vertex count in the window, one representative per
// isomorphism class (discovery order).
std::vector<GammaPlus> gamma_plus_scan(const ADAParameter& t, int r_max);

} // namespace ada
