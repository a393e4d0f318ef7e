#pragma once

#include <compare>
#include <string>

#include "ada/classes.hpp"

namespace ada {

// Slope s/r of a wild Stokes circle: s is the irregularity, r the
// ramification order, coprime and both positive. k = s/r exceeds 1
// exactly when s > r.
struct Slope {
    int s = 1;
    int r = 1;

    Slope() = default;
    Slope(int s_, int r_); // validates positivity and coprimality

    bool greater_than_one() const noexcept { return s > r; }
    bool less_than_one() const noexcept { return s < r; }
    bool is_one() const noexcept { return s == r; }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
        // order by value s/r, then by components (coprime pairs are unique per value)
        const long long lhs = static_cast<long long>(a.s) * b.r;
        const long long rhs = static_cast<long long>(b.s) * a.r;
        if (lhs != rhs) return lhs <=> rhs;
        return a.s <=> b.s;
    }

    std::string str() const { return std::to_string(s) + "/" + std::to_string(r); }
};

// AD-A parameter (m, k, C_0, C_inf): m wild slope-k circles at infinity,
// regular singularity at zero with monodromy class C_0, regular part of
// the formal monodromy at infinity C_inf. Rank identity:
// rk(C_0) = m*r + rk(C_inf).
struct ADAParameter {
    int m = 1;
    Slope slope;
    ConjugacyClass c0;
    ConjugacyClass cinf;

    int rank() const { return class_rank(c0); }

    friend bool operator==(const ADAParameter&, const ADAParameter&) = default;
    friend std::strong_ordering operator<=>(const ADAParameter& a, const ADAParameter& b) {
        if (auto c = a.m <=> b.m; c != std::strong_ordering::equal) return c;
        if (auto c = a.slope <=> b.slope; c != std::strong_ordering::equal) return c;
        if (auto c = a.c0 <=> b.c0; c != std::strong_ordering::equal) return c;
        return a.cinf <=> b.cinf;
    }

    std::string str() const;
};

// Reduced parameter (m, k, [Y]) of a standard parameter.
struct ReducedParameter {
    int m = 1;
    Slope slope;
    YoungDiagram y;
};

enum class ParamClass {
    Generalized,
    GeneralizedTypeI,
    Standard,
    StandardTypeI,
};

std::string to_string(ParamClass c);

// Structural validation: m >= 1, slope coprime (enforced by Slope), and the
// rank identity. Throws RankMismatch / NotCoprime.
void validate(const ADAParameter& t);
bool is_valid(const ADAParameter& t) noexcept;

// Most specific class matching t. Requires validate(t).
ParamClass classify(const ADAParameter& t);

// Whether classify(t) is Standard or StandardTypeI.
bool is_standard(const ADAParameter& t);

// Euclidean division r = kappa*s + rho with 1 <= rho <= s-1. The s = 1
// orbit is handled separately; throws SlopeOne there.
struct Euclid {
    int kappa = 0;
    int rho = 0;
};
Euclid euclid(const Slope& slope);

// Dictionary with the physics labels D_p^b(sl_N, [Y]): p = m*s, b = m*r,
// N = rk(Y). The displayed partition is the bracket list of Y.
struct PhysicsLabel {
    int p = 0;
    int b = 0;
    int big_n = 0;
    YoungDiagram y;

    // Full form "D_p^b(sl_N, [partition])".
    std::string str() const;
    // Display variant with b omitted when b == N.
    std::string display() const;
};

PhysicsLabel to_physics_label(const ADAParameter& t); // throws NotStandard
ADAParameter from_physics(int p, int b, int big_n, const YoungDiagram& y);

} // namespace ada
