#include "ada/params.hpp"

#include <numeric>

#include "ada/errors.hpp"

namespace ada {

Slope::Slope(int s_, int r_) : s(s_), r(r_) {
    if (s < 1 || r < 1)
        throw NotCoprime("slope components must be positive, got " + str());
    if (std::gcd(s, r) != 1)
        throw NotCoprime("slope " + str() + " is not in lowest terms");
}

std::string ADAParameter::str() const {
    return "(" + std::to_string(m) + ", " + slope.str() + ", " + c0.str() + ", " +
           cinf.str() + ")";
}

std::string to_string(ParamClass c) {
    switch (c) {
        case ParamClass::Generalized: return "generalized";
        case ParamClass::GeneralizedTypeI: return "generalized-type-I";
        case ParamClass::Standard: return "standard";
        case ParamClass::StandardTypeI: return "standard-type-I";
    }
    return "?";
}

void validate(const ADAParameter& t) {
    if (t.m < 1)
        throw RankMismatch("wild circle count m must be >= 1, got " + std::to_string(t.m));
    // Slope invariants hold by construction; re-check in case of aggregate init.
    Slope checked(t.slope.s, t.slope.r);
    const int n = class_rank(t.c0);
    const int expected = t.m * t.slope.r + class_rank(t.cinf);
    if (n != expected)
        throw RankMismatch("rk(C0) = " + std::to_string(n) + " but m*r + rk(Cinf) = " +
                           std::to_string(expected));
}

bool is_valid(const ADAParameter& t) noexcept {
    try {
        validate(t);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

ParamClass classify(const ADAParameter& t) {
    const bool c0_unipotent = t.c0.is_unipotent();
    const bool cinf_trivial = t.cinf.is_empty();
    if (c0_unipotent && cinf_trivial) return ParamClass::StandardTypeI;
    if (c0_unipotent && t.cinf.is_regular_semisimple_not_one()) return ParamClass::Standard;
    if (c0_unipotent && t.cinf.is_unipotent(/*or_empty=*/true))
        return ParamClass::GeneralizedTypeI;
    return ParamClass::Generalized;
}

bool is_standard(const ADAParameter& t) {
    const ParamClass c = classify(t);
    return c == ParamClass::Standard || c == ParamClass::StandardTypeI;
}

Euclid euclid(const Slope& slope) {
    if (slope.s < 2)
        throw SlopeOne("euclidean division needs irregularity s >= 2, got slope " +
                       slope.str());
    Euclid e;
    e.kappa = slope.r / slope.s;
    e.rho = slope.r % slope.s;
    // rho = 0 would force s | r, impossible for coprime s >= 2
    return e;
}

std::string PhysicsLabel::str() const {
    return "D_" + std::to_string(p) + "^" + std::to_string(b) + "(sl_" +
           std::to_string(big_n) + ", [" + y.str() + "])";
}

std::string PhysicsLabel::display() const {
    if (b == big_n)
        return "D_" + std::to_string(p) + "(sl_" + std::to_string(big_n) + ", [" + y.str() +
               "])";
    return str();
}

PhysicsLabel to_physics_label(const ADAParameter& t) {
    validate(t);
    if (!is_standard(t))
        throw NotStandard("physics labels exist for standard parameters only, got " +
                          to_string(classify(t)));
    PhysicsLabel label;
    label.p = t.m * t.slope.s;
    label.b = t.m * t.slope.r;
    label.y = t.c0.diagram_at(Eigenvalue::one());
    label.big_n = rank(label.y);
    return label;
}

ADAParameter from_physics(int p, int b, int big_n, const YoungDiagram& y) {
    if (p < 1 || b < 1)
        throw Inconsistent("p and b must be positive, got p=" + std::to_string(p) +
                           " b=" + std::to_string(b));
    if (rank(y) != big_n)
        throw Inconsistent("partition has rank " + std::to_string(rank(y)) +
                           " but N = " + std::to_string(big_n));
    if (b > big_n)
        throw Inconsistent("b = " + std::to_string(b) + " exceeds N = " +
                           std::to_string(big_n));
    const int m = std::gcd(p, b);
    ADAParameter t;
    t.m = m;
    t.slope = Slope(p / m, b / m);
    t.c0 = ConjugacyClass::unipotent(y);
    // C_inf: generic regular semisimple with deterministic root-of-unity
    // eigenvalues e(j/(kappa+1)), all distinct and != 1.
    const int kappa = big_n - b;
    std::vector<ConjugacyClass::Part> parts;
    for (int j = 1; j <= kappa; ++j)
        parts.emplace_back(Eigenvalue::root_of_unity(j, kappa + 1),
                           YoungDiagram({1}));
    t.cinf = ConjugacyClass(std::move(parts));
    validate(t);
    return t;
}

} // namespace ada
