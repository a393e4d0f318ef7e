#include "ada/dualities.hpp"

#include "ada/errors.hpp"
#include "ada/ops.hpp"

namespace ada {

namespace {

YoungDiagram require_type_i(const ADAParameter& t) {
    validate(t);
    if (classify(t) != ParamClass::StandardTypeI)
        throw NotStandardTypeI("expected a standard type-I parameter, got " +
                               to_string(classify(t)));
    return t.c0.diagram_at(Eigenvalue::one());
}

void require_complement_preconditions(const ADAParameter& t, const YoungDiagram& y) {
    if (t.slope.s <= 1)
        throw PreconditionFailed("duality II needs s > 1, got slope " + t.slope.str());
    const long long ls = static_cast<long long>(y.column_count()) * t.slope.s;
    if (ls <= t.slope.r)
        throw PreconditionFailed("duality II needs L*s > r, got L = " +
                                 std::to_string(y.column_count()) + " at slope " +
                                 t.slope.str());
}

// Columns (ms - h_l) >= ... >= (ms - h_1) built from the first l heights
// of y, zero columns dropped.
YoungDiagram complement_prefix(const YoungDiagram& y, int l, int ms) {
    std::vector<int> cols;
    for (int j = l; j >= 1; --j) {
        const int h = y.columns()[static_cast<std::size_t>(j - 1)];
        if (ms - h > 0) cols.push_back(ms - h);
    }
    return YoungDiagram(std::move(cols));
}

YoungDiagram drop_columns(const YoungDiagram& y, int l) {
    YoungDiagram out = y;
    for (int i = 0; i < l; ++i) out = truncate(out);
    return out;
}

} // namespace

ADAParameter duality_add_columns(const ADAParameter& t, int l) {
    const YoungDiagram y = require_type_i(t);
    if (l < 0) throw IndexOutOfRange("column count l must be >= 0, got " + std::to_string(l));
    const int ms = t.m * t.slope.s;
    std::vector<int> cols(static_cast<std::size_t>(l), ms);
    cols.insert(cols.end(), y.columns().begin(), y.columns().end());
    ADAParameter out;
    out.m = t.m;
    out.slope = Slope(t.slope.s, t.slope.r + l * t.slope.s);
    out.c0 = ConjugacyClass::unipotent(YoungDiagram(std::move(cols)));
    out.cinf = ConjugacyClass::trivial();
    validate(out);
    return out;
}

ADAParameter duality_complement(const ADAParameter& t) {
    const YoungDiagram y = require_type_i(t);
    require_complement_preconditions(t, y);
    const int ms = t.m * t.slope.s;
    const int big_l = y.column_count();
    ADAParameter out;
    out.m = t.m;
    out.slope = Slope(t.slope.s, big_l * t.slope.s - t.slope.r);
    out.c0 = ConjugacyClass::unipotent(complement(y, ms));
    out.cinf = ConjugacyClass::trivial();
    validate(out);
    return out;
}

ADAParameter intermediate(const ADAParameter& t, int l) {
    const YoungDiagram y = require_type_i(t);
    require_complement_preconditions(t, y);
    const int big_l = y.column_count();
    if (l < 0 || l > big_l)
        throw IndexOutOfRange("step index " + std::to_string(l) + " outside 0.." +
                              std::to_string(big_l));
    const Euclid e = euclid(t.slope);
    const int s = t.slope.s;
    const int ms = t.m * s;
    const YoungDiagram y_l = drop_columns(y, l);
    const YoungDiagram y_tilde_l = complement_prefix(y, l, ms);

    ADAParameter out;
    out.m = t.m;
    if (l <= e.kappa) {
        out.slope = Slope(s, (e.kappa - l) * s + e.rho);
        out.c0 = ConjugacyClass::unipotent(y_l);
        out.cinf = ConjugacyClass::unipotent(y_tilde_l);
    } else {
        out.slope = Slope(s, l * s - t.slope.r);
        out.c0 = ConjugacyClass::unipotent(y_tilde_l);
        out.cinf = ConjugacyClass::unipotent(y_l);
    }
    validate(out);
    return out;
}

std::vector<Operation> duality_complement_sequence(const ADAParameter& t) {
    const YoungDiagram y = require_type_i(t);
    require_complement_preconditions(t, y);
    const Euclid e = euclid(t.slope);
    std::vector<Operation> ops;
    for (int i = 0; i < e.kappa; ++i) ops.push_back(Operation::fourier_minus());
    ops.push_back(Operation::fourier());
    for (int i = 0; i < y.column_count() - 1 - e.kappa; ++i)
        ops.push_back(Operation::fourier_plus());
    return ops;
}

namespace {

std::vector<Eigenvalue> require_standard_non_type_i(const ADAParameter& t) {
    validate(t);
    if (classify(t) != ParamClass::Standard)
        throw NotStandardNonTypeI(
            "expected a standard parameter with rank(Cinf) >= 1, got " +
            to_string(classify(t)));
    std::vector<Eigenvalue> betas;
    for (const auto& [eig, diagram] : t.cinf.parts()) betas.push_back(eig);
    return betas;
}

} // namespace

ADAParameter duality_iii(const ADAParameter& t) {
    const std::vector<Eigenvalue> betas = require_standard_non_type_i(t);
    const int kappa = static_cast<int>(betas.size());
    const int ms = t.m * t.slope.s;

    std::vector<ConjugacyClass::Part> parts;
    parts.emplace_back(Eigenvalue::one(), t.c0.diagram_at(Eigenvalue::one()));
    if (ms - 1 > 0)
        for (const Eigenvalue& beta : betas)
            parts.emplace_back(beta, YoungDiagram({ms - 1}));

    ADAParameter out;
    out.m = t.m;
    out.slope = Slope(t.slope.s, kappa * t.slope.s + t.slope.r);
    out.c0 = ConjugacyClass(std::move(parts));
    out.cinf = ConjugacyClass::trivial();
    validate(out);
    return out;
}

std::vector<Operation> duality_iii_sequence(const ADAParameter& t) {
    std::vector<Operation> ops;
    for (const Eigenvalue& beta : require_standard_non_type_i(t))
        ops.push_back(Operation::fourier_plus(beta));
    return ops;
}

} // namespace ada
