#include "ada/orbits.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ada/errors.hpp"

namespace ada {

int OrbitGraph::find_node(const ADAParameter& t) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == t) return static_cast<int>(i);
    return -1;
}

std::vector<Slope> slope_set(const Slope& slope, int r_max) {
    const Euclid e = euclid(slope); // throws SlopeOne for s = 1
    const int s = slope.s;
    std::set<Slope> out;
    for (int l = 0;; ++l) {
        const long long base = static_cast<long long>(l) * s;
        if (base - e.rho > r_max && base + e.rho > r_max) break;
        for (const long long d : {base - e.rho, base + e.rho})
            if (d > 0 && d <= r_max) out.insert(Slope(s, static_cast<int>(d)));
    }
    return {out.begin(), out.end()};
}

std::vector<Slope> s1_slope_set(int r_max) {
    std::vector<Slope> out;
    for (int l = r_max; l >= 1; --l) out.emplace_back(1, l);
    return out;
}

namespace {

// Denominator of the slope after applying `op`; twists keep it unchanged.
int target_denominator(const Operation& op, const Slope& slope) {
    switch (op.kind) {
        case OpKind::Fourier: return slope.s - slope.r;
        case OpKind::FourierPlus: return slope.s + slope.r;
        case OpKind::FourierMinus: return slope.r - slope.s;
        case OpKind::Twist: return slope.r;
    }
    return slope.r;
}

std::vector<Operation> candidate_ops(const ADAParameter& t, TwistPolicy policy) {
    std::vector<Operation> out;
    std::vector<Eigenvalue> alphas{Eigenvalue::one()};
    if (policy == TwistPolicy::EigenvaluesOfC0) {
        alphas.clear();
        for (const auto& [eig, diagram] : t.c0.parts()) alphas.push_back(eig);
    }
    for (const OpKind kind : {OpKind::Fourier, OpKind::FourierPlus, OpKind::FourierMinus})
        for (const Eigenvalue& alpha : alphas) out.push_back({kind, alpha});
    if (policy == TwistPolicy::EigenvaluesOfC0) {
        // Normalizing twists T_{lambda^-1}: the only twists needed to turn an
        // eigenvalue of C0 into 1 before truncation bites.
        for (const auto& [eig, diagram] : t.c0.parts())
            if (!eig.is_one()) out.push_back(Operation::twist(eig.inverse()));
    }
    return out;
}

} // namespace

OrbitGraph enumerate(const ADAParameter& t, int r_max, TwistPolicy policy) {
    validate(t);
    OrbitGraph g;
    std::map<ADAParameter, int> index;
    std::deque<int> frontier;
    g.nodes.push_back(t);
    index.emplace(t, 0);
    frontier.push_back(0);

    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop_front();
        const ADAParameter source = g.nodes[static_cast<std::size_t>(u)];
        for (const Operation& op : candidate_ops(source, policy)) {
            if (!is_allowed(op, source)) continue;
            if (target_denominator(op, source.slope) > r_max) continue;
            const ADAParameter target = apply(op, source);
            auto [it, inserted] = index.emplace(target, static_cast<int>(g.nodes.size()));
            if (inserted) {
                g.nodes.push_back(target);
                frontier.push_back(it->second);
            }
            g.edges.push_back({u, it->second, op});
        }
    }
    return g;
}

std::map<Slope, int> count_per_slope(const OrbitGraph& g) {
    std::map<Slope, int> counts;
    for (const auto& node : g.nodes) ++counts[node.slope];
    if (g.nodes.empty()) return counts;

    const int s = g.nodes.front().slope.s;
    if (s == 2) {
        const int first = counts.begin()->second;
        for (const auto& [slope, count] : counts) {
            if (count != first || count < 1 || count > 2)
                throw StructureViolation("slope " + slope.str() + " has count " +
                                         std::to_string(count) +
                                         ", expected uniform 1 or 2 for s = 2");
        }
    } else {
        for (const auto& [slope, count] : counts)
            if (count != 1)
                throw StructureViolation("slope " + slope.str() + " has count " +
                                         std::to_string(count) + ", expected 1 for s = " +
                                         std::to_string(s));
    }
    return counts;
}

} // namespace ada
