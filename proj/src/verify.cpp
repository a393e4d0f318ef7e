#include "ada/verify.hpp"

#include <algorithm>
#include <set>

#include "ada/diagrams.hpp"
#include "ada/dualities.hpp"
#include "ada/errors.hpp"
#include "ada/json_io.hpp"
#include "ada/ops.hpp"
#include "ada/orbits.hpp"
#include "ada/pipeline.hpp"

namespace ada {
namespace verify {

using nlohmann::json;

namespace {

json finish(const char* suite, json results) {
    bool pass = true;
    for (const auto& entry : results)
        if (entry.contains("pass") && !entry["pass"].get<bool>()) pass = false;
        else if (entry.contains("equal") && !entry["equal"].get<bool>()) pass = false;
    return json{{"suite", suite}, {"pass", pass}, {"results", std::move(results)}};
}

} // namespace

json pipeline_suite(const ADAParameter& t) {
    validate(t);
    std::vector<Eigenvalue> alphas{Eigenvalue::one()};
    for (const auto& [eig, diagram] : t.c0.parts())
        if (!eig.is_one()) alphas.push_back(eig);

    std::vector<Operation> ops;
    for (const OpKind kind : {OpKind::Fourier, OpKind::FourierPlus, OpKind::FourierMinus})
        for (const Eigenvalue& alpha : alphas) ops.push_back({kind, alpha});
    ops.push_back(Operation::twist(Eigenvalue::minus_one()));
    ops.push_back(Operation::twist(Eigenvalue::root_of_unity(1, 3)));

    json results = json::array();
    const pipeline::FormalData fd = pipeline::to_formal_data(t);
    for (const Operation& op : ops) {
        if (!is_allowed(op, t)) continue;
        const ADAParameter closed = apply(op, t);
        const ADAParameter transported = pipeline::to_parameter(pipeline::full_op(op, fd));
        results.push_back(json{{"op", op.str()},
                               {"closed_form", to_json(closed)},
                               {"pipeline", to_json(transported)},
                               {"equal", closed == transported}});
    }
    return finish("pipeline", std::move(results));
}

json dualities_suite(const ADAParameter& t, int l) {
    validate(t);
    json results = json::array();
    const ParamClass cls = classify(t);

    if (cls == ParamClass::StandardTypeI) {
        const ADAParameter closed = duality_add_columns(t, l);
        const ADAParameter composed =
            apply_seq(std::vector<Operation>(static_cast<std::size_t>(l),
                                             Operation::fourier_plus()),
                      t);
        results.push_back(json{{"duality", "I"},
                               {"l", l},
                               {"closed_form", to_json(closed)},
                               {"composed", to_json(composed)},
                               {"equal", closed == composed}});

        const YoungDiagram y = t.c0.diagram_at(Eigenvalue::one());
        const bool admissible = t.slope.s > 1 &&
                                static_cast<long long>(y.column_count()) * t.slope.s >
                                    t.slope.r;
        if (admissible) {
            const std::vector<Operation> seq = duality_complement_sequence(t);
            const ADAParameter closed2 = duality_complement(t);
            const ADAParameter composed2 = apply_seq(seq, t);
            results.push_back(json{{"duality", "II"},
                                   {"closed_form", to_json(closed2)},
                                   {"composed", to_json(composed2)},
                                   {"equal", closed2 == composed2}});
            for (int step = 0; step <= y.column_count(); ++step) {
                const ADAParameter mid = intermediate(t, step);
                const ADAParameter prefix = apply_seq(
                    std::vector<Operation>(seq.begin(), seq.begin() + step), t);
                results.push_back(json{{"duality", "II-intermediate"},
                                       {"l", step},
                                       {"closed_form", to_json(mid)},
                                       {"composed", to_json(prefix)},
                                       {"equal", mid == prefix}});
            }
        }
    }

    if (cls == ParamClass::Standard) {
        const ADAParameter closed = duality_iii(t);
        const ADAParameter composed = apply_seq(duality_iii_sequence(t), t);
        results.push_back(json{{"duality", "III"},
                               {"closed_form", to_json(closed)},
                               {"composed", to_json(composed)},
                               {"equal", closed == composed}});
    }

    if (results.empty())
        results.push_back(json{{"duality", "none"},
                               {"pass", false},
                               {"note", "no duality applies to a " + to_string(cls) +
                                            " parameter"}});
    return finish("dualities", std::move(results));
}

namespace {

bool has_edge(const OrbitGraph& g, int source, int target, const Operation& op) {
    return std::any_of(g.edges.begin(), g.edges.end(), [&](const OrbitEdge& e) {
        return e.source == source && e.target == target && e.op == op;
    });
}

Operation reverse_of(const Operation& op) {
    switch (op.kind) {
        case OpKind::Fourier: return Operation::fourier(op.alpha);
        case OpKind::FourierPlus: return Operation::fourier_minus(op.alpha);
        case OpKind::FourierMinus: return Operation::fourier_plus(op.alpha);
        case OpKind::Twist: return Operation::twist(op.alpha.inverse());
    }
    return op;
}

bool is_subgraph(const OrbitGraph& sub, const OrbitGraph& super) {
    for (const auto& node : sub.nodes)
        if (super.find_node(node) < 0) return false;
    for (const auto& e : sub.edges) {
        const int u = super.find_node(sub.nodes[static_cast<std::size_t>(e.source)]);
        const int v = super.find_node(sub.nodes[static_cast<std::size_t>(e.target)]);
        if (u < 0 || v < 0 || !has_edge(super, u, v, e.op)) return false;
    }
    return true;
}

} // namespace

json orbit_suite(const ADAParameter& t, int r_max) {
    validate(t);
    json results = json::array();
    const OrbitGraph g = enumerate(t, r_max, TwistPolicy::None);

    // Slope soundness and completeness against the closed-form slope set.
    const std::vector<Slope> predicted =
        t.slope.s == 1 ? s1_slope_set(r_max) : slope_set(t.slope, r_max);
    std::set<Slope> predicted_set(predicted.begin(), predicted.end());
    std::set<Slope> seen;
    for (const auto& node : g.nodes) seen.insert(node.slope);
    const bool sound =
        std::all_of(seen.begin(), seen.end(),
                    [&](const Slope& s) { return predicted_set.count(s) > 0; });
    results.push_back(json{{"property", "slope_soundness"}, {"pass", sound}});
    if (r_max >= t.slope.r)
        results.push_back(
            json{{"property", "slope_completeness"}, {"pass", seen == predicted_set}});
    else
        results.push_back(json{{"property", "slope_completeness"},
                               {"pass", true},
                               {"note", "window ends below the starting denominator"}});

    json counts = json::object();
    bool structure_ok = true;
    std::string structure_note;
    try {
        for (const auto& [slope, count] : count_per_slope(g))
            counts[slope.str()] = count;
    } catch (const StructureViolation& e) {
        structure_ok = false;
        structure_note = e.what();
    }
    results.push_back(json{{"property", "per_slope_counts"},
                           {"pass", structure_ok},
                           {"counts", counts},
                           {"note", structure_note}});

    bool pairing = true;
    for (const auto& e : g.edges)
        if (!has_edge(g, e.target, e.source, reverse_of(e.op))) pairing = false;
    results.push_back(json{{"property", "edge_pairing"}, {"pass", pairing}});

    const OrbitGraph again = enumerate(t, r_max, TwistPolicy::None);
    const bool deterministic =
        g.nodes == again.nodes &&
        g.edges.size() == again.edges.size() &&
        std::equal(g.edges.begin(), g.edges.end(), again.edges.begin(),
                   [](const OrbitEdge& a, const OrbitEdge& b) {
                       return a.source == b.source && a.target == b.target && a.op == b.op;
                   });
    results.push_back(json{{"property", "determinism"}, {"pass", deterministic}});

    bool closure = true;
    for (const auto& node : g.nodes)
        if (!is_subgraph(enumerate(node, r_max, TwistPolicy::None), g)) closure = false;
    results.push_back(json{{"property", "closure_consistency"}, {"pass", closure}});

    return finish("orbit", std::move(results));
}

json diagrams_suite(const ADAParameter& t, int r_max) {
    validate(t);
    json results = json::array();
    const OrbitGraph g = enumerate(t, r_max, TwistPolicy::None);

    bool even = true;
    for (const auto& node : g.nodes) {
        const Diagram d = full_diagram(node);
        for (int i = 0; i < d.size(); ++i)
            if (d.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] % 2 != 0)
                even = false;
    }
    results.push_back(json{{"property", "even_diagonal"}, {"pass", even}});

    if (t.slope.greater_than_one()) {
        const bool invariant =
            are_isomorphic(full_diagram(t), full_diagram(apply(Operation::fourier(), t)));
        results.push_back(json{{"property", "fourier_invariance"}, {"pass", invariant}});
    }

    const long long dim = wcv_dimension(full_diagram(t));
    bool constant = true;
    for (const auto& node : g.nodes)
        if (wcv_dimension(full_diagram(node)) != dim) constant = false;
    results.push_back(json{{"property", "dimension_invariance"},
                           {"pass", constant},
                           {"dimension", dim}});

    if (classify(t) != ParamClass::Generalized) {
        const GammaPlus closed = gamma_plus(t);
        const std::vector<GammaPlus> classes = gamma_plus_scan(t, r_max);
        const bool unique = classes.size() == 1;
        const bool matches = unique && are_isomorphic(classes.front().diagram, closed.diagram);
        results.push_back(json{{"property", "gamma_plus_unique_and_matches"},
                               {"pass", unique && matches},
                               {"classes", classes.size()},
                               {"closed_form_parameter", to_json(closed.parameter)}});
    }

    return finish("diagrams", std::move(results));
}

} // namespace verify
} // namespace ada
