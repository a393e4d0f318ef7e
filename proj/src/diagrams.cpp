#include "ada/diagrams.hpp"

#include <algorithm>
#include <array>

#include "ada/errors.hpp"

namespace ada {

namespace {

struct Builder {
    Diagram d;

    int add_vertex(std::string name, int dim) {
        d.vertices.push_back({std::move(name), dim});
        for (auto& row : d.b) row.push_back(0);
        d.b.emplace_back(d.vertices.size(), 0);
        return static_cast<int>(d.vertices.size()) - 1;
    }

    void set(int i, int j, long long mult) {
        d.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mult;
        d.b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = mult;
    }
};

// Attach the leg of `cls` at the already-created vertex `root`, whose
// dimension must match the first leg dimension.
void attach_leg(Builder& builder, int root, const ConjugacyClass& cls,
                const std::string& prefix) {
    const Leg lg = leg(cls, minimal_marking(cls));
    if (lg.dims.empty() || lg.dims.front() != builder.d.vertices[static_cast<std::size_t>(root)].dim)
        throw StructureViolation("leg root dimension does not match the tame vertex");
    int prev = root;
    for (std::size_t i = 1; i < lg.dims.size(); ++i) {
        const int v = builder.add_vertex(prefix + "." + std::to_string(i), lg.dims[i]);
        builder.set(prev, v, 1);
        prev = v;
    }
}

} // namespace

Diagram core_diagram(const ADAParameter& t) {
    validate(t);
    const long long s = t.slope.s;
    const long long r = t.slope.r;
    const long long loop = (r - 1) * (s - r - 1);
    if (loop % 2 != 0)
        throw StructureViolation("odd loop multiplicity (r-1)(s-r-1) at slope " +
                                 t.slope.str());

    Builder builder;
    std::vector<int> wild;
    for (int i = 0; i < t.m; ++i)
        wild.push_back(builder.add_vertex("q" + std::to_string(i + 1), 1));
    for (int i = 0; i < t.m; ++i) {
        builder.set(wild[static_cast<std::size_t>(i)], wild[static_cast<std::size_t>(i)], loop);
        for (int j = i + 1; j < t.m; ++j)
            builder.set(wild[static_cast<std::size_t>(i)], wild[static_cast<std::size_t>(j)],
                        r * (s - r));
    }

    const int dim0 = class_rank(truncate_at(t.c0, Eigenvalue::one()));
    const int diminf = class_rank(t.cinf);
    int t0 = -1;
    int tinf = -1;
    if (dim0 > 0) {
        t0 = builder.add_vertex("t0", dim0);
        for (int w : wild) builder.set(w, t0, r);
    }
    if (diminf > 0) {
        tinf = builder.add_vertex("tinf", diminf);
        for (int w : wild) builder.set(w, tinf, s - r);
    }
    if (t0 >= 0 && tinf >= 0) builder.set(t0, tinf, 1);
    return builder.d;
}

Diagram full_diagram(const ADAParameter& t) {
    validate(t);
    Builder builder;
    builder.d = core_diagram(t);

    auto vertex_named = [&](const std::string& name) {
        for (int i = 0; i < builder.d.size(); ++i)
            if (builder.d.vertices[static_cast<std::size_t>(i)].name == name) return i;
        return -1;
    };

    const ConjugacyClass tau_c0 = truncate_at(t.c0, Eigenvalue::one());
    if (class_rank(tau_c0) > 0) attach_leg(builder, vertex_named("t0"), tau_c0, "t0");
    if (class_rank(t.cinf) > 0) attach_leg(builder, vertex_named("tinf"), t.cinf, "tinf");
    return builder.d;
}

long long cartan_pairing(const Diagram& d) {
    long long total = 0;
    const std::size_t n = d.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const long long di = d.vertices[i].dim;
        total += 2 * di * di;
        for (std::size_t j = 0; j < n; ++j)
            total -= d.b[i][j] * di * d.vertices[j].dim;
    }
    return total;
}

long long wcv_dimension(const Diagram& d) { return 2 - cartan_pairing(d); }

bool is_nonnegative(const Diagram& d) {
    for (const auto& row : d.b)
        for (long long mult : row)
            if (mult < 0) return false;
    return true;
}

namespace {

// Per-vertex invariant used to prune the isomorphism search: dimension,
// loop multiplicity, and the sorted profile of incident (multiplicity,
// neighbour dimension, neighbour loop) triples.
using VertexKey = std::vector<long long>;

VertexKey vertex_key(const Diagram& d, std::size_t i) {
    VertexKey key{d.vertices[i].dim, d.b[i][i]};
    std::vector<std::array<long long, 3>> profile;
    for (std::size_t j = 0; j < d.vertices.size(); ++j) {
        if (j == i || d.b[i][j] == 0) continue;
        profile.push_back({d.b[i][j], d.vertices[j].dim, d.b[j][j]});
    }
    std::sort(profile.begin(), profile.end());
    for (const auto& entry : profile) key.insert(key.end(), entry.begin(), entry.end());
    return key;
}

bool extend_mapping(const Diagram& a, const Diagram& b,
                    const std::vector<VertexKey>& keys_a,
                    const std::vector<VertexKey>& keys_b, std::vector<int>& map_ab,
                    std::vector<bool>& used_b, std::size_t next) {
    const std::size_t n = a.vertices.size();
    if (next == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used_b[cand] || keys_a[next] != keys_b[cand]) continue;
        bool ok = a.vertices[next].dim == b.vertices[cand].dim;
        for (std::size_t prev = 0; ok && prev < next; ++prev)
            ok = a.b[next][prev] == b.b[cand][static_cast<std::size_t>(map_ab[prev])];
        if (!ok) continue;
        map_ab[next] = static_cast<int>(cand);
        used_b[cand] = true;
        if (extend_mapping(a, b, keys_a, keys_b, map_ab, used_b, next + 1)) return true;
        used_b[cand] = false;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Diagram& a, const Diagram& b) {
    if (a.vertices.size() != b.vertices.size()) return false;
    const std::size_t n = a.vertices.size();
    std::vector<VertexKey> keys_a(n), keys_b(n);
    for (std::size_t i = 0; i < n; ++i) {
        keys_a[i] = vertex_key(a, i);
        keys_b[i] = vertex_key(b, i);
    }
    auto sorted_a = keys_a;
    auto sorted_b = keys_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;

    std::vector<int> map_ab(n, -1);
    std::vector<bool> used_b(n, false);
    return extend_mapping(a, b, keys_a, keys_b, map_ab, used_b, 0);
}

GammaPlus gamma_plus(const ADAParameter& t) {
    validate(t);
    const ParamClass cls = classify(t);
    if (cls == ParamClass::Generalized)
        throw Unsupported(
            "gamma_plus closed form needs a standard or type-I parameter; use the orbit "
            "scan for generalized non-type-I inputs");

    const int s = t.slope.s;
    const int ms = t.m * s;
    const YoungDiagram y = t.c0.diagram_at(Eigenvalue::one());

    int steps = 0;
    Slope target(1, 1);
    if (s >= 2) {
        const Euclid e = euclid(t.slope);
        steps = e.kappa;
        target = Slope(s, e.rho);
    } else {
        steps = t.slope.r - 1; // walk down to the slope-1 endpoint
    }

    // C0 loses its first `steps` columns; their complements to ms stack on
    // top of the eigenvalue-1 part of C_inf.
    YoungDiagram y0 = y;
    for (int i = 0; i < steps; ++i) y0 = truncate(y0);

    std::vector<int> transferred;
    for (int j = steps; j >= 1; --j) {
        const int h = j <= y.column_count() ? y.columns()[static_cast<std::size_t>(j - 1)] : 0;
        if (ms - h > 0) transferred.push_back(ms - h);
        else if (ms - h < 0)
            throw MalformedDiagram("parameter is not effective: ms < column height");
    }
    const YoungDiagram old_inf_part = t.cinf.diagram_at(Eigenvalue::one());
    transferred.insert(transferred.end(), old_inf_part.columns().begin(),
                       old_inf_part.columns().end());

    std::vector<ConjugacyClass::Part> inf_parts;
    if (!transferred.empty())
        inf_parts.emplace_back(Eigenvalue::one(), YoungDiagram(std::move(transferred)));
    for (const auto& [eig, diagram] : t.cinf.parts())
        if (!eig.is_one()) inf_parts.emplace_back(eig, diagram);

    GammaPlus out;
    out.parameter.m = t.m;
    out.parameter.slope = target;
    out.parameter.c0 = ConjugacyClass::unipotent(y0);
    out.parameter.cinf = ConjugacyClass(std::move(inf_parts));
    validate(out.parameter);
    out.diagram = full_diagram(out.parameter);
    return out;
}

std::vector<GammaPlus> gamma_plus_scan(const ADAParameter& t, int r_max) {
    const OrbitGraph g = enumerate(t, r_max, TwistPolicy::EigenvaluesOfC0);

    std::vector<GammaPlus> nonnegative;
    int min_vertices = -1;
    for (const ADAParameter& node : g.nodes) {
        Diagram d = full_diagram(node);
        if (!is_nonnegative(d)) continue;
        if (min_vertices < 0 || d.size() < min_vertices) min_vertices = d.size();
        nonnegative.push_back({node, std::move(d)});
    }

    std::vector<GammaPlus> classes;
    for (auto& candidate : nonnegative) {
        if (candidate.diagram.size() != min_vertices) continue;
        const bool seen = std::any_of(classes.begin(), classes.end(), [&](const GammaPlus& c) {
            return are_isomorphic(c.diagram, candidate.diagram);
        });
        if (!seen) classes.push_back(std::move(candidate));
    }
    return classes;
}

} // namespace ada
