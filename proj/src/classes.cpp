#include "ada/classes.hpp"

#include <algorithm>
#include <map>

#include "ada/errors.hpp"

namespace ada {

Eigenvalue::Eigenvalue(Rat modulus, Rat phase)
    : modulus_(std::move(modulus)), phase_(phase.mod1()) {
    if (modulus_ <= Rat(0))
        throw ParseFailure("eigenvalue modulus must be positive, got " + modulus_.str());
}

Eigenvalue Eigenvalue::inverse() const {
    return Eigenvalue(Rat(1) / modulus_, (-phase_).mod1());
}

Eigenvalue operator*(const Eigenvalue& a, const Eigenvalue& b) {
    return Eigenvalue(a.modulus_ * b.modulus_, (a.phase_ + b.phase_).mod1());
}

std::string Eigenvalue::str() const {
    if (modulus_ == Rat(1)) {
        if (phase_.is_zero()) return "1";
        if (phase_ == Rat(1, 2)) return "-1";
        return "e(" + phase_.str() + ")";
    }
    if (phase_.is_zero()) return modulus_.str();
    if (phase_ == Rat(1, 2)) return "-" + modulus_.str();
    return modulus_.str() + "*e(" + phase_.str() + ")";
}

namespace {

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(text));
        return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseFailure("bad rational '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ParseFailure("rational out of range '" + text + "'");
    }
}

} // namespace

Eigenvalue Eigenvalue::parse(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (ch != ' ') text += ch;
    if (text.empty()) throw ParseFailure("empty eigenvalue");

    Rat phase(0);
    if (text.front() == '-') {
        phase = Rat(1, 2);
        text.erase(text.begin());
        if (text.empty()) throw ParseFailure("bad eigenvalue '" + raw + "'");
    }

    auto parse_phase = [&](const std::string& inner) {
        if (inner.size() < 3 || inner.front() != '(' || inner.back() != ')')
            throw ParseFailure("bad phase factor in '" + raw + "'");
        return parse_rat(inner.substr(1, inner.size() - 2));
    };

    if (text.front() == 'e')
        return Eigenvalue(Rat(1), phase + parse_phase(text.substr(1)));

    const auto star = text.find('*');
    if (star == std::string::npos)
        return Eigenvalue(parse_rat(text), phase);
    const std::string tail = text.substr(star + 1);
    if (tail.empty() || tail.front() != 'e')
        throw ParseFailure("bad eigenvalue '" + raw + "'");
    return Eigenvalue(parse_rat(text.substr(0, star)), phase + parse_phase(tail.substr(1)));
}

ConjugacyClass::ConjugacyClass(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (const auto& [eig, diagram] : parts_)
        if (diagram.is_empty())
            throw MalformedDiagram("conjugacy class part at " + eig.str() +
                                   " has an empty diagram");
    std::sort(parts_.begin(), parts_.end(),
              [](const Part& a, const Part& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i].first == parts_[i + 1].first)
            throw MalformedDiagram("duplicate eigenvalue " + parts_[i].first.str() +
                                   " in conjugacy class");
}

ConjugacyClass ConjugacyClass::unipotent(const YoungDiagram& y) {
    if (y.is_empty()) return trivial();
    return ConjugacyClass({{Eigenvalue::one(), y}});
}

const YoungDiagram& ConjugacyClass::diagram_at(const Eigenvalue& e) const {
    static const YoungDiagram kEmpty;
    for (const auto& [eig, diagram] : parts_)
        if (eig == e) return diagram;
    return kEmpty;
}

bool ConjugacyClass::has_eigenvalue(const Eigenvalue& e) const {
    for (const auto& [eig, diagram] : parts_)
        if (eig == e) return true;
    return false;
}

bool ConjugacyClass::is_unipotent(bool or_empty) const {
    if (parts_.empty()) return or_empty;
    return parts_.size() == 1 && parts_.front().first.is_one();
}

bool ConjugacyClass::is_regular_semisimple_not_one() const {
    if (parts_.empty()) return false;
    for (const auto& [eig, diagram] : parts_)
        if (eig.is_one() || diagram.columns() != std::vector<int>{1}) return false;
    return true; // distinctness holds by the sorted-unique representation
}

std::string ConjugacyClass::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ", ";
        out += parts_[i].first.str() + ": [" + parts_[i].second.str() + "]";
    }
    return out + "}";
}

int class_rank(const ConjugacyClass& c) {
    int total = 0;
    for (const auto& [eig, diagram] : c.parts()) total += rank(diagram);
    return total;
}

ConjugacyClass scale(const ConjugacyClass& c, const Eigenvalue& alpha) {
    std::vector<ConjugacyClass::Part> parts;
    parts.reserve(c.parts().size());
    for (const auto& [eig, diagram] : c.parts()) parts.emplace_back(eig * alpha, diagram);
    return ConjugacyClass(std::move(parts));
}

ConjugacyClass truncate_at(const ConjugacyClass& c, const Eigenvalue& alpha) {
    std::vector<ConjugacyClass::Part> parts;
    parts.reserve(c.parts().size());
    for (const auto& [eig, diagram] : c.parts()) {
        if (eig == alpha) {
            YoungDiagram t = truncate(diagram);
            if (!t.is_empty()) parts.emplace_back(eig, std::move(t));
        } else {
            parts.emplace_back(eig, diagram);
        }
    }
    return ConjugacyClass(std::move(parts));
}

ConjugacyClass extend_at(const ConjugacyClass& c, int h, const Eigenvalue& alpha) {
    if (h == 0) return c;
    std::vector<ConjugacyClass::Part> parts;
    parts.reserve(c.parts().size() + 1);
    bool placed = false;
    for (const auto& [eig, diagram] : c.parts()) {
        if (eig == alpha) {
            parts.emplace_back(eig, prepend_column(diagram, h));
            placed = true;
        } else {
            parts.emplace_back(eig, diagram);
        }
    }
    if (!placed) parts.emplace_back(alpha, prepend_column(YoungDiagram::empty(), h));
    return ConjugacyClass(std::move(parts));
}

Marking minimal_marking(const ConjugacyClass& c) {
    if (class_rank(c) == 0) throw EmptyClass("cannot mark the rank-0 conjugacy class");
    // Work on a mutable copy of the diagrams; each picked eigenvalue
    // consumes the first column of its diagram.
    std::vector<std::pair<Eigenvalue, std::vector<int>>> state;
    for (const auto& [eig, diagram] : c.parts()) state.emplace_back(eig, diagram.columns());

    Marking marking;
    for (;;) {
        std::size_t best = state.size();
        for (std::size_t i = 0; i < state.size(); ++i) {
            if (state[i].second.empty()) continue;
            if (best == state.size() ||
                state[i].second.front() > state[best].second.front())
                best = i; // ties keep the earlier entry = (phase, modulus) ascending
        }
        if (best == state.size()) break;
        marking.entries.push_back(state[best].first);
        state[best].second.erase(state[best].second.begin());
    }
    return marking;
}

Leg leg(const ConjugacyClass& c, const Marking& xi) {
    std::map<Eigenvalue, int> occurrences;
    for (const auto& e : xi.entries) ++occurrences[e];
    for (const auto& [eig, diagram] : c.parts())
        if (occurrences[eig] < diagram.column_count())
            throw NotAMarking("eigenvalue " + eig.str() + " occurs " +
                              std::to_string(occurrences[eig]) + " times but its diagram has " +
                              std::to_string(diagram.column_count()) + " columns");

    std::map<Eigenvalue, YoungDiagram> current;
    for (const auto& [eig, diagram] : c.parts()) current[eig] = diagram;

    Leg out;
    int d = class_rank(c);
    out.dims.push_back(d);
    for (std::size_t i = 0; i + 1 < xi.entries.size(); ++i) {
        auto it = current.find(xi.entries[i]);
        if (it != current.end()) {
            d -= first_column_height(it->second);
            it->second = truncate(it->second);
        }
        out.dims.push_back(d);
    }
    while (!out.dims.empty() && out.dims.back() == 0) out.dims.pop_back();
    return out;
}

} // namespace ada
