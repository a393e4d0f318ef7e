#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ada/rational.hpp"
#include "ada/young.hpp"

namespace ada {

// Exact nonzero complex scalar modulus * e^{2 pi i phase}, with rational
// modulus > 0 and rational phase in [0, 1). Covers every eigenvalue the
// AD-A calculus produces (roots of unity times rational moduli) without
// touching floating point.
class Eigenvalue {
public:
    Eigenvalue() : modulus_(1), phase_(0) {} // the value 1

    Eigenvalue(Rat modulus, Rat phase);

    static Eigenvalue one() { return Eigenvalue(); }
    static Eigenvalue minus_one() { return Eigenvalue(Rat(1), Rat(1, 2)); }
    // e^{2 pi i a/b}
    static Eigenvalue root_of_unity(std::int64_t a, std::int64_t b) {
        return Eigenvalue(Rat(1), Rat(a, b));
    }

    const Rat& modulus() const noexcept { return modulus_; }
    const Rat& phase() const noexcept { return phase_; }

    bool is_one() const noexcept { return modulus_ == Rat(1) && phase_.is_zero(); }

    Eigenvalue inverse() const;
    friend Eigenvalue operator*(const Eigenvalue& a, const Eigenvalue& b);

    friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
    // Canonical order: (phase, modulus) ascending. Used for tie-breaking in
    // markings and for the sorted-association representation of classes.
    friend std::strong_ordering operator<=>(const Eigenvalue& a, const Eigenvalue& b) {
        if (auto c = a.phase_ <=> b.phase_; c != std::strong_ordering::equal) return c;
        return a.modulus_ <=> b.modulus_;
    }

    // Shorthand forms: "1", "-1", "e(a/b)", "p/q", "p/q*e(a/b)".
    std::string str() const;
    static Eigenvalue parse(const std::string& text);

private:
    Rat modulus_;
    Rat phase_;
};

// Finite map eigenvalue -> nonempty Young diagram, kept as a sorted
// association list. Determines a GL_n conjugacy class via Jordan form;
// rank is the sum of the diagram ranks.
class ConjugacyClass {
public:
    using Part = std::pair<Eigenvalue, YoungDiagram>;

    ConjugacyClass() = default;
    // Empty diagrams are rejected, duplicate eigenvalues are rejected.
    explicit ConjugacyClass(std::vector<Part> parts);

    static ConjugacyClass trivial() { return ConjugacyClass{}; }
    static ConjugacyClass unipotent(const YoungDiagram& y);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    bool is_empty() const noexcept { return parts_.empty(); }

    // Diagram at an eigenvalue; the empty diagram if absent.
    const YoungDiagram& diagram_at(const Eigenvalue& e) const;
    bool has_eigenvalue(const Eigenvalue& e) const;

    // Single eigenvalue 1 (or empty when `or_empty`).
    bool is_unipotent(bool or_empty = false) const;
    // All diagrams [1], eigenvalues pairwise distinct and != 1, nonempty.
    bool is_regular_semisimple_not_one() const;

    friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
    friend std::strong_ordering operator<=>(const ConjugacyClass& a, const ConjugacyClass& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string str() const;

private:
    std::vector<Part> parts_; // sorted by eigenvalue, diagrams nonempty
};

// Ordered sequence of eigenvalues xi_1, ..., xi_w annihilating the class:
// (A - xi_1)...(A - xi_w) = 0.
struct Marking {
    std::vector<Eigenvalue> entries;

    friend bool operator==(const Marking&, const Marking&) = default;
};

// A-type chain attached to a conjugacy class: d_1 = rk(C) and
// d_{i+1} = rk((A - xi_1)...(A - xi_i)), trailing zeros dropped.
struct Leg {
    std::vector<int> dims;

    friend bool operator==(const Leg&, const Leg&) = default;
};

int class_rank(const ConjugacyClass& c);

// Multiplies every eigenvalue by alpha (Kummer twist on one class).
ConjugacyClass scale(const ConjugacyClass& c, const Eigenvalue& alpha);

// Deletes the first column of the diagram at alpha; no-op if alpha is
// absent; the part disappears when its diagram empties.
ConjugacyClass truncate_at(const ConjugacyClass& c, const Eigenvalue& alpha);

// Prepends a height-h column to the diagram at alpha (creating the part
// when needed); h == 0 is the identity.
ConjugacyClass extend_at(const ConjugacyClass& c, int h, const Eigenvalue& alpha);

// Canonical minimal marking: each eigenvalue occurs once per column of its
// diagram; greedily ordered by tallest current first column, ties broken
// by (phase, modulus) ascending. Throws EmptyClass on the rank-0 class.
Marking minimal_marking(const ConjugacyClass& c);

// Leg of (C, xi). Throws NotAMarking if some eigenvalue of C occurs fewer
// times in xi than its column count.
Leg leg(const ConjugacyClass& c, const Marking& xi);

} // namespace ada
