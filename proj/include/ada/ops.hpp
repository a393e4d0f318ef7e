#pragma once

#include <string>
#include <vector>

#include "ada/params.hpp"

namespace ada {

// Elementary AD-A operations: F (Fourier), F+ = FM, F- = MF (M swaps 0 and
// infinity), and Kummer twists. alpha != 1 gives the conjugated variants
// F_alpha = T_alpha O T_{alpha^-1}.
enum class OpKind { Fourier, FourierPlus, FourierMinus, Twist };

struct Operation {
    OpKind kind = OpKind::Fourier;
    Eigenvalue alpha = Eigenvalue::one();

    static Operation fourier(Eigenvalue a = Eigenvalue::one()) {
        return {OpKind::Fourier, std::move(a)};
    }
    static Operation fourier_plus(Eigenvalue a = Eigenvalue::one()) {
        return {OpKind::FourierPlus, std::move(a)};
    }
    static Operation fourier_minus(Eigenvalue a = Eigenvalue::one()) {
        return {OpKind::FourierMinus, std::move(a)};
    }
    static Operation twist(Eigenvalue a) { return {OpKind::Twist, std::move(a)}; }

    friend bool operator==(const Operation&, const Operation&) = default;

    // CLI syntax: "F", "F+", "F-", "T@<eig>", "F@<eig>", "F+@<eig>", "F-@<eig>".
    std::string str() const;
    static Operation parse(const std::string& text);
};

// Comma-separated operation sequence, applied left to right.
std::vector<Operation> parse_op_sequence(const std::string& text);

// F and F_alpha need k > 1; F- and its variants need k < 1; F+ and twists
// are always allowed.
bool is_allowed(const Operation& op, const ADAParameter& t);

// Closed-form action on parameters. Throws NotAllowed, and MalformedDiagram
// when the input is structurally valid but not realizable (non-effective).
ADAParameter apply(const Operation& op, const ADAParameter& t);

// Left-to-right fold of apply; NotAllowed names the failing step.
ADAParameter apply_seq(const std::vector<Operation>& ops, const ADAParameter& t);

} // namespace ada
