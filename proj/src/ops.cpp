#include "ada/ops.hpp"

#include "ada/errors.hpp"

namespace ada {

std::string Operation::str() const {
    std::string base;
    switch (kind) {
        case OpKind::Fourier: base = "F"; break;
        case OpKind::FourierPlus: base = "F+"; break;
        case OpKind::FourierMinus: base = "F-"; break;
        case OpKind::Twist: base = "T"; break;
    }
    if (kind == OpKind::Twist || !alpha.is_one()) base += "@" + alpha.str();
    return base;
}

Operation Operation::parse(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (ch != ' ') text += ch;
    std::string head = text;
    Eigenvalue alpha = Eigenvalue::one();
    if (const auto at = text.find('@'); at != std::string::npos) {
        head = text.substr(0, at);
        alpha = Eigenvalue::parse(text.substr(at + 1));
    }
    if (head == "F") return fourier(alpha);
    if (head == "F+") return fourier_plus(alpha);
    if (head == "F-") return fourier_minus(alpha);
    if (head == "T") {
        if (text.find('@') == std::string::npos)
            throw ParseFailure("twist needs an eigenvalue, e.g. T@-1");
        return twist(alpha);
    }
    throw ParseFailure("unknown operation '" + raw + "'");
}

std::vector<Operation> parse_op_sequence(const std::string& text) {
    std::vector<Operation> ops;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!item.empty()) ops.push_back(Operation::parse(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ops;
}

bool is_allowed(const Operation& op, const ADAParameter& t) {
    switch (op.kind) {
        case OpKind::Fourier: return t.slope.greater_than_one();
        case OpKind::FourierPlus: return true;
        case OpKind::FourierMinus: return t.slope.less_than_one();
        case OpKind::Twist: return true;
    }
    return false;
}

namespace {

// Extension height ms - h; a negative value means the parameter is not
// realizable by any effective connection.
int extension_height(int ms, int h) {
    if (ms - h < 0)
        throw MalformedDiagram("extension height ms - h = " + std::to_string(ms - h) +
                               " is negative; parameter is not effective");
    return ms - h;
}

} // namespace

ADAParameter apply(const Operation& op, const ADAParameter& t) {
    validate(t);
    if (!is_allowed(op, t))
        throw NotAllowed(op.str() + " is not allowed at slope " + t.slope.str());

    const int s = t.slope.s;
    const int r = t.slope.r;
    const int ms = t.m * s;
    const Eigenvalue& a = op.alpha;

    ADAParameter out;
    out.m = t.m;
    switch (op.kind) {
        case OpKind::Twist:
            out.slope = t.slope;
            out.c0 = scale(t.c0, a);
            out.cinf = scale(t.cinf, a);
            break;
        case OpKind::Fourier: {
            const int h = first_column_height(t.c0.diagram_at(a));
            out.slope = Slope(s, s - r);
            out.c0 = extend_at(t.cinf, extension_height(ms, h), a);
            out.cinf = truncate_at(t.c0, a);
            break;
        }
        case OpKind::FourierPlus: {
            const int h = first_column_height(t.cinf.diagram_at(a));
            out.slope = Slope(s, s + r);
            out.c0 = extend_at(t.c0, extension_height(ms, h), a);
            out.cinf = truncate_at(t.cinf, a);
            break;
        }
        case OpKind::FourierMinus: {
            const int h = first_column_height(t.c0.diagram_at(a));
            out.slope = Slope(s, r - s);
            out.c0 = truncate_at(t.c0, a);
            out.cinf = extend_at(t.cinf, extension_height(ms, h), a);
            break;
        }
    }
    validate(out);
    return out;
}

ADAParameter apply_seq(const std::vector<Operation>& ops, const ADAParameter& t) {
    ADAParameter current = t;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (!is_allowed(ops[i], current))
            throw NotAllowed("step " + std::to_string(i) + " (" + ops[i].str() +
                             ") is not allowed at slope " + current.slope.str());
        current = apply(ops[i], current);
    }
    return current;
}

} // namespace ada
