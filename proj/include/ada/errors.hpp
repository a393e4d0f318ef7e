#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ada {

// Base class for all domain errors. Each error carries a stable machine
// readable code (used by the CLI for JSON error reports) plus a human
// readable message.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define ADA_DEFINE_ERROR(Name)                                        \
    class Name : public DomainError {                                 \
    public:                                                           \
        explicit Name(const std::string& message)                     \
            : DomainError(#Name, message) {}                          \
    }

// young
ADA_DEFINE_ERROR(MalformedDiagram);
ADA_DEFINE_ERROR(BoxTooSmall);

// classes
ADA_DEFINE_ERROR(EmptyClass);
ADA_DEFINE_ERROR(NotAMarking);

// params
ADA_DEFINE_ERROR(RankMismatch);
ADA_DEFINE_ERROR(NotCoprime);
ADA_DEFINE_ERROR(SlopeOne);
ADA_DEFINE_ERROR(NotStandard);
ADA_DEFINE_ERROR(Inconsistent);

// ops
ADA_DEFINE_ERROR(NotAllowed);

// pipeline
ADA_DEFINE_ERROR(SlopeOneAtInfinity);
ADA_DEFINE_ERROR(RankDeficit);

// orbits
ADA_DEFINE_ERROR(StructureViolation);

// dualities
ADA_DEFINE_ERROR(NotStandardTypeI);
ADA_DEFINE_ERROR(NotStandardNonTypeI);
ADA_DEFINE_ERROR(PreconditionFailed);
ADA_DEFINE_ERROR(IndexOutOfRange);

// diagrams
ADA_DEFINE_ERROR(Unsupported);

// I/O
ADA_DEFINE_ERROR(ParseFailure);

#undef ADA_DEFINE_ERROR

} // namespace ada
