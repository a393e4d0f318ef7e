#pragma once

#include <optional>

#include "ada/ops.hpp"
#include "ada/params.hpp"

namespace ada {
namespace pipeline {

// Independent route to the elementary operations: the three-step Fourier
// recipe (pass to modified formal data, transport Stokes circles by the
// slope map, reconstruct), plus the Moebius swap of 0 and infinity. Used
// to cross-check the closed forms in ops; shares no transform logic with
// them (extension heights come from rank bookkeeping here, not from the
// ms - h formulas).

enum class Location { Zero, Infinity };

// The wild circles: `count` distinct circles of the common slope, all at
// one location. Absent for tame-only data.
struct WildPart {
    int count = 1;
    Location location = Location::Infinity;
    Slope slope;

    friend bool operator==(const WildPart&, const WildPart&) = default;
};

// Global formal data of AD-A shape (or its Moebius image): tame classes at
// 0 and infinity plus the wild part. total_rank is the connection rank.
struct FormalData {
    std::optional<WildPart> wild;
    ConjugacyClass tame0;
    ConjugacyClass tame_inf;
    int total_rank = 0;

    friend bool operator==(const FormalData&, const FormalData&) = default;
};

// Same shape with the tame class at finite distance (location 0) replaced
// by its truncation; ranks at finite points may now be deficient.
struct ModifiedFormalData {
    std::optional<WildPart> wild;
    ConjugacyClass tame0;
    ConjugacyClass tame_inf;

    friend bool operator==(const ModifiedFormalData&, const ModifiedFormalData&) = default;
};

// Checks the AD-A/Moebius shape invariants and rank bookkeeping.
void validate(const FormalData& fd);

FormalData to_formal_data(const ADAParameter& t);
ADAParameter to_parameter(const FormalData& fd); // requires wild part at infinity

ModifiedFormalData modify(const FormalData& fd);

// Inverse of modify for the given total rank; throws RankDeficit when n is
// too small to absorb the truncated part.
FormalData unmodify(const ModifiedFormalData& mfd, int n);

// Formal Fourier transform on modified data: circles move by the slope
// maps (at infinity: k>1 stays at infinity with s/(s-r), k<1 lands at 0
// with s/(r-s); at 0: s/r lands at infinity with s/(r+s)), tame classes
// at 0 and infinity exchange. Slope-1 circles at infinity would leave the
// two-point singularity set; SlopeOneAtInfinity reports that exit.
ModifiedFormalData fourier_modified(const ModifiedFormalData& mfd);

// Swaps 0 and infinity on all circles and classes.
FormalData mobius(const FormalData& fd);

// Full elementary operation: F = unmodify . fourier . modify, F+ = F after
// mobius, F- = mobius after F, twists by scaling; alpha-variants by scale
// conjugation.
FormalData full_op(const Operation& op, const FormalData& fd);

} // namespace pipeline
} // namespace ada
