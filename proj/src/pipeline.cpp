#include "ada/pipeline.hpp"

#include "ada/errors.hpp"

namespace ada {
namespace pipeline {

namespace {

int wild_rank_at(const FormalData& fd, Location loc) {
    if (!fd.wild || fd.wild->location != loc) return 0;
    return fd.wild->count * fd.wild->slope.r;
}

int wild_rank_at(const ModifiedFormalData& mfd, Location loc) {
    if (!mfd.wild || mfd.wild->location != loc) return 0;
    return mfd.wild->count * mfd.wild->slope.r;
}

FormalData scaled(const FormalData& fd, const Eigenvalue& alpha) {
    FormalData out = fd;
    out.tame0 = scale(fd.tame0, alpha);
    out.tame_inf = scale(fd.tame_inf, alpha);
    return out;
}

} // namespace

void validate(const FormalData& fd) {
    if (fd.wild && fd.wild->count < 1)
        throw RankMismatch("wild part must contain at least one circle");
    const int at0 = wild_rank_at(fd, Location::Zero) + class_rank(fd.tame0);
    const int atinf = wild_rank_at(fd, Location::Infinity) + class_rank(fd.tame_inf);
    if (at0 != fd.total_rank || atinf != fd.total_rank)
        throw RankMismatch("local ranks (" + std::to_string(at0) + " at 0, " +
                           std::to_string(atinf) + " at infinity) do not both equal " +
                           std::to_string(fd.total_rank));
}

FormalData to_formal_data(const ADAParameter& t) {
    ada::validate(t);
    FormalData fd;
    fd.wild = WildPart{t.m, Location::Infinity, t.slope};
    fd.tame0 = t.c0;
    fd.tame_inf = t.cinf;
    fd.total_rank = t.rank();
    return fd;
}

ADAParameter to_parameter(const FormalData& fd) {
    if (!fd.wild || fd.wild->location != Location::Infinity)
        throw RankMismatch("formal data is not of AD-A shape (wild part not at infinity)");
    ADAParameter t;
    t.m = fd.wild->count;
    t.slope = fd.wild->slope;
    t.c0 = fd.tame0;
    t.cinf = fd.tame_inf;
    ada::validate(t);
    return t;
}

ModifiedFormalData modify(const FormalData& fd) {
    validate(fd);
    return ModifiedFormalData{fd.wild, truncate_at(fd.tame0, Eigenvalue::one()),
                              fd.tame_inf};
}

FormalData unmodify(const ModifiedFormalData& mfd, int n) {
    const int deficit =
        n - wild_rank_at(mfd, Location::Zero) - class_rank(mfd.tame0);
    if (deficit < 0)
        throw RankDeficit("total rank " + std::to_string(n) +
                          " cannot absorb the modified class at 0");
    FormalData fd;
    fd.wild = mfd.wild;
    fd.tame0 = extend_at(mfd.tame0, deficit, Eigenvalue::one());
    fd.tame_inf = mfd.tame_inf;
    fd.total_rank = n;
    validate(fd);
    return fd;
}

ModifiedFormalData fourier_modified(const ModifiedFormalData& mfd) {
    ModifiedFormalData out;
    // Tame circles: <0>_0 <-> <0>_inf; the sign (-1)^Irr acts only on the
    // untracked rank-1 wild scalars and trivially on tame classes.
    out.tame0 = mfd.tame_inf;
    out.tame_inf = mfd.tame0;
    if (mfd.wild) {
        const WildPart& w = *mfd.wild;
        const int s = w.slope.s;
        const int r = w.slope.r;
        if (w.location == Location::Infinity) {
            if (s == r)
                throw SlopeOneAtInfinity(
                    "slope-1 circles at infinity map to finite points outside {0, inf}");
            if (s > r)
                out.wild = WildPart{w.count, Location::Infinity, Slope(s, s - r)};
            else
                out.wild = WildPart{w.count, Location::Zero, Slope(s, r - s)};
        } else {
            out.wild = WildPart{w.count, Location::Infinity, Slope(s, r + s)};
        }
    }
    return out;
}

FormalData mobius(const FormalData& fd) {
    FormalData out;
    out.wild = fd.wild;
    if (out.wild)
        out.wild->location = out.wild->location == Location::Zero ? Location::Infinity
                                                                  : Location::Zero;
    out.tame0 = fd.tame_inf;
    out.tame_inf = fd.tame0;
    out.total_rank = fd.total_rank;
    return out;
}

namespace {

FormalData fourier_full(const FormalData& fd) {
    const ModifiedFormalData image = fourier_modified(modify(fd));
    // Modification only truncates at finite distance, so the rank of the
    // image is its modified local rank at infinity.
    const int n =
        wild_rank_at(image, Location::Infinity) + class_rank(image.tame_inf);
    return unmodify(image, n);
}

FormalData full_op_at_one(const Operation& op, const FormalData& fd) {
    switch (op.kind) {
        case OpKind::Fourier: return fourier_full(fd);
        case OpKind::FourierPlus: return fourier_full(mobius(fd));
        case OpKind::FourierMinus: return mobius(fourier_full(fd));
        case OpKind::Twist: return fd; // handled by the caller's scaling
    }
    throw NotAllowed("unknown operation kind");
}

} // namespace

FormalData full_op(const Operation& op, const FormalData& fd) {
    validate(fd);
    if (op.kind == OpKind::Twist) return scaled(fd, op.alpha);
    if (op.alpha.is_one()) return full_op_at_one(op, fd);
    // O_alpha = T_alpha O T_{alpha^-1}
    return scaled(full_op_at_one(op, scaled(fd, op.alpha.inverse())), op.alpha);
}

} // namespace pipeline
} // namespace ada
