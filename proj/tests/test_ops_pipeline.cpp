#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ada/errors.hpp"
#include "ada/ops.hpp"
#include "ada/pipeline.hpp"
#include "generators.hpp"

using ada::ADAParameter;
using ada::ConjugacyClass;
using ada::Eigenvalue;
using ada::Operation;
using ada::Slope;
using ada::YoungDiagram;
namespace pl = ada::pipeline;

namespace {

ADAParameter param(int m, Slope slope, ConjugacyClass c0,
                   ConjugacyClass cinf = ConjugacyClass::trivial()) {
    ADAParameter t;
    t.m = m;
    t.slope = slope;
    t.c0 = std::move(c0);
    t.cinf = std::move(cinf);
    return t;
}

ConjugacyClass uni(std::vector<int> cols) {
    return ConjugacyClass::unipotent(YoungDiagram(std::move(cols)));
}

const ADAParameter kPainleveI = param(1, Slope(5, 2), uni({2}));

ADAParameter via_pipeline(const Operation& op, const ADAParameter& t) {
    return pl::to_parameter(pl::full_op(op, pl::to_formal_data(t)));
}

} // namespace

TEST_CASE("is_allowed") {
    CHECK(ada::is_allowed(Operation::fourier(), kPainleveI));
    CHECK_FALSE(ada::is_allowed(Operation::fourier_minus(), kPainleveI));
    CHECK_FALSE(ada::is_allowed(Operation::fourier(), param(1, Slope(1, 1), uni({1}))));
    CHECK(ada::is_allowed(Operation::fourier_plus(), kPainleveI));
    CHECK(ada::is_allowed(Operation::twist(Eigenvalue::minus_one()), kPainleveI));
}

TEST_CASE("apply on the Painleve I parameter") {
    CHECK(ada::apply(Operation::fourier(), kPainleveI) == param(1, Slope(5, 3), uni({3})));
    CHECK(ada::apply(Operation::fourier_plus(), kPainleveI) ==
          param(1, Slope(5, 7), uni({5, 2})));
    CHECK(ada::apply(Operation::fourier_minus(), param(1, Slope(5, 7), uni({5, 2}))) ==
          kPainleveI);
}

TEST_CASE("twist relabels") {
    const ConjugacyClass rss({{Eigenvalue::minus_one(), YoungDiagram({1})}});
    const ADAParameter t = param(1, Slope(2, 1), uni({1, 1}), rss);
    const ADAParameter twisted = ada::apply(Operation::twist(Eigenvalue::minus_one()), t);
    CHECK(twisted.c0 == ConjugacyClass({{Eigenvalue::minus_one(), YoungDiagram({1, 1})}}));
    CHECK(twisted.cinf == ConjugacyClass({{Eigenvalue::one(), YoungDiagram({1})}}));
    CHECK(twisted.slope == t.slope);
}

TEST_CASE("apply_seq") {
    CHECK(ada::apply_seq({Operation::fourier_plus(), Operation::fourier_minus()},
                         kPainleveI) == kPainleveI);
    CHECK(ada::apply_seq({Operation::fourier(), Operation::fourier()}, kPainleveI) ==
          kPainleveI);
    CHECK(ada::apply_seq({Operation::fourier_plus(), Operation::fourier_plus()},
                         kPainleveI) == param(1, Slope(5, 12), uni({5, 5, 2})));
    CHECK_THROWS_WITH_AS(ada::apply_seq({Operation::fourier_plus(), Operation::fourier()},
                                        kPainleveI),
                         doctest::Contains("step 1"), ada::NotAllowed);
}

TEST_CASE("non-effective inputs are rejected") {
    // rank identity holds, but a column taller than ms cannot come from any
    // effective connection; the transforms refuse it
    const ADAParameter bogus = param(1, Slope(2, 3), uni({3}));
    CHECK_NOTHROW(ada::validate(bogus));
    CHECK_THROWS_AS(ada::apply(Operation::fourier_minus(), bogus), ada::MalformedDiagram);
}

TEST_CASE("operation parsing") {
    CHECK(Operation::parse("F") == Operation::fourier());
    CHECK(Operation::parse("F+") == Operation::fourier_plus());
    CHECK(Operation::parse("F-") == Operation::fourier_minus());
    CHECK(Operation::parse("T@-1") == Operation::twist(Eigenvalue::minus_one()));
    CHECK(Operation::parse("F+@e(1/3)") ==
          Operation::fourier_plus(Eigenvalue::root_of_unity(1, 3)));
    CHECK_THROWS_AS(Operation::parse("T"), ada::ParseFailure);
    CHECK_THROWS_AS(Operation::parse("G"), ada::ParseFailure);
    const auto seq = ada::parse_op_sequence("F,F+@-1,T@e(1/3)");
    REQUIRE(seq.size() == 3);
    CHECK(seq[1] == Operation::fourier_plus(Eigenvalue::minus_one()));
    for (const auto& op : seq) CHECK(Operation::parse(op.str()) == op);
}

TEST_CASE("pipeline modify") {
    const pl::FormalData pi = pl::to_formal_data(kPainleveI);
    CHECK(pl::modify(pi).tame0 == ConjugacyClass::trivial()); // tau of [N] is empty
    const pl::FormalData ex5 = pl::to_formal_data(param(1, Slope(3, 7), uni({2, 1, 1, 1, 1, 1})));
    CHECK(pl::modify(ex5).tame0 == uni({1, 1, 1, 1, 1}));
    // no eigenvalue 1: the class is untouched
    pl::FormalData fd;
    fd.wild = pl::WildPart{1, pl::Location::Infinity, Slope(3, 2)};
    fd.tame0 = ConjugacyClass({{Eigenvalue::root_of_unity(1, 4), YoungDiagram({1, 1})}});
    fd.tame_inf = ConjugacyClass::trivial();
    fd.total_rank = 2;
    CHECK(pl::modify(fd).tame0 == fd.tame0);
}

TEST_CASE("pipeline unmodify") {
    const pl::FormalData ex5 = pl::to_formal_data(param(1, Slope(3, 7), uni({2, 1, 1, 1, 1, 1})));
    CHECK(pl::unmodify(pl::modify(ex5), 7) == ex5);
    const pl::FormalData pi = pl::to_formal_data(kPainleveI);
    CHECK(pl::unmodify(pl::modify(pi), 2) == pi);
    CHECK_THROWS_AS(pl::unmodify(pl::modify(ex5), 4), ada::RankDeficit);
}

TEST_CASE("pipeline fourier slope cases") {
    pl::ModifiedFormalData mfd;
    mfd.wild = pl::WildPart{1, pl::Location::Infinity, Slope(5, 2)};
    const pl::ModifiedFormalData image = pl::fourier_modified(mfd);
    CHECK(image.wild->slope == Slope(5, 3));
    CHECK(image.wild->location == pl::Location::Infinity);

    mfd.wild = pl::WildPart{1, pl::Location::Zero, Slope(5, 2)};
    CHECK(pl::fourier_modified(mfd).wild->slope == Slope(5, 7));
    CHECK(pl::fourier_modified(mfd).wild->location == pl::Location::Infinity);

    mfd.wild = pl::WildPart{1, pl::Location::Infinity, Slope(5, 7)};
    CHECK(pl::fourier_modified(mfd).wild->slope == Slope(5, 2));
    CHECK(pl::fourier_modified(mfd).wild->location == pl::Location::Zero);

    mfd.wild = pl::WildPart{1, pl::Location::Infinity, Slope(1, 1)};
    CHECK_THROWS_AS(pl::fourier_modified(mfd), ada::SlopeOneAtInfinity);

    // tame classes transport 0 <-> infinity
    mfd.wild = pl::WildPart{1, pl::Location::Zero, Slope(5, 2)};
    mfd.tame0 = ConjugacyClass({{Eigenvalue::root_of_unity(1, 4), YoungDiagram({1})}});
    mfd.tame_inf = ConjugacyClass::trivial();
    const pl::ModifiedFormalData swapped = pl::fourier_modified(mfd);
    CHECK(swapped.tame_inf == mfd.tame0);
    CHECK(swapped.tame0 == mfd.tame_inf);
}

TEST_CASE("pipeline mobius") {
    const pl::FormalData pi = pl::to_formal_data(kPainleveI);
    const pl::FormalData swapped = pl::mobius(pi);
    CHECK(swapped.wild->location == pl::Location::Zero);
    CHECK(swapped.tame_inf == pi.tame0);
    CHECK(pl::mobius(swapped) == pi);

    pl::FormalData tame_only;
    tame_only.tame0 = uni({2, 1});
    tame_only.tame_inf = ConjugacyClass({{Eigenvalue::minus_one(), YoungDiagram({1, 1, 1})}});
    tame_only.total_rank = 3;
    const pl::FormalData ts = pl::mobius(tame_only);
    CHECK(ts.tame0 == tame_only.tame_inf);
    CHECK(ts.tame_inf == tame_only.tame0);
}

TEST_CASE("pipeline full_op on Painleve I") {
    CHECK(via_pipeline(Operation::fourier(), kPainleveI) ==
          param(1, Slope(5, 3), uni({3})));
    CHECK(via_pipeline(Operation::fourier_plus(), kPainleveI) ==
          param(1, Slope(5, 7), uni({5, 2})));
    CHECK(via_pipeline(Operation::twist(Eigenvalue::one()), kPainleveI) == kPainleveI);
}

TEST_CASE("closed forms agree with the pipeline on random walks") {
    gen::Rng rng(31);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const ADAParameter t = gen::random_reachable(rng, /*with_twists=*/true);
        std::vector<Operation> ops{Operation::twist(Eigenvalue::root_of_unity(
            rng.uniform(0, 5), 6))};
        for (const auto& [eig, diagram] : t.c0.parts()) {
            ops.push_back(Operation::fourier(eig));
            ops.push_back(Operation::fourier_plus(eig));
            ops.push_back(Operation::fourier_minus(eig));
        }
        for (const Operation& op : ops) {
            if (!ada::is_allowed(op, t)) continue;
            CHECK(ada::apply(op, t) == via_pipeline(op, t));
            ++checked;
        }
    }
    CHECK(checked > 800);
}

TEST_CASE("involution and inverse pairs") {
    gen::Rng rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        const ADAParameter t = gen::random_reachable(rng);
        CHECK(ada::apply(Operation::fourier_minus(),
                         ada::apply(Operation::fourier_plus(), t)) == t);
        if (t.slope.greater_than_one())
            CHECK(ada::apply(Operation::fourier(), ada::apply(Operation::fourier(), t)) == t);
        if (t.slope.less_than_one())
            CHECK(ada::apply(Operation::fourier_plus(),
                             ada::apply(Operation::fourier_minus(), t)) == t);
    }
}

TEST_CASE("conjugation law for alpha-variants") {
    gen::Rng rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const ADAParameter t = gen::random_reachable(rng, /*with_twists=*/true);
        const Eigenvalue alpha = t.c0.parts().empty()
                                     ? Eigenvalue::minus_one()
                                     : t.c0.parts().back().first;
        for (const ada::OpKind kind :
             {ada::OpKind::Fourier, ada::OpKind::FourierPlus, ada::OpKind::FourierMinus}) {
            const Operation twisted{kind, alpha};
            if (!ada::is_allowed(twisted, t)) continue;
            const ADAParameter direct = ada::apply(twisted, t);
            const ADAParameter conjugated = ada::apply(
                Operation::twist(alpha),
                ada::apply(Operation{kind, Eigenvalue::one()},
                           ada::apply(Operation::twist(alpha.inverse()), t)));
            CHECK(direct == conjugated);
        }
    }
}

TEST_CASE("slope maps") {
    gen::Rng rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        const ADAParameter t = gen::random_reachable(rng);
        const int s = t.slope.s;
        const int r = t.slope.r;
        CHECK(ada::apply(Operation::fourier_plus(), t).slope == Slope(s, s + r));
        if (t.slope.greater_than_one())
            CHECK(ada::apply(Operation::fourier(), t).slope == Slope(s, s - r));
        if (t.slope.less_than_one())
            CHECK(ada::apply(Operation::fourier_minus(), t).slope == Slope(s, r - s));
    }
}
