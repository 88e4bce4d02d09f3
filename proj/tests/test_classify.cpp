#include "lapuniq/classify.hpp"
#include "lapuniq/family_parse.hpp"

#include <doctest.h>

#include <complex>

using namespace lapuniq;
using cplx = std::complex<double>;

TEST_CASE("classify_1d golden verdicts") {
    SUBCASE("(k) is a uniqueness sequence via Thm ibeer(i)") {
        auto v = classify_1d(make_affine({1}, {1}));
        CHECK(v.status == Status::Uniqueness);
        CHECK(v.rule == "Thm ibeer(i)");
        CHECK_FALSE(v.certificate.empty());
    }
    SUBCASE("1+ik^0.7 is not, via Example or(ii), flagged paper-asserted") {
        auto v = classify_1d(make_impow({0.7}));
        CHECK(v.status == Status::NotUniqueness);
        CHECK(v.rule == "Example or(ii)");
        CHECK(v.certificate.contains("paper_asserted"));
    }
    SUBCASE("1+ik^0.5 boundary case is uniqueness (divergent sum)") {
        auto v = classify_1d(make_impow({0.5}));
        CHECK(v.status == Status::Uniqueness);
        CHECK(v.rule == "Thm ibeer(i)");
    }
    SUBCASE("Doetsch sequence hits the witness database") {
        auto v = classify_1d(doetsch_family());
        CHECK(v.status == Status::NotUniqueness);
        CHECK(v.rule == "Doetsch example");
        CHECK(v.certificate["witness"] == "dech");
    }
    SUBCASE("real power family with gamma > 1 in a sector: Thm ibeer(iii)") {
        auto v = classify_1d(make_power({1}, {1}, {1.5}), 1e-9, 0.1);
        CHECK(v.status == Status::NotUniqueness);
        CHECK(v.rule == "Thm ibeer(iii)");
    }
    SUBCASE("nonempty certificate whenever conclusive") {
        for (const auto& fam : {make_affine({1}, {1}), make_impow({0.7})}) {
            auto v = classify_1d(fam);
            if (v.status != Status::Inconclusive) CHECK_FALSE(v.certificate.empty());
        }
    }
}

TEST_CASE("classify_nd golden verdicts") {
    SUBCASE("product lattice -> Uniqueness via Thm tor") {
        auto v = classify_nd(parse_family("product:(affine:n=1;a=1;b=1)x(affine:n=1;a=1;b=1)"));
        CHECK(v.status == Status::Uniqueness);
        CHECK(v.rule == "Thm tor");
    }
    SUBCASE("diagonal -> NotUniqueness with the oro witness") {
        auto v = classify_nd(diagonal_family());
        CHECK(v.status == Status::NotUniqueness);
        CHECK(v.rule == "Example oro");
        CHECK(v.certificate["witness"] == "diagonal");
    }
    SUBCASE("affine lattice n=3 -> Uniqueness via Prop gade(ii)") {
        auto v = classify_nd(make_affine({1, 2, 3}, {1, 1, 2}));
        CHECK(v.status == Status::Uniqueness);
        CHECK(v.rule == "Prop gade(ii)");
    }
    SUBCASE("sector lattice -> Uniqueness") {
        auto v = classify_nd(make_sector(0.7));
        CHECK(v.status == Status::Uniqueness);
        CHECK(v.rule == "Example oro (sector)");
    }
    SUBCASE("certificates carry the rule trace") {
        auto v = classify_nd(make_affine({1, 1}, {1, 1}));
        CHECK(v.certificate.contains("trace"));
        CHECK_FALSE(v.certificate["trace"].empty());
    }
}

TEST_CASE("shift coherence (Prop nmt): verdict invariant under Shift") {
    for (const auto& z : {cplx(0, 1), cplx(2, 0), cplx(1, -1)}) {
        auto base = make_affine({1, 1}, {1, 1});
        auto shifted = derive_family(base, Shift{{z, z}});
        CHECK(classify_nd(shifted).status == classify_nd(base).status);

        auto base1 = make_affine({1}, {1});
        auto shifted1 = derive_family(base1, Shift{{z}});
        CHECK(classify_nd(shifted1).status == classify_nd(base1).status);
    }
}

TEST_CASE("reindex invariance (Remark pot)") {
    auto fam = parse_family("product:(affine:n=1;a=1;b=1)x(affine:n=1;a=1;b=1)");
    auto v0 = classify_nd(fam);
    for (unsigned block : {2u, 3u, 5u}) {
        auto v = classify_nd(derive_family(fam, Reindex{block}));
        CHECK(v.status == v0.status);
    }
}

TEST_CASE("projection (Prop zxc): never NotUniqueness from a Uniqueness base") {
    auto base = make_affine({1, 2}, {1, 1});
    for (auto coords : {std::vector<std::size_t>{1}, std::vector<std::size_t>{2}}) {
        auto v = classify_nd(derive_family(base, Project{IndexSubset{coords}}));
        CHECK(v.status != Status::NotUniqueness);
        CHECK(v.status == Status::Uniqueness);  // rule-covered base
        CHECK(v.rule == "Prop zxc");
    }
}

TEST_CASE("muntz route: full-lattice subset passes, diagonal stays inconclusive") {
    // explicit copy of the full 2-D lattice prefix (not labeled), so the
    // engine must go through Thm kunja rather than pattern matching
    auto latt = enumerate(make_affine({1, 1}, {1, 1}), 300);
    auto v = classify_nd(make_explicit(latt), 300);
    CHECK(v.status == Status::Uniqueness);
    CHECK(v.rule == "Thm kunja");
    CHECK(v.certificate.contains("muntz"));

    // unlabeled diagonal: kunja density fails, no other rule -> Inconclusive
    auto diag = enumerate(diagonal_family(), 300);
    auto vd = classify_nd(make_explicit(diag), 300);
    CHECK(vd.status == Status::Inconclusive);
}

TEST_CASE("residue split gives existence-only inconclusive in nd engine") {
    auto base = make_affine({1, 1}, {1, 1});
    auto v = classify_nd(derive_family(base, ResidueSplit{2, 1}));
    CHECK(v.status == Status::Inconclusive);
    CHECK(v.rule.find("Prop split") == 0);
}

TEST_CASE("residue split of a 1-d affine lattice stays rule-recognizable") {
    auto v = classify_nd(derive_family(make_affine({1}, {1}), ResidueSplit{2, 0}));
    CHECK(v.status == Status::Uniqueness);
    CHECK(v.rule == "Thm ibeer(i)");
}

TEST_CASE("subordinated (k) classified via Cor ojha") {
    auto d = derive_family(make_affine({1}, {1}), Subordinate{IndexSubset::full(1), {0.5}});
    auto v = classify_nd(d);
    CHECK(v.status == Status::Uniqueness);
    CHECK(v.rule == "Cor ojha");
}

TEST_CASE("inconclusive is the default, with evidence recorded") {
    Explicit e;
    e.gen = [](std::size_t k) -> Point {
        return {cplx(1.0 + 1.0 / double(k * k), 0.0)};  // accumulates at 1; no rule
    };
    SequenceFamily fam{1, std::move(e)};
    auto v = classify_1d(fam);
    CHECK(v.status == Status::Inconclusive);
    CHECK(v.certificate.contains("blaschke"));
}
