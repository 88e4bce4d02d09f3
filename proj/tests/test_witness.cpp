#include "lapuniq/witness.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace lapuniq;
using cplx = std::complex<double>;

TEST_CASE("dech witness: closed form and numeric transform") {
    auto w = dech_witness();

    SUBCASE("closed form: 0 at 2i, 2pi at i") {
        std::vector<cplx> at2i{cplx(0, 2)};
        CHECK(std::abs(w.transform_at(at2i)) < 1e-12);
        std::vector<cplx> ati{cplx(0, 1)};
        CHECK(std::abs(w.transform_at(ati) - cplx(2.0 * M_PI, 0)) < 1e-10);
    }
    SUBCASE("closed form matches laplace_numeric at lambda = 1 and others") {
        for (cplx lam : {cplx(1, 0), cplx(0.5, 0.5), cplx(2, -1)}) {
            std::vector<cplx> l{lam};
            auto tv = laplace_numeric(w.descriptor, l, 1e-8);
            CHECK(std::abs(tv.value - w.transform_at(l)) < 1e-8);
        }
    }
    SUBCASE("annihilation on the Doetsch sequence") {
        auto rep = verify_annihilation(w, 20, 1e-10);
        CHECK(rep.pass);
        CHECK(rep.max_abs <= 1e-10);
        CHECK_FALSE(rep.exact_path);
    }
    SUBCASE("nonzero at the probe point") {
        CHECK(std::abs(w.descriptor.evaluator(w.probe_t)) > 1e-6);
    }
}

TEST_CASE("diagonal witness") {
    auto w = diagonal_witness();
    REQUIRE(w.exact_transform.has_value());

    SUBCASE("exact annihilation on 50 diagonal points") {
        auto rep = verify_annihilation(w, 50, 0.0);
        CHECK(rep.pass);
        CHECK(rep.max_abs == 0.0);
        CHECK(rep.exact_path);
    }
    SUBCASE("transform value at (2,3) is -1/216") {
        std::vector<GaussianRational> lam{GaussianRational(2), GaussianRational(3)};
        auto v = w.exact_transform->eval_exact(lam);
        CHECK(v.re == BigRational(-1, 216));
        CHECK(v.im == 0);
    }
    SUBCASE("function value at (1,2) is 1") {
        std::vector<double> t{1.0, 2.0};
        CHECK(std::abs(w.function->eval(t) - cplx(1, 0)) < 1e-14);
    }
    SUBCASE("wrong family is caught (negative control)") {
        Witness bad = w;
        Explicit e;
        e.gen = [](std::size_t k) -> Point {
            return {cplx(double(k), 0), cplx(double(k + 1), 0)};
        };
        bad.annihilated = SequenceFamily{2, std::move(e)};
        auto rep = verify_annihilation(bad, 10, 1e-10);
        CHECK_FALSE(rep.pass);
        CHECK(rep.max_abs == doctest::Approx(1.0 / 8.0));  // k=1: |(1-2)/(1*8)|
    }
}

TEST_CASE("ray witness") {
    SUBCASE("base block inversion: c=[], d=[]") {
        auto w = ray_witness({}, {});
        // transform (l1-1)(l2-1)/(l1^6 l2^6); vanishes on (1,k) and (k,1)
        auto rep = verify_annihilation(w, 50, 0.0);
        CHECK(rep.pass);
        CHECK(rep.exact_path);
    }
    SUBCASE("c=[2]: vanishes at (2k,k) exactly") {
        auto w = ray_witness({2}, {});
        for (unsigned k = 1; k <= 20; ++k) {
            std::vector<GaussianRational> lam{GaussianRational(2 * long(k)),
                                              GaussianRational(long(k))};
            CHECK(w.exact_transform->eval_exact(lam).is_zero());
        }
        auto rep = verify_annihilation(w, 60, 0.0);
        CHECK(rep.pass);
    }
    SUBCASE("nonzero at (1+i, 2)") {
        auto w = ray_witness({2}, {3});
        std::vector<cplx> lam{cplx(1, 1), cplx(2, 0)};
        CHECK(std::abs(w.exact_transform->eval(lam)) > 1e-12);
    }
    SUBCASE("exact transform agrees with the numeric transform of the inverse") {
        auto w = ray_witness({2}, {3});
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> u(1.0, 3.0);
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<cplx> lam{cplx(u(rng), 0.3 * rep), cplx(u(rng), -0.2 * rep)};
            auto tv = laplace_numeric(w.descriptor, lam, 1e-8);
            CHECK(std::abs(tv.value - w.exact_transform->eval(lam)) < 1e-6);
        }
    }
    SUBCASE("round-trip: laplace_exact of the inverse reproduces the transform") {
        auto w = ray_witness({2, 3}, {4});
        CHECK(laplace_exact(*w.function) == *w.exact_transform);
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS(ray_witness({0}, {}));
    }
}

TEST_CASE("witness registry and manifest") {
    CHECK(make_witness("dech").id == "dech");
    CHECK(make_witness("diagonal").id == "diagonal");
    CHECK(make_witness("ray:c=2;d=3").annihilated.dim == 2);
    CHECK_THROWS(make_witness("nope"));

    auto j = witness_manifest(diagonal_witness());
    CHECK(j["id"] == "diagonal");
    CHECK(j["family"] == "diag-kk");
    CHECK(j["has_exact_transform"] == true);
    CHECK(j.contains("function_text"));
}

TEST_CASE("every built-in witness passes verification and is nonzero") {
    for (const std::string id : {"dech", "diagonal", "ray:c=2;d=3"}) {
        auto w = make_witness(id);
        double tol = w.exact_transform ? 0.0 : 1e-10;
        auto rep = verify_annihilation(w, 50, tol);
        CHECK(rep.pass);
        if (w.function)
            CHECK(std::abs(w.function->eval(w.probe_t)) > 1e-6);
        else
            CHECK(std::abs(w.descriptor.evaluator(w.probe_t)) > 1e-6);
    }
}
