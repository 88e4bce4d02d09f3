#include "lapuniq/exp_polynomial.hpp"
#include "lapuniq/laplace_exact.hpp"
#include "lapuniq/post_widder.hpp"
#include "lapuniq/random_gen.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

using namespace lapuniq;
using cplx = std::complex<double>;

namespace {

GaussianRational gr(long num, long den = 1) { return {BigRational(num, den)}; }

// g_k(t) = t^{k-1}/(k-1)!, one-dimensional
ExpPolynomial g_k(unsigned k) {
    return ExpPolynomial::monomial(GaussianRational{BigRational(1, factorial(k - 1))},
                                   {k - 1}, {GaussianRational()});
}

ExpPolynomial diagonal_fn() {
    return ExpPolynomial::tensor(g_k(2), g_k(3)) - ExpPolynomial::tensor(g_k(3), g_k(2));
}

// Brute-force one-dimensional finite convolution by composite Simpson rule.
cplx conv1d_oracle(const ExpPolynomial& f, const ExpPolynomial& g, double t, int panels = 2000) {
    double h = t / panels;
    cplx s = 0;
    for (int i = 0; i <= panels; ++i) {
        double x = i * h;
        double tf[1] = {t - x};
        double tg[1] = {x};
        cplx v = f.eval(tf) * g.eval(tg);
        double w = (i == 0 || i == panels) ? 1 : (i % 2 ? 4 : 2);
        s += w * v;
    }
    return s * (h / 3.0);
}

}  // namespace

TEST_CASE("eval basics") {
    auto one = ExpPolynomial::constant(1, gr(1));
    double t0[1] = {3.7};
    CHECK(one.eval(t0) == cplx{1.0, 0.0});

    auto f = ExpPolynomial::monomial(gr(1), {1}, {gr(-1)});
    double t1[1] = {0.0};
    CHECK(f.eval(t1) == cplx{0.0, 0.0});

    double t2[2] = {1.0, 1.0};
    CHECK(std::abs(diagonal_fn().eval(t2)) == doctest::Approx(0.0).epsilon(1e-15));

    double t3[2] = {1.0, 2.0};
    // g2(1)g3(2) - g3(1)g2(2) = 1*2 - 1/2*2 = 1
    CHECK(diagonal_fn().eval(t3).real() == doctest::Approx(1.0));

    double bad[2] = {1.0, 1.0};
    CHECK_THROWS(one.eval(bad));
}

TEST_CASE("laplace_exact monomial rule") {
    auto f = ExpPolynomial::monomial(gr(1), {0}, {gr(-2)});
    RationalTransform expect(1, {{gr(1), {gr(-2)}, {1}}});
    CHECK(laplace_exact(f) == expect);

    // t e^{it} -> 1/(lambda - i)^2
    auto g = ExpPolynomial::monomial(gr(1), {1}, {GaussianRational{BigRational(0), BigRational(1)}});
    RationalTransform expect2(1, {{gr(1), {GaussianRational{BigRational(0), BigRational(1)}}, {2}}});
    CHECK(laplace_exact(g) == expect2);
}

TEST_CASE("diagonal function transform is (l1-l2)/(l1^3 l2^3)") {
    RationalTransform F = laplace_exact(diagonal_fn());
    RationalTransform expect(2, {{gr(1), {gr(0), gr(0)}, {2, 3}},
                                 {gr(-1), {gr(0), gr(0)}, {3, 2}}});
    CHECK(F == expect);

    std::vector<GaussianRational> l{gr(2), gr(3)};
    CHECK(F.eval_exact(l) == GaussianRational{BigRational(-1, 216)});
    for (long k = 1; k <= 50; ++k) {
        std::vector<GaussianRational> d{gr(k), gr(k)};
        CHECK(F.eval_exact(d).is_zero());
    }
}

TEST_CASE("conv_full textbook cases") {
    auto one = ExpPolynomial::constant(1, gr(1));
    auto t = ExpPolynomial::monomial(gr(1), {1}, {gr(0)});
    CHECK(conv_full(one, one) == t);

    auto t3_over6 = ExpPolynomial::monomial(gr(1, 6), {3}, {gr(0)});
    CHECK(conv_full(t, t) == t3_over6);

    auto e1 = ExpPolynomial::monomial(gr(1), {0}, {gr(-1)});
    auto e2 = ExpPolynomial::monomial(gr(1), {0}, {gr(-2)});
    CHECK(conv_full(e1, e2) == e1 - e2);

    CHECK_THROWS(conv_full(one, ExpPolynomial::constant(2, gr(1))));
}

TEST_CASE("conv_full matches brute-force convolution integral") {
    std::mt19937 rng(7);
    for (int it = 0; it < 5; ++it) {
        auto f = random_exp_polynomial(rng, 1);
        auto g = random_exp_polynomial(rng, 1);
        auto c = conv_full(f, g);
        for (double t : {0.5, 1.0, 2.0}) {
            double tv[1] = {t};
            cplx got = c.eval(tv);
            cplx want = conv1d_oracle(f, g, t);
            CHECK(std::abs(got - want) < 1e-6 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("conv_full commutative and associative (exact)") {
    std::mt19937 rng(11);
    for (int it = 0; it < 10; ++it) {
        std::size_t n = 1 + it % 3;
        auto f = random_exp_polynomial(rng, n);
        auto g = random_exp_polynomial(rng, n);
        auto h = random_exp_polynomial(rng, n);
        CHECK(conv_full(f, g) == conv_full(g, f));
        CHECK(conv_full(conv_full(f, g), h) == conv_full(f, conv_full(g, h)));
    }
}

TEST_CASE("transform homomorphism under convolution") {
    std::mt19937 rng(13);
    for (int it = 0; it < 10; ++it) {
        std::size_t n = 1 + it % 3;
        auto f = random_exp_polynomial(rng, n);
        auto g = random_exp_polynomial(rng, n);
        CHECK(laplace_exact(conv_full(f, g)) == laplace_exact(f) * laplace_exact(g));
    }
}

TEST_CASE("conv_partial basics") {
    // a = 1 (l=1), u = t1 t2, D = {1} -> t1^2 t2 / 2
    auto a = ExpPolynomial::constant(1, gr(1));
    auto u = ExpPolynomial::monomial(gr(1), {1, 1}, {gr(0), gr(0)});
    auto r = conv_partial(a, u, IndexSubset({1}));
    CHECK(r == ExpPolynomial::monomial(gr(1, 2), {2, 1}, {gr(0), gr(0)}));

    // D = {1,...,n} coincides with conv_full
    std::mt19937 rng(17);
    for (int it = 0; it < 5; ++it) {
        std::size_t n = 1 + it % 3;
        auto f = random_exp_polynomial(rng, n);
        auto g = random_exp_polynomial(rng, n);
        CHECK(conv_partial(f, g, IndexSubset::full(n)) == conv_full(f, g));
    }

    CHECK_THROWS(conv_partial(u, a, IndexSubset({1, 2})));
    CHECK_THROWS(conv_partial(a, u, IndexSubset({1, 2})));
}

TEST_CASE("conv_partial transform factorization at sample points") {
    // a = e^{-s}, u = e^{-t1 - t2}, D = {2}
    auto a = ExpPolynomial::monomial(gr(1), {0}, {gr(-1)});
    auto u = ExpPolynomial::monomial(gr(1), {0, 0}, {gr(-1), gr(-1)});
    auto r = conv_partial(a, u, IndexSubset({2}));
    RationalTransform R = laplace_exact(r);
    RationalTransform A = laplace_exact(a);
    RationalTransform U = laplace_exact(u);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> re(0.5, 3.0), im(-1.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        std::vector<cplx> l{{re(rng), im(rng)}, {re(rng), im(rng)}};
        std::vector<cplx> l2{l[1]};
        cplx lhs = R.eval(l);
        cplx rhs = A.eval(l2) * U.eval(l);
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("antiderivative") {
    auto one2 = ExpPolynomial::constant(2, gr(1));
    CHECK(antiderivative(one2) == ExpPolynomial::monomial(gr(1), {1, 1}, {gr(0), gr(0)}));

    auto e1 = ExpPolynomial::monomial(gr(1), {0}, {gr(-1)});
    auto G = antiderivative(e1);
    CHECK(G == ExpPolynomial::constant(1, gr(1)) - e1);

    // diagonal witness: transform of antiderivative is (l1-l2)/(l1^4 l2^4)
    auto Gd = antiderivative(diagonal_fn());
    RationalTransform expect(2, {{gr(1), {gr(0), gr(0)}, {3, 4}},
                                 {gr(-1), {gr(0), gr(0)}, {4, 3}}});
    CHECK(laplace_exact(Gd) == expect);

    // G(0,...,0) = 0
    double z[2] = {0.0, 0.0};
    CHECK(Gd.eval(z) == cplx{0.0, 0.0});
}

TEST_CASE("antiderivative then mixed partial recovers f") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> pt(0.1, 3.0);
    for (int it = 0; it < 5; ++it) {
        std::size_t n = 1 + it % 3;
        auto f = random_exp_polynomial(rng, n);
        auto g = antiderivative(f);
        for (std::size_t j = 1; j <= n; ++j) g = derivative(g, j);
        for (int p = 0; p < 20; ++p) {
            std::vector<double> t(n);
            for (auto& x : t) x = pt(rng);
            CHECK(std::abs(f.eval(t) - g.eval(t)) < 1e-9 * (1.0 + std::abs(f.eval(t))));
        }
    }
}

TEST_CASE("post_widder exact identities") {
    RationalTransform invl(1, {{gr(1), {gr(0)}, {1}}});
    for (unsigned k = 1; k <= 20; ++k) {
        double t[1] = {1.7};
        CHECK(post_widder_inverse(invl, t, k) == cplx{1.0, 0.0});
    }
    RationalTransform invl2(2, {{gr(1), {gr(0), gr(0)}, {1, 1}}});
    double t2[2] = {0.3, 2.5};
    CHECK(post_widder_inverse(invl2, t2, 7) == cplx{1.0, 0.0});
}

TEST_CASE("post_widder convergence for 1/(lambda+1)") {
    RationalTransform F(1, {{gr(1), {gr(-1)}, {1}}});
    double t[1] = {1.0};
    cplx f10 = post_widder_inverse(F, t, 10);
    CHECK(f10.real() == doctest::Approx(std::pow(10.0 / 11.0, 11)).epsilon(1e-12));
    CHECK(f10.real() == doctest::Approx(0.350494).epsilon(1e-5));
    double e10 = std::abs(f10.real() - std::exp(-1.0));
    double e40 = std::abs(post_widder_inverse(F, t, 40).real() - std::exp(-1.0));
    CHECK(e40 < e10);

    // pole hit at evaluation point: F = 1/(lambda-2), k=2, t=1 -> lambda=2
    RationalTransform P(1, {{gr(1), {gr(2)}, {1}}});
    double tp[1] = {1.0};
    CHECK_THROWS(post_widder_inverse(P, tp, 2));
}

TEST_CASE("coordinate processing order does not matter") {
    // multiply two 2-D transforms and compare against the transpose route
    std::mt19937 rng(31);
    for (int it = 0; it < 5; ++it) {
        auto f = random_exp_polynomial(rng, 2);
        auto g = random_exp_polynomial(rng, 2);
        auto swap2 = [](const ExpPolynomial& p) {
            std::vector<ExpMonomial> t;
            for (auto m : p.terms()) {
                std::swap(m.powers[0], m.powers[1]);
                std::swap(m.rates[0], m.rates[1]);
                t.push_back(std::move(m));
            }
            return ExpPolynomial(2, std::move(t));
        };
        CHECK(swap2(conv_full(f, g)) == conv_full(swap2(f), swap2(g)));
    }
}
