#include "lapuniq/quadrature.hpp"
#include "lapuniq/wright.hpp"

#include <doctest.h>

#include <cmath>

using namespace lapuniq;

namespace {

// High-resolution quadrature of s^p * Phi_gamma(s) over [0,S]; the moment
// oracle, independent of any subordination code.
double moment_oracle(const WrightEvaluator& ev, int p, double S, int panels = 400) {
    std::vector<double> xs, ws;
    panel_points(S, panels, xs, ws);
    double sum = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        sum += ws[i] * std::pow(xs[i], p) * ev(xs[i]);
    return sum;
}

}  // namespace

TEST_CASE("gamma=1/2 closed form e^{-s^2/4}/sqrt(pi)") {
    WrightEvaluator ev(WrightParams{0.5});
    double maxerr = 0;
    for (int i = 0; i <= 100; ++i) {
        double s = 10.0 * i / 100.0;
        double want = std::exp(-s * s / 4.0) / std::sqrt(M_PI);
        maxerr = std::max(maxerr, std::abs(ev(s) - want));
    }
    CHECK(maxerr <= 1e-10);
}

TEST_CASE("series anchor values") {
    CHECK(wright_eval(WrightParams{0.5}, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(wright_eval(WrightParams{0.3}, 0.0) ==
          doctest::Approx(1.0 / std::tgamma(0.7)).epsilon(1e-12));
    CHECK(wright_eval(WrightParams{0.5}, 2.0) ==
          doctest::Approx(std::exp(-1.0) / std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("normalization and moments vs Gamma(p+1)/Gamma(gamma p + 1)") {
    for (double g : {0.3, 0.5, 0.7}) {
        WrightEvaluator ev(WrightParams{g});
        WrightTail tail = estimate_wright_tail(ev);
        double S = tail.truncation_point(1e-11);
        for (int p = 0; p <= 3; ++p) {
            double got = moment_oracle(ev, p, S);
            double want = std::tgamma(p + 1.0) / std::tgamma(g * p + 1.0);
            CHECK(std::abs(got - want) < 1e-6);
        }
    }
}

TEST_CASE("nonnegative on the admissible range") {
    for (double g : {0.25, 0.5, 0.75}) {
        WrightEvaluator ev(WrightParams{g});
        WrightTail tail = estimate_wright_tail(ev);
        double S = tail.truncation_point(1e-10);
        for (double s = 0; s <= S; s += 0.1) CHECK(ev(s) >= 0.0);
    }
}

TEST_CASE("range restriction and parameter validation") {
    WrightEvaluator ev(WrightParams{0.5});
    CHECK_THROWS_AS(ev(31.0), std::domain_error);
    CHECK_THROWS_AS(ev(-1.0), std::domain_error);
    CHECK_THROWS(WrightEvaluator(WrightParams{1.5}));
    CHECK_THROWS(WrightEvaluator(WrightParams{0.0}));
}

TEST_CASE("tail envelope really bounds the function") {
    for (double g : {0.3, 0.5, 0.7}) {
        WrightEvaluator ev(WrightParams{g});
        WrightTail tail = estimate_wright_tail(ev);
        double S = tail.truncation_point(1e-12);
        for (double s = 1.0; s <= S; s += 0.25) {
            double bound = tail.C * std::exp(-tail.c * std::pow(s, tail.b));
            CHECK(ev(s) <= bound + 1e-12);
        }
    }
}
