#pragma once

#include "lapuniq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lapuniq {

/// Black-box function on [0,inf)^n with a growth bound |f(t)| <= M e^{omega.t}.
struct FunctionDescriptor {
    std::size_t dim;
    std::function<std::complex<double>(std::span<const double>)> evaluator;
    double growth_M = 1.0;
    std::vector<double> growth_omega;            // length dim
    std::optional<std::vector<double>> support;  // bounding box [0,support_j] if compact

    void validate() const {
        if (growth_omega.size() != dim)
            throw std::invalid_argument("FunctionDescriptor: omega length mismatch");
        if (growth_M < 1.0)
            throw std::invalid_argument("FunctionDescriptor: M must be >= 1");
        if (support && support->size() != dim)
            throw std::invalid_argument("FunctionDescriptor: support length mismatch");
    }
};

/// Transform value with its accuracy provenance.
struct TransformValue {
    std::complex<double> value;
    double abs_error = 0.0;
    std::vector<double> box;  // truncation [0,T_j]
    int panels = 0;           // composite panels per axis
};

/// Thrown when panel refinement exhausts its budget; carries the best value.
struct ToleranceNotReached : std::runtime_error {
    TransformValue best;
    explicit ToleranceNotReached(TransformValue v)
        : std::runtime_error("laplace_numeric: tolerance not reached within panel budget"),
          best(std::move(v)) {}
};

namespace detail {

inline int panel_budget(std::size_t dim) {
    switch (dim) {
        case 1: return 512;
        case 2: return 128;
        default: return 32;
    }
}

}  // namespace detail

/// Numerical Laplace transform by truncated tensor quadrature. The box
/// [0,T]^n is sized from the growth hint so the tail bound stays below
/// tol/2, then panels are doubled until the quadrature estimate is below
/// tol/2 as well.
inline TransformValue laplace_numeric(const FunctionDescriptor& f,
                                      std::span<const std::complex<double>> lambda,
                                      double tol) {
    f.validate();
    std::size_t n = f.dim;
    if (lambda.size() != n) throw std::invalid_argument("laplace_numeric: dimension mismatch");

    std::vector<double> T(n);
    double tail = 0.0;
    if (f.support) {
        T = *f.support;
    } else {
        std::vector<double> d(n);
        double prod_inv = f.growth_M;
        for (std::size_t j = 0; j < n; ++j) {
            d[j] = lambda[j].real() - f.growth_omega[j];
            if (!(d[j] > 0))
                throw std::domain_error("laplace_numeric: Re lambda_j must exceed omega_j");
            prod_inv /= d[j];
        }
        // pick T_j so that M (prod 1/d_j - prod (1-e^{-d_j T_j})/d_j) < tol/2
        double eps = tol / (2.0 * std::max<double>(1.0, 2 * n) * std::max(prod_inv, 1e-300));
        for (std::size_t j = 0; j < n; ++j)
            T[j] = std::max(1.0, -std::log(std::min(eps, 0.5)) / d[j]);
        double full = 1.0, trunc = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            full /= d[j];
            trunc *= (1.0 - std::exp(-d[j] * T[j])) / d[j];
        }
        tail = std::max(0.0, f.growth_M * (full - trunc));
    }

    auto integrand = [&](std::span<const double> t) {
        std::complex<double> e = 0;
        for (std::size_t j = 0; j < n; ++j) e -= lambda[j] * t[j];
        return std::exp(e) * f.evaluator(t);
    };

    const int budget = detail::panel_budget(n);
    std::complex<double> prev = integrate_box(integrand, T, 2);
    int panels = 4;
    while (true) {
        std::complex<double> cur = integrate_box(integrand, T, panels);
        double quad_err = std::abs(cur - prev);
        TransformValue out{cur, quad_err + tail, T, panels};
        if (quad_err <= tol / 2.0) return out;
        if (panels >= budget) throw ToleranceNotReached(std::move(out));
        prev = cur;
        panels *= 2;
    }
}

/// Evidence report for membership in Omega_b: partial integrals over an
/// expanding schedule of boxes [0,T]^n.
struct RegionProbe {
    bool bounded = false;
    double max_magnitude = 0.0;
    std::vector<double> magnitudes;  // one per schedule entry
};

/// Heuristic only: finite boxes cannot certify an asymptotic property.
/// "bounded" means the partial-integral magnitudes stabilized over the last
/// half of the schedule.
inline RegionProbe region_probe_b(const FunctionDescriptor& f,
                                  std::span<const std::complex<double>> lambda,
                                  std::span<const double> schedule = {}) {
    f.validate();
    std::size_t n = f.dim;
    if (lambda.size() != n) throw std::invalid_argument("region_probe_b: dimension mismatch");
    std::vector<double> sched(schedule.begin(), schedule.end());
    if (sched.empty()) sched = {1, 2, 4, 8, 16, 32};

    auto integrand = [&](std::span<const double> t) {
        std::complex<double> e = 0;
        for (std::size_t j = 0; j < n; ++j) e -= lambda[j] * t[j];
        return std::exp(e) * f.evaluator(t);
    };

    RegionProbe probe;
    for (double Tv : sched) {
        std::vector<double> T(n, Tv);
        int panels = std::max(4, static_cast<int>(Tv));
        panels = std::min(panels, detail::panel_budget(n));
        double m = std::abs(integrate_box(integrand, T, panels));
        probe.magnitudes.push_back(m);
        probe.max_magnitude = std::max(probe.max_magnitude, m);
    }
    std::size_t half = probe.magnitudes.size() / 2;
    double lo = probe.magnitudes[half], hi = lo;
    for (std::size_t i = half; i < probe.magnitudes.size(); ++i) {
        lo = std::min(lo, probe.magnitudes[i]);
        hi = std::max(hi, probe.magnitudes[i]);
    }
    probe.bounded = std::isfinite(hi) && (hi - lo) <= 0.05 * (1.0 + lo);
    return probe;
}

}  // namespace lapuniq
