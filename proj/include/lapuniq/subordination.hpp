#pragma once

#include "lapuniq/exp_polynomial.hpp"
#include "lapuniq/laplace_numeric.hpp"
#include "lapuniq/quadrature.hpp"
#include "lapuniq/wright.hpp"

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace lapuniq {

/// Subordination operator
///   G_gamma(t) = int_{[0,inf)^l} prod_i Phi_{gamma_i}(s_i)
///                 * G(t with t_{j_i} replaced by s_i t_{j_i}^{gamma_i}) ds,
/// for the coordinates j_1 < ... < j_l listed in D. The s-integral is
/// truncated at the fitted Wright tail envelope and evaluated by composite
/// Gauss-Legendre panels with dyadic refinement.
class Subordinator {
public:
    Subordinator(FunctionDescriptor G, IndexSubset D, std::vector<double> gammas,
                 double tol = 1e-8)
        : g_(std::move(G)), d_(std::move(D)), gammas_(std::move(gammas)), tol_(tol) {
        g_.validate();
        d_.check_dim(g_.dim);
        if (gammas_.size() != d_.size())
            throw std::invalid_argument("Subordinator: gamma count must match |D|");
        for (double ga : gammas_)
            if (!(ga > 0.0 && ga < 1.0))
                throw std::invalid_argument("Subordinator: gamma must lie in (0,1)");
        for (double ga : gammas_) {
            evals_.emplace_back(WrightParams{ga});
            tails_.push_back(estimate_wright_tail(evals_.back()));
        }
    }

    const std::vector<WrightTail>& tails() const { return tails_; }

    std::complex<double> operator()(std::span<const double> t) const {
        if (t.size() != g_.dim) throw std::invalid_argument("Subordinator: dimension mismatch");
        std::size_t l = d_.size();

        // truncation per axis: Phi tail against the growth of G along that axis
        std::vector<double> S(l);
        for (std::size_t i = 0; i < l; ++i) {
            std::size_t j = d_.coords[i] - 1;
            double a = std::max(0.0, g_.growth_omega[j]) * std::pow(t[j], gammas_[i]);
            S[i] = tails_[i].truncation_point(tol_ / (4.0 * l * g_.growth_M), a);
        }

        std::vector<double> point(t.begin(), t.end());
        auto integrand = [&](std::span<const double> s) {
            std::complex<double> w = 1.0;
            for (std::size_t i = 0; i < l; ++i) {
                std::size_t j = d_.coords[i] - 1;
                w *= evals_[i](s[i]);
                point[j] = s[i] * std::pow(t[j], gammas_[i]);
            }
            return w * g_.evaluator(point);
        };

        const int budget = (l == 1) ? 256 : 64;
        std::complex<double> prevv = integrate_box(integrand, S, 2);
        int panels = 4;
        while (true) {
            std::complex<double> cur = integrate_box(integrand, S, panels);
            if (std::abs(cur - prevv) <= tol_ / 2.0) return cur;
            if (panels >= budget)
                throw std::runtime_error("Subordinator: quadrature budget exceeded");
            prevv = cur;
            panels *= 2;
        }
    }

    /// The subordinated function as a descriptor; useful for transforming it.
    /// Growth: |G_gamma(t)| <= M' e^{omega'.t} with omega' = omega outside D;
    /// along D the decay is subexponential, so any positive slope works.
    FunctionDescriptor as_descriptor() const {
        FunctionDescriptor out;
        out.dim = g_.dim;
        out.growth_M = g_.growth_M;
        out.growth_omega = g_.growth_omega;
        std::size_t i = 0;
        for (std::size_t j = 0; j < out.dim; ++j) {
            if (i < d_.coords.size() && d_.coords[i] == j + 1) {
                double w = out.growth_omega[j];
                out.growth_omega[j] = (w <= 0.0) ? 0.0 : std::pow(w, 1.0 / gammas_[i]);
                ++i;
            }
        }
        const Subordinator* self = this;
        out.evaluator = [self](std::span<const double> t) { return (*self)(t); };
        return out;
    }

private:
    FunctionDescriptor g_;
    IndexSubset d_;
    std::vector<double> gammas_;
    double tol_;
    std::vector<WrightEvaluator> evals_;
    std::vector<WrightTail> tails_;
};

inline std::complex<double> subordinate(const FunctionDescriptor& G, const IndexSubset& D,
                                        std::span<const double> gammas,
                                        std::span<const double> t, double tol = 1e-8) {
    Subordinator sub(G, D, std::vector<double>(gammas.begin(), gammas.end()), tol);
    return sub(t);
}

/// The isometric isomorphism L^1((0,1)^n) -> L^1([0,inf)^n):
///   [Phi(g)](t) = a_1...a_n e^{-a.t} g(e^{-a_1 t_1},...,e^{-a_n t_n}).
inline FunctionDescriptor isometry_phi(const FunctionDescriptor& g, std::span<const double> a) {
    g.validate();
    if (a.size() != g.dim) throw std::invalid_argument("isometry_phi: dimension mismatch");
    for (double aj : a)
        if (!(aj > 0)) throw std::invalid_argument("isometry_phi: a_j must be > 0");

    std::vector<double> av(a.begin(), a.end());
    double prod_a = 1.0;
    for (double aj : av) prod_a *= aj;

    // sup of |g| over (0,1)^n from its growth hint
    double sup_g = g.growth_M;
    for (double w : g.growth_omega) sup_g *= std::exp(std::max(0.0, w));

    FunctionDescriptor out;
    out.dim = g.dim;
    out.growth_M = std::max(1.0, sup_g * prod_a);
    out.growth_omega.assign(g.dim, 0.0);
    // e^{-a.t} prefactor gives genuine decay; keep omega at -a/2 so the
    // transform's tail bound converges for Re lambda > -a/2.
    for (std::size_t j = 0; j < g.dim; ++j) out.growth_omega[j] = -av[j] / 2.0;
    auto inner = g.evaluator;
    out.evaluator = [inner, av, prod_a](std::span<const double> t) {
        std::vector<double> x(av.size());
        double e = 0.0;
        for (std::size_t j = 0; j < av.size(); ++j) {
            e += av[j] * t[j];
            x[j] = std::exp(-av[j] * t[j]);
        }
        return prod_a * std::exp(-e) * inner(x);
    };
    return out;
}

}  // namespace lapuniq
