#pragma once

#include "lapuniq/exp_polynomial.hpp"
#include "lapuniq/laplace_numeric.hpp"

#include <algorithm>
#include <cmath>

namespace lapuniq {

/// Wrap an exp-polynomial as a black-box descriptor with the growth hint
/// read off its terms: |f(t)| <= (sum |coeff| sup t^a e^{(Re mu - eps) t...}).
/// We take omega_j = max_terms Re mu_j + 1 to absorb the polynomial factors.
inline FunctionDescriptor descriptor_of(const ExpPolynomial& f) {
    FunctionDescriptor d;
    d.dim = f.dim();
    d.growth_omega.assign(f.dim(), 0.0);
    double csum = 0.0;
    for (const auto& m : f.terms()) {
        csum += std::abs(m.coeff.to_complex());
        for (std::size_t j = 0; j < f.dim(); ++j) {
            double r = static_cast<double>(m.rates[j].re);
            double w = (m.powers[j] > 0) ? r + 1.0 : r;
            d.growth_omega[j] = std::max(d.growth_omega[j], w);
        }
    }
    d.growth_M = std::max(1.0, 4.0 * csum);
    ExpPolynomial copy = f;
    d.evaluator = [copy](std::span<const double> t) { return copy.eval(t); };
    return d;
}

}  // namespace lapuniq
