#pragma once

#include "lapuniq/rational_transform.hpp"

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace lapuniq {

/// Post-Widder approximant
///   f_k(t) = prod_j [(-1)^k / k! * (k/t_j)^{k+1}] * d^k/dl_1^k ... d^k/dl_n^k F
/// evaluated at lambda_j = k/t_j, with the derivatives taken symbolically:
///   d^k/dx^k (x-mu)^{-p} = (-1)^k (p+k-1)!/(p-1)! (x-mu)^{-p-k}.
/// Everything is computed in exact rational arithmetic, so e.g. F = 1/lambda
/// yields exactly 1 for every k.
inline std::complex<double> post_widder_inverse(const RationalTransform& F,
                                                std::span<const double> t, unsigned k) {
    std::size_t n = F.dim();
    if (t.size() != n) throw std::invalid_argument("post_widder_inverse: dimension mismatch");
    if (k == 0) throw std::invalid_argument("post_widder_inverse: k must be positive");

    std::vector<GaussianRational> x(n);  // evaluation points k/t_j
    for (std::size_t j = 0; j < n; ++j) {
        if (!(t[j] > 0)) throw std::invalid_argument("post_widder_inverse: t_j must be > 0");
        x[j] = GaussianRational{BigRational(k) / rational_from_double(t[j])};
    }

    BigInt kfact = factorial(k);
    GaussianRational prefactor{BigRational(1)};
    for (std::size_t j = 0; j < n; ++j) {
        GaussianRational p = x[j].pow(k + 1) / GaussianRational{BigRational(kfact)};
        if (k & 1u) p = -p;
        prefactor *= p;
    }

    GaussianRational sum;
    for (const auto& term : F.terms()) {
        GaussianRational v = term.coeff;
        for (std::size_t j = 0; j < n; ++j) {
            unsigned p = term.orders[j];
            GaussianRational d = x[j] - term.poles[j];
            if (d.is_zero()) throw std::domain_error("post_widder_inverse: pole at k/t_j");
            // rising factorial p (p+1) ... (p+k-1)
            BigInt rf = factorial(p + k - 1) / factorial(p - 1);
            GaussianRational deriv{BigRational(rf)};
            if (k & 1u) deriv = -deriv;
            v *= deriv / d.pow(p + k);
        }
        sum += v;
    }
    return (prefactor * sum).to_complex();
}

}  // namespace lapuniq
