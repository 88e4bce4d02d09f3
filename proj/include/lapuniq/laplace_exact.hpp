#pragma once

#include "lapuniq/exp_polynomial.hpp"
#include "lapuniq/rational_transform.hpp"

#include <stdexcept>
#include <vector>

namespace lapuniq {

/// Exact transform: per monomial, L[t^a e^{mu t}](lambda) = a! / (lambda-mu)^{a+1},
/// tensorized over coordinates.
inline RationalTransform laplace_exact(const ExpPolynomial& f) {
    std::vector<TransformTerm> out;
    for (const auto& m : f.terms()) {
        TransformTerm t;
        t.coeff = m.coeff;
        t.poles = m.rates;
        t.orders.resize(m.dim());
        for (std::size_t j = 0; j < m.dim(); ++j) {
            t.coeff *= GaussianRational{BigRational(factorial(m.powers[j]))};
            t.orders[j] = m.powers[j] + 1;
        }
        out.push_back(std::move(t));
    }
    return RationalTransform(f.dim(), std::move(out));
}

/// Inverse of laplace_exact on the single-pole-per-coordinate form:
/// c / prod (lambda-mu)^p  ->  c / prod (p-1)! * t^{p-1} e^{mu t}.
inline ExpPolynomial inverse_laplace_exact(const RationalTransform& F) {
    std::vector<ExpMonomial> out;
    for (const auto& t : F.terms()) {
        ExpMonomial m;
        m.coeff = t.coeff;
        m.rates = t.poles;
        m.powers.resize(t.poles.size());
        for (std::size_t j = 0; j < t.poles.size(); ++j) {
            m.powers[j] = t.orders[j] - 1;
            m.coeff /= GaussianRational{BigRational(factorial(t.orders[j] - 1))};
        }
        out.push_back(std::move(m));
    }
    return ExpPolynomial(F.dim(), std::move(out));
}

/// Finite convolution over all coordinates, computed through the exact
/// transform product and its partial-fraction inverse.
inline ExpPolynomial conv_full(const ExpPolynomial& f, const ExpPolynomial& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("conv_full: dimension mismatch");
    return inverse_laplace_exact(laplace_exact(f) * laplace_exact(g));
}

/// Convolution in the coordinates of D only; the transform satisfies
/// L[a *0^{l,j} u](lambda) = a^(lambda_D) * u^(lambda).
inline ExpPolynomial conv_partial(const ExpPolynomial& a, const ExpPolynomial& u,
                                  const IndexSubset& d) {
    if (d.size() != a.dim())
        throw std::invalid_argument("conv_partial: |D| must equal a.dim");
    if (a.dim() > u.dim())
        throw std::invalid_argument("conv_partial: a.dim exceeds u.dim");
    d.check_dim(u.dim());
    return inverse_laplace_exact(
        RationalTransform::mul_partial(laplace_exact(a), d, laplace_exact(u)));
}

/// G(t) = iterated integral of f over [0,t_1]x...x[0,t_n]; transform relation
/// G^ = F / (lambda_1 ... lambda_n).
inline ExpPolynomial antiderivative(const ExpPolynomial& f) {
    std::size_t n = f.dim();
    TransformTerm unit;
    unit.coeff = GaussianRational(1);
    unit.poles.assign(n, GaussianRational());
    unit.orders.assign(n, 1u);
    RationalTransform inv_lambdas(n, {unit});
    return inverse_laplace_exact(laplace_exact(f) * inv_lambdas);
}

}  // namespace lapuniq
