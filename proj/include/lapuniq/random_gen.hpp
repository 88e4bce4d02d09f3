#pragma once

#include "lapuniq/exp_polynomial.hpp"

#include <random>
#include <vector>

namespace lapuniq {

/// Small random Gaussian rational with denominator in {1,2,3,4}.
template <class Rng>
GaussianRational random_gaussian_rational(Rng& rng, int max_num = 4) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, 4);
    return {BigRational(num(rng), den(rng)), BigRational(num(rng), den(rng))};
}

/// Random exp-polynomial with nonpositive real rate parts, so the transform
/// converges on Re lambda > 0.
template <class Rng>
ExpPolynomial random_exp_polynomial(Rng& rng, std::size_t dim, std::size_t max_terms = 3,
                                    unsigned max_power = 2) {
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> pow(0, max_power);
    std::uniform_int_distribution<int> rate_num(0, 2);
    std::uniform_int_distribution<int> rate_im(-2, 2);
    std::uniform_int_distribution<int> rate_den(1, 2);
    std::vector<ExpMonomial> terms;
    std::size_t n = nterms(rng);
    for (std::size_t i = 0; i < n; ++i) {
        ExpMonomial m;
        m.coeff = random_gaussian_rational(rng);
        if (m.coeff.is_zero()) m.coeff = GaussianRational(1);
        m.powers.resize(dim);
        m.rates.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            m.powers[j] = pow(rng);
            m.rates[j] = GaussianRational{BigRational(-rate_num(rng), rate_den(rng)),
                                          BigRational(rate_im(rng), rate_den(rng))};
        }
        terms.push_back(std::move(m));
    }
    return ExpPolynomial(dim, std::move(terms));
}

}  // namespace lapuniq
