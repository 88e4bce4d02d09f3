#pragma once

#include "lapuniq/rational.hpp"

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lapuniq {

/// Strictly increasing, 1-based subset of coordinate indices {1,...,n}.
struct IndexSubset {
    std::vector<std::size_t> coords;

    explicit IndexSubset(std::vector<std::size_t> c) : coords(std::move(c)) {
        if (coords.empty()) throw std::invalid_argument("IndexSubset: empty");
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] == 0) throw std::invalid_argument("IndexSubset: indices are 1-based");
            if (i > 0 && coords[i] <= coords[i - 1])
                throw std::invalid_argument("IndexSubset: not strictly increasing");
        }
    }

    static IndexSubset full(std::size_t n) {
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = i + 1;
        return IndexSubset(std::move(c));
    }

    std::size_t size() const { return coords.size(); }
    bool contains(std::size_t j) const {
        return std::binary_search(coords.begin(), coords.end(), j);
    }
    void check_dim(std::size_t n) const {
        if (coords.back() > n) throw std::invalid_argument("IndexSubset: index exceeds dimension");
    }
};

/// One term c * prod_j t_j^{alpha_j} e^{mu_j t_j} on [0,inf)^n.
struct ExpMonomial {
    GaussianRational coeff;
    std::vector<unsigned> powers;          // alpha, length n
    std::vector<GaussianRational> rates;   // mu, length n

    std::size_t dim() const { return powers.size(); }

    std::complex<double> eval(std::span<const double> t) const {
        std::complex<double> v = coeff.to_complex();
        for (std::size_t j = 0; j < powers.size(); ++j) {
            for (unsigned p = 0; p < powers[j]; ++p) v *= t[j];
            std::complex<double> mu = rates[j].to_complex();
            v *= std::exp(mu * t[j]);
        }
        return v;
    }
};

/// Finite sum of exp-monomials, kept in a canonical normalized form:
/// terms sorted by (rates, powers), no duplicate keys, no zero coefficients.
class ExpPolynomial {
public:
    ExpPolynomial() : dim_(0) {}
    explicit ExpPolynomial(std::size_t dim) : dim_(dim) {}
    ExpPolynomial(std::size_t dim, std::vector<ExpMonomial> terms) : dim_(dim), terms_(std::move(terms)) {
        for (const auto& m : terms_)
            if (m.dim() != dim_) throw std::invalid_argument("ExpPolynomial: term dimension mismatch");
        normalize();
    }

    std::size_t dim() const { return dim_; }
    const std::vector<ExpMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static ExpPolynomial constant(std::size_t dim, GaussianRational c) {
        ExpMonomial m{std::move(c), std::vector<unsigned>(dim, 0),
                      std::vector<GaussianRational>(dim)};
        return ExpPolynomial(dim, {std::move(m)});
    }

    /// t^powers * e^{rates . t} with unit coefficient.
    static ExpPolynomial monomial(GaussianRational c, std::vector<unsigned> powers,
                                  std::vector<GaussianRational> rates) {
        if (powers.size() != rates.size())
            throw std::invalid_argument("ExpPolynomial::monomial: length mismatch");
        std::size_t n = powers.size();
        ExpMonomial m{std::move(c), std::move(powers), std::move(rates)};
        return ExpPolynomial(n, {std::move(m)});
    }

    std::complex<double> eval(std::span<const double> t) const {
        if (t.size() != dim_) throw std::invalid_argument("ExpPolynomial::eval: dimension mismatch");
        std::complex<double> s = 0;
        for (const auto& m : terms_) s += m.eval(t);
        return s;
    }

    friend ExpPolynomial operator+(const ExpPolynomial& a, const ExpPolynomial& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("ExpPolynomial: dimension mismatch");
        std::vector<ExpMonomial> t = a.terms_;
        t.insert(t.end(), b.terms_.begin(), b.terms_.end());
        return ExpPolynomial(a.dim_, std::move(t));
    }
    friend ExpPolynomial operator-(const ExpPolynomial& a, const ExpPolynomial& b) {
        return a + (b * GaussianRational(-1));
    }
    friend ExpPolynomial operator*(const ExpPolynomial& a, const GaussianRational& c) {
        std::vector<ExpMonomial> t = a.terms_;
        for (auto& m : t) m.coeff *= c;
        return ExpPolynomial(a.dim_, std::move(t));
    }

    /// Pointwise product; the class is closed under it (powers add, rates add).
    friend ExpPolynomial operator*(const ExpPolynomial& a, const ExpPolynomial& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("ExpPolynomial: dimension mismatch");
        std::vector<ExpMonomial> t;
        for (const auto& ma : a.terms_)
            for (const auto& mb : b.terms_) {
                ExpMonomial m;
                m.coeff = ma.coeff * mb.coeff;
                m.powers.resize(a.dim_);
                m.rates.resize(a.dim_);
                for (std::size_t j = 0; j < a.dim_; ++j) {
                    m.powers[j] = ma.powers[j] + mb.powers[j];
                    m.rates[j] = ma.rates[j] + mb.rates[j];
                }
                t.push_back(std::move(m));
            }
        return ExpPolynomial(a.dim_, std::move(t));
    }

    /// f(t1) g(t2): tensor product in separate variables.
    static ExpPolynomial tensor(const ExpPolynomial& a, const ExpPolynomial& b) {
        std::size_t n = a.dim_ + b.dim_;
        std::vector<ExpMonomial> t;
        for (const auto& ma : a.terms_)
            for (const auto& mb : b.terms_) {
                ExpMonomial m;
                m.coeff = ma.coeff * mb.coeff;
                m.powers = ma.powers;
                m.powers.insert(m.powers.end(), mb.powers.begin(), mb.powers.end());
                m.rates = ma.rates;
                m.rates.insert(m.rates.end(), mb.rates.begin(), mb.rates.end());
                t.push_back(std::move(m));
            }
        return ExpPolynomial(n, std::move(t));
    }

    friend bool operator==(const ExpPolynomial& a, const ExpPolynomial& b) {
        if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto& x = a.terms_[i];
            const auto& y = b.terms_[i];
            if (x.coeff != y.coeff || x.powers != y.powers || x.rates != y.rates) return false;
        }
        return true;
    }

private:
    static bool key_less(const ExpMonomial& a, const ExpMonomial& b) {
        if (a.rates != b.rates) {
            return std::lexicographical_compare(a.rates.begin(), a.rates.end(),
                                                b.rates.begin(), b.rates.end());
        }
        return a.powers < b.powers;
    }

    void normalize() {
        std::stable_sort(terms_.begin(), terms_.end(), key_less);
        std::vector<ExpMonomial> out;
        for (auto& m : terms_) {
            if (!out.empty() && out.back().rates == m.rates && out.back().powers == m.powers)
                out.back().coeff += m.coeff;
            else
                out.push_back(std::move(m));
        }
        std::erase_if(out, [](const ExpMonomial& m) { return m.coeff.is_zero(); });
        terms_ = std::move(out);
    }

    std::size_t dim_;
    std::vector<ExpMonomial> terms_;
};

/// Exact partial derivative with respect to coordinate j (1-based).
inline ExpPolynomial derivative(const ExpPolynomial& f, std::size_t j) {
    if (j == 0 || j > f.dim()) throw std::invalid_argument("derivative: bad coordinate");
    std::vector<ExpMonomial> out;
    for (const auto& m : f.terms()) {
        if (m.powers[j - 1] > 0) {
            ExpMonomial d = m;
            d.coeff *= GaussianRational{BigRational(m.powers[j - 1])};
            d.powers[j - 1] -= 1;
            out.push_back(std::move(d));
        }
        if (!m.rates[j - 1].is_zero()) {
            ExpMonomial d = m;
            d.coeff *= m.rates[j - 1];
            out.push_back(std::move(d));
        }
    }
    return ExpPolynomial(f.dim(), std::move(out));
}

}  // namespace lapuniq
