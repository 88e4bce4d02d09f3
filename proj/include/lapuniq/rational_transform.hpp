#pragma once

#include "lapuniq/exp_polynomial.hpp"
#include "lapuniq/rational.hpp"

#include <algorithm>
#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lapuniq {

/// One term c / prod_j (lambda_j - mu_j)^{p_j}.
struct TransformTerm {
    GaussianRational coeff;
    std::vector<GaussianRational> poles;  // mu, length n
    std::vector<unsigned> orders;         // p, length n, each >= 1
};

/// Sum of simple-pole product terms; the exact transform of an ExpPolynomial.
/// Canonical form: sorted by (poles, orders), merged, zero coefficients dropped.
class RationalTransform {
public:
    RationalTransform() : dim_(0) {}
    explicit RationalTransform(std::size_t dim) : dim_(dim) {}
    RationalTransform(std::size_t dim, std::vector<TransformTerm> terms)
        : dim_(dim), terms_(std::move(terms)) {
        for (const auto& t : terms_) {
            if (t.poles.size() != dim_ || t.orders.size() != dim_)
                throw std::invalid_argument("RationalTransform: term dimension mismatch");
            for (unsigned p : t.orders)
                if (p == 0) throw std::invalid_argument("RationalTransform: order must be >= 1");
        }
        normalize();
    }

    std::size_t dim() const { return dim_; }
    const std::vector<TransformTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Exact evaluation; throws if any lambda_j hits a pole of any term.
    GaussianRational eval_exact(std::span<const GaussianRational> lambda) const {
        if (lambda.size() != dim_) throw std::invalid_argument("eval_exact: dimension mismatch");
        GaussianRational s;
        for (const auto& t : terms_) {
            GaussianRational denom{BigRational(1)};
            for (std::size_t j = 0; j < dim_; ++j) {
                GaussianRational d = lambda[j] - t.poles[j];
                if (d.is_zero()) throw std::domain_error("eval_exact: pole hit");
                denom *= d.pow(t.orders[j]);
            }
            s += t.coeff / denom;
        }
        return s;
    }

    std::complex<double> eval(std::span<const std::complex<double>> lambda) const {
        if (lambda.size() != dim_) throw std::invalid_argument("eval: dimension mismatch");
        std::complex<double> s = 0;
        for (const auto& t : terms_) {
            std::complex<double> v = t.coeff.to_complex();
            for (std::size_t j = 0; j < dim_; ++j) {
                std::complex<double> d = lambda[j] - t.poles[j].to_complex();
                for (unsigned p = 0; p < t.orders[j]; ++p) v /= d;
            }
            s += v;
        }
        return s;
    }

    /// Right edge of the absolute-convergence region: max over terms of Re mu_j.
    /// Zero terms give an empty transform; returns 0 in that case.
    double abscissa(std::size_t j) const {
        double w = 0;
        bool first = true;
        for (const auto& t : terms_) {
            double r = static_cast<double>(t.poles[j].re);
            if (first || r > w) { w = r; first = false; }
        }
        return w;
    }

    friend RationalTransform operator+(const RationalTransform& a, const RationalTransform& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("RationalTransform: dimension mismatch");
        std::vector<TransformTerm> t = a.terms_;
        t.insert(t.end(), b.terms_.begin(), b.terms_.end());
        return RationalTransform(a.dim_, std::move(t));
    }
    friend RationalTransform operator-(const RationalTransform& a, const RationalTransform& b) {
        return a + (b * GaussianRational(-1));
    }
    friend RationalTransform operator*(const RationalTransform& a, const GaussianRational& c) {
        std::vector<TransformTerm> t = a.terms_;
        for (auto& x : t) x.coeff *= c;
        return RationalTransform(a.dim_, std::move(t));
    }

    /// Exact product, re-expressed in single-pole-per-coordinate form via
    /// multiplicity-aware partial fractions applied coordinate by coordinate.
    friend RationalTransform operator*(const RationalTransform& a, const RationalTransform& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("RationalTransform: dimension mismatch");
        std::vector<TransformTerm> out;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                multiply_terms(ta, tb, a.dim_, out);
        return RationalTransform(a.dim_, std::move(out));
    }

    /// Product A(lambda_{j_1},...,lambda_{j_l}) * U(lambda) where D lists the
    /// coordinates of U that A's arguments refer to (1-based, increasing).
    static RationalTransform mul_partial(const RationalTransform& a, const IndexSubset& d,
                                         const RationalTransform& u) {
        if (d.size() != a.dim_) throw std::invalid_argument("mul_partial: |D| != a.dim");
        d.check_dim(u.dim_);
        std::size_t n = u.dim_;
        std::vector<TransformTerm> out;
        for (const auto& ta : a.terms_)
            for (const auto& tu : u.terms_) {
                std::vector<std::vector<PoleOption>> per_coord(n);
                std::size_t i = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (i < d.coords.size() && d.coords[i] == j + 1) {
                        per_coord[j] = split_pair(ta.poles[i], ta.orders[i],
                                                  tu.poles[j], tu.orders[j]);
                        ++i;
                    } else {
                        per_coord[j] = {{GaussianRational(1), tu.poles[j], tu.orders[j]}};
                    }
                }
                TransformTerm cur;
                cur.coeff = ta.coeff * tu.coeff;
                cur.poles.resize(n);
                cur.orders.resize(n);
                expand(per_coord, 0, cur, out);
            }
        return RationalTransform(n, std::move(out));
    }

    friend bool operator==(const RationalTransform& a, const RationalTransform& b) {
        if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto& x = a.terms_[i];
            const auto& y = b.terms_[i];
            if (x.coeff != y.coeff || x.poles != y.poles || x.orders != y.orders) return false;
        }
        return true;
    }

private:
    // Option for one coordinate of the product expansion.
    struct PoleOption {
        GaussianRational weight;
        GaussianRational pole;
        unsigned order;
    };

    // 1/((x-a)^p (x-b)^q) as a sum of single-pole fractions.
    static std::vector<PoleOption> split_pair(const GaussianRational& a, unsigned p,
                                              const GaussianRational& b, unsigned q) {
        std::vector<PoleOption> opts;
        if (a == b) {
            opts.push_back({GaussianRational(1), a, p + q});
            return opts;
        }
        // Expansion of 1/(x-b)^q around a and symmetrically around b:
        //   coefficient of 1/(x-a)^{p-m} is (-1)^m C(q+m-1, m) / (a-b)^{q+m}.
        GaussianRational ab = a - b;
        for (unsigned m = 0; m < p; ++m) {
            GaussianRational w{BigRational(binomial(q + m - 1, m))};
            if (m & 1u) w = -w;
            w /= ab.pow(q + m);
            opts.push_back({std::move(w), a, p - m});
        }
        GaussianRational ba = b - a;
        for (unsigned m = 0; m < q; ++m) {
            GaussianRational w{BigRational(binomial(p + m - 1, m))};
            if (m & 1u) w = -w;
            w /= ba.pow(p + m);
            opts.push_back({std::move(w), b, q - m});
        }
        return opts;
    }

    static void multiply_terms(const TransformTerm& ta, const TransformTerm& tb,
                               std::size_t dim, std::vector<TransformTerm>& out) {
        std::vector<std::vector<PoleOption>> per_coord(dim);
        for (std::size_t j = 0; j < dim; ++j)
            per_coord[j] = split_pair(ta.poles[j], ta.orders[j], tb.poles[j], tb.orders[j]);

        TransformTerm cur;
        cur.coeff = ta.coeff * tb.coeff;
        cur.poles.resize(dim);
        cur.orders.resize(dim);
        expand(per_coord, 0, cur, out);
    }

    static void expand(const std::vector<std::vector<PoleOption>>& per_coord, std::size_t j,
                       TransformTerm& cur, std::vector<TransformTerm>& out) {
        if (j == per_coord.size()) {
            out.push_back(cur);
            return;
        }
        GaussianRational saved = cur.coeff;
        for (const auto& opt : per_coord[j]) {
            cur.coeff = saved * opt.weight;
            cur.poles[j] = opt.pole;
            cur.orders[j] = opt.order;
            expand(per_coord, j + 1, cur, out);
        }
        cur.coeff = saved;
    }

    static bool key_less(const TransformTerm& a, const TransformTerm& b) {
        if (a.poles != b.poles) {
            return std::lexicographical_compare(a.poles.begin(), a.poles.end(),
                                                b.poles.begin(), b.poles.end());
        }
        return a.orders < b.orders;
    }

    void normalize() {
        std::stable_sort(terms_.begin(), terms_.end(), key_less);
        std::vector<TransformTerm> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().poles == t.poles && out.back().orders == t.orders)
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const TransformTerm& t) { return t.coeff.is_zero(); });
        terms_ = std::move(out);
    }

    std::size_t dim_;
    std::vector<TransformTerm> terms_;
};

}  // namespace lapuniq
