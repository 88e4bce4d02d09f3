#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lapuniq {

/// Parameters for evaluating the Wright function
///   Phi_gamma(s) = sum_{k>=0} (-s)^k / (k! Gamma(-gamma k + 1 - gamma)),
/// an entire, nonnegative probability density on [0,inf) for 0 < gamma < 1.
struct WrightParams {
    double gamma;
    double tol = 1e-14;
    int max_terms = 1200;

    void validate() const {
        if (!(gamma > 0.0 && gamma < 1.0))
            throw std::invalid_argument("WrightParams: gamma must lie in (0,1)");
    }
};

/// Hard outer limit on the argument; the per-gamma reliable range computed by
/// the evaluator is usually tighter (the alternating series peaks at
/// ~e^{c s^{1/(1-gamma)}} before cancelling down, so the usable range shrinks
/// as gamma -> 1).
inline constexpr double wright_series_range = 30.0;

namespace detail {
using quad_float = boost::multiprecision::cpp_bin_float_quad;
}

/// The sharp large-s decay exponent: Phi_gamma(s) ~ e^{-c s^b} with
/// b = 1/(1-gamma), c = (1-gamma) gamma^{gamma/(1-gamma)}.
inline double wright_decay_exponent_b(double gamma) { return 1.0 / (1.0 - gamma); }
inline double wright_decay_constant_c(double gamma) {
    return (1.0 - gamma) * std::pow(gamma, gamma / (1.0 - gamma));
}

/// Series evaluator with quad-precision coefficient caches. Coefficients use
/// the reflection 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi, where
/// 1 - x = gamma(k+1) > 0 keeps lgamma on the positive axis. Summation runs
/// in long double and automatically re-runs in quad precision whenever the
/// running peak term magnitude says the long-double result would carry more
/// than ~1e-14 of cancellation noise.
class WrightEvaluator {
public:
    explicit WrightEvaluator(WrightParams params) : p_(params) {
        p_.validate();
        using detail::quad_float;
        const quad_float pi_q = boost::math::constants::pi<quad_float>();
        const quad_float gamma_q = p_.gamma;
        coeff_ld_.resize(p_.max_terms + 1);
        coeff_q_.resize(p_.max_terms + 1);
        quad_float lg = 0;  // log k!
        for (int k = 0; k <= p_.max_terms; ++k) {
            if (k > 0) lg += log(quad_float(k));
            quad_float x = 1 - gamma_q * (k + 1);
            quad_float sn = sin(pi_q * x);
            quad_float c;
            if (abs(sn) < 1e-30) {
                c = 0;  // Gamma pole: the term vanishes identically
            } else {
                c = sn * exp(boost::math::lgamma(gamma_q * (k + 1)) - lg) / pi_q;
                if (k & 1) c = -c;
            }
            coeff_q_[k] = c;
            coeff_ld_[k] = c.convert_to<long double>();
        }

        // Reliable range: the series must turn over well before max_terms
        // (|t_{k+1}/t_k| ~ s gamma^gamma k^{gamma-1} < 1 at k ~ 3/4 max_terms)
        // and the pre-cancellation peak e^{~c s^b} must stay within what quad
        // precision can cancel down to ~1e-13 absolute.
        double g = p_.gamma;
        double b = wright_decay_exponent_b(g);
        double c_a = wright_decay_constant_c(g);
        double s_terms =
            0.9 * std::pow(0.75 * p_.max_terms, 1.0 - g) / std::pow(g, g);
        double s_prec = std::pow(46.0 / c_a, 1.0 / b);
        s_reliable_ = std::min({wright_series_range, s_terms, s_prec});
    }

    const WrightParams& params() const { return p_; }
    double reliable_range() const { return s_reliable_; }

    double operator()(double s) const {
        if (!(s >= 0.0)) throw std::domain_error("wright_eval: s must be >= 0");
        if (s > wright_series_range)
            throw std::domain_error(
                "wright_eval: s beyond the series range; restrict to |s| <= 30");
        if (s > s_reliable_) {
            // The series cannot be summed accurately here, but the sharp
            // asymptotic envelope certifies the value is negligible.
            double env = 10.0 * std::exp(-wright_decay_constant_c(p_.gamma) *
                                         std::pow(s, wright_decay_exponent_b(p_.gamma)));
            if (env < 1e-12) return 0.0;
            throw std::domain_error(
                "wright_eval: s beyond the reliable series range for this gamma");
        }

        long double sl = s;
        long double pw = 1.0L;  // s^k
        long double sum = 0.0L, comp = 0.0L, peak = 0.0L;
        int tiny_run = 0;
        for (int k = 0; k <= p_.max_terms; ++k) {
            long double term = coeff_ld_[k] * pw;
            pw *= sl;
            if (term == 0.0L) continue;
            long double a = fabsl(term);
            if (a > peak) peak = a;
            long double y = term - comp;
            long double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            tiny_run = (k > 8 && a < 1e-28L * (1.0L + peak)) ? tiny_run + 1 : 0;
            if (tiny_run >= 2) break;
        }

        double noise = static_cast<double>(peak) * 1e-18 + 1e-300;
        double v = static_cast<double>(sum);
        if (noise > 1e-14 * (1.0 + std::fabs(v))) {
            // Long double cannot absorb the cancellation; redo in quad.
            using detail::quad_float;
            quad_float sq = s, pwq = 1, sumq = 0, peakq = 0;
            tiny_run = 0;
            for (int k = 0; k <= p_.max_terms; ++k) {
                quad_float term = coeff_q_[k] * pwq;
                pwq *= sq;
                if (term == 0) continue;
                quad_float a = abs(term);
                if (a > peakq) peakq = a;
                sumq += term;
                tiny_run = (k > 8 && a < 1e-40 * (1 + peakq)) ? tiny_run + 1 : 0;
                if (tiny_run >= 2) break;
            }
            v = sumq.convert_to<double>();
            noise = peakq.convert_to<double>() * 1e-33 + 1e-300;
        }
        // Phi_gamma is nonnegative; clip results indistinguishable from the
        // cancellation noise floor.
        if (v < 0.0 && v > -noise * 10.0) v = 0.0;
        return v;
    }

private:
    WrightParams p_;
    std::vector<long double> coeff_ld_;
    std::vector<detail::quad_float> coeff_q_;
    double s_reliable_ = wright_series_range;
};

inline double wright_eval(const WrightParams& p, double s) {
    WrightEvaluator ev(p);
    return ev(s);
}

/// Fitted tail envelope Phi_gamma(s) <= C e^{-c s^b} with b = 1/(1-gamma).
struct WrightTail {
    double C;
    double c;
    double b;

    /// Smallest S with C e^{-c S^b} * (1 + safety growth e^{a S}) below eps.
    double truncation_point(double eps, double a = 0.0) const {
        double S = 1.0;
        for (int it = 0; it < 400; ++it) {
            double decay = std::log(C) + a * S - c * std::pow(S, b);
            if (decay < std::log(eps)) return S;
            S += 0.25;
            if (S > wright_series_range) break;
        }
        return wright_series_range;
    }
};

/// Least-squares fit of log Phi against s^b on a sample of the series
/// evaluation; estimated at startup for each gamma and recorded in results.
inline WrightTail estimate_wright_tail(const WrightEvaluator& ev) {
    double b = wright_decay_exponent_b(ev.params().gamma);
    std::vector<double> xs, ys;
    double smax = std::min(20.0, ev.reliable_range());
    for (double s = 1.0; s <= smax; s += 0.5) {
        double v = ev(s);
        if (v <= 1e-13 || !std::isfinite(v)) break;  // series noise floor
        xs.push_back(std::pow(s, b));
        ys.push_back(std::log(v));
    }
    if (xs.size() < 4) {
        // analytic fallback constants
        double g = ev.params().gamma;
        return {10.0, wright_decay_constant_c(g), b};
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double nn = static_cast<double>(xs.size());
    double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    double inter = (sy - slope * sx) / nn;
    double c = -slope;
    double C = std::exp(inter) * 4.0;  // slack so the fit is an envelope
    if (!(c > 0)) {
        double g = ev.params().gamma;
        c = wright_decay_constant_c(g);
        C = 10.0;
    }
    return {C, c, b};
}

}  // namespace lapuniq
