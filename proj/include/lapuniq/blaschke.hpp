#pragma once

#include "lapuniq/family.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lapuniq {

/// One Blaschke-condition term 1 - |(lambda-1)/(lambda+1)|.
inline double blaschke_term(std::complex<double> lambda) {
    if (lambda == std::complex<double>(-1.0, 0.0))
        throw std::domain_error("blaschke_term: lambda = -1");
    return 1.0 - std::abs((lambda - 1.0) / (lambda + 1.0));
}

enum class BlaschkeStatus { Divergent, Convergent, Unknown };

struct BlaschkeReport {
    BlaschkeStatus status = BlaschkeStatus::Unknown;
    std::string reason;                // the analytic rule applied, if any
    std::optional<double> exponent;    // decay exponent of the terms, if known
    std::vector<double> partial_sums;  // evidence on the enumerated prefix
};

namespace detail {

/// Decay exponent of blaschke_term along a real-direction family
/// lambda_k ~ a + b k^g: terms ~ 2/(b k^g), so the exponent is g.
/// Imaginary-direction 1 + i k^g: terms ~ 2/k^{2g}, exponent 2g.
/// Returns nullopt for kinds without an analytic exponent.
inline std::optional<std::pair<double, std::string>> analytic_term_exponent(
    const SequenceFamily& fam) {
    if (fam.dim != 1) return std::nullopt;
    if (std::holds_alternative<AffineLattice>(fam.kind))
        return std::make_pair(1.0, std::string("real-direction a+kb: terms ~ 2/(bk)"));
    if (const auto* p = std::get_if<PowerLattice>(&fam.kind))
        return std::make_pair(p->gamma[0],
                              std::string("real-direction a+bk^g: terms ~ 2/(bk^g)"));
    if (const auto* ip = std::get_if<ImaginaryPower>(&fam.kind))
        return std::make_pair(2.0 * ip->gamma[0],
                              std::string("imaginary-direction 1+ik^g: terms ~ 2/k^{2g}"));
    if (const auto* dv = std::get_if<Derived>(&fam.kind)) {
        if (const auto* sub = std::get_if<Subordinate>(&dv->derivation)) {
            auto basee = analytic_term_exponent(*dv->base);
            // real-direction base ~ c k^e subordinates to ~ c^g k^{e g}
            if (basee && (std::holds_alternative<AffineLattice>(dv->base->kind) ||
                          std::holds_alternative<PowerLattice>(dv->base->kind)))
                return std::make_pair(basee->first * sub->gammas[0],
                                      basee->second + "; subordinated by gamma=" +
                                          std::to_string(sub->gammas[0]));
        }
        if (std::holds_alternative<Shift>(dv->derivation) ||
            std::holds_alternative<Reindex>(dv->derivation) ||
            std::holds_alternative<ResidueSplit>(dv->derivation))
            return analytic_term_exponent(*dv->base);  // decay rate unchanged
    }
    return std::nullopt;
}

}  // namespace detail

/// Classify sum of blaschke_term over a dim-1 family: parametric families by
/// the analytic term exponent (real-direction diverges iff exponent <= 1,
/// since terms ~ k^{-exponent}); Explicit families only gather partial-sum
/// evidence and return Unknown.
inline BlaschkeReport blaschke_sum_classify(const SequenceFamily& fam,
                                            std::size_t prefix = 200) {
    if (fam.dim != 1)
        throw std::invalid_argument("blaschke_sum_classify: family must have dim 1");
    auto pts = enumerate(fam, prefix);
    for (const auto& p : pts)
        if (!(p[0].real() > 0.0))
            throw std::domain_error(
                "blaschke_sum_classify: Re lambda_k must be bounded below by delta > 0 "
                "on the prefix");

    BlaschkeReport rep;
    double s = 0.0;
    for (const auto& p : pts) {
        s += blaschke_term(p[0]);
        rep.partial_sums.push_back(s);
    }

    auto ae = detail::analytic_term_exponent(fam);
    if (ae) {
        rep.exponent = ae->first;
        rep.reason = ae->second;
        // terms ~ k^{-exponent}: the series diverges iff exponent <= 1
        rep.status = (ae->first <= 1.0) ? BlaschkeStatus::Divergent
                                        : BlaschkeStatus::Convergent;
    } else {
        rep.status = BlaschkeStatus::Unknown;
        rep.reason = "no analytic exponent for this family kind; partial sums only";
    }
    return rep;
}

/// The margin of inequality (subp): |(l-1)/(l+1)| - |(l^g-1)/(l^g+1)| >= 0
/// for Re l > 0 and g in (0,1), with equality iff l = 1 (principal branch).
inline double subp_margin(std::complex<double> lambda, double gamma) {
    if (!(lambda.real() > 0.0)) throw std::domain_error("subp_margin: Re lambda must be > 0");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("subp_margin: gamma must lie in (0,1)");
    std::complex<double> lg = std::pow(lambda, gamma);
    return std::abs((lambda - 1.0) / (lambda + 1.0)) - std::abs((lg - 1.0) / (lg + 1.0));
}

/// The equivalent polar form (ocv): with lambda = r e^{i phi},
///   r^{1+g} cos(g phi) + r^{g-1} cos(g phi) - r^{2g} cos(phi) - cos(phi),
/// which has the same sign as subp_margin.
inline double ocv_form(std::complex<double> lambda, double gamma) {
    if (!(lambda.real() > 0.0)) throw std::domain_error("ocv_form: Re lambda must be > 0");
    double r = std::abs(lambda), phi = std::arg(lambda);
    double cg = std::cos(gamma * phi), c1 = std::cos(phi);
    return std::pow(r, 1.0 + gamma) * cg + std::pow(r, gamma - 1.0) * cg -
           std::pow(r, 2.0 * gamma) * c1 - c1;
}

}  // namespace lapuniq
