#pragma once

#include "lapuniq/blaschke.hpp"
#include "lapuniq/family.hpp"
#include "lapuniq/muntz.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace lapuniq {

enum class Status { Uniqueness, NotUniqueness, Inconclusive };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Uniqueness: return "Uniqueness";
        case Status::NotUniqueness: return "NotUniqueness";
        default: return "Inconclusive";
    }
}

struct Verdict {
    Status status = Status::Inconclusive;
    std::string rule;  // citation identifier, e.g. "Thm ibeer(i)"
    nlohmann::json certificate = nlohmann::json::object();
};

namespace detail {

/// Prefix-based evidence that the family has no accumulation point: the
/// minimum pairwise distance on the enumerated prefix. This is evidence
/// only, never a proof; the certificate says so.
inline double min_pairwise_distance(const std::vector<Point>& pts) {
    double best = -1.0;
    std::size_t M = std::min<std::size_t>(pts.size(), 128);
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t k = i + 1; k < M; ++k) {
            double d = 0.0;
            for (std::size_t j = 0; j < pts[i].size(); ++j)
                d += std::abs(pts[i][j] - pts[k][j]);
            if (best < 0.0 || d < best) best = d;
        }
    return best;
}

inline nlohmann::json blaschke_evidence(const BlaschkeReport& rep) {
    nlohmann::json j;
    j["reason"] = rep.reason;
    if (rep.exponent) j["exponent"] = *rep.exponent;
    std::vector<double> tail;
    std::size_t n = rep.partial_sums.size();
    for (std::size_t i = (n >= 5 ? n - 5 : 0); i < n; ++i) tail.push_back(rep.partial_sums[i]);
    j["partial_sums_tail"] = tail;
    return j;
}

inline const Explicit* as_explicit(const SequenceFamily& fam) {
    return std::get_if<Explicit>(&fam.kind);
}

}  // namespace detail

/// One-dimensional classifier (Thm. ibeer plus the paper-asserted example
/// rules and the known-witness database). delta is the claimed uniform lower
/// bound on Re lambda_k; theta, when given, is a sector bound |arg| <= theta
/// < pi/2. Both are checked on the enumerated prefix as recorded evidence.
inline Verdict classify_1d(const SequenceFamily& fam, double delta = 1e-9,
                           std::optional<double> theta = std::nullopt,
                           std::size_t prefix = 200) {
    if (fam.dim != 1) throw std::invalid_argument("classify_1d: family must have dim 1");
    Verdict v;
    auto pts = enumerate(fam, prefix);
    v.certificate["prefix"] = prefix;
    v.certificate["min_pairwise_distance"] = detail::min_pairwise_distance(pts);
    v.certificate["accumulation_note"] =
        "no-accumulation-point hypothesis assumed; min pairwise distance on the prefix is "
        "evidence, not proof";

    // Known-witness database: the Doetsch sequence.
    if (const auto* ex = detail::as_explicit(fam); ex && ex->label == "doetsch") {
        v.status = Status::NotUniqueness;
        v.rule = "Doetsch example";
        v.certificate["witness"] = "dech";
        return v;
    }

    // Paper-asserted rule for 1 + i k^gamma with gamma > 1/2 (Example or(ii));
    // its sector hypothesis is not met on its face, which the certificate flags.
    if (const auto* ip = std::get_if<ImaginaryPower>(&fam.kind)) {
        if (ip->gamma[0] > 0.5) {
            v.status = Status::NotUniqueness;
            v.rule = "Example or(ii)";
            v.certificate["paper_asserted"] =
                "arg lambda_k -> pi/2, so Thm ibeer(iii)'s sector hypothesis is not met on "
                "its face; the paper asserts the conclusion";
            v.certificate["gamma"] = ip->gamma[0];
            return v;
        }
    }

    // Real-direction power families with gamma > 1: convergent sum inside a
    // sector (arg -> 0), Example or(i) / Thm ibeer(iii).
    bool re_bounded = true, in_sector = true;
    double theta_used = theta.value_or(1.4);
    for (const auto& p : pts) {
        if (!(p[0].real() >= delta)) re_bounded = false;
        if (!(std::abs(std::arg(p[0])) <= theta_used)) in_sector = false;
    }
    v.certificate["re_lower_bound_holds_on_prefix"] = re_bounded;
    v.certificate["delta"] = delta;

    if (!re_bounded) {
        v.status = Status::Inconclusive;
        v.rule = "no rule: Re lambda_k not bounded below by delta on the prefix";
        return v;
    }

    BlaschkeReport rep = blaschke_sum_classify(fam, prefix);
    v.certificate["blaschke"] = detail::blaschke_evidence(rep);

    if (rep.status == BlaschkeStatus::Divergent) {
        bool sub = false;
        if (const auto* dv = std::get_if<Derived>(&fam.kind))
            sub = std::holds_alternative<Subordinate>(dv->derivation);
        v.status = Status::Uniqueness;
        v.rule = sub ? "Cor ojha" : "Thm ibeer(i)";
        return v;
    }
    if (rep.status == BlaschkeStatus::Convergent) {
        v.certificate["sector_holds_on_prefix"] = in_sector;
        v.certificate["theta"] = theta_used;
        if (in_sector && theta_used < 1.5707963267948966) {
            v.status = Status::NotUniqueness;
            v.rule = "Thm ibeer(iii)";
            return v;
        }
        v.status = Status::Inconclusive;
        v.rule = "convergent Blaschke sum but no sector bound (Thm ibeer(ii) witness "
                 "construction out of scope)";
        return v;
    }
    v.status = Status::Inconclusive;
    v.rule = "no analytic rule applies; partial-sum evidence recorded";
    return v;
}

/// Multidimensional rule engine. Applies, in order: the known 2-D witnesses
/// (Example oro), shift normalization (Prop. nmt), product lattices
/// (Thm. tor), affine lattices (Prop. gade(ii)), sector lattices (Example
/// oro's resolved question), projection (Prop. zxc), residue splitting
/// (Prop. split), subordination (Thm. ressuba / Cor. ojha via classify_1d),
/// and Müntz lattice subsets (Thm. kunja). Defaults to Inconclusive; the
/// certificate records the full rule trace.
inline Verdict classify_nd(const SequenceFamily& fam, std::size_t prefix = 200) {
    Verdict v;
    auto& trace = v.certificate["trace"] = nlohmann::json::array();

    // Known 2-D witnesses by label.
    if (const auto* ex = detail::as_explicit(fam)) {
        if (ex->label == "diag-kk") {
            trace.push_back("explicit family recognized as the diagonal ((k,k))");
            v.status = Status::NotUniqueness;
            v.rule = "Example oro";
            v.certificate["witness"] = "diagonal";
            return v;
        }
        if (ex->label.rfind("ray:", 0) == 0) {
            trace.push_back("explicit family recognized as a ray union");
            v.status = Status::NotUniqueness;
            v.rule = "Example oro";
            v.certificate["witness"] = ex->label;
            return v;
        }
    }

    if (const auto* dv = std::get_if<Derived>(&fam.kind)) {
        if (std::holds_alternative<Shift>(dv->derivation)) {
            trace.push_back("Prop nmt: shift invariance, classify the base family");
            Verdict inner = classify_nd(*dv->base, prefix);
            for (const auto& t : inner.certificate["trace"]) trace.push_back(t);
            inner.certificate["trace"] = trace;
            return inner;
        }
        if (std::holds_alternative<Reindex>(dv->derivation)) {
            trace.push_back("Remark pot: reindexing bijection, classify the base family");
            Verdict inner = classify_nd(*dv->base, prefix);
            for (const auto& t : inner.certificate["trace"]) trace.push_back(t);
            inner.certificate["trace"] = trace;
            return inner;
        }
        if (std::holds_alternative<Project>(dv->derivation)) {
            Verdict base = classify_nd(*dv->base, prefix);
            trace.push_back("Prop zxc: projection of the base family");
            if (base.status == Status::Uniqueness) {
                v.status = Status::Uniqueness;
                v.rule = "Prop zxc";
                v.certificate["base_rule"] = base.rule;
                return v;
            }
            v.status = Status::Inconclusive;
            v.rule = "Prop zxc inapplicable: base not classified Uniqueness";
            return v;
        }
        if (std::holds_alternative<ResidueSplit>(dv->derivation)) {
            trace.push_back(
                "Prop split: existence of a uniqueness residue class; cannot identify which "
                "from finite data");
            v.status = Status::Inconclusive;
            v.rule = "Prop split (existence only)";
            return v;
        }
    }

    if (fam.dim == 1) {
        trace.push_back("dim 1: delegate to classify_1d");
        Verdict inner = classify_1d(fam, 1e-9, std::nullopt, prefix);
        inner.certificate["trace"] = trace;
        return inner;
    }

    if (const auto* pl = std::get_if<ProductLattice>(&fam.kind)) {
        trace.push_back("Thm tor: product of one-dimensional families");
        bool all_unique = true;
        auto& factors = v.certificate["factors"] = nlohmann::json::array();
        for (const auto& g : pl->factors) {
            Verdict f = classify_1d(g, 1e-9, std::nullopt, prefix);
            factors.push_back({{"status", to_string(f.status)}, {"rule", f.rule}});
            if (f.status != Status::Uniqueness) all_unique = false;
        }
        if (all_unique) {
            v.status = Status::Uniqueness;
            v.rule = "Thm tor";
            return v;
        }
        v.status = Status::Inconclusive;
        v.rule = "Thm tor inapplicable: not all factors classified Uniqueness";
        return v;
    }

    if (std::holds_alternative<AffineLattice>(fam.kind)) {
        trace.push_back("Prop gade(ii): affine lattice");
        v.status = Status::Uniqueness;
        v.rule = "Prop gade(ii)";
        return v;
    }

    if (std::holds_alternative<SectorLattice>(fam.kind)) {
        trace.push_back("Example oro: sector lattice (resolved question)");
        v.status = Status::Uniqueness;
        v.rule = "Example oro (sector)";
        return v;
    }

    // Müntz fallback for explicit lattice subsets with Re >= 1.
    if (detail::as_explicit(fam)) {
        auto pts = enumerate(fam, prefix);
        bool re_ok = true;
        for (const auto& p : pts)
            for (const auto& c : p)
                if (!(c.real() >= 1.0 - 1e-12)) re_ok = false;
        if (re_ok) {
            trace.push_back("Thm kunja: Müntz conditions on the explicit lattice subset");
            double tmax = 0.0;
            for (const auto& p : pts) {
                double d = 0.0;
                for (const auto& c : p) d += std::abs(c.real() - 1.0);
                tmax = std::max(tmax, d);
            }
            MuntzReport mr = muntz_check(fam, std::max(2.0, tmax), prefix);
            v.certificate["muntz"] = {{"separation", mr.separation},
                                      {"density", mr.density},
                                      {"density_threshold", mr.density_threshold},
                                      {"im_constant", mr.im_constant},
                                      {"note", "density is a finite-sample estimate of a "
                                               "limsup"}};
            if (mr.pass()) {
                v.status = Status::Uniqueness;
                v.rule = "Thm kunja";
                return v;
            }
            v.status = Status::Inconclusive;
            v.rule = "Thm kunja conditions not established on the prefix";
            return v;
        }
    }

    trace.push_back("no rule matched");
    v.status = Status::Inconclusive;
    v.rule = "no rule applies";
    return v;
}

}  // namespace lapuniq
