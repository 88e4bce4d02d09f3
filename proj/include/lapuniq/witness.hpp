#pragma once

#include "lapuniq/descriptors.hpp"
#include "lapuniq/family.hpp"
#include "lapuniq/laplace_exact.hpp"
#include "lapuniq/laplace_numeric.hpp"
#include "lapuniq/serialize.hpp"

#include <json.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lapuniq {

/// An explicit non-uniqueness witness: a nonzero function whose Laplace
/// transform vanishes on every point of `annihilated`.
struct Witness {
    std::string id;
    std::optional<ExpPolynomial> function;  // exact time-domain form, when available
    FunctionDescriptor descriptor;          // always usable for the numeric path
    std::optional<RationalTransform> exact_transform;
    std::function<std::complex<double>(std::span<const std::complex<double>>)> closed_form;
    SequenceFamily annihilated;
    std::string provenance;
    std::vector<double> probe_t;  // time-domain point where the witness is visibly nonzero

    std::complex<double> transform_at(std::span<const std::complex<double>> lambda) const {
        if (exact_transform) return exact_transform->eval(lambda);
        if (closed_form) return closed_form(lambda);
        return laplace_numeric(descriptor, lambda, 1e-10).value;
    }
};

/// The compact-support counterexample f(t) = e^{it} on [0, 2 pi], 0 after;
/// its transform (e^{2 pi (i - lambda)} - 1)/(i - lambda) vanishes at ki for
/// every integer k not in {0, 1}.
inline Witness dech_witness() {
    Witness w;
    w.id = "dech";
    w.provenance = "compact-support exponential counterexample";
    FunctionDescriptor d;
    d.dim = 1;
    d.growth_M = 1.0;
    d.growth_omega = {0.0};
    d.support = std::vector<double>{2.0 * M_PI};
    d.evaluator = [](std::span<const double> t) -> std::complex<double> {
        if (t[0] > 2.0 * M_PI) return 0.0;
        return std::exp(std::complex<double>(0.0, t[0]));
    };
    w.descriptor = std::move(d);
    w.closed_form = [](std::span<const std::complex<double>> lam) -> std::complex<double> {
        std::complex<double> z = std::complex<double>(0.0, 1.0) - lam[0];
        if (std::abs(z) < 1e-12) return 2.0 * M_PI;  // removable singularity at lambda = i
        return (std::exp(2.0 * M_PI * z) - 1.0) / z;
    };
    w.annihilated = doetsch_family();
    w.probe_t = {M_PI};  // f(pi) = -1
    return w;
}

/// g_k(t) = t^{k-1}/(k-1)!, the inverse transform of 1/lambda^k.
inline ExpPolynomial unit_monomial_g(unsigned k, std::size_t dim = 1, std::size_t axis = 0) {
    std::vector<unsigned> powers(dim, 0);
    powers[axis] = k - 1;
    GaussianRational c{BigRational(1, factorial(k - 1))};
    return ExpPolynomial::monomial(c, powers, std::vector<GaussianRational>(dim));
}

/// The diagonal witness g2 (x) g3 - g3 (x) g2 with exact transform
/// (l1 - l2)/(l1^3 l2^3), vanishing on the diagonal ((k,k)).
inline Witness diagonal_witness() {
    Witness w;
    w.id = "diagonal";
    w.provenance = "two-dimensional diagonal counterexample";
    auto a = ExpPolynomial::tensor(unit_monomial_g(2), unit_monomial_g(3));
    auto b = ExpPolynomial::tensor(unit_monomial_g(3), unit_monomial_g(2));
    w.function = a - b;
    w.exact_transform = laplace_exact(*w.function);
    w.descriptor = descriptor_of(*w.function);
    w.annihilated = diagonal_family();
    w.probe_t = {1.0, 2.0};  // value 1 there
    return w;
}

/// Ray witness: exact transform
///   (l1-1)/(l1^3 l2^3) * (l2-1)/(l1^3 l2^3)
///   * prod_j (l1 - c_j l2)/(l1^3 l2^3) * prod_j (d_j l1 - l2)/(l1^3 l2^3),
/// inverted exactly to an ExpPolynomial (a polynomial; all poles at 0).
/// Annihilates the union of the rays (1,k), (k,1), (c_j k, k), (k, d_j k).
inline Witness ray_witness(const std::vector<unsigned>& c, const std::vector<unsigned>& d) {
    for (unsigned v : c)
        if (v == 0) throw std::invalid_argument("ray_witness: c entries must be positive");
    for (unsigned v : d)
        if (v == 0) throw std::invalid_argument("ray_witness: d entries must be positive");

    auto zero2 = [] { return std::vector<GaussianRational>(2); };
    // (a l1 + b l2 + e)/(l1^3 l2^3) as a two-term RationalTransform
    auto linear_factor = [&](const BigRational& a, const BigRational& b) {
        std::vector<TransformTerm> ts;
        if (a != 0)
            ts.push_back(TransformTerm{GaussianRational{a}, zero2(), {2, 3}});
        if (b != 0)
            ts.push_back(TransformTerm{GaussianRational{b}, zero2(), {3, 2}});
        return RationalTransform(2, std::move(ts));
    };
    // constant e/(l1^3 l2^3)
    auto const_factor = [&](const BigRational& e) {
        return RationalTransform(
            2, {TransformTerm{GaussianRational{e}, zero2(), {3, 3}}});
    };

    // (l1 - 1)/(l1^3 l2^3) and (l2 - 1)/(l1^3 l2^3)
    RationalTransform F = linear_factor(1, 0) + const_factor(-1);
    F = F * (linear_factor(0, 1) + const_factor(-1));
    for (unsigned cj : c) F = F * linear_factor(1, BigRational(-long(cj)));
    for (unsigned dj : d) F = F * linear_factor(BigRational(long(dj)), -1);

    Witness w;
    w.id = "ray";
    w.provenance = "two-dimensional ray-union counterexample";
    w.function = inverse_laplace_exact(F);
    w.exact_transform = std::move(F);
    w.descriptor = descriptor_of(*w.function);

    // annihilated family: round-robin over the rays, duplicates dropped
    std::string label = "ray:c=";
    for (std::size_t i = 0; i < c.size(); ++i) label += (i ? "," : "") + std::to_string(c[i]);
    label += ";d=";
    for (std::size_t i = 0; i < d.size(); ++i) label += (i ? "," : "") + std::to_string(d[i]);

    std::vector<Point> pts;
    std::set<std::pair<long, long>> seen;
    auto push = [&](long x, long y) {
        if (seen.insert({x, y}).second)
            pts.push_back({std::complex<double>(double(x), 0.0),
                           std::complex<double>(double(y), 0.0)});
    };
    for (unsigned k = 1; pts.size() < 1000 && k <= 600; ++k) {
        push(1, k);
        push(k, 1);
        for (unsigned cj : c) push(long(cj) * k, k);
        for (unsigned dj : d) push(k, long(dj) * k);
    }
    w.annihilated = make_explicit(std::move(pts), label);
    // the polynomial has large factorial denominators; probe where it is big
    w.probe_t = {1.0, 1.0};
    double best = 0.0;
    for (double tv : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
        std::vector<double> t{tv, tv / 2.0};
        double m = std::abs(w.function->eval(t));
        if (m > best) {
            best = m;
            w.probe_t = t;
        }
    }
    return w;
}

/// Annihilation report: the witness transform over the first N points of its
/// claimed family.
struct AnnihilationReport {
    double max_abs = 0.0;
    std::vector<std::complex<double>> values;
    bool exact_path = false;
    bool pass = false;
    double tol = 0.0;
};

/// Evaluate the witness transform on the first N annihilated points. When the
/// exact transform is present and the points are (Gaussian-)rational, the
/// evaluation is exact and tol = 0 suffices; otherwise the closed-form or
/// numeric path is compared against tol.
inline AnnihilationReport verify_annihilation(const Witness& w, std::size_t N, double tol) {
    if (N < 1) throw std::invalid_argument("verify_annihilation: N must be >= 1");
    AnnihilationReport rep;
    rep.tol = tol;
    auto pts = enumerate(w.annihilated, N);
    rep.exact_path = w.exact_transform.has_value();
    for (const auto& p : pts) {
        std::complex<double> v;
        if (rep.exact_path) {
            std::vector<GaussianRational> lam;
            for (const auto& z : p)
                lam.push_back(GaussianRational{rational_from_double(z.real()),
                                               rational_from_double(z.imag())});
            GaussianRational e = w.exact_transform->eval_exact(lam);
            v = e.to_complex();
            if (!e.is_zero() && std::abs(v) == 0.0) v = std::complex<double>(1e-300, 0.0);
        } else {
            std::vector<std::complex<double>> lam(p.begin(), p.end());
            v = w.transform_at(lam);
        }
        rep.values.push_back(v);
        rep.max_abs = std::max(rep.max_abs, std::abs(v));
    }
    rep.pass = rep.max_abs <= tol;
    return rep;
}

/// JSON manifest for export alongside the exact serialization.
inline nlohmann::json witness_manifest(const Witness& w) {
    nlohmann::json j;
    j["id"] = w.id;
    j["provenance"] = w.provenance;
    if (const auto* ex = std::get_if<Explicit>(&w.annihilated.kind))
        j["family"] = ex->label.empty() ? "explicit" : ex->label;
    else
        j["family"] = "parametric";
    j["dim"] = w.annihilated.dim;
    j["has_exact_transform"] = w.exact_transform.has_value();
    if (w.function) j["function_text"] = to_text(*w.function);
    if (w.exact_transform) j["transform_text"] = to_text(*w.exact_transform);
    return j;
}

/// Witness registry used by the CLI.
inline Witness make_witness(const std::string& id) {
    if (id == "dech") return dech_witness();
    if (id == "diagonal") return diagonal_witness();
    if (id.rfind("ray", 0) == 0) {
        // "ray" or "ray:c=2,3;d=4"
        std::vector<unsigned> c, d;
        auto colon = id.find(':');
        if (colon != std::string::npos) {
            std::string body = id.substr(colon + 1);
            for (const auto& part : detail::split(body, ';')) {
                auto eq = part.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("ray witness: expected c=.../d=...");
                auto& dst = (part.substr(0, eq) == "c") ? c : d;
                std::string vals = part.substr(eq + 1);
                if (vals.empty()) continue;
                for (const auto& v : detail::split(vals, ','))
                    dst.push_back(static_cast<unsigned>(std::stoul(v)));
            }
        }
        return ray_witness(c, d);
    }
    throw std::invalid_argument("unknown witness id '" + id + "'");
}

}  // namespace lapuniq
