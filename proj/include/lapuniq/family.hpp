#pragma once

#include "lapuniq/exp_polynomial.hpp"  // IndexSubset

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lapuniq {

using Point = std::vector<std::complex<double>>;

struct SequenceFamily;

/// Per-axis lattice a_j + k_j b_j with k_j = 0, 1, 2, ...; multi-indices
/// enumerated in Cantor diagonal order (sum, then lexicographic).
struct AffineLattice {
    std::vector<double> a, b;
};

/// Per-axis a_j + b_j k_j^{gamma_j}; same enumeration order as AffineLattice.
struct PowerLattice {
    std::vector<double> a, b, gamma;
};

/// Per-axis 1 + i k_j^{gamma_j}, k_j = 1, 2, ...
struct ImaginaryPower {
    std::vector<double> gamma;
};

/// n = 2 integer points (k1, k2), k_j >= 1, with arg(k1 + i k2) <= theta,
/// enumerated norm-then-lex.
struct SectorLattice {
    double theta;
};

/// Finite list or 1-based generator; `label` names well-known families
/// ("doetsch", "diag-kk", ...) so classifiers can recognize them.
struct Explicit {
    std::vector<Point> points;
    std::function<Point(std::size_t)> gen;  // 1-based index
    std::string label;
};

/// Product of one-dimensional families; the pairing bijection N^n -> N is
/// fixed to the Cantor diagonal ordering with lexicographic tie-break.
struct ProductLattice {
    std::vector<SequenceFamily> factors;
};

struct Shift {
    Point z;
};
struct Project {
    IndexSubset subset;
};
struct ResidueSplit {
    unsigned m;
    unsigned r;  // 0 <= r < m, selecting 1-based enumeration indices == r (mod m)
};
struct Subordinate {
    IndexSubset subset;
    std::vector<double> gammas;  // in (0,1), one per selected coordinate
};
/// Enumeration-order bijection: reverse each consecutive block of `block`
/// indices (a simple testable bijection on N).
struct Reindex {
    unsigned block = 2;
};

using Derivation = std::variant<Shift, Project, ResidueSplit, Subordinate, Reindex>;

struct Derived {
    std::shared_ptr<SequenceFamily> base;
    Derivation derivation;
};

using FamilyKind = std::variant<AffineLattice, PowerLattice, ImaginaryPower, SectorLattice,
                                Explicit, ProductLattice, Derived>;

struct SequenceFamily {
    std::size_t dim;
    FamilyKind kind;
};

namespace detail {

/// Multi-indices of dimension n with entries >= start, ordered by coordinate
/// sum then lexicographically; returns the first N of them.
inline std::vector<std::vector<std::size_t>> diagonal_indices(std::size_t n, std::size_t start,
                                                              std::size_t N) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(n, start);
    auto emit_sum = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
        if (out.size() >= N) return;
        if (pos + 1 == n) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (std::size_t v = start; v + start * (n - pos - 1) <= remaining && out.size() < N; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    for (std::size_t s = n * start; out.size() < N; ++s) emit_sum(emit_sum, 0, s);
    return out;
}

}  // namespace detail

inline std::vector<Point> enumerate(const SequenceFamily& fam, std::size_t N);

namespace detail {

struct EnumerateVisitor {
    std::size_t dim;
    std::size_t N;

    std::vector<Point> operator()(const AffineLattice& f) const {
        if (f.a.size() != dim || f.b.size() != dim)
            throw std::invalid_argument("AffineLattice: parameter length mismatch");
        auto idx = diagonal_indices(dim, 0, N);
        std::vector<Point> out(idx.size(), Point(dim));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j)
                out[i][j] = f.a[j] + static_cast<double>(idx[i][j]) * f.b[j];
        return out;
    }

    std::vector<Point> operator()(const PowerLattice& f) const {
        if (f.a.size() != dim || f.b.size() != dim || f.gamma.size() != dim)
            throw std::invalid_argument("PowerLattice: parameter length mismatch");
        for (double g : f.gamma)
            if (!(g > 0.0)) throw std::invalid_argument("PowerLattice: gamma must be > 0");
        auto idx = diagonal_indices(dim, 0, N);
        std::vector<Point> out(idx.size(), Point(dim));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j)
                out[i][j] =
                    f.a[j] + f.b[j] * std::pow(static_cast<double>(idx[i][j]), f.gamma[j]);
        return out;
    }

    std::vector<Point> operator()(const ImaginaryPower& f) const {
        if (f.gamma.size() != dim)
            throw std::invalid_argument("ImaginaryPower: parameter length mismatch");
        auto idx = diagonal_indices(dim, 1, N);
        std::vector<Point> out(idx.size(), Point(dim));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j)
                out[i][j] = std::complex<double>(
                    1.0, std::pow(static_cast<double>(idx[i][j]), f.gamma[j]));
        return out;
    }

    std::vector<Point> operator()(const SectorLattice& f) const {
        if (dim != 2) throw std::invalid_argument("SectorLattice: dim must be 2");
        if (!(f.theta > 0.0 && f.theta < 1.5707963267948966))
            throw std::invalid_argument("SectorLattice: theta must lie in (0, pi/2)");
        std::vector<std::pair<std::size_t, std::size_t>> pts;
        std::size_t R = 2;
        while (true) {
            pts.clear();
            for (std::size_t k1 = 1; k1 <= R; ++k1)
                for (std::size_t k2 = 1; k2 <= R; ++k2) {
                    if (k1 * k1 + k2 * k2 > R * R) continue;
                    if (std::atan2(double(k2), double(k1)) <= f.theta + 1e-12)
                        pts.emplace_back(k1, k2);
                }
            if (pts.size() >= N) break;
            R *= 2;
            if (R > 1u << 20) throw std::runtime_error("SectorLattice: enumeration overflow");
        }
        std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) {
            auto np = p.first * p.first + p.second * p.second;
            auto nq = q.first * q.first + q.second * q.second;
            if (np != nq) return np < nq;
            return p < q;
        });
        std::vector<Point> out;
        for (std::size_t i = 0; i < N; ++i)
            out.push_back({std::complex<double>(double(pts[i].first), 0.0),
                           std::complex<double>(double(pts[i].second), 0.0)});
        return out;
    }

    std::vector<Point> operator()(const Explicit& f) const {
        std::vector<Point> out;
        for (std::size_t k = 1; k <= N; ++k) {
            Point p;
            if (f.gen) {
                p = f.gen(k);
            } else {
                if (k > f.points.size())
                    throw std::out_of_range("Explicit family exhausted before N points");
                p = f.points[k - 1];
            }
            if (p.size() != dim) throw std::invalid_argument("Explicit: point dim mismatch");
            out.push_back(std::move(p));
        }
        return out;
    }

    std::vector<Point> operator()(const ProductLattice& f) const {
        if (f.factors.size() != dim)
            throw std::invalid_argument("ProductLattice: needs dim one-dimensional factors");
        for (const auto& g : f.factors)
            if (g.dim != 1)
                throw std::invalid_argument("ProductLattice: factors must be one-dimensional");
        auto idx = diagonal_indices(dim, 1, N);
        std::size_t need = 0;
        for (const auto& t : idx)
            for (std::size_t v : t) need = std::max(need, v);
        std::vector<std::vector<Point>> cols;
        for (const auto& g : f.factors) cols.push_back(enumerate(g, need));
        std::vector<Point> out(idx.size(), Point(dim));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j) out[i][j] = cols[j][idx[i][j] - 1][0];
        return out;
    }

    std::vector<Point> operator()(const Derived& f) const;
};

inline std::vector<Point> EnumerateVisitor::operator()(const Derived& f) const {
    const SequenceFamily& base = *f.base;
    return std::visit(
        [&](const auto& d) -> std::vector<Point> {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, Shift>) {
                if (d.z.size() != base.dim)
                    throw std::invalid_argument("Shift: dimension mismatch");
                auto pts = enumerate(base, N);
                for (auto& p : pts)
                    for (std::size_t j = 0; j < p.size(); ++j) p[j] += d.z[j];
                return pts;
            } else if constexpr (std::is_same_v<D, Project>) {
                d.subset.check_dim(base.dim);
                auto pts = enumerate(base, N);
                std::vector<Point> out;
                for (const auto& p : pts) {
                    Point q;
                    for (std::size_t c : d.subset.coords) q.push_back(p[c - 1]);
                    out.push_back(std::move(q));
                }
                return out;
            } else if constexpr (std::is_same_v<D, ResidueSplit>) {
                if (d.m == 0 || d.r >= d.m)
                    throw std::invalid_argument("ResidueSplit: need 0 <= r < m, m >= 1");
                auto pts = enumerate(base, d.m * N + d.m);
                std::vector<Point> out;
                for (std::size_t k = 1; k <= pts.size() && out.size() < N; ++k)
                    if (k % d.m == d.r) out.push_back(pts[k - 1]);
                return out;
            } else if constexpr (std::is_same_v<D, Subordinate>) {
                d.subset.check_dim(base.dim);
                if (d.gammas.size() != d.subset.size())
                    throw std::invalid_argument("Subordinate: gamma count mismatch");
                for (double g : d.gammas)
                    if (!(g > 0.0 && g < 1.0))
                        throw std::invalid_argument("Subordinate: gamma must lie in (0,1)");
                auto pts = enumerate(base, N);
                for (auto& p : pts)
                    for (std::size_t i = 0; i < d.subset.coords.size(); ++i) {
                        std::size_t j = d.subset.coords[i] - 1;
                        p[j] = std::pow(p[j], d.gammas[i]);  // principal branch
                    }
                return pts;
            } else {  // Reindex
                const Reindex& rx = d;
                if (rx.block == 0) throw std::invalid_argument("Reindex: block must be >= 1");
                std::size_t m = ((N + rx.block - 1) / rx.block) * rx.block;
                auto pts = enumerate(base, m);
                std::vector<Point> out;
                for (std::size_t b = 0; b < m; b += rx.block)
                    for (std::size_t i = 0; i < rx.block; ++i)
                        out.push_back(pts[b + rx.block - 1 - i]);
                out.resize(N);
                return out;
            }
        },
        f.derivation);
}

}  // namespace detail

inline std::vector<Point> enumerate(const SequenceFamily& fam, std::size_t N) {
    if (N < 1) throw std::invalid_argument("enumerate: N must be >= 1");
    return std::visit(detail::EnumerateVisitor{fam.dim, N}, fam.kind);
}

/// Derivation wrapper. ResidueSplit of an affine lattice folds back into an
/// affine lattice (indices r, r+m, ... of a + k b form a' + k (m b)), so the
/// derived family stays rule-recognizable; everything else wraps.
inline SequenceFamily derive_family(const SequenceFamily& fam, Derivation d) {
    std::size_t out_dim = fam.dim;
    if (const auto* pr = std::get_if<Project>(&d)) {
        pr->subset.check_dim(fam.dim);
        out_dim = pr->subset.size();
    }
    if (const auto* rs = std::get_if<ResidueSplit>(&d)) {
        if (rs->m == 0 || rs->r >= rs->m)
            throw std::invalid_argument("ResidueSplit: need 0 <= r < m, m >= 1");
        if (const auto* af = std::get_if<AffineLattice>(&fam.kind); af && fam.dim == 1) {
            // 1-based enumeration index p == r (mod m); first such p
            std::size_t p0 = (rs->r == 0) ? rs->m : rs->r;
            AffineLattice out;
            out.a = {af->a[0] + static_cast<double>(p0 - 1) * af->b[0]};
            out.b = {static_cast<double>(rs->m) * af->b[0]};
            return SequenceFamily{1, out};
        }
    }
    return SequenceFamily{out_dim,
                          Derived{std::make_shared<SequenceFamily>(fam), std::move(d)}};
}

// ---- convenience constructors -------------------------------------------

inline SequenceFamily make_affine(std::vector<double> a, std::vector<double> b) {
    std::size_t n = a.size();
    if (b.size() != n || n == 0) throw std::invalid_argument("make_affine: bad parameters");
    for (std::size_t j = 0; j < n; ++j)
        if (!(a[j] > 0.0 && b[j] > 0.0))
            throw std::invalid_argument("make_affine: a, b must be positive");
    return SequenceFamily{n, AffineLattice{std::move(a), std::move(b)}};
}

inline SequenceFamily make_power(std::vector<double> a, std::vector<double> b,
                                 std::vector<double> gamma) {
    std::size_t n = a.size();
    if (b.size() != n || gamma.size() != n || n == 0)
        throw std::invalid_argument("make_power: bad parameters");
    return SequenceFamily{n, PowerLattice{std::move(a), std::move(b), std::move(gamma)}};
}

inline SequenceFamily make_impow(std::vector<double> gamma) {
    std::size_t n = gamma.size();
    if (n == 0) throw std::invalid_argument("make_impow: bad parameters");
    for (double g : gamma)
        if (!(g > 0.0 && g < 1.0))
            throw std::invalid_argument("make_impow: gamma must lie in (0,1)");
    return SequenceFamily{n, ImaginaryPower{std::move(gamma)}};
}

inline SequenceFamily make_sector(double theta) {
    return SequenceFamily{2, SectorLattice{theta}};
}

inline SequenceFamily make_explicit(std::vector<Point> pts, std::string label = {}) {
    if (pts.empty()) throw std::invalid_argument("make_explicit: empty list");
    std::size_t n = pts[0].size();
    return SequenceFamily{n, Explicit{std::move(pts), nullptr, std::move(label)}};
}

inline SequenceFamily make_product(std::vector<SequenceFamily> factors) {
    std::size_t n = factors.size();
    return SequenceFamily{n, ProductLattice{std::move(factors)}};
}

/// The Doetsch sequence -i, 2i, -2i, 3i, -3i, ... (all ki with k in Z,
/// k not in {0, 1}).
inline SequenceFamily doetsch_family() {
    Explicit e;
    e.label = "doetsch";
    e.gen = [](std::size_t k) -> Point {
        if (k == 1) return {std::complex<double>(0.0, -1.0)};
        std::size_t m = k / 2 + 1;  // k=2,3 -> 2; k=4,5 -> 3; ...
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        return {std::complex<double>(0.0, sign * static_cast<double>(m))};
    };
    return SequenceFamily{1, std::move(e)};
}

/// The two-dimensional diagonal ((k,k))_{k>=1}.
inline SequenceFamily diagonal_family() {
    Explicit e;
    e.label = "diag-kk";
    e.gen = [](std::size_t k) -> Point {
        return {std::complex<double>(double(k), 0.0), std::complex<double>(double(k), 0.0)};
    };
    return SequenceFamily{2, std::move(e)};
}

}  // namespace lapuniq
