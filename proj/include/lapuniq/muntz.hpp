#pragma once

#include "lapuniq/family.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace lapuniq {

/// Finite-evidence report for the three Müntz conditions. The density
/// condition involves a true limsup; only the sampled estimate below is
/// computable, and it is labeled as an estimate everywhere it is reported.
struct MuntzReport {
    double separation = 0.0;   // condition (i): min over pairs of sum_j |Re l^j - Re l'^j|
    bool separation_analytic = false;  // true when an exact lattice bound was substituted
    double density = 0.0;      // condition (ii): sampled estimate of the limsup
    double density_threshold = 0.05;  // pinned pass threshold for the estimate
    std::vector<double> density_grid;          // sampled t values
    std::vector<double> density_values;        // card{...}/t^n at each t
    std::vector<bool> im_constant;             // condition (iii) per axis
    std::vector<double> im_constants;          // the constants c_j
    std::size_t prefix = 0;

    bool pass_separation() const { return separation > 0.0; }
    bool pass_density() const { return density > density_threshold; }
    bool pass_im_constant() const {
        for (bool f : im_constant)
            if (!f) return false;
        return !im_constant.empty();
    }
    bool pass() const { return pass_separation() && pass_density() && pass_im_constant(); }
};

/// Evaluate the Müntz conditions of a lattice-subset family on a finite
/// prefix. Requires Re lambda_k^j >= 1 on the prefix (the theorem's
/// hypothesis). Density counts points with sum_j |Re lambda^j - 1| <= t over
/// a logarithmic grid of t <= T_max and divides by t^n; the estimate keeps
/// the maximum over the upper half of the grid, where the count has
/// stabilized toward its asymptotic rate.
inline MuntzReport muntz_check(const SequenceFamily& fam, double T_max, std::size_t prefix) {
    if (prefix < 2) throw std::invalid_argument("muntz_check: prefix must be >= 2");
    auto pts = enumerate(fam, prefix);
    std::size_t n = fam.dim;
    for (const auto& p : pts)
        for (const auto& c : p)
            if (!(c.real() >= 1.0 - 1e-12))
                throw std::domain_error("muntz_check: Re lambda_k^j >= 1 required on prefix");

    MuntzReport rep;
    rep.prefix = pts.size();

    // (i) separation: exact bound for affine lattices (distinct multi-indices
    // differ by at least min_j b_j in the l1 real metric), sampled pairs else.
    if (const auto* af = std::get_if<AffineLattice>(&fam.kind)) {
        double bmin = af->b[0];
        for (double b : af->b) bmin = std::min(bmin, b);
        rep.separation = bmin;
        rep.separation_analytic = true;
    } else {
        double best = -1.0;
        std::size_t M = std::min<std::size_t>(pts.size(), 200);
        for (std::size_t i = 0; i < M; ++i)
            for (std::size_t k = i + 1; k < M; ++k) {
                double d = 0.0;
                for (std::size_t j = 0; j < n; ++j)
                    d += std::abs(pts[i][j].real() - pts[k][j].real());
                if (best < 0.0 || d < best) best = d;
            }
        rep.separation = best;
    }

    // (ii) density estimate over a logarithmic grid
    double t = 1.0;
    std::vector<double> grid;
    while (t <= T_max) {
        grid.push_back(t);
        t *= 1.5;
    }
    if (grid.empty() || grid.back() < T_max) grid.push_back(T_max);
    for (double tv : grid) {
        std::size_t cnt = 0;
        for (const auto& p : pts) {
            double d = 0.0;
            for (const auto& c : p) d += std::abs(c.real() - 1.0);
            if (d <= tv) ++cnt;
        }
        rep.density_grid.push_back(tv);
        rep.density_values.push_back(static_cast<double>(cnt) / std::pow(tv, double(n)));
    }
    for (std::size_t i = 0; i < rep.density_values.size(); ++i)
        if (rep.density_grid[i] >= 0.5 * T_max)  // limsup estimate: large t only
            rep.density = std::max(rep.density, rep.density_values[i]);

    // (iii) per-axis imaginary-part constancy
    rep.im_constant.assign(n, true);
    rep.im_constants.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        rep.im_constants[j] = pts[0][j].imag();
        for (const auto& p : pts)
            if (std::abs(p[j].imag() - rep.im_constants[j]) > 1e-12) {
                rep.im_constant[j] = false;
                break;
            }
    }
    return rep;
}

}  // namespace lapuniq
