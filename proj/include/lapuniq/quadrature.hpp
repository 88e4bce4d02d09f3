#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lapuniq {

/// Fixed-order Gauss-Legendre rule on [-1,1].
struct GaussLegendre {
    static constexpr int order = 16;

    static const GaussLegendre& instance() {
        static GaussLegendre gl;
        return gl;
    }

    std::vector<double> nodes;    // in (-1,1)
    std::vector<double> weights;

private:
    GaussLegendre() {
        nodes.resize(order);
        weights.resize(order);
        for (int i = 0; i < order; ++i) {
            // Newton iteration from the Chebyshev initial guess
            double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= order; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = order * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = order * (x * p1 - p0) / (x * x - 1.0);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

/// Composite Gauss-Legendre points for [0,T] split into `panels` equal panels.
inline void panel_points(double T, int panels, std::vector<double>& xs, std::vector<double>& ws) {
    const auto& gl = GaussLegendre::instance();
    xs.clear();
    ws.clear();
    double h = T / panels;
    for (int p = 0; p < panels; ++p) {
        double mid = (p + 0.5) * h;
        for (int i = 0; i < GaussLegendre::order; ++i) {
            xs.push_back(mid + 0.5 * h * gl.nodes[i]);
            ws.push_back(0.5 * h * gl.weights[i]);
        }
    }
}

/// Tensor-product integral of g over the box prod_j [0, T_j] with `panels`
/// composite Gauss-Legendre panels per axis.
inline std::complex<double> integrate_box(
    const std::function<std::complex<double>(std::span<const double>)>& g,
    std::span<const double> T, int panels) {
    std::size_t n = T.size();
    std::vector<std::vector<double>> xs(n), ws(n);
    for (std::size_t j = 0; j < n; ++j) panel_points(T[j], panels, xs[j], ws[j]);

    std::vector<double> t(n);
    std::complex<double> sum = 0;
    std::vector<std::size_t> idx(n, 0);
    const std::size_t m = xs[0].size();
    while (true) {
        double w = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            t[j] = xs[j][idx[j]];
            w *= ws[j][idx[j]];
        }
        sum += w * g(t);
        std::size_t j = 0;
        for (; j < n; ++j) {
            if (++idx[j] < m) break;
            idx[j] = 0;
        }
        if (j == n) break;
    }
    return sum;
}

}  // namespace lapuniq
