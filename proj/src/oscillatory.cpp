#include "adaptcoord/oscillatory.hpp"

#include "adaptcoord/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace adaptcoord {

namespace {

constexpr double kAmplitudeFloor = 1e-10;
constexpr int kGradientSamples = 401;

void check_inputs(const BiPoly& f, double lambda, double radius) {
    if (f.is_zero()) raise(ErrorCode::NotFiniteType, "oscillatory integral of the zero phase");
    if (!(lambda > 0) || !(radius > 0)) raise(ErrorCode::InvalidArgument, "lambda and radius must be positive");
}

// Coefficients of x2^k as doubles, for one fixed x1.
struct RowEvaluator {
    std::vector<UniPoly> rows;
    explicit RowEvaluator(const BiPoly& f) : rows(f.as_poly_in_x2()) {}
    void at(double x1, std::vector<double>& out) const {
        out.resize(rows.size());
        for (std::size_t k = 0; k < rows.size(); ++k) out[k] = rows[k].eval(x1);
    }
};

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace

double bump(double t) {
    double s = 1.0 - t * t;
    if (s <= 0.0) return 0.0;
    return std::exp(1.0 - 1.0 / s);
}

GradientBound gradient_bound(const BiPoly& f, double radius) {
    RowEvaluator d1(f.derivative_x1()), d2(f.derivative_x2());
    std::vector<double> c1, c2;
    GradientBound g;
    double h = 2.0 * radius / (kGradientSamples - 1);
    for (int i = 0; i < kGradientSamples; ++i) {
        double x1 = -radius + i * h;
        double a1 = bump(x1 / radius);
        if (a1 < kAmplitudeFloor) continue;
        d1.at(x1, c1);
        d2.at(x1, c2);
        for (int j = 0; j < kGradientSamples; ++j) {
            double x2 = -radius + j * h;
            if (a1 * bump(x2 / radius) < kAmplitudeFloor) continue;
            g.g1 = std::max(g.g1, std::abs(horner(c1, x2)));
            g.g2 = std::max(g.g2, std::abs(horner(c2, x2)));
        }
    }
    return g;
}

std::complex<double> estimate_integral(const BiPoly& f, double lambda, double radius, GridSpec grid) {
    check_inputs(f, lambda, radius);
    if (grid.n1 < 64 || grid.n2 < 64) raise(ErrorCode::InvalidArgument, "grid needs at least 64 cells per axis");
    const double h1 = 2.0 * radius / grid.n1, h2 = 2.0 * radius / grid.n2;
    GradientBound g = gradient_bound(f, radius);
    double phase1 = lambda * g.g1 * h1, phase2 = lambda * g.g2 * h2;
    if (phase1 > kMaxPhasePerCell || phase2 > kMaxPhasePerCell)
        raise(ErrorCode::GridTooCoarse, "phase per cell " + std::to_string(std::max(phase1, phase2)) +
                                            " rad exceeds " + std::to_string(kMaxPhasePerCell));

    std::vector<double> amp2(static_cast<std::size_t>(grid.n2) + 1), xs2(amp2.size());
    for (int j = 0; j <= grid.n2; ++j) {
        xs2[static_cast<std::size_t>(j)] = -radius + j * h2;
        amp2[static_cast<std::size_t>(j)] = bump(xs2[static_cast<std::size_t>(j)] / radius);
    }
    RowEvaluator rows(f);
    std::vector<double> c;
    long double re = 0.0L, im = 0.0L;
    // The amplitude vanishes on the boundary, so the trapezoidal weights are all h1 * h2.
    for (int i = 1; i < grid.n1; ++i) {
        double x1 = -radius + i * h1;
        double a1 = bump(x1 / radius);
        if (a1 == 0.0) continue;
        rows.at(x1, c);
        for (double& v : c) v *= lambda;
        double row_re = 0.0, row_im = 0.0;
        for (int j = 1; j < grid.n2; ++j) {
            double a2 = amp2[static_cast<std::size_t>(j)];
            if (a2 == 0.0) continue;
            double phase = horner(c, xs2[static_cast<std::size_t>(j)]);
            row_re += a2 * std::cos(phase);
            row_im += a2 * std::sin(phase);
        }
        re += a1 * row_re;
        im += a1 * row_im;
    }
    return {static_cast<double>(re * h1 * h2), static_cast<double>(im * h1 * h2)};
}

std::complex<double> estimate_integral(const BiPoly& f, double lambda, double radius, int grid_n) {
    return estimate_integral(f, lambda, radius, GridSpec{grid_n, grid_n});
}

GridSpec choose_grid(const BiPoly& f, double lambda, const QuadratureOptions& opt) {
    check_inputs(f, lambda, opt.radius);
    GradientBound g = gradient_bound(f, opt.radius);
    auto cells = [&](double gi) {
        double n = std::ceil(lambda * gi * 2.0 * opt.radius / opt.target_phase_per_cell);
        return static_cast<int>(std::clamp(n, static_cast<double>(opt.min_grid), static_cast<double>(opt.max_grid)));
    };
    return {cells(g.g1), cells(g.g2)};
}

DecayEstimate fit_decay(const BiPoly& f, double lambda_min, double lambda_max, int points, const QuadratureOptions& opt) {
    if (!(lambda_min > 1.0) || !(lambda_max > lambda_min)) raise(ErrorCode::InvalidArgument, "need 1 < lambda_min < lambda_max");
    if (points < 5) raise(ErrorCode::InvalidArgument, "need at least 5 sample points");
    DecayEstimate est;
    est.radius = opt.radius;
    double ratio = std::log(lambda_max / lambda_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        double lambda = i == points - 1 ? lambda_max : lambda_min * std::exp(ratio * i);
        GridSpec grid = choose_grid(f, lambda, opt);
        double mag = std::abs(estimate_integral(f, lambda, opt.radius, grid));
        if (!(mag > 0)) raise(ErrorCode::InternalInvariantViolation, "vanishing integral estimate");
        est.lambdas.push_back(lambda);
        est.magnitudes.push_back(mag);
        est.grids.push_back(grid);
    }
    double best_rms = INFINITY;
    for (int r = 0; r <= 1; ++r) {
        // y = c + slope * x with x = log(lambda), y = log|I| - r log log(lambda)
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < est.lambdas.size(); ++i) {
            double x = std::log(est.lambdas[i]);
            double y = std::log(est.magnitudes[i]) - r * std::log(x);
            xs.push_back(x);
            ys.push_back(y);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double n = static_cast<double>(xs.size());
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        double icpt = (sy - slope * sx) / n;
        double ss = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) ss += std::pow(ys[i] - icpt - slope * xs[i], 2);
        double rms = std::sqrt(ss / n);
        if (rms < best_rms) {
            best_rms = rms;
            est.fitted_exponent = -slope;
            est.fitted_log_power = r;
            est.residual = rms;
        }
    }
    return est;
}

} // namespace adaptcoord
