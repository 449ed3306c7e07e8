#pragma once

#include "adaptcoord/bipoly.hpp"

#include <complex>
#include <vector>

namespace adaptcoord {

// Cells per axis of the uniform tensor grid on [-R, R]^2.
struct GridSpec {
    int n1 = 0;
    int n2 = 0;
};

struct QuadratureOptions {
    double radius = 1.0;
    int min_grid = 256;
    int max_grid = 40000;
    // Phase increment per cell aimed for when sizing the grid automatically.
    double target_phase_per_cell = 3.5;
};

// Largest phase increment per cell allowed by estimate_integral.
inline constexpr double kMaxPhasePerCell = 4.71238898038469; // 3/4 of a full turn

// Amplitude profile exp(1 - 1/(1 - t^2)) on |t| < 1, zero outside; a(x) = phi(x1/R) phi(x2/R).
double bump(double t);

// Largest |d f / d x_i| over the region where the amplitude exceeds 1e-10.
struct GradientBound {
    double g1 = 0.0;
    double g2 = 0.0;
};
GradientBound gradient_bound(const BiPoly& f, double radius);

// Trapezoidal rule for the integral of exp(i lambda f) a over [-R, R]^2.
std::complex<double> estimate_integral(const BiPoly& f, double lambda, double radius, GridSpec grid);
std::complex<double> estimate_integral(const BiPoly& f, double lambda, double radius, int grid_n);

GridSpec choose_grid(const BiPoly& f, double lambda, const QuadratureOptions& opt);

struct DecayEstimate {
    std::vector<double> lambdas;
    std::vector<double> magnitudes;
    std::vector<GridSpec> grids;
    double radius = 1.0;
    double fitted_exponent = 0.0;
    int fitted_log_power = 0;
    double residual = 0.0;
};

// Least-squares fit of log|I| = c - s log(lambda) + r log log(lambda), r in {0, 1}
// chosen by the smaller RMS residual; lambdas form a geometric grid.
DecayEstimate fit_decay(const BiPoly& f, double lambda_min, double lambda_max, int points,
                        const QuadratureOptions& opt = {});

} // namespace adaptcoord
