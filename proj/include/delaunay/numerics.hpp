// Copyright 2026 the delaunay-surfaces authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace delaunay {

/// Outcome of an adaptive quadrature run.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  ///< accumulated per-interval estimates, >= 0
    std::int64_t evaluations = 0; ///< integrand evaluations performed
};

/// Thrown when adaptive subdivision hits its depth cap before the requested
/// tolerance is met. Carries the best estimate obtained so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& message, QuadratureResult best)
        : std::runtime_error(message), best_(best) {}

    const QuadratureResult& best() const noexcept { return best_; }

private:
    QuadratureResult best_;
};

/// Thrown by find_root_1d when the endpoints do not bracket a sign change.
class BracketError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by solve_2d when the finite-difference Jacobian is singular.
class SingularJacobianError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result of a 1-d root search.
struct RootResult {
    double root = 0.0;
    double residual_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Result of a 2-d nonlinear solve.
struct RootResult2 {
    std::array<double, 2> root{0.0, 0.0};
    double residual_norm = 0.0; ///< infinity norm of the residual
    int iterations = 0;
    bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7-15 pair, positive abscissae. Even indices belong to the
// Kronrod extension only; odd indices are shared with the 7-point Gauss rule.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double kronrod = 0.0;
    double error = 0.0;
};

// One Gauss-Kronrod 7-15 panel over [a, b].
template <typename F>
PanelEstimate gauss_kronrod_panel(F&& fn, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = fn(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double fsum = fn(center - dx) + fn(center + dx);
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * fsum;
        }
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

/// Adaptive Gauss-Kronrod quadrature of `fn` over [a, b].
///
/// Bisects intervals whose embedded 7-15 error estimate exceeds their share
/// of the tolerance budget max(abs_tol, rel_tol * |integral|). Throws
/// QuadratureError with the best estimate if the subdivision depth cap is
/// reached while the accumulated estimate still exceeds the budget.
template <typename F>
QuadratureResult integrate(F&& fn, double a, double b, double abs_tol = 1e-10,
                           double rel_tol = 1e-10) {
    if (!(a <= b)) {
        throw std::invalid_argument("integrate: requires a <= b");
    }
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw std::invalid_argument("integrate: tolerances must be positive");
    }
    QuadratureResult result;
    if (a == b) {
        return result;
    }

    const auto whole = detail::gauss_kronrod_panel(fn, a, b);
    result.evaluations += 15;
    const double budget =
        std::max(abs_tol, rel_tol * std::abs(whole.kronrod));
    const double total_width = b - a;
    // Deep enough that an integrable endpoint singularity (error decaying
    // like the square root of the innermost panel width) drops below a 1e-9
    // budget before the cap is reached.
    constexpr int kMaxDepth = 56;
    // Hard ceiling on refinement work; panels beyond it are accepted with
    // their current estimates so run time stays bounded on integrands the
    // scheme cannot resolve (the final tolerance check still rejects them).
    constexpr long kMaxPanels = 200000;
    long panels = 0;
    bool refinement_exhausted = false;

    // Explicit stack; depth-first accumulation keeps evaluation order (and
    // therefore output) deterministic.
    struct Interval {
        double a, b;
        int depth;
    };
    std::array<Interval, 4 * kMaxDepth> stack;
    int top = 0;
    stack[top++] = {a, b, 0};
    while (top > 0) {
        const Interval iv = stack[--top];
        const auto panel = detail::gauss_kronrod_panel(fn, iv.a, iv.b);
        result.evaluations += 15;
        ++panels;
        const double share = budget * ((iv.b - iv.a) / total_width);
        if (panel.error <= share || iv.depth >= kMaxDepth ||
            panels >= kMaxPanels) {
            result.value += panel.kronrod;
            result.error_estimate += panel.error;
            if (panel.error > share) {
                refinement_exhausted = true;
            }
            continue;
        }
        const double mid = 0.5 * (iv.a + iv.b);
        stack[top++] = {mid, iv.b, iv.depth + 1};
        stack[top++] = {iv.a, mid, iv.depth + 1};
    }

    if (refinement_exhausted && result.error_estimate > budget) {
        throw QuadratureError("integrate: refinement budget exhausted "
                              "before tolerance was met",
                              result);
    }
    return result;
}

/// Adaptive central-difference derivative of order 1 or 2 at t.
///
/// Runs the stencil over a geometric ladder of step sizes (from 0.4 times
/// max(1, |t|) down by halving) and extrapolates with a Neville tableau in
/// h^2, returning the entry whose disagreement with its neighbours is
/// smallest. Tracking the best entry across the whole ladder picks the step
/// trade-off per call: functions with nearby complex singularities settle
/// on small steps, while functions whose evaluations carry small non-smooth
/// noise (for instance quadrature-backed ones) settle on wide steps where
/// the stencil does not amplify the noise by 1/h^2. The ladder is fixed, so
/// repeated calls are bit-for-bit deterministic.
template <typename F>
double derivative(F&& fn, double t, int order = 1) {
    if (order != 1 && order != 2) {
        throw std::invalid_argument("derivative: order must be 1 or 2");
    }
    constexpr int kRows = 14;
    constexpr double kShrink = 2.0;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    const double f0 = order == 2 ? fn(t) : 0.0;
    double h = 0.4 * std::max(1.0, std::abs(t));
    std::array<std::array<double, kRows>, kRows> tableau{};
    std::array<double, kRows> floors{};
    double best = std::numeric_limits<double>::quiet_NaN();
    double best_err = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kRows; ++i, h /= kShrink) {
        const double above = fn(t + h);
        const double below = fn(t - h);
        // At small steps the stencil numerator is quantized to whole ulps of
        // the function values, so rows at different steps can collide
        // exactly and fake perfect agreement. The per-row floor is the
        // quantization lattice spacing; no entry may claim an error below
        // the floor of its deepest contributing row.
        const double magnitude =
            std::abs(above) + std::abs(below) + 2.0 * std::abs(f0);
        if (order == 1) {
            tableau[i][0] = (above - below) / (2.0 * h);
            floors[i] = 4.0 * kEps * magnitude / (2.0 * h);
        } else {
            tableau[i][0] = (above - 2.0 * f0 + below) / (h * h);
            floors[i] = 4.0 * kEps * magnitude / (h * h);
        }
        double weight = kShrink * kShrink;
        for (int j = 1; j <= i; ++j) {
            tableau[i][j] =
                (weight * tableau[i][j - 1] - tableau[i - 1][j - 1]) /
                (weight - 1.0);
            weight *= kShrink * kShrink;
            double disagree =
                std::max(std::abs(tableau[i][j] - tableau[i][j - 1]),
                         std::abs(tableau[i][j] - tableau[i - 1][j - 1]));
            if (j < i) {
                disagree = std::max(
                    disagree, std::abs(tableau[i][j] - tableau[i - 1][j]));
            }
            const double err = std::max(disagree, floors[i]);
            if (err <= best_err) {
                best_err = err;
                best = tableau[i][j];
            }
        }
    }
    return best;
}

/// Bracketing root finder: bisection with secant acceleration.
///
/// Requires fn(lo) * fn(hi) <= 0. Stops when |fn(root)| <= tol or the
/// bracket width drops below tol.
template <typename F>
RootResult find_root_1d(F&& fn, double lo, double hi, double tol = 1e-12) {
    if (!(lo <= hi)) {
        throw std::invalid_argument("find_root_1d: requires lo <= hi");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("find_root_1d: tol must be positive");
    }
    double flo = fn(lo);
    double fhi = fn(hi);
    RootResult result;
    if (std::abs(flo) <= tol) {
        return {lo, std::abs(flo), 0, true};
    }
    if (std::abs(fhi) <= tol) {
        return {hi, std::abs(fhi), 0, true};
    }
    if (flo * fhi > 0.0) {
        throw BracketError("find_root_1d: endpoints do not bracket a root");
    }

    double a = lo, b = hi, fa = flo, fb = fhi;
    constexpr int kMaxIter = 200;
    for (int it = 1; it <= kMaxIter; ++it) {
        // Secant candidate, demoted to the midpoint when it falls outside
        // the bracket or fails to shrink it meaningfully.
        double mid = 0.5 * (a + b);
        double x = mid;
        const double denom = fb - fa;
        if (denom != 0.0) {
            const double secant = b - fb * (b - a) / denom;
            const double margin = 0.01 * (b - a);
            if (secant > a + margin && secant < b - margin) {
                x = secant;
            }
        }
        const double fx = fn(x);
        result.iterations = it;
        if (std::abs(fx) <= tol || (b - a) <= tol) {
            return {x, std::abs(fx), it, true};
        }
        if (fa * fx <= 0.0) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
        if ((b - a) <= tol) {
            const double root = 0.5 * (a + b);
            return {root, std::abs(fn(root)), it, true};
        }
    }
    const double root = 0.5 * (a + b);
    return {root, std::abs(fn(root)), kMaxIter, false};
}

/// Optional box constraint for solve_2d iterates.
struct Bounds2 {
    std::array<double, 2> lo{-std::numeric_limits<double>::infinity(),
                             -std::numeric_limits<double>::infinity()};
    std::array<double, 2> hi{std::numeric_limits<double>::infinity(),
                             std::numeric_limits<double>::infinity()};

    std::array<double, 2> clamp(std::array<double, 2> x) const {
        for (int i = 0; i < 2; ++i) {
            x[i] = std::min(std::max(x[i], lo[i]), hi[i]);
        }
        return x;
    }
};

/// Damped Newton iteration for a 2-d system with forward-difference Jacobian.
///
/// Convergence means the residual infinity norm dropped to `tol`. Damping
/// halves the step up to 20 times until the residual 2-norm decreases;
/// non-finite trial residuals count as rejections. Iterates are clamped to
/// `bounds`. Throws SingularJacobianError on a singular Jacobian; all other
/// failures return converged = false with the last iterate.
template <typename F>
RootResult2 solve_2d(F&& system, std::array<double, 2> x0, double tol = 1e-8,
                     int max_iter = 25, const Bounds2& bounds = {}) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const auto norm2 = [](const std::array<double, 2>& r) {
        return std::hypot(r[0], r[1]);
    };
    const auto norm_inf = [](const std::array<double, 2>& r) {
        return std::max(std::abs(r[0]), std::abs(r[1]));
    };

    std::array<double, 2> x = bounds.clamp(x0);
    std::array<double, 2> r = system(x);
    RootResult2 result{x, norm_inf(r), 0, false};
    for (int it = 0; it < max_iter; ++it) {
        if (norm_inf(r) <= tol) {
            result.converged = true;
            return result;
        }

        std::array<std::array<double, 2>, 2> jac{};
        for (int j = 0; j < 2; ++j) {
            const double h = std::sqrt(eps) * std::max(1.0, std::abs(x[j]));
            std::array<double, 2> xp = x;
            xp[j] += h;
            const std::array<double, 2> rp = system(xp);
            jac[0][j] = (rp[0] - r[0]) / h;
            jac[1][j] = (rp[1] - r[1]) / h;
        }
        const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        const double scale = std::max({std::abs(jac[0][0]), std::abs(jac[0][1]),
                                       std::abs(jac[1][0]), std::abs(jac[1][1]),
                                       1e-300});
        if (std::abs(det) <= 1e-14 * scale * scale) {
            throw SingularJacobianError(
                "solve_2d: finite-difference Jacobian is singular");
        }
        const std::array<double, 2> step = {
            (-r[0] * jac[1][1] + r[1] * jac[0][1]) / det,
            (-r[1] * jac[0][0] + r[0] * jac[1][0]) / det};

        const double base_norm = norm2(r);
        double lambda = 1.0;
        bool accepted = false;
        std::array<double, 2> x_next{}, r_next{};
        for (int halvings = 0; halvings <= 20; ++halvings) {
            x_next = bounds.clamp({x[0] + lambda * step[0],
                                   x[1] + lambda * step[1]});
            r_next = system(x_next);
            if (std::isfinite(r_next[0]) && std::isfinite(r_next[1]) &&
                norm2(r_next) < base_norm) {
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        result.iterations = it + 1;
        if (!accepted) {
            result.root = x;
            result.residual_norm = norm_inf(r);
            return result;
        }
        x = x_next;
        r = r_next;
        result.root = x;
        result.residual_norm = norm_inf(r);
    }
    result.converged = norm_inf(r) <= tol;
    return result;
}

} // namespace delaunay
