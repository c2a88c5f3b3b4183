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

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "delaunay/numerics.hpp"
#include "delaunay/roulette.hpp"
#include "delaunay/surface.hpp"

namespace delaunay {

enum class FitKind { Nodoid1, Unduloid, Catenoid };

/// Target of a constrained fit: enclosed volume over the symmetric meridian
/// range [-t0, t0] and meridian radius at the endpoints. For the catenoid
/// t0 is solved for, not prescribed.
struct FitRequest {
    FitKind kind = FitKind::Nodoid1;
    double volume = 0.0;
    double radius = 0.0;
    double t0 = 0.0;

    void validate() const {
        if (!(volume > 0.0) || !std::isfinite(volume)) {
            throw std::invalid_argument("FitRequest: volume must be > 0");
        }
        if (!(radius > 0.0) || !std::isfinite(radius)) {
            throw std::invalid_argument("FitRequest: radius must be > 0");
        }
        if (kind != FitKind::Catenoid &&
            (!(t0 > 0.0) || !std::isfinite(t0))) {
            throw std::invalid_argument("FitRequest: t0 must be > 0");
        }
    }
};

/// Converged fit: the recovered conic, the meridian half-range t0, the
/// re-verified scaled residuals (volume, radius), and iteration count.
struct FitResult {
    ConicSpec conic;
    double t0 = 0.0;
    std::array<double, 2> residuals{0.0, 0.0};
    int iterations = 0;
};

/// Thrown when a fit fails to converge or the target is infeasible.
/// Carries the last iterate in the solver's coordinates and its residuals.
class FitError : public std::runtime_error {
public:
    FitError(const std::string& message, std::array<double, 2> last_iterate,
             std::array<double, 2> residuals, int iterations)
        : std::runtime_error(message), last_iterate_(last_iterate),
          residuals_(residuals), iterations_(iterations) {}

    const std::array<double, 2>& last_iterate() const noexcept {
        return last_iterate_;
    }
    const std::array<double, 2>& residuals() const noexcept {
        return residuals_;
    }
    int iterations() const noexcept { return iterations_; }

private:
    std::array<double, 2> last_iterate_;
    std::array<double, 2> residuals_;
    int iterations_;
};

namespace detail {

inline constexpr double kFitTol = 1e-8;
inline constexpr double kSolveQuadTol = 1e-10;  // inside Newton residuals
inline constexpr double kVerifyQuadTol = 1e-12; // post-hoc re-verification

// Scaled residuals of the two-constraint system for a meridian whose
// surface spec is already built: (volume/V - 1, radius(t0)/r - 1).
inline std::array<double, 2> fit_residuals(const RouletteSpec& meridian,
                                           const FitRequest& req,
                                           double quad_tol) {
    const SurfaceSpec surface = SurfaceSpec::of(meridian);
    const double volume =
        volume_of_revolution(surface, -req.t0, req.t0, quad_tol, quad_tol);
    const double radius = roulette_eval(meridian, req.t0).radius;
    return {volume / req.volume - 1.0, radius / req.radius - 1.0};
}

} // namespace detail

/// Fit a nodoid (kind-1 nodary meridian) to the requested volume and
/// endpoint radius at +-t0. Damped Newton on the hyperbola axes (a, b) from
/// the initial guess a = b = radius, iterates confined to
/// (1e-6 radius, 1e3 radius)^2. Residuals are dimensionless (volume scaled
/// by the target volume, radius by the target radius) and re-verified with
/// independent tighter quadrature before returning.
inline FitResult fit_nodoid(const FitRequest& req) {
    req.validate();
    if (req.kind != FitKind::Nodoid1) {
        throw std::invalid_argument("fit_nodoid: request kind mismatch");
    }
    const double r = req.radius;
    const auto system = [&](std::array<double, 2> x) -> std::array<double, 2> {
        const auto nan = std::numeric_limits<double>::quiet_NaN();
        if (!(x[0] > 0.0) || !(x[1] > 0.0)) {
            return {nan, nan};
        }
        return detail::fit_residuals(RouletteSpec::nodary1(x[0], x[1]), req,
                                     detail::kSolveQuadTol);
    };
    Bounds2 bounds;
    bounds.lo = {1e-6 * r, 1e-6 * r};
    bounds.hi = {1e3 * r, 1e3 * r};
    const RootResult2 solve =
        solve_2d(system, {r, r}, detail::kFitTol, 25, bounds);
    if (!solve.converged) {
        throw FitError("fit_nodoid: Newton iteration did not converge",
                       solve.root, system(solve.root), solve.iterations);
    }

    const RouletteSpec meridian =
        RouletteSpec::nodary1(solve.root[0], solve.root[1]);
    const auto verified =
        detail::fit_residuals(meridian, req, detail::kVerifyQuadTol);
    if (std::max(std::abs(verified[0]), std::abs(verified[1])) >
        detail::kFitTol) {
        throw FitError("fit_nodoid: re-verification exceeded tolerance",
                       solve.root, verified, solve.iterations);
    }
    return {meridian.conic, req.t0, verified, solve.iterations};
}

/// Fit an unduloid (kind-1 undulary meridian) to the requested volume and
/// endpoint radius at +-t0. Solved in the (a, c) chart, which is smooth at
/// the cylinder limit c = 0 where the (a, b) chart has a square-root
/// singularity; the initial guess (radius, 0) is the degenerate cylinder
/// a = b = radius. Iterates with c >= a are rejected by the damping.
inline FitResult fit_unduloid(const FitRequest& req) {
    req.validate();
    if (req.kind != FitKind::Unduloid) {
        throw std::invalid_argument("fit_unduloid: request kind mismatch");
    }
    const double r = req.radius;
    const auto ellipse_from = [](double a, double c) {
        return ConicSpec::ellipse(a, std::sqrt((a - c) * (a + c)));
    };
    const auto system = [&](std::array<double, 2> x) -> std::array<double, 2> {
        const double a = x[0];
        const double c = x[1];
        const auto nan = std::numeric_limits<double>::quiet_NaN();
        if (!(a > 0.0) || c < 0.0 || c >= a * (1.0 - 1e-12)) {
            return {nan, nan};
        }
        const RouletteSpec meridian =
            RouletteSpec::make(ellipse_from(a, c), RouletteKind::Undulary1);
        return detail::fit_residuals(meridian, req, detail::kSolveQuadTol);
    };
    Bounds2 bounds;
    bounds.lo = {1e-6 * r, 0.0};
    bounds.hi = {1e3 * r, 1e3 * r};
    const RootResult2 solve =
        solve_2d(system, {r, 0.0}, detail::kFitTol, 25, bounds);
    if (!solve.converged) {
        throw FitError("fit_unduloid: Newton iteration did not converge",
                       solve.root, system(solve.root), solve.iterations);
    }

    const ConicSpec conic = ellipse_from(solve.root[0], solve.root[1]);
    const RouletteSpec meridian =
        RouletteSpec::make(conic, RouletteKind::Undulary1);
    const auto verified =
        detail::fit_residuals(meridian, req, detail::kVerifyQuadTol);
    if (std::max(std::abs(verified[0]), std::abs(verified[1])) >
        detail::kFitTol) {
        throw FitError("fit_unduloid: re-verification exceeded tolerance",
                       solve.root, verified, solve.iterations);
    }
    return {conic, req.t0, verified, solve.iterations};
}

/// Fit a catenoid to the requested volume and endpoint radius, solving for
/// both the parabola scale b and the half-range t0. The radius equation
/// b cosh t0 = r pins t0 = arccosh(r/b), leaving the one-dimensional volume
/// equation pi b^3 (t0 + sinh t0 cosh t0) = V. That map rises from 0 to a
/// maximum and falls back to 0 as b runs over (0, r); the root is taken on
/// the outer (larger-b) branch deterministically. Targets above the maximum
/// are infeasible.
inline FitResult fit_catenoid(const FitRequest& req) {
    req.validate();
    if (req.kind != FitKind::Catenoid) {
        throw std::invalid_argument("fit_catenoid: request kind mismatch");
    }
    const double r = req.radius;
    const auto volume_at = [&](double b) {
        const double t0 = std::acosh(r / b);
        return std::numbers::pi * b * b * b *
               (t0 + std::sinh(t0) * std::cosh(t0));
    };

    // Golden-section maximum of the volume curve for the feasibility split.
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = 1e-6 * r;
    double hi = r * (1.0 - 1e-12);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = volume_at(x1);
    double f2 = volume_at(x2);
    for (int i = 0; i < 200 && (hi - lo) > 1e-13 * r; ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = volume_at(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = volume_at(x1);
        }
    }
    const double b_peak = 0.5 * (lo + hi);
    const double volume_peak = volume_at(b_peak);
    if (req.volume > volume_peak) {
        throw FitError("fit_catenoid: target volume exceeds the attainable "
                       "maximum for this radius",
                       {b_peak, std::acosh(r / b_peak)},
                       {req.volume / volume_peak - 1.0, 0.0}, 0);
    }

    const auto residual = [&](double b) {
        return volume_at(b) / req.volume - 1.0;
    };
    RootResult root;
    try {
        root = find_root_1d(residual, b_peak, r * (1.0 - 1e-12), 1e-14);
    } catch (const BracketError&) {
        throw FitError("fit_catenoid: target volume below the resolvable "
                       "range on the outer branch",
                       {b_peak, std::acosh(r / b_peak)},
                       {residual(b_peak), 0.0}, 0);
    }
    if (!root.converged) {
        throw FitError("fit_catenoid: root search did not converge",
                       {root.root, std::acosh(r / root.root)},
                       {residual(root.root), 0.0}, root.iterations);
    }

    const double b = root.root;
    const double t0 = std::acosh(r / b);
    const RouletteSpec meridian = RouletteSpec::catenary(b);
    const SurfaceSpec surface = SurfaceSpec::of(meridian);
    const double volume =
        volume_of_revolution(surface, -t0, t0, detail::kVerifyQuadTol,
                             detail::kVerifyQuadTol);
    const std::array<double, 2> verified = {
        volume / req.volume - 1.0,
        roulette_eval(meridian, t0).radius / req.radius - 1.0};
    if (std::max(std::abs(verified[0]), std::abs(verified[1])) >
        detail::kFitTol) {
        throw FitError("fit_catenoid: re-verification exceeded tolerance",
                       {b, t0}, verified, root.iterations);
    }
    return {meridian.conic, t0, verified, root.iterations};
}

/// Dispatch on the request kind.
inline FitResult fit(const FitRequest& req) {
    switch (req.kind) {
    case FitKind::Nodoid1:
        return fit_nodoid(req);
    case FitKind::Unduloid:
        return fit_unduloid(req);
    case FitKind::Catenoid:
        return fit_catenoid(req);
    }
    throw std::invalid_argument("fit: unknown kind");
}

/// One entry of a constant-volume family: a fit attempt with its outcome.
/// Failed entries carry the error message; they do not abort the family.
struct FamilyFit {
    std::string label;
    FitRequest request;
    bool converged = false;
    FitResult result;
    std::string message;
};

/// Constant-volume family: surfaces enclosing volume V with radius r at the
/// meridian endpoints, one per requested t0 for unduloids and nodoids, the
/// catenoid member (its t0 is solved), and the analytic cylinder anchor
/// (radius r, height V / (pi r^2), emitted without solving). Entries are
/// ordered outside-in: cylinder, unduloids, catenoid, nodoids.
inline std::vector<FamilyFit> constant_volume_family(
    double volume, double radius, const std::vector<double>& t0_grid) {
    if (!(volume > 0.0) || !(radius > 0.0)) {
        throw std::invalid_argument(
            "constant_volume_family: volume and radius must be > 0");
    }
    if (t0_grid.empty()) {
        throw std::invalid_argument(
            "constant_volume_family: t0 grid must be nonempty");
    }
    std::vector<FamilyFit> entries;

    {
        FamilyFit anchor;
        anchor.label = "cylinder";
        anchor.request = {FitKind::Unduloid, volume, radius,
                          volume / (2.0 * std::numbers::pi * radius * radius *
                                    radius)};
        anchor.converged = true;
        anchor.result = {ConicSpec::ellipse(radius, radius),
                         anchor.request.t0,
                         {0.0, 0.0},
                         0};
        entries.push_back(anchor);
    }

    const auto short_num = [](double value) {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%g", value);
        return std::string(buffer);
    };
    const auto attempt = [&entries](const std::string& label,
                                    const FitRequest& req) {
        FamilyFit entry;
        entry.label = label;
        entry.request = req;
        try {
            entry.result = fit(req);
            entry.converged = true;
        } catch (const FitError& error) {
            entry.converged = false;
            entry.message = error.what();
        }
        entries.push_back(entry);
    };

    for (double t0 : t0_grid) {
        attempt("unduloid t0=" + short_num(t0),
                {FitKind::Unduloid, volume, radius, t0});
    }
    attempt("catenoid", {FitKind::Catenoid, volume, radius, 0.0});
    for (double t0 : t0_grid) {
        attempt("nodoid t0=" + short_num(t0),
                {FitKind::Nodoid1, volume, radius, t0});
    }
    return entries;
}

} // namespace delaunay
