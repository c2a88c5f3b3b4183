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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "delaunay/numerics.hpp"
#include "delaunay/roulette.hpp"

namespace delaunay {

/// Thrown when a profile jet is irregular (zero speed or nonpositive radius).
class DegeneracyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& u, const Vec3& v) {
    return {u.x + v.x, u.y + v.y, u.z + v.z};
}
inline Vec3 operator-(const Vec3& u, const Vec3& v) {
    return {u.x - v.x, u.y - v.y, u.z - v.z};
}
inline Vec3 operator*(double s, const Vec3& v) {
    return {s * v.x, s * v.y, s * v.z};
}
inline double dot(const Vec3& u, const Vec3& v) {
    return u.x * v.x + u.y * v.y + u.z * v.z;
}
inline Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
            u.x * v.y - u.y * v.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// A surface of revolution: the meridian revolved about the axial axis,
///   x(t, v) = (f(t) cos v, f(t) sin v, g(t))
/// with f the meridian radius and g the axial coordinate. Catenary meridians
/// generate catenoids, undularies unduloids, nodaries nodoids.
struct SurfaceSpec {
    RouletteSpec meridian;

    static SurfaceSpec of(const RouletteSpec& meridian) {
        meridian.validate();
        return {meridian};
    }

    void validate() const { meridian.validate(); }
};

/// Parameter rectangle [t1, t2] x [v1, v2] of a surface patch.
struct PatchDomain {
    double t1 = 0.0;
    double t2 = 0.0;
    double v1 = 0.0;
    double v2 = 0.0;

    void validate() const {
        if (!std::isfinite(t1) || !std::isfinite(t2) || !std::isfinite(v1) ||
            !std::isfinite(v2)) {
            throw std::invalid_argument("PatchDomain: bounds must be finite");
        }
        if (!(t1 < t2)) {
            throw std::invalid_argument("PatchDomain: requires t1 < t2");
        }
        const double span = v2 - v1;
        if (!(span > 0.0) || span > 2.0 * std::numbers::pi + 1e-12) {
            throw std::invalid_argument(
                "PatchDomain: requires 0 < v2 - v1 <= 2 pi");
        }
    }

    double v_span() const { return v2 - v1; }
};

/// Coefficients of the first (E, F, G) and second (L, M, N) fundamental
/// forms. F and M vanish identically for surfaces of revolution.
struct FundamentalForms {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
    double L = 0.0;
    double M = 0.0;
    double N = 0.0;
};

/// Principal, mean, Gaussian, and parallel-geodesic curvatures at a point.
/// kg is the geodesic curvature of the parallel circle through the point.
struct CurvatureBundle {
    double k1 = 0.0;
    double k2 = 0.0;
    double H = 0.0;
    double K = 0.0;
    double kg = 0.0;
};

/// The revolved surface point x(t, v).
inline Vec3 surface_point(const SurfaceSpec& spec, double t, double v) {
    spec.validate();
    const ProfilePoint p = roulette_eval(spec.meridian, t);
    return {p.radius * std::cos(v), p.radius * std::sin(v), p.axial};
}

/// Unit normal of the revolved surface, from the generic cross product
/// x_t x x_v normalized. For the meridians here this reproduces the
/// per-kind closed-form normals with no sign adjustments.
inline Vec3 surface_normal(const SurfaceSpec& spec, double t, double v) {
    spec.validate();
    const ProfileJet jet = detail::local_jet(spec.meridian, t);
    const double speed =
        std::hypot(jet.radius_dt, jet.axial_dt);
    if (!(speed > 0.0)) {
        throw DegeneracyError("surface_normal: irregular meridian point");
    }
    return {-jet.axial_dt * std::cos(v) / speed,
            -jet.axial_dt * std::sin(v) / speed, jet.radius_dt / speed};
}

/// First and second fundamental form coefficients from a profile jet.
inline FundamentalForms fundamental_forms(const ProfileJet& jet) {
    const double metric_t =
        jet.radius_dt * jet.radius_dt + jet.axial_dt * jet.axial_dt;
    if (!(metric_t > 0.0)) {
        throw DegeneracyError("fundamental_forms: irregular jet");
    }
    if (!(jet.radius > 0.0)) {
        throw DegeneracyError("fundamental_forms: requires radius > 0");
    }
    const double speed = std::sqrt(metric_t);
    FundamentalForms forms;
    forms.E = metric_t;
    forms.F = 0.0;
    forms.G = jet.radius * jet.radius;
    forms.L =
        (jet.radius_dt * jet.axial_dtt - jet.radius_dtt * jet.axial_dt) /
        speed;
    forms.M = 0.0;
    forms.N = jet.radius * jet.axial_dt / speed;
    return forms;
}

/// Curvatures from a profile jet through the generic revolution formulas:
/// k1 = L/E, k2 = N/G, H = (k1 + k2)/2, K = LN/(EG), kg = f'/(f sqrt(E)).
inline CurvatureBundle curvatures_generic(const ProfileJet& jet) {
    const FundamentalForms forms = fundamental_forms(jet);
    CurvatureBundle bundle;
    bundle.k1 = forms.L / forms.E;
    bundle.k2 = forms.N / forms.G;
    bundle.H = 0.5 * (bundle.k1 + bundle.k2);
    bundle.K = forms.L * forms.N / (forms.E * forms.G);
    bundle.kg = jet.radius_dt / (jet.radius * std::sqrt(forms.E));
    return bundle;
}

/// Curvatures from the per-kind closed-form tables. Agrees with
/// curvatures_generic(roulette_jet(...)) to tight tolerance; the constant
/// mean curvature is exact: 0 for catenoids, 1/(2a) for unduloids,
/// -1/(2a) for nodoids.
inline CurvatureBundle curvatures_closed_form(const SurfaceSpec& spec,
                                              double t) {
    spec.validate();
    const double a = spec.meridian.conic.a;
    const double b = spec.meridian.conic.b;
    const double c = spec.meridian.conic.c;
    CurvatureBundle bundle;
    switch (spec.meridian.kind) {
    case RouletteKind::Catenary: {
        const double ch = std::cosh(t);
        bundle.k1 = -1.0 / (b * ch * ch);
        bundle.k2 = 1.0 / (b * ch * ch);
        bundle.H = 0.0;
        bundle.K = -1.0 / (b * b * ch * ch * ch * ch);
        bundle.kg = std::sinh(t) / (b * ch * ch);
        return bundle;
    }
    case RouletteKind::Undulary1: {
        const double den = a - c * std::cos(t);
        bundle.k2 = 1.0 / den;
        bundle.k1 = -c * std::cos(t) / (a * den);
        bundle.H = 0.5 / a;
        bundle.K = -c * std::cos(t) / (a * den * den);
        bundle.kg = c * std::sin(t) / (b * den);
        return bundle;
    }
    case RouletteKind::Undulary2: {
        const double den = a + c * std::cos(t);
        bundle.k2 = 1.0 / den;
        bundle.k1 = c * std::cos(t) / (a * den);
        bundle.H = 0.5 / a;
        bundle.K = c * std::cos(t) / (a * den * den);
        bundle.kg = -c * std::sin(t) / (b * den);
        return bundle;
    }
    case RouletteKind::Nodary1: {
        const double den = c * std::cosh(t) - a;
        bundle.k2 = 1.0 / den;
        bundle.k1 = -c * std::cosh(t) / (a * den);
        bundle.H = -0.5 / a;
        bundle.K = -c * std::cosh(t) / (a * den * den);
        bundle.kg = c * std::sinh(t) / (b * den);
        return bundle;
    }
    case RouletteKind::Nodary2: {
        const double den = c * std::cosh(t) + a;
        bundle.k2 = -1.0 / den;
        bundle.k1 = -c * std::cosh(t) / (a * den);
        bundle.H = -0.5 / a;
        bundle.K = c * std::cosh(t) / (a * den * den);
        bundle.kg = -c * std::sinh(t) / (b * den);
        return bundle;
    }
    }
    throw std::invalid_argument("curvatures_closed_form: unknown kind");
}

namespace detail {

// kg * |x_v| = f' / sqrt(E): the per-parallel boundary density whose
// t-derivative is -K |x_t| |x_v|.
inline double parallel_turning(const SurfaceSpec& spec, double t) {
    const ProfileJet jet = local_jet(spec.meridian, t);
    return jet.radius_dt / std::hypot(jet.radius_dt, jet.axial_dt);
}

} // namespace detail

/// Total curvature of the patch, integral of K over the surface measure, in
/// closed form: -(v2 - v1) * [f'/sqrt(E)] evaluated between the t bounds.
inline double total_curvature(const SurfaceSpec& spec,
                              const PatchDomain& patch) {
    spec.validate();
    patch.validate();
    return -patch.v_span() * (detail::parallel_turning(spec, patch.t2) -
                              detail::parallel_turning(spec, patch.t1));
}

/// Total curvature by adaptive quadrature of K sqrt(EG) (the v-integral is
/// exact: the integrand does not depend on v). Numeric twin of
/// total_curvature, used for cross-checks.
inline double total_curvature_quadrature(const SurfaceSpec& spec,
                                         const PatchDomain& patch,
                                         double abs_tol = 1e-9,
                                         double rel_tol = 1e-9) {
    spec.validate();
    patch.validate();
    const auto integrand = [&](double t) {
        const ProfileJet jet = detail::local_jet(spec.meridian, t);
        const CurvatureBundle bundle = curvatures_generic(jet);
        return bundle.K * jet.radius *
               std::hypot(jet.radius_dt, jet.axial_dt);
    };
    return patch.v_span() *
           integrate(integrand, patch.t1, patch.t2, abs_tol, rel_tol).value;
}

/// Gauss-Bonnet residual of the patch:
///   integral of K dsigma + (v2 - v1) * ([kg f](t2) - [kg f](t1)),
/// the boundary terms being the parallel geodesic-curvature integrals with
/// the orientation induced by the surface. Vanishes identically for these
/// surfaces; the returned value is the numerical residual.
inline double gauss_bonnet_residual(const SurfaceSpec& spec,
                                    const PatchDomain& patch,
                                    double abs_tol = 1e-9,
                                    double rel_tol = 1e-9) {
    const double interior =
        total_curvature_quadrature(spec, patch, abs_tol, rel_tol);
    const double boundary =
        patch.v_span() * (detail::parallel_turning(spec, patch.t2) -
                          detail::parallel_turning(spec, patch.t1));
    return interior + boundary;
}

/// Signed enclosed-volume functional pi * integral of f^2 g' dt. Negative
/// contributions occur where the meridian runs backward along the axis
/// (nodary kind 2); callers needing magnitudes take the absolute value.
inline double volume_of_revolution(const SurfaceSpec& spec, double t0,
                                   double t1, double abs_tol = 1e-10,
                                   double rel_tol = 1e-10) {
    spec.validate();
    if (!(t0 <= t1)) {
        throw std::invalid_argument(
            "volume_of_revolution: requires t0 <= t1");
    }
    const auto integrand = [&](double t) {
        const ProfileJet jet = detail::local_jet(spec.meridian, t);
        return jet.radius * jet.radius * jet.axial_dt;
    };
    return std::numbers::pi *
           integrate(integrand, t0, t1, abs_tol, rel_tol).value;
}

/// Lateral (surface) area of the patch: (v2 - v1) * integral of
/// f sqrt((f')^2 + (g')^2) dt.
inline double lateral_area(const SurfaceSpec& spec, const PatchDomain& patch,
                           double abs_tol = 1e-10, double rel_tol = 1e-10) {
    spec.validate();
    patch.validate();
    const auto integrand = [&](double t) {
        const ProfileJet jet = detail::local_jet(spec.meridian, t);
        return jet.radius * std::hypot(jet.radius_dt, jet.axial_dt);
    };
    return patch.v_span() *
           integrate(integrand, patch.t1, patch.t2, abs_tol, rel_tol).value;
}

} // namespace delaunay
