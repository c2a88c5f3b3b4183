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
#include <vector>

#include "delaunay/conic.hpp"
#include "delaunay/numerics.hpp"

namespace delaunay {

/// Roulette of a conic focus rolling on a line: the meridian curves of the
/// constant-mean-curvature surfaces of revolution. Kind 1 uses the focus on
/// the positive axis, kind 2 the opposite one.
enum class RouletteKind { Catenary, Undulary1, Undulary2, Nodary1, Nodary2 };

/// A roulette: generating conic, curve selector, and the parameter value
/// t_origin at which rolling starts (the abscissa is measured from there).
/// Build through the factories; they validate the conic/kind pairing and
/// precompute the abscissa offset.
struct RouletteSpec {
    ConicSpec conic;
    RouletteKind kind = RouletteKind::Catenary;
    double t_origin = 0.0;
    double axial_offset = 0.0; ///< conic arc length from 0 to t_origin

    static RouletteSpec catenary(double b, double t_origin = 0.0) {
        return make(ConicSpec::parabola(b), RouletteKind::Catenary, t_origin);
    }
    static RouletteSpec undulary1(double a, double b, double t_origin = 0.0) {
        return make(ConicSpec::ellipse(a, b), RouletteKind::Undulary1,
                    t_origin);
    }
    static RouletteSpec undulary2(double a, double b, double t_origin = 0.0) {
        return make(ConicSpec::ellipse(a, b), RouletteKind::Undulary2,
                    t_origin);
    }
    static RouletteSpec nodary1(double a, double b, double t_origin = 0.0) {
        return make(ConicSpec::hyperbola(a, b), RouletteKind::Nodary1,
                    t_origin);
    }
    static RouletteSpec nodary2(double a, double b, double t_origin = 0.0) {
        return make(ConicSpec::hyperbola(a, b), RouletteKind::Nodary2,
                    t_origin);
    }

    static RouletteSpec make(const ConicSpec& conic, RouletteKind kind,
                             double t_origin = 0.0) {
        RouletteSpec spec{conic, kind, t_origin, 0.0};
        spec.validate();
        if (t_origin != 0.0) {
            spec.axial_offset =
                t_origin > 0.0 ? conic_arclength(conic, 0.0, t_origin)
                               : -conic_arclength(conic, t_origin, 0.0);
        }
        return spec;
    }

    void validate() const {
        conic.validate();
        if (!std::isfinite(t_origin)) {
            throw std::invalid_argument("RouletteSpec: t_origin not finite");
        }
        const ConicKind required = [&] {
            switch (kind) {
            case RouletteKind::Catenary:
                return ConicKind::Parabola;
            case RouletteKind::Undulary1:
            case RouletteKind::Undulary2:
                return ConicKind::Ellipse;
            case RouletteKind::Nodary1:
            case RouletteKind::Nodary2:
                return ConicKind::Hyperbola;
            }
            throw std::invalid_argument("RouletteSpec: unknown kind");
        }();
        if (conic.kind != required) {
            throw std::invalid_argument(
                "RouletteSpec: conic kind does not match roulette kind");
        }
    }
};

/// Point of the meridian: axial coordinate (along the rolling line, the
/// future axis of revolution) and radius (distance from the line).
struct ProfilePoint {
    double axial = 0.0;
    double radius = 0.0;
};

/// Meridian point together with its first and second t-derivatives.
struct ProfileJet {
    double radius = 0.0;
    double axial = 0.0;
    double radius_dt = 0.0;
    double axial_dt = 0.0;
    double radius_dtt = 0.0;
    double axial_dtt = 0.0;
};

namespace detail {

// Scalar factors shared by the closed forms. For the ellipse,
// w = sqrt(a^2 - c^2 cos^2 t); for the hyperbola, w = sqrt(c^2 cosh^2 t
// - a^2). The first derivatives of every non-catenary roulette are
// scale * (trig, b) with scale = +-ab / (w * p) and p the per-kind
// denominator; scale' = -scale * (w'/w + p'/p).
struct RouletteFactors {
    double w;        // conic speed
    double w_dt;
    double p;        // denominator a +- c cos t or c cosh t -+ a
    double p_dt;
    double scale;    // signed h-factor
    double trig;     // c sin t or c sinh t (radius_dt = trig * scale)
    double trig_dt;  // c cos t or c cosh t
};

inline RouletteFactors roulette_factors(const RouletteSpec& spec, double t) {
    const double a = spec.conic.a;
    const double b = spec.conic.b;
    const double c = spec.conic.c;
    RouletteFactors k{};
    switch (spec.kind) {
    case RouletteKind::Undulary1:
    case RouletteKind::Undulary2: {
        const double cs = std::cos(t);
        const double sn = std::sin(t);
        k.w = std::sqrt(a * a - c * c * cs * cs);
        k.w_dt = c * c * cs * sn / k.w;
        if (spec.kind == RouletteKind::Undulary1) {
            k.p = a + c * cs;
            k.p_dt = -c * sn;
            k.trig = c * sn;
        } else {
            k.p = a - c * cs;
            k.p_dt = c * sn;
            k.trig = -c * sn;
        }
        k.trig_dt = (spec.kind == RouletteKind::Undulary1 ? 1.0 : -1.0) * c *
                    cs;
        k.scale = a * b / (k.w * k.p);
        return k;
    }
    case RouletteKind::Nodary1:
    case RouletteKind::Nodary2: {
        const double ch = std::cosh(t);
        const double sh = std::sinh(t);
        k.w = std::sqrt(c * c * ch * ch - a * a);
        k.w_dt = c * c * ch * sh / k.w;
        k.trig = c * sh;
        k.trig_dt = c * ch;
        if (spec.kind == RouletteKind::Nodary1) {
            k.p = c * ch + a;
            k.scale = a * b / (k.w * k.p);
        } else {
            k.p = c * ch - a;
            k.scale = -a * b / (k.w * k.p);
        }
        k.p_dt = c * sh;
        return k;
    }
    case RouletteKind::Catenary:
        break;
    }
    throw std::invalid_argument("roulette_factors: catenary has no factors");
}

// Jet with the axial component left at zero: everything the pointwise
// differential geometry needs, without the abscissa quadrature.
inline ProfileJet local_jet(const RouletteSpec& spec, double t) {
    spec.validate();
    ProfileJet jet{};
    const double a = spec.conic.a;
    const double b = spec.conic.b;
    const double c = spec.conic.c;
    if (spec.kind == RouletteKind::Catenary) {
        jet.radius = b * std::cosh(t);
        jet.radius_dt = b * std::sinh(t);
        jet.axial_dt = b;
        jet.radius_dtt = jet.radius;
        return jet;
    }
    const auto k = roulette_factors(spec, t);
    const double scale_dt = -k.scale * (k.w_dt / k.w + k.p_dt / k.p);
    switch (spec.kind) {
    case RouletteKind::Undulary1:
        jet.radius = b * (a - c * std::cos(t)) / k.w;
        break;
    case RouletteKind::Undulary2:
        jet.radius = b * (a + c * std::cos(t)) / k.w;
        break;
    case RouletteKind::Nodary1:
        jet.radius = b * (c * std::cosh(t) - a) / k.w;
        break;
    case RouletteKind::Nodary2:
        jet.radius = b * (c * std::cosh(t) + a) / k.w;
        break;
    case RouletteKind::Catenary:
        break;
    }
    jet.radius_dt = k.trig * k.scale;
    jet.axial_dt = b * k.scale;
    jet.radius_dtt = k.trig_dt * k.scale + k.trig * scale_dt;
    jet.axial_dtt = b * scale_dt;
    return jet;
}

} // namespace detail

/// Parametric speed |d/dt meridian| in closed form: b cosh t for the
/// catenary, ab / (a +- c cos t) for the undularies, ab / (c cosh t +- a)
/// for the nodaries.
inline double roulette_speed(const RouletteSpec& spec, double t) {
    spec.validate();
    const double a = spec.conic.a;
    const double b = spec.conic.b;
    const double c = spec.conic.c;
    switch (spec.kind) {
    case RouletteKind::Catenary:
        return b * std::cosh(t);
    case RouletteKind::Undulary1:
        return a * b / (a + c * std::cos(t));
    case RouletteKind::Undulary2:
        return a * b / (a - c * std::cos(t));
    case RouletteKind::Nodary1:
        return a * b / (c * std::cosh(t) + a);
    case RouletteKind::Nodary2:
        return a * b / (c * std::cosh(t) - a);
    }
    throw std::invalid_argument("roulette_speed: unknown kind");
}

/// Meridian point at parameter t, abscissa measured from t_origin.
///
/// The abscissa combines the conic arc length with a boundary projection
/// term; the radius is a closed-form quotient. Ellipse/hyperbola arc
/// lengths are evaluated by adaptive quadrature.
inline ProfilePoint roulette_eval(const RouletteSpec& spec, double t) {
    spec.validate();
    const double a = spec.conic.a;
    const double b = spec.conic.b;
    const double c = spec.conic.c;
    if (spec.kind == RouletteKind::Catenary) {
        return {b * t - spec.axial_offset, b * std::cosh(t)};
    }
    const double arc = t >= 0.0 ? conic_arclength(spec.conic, 0.0, t)
                                : -conic_arclength(spec.conic, t, 0.0);
    switch (spec.kind) {
    case RouletteKind::Undulary1: {
        const double w = std::sqrt(a * a - c * c * std::cos(t) * std::cos(t));
        const double num = a - c * std::cos(t);
        return {arc - c * std::sin(t) * num / w - spec.axial_offset,
                b * num / w};
    }
    case RouletteKind::Undulary2: {
        const double w = std::sqrt(a * a - c * c * std::cos(t) * std::cos(t));
        const double num = a + c * std::cos(t);
        return {arc + c * std::sin(t) * num / w - spec.axial_offset,
                b * num / w};
    }
    case RouletteKind::Nodary1: {
        const double w =
            std::sqrt(c * c * std::cosh(t) * std::cosh(t) - a * a);
        const double num = c * std::cosh(t) - a;
        return {arc - c * std::sinh(t) * num / w - spec.axial_offset,
                b * num / w};
    }
    case RouletteKind::Nodary2: {
        const double w =
            std::sqrt(c * c * std::cosh(t) * std::cosh(t) - a * a);
        const double num = c * std::cosh(t) + a;
        return {arc - c * std::sinh(t) * num / w - spec.axial_offset,
                b * num / w};
    }
    case RouletteKind::Catenary:
        break;
    }
    throw std::invalid_argument("roulette_eval: unknown kind");
}

/// Meridian point with analytic first and second derivatives.
inline ProfileJet roulette_jet(const RouletteSpec& spec, double t) {
    ProfileJet jet = detail::local_jet(spec, t);
    jet.axial = roulette_eval(spec, t).axial;
    return jet;
}

/// Arc length of the meridian between t0 <= t1, in closed form.
///
/// The undulary antiderivatives 2a atan(k tan(z/2)) have branch jumps at odd
/// multiples of pi; they are unwrapped with the per-period increment 2 pi a,
/// so the result is continuous and monotone on all of R.
inline double roulette_arclength(const RouletteSpec& spec, double t0,
                                 double t1) {
    spec.validate();
    if (!(t0 <= t1)) {
        throw std::invalid_argument("roulette_arclength: requires t0 <= t1");
    }
    const double a = spec.conic.a;
    const double b = spec.conic.b;
    const double c = spec.conic.c;
    switch (spec.kind) {
    case RouletteKind::Catenary: {
        return b * (std::sinh(t1) - std::sinh(t0));
    }
    case RouletteKind::Undulary1:
    case RouletteKind::Undulary2: {
        const double ratio = spec.kind == RouletteKind::Undulary1
                                 ? (a - c) / (a + c)
                                 : (a + c) / (a - c);
        const double k = std::sqrt(ratio);
        const auto antiderivative = [&](double z) {
            constexpr double two_pi = 2.0 * std::numbers::pi;
            const double periods = std::round(z / two_pi);
            const double reduced = z - two_pi * periods;
            return two_pi * a * periods +
                   2.0 * a * std::atan(k * std::tan(0.5 * reduced));
        };
        return antiderivative(t1) - antiderivative(t0);
    }
    case RouletteKind::Nodary1:
    case RouletteKind::Nodary2: {
        const double ratio = spec.kind == RouletteKind::Nodary1
                                 ? (c - a) / (c + a)
                                 : (c + a) / (c - a);
        const double k = std::sqrt(ratio);
        const auto antiderivative = [&](double z) {
            return 2.0 * a * std::atan(k * std::tanh(0.5 * z));
        };
        return antiderivative(t1) - antiderivative(t0);
    }
    }
    throw std::invalid_argument("roulette_arclength: unknown kind");
}

/// Total length of a nodary over all of R, via the tanh(z/2) -> +-1 limit
/// of the closed-form antiderivative. Kind 1 equals 2a atan(b/a) (the length
/// of the associated pedal arc); the two kinds sum to 2 pi a.
inline double nodary_total_length(const RouletteSpec& spec) {
    spec.validate();
    const double a = spec.conic.a;
    const double c = spec.conic.c;
    switch (spec.kind) {
    case RouletteKind::Nodary1:
        return 4.0 * a * std::atan(std::sqrt((c - a) / (c + a)));
    case RouletteKind::Nodary2:
        return 4.0 * a * std::atan(std::sqrt((c + a) / (c - a)));
    default:
        throw std::invalid_argument(
            "nodary_total_length: spec is not a nodary");
    }
}

/// Independent rolling-construction oracle.
///
/// Rolls the conic along the abscissa axis: after rolling arc length s(t)
/// from t_origin, the tangent line at P(t) lies on the axis with P at
/// coordinate s(t). The focus projects onto that line at the pedal foot Q;
/// the roulette point is (s + <F - P, T>, |F - Q|). Uses only conic
/// operations and quadrature, no roulette closed forms.
inline ProfilePoint roulette_by_rolling(const RouletteSpec& spec, double t) {
    spec.validate();
    const int focus_index = (spec.kind == RouletteKind::Undulary2 ||
                             spec.kind == RouletteKind::Nodary2)
                                ? 1
                                : 0;
    const PlanePoint2 focus = conic_foci(spec.conic)[focus_index];
    const TangentLine line = conic_tangent(spec.conic, t);
    const double arc =
        t >= spec.t_origin
            ? conic_arclength(spec.conic, spec.t_origin, t)
            : -conic_arclength(spec.conic, t, spec.t_origin);
    const double along = (focus.x - line.point.x) * line.direction.x +
                         (focus.y - line.point.y) * line.direction.y;
    const PlanePoint2 foot{line.point.x + along * line.direction.x,
                           line.point.y + along * line.direction.y};
    return {arc + along, std::hypot(focus.x - foot.x, focus.y - foot.y)};
}

/// Family of meridians sharing the total length 2 pi a: undulary pairs over
/// (-pi/2, pi/2) for ellipses with b swept from a toward 0, and nodary pairs
/// over R for hyperbolas with b swept from small toward large. Members are
/// emitted as adjacent kind-1 / kind-2 spec pairs.
inline std::vector<RouletteSpec> family_constant_length(double a,
                                                        int count_ellipse,
                                                        int count_hyperbola) {
    if (!(a > 0.0)) {
        throw std::invalid_argument("family_constant_length: requires a > 0");
    }
    if (count_ellipse < 0 || count_hyperbola < 0) {
        throw std::invalid_argument(
            "family_constant_length: counts must be >= 0");
    }
    std::vector<RouletteSpec> members;
    members.reserve(2 * static_cast<std::size_t>(count_ellipse) +
                    2 * static_cast<std::size_t>(count_hyperbola));
    for (int j = 0; j < count_ellipse; ++j) {
        // j = 0 is the b = a degenerate member (straight-segment meridian).
        const double b = a * (1.0 - static_cast<double>(j) / count_ellipse);
        members.push_back(RouletteSpec::undulary1(a, b));
        members.push_back(RouletteSpec::undulary2(a, b));
    }
    for (int j = 1; j <= count_hyperbola; ++j) {
        const double angle =
            0.5 * std::numbers::pi * j / (count_hyperbola + 1);
        const double b = a * std::tan(angle);
        members.push_back(RouletteSpec::nodary1(a, b));
        members.push_back(RouletteSpec::nodary2(a, b));
    }
    return members;
}

} // namespace delaunay
