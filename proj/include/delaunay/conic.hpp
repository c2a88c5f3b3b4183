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
#include <stdexcept>
#include <string>
#include <vector>

#include "delaunay/numerics.hpp"

namespace delaunay {

enum class ConicKind { Parabola, Ellipse, Hyperbola };

/// Point in the conic plane.
struct PlanePoint2 {
    double x = 0.0;
    double y = 0.0;
};

/// Thrown when a tangent direction cannot be normalized.
class DegenerateTangentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A conic in the standard position used throughout:
///   parabola   (b sinh^2 t, 2 b sinh t)      which traces y^2 = 4 b x,
///   ellipse    (a cos t, b sin t),
///   hyperbola  (a cosh t, b sinh t)          right branch.
///
/// `c` is the derived focal distance: sqrt(a^2 - b^2) for the ellipse,
/// sqrt(a^2 + b^2) for the hyperbola, unused for the parabola. Build specs
/// through the factories; they validate and fill `c`.
struct ConicSpec {
    ConicKind kind = ConicKind::Parabola;
    double a = 0.0; ///< semi-major axis; unused for Parabola
    double b = 0.0; ///< semi-minor axis, or the parabola scale
    double c = 0.0; ///< focal distance; unused for Parabola

    static ConicSpec parabola(double b) {
        if (!(b > 0.0) || !std::isfinite(b)) {
            throw std::invalid_argument("ConicSpec: parabola requires b > 0");
        }
        return {ConicKind::Parabola, 0.0, b, 0.0};
    }

    static ConicSpec ellipse(double a, double b) {
        if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) ||
            !std::isfinite(b)) {
            throw std::invalid_argument(
                "ConicSpec: ellipse requires a > 0 and b > 0");
        }
        if (b > a) {
            throw std::invalid_argument("ConicSpec: ellipse requires b <= a");
        }
        // b == a is the admitted degenerate (cylinder) limit with c == 0.
        const double c = std::sqrt(std::max(0.0, (a - b) * (a + b)));
        return {ConicKind::Ellipse, a, b, c};
    }

    static ConicSpec hyperbola(double a, double b) {
        if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) ||
            !std::isfinite(b)) {
            throw std::invalid_argument(
                "ConicSpec: hyperbola requires a > 0 and b > 0");
        }
        return {ConicKind::Hyperbola, a, b, std::hypot(a, b)};
    }

    void validate() const {
        switch (kind) {
        case ConicKind::Parabola:
            if (!(b > 0.0)) {
                throw std::invalid_argument("ConicSpec: parabola b <= 0");
            }
            return;
        case ConicKind::Ellipse:
            if (!(a > 0.0) || !(b > 0.0) || b > a) {
                throw std::invalid_argument("ConicSpec: invalid ellipse axes");
            }
            return;
        case ConicKind::Hyperbola:
            if (!(a > 0.0) || !(b > 0.0)) {
                throw std::invalid_argument(
                    "ConicSpec: invalid hyperbola axes");
            }
            return;
        }
        throw std::invalid_argument("ConicSpec: unknown kind");
    }
};

/// Point on the conic at parameter t.
inline PlanePoint2 conic_point(const ConicSpec& conic, double t) {
    conic.validate();
    switch (conic.kind) {
    case ConicKind::Parabola: {
        const double s = std::sinh(t);
        return {conic.b * s * s, 2.0 * conic.b * s};
    }
    case ConicKind::Ellipse:
        return {conic.a * std::cos(t), conic.b * std::sin(t)};
    case ConicKind::Hyperbola:
        return {conic.a * std::cosh(t), conic.b * std::sinh(t)};
    }
    throw std::invalid_argument("conic_point: unknown kind");
}

/// Velocity (unnormalized tangent vector) of the parametrization at t.
inline PlanePoint2 conic_velocity(const ConicSpec& conic, double t) {
    conic.validate();
    switch (conic.kind) {
    case ConicKind::Parabola:
        return {2.0 * conic.b * std::sinh(t) * std::cosh(t),
                2.0 * conic.b * std::cosh(t)};
    case ConicKind::Ellipse:
        return {-conic.a * std::sin(t), conic.b * std::cos(t)};
    case ConicKind::Hyperbola:
        return {conic.a * std::sinh(t), conic.b * std::cosh(t)};
    }
    throw std::invalid_argument("conic_velocity: unknown kind");
}

/// Parametric speed |d/dt conic_point|, in closed form.
inline double conic_speed(const ConicSpec& conic, double t) {
    conic.validate();
    switch (conic.kind) {
    case ConicKind::Parabola: {
        const double ch = std::cosh(t);
        return 2.0 * conic.b * ch * ch;
    }
    case ConicKind::Ellipse: {
        const double cc = conic.c * std::cos(t);
        return std::sqrt(conic.a * conic.a - cc * cc);
    }
    case ConicKind::Hyperbola: {
        const double cch = conic.c * std::cosh(t);
        return std::sqrt(cch * cch - conic.a * conic.a);
    }
    }
    throw std::invalid_argument("conic_speed: unknown kind");
}

/// Point on the conic together with the unit tangent direction at t.
struct TangentLine {
    PlanePoint2 point;
    PlanePoint2 direction; ///< unit vector along increasing t
};

inline TangentLine conic_tangent(const ConicSpec& conic, double t) {
    const PlanePoint2 p = conic_point(conic, t);
    const PlanePoint2 v = conic_velocity(conic, t);
    const double len = std::hypot(v.x, v.y);
    if (!(len > 0.0)) {
        throw DegenerateTangentError(
            "conic_tangent: zero-length derivative");
    }
    return {p, {v.x / len, v.y / len}};
}

/// Foci of the conic: [(c,0), (-c,0)] for ellipse/hyperbola, [(b,0)] for the
/// parabola (the focus of y^2 = 4 b x).
inline std::vector<PlanePoint2> conic_foci(const ConicSpec& conic) {
    conic.validate();
    if (conic.kind == ConicKind::Parabola) {
        return {{conic.b, 0.0}};
    }
    return {{conic.c, 0.0}, {-conic.c, 0.0}};
}

/// Foot of the perpendicular from the selected focus onto the tangent
/// line at t.
inline PlanePoint2 pedal_foot(const ConicSpec& conic, int focus_index,
                              double t) {
    const auto foci = conic_foci(conic);
    if (focus_index < 0 || focus_index >= static_cast<int>(foci.size())) {
        throw std::invalid_argument("pedal_foot: focus_index out of range");
    }
    const PlanePoint2 focus = foci[static_cast<std::size_t>(focus_index)];
    const TangentLine line = conic_tangent(conic, t);
    const double along = (focus.x - line.point.x) * line.direction.x +
                         (focus.y - line.point.y) * line.direction.y;
    return {line.point.x + along * line.direction.x,
            line.point.y + along * line.direction.y};
}

/// Arc length of the conic between parameters t0 <= t1. The parabola uses
/// the closed form b (t + sinh t cosh t); ellipse and hyperbola integrate
/// their closed-form speeds adaptively.
inline double conic_arclength(const ConicSpec& conic, double t0, double t1,
                              double abs_tol = 1e-10, double rel_tol = 1e-10) {
    conic.validate();
    if (!(t0 <= t1)) {
        throw std::invalid_argument("conic_arclength: requires t0 <= t1");
    }
    if (conic.kind == ConicKind::Parabola) {
        const auto antiderivative = [&](double t) {
            return conic.b * (t + std::sinh(t) * std::cosh(t));
        };
        return antiderivative(t1) - antiderivative(t0);
    }
    const auto speed = [&](double t) { return conic_speed(conic, t); };
    return integrate(speed, t0, t1, abs_tol, rel_tol).value;
}

} // namespace delaunay
