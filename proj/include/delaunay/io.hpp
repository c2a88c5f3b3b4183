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

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "delaunay/mesh.hpp"
#include "delaunay/roulette.hpp"
#include "delaunay/surface.hpp"

namespace delaunay {

/// One profile row: parameter, meridian coordinates, mean and Gaussian
/// curvature of the associated surface of revolution.
struct ProfileSample {
    double t = 0.0;
    double axial = 0.0;
    double radius = 0.0;
    double mean_curvature = 0.0;
    double gauss_curvature = 0.0;
};

/// Sample a meridian uniformly in the parameter; count must be at least 2.
inline std::vector<ProfileSample> sample_profile(const RouletteSpec& spec,
                                                 double t_min, double t_max,
                                                 int count) {
    spec.validate();
    if (!(t_min < t_max)) {
        throw std::invalid_argument("sample_profile: requires t_min < t_max");
    }
    if (count < 2) {
        throw std::invalid_argument("sample_profile: requires count >= 2");
    }
    const SurfaceSpec surface = SurfaceSpec::of(spec);
    std::vector<ProfileSample> samples;
    samples.reserve(static_cast<std::size_t>(count));
    const double dt = (t_max - t_min) / (count - 1);
    for (int i = 0; i < count; ++i) {
        const double t = t_min + i * dt;
        const ProfilePoint point = roulette_eval(spec, t);
        const CurvatureBundle curvature = curvatures_closed_form(surface, t);
        samples.push_back({t, point.axial, point.radius, curvature.H,
                           curvature.K});
    }
    return samples;
}

/// Parameter values whose meridian arc lengths from t_min are equally
/// spaced; endpoints are kept exactly. The meridian speed is strictly
/// positive, so cumulative arc length is strictly increasing and each
/// interior value is found by inverting the closed-form arc length with the
/// bracketing root finder. Uniform-parameter sampling under-resolves the
/// curve where the speed is large (for nodaries it grows exponentially in
/// |t|); this spacing equalizes the geometric step instead.
inline std::vector<double> arclength_uniform_params(const RouletteSpec& spec,
                                                    double t_min, double t_max,
                                                    int count) {
    spec.validate();
    if (!(t_min < t_max)) {
        throw std::invalid_argument(
            "arclength_uniform_params: requires t_min < t_max");
    }
    if (count < 2) {
        throw std::invalid_argument(
            "arclength_uniform_params: requires count >= 2");
    }
    const double total = roulette_arclength(spec, t_min, t_max);
    std::vector<double> params;
    params.reserve(static_cast<std::size_t>(count));
    params.push_back(t_min);
    for (int i = 1; i + 1 < count; ++i) {
        const double target = total * i / (count - 1);
        const RootResult inverted = find_root_1d(
            [&](double t) {
                return roulette_arclength(spec, t_min, t) - target;
            },
            t_min, t_max, 1e-13 * std::max(1.0, total));
        params.push_back(inverted.root);
    }
    params.push_back(t_max);
    return params;
}

/// Sample a meridian at explicit parameter values (strictly increasing).
inline std::vector<ProfileSample>
sample_profile_at(const RouletteSpec& spec, const std::vector<double>& ts) {
    spec.validate();
    if (ts.size() < 2) {
        throw std::invalid_argument(
            "sample_profile_at: requires at least 2 parameter values");
    }
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (!(ts[i] < ts[i + 1])) {
            throw std::invalid_argument(
                "sample_profile_at: parameter values must increase");
        }
    }
    const SurfaceSpec surface = SurfaceSpec::of(spec);
    std::vector<ProfileSample> samples;
    samples.reserve(ts.size());
    for (const double t : ts) {
        const ProfilePoint point = roulette_eval(spec, t);
        const CurvatureBundle curvature = curvatures_closed_form(surface, t);
        samples.push_back({t, point.axial, point.radius, curvature.H,
                           curvature.K});
    }
    return samples;
}

/// Sample a meridian with equal arc-length steps between samples.
inline std::vector<ProfileSample>
sample_profile_arclength(const RouletteSpec& spec, double t_min, double t_max,
                         int count) {
    return sample_profile_at(
        spec, arclength_uniform_params(spec, t_min, t_max, count));
}

namespace detail {

// Shortest round-trip-safe decimal form (17 significant digits).
inline std::string format_g17(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return std::string(buffer);
}

} // namespace detail

/// Write a Wavefront OBJ: `v` lines, then `vn` lines, then `f` lines with
/// `index//index` pairs (1-based, vertex and normal indices coincide).
/// 17 significant digits, LF line endings, fully deterministic.
inline void write_obj(std::ostream& out, const Mesh& mesh) {
    for (const Vec3& p : mesh.vertices) {
        out << "v " << detail::format_g17(p.x) << ' '
            << detail::format_g17(p.y) << ' ' << detail::format_g17(p.z)
            << '\n';
    }
    for (const Vec3& n : mesh.normals) {
        out << "vn " << detail::format_g17(n.x) << ' '
            << detail::format_g17(n.y) << ' ' << detail::format_g17(n.z)
            << '\n';
    }
    for (const MeshFace& face : mesh.faces) {
        out << 'f';
        for (int k = 0; k < face.count; ++k) {
            const int index = face.v[k] + 1;
            out << ' ' << index << "//" << index;
        }
        out << '\n';
    }
}

/// Write profile samples as CSV with header `t,g,f,H,K`; 17 significant
/// digits, LF line endings.
inline void write_profile_csv(std::ostream& out,
                              const std::vector<ProfileSample>& samples) {
    out << "t,g,f,H,K\n";
    for (const ProfileSample& s : samples) {
        out << detail::format_g17(s.t) << ',' << detail::format_g17(s.axial)
            << ',' << detail::format_g17(s.radius) << ','
            << detail::format_g17(s.mean_curvature) << ','
            << detail::format_g17(s.gauss_curvature) << '\n';
    }
}

} // namespace delaunay
