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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "delaunay/numerics.hpp"
#include "delaunay/roulette.hpp"
#include "delaunay/surface.hpp"

using namespace delaunay;

namespace {

std::vector<SurfaceSpec> sample_surfaces() {
    return {SurfaceSpec::of(RouletteSpec::catenary(1.0)),
            SurfaceSpec::of(RouletteSpec::undulary1(2.0, 1.0)),
            SurfaceSpec::of(RouletteSpec::undulary2(2.0, 1.0)),
            SurfaceSpec::of(RouletteSpec::nodary1(1.0, 1.0)),
            SurfaceSpec::of(RouletteSpec::nodary2(1.3, 0.8))};
}

double expected_mean_curvature(const RouletteSpec& spec) {
    switch (spec.kind) {
    case RouletteKind::Catenary:
        return 0.0;
    case RouletteKind::Undulary1:
    case RouletteKind::Undulary2:
        return 0.5 / spec.conic.a;
    case RouletteKind::Nodary1:
    case RouletteKind::Nodary2:
        return -0.5 / spec.conic.a;
    }
    return 0.0;
}

} // namespace

TEST_CASE("patch domains are validated") {
    PatchDomain patch;
    patch.t1 = 0.0;
    patch.t2 = 1.0;
    patch.v1 = 0.0;
    patch.v2 = 2.0 * std::numbers::pi;
    CHECK_NOTHROW(patch.validate());

    PatchDomain reversed = patch;
    reversed.t2 = -1.0;
    CHECK_THROWS_AS(reversed.validate(), std::invalid_argument);

    PatchDomain wide = patch;
    wide.v2 = 2.0 * std::numbers::pi + 1e-6;
    CHECK_THROWS_AS(wide.validate(), std::invalid_argument);

    PatchDomain empty = patch;
    empty.v2 = 0.0;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("surface points revolve the meridian") {
    const SurfaceSpec spec = SurfaceSpec::of(RouletteSpec::catenary(1.0));
    const Vec3 p = surface_point(spec, 0.5, std::numbers::pi / 3.0);
    const double f = std::cosh(0.5);
    CHECK(std::abs(p.x - f * 0.5) < 1e-13);
    CHECK(std::abs(p.y - f * std::sin(std::numbers::pi / 3.0)) < 1e-13);
    CHECK(std::abs(p.z - 0.5) < 1e-13);
}

TEST_CASE("surface normals are unit and orthogonal to the tangent plane") {
    for (const SurfaceSpec& spec : sample_surfaces()) {
        for (double t : {-1.4, 0.0, 0.8}) {
            for (double v : {0.3, 2.0, 5.5}) {
                const Vec3 n = surface_normal(spec, t, v);
                CHECK(std::abs(norm(n) - 1.0) < 1e-12);

                // Tangents by finite differences of the embedding.
                const auto point_at = [&](double tt, double vv) {
                    return surface_point(spec, tt, vv);
                };
                const double h = 1e-5;
                const Vec3 du = (1.0 / (2.0 * h)) *
                                (point_at(t + h, v) - point_at(t - h, v));
                const Vec3 dv = (1.0 / (2.0 * h)) *
                                (point_at(t, v + h) - point_at(t, v - h));
                CHECK(std::abs(dot(n, du)) < 1e-6);
                CHECK(std::abs(dot(n, dv)) < 1e-6);
            }
        }
    }
}

TEST_CASE("first fundamental form is diagonal with G = radius squared") {
    for (const SurfaceSpec& spec : sample_surfaces()) {
        for (double t : {-1.1, 0.2, 1.6}) {
            const ProfileJet jet = roulette_jet(spec.meridian, t);
            const FundamentalForms forms = fundamental_forms(jet);
            CHECK(forms.F == 0.0);
            CHECK(forms.M == 0.0);
            CHECK(std::abs(forms.G - jet.radius * jet.radius) < 1e-13);
            const double speed_sq = jet.radius_dt * jet.radius_dt +
                                    jet.axial_dt * jet.axial_dt;
            CHECK(std::abs(forms.E - speed_sq) < 1e-13);
            CHECK(forms.E * forms.G - forms.F * forms.F > 0.0);
        }
    }
}

TEST_CASE("mean curvature is the family constant through the generic path") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pick_t(-2.5, 2.5);
    for (const SurfaceSpec& spec : sample_surfaces()) {
        const double expected = expected_mean_curvature(spec.meridian);
        const double tol =
            spec.meridian.kind == RouletteKind::Catenary ? 1e-12 : 1e-10;
        for (int i = 0; i < 25; ++i) {
            const double t = pick_t(rng);
            const CurvatureBundle bundle =
                curvatures_generic(roulette_jet(spec.meridian, t));
            CHECK(std::abs(bundle.H - expected) < tol);
        }
    }
}

TEST_CASE("closed-form curvature tables agree with the generic pipeline") {
    for (const SurfaceSpec& spec : sample_surfaces()) {
        for (double t : {-1.9, -0.7, 0.0, 0.4, 1.3}) {
            const CurvatureBundle generic =
                curvatures_generic(roulette_jet(spec.meridian, t));
            const CurvatureBundle closed = curvatures_closed_form(spec, t);
            CHECK(std::abs(generic.k1 - closed.k1) < 1e-10);
            CHECK(std::abs(generic.k2 - closed.k2) < 1e-10);
            CHECK(std::abs(generic.H - closed.H) < 1e-10);
            CHECK(std::abs(generic.K - closed.K) < 1e-10);
            CHECK(std::abs(generic.kg - closed.kg) < 1e-10);
        }
    }
}

TEST_CASE("curvature spot values: catenoid") {
    const SurfaceSpec spec = SurfaceSpec::of(RouletteSpec::catenary(1.0));
    const CurvatureBundle at0 = curvatures_closed_form(spec, 0.0);
    CHECK(std::abs(at0.H) < 1e-15);
    CHECK(std::abs(at0.K + 1.0) < 1e-14);
    CHECK(std::abs(at0.k1 + 1.0) < 1e-14);
    CHECK(std::abs(at0.k2 - 1.0) < 1e-14);
    CHECK(std::abs(at0.kg) < 1e-15);

    const CurvatureBundle at1 = curvatures_closed_form(spec, 1.0);
    const double ch = std::cosh(1.0);
    CHECK(std::abs(at1.K + 1.0 / (ch * ch * ch * ch)) < 1e-14);
    CHECK(std::abs(at1.kg - std::sinh(1.0) / (ch * ch)) < 1e-14);
}

TEST_CASE("curvature spot values: nodoid bulge branch") {
    const SurfaceSpec spec = SurfaceSpec::of(RouletteSpec::nodary2(1.0, 1.0));
    const CurvatureBundle bundle = curvatures_closed_form(spec, 0.0);
    const double c = std::sqrt(2.0);
    // Radius c + a at the equator; the parallel is convex seen from
    // outside while the meridian bends the other way.
    CHECK(std::abs(bundle.k2 + 1.0 / (c + 1.0)) < 1e-14);
    CHECK(std::abs(bundle.k1 + c / (c + 1.0)) < 1e-14);
    CHECK(std::abs(bundle.H + 0.5) < 1e-14);
    CHECK(std::abs(bundle.K - c / ((c + 1.0) * (c + 1.0))) < 1e-14);
}

TEST_CASE("cylinder degenerate keeps exact constants") {
    for (double a : {0.7, 1.0, 2.5}) {
        for (RouletteKind kind :
             {RouletteKind::Undulary1, RouletteKind::Undulary2}) {
            const RouletteSpec meridian =
                RouletteSpec::make(ConicSpec::ellipse(a, a), kind);
            const SurfaceSpec spec = SurfaceSpec::of(meridian);
            for (int i = 0; i <= 20; ++i) {
                const double t = -3.0 + 6.0 * i / 20.0;
                CHECK(std::abs(roulette_eval(meridian, t).radius - a) <
                      1e-12);
                const CurvatureBundle bundle =
                    curvatures_generic(roulette_jet(meridian, t));
                CHECK(std::abs(bundle.K) < 1e-12);
                CHECK(std::abs(bundle.H - 0.5 / a) < 1e-12);
            }
        }
    }
}

TEST_CASE("total curvature closed form matches quadrature") {
    for (const SurfaceSpec& spec : sample_surfaces()) {
        PatchDomain patch;
        patch.t1 = -1.3;
        patch.t2 = 0.9;
        patch.v1 = 0.4;
        patch.v2 = 4.1;
        const double closed = total_curvature(spec, patch);
        const double numeric = total_curvature_quadrature(spec, patch);
        CHECK(std::abs(closed - numeric) < 1e-6);
    }
}

TEST_CASE("catenoid total curvature approaches the full-surface limit") {
    const SurfaceSpec spec = SurfaceSpec::of(RouletteSpec::catenary(1.0));
    PatchDomain patch;
    patch.t1 = -20.0;
    patch.t2 = 20.0;
    patch.v1 = 0.0;
    patch.v2 = 2.0 * std::numbers::pi;
    CHECK(std::abs(total_curvature(spec, patch) + 4.0 * std::numbers::pi) <
          1e-6);
}

TEST_CASE("nodoid total curvature spot value") {
    // Bulge-branch nodoid, unit axes: interior integral over t in [0, 1]
    // around the full revolution.
    const SurfaceSpec spec = SurfaceSpec::of(RouletteSpec::nodary2(1.0, 1.0));
    PatchDomain patch;
    patch.t1 = 0.0;
    patch.t2 = 1.0;
    patch.v1 = 0.0;
    patch.v2 = 2.0 * std::numbers::pi;
    const double expected = 5.383768774221; // frozen independent estimate
    CHECK(std::abs(total_curvature(spec, patch) - expected) < 1e-9);
    CHECK(std::abs(total_curvature_quadrature(spec, patch) - expected) <
          1e-6);
}

TEST_CASE("gauss-bonnet residual vanishes on random patches") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> pick_t(-2.0, 2.0);
    std::uniform_real_distribution<double> pick_span(
        0.4, 2.0 * std::numbers::pi);
    for (const SurfaceSpec& spec : sample_surfaces()) {
        for (int i = 0; i < 4; ++i) {
            const double u = pick_t(rng);
            const double w = pick_t(rng);
            PatchDomain patch;
            patch.t1 = std::min(u, w);
            patch.t2 = std::max(u, w) + 0.2;
            patch.v1 = 0.0;
            patch.v2 = pick_span(rng);
            CHECK(std::abs(gauss_bonnet_residual(spec, patch)) < 1e-6);
        }
    }
}

TEST_CASE("catenoid volume and lateral area close forms") {
    const SurfaceSpec spec = SurfaceSpec::of(RouletteSpec::catenary(1.0));
    const double bracket = 1.0 + std::sinh(1.0) * std::cosh(1.0);
    CHECK(std::abs(volume_of_revolution(spec, -1.0, 1.0) -
                   std::numbers::pi * bracket) < 1e-9);

    PatchDomain patch;
    patch.t1 = -1.0;
    patch.t2 = 1.0;
    patch.v1 = 0.0;
    patch.v2 = 2.0 * std::numbers::pi;
    CHECK(std::abs(lateral_area(spec, patch) -
                   2.0 * std::numbers::pi * bracket) < 1e-9);
}

TEST_CASE("nodoid neck-branch volume spot value") {
    const SurfaceSpec spec = SurfaceSpec::of(RouletteSpec::nodary1(1.0, 1.0));
    const double expected = 0.434400548356; // frozen independent estimate
    CHECK(std::abs(volume_of_revolution(spec, -1.0, 1.0) - expected) <
          1e-9);
}

TEST_CASE("volume scales with the cube of similarity") {
    const double lambda = 1.7;
    const SurfaceSpec base = SurfaceSpec::of(RouletteSpec::nodary1(1.0, 1.0));
    const SurfaceSpec scaled =
        SurfaceSpec::of(RouletteSpec::nodary1(lambda, lambda));
    const double v0 = volume_of_revolution(base, -0.8, 0.8);
    const double v1 = volume_of_revolution(scaled, -0.8, 0.8);
    CHECK(std::abs(v1 - lambda * lambda * lambda * v0) < 1e-8);
}

TEST_CASE("cylinder volume equals the elementary formula") {
    const SurfaceSpec spec =
        SurfaceSpec::of(RouletteSpec::undulary1(1.2, 1.2));
    // Degenerate cylinder of radius a: axial speed is a, so t in [0, h/a]
    // sweeps height h.
    const double height = 2.0;
    const double v =
        volume_of_revolution(spec, 0.0, height / 1.2);
    CHECK(std::abs(v - std::numbers::pi * 1.2 * 1.2 * height) < 1e-9);
}
