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
#include <vector>

#include "delaunay/numerics.hpp"
#include "delaunay/roulette.hpp"

using namespace delaunay;

namespace {

std::vector<RouletteSpec> sample_specs() {
    return {RouletteSpec::catenary(1.0),
            RouletteSpec::catenary(0.6),
            RouletteSpec::undulary1(2.0, 1.0),
            RouletteSpec::undulary2(2.0, 1.0),
            RouletteSpec::undulary1(1.1, 0.9),
            RouletteSpec::undulary2(3.0, 0.5),
            RouletteSpec::nodary1(1.0, 1.0),
            RouletteSpec::nodary2(1.0, 1.0),
            RouletteSpec::nodary1(0.8, 1.6),
            RouletteSpec::nodary2(2.0, 0.7)};
}

} // namespace

TEST_CASE("roulette factories pair kinds with the right conics") {
    CHECK(RouletteSpec::catenary(1.0).conic.kind == ConicKind::Parabola);
    CHECK(RouletteSpec::undulary1(2.0, 1.0).conic.kind == ConicKind::Ellipse);
    CHECK(RouletteSpec::nodary2(1.0, 1.0).conic.kind == ConicKind::Hyperbola);

    CHECK_THROWS_AS(RouletteSpec::undulary1(1.0, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(RouletteSpec::catenary(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(
        RouletteSpec::make(ConicSpec::parabola(1.0), RouletteKind::Nodary1),
        std::invalid_argument);
    CHECK_THROWS_AS(RouletteSpec::make(ConicSpec::ellipse(2.0, 1.0),
                                       RouletteKind::Catenary),
                    std::invalid_argument);
}

TEST_CASE("catenary is the scaled hyperbolic cosine graph") {
    const RouletteSpec catenary = RouletteSpec::catenary(0.8);
    for (double t : {-1.5, 0.0, 0.4, 2.0}) {
        const ProfilePoint p = roulette_eval(catenary, t);
        CHECK(std::abs(p.axial - 0.8 * t) < 1e-15);
        CHECK(std::abs(p.radius - 0.8 * std::cosh(t)) < 1e-13);
    }
}

TEST_CASE("undulary radii hit the closed-form extremes") {
    // Kind 1 dips to b(a-c)/W, kind 2 rises to b(a+c)/W; at t = 0 the
    // ellipse speed W equals b, so the radii are a -/+ c scaled by 1.
    const RouletteSpec lo = RouletteSpec::undulary1(2.0, 1.0);
    const RouletteSpec hi = RouletteSpec::undulary2(2.0, 1.0);
    const double c = std::sqrt(3.0);
    CHECK(std::abs(roulette_eval(lo, 0.0).radius - (2.0 - c)) < 1e-14);
    CHECK(std::abs(roulette_eval(hi, 0.0).radius - (2.0 + c)) < 1e-14);
    CHECK(std::abs(roulette_eval(lo, 0.0).axial) < 1e-14);
    CHECK(std::abs(roulette_eval(hi, 0.0).axial) < 1e-14);
}

TEST_CASE("paired roulette radii multiply to b squared") {
    const struct {
        RouletteSpec first, second;
    } pairs[] = {
        {RouletteSpec::undulary1(2.0, 1.0), RouletteSpec::undulary2(2.0, 1.0)},
        {RouletteSpec::undulary1(1.3, 1.1), RouletteSpec::undulary2(1.3, 1.1)},
        {RouletteSpec::nodary1(1.0, 1.0), RouletteSpec::nodary2(1.0, 1.0)},
        {RouletteSpec::nodary1(0.9, 1.7), RouletteSpec::nodary2(0.9, 1.7)},
    };
    for (const auto& pair : pairs) {
        const double b = pair.first.conic.b;
        for (double t : {-1.8, -0.3, 0.0, 0.6, 2.2}) {
            const double product = roulette_eval(pair.first, t).radius *
                                   roulette_eval(pair.second, t).radius;
            CHECK(std::abs(product - b * b) < 1e-12);
        }
    }
}

TEST_CASE("roulette radii are positive everywhere") {
    for (const RouletteSpec& spec : sample_specs()) {
        for (int i = 0; i <= 40; ++i) {
            const double t = -3.0 + 6.0 * i / 40.0;
            CHECK(roulette_eval(spec, t).radius > 0.0);
        }
    }
}

TEST_CASE("rolling construction reproduces the closed forms") {
    for (const RouletteSpec& spec : sample_specs()) {
        for (int i = 0; i < 20; ++i) {
            const double t = -2.0 + 4.0 * i / 19.0;
            const ProfilePoint rolled = roulette_by_rolling(spec, t);
            const ProfilePoint direct = roulette_eval(spec, t);
            CHECK(std::abs(rolled.axial - direct.axial) < 1e-8);
            CHECK(std::abs(rolled.radius - direct.radius) < 1e-8);
        }
    }
}

TEST_CASE("jet components match finite differences of the evaluation") {
    for (const RouletteSpec& spec : sample_specs()) {
        for (double t : {-1.1, 0.35, 1.4}) {
            const ProfileJet jet = roulette_jet(spec, t);
            const auto radius_of = [&](double u) {
                return roulette_eval(spec, u).radius;
            };
            const auto axial_of = [&](double u) {
                return roulette_eval(spec, u).axial;
            };
            CHECK(std::abs(jet.radius - radius_of(t)) == 0.0);
            CHECK(std::abs(jet.axial - axial_of(t)) == 0.0);
            CHECK(std::abs(jet.radius_dt - derivative(radius_of, t, 1)) <
                  1e-8);
            CHECK(std::abs(jet.axial_dt - derivative(axial_of, t, 1)) <
                  1e-8);
            CHECK(std::abs(jet.radius_dtt - derivative(radius_of, t, 2)) <
                  1e-6);
            CHECK(std::abs(jet.axial_dtt - derivative(axial_of, t, 2)) <
                  1e-6);
        }
    }
}

TEST_CASE("speed equals the meridian velocity magnitude") {
    for (const RouletteSpec& spec : sample_specs()) {
        for (double t : {-2.0, -0.6, 0.0, 0.9, 1.8}) {
            const ProfileJet jet = roulette_jet(spec, t);
            const double speed = std::hypot(jet.radius_dt, jet.axial_dt);
            CHECK(std::abs(roulette_speed(spec, t) - speed) < 1e-12);
        }
    }
}

TEST_CASE("axial speed is positive for kind-1 and kind-2 meridians") {
    // The axial coordinate must advance monotonically for undularies and
    // kind-1 nodaries; kind-2 nodaries regress (their axial speed is
    // negative), which is what makes composite profiles fold back.
    for (const RouletteSpec& spec : sample_specs()) {
        for (double t : {-1.7, 0.1, 1.2}) {
            const double g_dt = roulette_jet(spec, t).axial_dt;
            if (spec.kind == RouletteKind::Nodary2) {
                CHECK(g_dt < 0.0);
            } else {
                CHECK(g_dt > 0.0);
            }
        }
    }
}

TEST_CASE("arc length antiderivatives match quadrature of the speed") {
    const struct {
        double lo, hi;
    } ranges[] = {{-2.3, -0.4}, {-0.9, 1.1}, {0.2, 2.9}};
    for (const RouletteSpec& spec : sample_specs()) {
        for (const auto& range : ranges) {
            const double closed =
                roulette_arclength(spec, range.lo, range.hi);
            const double numeric =
                integrate(
                    [&](double t) { return roulette_speed(spec, t); },
                    range.lo, range.hi, 1e-12, 1e-12)
                    .value;
            CHECK(std::abs(closed - numeric) < 1e-9);
        }
    }
}

TEST_CASE("undulary arc length crosses period boundaries smoothly") {
    const RouletteSpec spec = RouletteSpec::undulary1(2.0, 1.0);
    // Antiderivative branch points sit at odd multiples of pi; spans
    // crossing them must still match quadrature.
    const double closed =
        roulette_arclength(spec, 0.5, 3.0 * std::numbers::pi + 0.5);
    const double numeric =
        integrate([&](double t) { return roulette_speed(spec, t); }, 0.5,
                  3.0 * std::numbers::pi + 0.5, 1e-12, 1e-12)
            .value;
    CHECK(std::abs(closed - numeric) < 1e-8);

    // A full period of either undulary measures the full rolled turn 2 pi a.
    const double period = roulette_arclength(spec, -std::numbers::pi,
                                             std::numbers::pi);
    CHECK(std::abs(period - 2.0 * std::numbers::pi * 2.0) < 1e-10);
}

TEST_CASE("undulary half-period pair sums to the rolled turn") {
    const struct {
        double a, b;
    } params[] = {{2.0, 1.0}, {1.4, 1.2}, {3.0, 0.4}};
    for (const auto& p : params) {
        const double half1 = roulette_arclength(
            RouletteSpec::undulary1(p.a, p.b), 0.0, std::numbers::pi);
        const double half2 = roulette_arclength(
            RouletteSpec::undulary2(p.a, p.b), 0.0, std::numbers::pi);
        CHECK(std::abs(half1 + half2 - 2.0 * std::numbers::pi * p.a) <
              1e-10);
    }
}

TEST_CASE("nodary total lengths satisfy the pedal identities") {
    const struct {
        double a, b;
    } params[] = {{1.0, 1.0}, {0.8, 1.6}, {2.0, 0.7}};
    for (const auto& p : params) {
        const RouletteSpec first = RouletteSpec::nodary1(p.a, p.b);
        const RouletteSpec second = RouletteSpec::nodary2(p.a, p.b);
        const double total1 = nodary_total_length(first);
        const double total2 = nodary_total_length(second);
        CHECK(std::abs(total1 - 2.0 * p.a * std::atan(p.b / p.a)) < 1e-12);
        CHECK(std::abs(total1 + total2 - 2.0 * std::numbers::pi * p.a) <
              1e-10);

        // The improper arc-length integrals approach the totals.
        const double tail1 = roulette_arclength(first, -20.0, 20.0);
        CHECK(std::abs(tail1 - total1) < 1e-6);
        const double tail2 = roulette_arclength(second, -20.0, 20.0);
        CHECK(std::abs(tail2 - total2) < 1e-6);
    }
    CHECK_THROWS_AS(nodary_total_length(RouletteSpec::undulary1(2.0, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("shifting the rolling origin translates the axial coordinate") {
    const RouletteSpec base = RouletteSpec::undulary1(2.0, 1.0);
    const RouletteSpec shifted = RouletteSpec::undulary1(2.0, 1.0, 0.7);
    const double offset = conic_arclength(base.conic, 0.0, 0.7);
    for (double t : {-1.2, 0.0, 0.7, 1.9}) {
        const ProfilePoint a = roulette_eval(base, t);
        const ProfilePoint b = roulette_eval(shifted, t);
        CHECK(std::abs(b.radius - a.radius) < 1e-14);
        CHECK(std::abs(b.axial - (a.axial - offset)) < 1e-12);
    }
    // The rolling oracle agrees with the shifted closed forms too.
    for (double t : {-0.4, 1.3}) {
        const ProfilePoint rolled = roulette_by_rolling(shifted, t);
        const ProfilePoint direct = roulette_eval(shifted, t);
        CHECK(std::abs(rolled.axial - direct.axial) < 1e-8);
        CHECK(std::abs(rolled.radius - direct.radius) < 1e-8);
    }
}

TEST_CASE("constant-length family shares the rolled turn length") {
    const double a = 1.5;
    const std::vector<RouletteSpec> family = family_constant_length(a, 3, 2);
    REQUIRE(family.size() == 10);
    for (std::size_t i = 0; i < family.size(); i += 2) {
        // Members come in meridian pairs over the same conic.
        CHECK(family[i].conic.a == a);
        CHECK(family[i + 1].conic.a == a);
        CHECK(family[i].conic.b == family[i + 1].conic.b);
    }
    // Ellipse members: half-period pairs sum to 2 pi a. Hyperbola members:
    // totals sum to 2 pi a. The family therefore shares one length budget.
    for (std::size_t i = 0; i < family.size(); i += 2) {
        double sum = 0.0;
        if (family[i].conic.kind == ConicKind::Ellipse) {
            sum = roulette_arclength(family[i], 0.0, std::numbers::pi) +
                  roulette_arclength(family[i + 1], 0.0, std::numbers::pi);
        } else {
            sum = nodary_total_length(family[i]) +
                  nodary_total_length(family[i + 1]);
        }
        CHECK(std::abs(sum - 2.0 * std::numbers::pi * a) < 1e-9);
    }
}
