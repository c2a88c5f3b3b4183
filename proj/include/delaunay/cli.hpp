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
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delaunay/conic.hpp"
#include "delaunay/io.hpp"
#include "delaunay/mesh.hpp"
#include "delaunay/numerics.hpp"
#include "delaunay/roulette.hpp"
#include "delaunay/solver.hpp"
#include "delaunay/surface.hpp"

namespace delaunay::cli {

namespace detail {

inline const std::vector<std::string>& roulette_kind_names() {
    static const std::vector<std::string> names{
        "catenary", "undulary1", "undulary2", "nodary1", "nodary2"};
    return names;
}

inline std::string kind_name(RouletteKind kind) {
    switch (kind) {
    case RouletteKind::Catenary:
        return "catenary";
    case RouletteKind::Undulary1:
        return "undulary1";
    case RouletteKind::Undulary2:
        return "undulary2";
    case RouletteKind::Nodary1:
        return "nodary1";
    case RouletteKind::Nodary2:
        return "nodary2";
    }
    return "unknown";
}

inline std::string conic_kind_name(ConicKind kind) {
    switch (kind) {
    case ConicKind::Parabola:
        return "parabola";
    case ConicKind::Ellipse:
        return "ellipse";
    case ConicKind::Hyperbola:
        return "hyperbola";
    }
    return "unknown";
}

inline RouletteSpec spec_from_names(const std::string& kind, double a,
                                    double b) {
    if (kind == "catenary") {
        return RouletteSpec::catenary(b);
    }
    if (kind == "undulary1") {
        return RouletteSpec::undulary1(a, b);
    }
    if (kind == "undulary2") {
        return RouletteSpec::undulary2(a, b);
    }
    if (kind == "nodary1") {
        return RouletteSpec::nodary1(a, b);
    }
    if (kind == "nodary2") {
        return RouletteSpec::nodary2(a, b);
    }
    throw std::invalid_argument("unknown meridian kind: " + kind);
}

inline nlohmann::json conic_json(const ConicSpec& conic) {
    return nlohmann::json{{"kind", conic_kind_name(conic.kind)},
                          {"a", conic.a},
                          {"b", conic.b},
                          {"c", conic.c}};
}

inline nlohmann::json curvature_json(const CurvatureBundle& bundle) {
    return nlohmann::json{{"k1", bundle.k1},
                          {"k2", bundle.k2},
                          {"H", bundle.H},
                          {"K", bundle.K},
                          {"kg", bundle.kg}};
}

inline nlohmann::json fit_json(const FitResult& result) {
    return nlohmann::json{{"conic", conic_json(result.conic)},
                          {"t0", result.t0},
                          {"residuals", result.residuals},
                          {"iterations", result.iterations}};
}

inline void write_file(const std::string& path,
                       const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    writer(out);
    out.flush();
    if (!out) {
        throw std::runtime_error("failed while writing: " + path);
    }
}

inline std::string sanitize_label(const std::string& label) {
    std::string token = label;
    for (char& ch : token) {
        const bool keep = (ch >= 'a' && ch <= 'z') ||
                          (ch >= 'A' && ch <= 'Z') ||
                          (ch >= '0' && ch <= '9') || ch == '.' || ch == '-';
        if (!keep) {
            ch = '_';
        }
    }
    return token;
}

/// One named invariant verdict of the `check` suite.
struct CheckOutcome {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Invariant suite for one meridian: constancy of the mean curvature,
/// closed forms against finite-difference recomputation, the rolling
/// construction, arc-length antiderivatives against quadrature, the pedal
/// property of the generating conic, and the Gauss-Bonnet identity on
/// random patches.
inline std::vector<CheckOutcome> run_invariant_suite(const RouletteSpec& spec,
                                                     std::uint64_t seed) {
    const SurfaceSpec surface = SurfaceSpec::of(spec);
    const bool nodary = spec.kind == RouletteKind::Nodary1 ||
                        spec.kind == RouletteKind::Nodary2;
    const double t_half = nodary ? 2.5 : 3.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pick_t(-t_half, t_half);

    std::vector<double> ts;
    for (int i = 0; i < 20; ++i) {
        ts.push_back(pick_t(rng));
    }

    std::vector<CheckOutcome> outcomes;
    const auto record = [&outcomes](const std::string& name, double max_error,
                                    double tolerance) {
        outcomes.push_back(
            {name, max_error, tolerance, max_error <= tolerance});
    };

    // Mean curvature computed through the generic pipeline must be the
    // constant of the surface family.
    {
        double expected = 0.0;
        double tol = 1e-12;
        if (spec.kind == RouletteKind::Undulary1 ||
            spec.kind == RouletteKind::Undulary2) {
            expected = 0.5 / spec.conic.a;
            tol = 1e-10;
        } else if (nodary) {
            expected = -0.5 / spec.conic.a;
            tol = 1e-10;
        }
        double worst = 0.0;
        for (double t : ts) {
            const CurvatureBundle bundle =
                curvatures_generic(roulette_jet(spec, t));
            worst = std::max(worst, std::abs(bundle.H - expected));
        }
        record("cmc_constancy", worst, tol);
    }

    // Closed-form curvature tables against Richardson finite differences
    // of the bare point evaluation.
    {
        double worst = 0.0;
        for (double t : ts) {
            const auto radius_of = [&](double u) {
                return roulette_eval(spec, u).radius;
            };
            const auto axial_of = [&](double u) {
                return roulette_eval(spec, u).axial;
            };
            ProfileJet jet;
            const ProfilePoint point = roulette_eval(spec, t);
            jet.radius = point.radius;
            jet.axial = point.axial;
            jet.radius_dt = derivative(radius_of, t, 1);
            jet.radius_dtt = derivative(radius_of, t, 2);
            jet.axial_dt = derivative(axial_of, t, 1);
            jet.axial_dtt = derivative(axial_of, t, 2);
            const CurvatureBundle fd = curvatures_generic(jet);
            const CurvatureBundle closed =
                curvatures_closed_form(surface, t);
            const auto gauge = [&](double got, double ref) {
                return std::abs(got - ref) / std::max(1.0, std::abs(ref));
            };
            worst = std::max({worst, gauge(fd.k1, closed.k1),
                              gauge(fd.k2, closed.k2), gauge(fd.H, closed.H),
                              gauge(fd.K, closed.K),
                              gauge(fd.kg, closed.kg)});
        }
        record("closed_form_vs_finite_difference", worst, 1e-6);
    }

    // The rolling construction must reproduce the closed forms.
    {
        double worst = 0.0;
        for (double t : ts) {
            const ProfilePoint rolled = roulette_by_rolling(spec, t);
            const ProfilePoint direct = roulette_eval(spec, t);
            worst = std::max({worst, std::abs(rolled.axial - direct.axial),
                              std::abs(rolled.radius - direct.radius)});
        }
        record("rolling_construction", worst, 1e-8);
    }

    // Arc-length antiderivatives against adaptive quadrature of the speed.
    {
        double worst = 0.0;
        for (int i = 0; i + 1 < static_cast<int>(ts.size()); i += 2) {
            const double u = std::min(ts[i], ts[i + 1]);
            const double w = std::max(ts[i], ts[i + 1]);
            if (w - u < 1e-6) {
                continue;
            }
            const double closed = roulette_arclength(spec, u, w);
            const double numeric =
                integrate([&](double x) { return roulette_speed(spec, x); },
                          u, w, 1e-12, 1e-12)
                    .value;
            worst = std::max(worst, std::abs(closed - numeric));
        }
        record("arclength_closed_form", worst, 1e-9);
    }

    // Pedal property of the generating conic: feet of focal perpendiculars
    // lie on the circle of radius a (central conics) or on the tangent line
    // at the vertex (parabola).
    if (spec.conic.kind == ConicKind::Parabola) {
        double worst = 0.0;
        for (double t : ts) {
            const PlanePoint2 foot = pedal_foot(spec.conic, 0, t);
            worst = std::max(worst, std::abs(foot.x));
        }
        record("pedal_vertex_line", worst, 1e-10);
    } else {
        double worst = 0.0;
        for (double t : ts) {
            for (int focus = 0; focus < 2; ++focus) {
                const PlanePoint2 foot = pedal_foot(spec.conic, focus, t);
                const double r = std::hypot(foot.x, foot.y);
                worst = std::max(worst, std::abs(r - spec.conic.a));
            }
        }
        record("pedal_circle", worst, 1e-10);
    }

    // Gauss-Bonnet identity on random patches.
    {
        std::uniform_real_distribution<double> pick_span(
            0.3, 2.0 * std::numbers::pi);
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double u = pick_t(rng);
            const double w = pick_t(rng);
            PatchDomain patch;
            patch.t1 = std::min(u, w);
            patch.t2 = std::max(u, w);
            if (patch.t2 - patch.t1 < 0.1) {
                patch.t2 = patch.t1 + 0.1;
            }
            patch.v1 = 0.0;
            patch.v2 = pick_span(rng);
            worst = std::max(worst,
                             std::abs(gauss_bonnet_residual(surface, patch)));
        }
        record("gauss_bonnet_residual", worst, 1e-6);
    }

    return outcomes;
}

} // namespace detail

/// Entry point of the command-line front end. Returns the process exit
/// status: 0 on success, 1 on numeric failures, 2 on argument errors.
inline int run(int argc, const char* const* argv) {
    CLI::App app{"Delaunay constant-mean-curvature surfaces of revolution: "
                 "meridian profiles, curvature reports, invariant checks, "
                 "constrained fits, families, and mesh export"};
    app.require_subcommand(1);
    const auto kind_member = CLI::IsMember(detail::roulette_kind_names());

    // profile
    auto* profile = app.add_subcommand(
        "profile", "Sample a meridian profile with curvatures to CSV");
    std::string profile_kind;
    double profile_a = 1.0;
    double profile_b = 1.0;
    double profile_t_min = 0.0;
    double profile_t_max = 0.0;
    int profile_samples = 200;
    std::string profile_out;
    profile->add_option("--kind", profile_kind, "meridian kind")
        ->required()
        ->check(kind_member);
    auto* profile_a_opt = profile->add_option(
        "--a", profile_a, "semi-major axis (central conics)");
    profile->add_option("--b", profile_b, "semi-minor axis / parabola scale")
        ->required();
    profile->add_option("--t-min", profile_t_min, "lower parameter bound")
        ->required();
    profile->add_option("--t-max", profile_t_max, "upper parameter bound")
        ->required();
    profile->add_option("--samples", profile_samples,
                        "row count (at least 2)");
    std::string profile_spacing = "t";
    profile
        ->add_option("--spacing", profile_spacing,
                     "sample spacing: uniform parameter or uniform arc "
                     "length")
        ->check(CLI::IsMember({"t", "arclength"}));
    profile->add_option("--out", profile_out, "output CSV path")->required();

    // mesh
    auto* mesh_cmd = app.add_subcommand(
        "mesh", "Tessellate a surface patch and write a Wavefront OBJ");
    std::string mesh_kind;
    double mesh_a = 1.0;
    double mesh_b = 1.0;
    double mesh_t_min = 0.0;
    double mesh_t_max = 0.0;
    double mesh_v_min = 0.0;
    double mesh_v_max = 2.0 * std::numbers::pi;
    int mesh_nt = 64;
    int mesh_nv = 64;
    std::string mesh_out;
    mesh_cmd->add_option("--kind", mesh_kind, "meridian kind")
        ->required()
        ->check(kind_member);
    auto* mesh_a_opt = mesh_cmd->add_option(
        "--a", mesh_a, "semi-major axis (central conics)");
    mesh_cmd->add_option("--b", mesh_b, "semi-minor axis / parabola scale")
        ->required();
    mesh_cmd->add_option("--t-min", mesh_t_min, "lower parameter bound")
        ->required();
    mesh_cmd->add_option("--t-max", mesh_t_max, "upper parameter bound")
        ->required();
    mesh_cmd->add_option("--v-min", mesh_v_min,
                         "revolution start angle (default 0)");
    mesh_cmd->add_option("--v-max", mesh_v_max,
                         "revolution end angle (default 2*pi)");
    mesh_cmd->add_option("--nt", mesh_nt, "meridian sample count (>= 2)");
    mesh_cmd->add_option("--nv", mesh_nv, "ring sample count (>= 3)");
    std::string mesh_spacing = "t";
    mesh_cmd
        ->add_option("--spacing", mesh_spacing,
                     "meridian row spacing: uniform parameter or uniform "
                     "arc length")
        ->check(CLI::IsMember({"t", "arclength"}));
    mesh_cmd->add_option("--out", mesh_out, "output OBJ path")->required();

    // curvature
    auto* curvature_cmd = app.add_subcommand(
        "curvature", "Print the curvature bundle at a parameter as JSON");
    std::string curvature_kind;
    double curvature_a = 1.0;
    double curvature_b = 1.0;
    double curvature_t = 0.0;
    curvature_cmd->add_option("--kind", curvature_kind, "meridian kind")
        ->required()
        ->check(kind_member);
    auto* curvature_a_opt = curvature_cmd->add_option(
        "--a", curvature_a, "semi-major axis (central conics)");
    curvature_cmd
        ->add_option("--b", curvature_b, "semi-minor axis / parabola scale")
        ->required();
    curvature_cmd->add_option("--t", curvature_t, "meridian parameter")
        ->required();

    // check
    auto* check_cmd = app.add_subcommand(
        "check", "Run the invariant suite for a surface, report as JSON");
    std::string check_kind;
    double check_a = 1.0;
    double check_b = 1.0;
    std::uint64_t check_seed = 0;
    check_cmd->add_option("--kind", check_kind, "meridian kind")
        ->required()
        ->check(kind_member);
    auto* check_a_opt = check_cmd->add_option(
        "--a", check_a, "semi-major axis (central conics)");
    check_cmd->add_option("--b", check_b, "semi-minor axis / parabola scale")
        ->required();
    check_cmd->add_option("--seed", check_seed, "sample seed (default 0)");

    // fit
    auto* fit_cmd = app.add_subcommand(
        "fit", "Fit a surface to an enclosed volume and boundary radius");
    std::string fit_kind;
    double fit_volume = 0.0;
    double fit_radius = 0.0;
    double fit_t0 = 1.0;
    fit_cmd->add_option("--kind", fit_kind, "surface family")
        ->required()
        ->check(CLI::IsMember({"nodoid", "unduloid", "catenoid"}));
    fit_cmd->add_option("--volume", fit_volume, "target enclosed volume")
        ->required();
    fit_cmd->add_option("--radius", fit_radius, "target boundary radius")
        ->required();
    fit_cmd->add_option("--t0", fit_t0,
                        "meridian half-range (ignored for catenoid)");

    // family
    auto* family_cmd = app.add_subcommand(
        "family", "Batch-generate a one-parameter family of surfaces");
    std::string family_type;
    double family_a = 1.0;
    int family_ellipse_count = 3;
    int family_hyperbola_count = 3;
    double family_volume = 0.0;
    double family_radius = 0.0;
    std::vector<double> family_t0{0.5, 1.0};
    double family_t_min = -2.0;
    double family_t_max = 2.0;
    int family_samples = 100;
    std::string family_out_dir;
    family_cmd->add_option("--type", family_type, "family type")
        ->required()
        ->check(CLI::IsMember({"constant-length", "constant-volume"}));
    family_cmd->add_option("--a", family_a,
                           "shared semi-major axis (constant-length)");
    family_cmd->add_option("--ellipse-count", family_ellipse_count,
                           "undulary pairs to sweep (constant-length)");
    family_cmd->add_option("--hyperbola-count", family_hyperbola_count,
                           "nodary pairs to sweep (constant-length)");
    family_cmd->add_option("--volume", family_volume,
                           "target volume (constant-volume)");
    family_cmd->add_option("--radius", family_radius,
                           "target boundary radius (constant-volume)");
    family_cmd->add_option("--t0", family_t0,
                           "meridian half-ranges (constant-volume)");
    family_cmd->add_option("--t-min", family_t_min, "CSV parameter lower");
    family_cmd->add_option("--t-max", family_t_max, "CSV parameter upper");
    family_cmd->add_option("--samples", family_samples, "CSV rows");
    family_cmd->add_option("--out-dir", family_out_dir,
                           "directory for member CSV files");

    // composite
    auto* composite_cmd = app.add_subcommand(
        "composite", "Assemble a composite nodoid mesh and write an OBJ");
    double composite_a = 1.0;
    double composite_b = 1.0;
    double composite_T = 0.0;
    int composite_periods = 1;
    bool composite_closed = false;
    double composite_join_tol = 1e-5;
    int composite_rings = 64;
    int composite_segments = 64;
    std::string composite_out;
    composite_cmd
        ->add_option("--a", composite_a, "hyperbola semi-major axis")
        ->required();
    composite_cmd
        ->add_option("--b", composite_b, "hyperbola semi-minor axis")
        ->required();
    composite_cmd
        ->add_option("--T", composite_T, "arc half-range (join parameter)")
        ->required();
    composite_cmd->add_option("--periods", composite_periods,
                              "number of chained periods");
    composite_cmd->add_flag("--closed", composite_closed,
                            "bridge the final ring back to the first");
    composite_cmd->add_option("--join-tol", composite_join_tol,
                              "admissible endpoint radial gap");
    composite_cmd->add_option("--rings", composite_rings,
                              "meridian samples per arc piece");
    composite_cmd->add_option("--segments", composite_segments,
                              "vertices per revolution ring");
    composite_cmd->add_option("--out", composite_out, "output OBJ path")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto require_a = [](const std::string& kind,
                              const CLI::Option* a_opt) {
        if (kind != "catenary" && a_opt->count() == 0) {
            throw std::invalid_argument(
                "--a is required for meridian kind " + kind);
        }
    };

    try {
        if (profile->parsed()) {
            require_a(profile_kind, profile_a_opt);
            const RouletteSpec spec =
                detail::spec_from_names(profile_kind, profile_a, profile_b);
            const std::vector<ProfileSample> samples =
                profile_spacing == "arclength"
                    ? sample_profile_arclength(spec, profile_t_min,
                                               profile_t_max,
                                               profile_samples)
                    : sample_profile(spec, profile_t_min, profile_t_max,
                                     profile_samples);
            detail::write_file(profile_out, [&](std::ostream& out) {
                write_profile_csv(out, samples);
            });
            return 0;
        }
        if (mesh_cmd->parsed()) {
            require_a(mesh_kind, mesh_a_opt);
            const RouletteSpec spec =
                detail::spec_from_names(mesh_kind, mesh_a, mesh_b);
            PatchDomain patch;
            patch.t1 = mesh_t_min;
            patch.t2 = mesh_t_max;
            patch.v1 = mesh_v_min;
            patch.v2 = mesh_v_max;
            const SurfaceSpec surface = SurfaceSpec::of(spec);
            const Mesh mesh =
                mesh_spacing == "arclength"
                    ? tessellate(surface, patch,
                                 arclength_uniform_params(
                                     spec, mesh_t_min, mesh_t_max, mesh_nt),
                                 mesh_nv)
                    : tessellate(surface, patch, mesh_nt, mesh_nv);
            detail::write_file(mesh_out, [&](std::ostream& out) {
                write_obj(out, mesh);
            });
            return 0;
        }
        if (curvature_cmd->parsed()) {
            require_a(curvature_kind, curvature_a_opt);
            const RouletteSpec spec = detail::spec_from_names(
                curvature_kind, curvature_a, curvature_b);
            const CurvatureBundle bundle =
                curvatures_closed_form(SurfaceSpec::of(spec), curvature_t);
            std::cout << detail::curvature_json(bundle).dump(2) << '\n';
            return 0;
        }
        if (check_cmd->parsed()) {
            require_a(check_kind, check_a_opt);
            const RouletteSpec spec =
                detail::spec_from_names(check_kind, check_a, check_b);
            const std::vector<detail::CheckOutcome> outcomes =
                detail::run_invariant_suite(spec, check_seed);
            bool all_pass = true;
            nlohmann::json checks = nlohmann::json::array();
            for (const detail::CheckOutcome& outcome : outcomes) {
                all_pass = all_pass && outcome.pass;
                checks.push_back({{"name", outcome.name},
                                  {"max_error", outcome.max_error},
                                  {"tolerance", outcome.tolerance},
                                  {"pass", outcome.pass}});
            }
            const nlohmann::json report{
                {"kind", check_kind},   {"a", spec.conic.a},
                {"b", spec.conic.b},    {"seed", check_seed},
                {"checks", checks},     {"pass", all_pass}};
            std::cout << report.dump(2) << '\n';
            return all_pass ? 0 : 1;
        }
        if (fit_cmd->parsed()) {
            FitRequest request;
            if (fit_kind == "nodoid") {
                request.kind = FitKind::Nodoid1;
            } else if (fit_kind == "unduloid") {
                request.kind = FitKind::Unduloid;
            } else {
                request.kind = FitKind::Catenoid;
            }
            request.volume = fit_volume;
            request.radius = fit_radius;
            request.t0 = request.kind == FitKind::Catenoid ? 0.0 : fit_t0;
            const FitResult result = fit(request);
            std::cout << detail::fit_json(result).dump(2) << '\n';
            return 0;
        }
        if (family_cmd->parsed()) {
            namespace fs = std::filesystem;
            if (!family_out_dir.empty()) {
                fs::create_directories(family_out_dir);
            }
            const auto member_csv = [&](const std::string& stem,
                                        const RouletteSpec& spec,
                                        double t_min, double t_max) {
                if (family_out_dir.empty()) {
                    return std::string();
                }
                const std::string path =
                    (fs::path(family_out_dir) / (stem + ".csv")).string();
                const std::vector<ProfileSample> samples =
                    sample_profile(spec, t_min, t_max, family_samples);
                detail::write_file(path, [&](std::ostream& out) {
                    write_profile_csv(out, samples);
                });
                return path;
            };
            nlohmann::json members = nlohmann::json::array();
            if (family_type == "constant-length") {
                const std::vector<RouletteSpec> specs =
                    family_constant_length(family_a, family_ellipse_count,
                                           family_hyperbola_count);
                int index = 0;
                for (const RouletteSpec& spec : specs) {
                    char stem[64];
                    std::snprintf(stem, sizeof(stem), "member_%02d_%s",
                                  index,
                                  detail::kind_name(spec.kind).c_str());
                    const std::string path = member_csv(
                        stem, spec, family_t_min, family_t_max);
                    nlohmann::json entry{
                        {"index", index},
                        {"kind", detail::kind_name(spec.kind)},
                        {"conic", detail::conic_json(spec.conic)}};
                    if (!path.empty()) {
                        entry["csv"] = path;
                    }
                    members.push_back(entry);
                    ++index;
                }
                const nlohmann::json report{{"type", family_type},
                                            {"a", family_a},
                                            {"members", members}};
                std::cout << report.dump(2) << '\n';
                return 0;
            }
            if (!(family_volume > 0.0) || !(family_radius > 0.0)) {
                throw std::invalid_argument(
                    "family --type constant-volume requires --volume > 0 "
                    "and --radius > 0");
            }
            const std::vector<FamilyFit> fits = constant_volume_family(
                family_volume, family_radius, family_t0);
            for (const FamilyFit& entry : fits) {
                nlohmann::json member{{"label", entry.label},
                                      {"converged", entry.converged}};
                if (entry.converged) {
                    member["fit"] = detail::fit_json(entry.result);
                    RouletteKind kind = RouletteKind::Undulary1;
                    if (entry.request.kind == FitKind::Nodoid1) {
                        kind = RouletteKind::Nodary1;
                    } else if (entry.request.kind == FitKind::Catenoid) {
                        kind = RouletteKind::Catenary;
                    }
                    const RouletteSpec spec =
                        RouletteSpec::make(entry.result.conic, kind);
                    const double half =
                        entry.request.kind == FitKind::Catenoid
                            ? entry.result.t0
                            : entry.request.t0;
                    const std::string path = member_csv(
                        detail::sanitize_label(entry.label), spec, -half,
                        half);
                    if (!path.empty()) {
                        member["csv"] = path;
                    }
                } else {
                    member["message"] = entry.message;
                }
                members.push_back(member);
            }
            const nlohmann::json report{{"type", family_type},
                                        {"volume", family_volume},
                                        {"radius", family_radius},
                                        {"members", members}};
            std::cout << report.dump(2) << '\n';
            return 0;
        }
        if (composite_cmd->parsed()) {
            const ConicSpec conic =
                ConicSpec::hyperbola(composite_a, composite_b);
            CompositeOptions options;
            options.join_tol = composite_join_tol;
            options.closed = composite_closed;
            options.rings_per_arc = composite_rings;
            options.segments = composite_segments;
            const Mesh mesh = assemble_composite_nodoid(
                conic, composite_T, composite_periods, options);
            detail::write_file(composite_out, [&](std::ostream& out) {
                write_obj(out, mesh);
            });
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace delaunay::cli
