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
#include <cstddef>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "delaunay/roulette.hpp"
#include "delaunay/surface.hpp"

namespace delaunay {

/// Quad or triangle face; `v[0..count-1]` are vertex indices in winding
/// order (count is 3 or 4).
struct MeshFace {
    std::array<int, 4> v{0, 0, 0, 0};
    int count = 4;
};

/// Tessellated surface: exact vertex positions and unit normals, faces in
/// consistent winding order (counterclockwise seen from the normal side).
struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<Vec3> normals; ///< one unit normal per vertex
    std::vector<MeshFace> faces;
    bool closed_in_v = false; ///< revolution seam stitched, no duplicate ring
};

/// Thrown when composite assembly preconditions fail; carries the measured
/// endpoint radial gap.
class AssemblyError : public std::runtime_error {
public:
    AssemblyError(const std::string& message, double gap)
        : std::runtime_error(message), gap_(gap) {}

    double gap() const noexcept { return gap_; }

private:
    double gap_;
};

/// Tessellate a surface patch on an nt x nv parameter grid.
///
/// Vertices are exact surface evaluations (never interpolants) with exact
/// unit normals. When the v-range spans a full turn (within 1e-12) the seam
/// is stitched: nv distinct columns, faces wrapping around, no duplicate
/// ring. Otherwise the nv columns span [v1, v2] inclusive.
inline Mesh tessellate(const SurfaceSpec& spec, const PatchDomain& patch,
                       int nt, int nv) {
    spec.validate();
    patch.validate();
    if (nt < 2) {
        throw std::invalid_argument("tessellate: requires nt >= 2");
    }
    if (nv < 3) {
        throw std::invalid_argument("tessellate: requires nv >= 3");
    }

    Mesh mesh;
    mesh.closed_in_v =
        std::abs(patch.v_span() - 2.0 * std::numbers::pi) <= 1e-12;
    const double dt = (patch.t2 - patch.t1) / (nt - 1);
    const double dv =
        mesh.closed_in_v ? patch.v_span() / nv : patch.v_span() / (nv - 1);

    mesh.vertices.reserve(static_cast<std::size_t>(nt) * nv);
    mesh.normals.reserve(static_cast<std::size_t>(nt) * nv);
    for (int i = 0; i < nt; ++i) {
        const double t = patch.t1 + i * dt;
        for (int j = 0; j < nv; ++j) {
            const double v = patch.v1 + j * dv;
            mesh.vertices.push_back(surface_point(spec, t, v));
            mesh.normals.push_back(surface_normal(spec, t, v));
        }
    }

    const int strips = mesh.closed_in_v ? nv : nv - 1;
    mesh.faces.reserve(static_cast<std::size_t>(nt - 1) * strips);
    for (int i = 0; i + 1 < nt; ++i) {
        for (int j = 0; j < strips; ++j) {
            const int j2 = (j + 1) % nv;
            MeshFace face;
            face.v = {i * nv + j, (i + 1) * nv + j, (i + 1) * nv + j2,
                      i * nv + j2};
            mesh.faces.push_back(face);
        }
    }
    return mesh;
}

/// Tessellate a surface patch at explicit meridian parameter values.
///
/// Same contract as the grid overload, except rows sit at the given
/// strictly increasing t values (for instance arc-length-uniform ones)
/// instead of a uniform parameter grid. The patch supplies the v-range.
inline Mesh tessellate(const SurfaceSpec& spec, const PatchDomain& patch,
                       const std::vector<double>& t_values, int nv) {
    spec.validate();
    patch.validate();
    const int nt = static_cast<int>(t_values.size());
    if (nt < 2) {
        throw std::invalid_argument(
            "tessellate: requires at least 2 parameter values");
    }
    if (nv < 3) {
        throw std::invalid_argument("tessellate: requires nv >= 3");
    }
    for (int i = 0; i + 1 < nt; ++i) {
        if (!(t_values[i] < t_values[i + 1])) {
            throw std::invalid_argument(
                "tessellate: parameter values must increase");
        }
    }

    Mesh mesh;
    mesh.closed_in_v =
        std::abs(patch.v_span() - 2.0 * std::numbers::pi) <= 1e-12;
    const double dv =
        mesh.closed_in_v ? patch.v_span() / nv : patch.v_span() / (nv - 1);

    mesh.vertices.reserve(static_cast<std::size_t>(nt) * nv);
    mesh.normals.reserve(static_cast<std::size_t>(nt) * nv);
    for (int i = 0; i < nt; ++i) {
        const double t = t_values[i];
        for (int j = 0; j < nv; ++j) {
            const double v = patch.v1 + j * dv;
            mesh.vertices.push_back(surface_point(spec, t, v));
            mesh.normals.push_back(surface_normal(spec, t, v));
        }
    }

    const int strips = mesh.closed_in_v ? nv : nv - 1;
    mesh.faces.reserve(static_cast<std::size_t>(nt - 1) * strips);
    for (int i = 0; i + 1 < nt; ++i) {
        for (int j = 0; j < strips; ++j) {
            const int j2 = (j + 1) % nv;
            MeshFace face;
            face.v = {i * nv + j, (i + 1) * nv + j, (i + 1) * nv + j2,
                      i * nv + j2};
            mesh.faces.push_back(face);
        }
    }
    return mesh;
}

/// Assembly controls for composite nodoids.
struct CompositeOptions {
    double join_tol = 1e-5; ///< admissible endpoint radial gap
    bool closed = false;    ///< bridge the final ring back to the first
    bool cap_ends = false;  ///< fan flat discs over open boundary rings
    int rings_per_arc = 64; ///< meridian samples per arc piece
    int segments = 64;      ///< vertices per revolution ring
};

/// Divergence-theorem volume of a mesh: sum of signed tetrahedron volumes
/// spanned by the origin and each face triangle. Equals the enclosed volume
/// (up to the global orientation sign) when the mesh is closed.
inline double mesh_volume_divergence(const Mesh& mesh) {
    double six_volume = 0.0;
    for (const MeshFace& face : mesh.faces) {
        const Vec3& p0 = mesh.vertices[static_cast<std::size_t>(face.v[0])];
        for (int k = 1; k + 1 < face.count; ++k) {
            const Vec3& p1 =
                mesh.vertices[static_cast<std::size_t>(face.v[k])];
            const Vec3& p2 =
                mesh.vertices[static_cast<std::size_t>(face.v[k + 1])];
            six_volume += dot(p0, cross(p1, p2));
        }
    }
    return six_volume / 6.0;
}

namespace detail {

// Directed boundary edges: edges whose reverse never occurs. For a
// consistently wound mesh these trace the boundary cycles in order.
inline std::map<int, int> boundary_successors(const Mesh& mesh) {
    std::map<std::pair<int, int>, int> directed;
    for (const MeshFace& face : mesh.faces) {
        for (int k = 0; k < face.count; ++k) {
            const int u = face.v[k];
            const int v = face.v[(k + 1) % face.count];
            ++directed[{u, v}];
        }
    }
    std::map<int, int> successor;
    for (const auto& [edge, count] : directed) {
        (void)count;
        if (directed.find({edge.second, edge.first}) == directed.end()) {
            // Boundary edges of an oriented surface are traversed once;
            // record the cycle in reversed direction (v -> u) so caps added
            // along it restore consistent winding.
            successor[edge.second] = edge.first;
        }
    }
    return successor;
}

} // namespace detail

/// Number of boundary loops (rings) of the mesh: cycles of edges used by
/// exactly one face. Zero for a combinatorially closed mesh.
inline int boundary_ring_count(const Mesh& mesh) {
    std::map<int, int> successor = detail::boundary_successors(mesh);
    int rings = 0;
    while (!successor.empty()) {
        ++rings;
        const int start = successor.begin()->first;
        int at = start;
        do {
            const auto it = successor.find(at);
            if (it == successor.end()) {
                // Open chain rather than a cycle; count it and stop.
                break;
            }
            const int next = it->second;
            successor.erase(it);
            at = next;
        } while (at != start);
    }
    return rings;
}

/// Fan a flat cap over every boundary ring, closing the mesh. Each cap adds
/// one centroid vertex and one triangle per boundary edge, wound to keep
/// the mesh orientation consistent. Returns the number of caps added.
inline int cap_boundary_rings(Mesh& mesh) {
    std::map<int, int> successor = detail::boundary_successors(mesh);
    int caps = 0;
    while (!successor.empty()) {
        // Extract one cycle, already in cap winding order.
        std::vector<int> cycle;
        const int start = successor.begin()->first;
        int at = start;
        do {
            cycle.push_back(at);
            const auto it = successor.find(at);
            if (it == successor.end()) {
                throw std::invalid_argument(
                    "cap_boundary_rings: boundary is not a closed cycle");
            }
            const int next = it->second;
            successor.erase(it);
            at = next;
        } while (at != start);
        if (cycle.size() < 3) {
            throw std::invalid_argument(
                "cap_boundary_rings: degenerate boundary cycle");
        }

        Vec3 centroid{0.0, 0.0, 0.0};
        for (int index : cycle) {
            centroid = centroid +
                       mesh.vertices[static_cast<std::size_t>(index)];
        }
        centroid = (1.0 / static_cast<double>(cycle.size())) * centroid;

        const Vec3 first =
            mesh.vertices[static_cast<std::size_t>(cycle[0])] - centroid;
        const Vec3 second =
            mesh.vertices[static_cast<std::size_t>(cycle[1])] - centroid;
        Vec3 cap_normal = cross(first, second);
        const double len = norm(cap_normal);
        if (!(len > 0.0)) {
            throw std::invalid_argument(
                "cap_boundary_rings: degenerate cap plane");
        }
        cap_normal = (1.0 / len) * cap_normal;

        const int center = static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back(centroid);
        mesh.normals.push_back(cap_normal);
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int u = cycle[k];
            const int v = cycle[(k + 1) % cycle.size()];
            MeshFace face;
            face.v = {u, v, center, 0};
            face.count = 3;
            mesh.faces.push_back(face);
        }
        ++caps;
    }
    return caps;
}

/// Assemble a composite nodoid mesh.
///
/// The meridian chains kind-1 nodary arcs (t from -T to T) with reversed
/// kind-2 arcs (t from T to -T), each piece translated axially so
/// consecutive endpoints share their axial coordinate; the radial gap
/// |f2(T) - f1(T)| = 2ab / sqrt(c^2 cosh^2 T - a^2) must not exceed
/// join_tol. Rings are bridged with quad bands (vertices stay exact
/// evaluations; the joins are position-tolerant, direction-exact). Normals
/// on reversed arcs are negated so the mesh is consistently oriented.
/// With options.closed the final ring is bridged back to the first
/// (combinatorially closed, zero boundary rings); with options.cap_ends the
/// two open boundary rings are fanned shut instead.
inline Mesh assemble_composite_nodoid(const ConicSpec& conic, double T,
                                      int periods,
                                      const CompositeOptions& options = {}) {
    conic.validate();
    if (conic.kind != ConicKind::Hyperbola) {
        throw std::invalid_argument(
            "assemble_composite_nodoid: conic must be a hyperbola");
    }
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw std::invalid_argument(
            "assemble_composite_nodoid: requires T > 0");
    }
    if (periods < 1) {
        throw std::invalid_argument(
            "assemble_composite_nodoid: requires periods >= 1");
    }
    if (options.rings_per_arc < 2 || options.segments < 3) {
        throw std::invalid_argument(
            "assemble_composite_nodoid: grid too coarse");
    }
    if (options.closed && options.cap_ends) {
        throw std::invalid_argument(
            "assemble_composite_nodoid: closed and cap_ends are exclusive");
    }

    const RouletteSpec neck = RouletteSpec::nodary1(conic.a, conic.b);
    const RouletteSpec bulge = RouletteSpec::nodary2(conic.a, conic.b);
    const double gap = roulette_eval(bulge, T).radius -
                       roulette_eval(neck, T).radius;
    if (!(gap <= options.join_tol)) {
        throw AssemblyError(
            "assemble_composite_nodoid: endpoint radial gap " +
                std::to_string(gap) + " exceeds join tolerance " +
                std::to_string(options.join_tol),
            gap);
    }

    const SurfaceSpec neck_surface = SurfaceSpec::of(neck);
    const SurfaceSpec bulge_surface = SurfaceSpec::of(bulge);
    const int rings = options.rings_per_arc;
    const int nv = options.segments;
    const double dv = 2.0 * std::numbers::pi / nv;

    Mesh mesh;
    mesh.closed_in_v = true;
    double cursor = 0.0; // axial coordinate of the next piece's start
    const int piece_count = 2 * periods;
    for (int piece = 0; piece < piece_count; ++piece) {
        const bool reversed = piece % 2 == 1;
        const SurfaceSpec& surface = reversed ? bulge_surface : neck_surface;
        const RouletteSpec& meridian = reversed ? bulge : neck;
        const double t_start = reversed ? T : -T;
        const double t_end = reversed ? -T : T;
        const double offset =
            cursor - roulette_eval(meridian, t_start).axial;
        const double dt = (t_end - t_start) / (rings - 1);
        for (int i = 0; i < rings; ++i) {
            const double t = t_start + i * dt;
            const double axial =
                roulette_eval(meridian, t).axial + offset;
            for (int j = 0; j < nv; ++j) {
                const double v = j * dv;
                Vec3 point = surface_point(surface, t, v);
                point.z = axial;
                Vec3 normal = surface_normal(surface, t, v);
                if (reversed) {
                    normal = -1.0 * normal;
                }
                mesh.vertices.push_back(point);
                mesh.normals.push_back(normal);
            }
        }
        cursor = roulette_eval(meridian, t_end).axial + offset;
    }

    // One quad band between every consecutive ring pair covers both the
    // intra-piece strips and the inter-piece bridges.
    const int total_rings = piece_count * rings;
    const int bands = options.closed ? total_rings : total_rings - 1;
    for (int r = 0; r < bands; ++r) {
        const int r2 = (r + 1) % total_rings;
        for (int j = 0; j < nv; ++j) {
            const int j2 = (j + 1) % nv;
            MeshFace face;
            face.v = {r * nv + j, r2 * nv + j, r2 * nv + j2, r * nv + j2};
            mesh.faces.push_back(face);
        }
    }

    if (options.cap_ends) {
        cap_boundary_rings(mesh);
    }
    return mesh;
}

} // namespace delaunay
