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

// Umbrella header for the full library: conic sections and their roulettes,
// surfaces of revolution with curvature machinery, numeric kernels,
// constrained fitting, tessellation, and serialization.

#include "delaunay/conic.hpp"
#include "delaunay/io.hpp"
#include "delaunay/mesh.hpp"
#include "delaunay/numerics.hpp"
#include "delaunay/roulette.hpp"
#include "delaunay/solver.hpp"
#include "delaunay/surface.hpp"
