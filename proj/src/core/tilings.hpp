/**
 * Copyright 2026 The mgnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "core/matchgate.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace mgnet {

using Point = std::complex<double>;

enum class Geometry { Regular, Happy, Mmera };
enum class Boundary { Antiperiodic, Periodic };
enum class Fill { None, Zero, One };
enum class TileKind { Triangle, Pentagon, Central, Isometry, Disentangler };

struct Tile {
    int id = 0;
    int sides = 0;
    Point center;
    // global labels, clockwise, `channels` consecutive labels per side
    std::vector<long> edgeLabels;
    TileKind kind = TileKind::Triangle;
    Fill fill = Fill::None;
    int layer = 0;
};

struct Step {
    enum class Kind { Start, Rotate, Attach, SelfContract };
    Kind kind = Kind::Start;
    int tile = -1;   // Start, Attach
    long shift = 0;  // Rotate: leg i -> i + shift; Attach: tile leg offset
    long edge = -1;  // Attach, SelfContract
};

struct NetworkLayout {
    Geometry geometry = Geometry::Regular;
    int q = 0;
    double cutoff = 0;
    int chi = 2;
    int layers = 0;
    std::string growth;  // HaPPY ring sequence
    Boundary boundary = Boundary::Antiperiodic;
    std::vector<Tile> tiles;
    std::vector<Step> schedule;
    std::vector<long> boundaryEdges;

    int channels() const;
    Index boundarySites() const { return Index(boundaryEdges.size()); }
};

// q >= 6; cutoff is the Euclidean distance for q = 6, the disk radius else
NetworkLayout build_regular(int q, double cutoff, int chi = 2,
                            Boundary bc = Boundary::Antiperiodic);

// layers = 1 is the central pentagon; each further layer adds every
// pentagon sharing an edge with the region
NetworkLayout build_happy(int layers);
// growth word over {e, v}: e adds edge neighbours, v adds vertex neighbours
NetworkLayout build_happy_growth(const std::string& growth);

NetworkLayout build_mmera(int layers);

// radius for tilings, layer count (from the centre) for the mMERA
NetworkLayout apply_ir_cutoff(const NetworkLayout& layout, double region, Fill fill);

// Greedy planar schedule; tiles are consumed in their stored order,
// first attachable tile first.
void plan_schedule(NetworkLayout& layout);

// Runs the schedule on rank-only bookkeeping and returns the open legs.
std::vector<long> simulate_schedule(const NetworkLayout& layout);

using Params = std::map<std::string, double>;

// parameter names by geometry: regular {a} or {a12, a13, a23};
// mmera {a, b, c} or {a..f}, optional {a0, b0}; happy none
std::vector<std::string> parameter_names(const NetworkLayout& layout);
std::vector<GeneratingMatrix> tile_generators(const NetworkLayout& layout, const Params& params);

GeneratingMatrix happy_pentagon();
GeneratingMatrix mmera_central(double a0, double b0);
GeneratingMatrix mmera_isometry(double a, double b);
GeneratingMatrix mmera_disentangler(double c, double d, double e, double f);
double mmera_a0();
double mmera_b0();

std::string layout_to_json(const NetworkLayout& layout);

// Poincare disk helpers
Point mobius(Point p, Point z);
Point mobius_inv(Point p, Point w);
// reflection of z across the geodesic through p and q
Point reflect(Point p, Point q, Point z);

} // namespace mgnet
