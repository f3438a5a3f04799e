#pragma once

#include <vector>

namespace swarmgrid::geometry {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Hover positions for a swarm of k UAVs sharing one circular coverage area.
/// Centers are in meters relative to the area center; distances[j] is the
/// transit distance |centers[j]| flown by UAV j each sortie.
struct SwarmLayout {
    int k = 0;
    double cell_radius_m = 0.0;
    std::vector<Point> centers;
    std::vector<double> distances_m;
};

/// Ratio between the area radius and the per-UAV cell radius for k equal
/// cells. Tabulated for k = 1..7, closed form 1 + 2 cos(2*pi/(k-1)) above.
/// Throws std::domain_error outside 1..10.
double packing_gamma(int k);

/// Per-UAV cell radius D(k) = D_max / gamma_k. Requires d_max_m > 0.
double packing_radius(int k, double d_max_m);

/// Deterministic hover layout whose k disks of radius packing_radius(k)
/// jointly cover the disk of radius d_max_m. Scaling d_max_m scales every
/// coordinate exactly. Throws std::domain_error for k outside 1..10.
SwarmLayout hover_layout(int k, double d_max_m);

/// Coverage certificate: true iff every point of a grid_n x grid_n lattice
/// over [-d_max, d_max]^2 that lies strictly inside the coverage disk is
/// within cell_radius of at least one center. Requires grid_n >= 2.
bool coverage_check(const SwarmLayout& layout, double d_max_m, int grid_n);

} // namespace swarmgrid::geometry
