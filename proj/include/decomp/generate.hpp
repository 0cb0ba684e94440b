#pragma once

#include <string>
#include <vector>

#include "decomp/rotation_graph.hpp"

namespace decomp {

// Embedded test families. Planar kinds come with their sphere embedding
// (characteristic 2); toroidal_grid with its torus embedding
// (characteristic 0); complete 5 and 6 use the ascending rotation.
RotationGraph gen_cycle(int n);                    // n >= 3
RotationGraph gen_path(int n);                     // n >= 2
RotationGraph gen_wheel(int n);                    // rim length n >= 3, hub is vertex 0
RotationGraph gen_prism(int n);                    // n >= 3, 2n vertices
RotationGraph gen_planar_grid(int m, int n);       // m x n vertices, m*n >= 2
RotationGraph gen_toroidal_grid(int m, int n);     // m, n >= 3, 4-regular
RotationGraph gen_hex_grid(int m, int n);          // m x n hexagon bricks, m, n >= 1
RotationGraph gen_complete(int n);                 // 2 <= n <= 6

// Dispatch by kind name as used by the command line:
// cycle, path, wheel, prism, planar_grid, toroidal_grid, hex_grid, complete.
// Throws GraphError on unknown kind, wrong parameter count, or out-of-range
// parameters.
RotationGraph generate(const std::string& kind, const std::vector<int>& params);

}  // namespace decomp
