#pragma once

// Projective geometry of the rank-one block: its nine column points, their
// collinear triples, and which incidence automorphisms come from PGL(3).

#include "waring/projective.hpp"
#include "waring/symmetry.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace waring {

/// Column space of a rank-one matrix (first nonzero column, canonically scaled).
/// Throws std::invalid_argument when rank(m) != 1.
ProjPoint column_point(const SquareMatrix& m);

/// det[p q r] == 0.
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

using Line = std::array<int, 3>;  // sorted 0-based point indices

struct Configuration {
    std::vector<ProjPoint> points;
    std::vector<Line> lines;
};

/// Enumerates every triple and keeps the collinear ones. Throws
/// std::invalid_argument on duplicate points or on four collinear points.
Configuration build_configuration(const std::vector<ProjPoint>& points);

/// The column points of m1..m9.
std::vector<ProjPoint> first_block_points(const WaringDecomposition& d);

/// The twelve lines of the affine plane F_3^2, in telephone indices.
std::vector<Line> affine_plane_lines();

/// Whether the configuration is an affine plane of order three: 9 points,
/// 12 lines, 4 lines per point, each pair of points on exactly one line.
/// On failure `why` receives a diagnostic.
bool is_affine_plane_of_order_three(const Configuration& c, std::string* why = nullptr);

using PointPermutation = std::vector<int>;  // 0-based images

/// All permutations of the points that map lines to lines.
std::vector<PointPermutation> incidence_automorphisms(const Configuration& c);

/// The projective matrix inducing perm on the points, if any. Uses the frame
/// of points (1,3,4,6); throws std::invalid_argument when that frame is degenerate.
std::optional<ProjectiveMatrix> pgl_realizable(const PointPermutation& perm, const Configuration& c);

/// x^3 + y^3 + z^3 == 0 and xyz == 0.
bool inflection_check(const ProjPoint& p);

}  // namespace waring
