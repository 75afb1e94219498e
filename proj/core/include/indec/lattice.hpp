#pragma once

// Enumeration of Z[rho] elements whose conjugates lie in given intervals.

#include "indec/embeddings.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace indec {

/// Return false to stop the enumeration early.
using LatticeVisitor = std::function<bool(const Coords&)>;

/// Calls visit on a superset of the integer triples whose i-th conjugate
/// lies in targets[i]; the superset is tight up to the enclosure width, so
/// callers confirm membership exactly. Coordinates are visited with x3
/// outermost, then x2, then x1, all ascending. Returns the number of
/// triples visited.
///
/// For fixed x3 the admissible x2 are cut out by the pairwise conditions
/// y_i - y_k in T_i - T_k, which are exact by Helly's theorem in dimension
/// one; for fixed (x2, x3) the x1 range is the intersection of T_i - s_i.
std::uint64_t for_each_lattice_point(const std::array<RationalInterval, 3>& targets,
                                     const RootEnclosures& enc, const LatticeVisitor& visit);

/// Collects every visited triple of for_each_lattice_point.
std::vector<Coords> lattice_points(const std::array<RationalInterval, 3>& targets, const RootEnclosures& enc);

} // namespace indec
