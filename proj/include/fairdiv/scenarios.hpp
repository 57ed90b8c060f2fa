#pragma once

// The reference profiles reproduced by `verify-example`, plus the opponent
// families used by the incentive experiments.

#include <vector>

#include "fairdiv/cake2d.hpp"
#include "fairdiv/measure.hpp"

namespace fairdiv::scenarios {

using Profile = std::vector<ValueMeasure1D>;

/// Uniform; uniform on (0, 1/3); uniform on (2/3, 1).
Profile example2();
/// Unit square; player 1 uniform on the top half, player 2 on the bottom half.
std::vector<cake2d::Cake2DMeasure> example3();
/// Two players, densities 8/5 and 2/5 alternating on quarters.
Profile example4();
/// Three players, densities 12/5 and 3/10 on sixths.
Profile example5();
/// Uniform; density 2 on [0, 1/4] and [3/4, 1].
Profile example6();
/// Uniform; two players uniform on (2/5, 3/5).
Profile example7();
/// True measures for the misreport example: player 1 values only (1/2, 1],
/// player 2 only [0, 1/2].
Profile example8_truth();
/// n players, all mass uniform on the top edge {(x, 1)}.
std::vector<cake2d::Cake2DMeasure> frosting(std::size_t players);

/// Piecewise-uniform with median b: half the mass uniform on [0, b], half on [b, 1].
ValueMeasure1D uniform_with_median(const Rational& b);
/// Two-piece piecewise-uniform measure putting mass q on [0, p].
ValueMeasure1D split_uniform(const Rational& p, const Rational& q);

}  // namespace fairdiv::scenarios
