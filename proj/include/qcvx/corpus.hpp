#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcvx/function_model.hpp"

namespace qcvx::corpus {

// Fixtures on [0, 1].
Function1D tent();             // (0,0) (1/2,1) (1,0)
Function1D vee();              // (0,1) (1/2,0) (1,1)
Function1D ramp_plateau();     // (0,0) (1/2,1/2) (1,1/2)
Function1D monotone();         // (0,0) (1,1)
Function1D monotone_concave(); // (0,0) (1/2,3/4) (1,1)
Function1D constant(const Rational& value = 3);

/// Seeded random piecewise-linear function on [0,1] with between 2 and
/// `max_knots` knots at multiples of 1/64 and values n/d in [0,10] with
/// d in {1,2,3,4}. The same seed yields the same function on every platform.
Function1D random_piecewise_linear(int max_knots, std::uint64_t seed);

std::vector<std::string> names();

}  // namespace qcvx::corpus
