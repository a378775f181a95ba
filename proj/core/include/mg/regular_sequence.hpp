#pragma once

#include <vector>

#include "mg/ideal.hpp"

namespace mg {

/// Whether forms f_1..f_r, in the given order, form a regular sequence on
/// S/I: (I + (f_1..f_{k-1})) : f_k = I + (f_1..f_{k-1}) for every k, and
/// I + (f_1..f_r) is proper unless `allow_unit` is set.
bool regular_sequence_test(const Ideal& ideal, const std::vector<Polynomial>& forms,
                           bool allow_unit = false);

/// The sequence x[i,j] - x[i,1] for every block i and 2 <= j <= n_i.
std::vector<Polynomial> gamma_sequence(const BlockRing& ring);

}  // namespace mg
