#pragma once

#include <cstdint>
#include <vector>

#include "holochern/report.hpp"

namespace holochern {

// d EZ = EZ d, AW EZ = id and d AW = AW d on EZ images, for all generator
// pairs of Delta^n x Delta^m with n, m <= max_dim.
CheckReport check_ez_aw(int max_dim);
// Shuffle signs against the inversion count of (mu, nu), p + q <= max_total.
CheckReport check_shuffle_signs(int max_total);
// The lifted-index bijection for all q <= max_q, k <= max_k.
CheckReport check_bijections(int max_q, int max_k);
// Both integration identities on a formal five-chart presheaf with random
// coefficients, k <= max_k and tuples of level <= max_q.
CheckReport check_integration(int max_k, int max_q, std::uint64_t seed);

std::vector<CheckReport> run_selftest(std::uint64_t seed = 1);

}  // namespace holochern
