#pragma once

#include <cstdint>
#include <vector>

namespace heckelab::testing {

// Reference coefficients by the slow route: Euler's pentagonal-number
// series for the generating product, multiplied into an accumulator 24
// times by schoolbook convolution. Index n holds tau(n), 1 <= n <= n_max.
// Completely independent of the NTT/CRT build path.
std::vector<__int128> naive_tau(uint64_t n_max);

}  // namespace heckelab::testing
