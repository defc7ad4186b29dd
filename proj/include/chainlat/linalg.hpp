#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace chainlat {

using BigInt = boost::multiprecision::cpp_int;

/// Rank over the rationals of an integer matrix, by fraction-free Bareiss
/// elimination. Exact; no pivoting ambiguity affects the result.
int integer_matrix_rank(std::vector<std::vector<BigInt>> m);

} // namespace chainlat
