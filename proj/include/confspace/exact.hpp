#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "confspace/errors.hpp"

namespace confspace {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact rank by rational Gaussian elimination. Rows are the input vectors.
int exact_rank(std::vector<RationalVector> rows);

/// Determinant of a square rational matrix (column vectors).
Rational exact_det(const std::vector<RationalVector>& cols);

Rational parse_rational(const std::string& num, const std::string& den);
std::pair<std::string, std::string> rational_parts(const Rational& r);

} // namespace confspace
