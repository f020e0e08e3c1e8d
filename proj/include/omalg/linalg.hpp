#pragma once

#include <vector>

#include "omalg/rational.hpp"

namespace omalg {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

/// Reduced row echelon form in place; returns the rank.
int rref(Mat& m);

int rank(Mat m);

/// Basis (as rows) of { v : m * v = 0 }, columns of m indexing v.
Mat null_space(const Mat& m);

Mat transpose(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);
Mat identity(int n);

}  // namespace omalg
