#pragma once

#include "hcc/types.hpp"

namespace hcc {

// Smooth local-irregularity map, applied elementwise. Zero maps to zero and
// +/-1 are fixed points; constants differ between the positive and negative
// branches.
double t_osz_scalar(double x);
Vector t_osz(const Vector& v);

// Symmetry-breaking map. Entry i (1-based) of an n-vector gets exponent
// 1 + beta * (i-1)/(n-1) * sqrt(x_i) on the positive branch and is left
// unchanged otherwise; the position index is local to the vector passed in.
Vector t_asy(const Vector& v, double beta);

}  // namespace hcc
