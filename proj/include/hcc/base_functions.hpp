#pragma once

#include <string>

#include "hcc/types.hpp"

namespace hcc {

enum class BaseFunction { Schwefel, Elliptic, Rastrigin, Ackley };

// All four vanish at the origin and are non-negative everywhere.
double schwefel(const Vector& z);   // sum of squared prefix sums
double elliptic(const Vector& z);   // condition 1e6 axis weighting; needs dim >= 2
double rastrigin(const Vector& z);
double ackley(const Vector& z);

double evaluate_base(BaseFunction f, const Vector& z);

std::string to_string(BaseFunction f);
BaseFunction base_function_from_string(const std::string& name);

}  // namespace hcc
