#include "hcc/base_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace hcc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

double schwefel(const Vector& z) {
  double total = 0.0;
  double prefix = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    prefix += z[i];
    total += prefix * prefix;
  }
  return total;
}

double elliptic(const Vector& z) {
  const Eigen::Index n = z.size();
  if (n < 2) throw std::invalid_argument("elliptic: dimension must be >= 2");
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double exponent = 6.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    total += std::pow(10.0, exponent) * z[i] * z[i];
  }
  return total;
}

double rastrigin(const Vector& z) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i)
    total += z[i] * z[i] - 10.0 * std::cos(kTwoPi * z[i]) + 10.0;
  return total;
}

double ackley(const Vector& z) {
  static const double kE = std::exp(1.0);
  const double n = static_cast<double>(z.size());
  double sq = 0.0;
  double cs = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    sq += z[i] * z[i];
    cs += std::cos(kTwoPi * z[i]);
  }
  // grouped so the value is exactly zero at the origin
  return 20.0 * (1.0 - std::exp(-0.2 * std::sqrt(sq / n))) + (kE - std::exp(cs / n));
}

double evaluate_base(BaseFunction f, const Vector& z) {
  switch (f) {
    case BaseFunction::Schwefel: return schwefel(z);
    case BaseFunction::Elliptic: return elliptic(z);
    case BaseFunction::Rastrigin: return rastrigin(z);
    case BaseFunction::Ackley: return ackley(z);
  }
  throw std::invalid_argument("evaluate_base: unknown base function");
}

std::string to_string(BaseFunction f) {
  switch (f) {
    case BaseFunction::Schwefel: return "schwefel";
    case BaseFunction::Elliptic: return "elliptic";
    case BaseFunction::Rastrigin: return "rastrigin";
    case BaseFunction::Ackley: return "ackley";
  }
  throw std::invalid_argument("to_string: unknown base function");
}

BaseFunction base_function_from_string(const std::string& name) {
  if (name == "schwefel") return BaseFunction::Schwefel;
  if (name == "elliptic") return BaseFunction::Elliptic;
  if (name == "rastrigin") return BaseFunction::Rastrigin;
  if (name == "ackley") return BaseFunction::Ackley;
  throw std::invalid_argument("unknown base function '" + name + "'");
}

}  // namespace hcc
