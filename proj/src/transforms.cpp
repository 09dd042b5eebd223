#include "hcc/transforms.hpp"

#include <cmath>

namespace hcc {

double t_osz_scalar(double x) {
  if (x == 0.0) return 0.0;
  const double xhat = std::log(std::abs(x));
  const double c1 = x > 0.0 ? 10.0 : 5.5;
  const double c2 = x > 0.0 ? 7.9 : 3.1;
  const double sign = x > 0.0 ? 1.0 : -1.0;
  return sign * std::exp(xhat + 0.049 * (std::sin(c1 * xhat) + std::sin(c2 * xhat)));
}

Vector t_osz(const Vector& v) {
  return v.unaryExpr([](double x) { return t_osz_scalar(x); });
}

Vector t_asy(const Vector& v, double beta) {
  const Eigen::Index n = v.size();
  Vector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = v[i];
    if (x > 0.0 && n > 1) {
      const double position = static_cast<double>(i) / static_cast<double>(n - 1);
      out[i] = std::pow(x, 1.0 + beta * position * std::sqrt(x));
    } else {
      out[i] = x;
    }
  }
  return out;
}

}  // namespace hcc
