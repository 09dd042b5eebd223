#pragma once

#include <Eigen/Dense>
#include <functional>

namespace hcc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Black-box objective over a real vector.
using ObjectiveFn = std::function<double(const Vector&)>;

}  // namespace hcc
