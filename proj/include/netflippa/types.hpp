#pragma once

#include <Eigen/Dense>

namespace netflippa {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

}  // namespace netflippa
