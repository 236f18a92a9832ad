#pragma once

#include <complex>

#include <Eigen/Dense>

namespace crownlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// The matrix imaginary unit. It plays the role of the first complex
/// structure j on g = sl(n, C); the second complexification never appears
/// as a number (see manin.hpp).
inline constexpr Complex kJ{0.0, 1.0};

}  // namespace crownlab
