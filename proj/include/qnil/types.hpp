#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qnil {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Spectral-radius threshold scale: a matrix counts as numerically nilpotent
/// when its spectral radius is below this factor times a problem scale
/// (by default the operator norm).
inline constexpr double kQuasinilpotentTolFactor = 1e-8;

/// Eigenvalues closer than this factor times the operator norm are merged
/// into one cluster before any connectivity analysis.
inline constexpr double kClusterTolFactor = 1e-8;

}  // namespace qnil
