#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "beamlab/oracle/grid.hpp"

namespace beamlab::oracle {

using cplx = std::complex<double>;

/// Samples of a 2D field on a square grid; values(i, j) = Psi(x_i, y_j).
struct Field2D {
  Grid1D grid;
  Eigen::MatrixXcd values;
};

std::vector<cplx> sample_field_1d(const std::function<cplx(double)>& fn, const Grid1D& grid);
Field2D sample_field_2d(const std::function<cplx(double, double)>& fn, const Grid1D& grid);

}  // namespace beamlab::oracle
