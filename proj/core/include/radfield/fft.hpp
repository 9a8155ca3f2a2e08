#pragma once

#include <complex>
#include <vector>

#include "radfield/diagnostics.hpp"
#include "radfield/grid.hpp"

namespace radfield {

// Discrete realizations of the continuum transforms
//   u^(xi)   = \int e^{+i xi.x} u(x) dx            (forward, 3D)
//   u(x)     = (2pi)^-3 \int e^{-i xi.x} u^(xi) dxi (inverse)
// and the partial transform in s with the same sign convention. Forward sums
// carry the cell volume (h^3 resp. ds); inverses carry (dxi/2pi)^3 resp.
// dnu/2pi, so a round trip is exact up to rounding.

SpectralField3 dft3(const ScalarField3& f);
ScalarField3 idft3(const SpectralField3& F, Diagnostics* diag = nullptr);

// Batched 1D transforms over contiguous rows of length grid.m().
// Row layout: data[row * m + i], i the s-index (or the nu-index).
void line_dft_rows(const LineGrid& grid, std::complex<double>* rows, int count);
void line_idft_rows(const LineGrid& grid, std::complex<double>* rows, int count);

// d/ds applied spectrally to real rows sampled on the line grid.
std::vector<double> line_derivative_rows(const LineGrid& grid,
                                         const std::vector<double>& rows, int count);

// Raw power-of-two complex FFT, sign = -1 for e^{-2pi i jk/n}, +1 for e^{+...}.
void fft_raw(std::complex<double>* data, int n, int sign);

}  // namespace radfield
