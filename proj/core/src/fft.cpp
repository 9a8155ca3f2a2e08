#include "radfield/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace radfield {

namespace {

// FFTW planning is not thread-safe; execution of a created plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

void run_1d_many(std::complex<double>* rows, int m, int count, int sign) {
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    int dims[1] = {m};
    plan = fftw_plan_many_dft(1, dims, count, as_fftw(rows), nullptr, 1, m, as_fftw(rows),
                              nullptr, 1, m, sign, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fft: planning failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

void run_3d(std::complex<double>* data, int n, int sign) {
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_3d(n, n, n, as_fftw(data), as_fftw(data), sign, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fft: planning failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

// The grids start at -L (not 0), which shows up as a (-1)^{i+j+k} phase
// relative to the plain DFT.
void checkerboard_3d(std::complex<double>* a, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::size_t base = (static_cast<std::size_t>(i) * n + j) * n;
      int p = (i + j) & 1;
      for (int k = 0; k < n; ++k)
        if ((p + k) & 1) a[base + k] = -a[base + k];
    }
}

void checkerboard_rows(std::complex<double>* rows, int m, int count) {
  for (int r = 0; r < count; ++r) {
    std::complex<double>* row = rows + static_cast<std::size_t>(r) * m;
    for (int i = 1; i < m; i += 2) row[i] = -row[i];
  }
}

}  // namespace

void fft_raw(std::complex<double>* data, int n, int sign) {
  run_1d_many(data, n, 1, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
}

SpectralField3 dft3(const ScalarField3& f) {
  const int n = f.grid.n();
  std::vector<std::complex<double>> buf(f.values.begin(), f.values.end());
  run_3d(buf.data(), n, FFTW_BACKWARD);  // e^{+2pi i jk/n}
  checkerboard_3d(buf.data(), n);
  const double h3 = std::pow(f.grid.spacing(), 3);
  for (auto& z : buf) z *= h3;
  return SpectralField3(f.grid, std::move(buf));
}

ScalarField3 idft3(const SpectralField3& F, Diagnostics* diag) {
  const int n = F.grid.n();
  std::vector<std::complex<double>> buf = F.coeffs;
  checkerboard_3d(buf.data(), n);
  run_3d(buf.data(), n, FFTW_FORWARD);  // e^{-2pi i jk/n}
  const double scale = 1.0 / std::pow(2.0 * F.grid.half_width(), 3);
  std::vector<double> out(F.grid.size());
  double re2 = 0.0, im2 = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::complex<double> z = buf[i] * scale;
    out[i] = z.real();
    re2 += z.real() * z.real();
    im2 += z.imag() * z.imag();
  }
  if (diag) diag->metric("idft3_imag_ratio", re2 > 0 ? std::sqrt(im2 / re2) : std::sqrt(im2));
  return ScalarField3(F.grid, std::move(out));
}

void line_dft_rows(const LineGrid& grid, std::complex<double>* rows, int count) {
  const int m = grid.m();
  run_1d_many(rows, m, count, FFTW_BACKWARD);
  checkerboard_rows(rows, m, count);
  const double ds = grid.spacing();
  std::size_t total = static_cast<std::size_t>(m) * count;
  for (std::size_t i = 0; i < total; ++i) rows[i] *= ds;
}

void line_idft_rows(const LineGrid& grid, std::complex<double>* rows, int count) {
  const int m = grid.m();
  checkerboard_rows(rows, m, count);
  run_1d_many(rows, m, count, FFTW_FORWARD);
  const double scale = 1.0 / (2.0 * grid.s_max());
  std::size_t total = static_cast<std::size_t>(m) * count;
  for (std::size_t i = 0; i < total; ++i) rows[i] *= scale;
}

std::vector<double> line_derivative_rows(const LineGrid& grid,
                                         const std::vector<double>& rows, int count) {
  const int m = grid.m();
  if (rows.size() != static_cast<std::size_t>(m) * count)
    throw std::invalid_argument("line_derivative_rows: size mismatch");
  std::vector<std::complex<double>> buf(rows.begin(), rows.end());
  line_dft_rows(grid, buf.data(), count);
  for (int r = 0; r < count; ++r) {
    std::complex<double>* row = buf.data() + static_cast<std::size_t>(r) * m;
    for (int l = 0; l < m; ++l) {
      // d/ds brings down -i nu under the e^{-i nu s} inverse
      row[l] *= std::complex<double>(0.0, -grid.freq(l));
    }
    row[m / 2] = 0.0;  // unpaired Nyquist mode has no signed frequency
  }
  line_idft_rows(grid, buf.data(), count);
  std::vector<double> out(rows.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[i].real();
  return out;
}

}  // namespace radfield
