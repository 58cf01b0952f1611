#pragma once

// Hand-rolled dense linear algebra used only by tests, kept deliberately
// independent of the library's strided-application code paths: everything
// here goes through explicit matrices, Kronecker products and a Taylor-series
// matrix exponential.

#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cdouble = std::complex<double>;

struct Mat {
  int n = 0;
  std::vector<cdouble> a;  // row-major

  Mat() = default;
  explicit Mat(int dim) : n(dim), a(std::size_t(dim) * dim, 0.0) {}

  static Mat identity(int dim);

  cdouble& at(int r, int c) { return a[std::size_t(r) * n + c]; }
  cdouble at(int r, int c) const { return a[std::size_t(r) * n + c]; }
};

Mat mul(const Mat& x, const Mat& y);
Mat add(const Mat& x, const Mat& y);
Mat scale(const Mat& x, cdouble s);
Mat dagger(const Mat& x);

// kron(a, b): a indexes the high digits of the composite index, b the low
// ones, matching the convention that site 0 is the least significant digit.
Mat kron(const Mat& a, const Mat& b);

std::vector<cdouble> apply(const Mat& m, const std::vector<cdouble>& v);

// exp(A) via scaling-and-squaring over a plain Taylor series.
Mat expm(const Mat& a);

Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

// General single-qubit unitary, unitary by construction.
Mat u3(double theta, double phi, double lambda);

// u3 embedded into a 3x3 unitary acting on levels (row, row+1).
Mat embed3(const Mat& two_by_two, int row);

// Product of sigma_x / sigma_y over n qubit sites; bit j of y_mask selects
// sigma_y on site j.
Mat pattern_operator(int n_sites, std::uint64_t y_mask);

double max_abs_diff(const std::vector<cdouble>& x,
                    const std::vector<cdouble>& y);

}  // namespace oracle
