#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int k = 0; k < dim; ++k) m.at(k, k) = 1.0;
  return m;
}

Mat mul(const Mat& x, const Mat& y) {
  if (x.n != y.n) throw std::invalid_argument("mul: dimension mismatch");
  Mat out(x.n);
  for (int r = 0; r < x.n; ++r)
    for (int k = 0; k < x.n; ++k) {
      const cdouble xv = x.at(r, k);
      if (xv == cdouble()) continue;
      for (int c = 0; c < x.n; ++c) out.at(r, c) += xv * y.at(k, c);
    }
  return out;
}

Mat add(const Mat& x, const Mat& y) {
  if (x.n != y.n) throw std::invalid_argument("add: dimension mismatch");
  Mat out = x;
  for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] += y.a[k];
  return out;
}

Mat scale(const Mat& x, cdouble s) {
  Mat out = x;
  for (cdouble& v : out.a) v *= s;
  return out;
}

Mat dagger(const Mat& x) {
  Mat out(x.n);
  for (int r = 0; r < x.n; ++r)
    for (int c = 0; c < x.n; ++c) out.at(r, c) = std::conj(x.at(c, r));
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.n * b.n);
  for (int ar = 0; ar < a.n; ++ar)
    for (int ac = 0; ac < a.n; ++ac)
      for (int br = 0; br < b.n; ++br)
        for (int bc = 0; bc < b.n; ++bc)
          out.at(ar * b.n + br, ac * b.n + bc) = a.at(ar, ac) * b.at(br, bc);
  return out;
}

std::vector<cdouble> apply(const Mat& m, const std::vector<cdouble>& v) {
  if (v.size() != std::size_t(m.n))
    throw std::invalid_argument("apply: dimension mismatch");
  std::vector<cdouble> out(v.size(), 0.0);
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) out[r] += m.at(r, c) * v[c];
  return out;
}

namespace {

double inf_norm(const Mat& m) {
  double best = 0.0;
  for (int r = 0; r < m.n; ++r) {
    double row = 0.0;
    for (int c = 0; c < m.n; ++c) row += std::abs(m.at(r, c));
    best = std::max(best, row);
  }
  return best;
}

}  // namespace

Mat expm(const Mat& a) {
  int squarings = 0;
  double norm = inf_norm(a);
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  Mat t = scale(a, 1.0 / std::ldexp(1.0, squarings));

  Mat result = Mat::identity(a.n);
  Mat term = Mat::identity(a.n);
  for (int k = 1; k <= 40; ++k) {
    term = scale(mul(term, t), 1.0 / k);
    result = add(result, term);
    if (inf_norm(term) < 1e-20) break;
  }
  for (int k = 0; k < squarings; ++k) result = mul(result, result);
  return result;
}

Mat pauli_x() {
  Mat m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

Mat pauli_y() {
  Mat m(2);
  m.at(0, 1) = cdouble(0, -1);
  m.at(1, 0) = cdouble(0, 1);
  return m;
}

Mat pauli_z() {
  Mat m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

Mat u3(double theta, double phi, double lambda) {
  Mat m(2);
  m.at(0, 0) = std::cos(theta / 2);
  m.at(0, 1) = -std::polar(std::sin(theta / 2), lambda);
  m.at(1, 0) = std::polar(std::sin(theta / 2), phi);
  m.at(1, 1) = std::polar(std::cos(theta / 2), phi + lambda);
  return m;
}

Mat embed3(const Mat& two_by_two, int row) {
  if (two_by_two.n != 2 || row < 0 || row > 1)
    throw std::invalid_argument("embed3: expects a 2x2 block at row 0 or 1");
  Mat m = Mat::identity(3);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m.at(row + r, row + c) = two_by_two.at(r, c);
  return m;
}

Mat pattern_operator(int n_sites, std::uint64_t y_mask) {
  Mat op = (y_mask & 1) ? pauli_y() : pauli_x();
  for (int site = 1; site < n_sites; ++site)
    op = kron((y_mask >> site) & 1 ? pauli_y() : pauli_x(), op);
  return op;
}

double max_abs_diff(const std::vector<cdouble>& x,
                    const std::vector<cdouble>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("max_abs_diff: size mismatch");
  double best = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k)
    best = std::max(best, std::abs(x[k] - y[k]));
  return best;
}

}  // namespace oracle
