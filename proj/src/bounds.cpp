#include "merminsim/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace merminsim {

namespace {

constexpr double boundary_tolerance = 1e-9;

void check_n(int n_sites) {
  if (n_sites < 1) throw std::invalid_argument("bounds: n_sites must be >= 1");
}

}  // namespace

double lhv_bound(int n_sites) {
  check_n(n_sites);
  return n_sites % 2 == 0 ? std::exp2(n_sites / 2.0)
                          : std::exp2((n_sites - 1) / 2.0);
}

double npartite_bound(int n_sites) {
  check_n(n_sites);
  return std::exp2(n_sites - 2.0);
}

BoundReport classify(int n_sites, double f_value) {
  BoundReport r;
  r.n_sites = n_sites;
  r.f_value = f_value;
  r.lhv_bound = lhv_bound(n_sites);
  r.npartite_bound = npartite_bound(n_sites);
  r.on_lhv_boundary = std::abs(f_value - r.lhv_bound) <= boundary_tolerance;
  r.on_npartite_boundary =
      std::abs(f_value - r.npartite_bound) <= boundary_tolerance;
  r.violates_lhv = !r.on_lhv_boundary && f_value > r.lhv_bound;
  r.certifies_npartite = !r.on_npartite_boundary && f_value > r.npartite_bound;
  return r;
}

BoundReport classify_nmin(int n_min, double f_value) {
  return classify(n_min, f_value);
}

std::string verdict_line(const BoundReport& report,
                         std::optional<double> std_error) {
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "N=%d F=%.12g lhv_bound=%.12g npartite_bound=%.12g "
                "violates_lhv=%s certifies_npartite=%s",
                report.n_sites, report.f_value, report.lhv_bound,
                report.npartite_bound, report.violates_lhv ? "yes" : "no",
                report.certifies_npartite ? "yes" : "no");
  std::string line = buf;
  if (std_error && *std_error > 0.0) {
    std::snprintf(buf, sizeof buf, " lhv_pull=%.6g npartite_pull=%.6g",
                  (report.f_value - report.lhv_bound) / *std_error,
                  (report.f_value - report.npartite_bound) / *std_error);
    line += buf;
  }
  return line;
}

}  // namespace merminsim
