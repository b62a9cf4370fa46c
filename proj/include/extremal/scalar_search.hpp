#pragma once

#include "extremal/numeric.hpp"

#include <cmath>
#include <utility>

namespace extremal {

struct ScalarOptimum {
  double x;
  double value;
};

/// Golden-section search for a maximum of a unimodal f on [lo, hi]. The
/// bracket shrinks until its width is below `tol`; the best evaluated point
/// is returned.
template <typename F>
ScalarOptimum golden_section_maximize(F&& f, double lo, double hi, double tol,
                                      int max_iterations = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iterations && hi - lo > tol; ++i) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? ScalarOptimum{c, fc} : ScalarOptimum{d, fd};
}

/// Bisection root of f on [lo, hi] to absolute tolerance `tol` in x.
/// f(lo) and f(hi) must differ in sign (an exact zero at either end is
/// returned as is).
template <typename F>
double bisect_root(F&& f, double lo, double hi, double tol, int max_iterations = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) {
    return lo;
  }
  if (fhi == 0.0) {
    return hi;
  }
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw InvalidArgument("no sign change on bracket [" + format_real(lo) + ", " +
                          format_real(hi) + "]");
  }
  for (int i = 0; i < max_iterations && hi - lo > tol; ++i) {
    double mid = lo + (hi - lo) / 2.0;
    double fm = f(mid);
    if (fm == 0.0) {
      return mid;
    }
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2.0;
}

}  // namespace extremal
