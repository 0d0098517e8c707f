#pragma once

#include <array>
#include <vector>

#include "burgers/common.hpp"

namespace burgers {

/// C³ bump supported on [lo, hi]: a quartic B-spline with six uniform knots,
/// scaled to peak value 1. Piecewise degree-4 polynomial, so products of up
/// to two bumps are integrated exactly by Gauss order 5 between knots.
class Bump {
 public:
  Bump(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  double value(double x) const;
  double deriv(double x) const;
  /// ∫_{lo}^{x} value
  double integral_to(double x) const;
  /// ∫_{lo}^{x} t·value(t) dt
  double moment1_to(double x) const;
  double integral() const { return integral_to(hi_); }

  /// The six knot positions, ascending; polynomial pieces live between them.
  std::array<double, 6> knots() const;

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  double w_ = 0.2;  // knot spacing (hi-lo)/5
};

/// phi(t,x) = bt(t)·bx(x)
struct TensorBump2 {
  Bump bt;
  Bump bx;
  double value(double t, double x) const { return bt.value(t) * bx.value(x); }
  double dt(double t, double x) const { return bt.deriv(t) * bx.value(x); }
  double dx(double t, double x) const { return bt.value(t) * bx.deriv(x); }
};

/// psi(t,x,v) = bt(t)·bx(x)·bv(v)
struct TensorBump3 {
  Bump bt;
  Bump bx;
  Bump bv;
  double value(double t, double x, double v) const {
    return bt.value(t) * bx.value(x) * bv.value(v);
  }
  double dv(double t, double x, double v) const {
    return bt.value(t) * bx.value(x) * bv.deriv(v);
  }
};

}  // namespace burgers
