#pragma once

#include "burgers/common.hpp"

namespace burgers {

enum class FrontClass { entropic, anti_entropic };

inline const char* to_string(FrontClass c) {
  return c == FrontClass::entropic ? "entropic" : "anti_entropic";
}

/// One straight-line discontinuity, alive on [t_birth, t_death).
struct Front {
  double t_birth = 0.0;
  double t_death = 0.0;
  double x_birth = 0.0;
  double u_l = 0.0;
  double u_r = 0.0;
  double sigma = 0.0;
  FrontClass cls = FrontClass::entropic;

  double position(double t) const { return x_birth + sigma * (t - t_birth); }

  bool alive(double t) const { return t >= t_birth && t < t_death; }

  double jump() const { return u_r - u_l; }

  static Front make(double t_birth, double x_birth, double u_l, double u_r) {
    if (u_l == u_r) throw DomainError("front endpoints must differ");
    Front f;
    f.t_birth = t_birth;
    f.t_death = t_birth;
    f.x_birth = x_birth;
    f.u_l = u_l;
    f.u_r = u_r;
    f.sigma = 0.5 * (u_l + u_r);
    f.cls = u_l > u_r ? FrontClass::entropic : FrontClass::anti_entropic;
    return f;
  }
};

}  // namespace burgers
