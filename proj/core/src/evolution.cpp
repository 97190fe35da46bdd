#include "spinframes/evolution.hpp"

namespace spinframes {

CurvatureSignalFrenet frenet_signal(const Curve& curve) {
  CurvatureSignalFrenet sig;
  sig.kappa = [curve](double s) { return frenet_apparatus(curve, s).kappa; };
  sig.tau = [curve](double s) { return frenet_apparatus(curve, s).tau; };
  return sig;
}

CurvatureSignalDarboux darboux_signal(const Surface& surface,
                                      const Curve& curve) {
  CurvatureSignalDarboux sig;
  sig.kappa_g = [surface, curve](double s) {
    return darboux_apparatus(surface, curve, s).kappa_g;
  };
  sig.kappa_n = [surface, curve](double s) {
    return darboux_apparatus(surface, curve, s).kappa_n;
  };
  sig.tau_g = [surface, curve](double s) {
    return darboux_apparatus(surface, curve, s).tau_g;
  };
  return sig;
}

}  // namespace spinframes
