// specfun.hpp — sinc, Si/Ci, and the real/complex exponential integrals

#pragma once

#include "djc/types.hpp"

namespace djc::specfun {

// sin(x)/x with the removable singularity filled (Taylor below |x| < 1e-3).
double sinc(double x);

struct SiCi {
    double si{0.0};
    double ci{0.0};
};

// Si(x) = int_0^x sin t / t dt, Ci(x) = -int_x^inf cos t / t dt, x > 0.
SiCi si_ci(double x);

// Real exponential integral Ei(x), principal value for x > 0; x != 0.
double expint_ei_real(double x);

// E1(z) on the principal branch (cut on the negative real axis; values on
// the cut resolve to the limit from above). z != 0.
Complex expint_e1(Complex z);

// Exponentially scaled e^z * E1(z); same branch conventions. Stable for
// large |Re z| of either sign, which the Laplace-transform contour needs.
Complex expint_e1_scaled(Complex z);

// Analytic continuation of Ei with the cut on the negative real axis;
// on the positive real axis it agrees with expint_ei_real. z != 0.
Complex expint_ei(Complex z);

// Ei(i*y) for real y != 0 through the Si/Ci identity
// Ei(iy) = Ci(|y|) + i*sign(y)*(Si(|y|) + pi/2).
Complex expint_ei_imag(double y);

}  // namespace djc::specfun
