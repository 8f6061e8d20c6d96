// Test-only adaptive-quadrature oracle. Deliberately independent of the
// closed-form Faddeeva path in the library: everything here goes through
// Gauss-Kronrod integration of the raw integrands.
#ifndef LOPSIM_TESTS_QUADRATURE_ORACLE_HPP
#define LOPSIM_TESTS_QUADRATURE_ORACLE_HPP

#include <complex>
#include <functional>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

using cplx = std::complex<double>;

inline double integrate(const std::function<double(double)>& f, double lo, double hi,
                        double tol = 1e-12) {
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lo, hi, 15, tol);
}

inline cplx integrate_complex(const std::function<cplx(double)>& f, double lo, double hi,
                              double tol = 1e-12) {
    const double re = integrate([&f](double t) { return f(t).real(); }, lo, hi, tol);
    const double im = integrate([&f](double t) { return f(t).imag(); }, lo, hi, tol);
    return {re, im};
}

}  // namespace oracle

#endif
