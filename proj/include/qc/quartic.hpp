#pragma once

#include <array>
#include <complex>

namespace qc {

/// Roots of the monic quartic x^4 + a x^3 + b x^2 + c x + d, via Ferrari's
/// resolvent-cubic reduction polished by Newton steps on the original
/// polynomial. No ordering is guaranteed.
std::array<std::complex<double>, 4> solve_quartic(std::complex<double> a,
                                                  std::complex<double> b,
                                                  std::complex<double> c,
                                                  std::complex<double> d);

/// Extended-precision variant for callers whose coefficients carry heavy
/// cancellation (near-degenerate small roots).
std::array<std::complex<long double>, 4> solve_quartic_ext(
    std::complex<long double> a, std::complex<long double> b,
    std::complex<long double> c, std::complex<long double> d);

}  // namespace qc
