#ifndef TLCAT_QSERIES_HPP
#define TLCAT_QSERIES_HPP

#include <complex>

namespace tlcat {

using cplx = std::complex<double>;

/// Quantum integer [n]_q = (q^n - q^-n)/(q - q^-1); [n]_1 = n (limit).
cplx quantum_integer(int n, cplx q);

/// Chebyshev polynomial of the second kind U_n(x), n >= -1, by recurrence.
cplx chebyshev_u(int n, cplx x);

/// k_n = U_{n-2}(delta/2) / U_{n-1}(delta/2); k_1 = 0.
/// Throws if the denominator vanishes (delta from q at a root of unity).
cplx chebyshev_ratio(int n, cplx delta);

}  // namespace tlcat

#endif
