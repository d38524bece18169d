#include "tlcat/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace tlcat {

cplx quantum_integer(int n, cplx q) {
    if (q == cplx(0.0)) throw std::invalid_argument("quantum_integer: q = 0");
    if (std::abs(q - cplx(1.0)) < 1e-12) return cplx(static_cast<double>(n));
    cplx qi = cplx(1.0) / q;
    return (std::pow(q, n) - std::pow(qi, n)) / (q - qi);
}

cplx chebyshev_u(int n, cplx x) {
    if (n < -1) throw std::invalid_argument("chebyshev_u: n < -1");
    if (n == -1) return cplx(0.0);
    cplx prev(0.0), cur(1.0);  // U_{-1}, U_0
    for (int m = 0; m < n; ++m) {
        cplx next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

cplx chebyshev_ratio(int n, cplx delta) {
    if (n < 1) throw std::invalid_argument("chebyshev_ratio: n >= 1 required");
    cplx den = chebyshev_u(n - 1, delta / 2.0);
    if (std::abs(den) < 1e-12) {
        std::ostringstream os;
        os << "chebyshev_ratio: U_" << n - 1 << "(delta/2) vanishes at n = " << n;
        throw std::runtime_error(os.str());
    }
    return chebyshev_u(n - 2, delta / 2.0) / den;
}

}  // namespace tlcat
