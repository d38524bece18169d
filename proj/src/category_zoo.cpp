#include "tlcat/category_zoo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlcat/qseries.hpp"

namespace tlcat {

namespace {

// Quantum factorial [m]! = [1][2]...[m].
cplx qfact(int m, cplx q) {
    cplx r(1.0);
    for (int j = 2; j <= m; ++j) r *= quantum_integer(j, q);
    return r;
}

bool su2_admissible(int a, int b, int c, int cap, int level) {
    if ((a + b + c) % 2 != 0) return false;
    if (c < std::abs(a - b) || c > a + b) return false;
    if (c > cap) return false;
    if (level > 0 && a + b + c > 2 * level) return false;
    return true;
}

// Triangle factor of the q-Racah formula; arguments are twice-spins.
cplx delta_triad(int a, int b, int c, cplx q) {
    cplx num = qfact((-a + b + c) / 2, q) * qfact((a - b + c) / 2, q) * qfact((a + b - c) / 2, q);
    return std::sqrt(num / qfact((a + b + c) / 2 + 1, q));
}

// q-deformed Wigner 6j symbol {a/2 b/2 e/2; c/2 d/2 f/2}, twice-spin
// arguments, via the Racah single-sum formula. At a root of unity the
// vanishing numerator factorial [z+1]! implements the level truncation.
cplx sixj(int a, int b, int e, int c, int d, int f, cplx q) {
    const int t1 = (a + b + e) / 2;
    const int t2 = (a + d + f) / 2;
    const int t3 = (c + b + f) / 2;
    const int t4 = (c + d + e) / 2;
    const int q1 = (a + b + c + d) / 2;
    const int q2 = (b + e + d + f) / 2;
    const int q3 = (e + a + f + c) / 2;
    const int zlo = std::max({t1, t2, t3, t4});
    const int zhi = std::min({q1, q2, q3});
    cplx sum(0.0);
    for (int z = zlo; z <= zhi; ++z) {
        cplx den = qfact(z - t1, q) * qfact(z - t2, q) * qfact(z - t3, q) * qfact(z - t4, q) *
                   qfact(q1 - z, q) * qfact(q2 - z, q) * qfact(q3 - z, q);
        cplx term = qfact(z + 1, q) / den;
        sum += (z % 2 ? -term : term);
    }
    return delta_triad(a, b, e, q) * delta_triad(a, d, f, q) * delta_triad(c, b, f, q) *
           delta_triad(c, d, e, q) * sum;
}

cplx su2_f(int a, int b, int c, int d, int e, int f, cplx q) {
    int sgn = ((a + b + c + d) / 2) % 2 ? -1 : 1;
    return static_cast<double>(sgn) * std::sqrt(quantum_integer(e + 1, q)) *
           std::sqrt(quantum_integer(f + 1, q)) * sixj(a, b, e, c, d, f, q);
}

std::vector<LabelInfo> integer_labels(int count) {
    std::vector<LabelInfo> labels;
    for (int i = 0; i < count; ++i) {
        std::string s = std::to_string(i);
        labels.push_back({s, s});
    }
    return labels;
}

// Sets F = 1 on every admissible tuple; nontrivial blocks get overwritten.
void fill_trivial(FSymbolTable& f, const FusionRules& rules, int nlabels) {
    for (int a = 0; a < nlabels; ++a)
        for (int b = 0; b < nlabels; ++b)
            for (int c = 0; c < nlabels; ++c)
                for (int d = 0; d < nlabels; ++d)
                    for (int e = 0; e < nlabels; ++e) {
                        if (!(rules.n(a, b, e) && rules.n(e, c, d))) continue;
                        for (int fl = 0; fl < nlabels; ++fl)
                            if (rules.n(b, c, fl) && rules.n(a, fl, d))
                                f.set(a, b, c, d, e, fl, cplx(1.0));
                    }
}

}  // namespace

MonoidalSystem build_su2(const CategorySpec& spec) {
    const bool at_level = spec.kind == CategoryKind::su2_level_k;
    cplx q = spec.q;
    int cap, level;
    if (at_level) {
        level = spec.level;
        if (level < 1) throw std::invalid_argument("build_su2: level must be >= 1");
        cap = level;
        q = std::exp(cplx(0.0, std::numbers::pi / (level + 2)));
    } else {
        level = 0;
        cap = spec.max_label;
        if (cap < 1) throw std::invalid_argument("build_su2: max_label must be >= 1");
        if (q == cplx(0.0)) throw std::invalid_argument("build_su2: q = 0");
        // Every quantum integer reachable inside the window must be nonzero.
        for (int m = 1; m <= 2 * (cap + 2); ++m)
            if (std::abs(quantum_integer(m, q)) < 1e-9) {
                std::ostringstream os;
                os << "build_su2: quantum integer [" << m << "]_q vanishes inside the label range";
                throw std::invalid_argument(os.str());
            }
    }

    const int nlabels = cap + 1;
    FusionRules rules;
    for (int a = 0; a <= cap; ++a)
        for (int b = 0; b <= cap; ++b)
            for (int c = 0; c <= cap; ++c)
                if (su2_admissible(a, b, c, cap, level)) rules.set(a, b, c, 1);

    FSymbolTable f;
    for (int a = 0; a <= cap; ++a)
        for (int b = 0; b <= cap; ++b)
            for (int c = 0; c <= cap; ++c)
                for (int d = 0; d <= cap; ++d)
                    for (int e = 0; e <= cap; ++e) {
                        if (!(su2_admissible(a, b, e, cap, level) && su2_admissible(e, c, d, cap, level)))
                            continue;
                        for (int fl = 0; fl <= cap; ++fl) {
                            if (!(su2_admissible(b, c, fl, cap, level) && su2_admissible(a, fl, d, cap, level)))
                                continue;
                            f.set(a, b, c, d, e, fl, su2_f(a, b, c, d, e, fl, q));
                        }
                    }

    std::optional<int> trunc = at_level ? std::nullopt : std::optional<int>(cap);
    return MonoidalSystem(integer_labels(nlabels), 0, std::move(rules), std::move(f),
                          spec.tolerance, trunc);
}

MonoidalSystem build_fibonacci() {
    const int one = 0, tau = 1;
    std::vector<LabelInfo> labels = {{"1", "1"}, {"tau", "tau"}};
    FusionRules rules;
    rules.set(one, one, one, 1);
    rules.set(one, tau, tau, 1);
    rules.set(tau, one, tau, 1);
    rules.set(tau, tau, one, 1);
    rules.set(tau, tau, tau, 1);

    FSymbolTable f;
    fill_trivial(f, rules, 2);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    f.set(tau, tau, tau, tau, one, one, cplx(1.0 / phi));
    f.set(tau, tau, tau, tau, one, tau, cplx(1.0 / std::sqrt(phi)));
    f.set(tau, tau, tau, tau, tau, one, cplx(1.0 / std::sqrt(phi)));
    f.set(tau, tau, tau, tau, tau, tau, cplx(-1.0 / phi));
    return MonoidalSystem(std::move(labels), one, std::move(rules), std::move(f));
}

MonoidalSystem build_ising() {
    const int one = 0, sigma = 1, psi = 2;
    std::vector<LabelInfo> labels = {{"1", "1"}, {"sigma", "sigma"}, {"psi", "psi"}};
    FusionRules rules;
    for (int a : {one, sigma, psi}) {
        rules.set(a, one, a, 1);
        rules.set(one, a, a, 1);
    }
    rules.set(sigma, sigma, one, 1);
    rules.set(sigma, sigma, psi, 1);
    rules.set(sigma, psi, sigma, 1);
    rules.set(psi, sigma, sigma, 1);
    rules.set(psi, psi, one, 1);

    FSymbolTable f;
    fill_trivial(f, rules, 3);
    const double s = 1.0 / std::sqrt(2.0);
    f.set(sigma, sigma, sigma, sigma, one, one, cplx(s));
    f.set(sigma, sigma, sigma, sigma, one, psi, cplx(s));
    f.set(sigma, sigma, sigma, sigma, psi, one, cplx(s));
    f.set(sigma, sigma, sigma, sigma, psi, psi, cplx(-s));
    f.set(psi, sigma, psi, sigma, sigma, sigma, cplx(-1.0));
    f.set(sigma, psi, sigma, psi, sigma, sigma, cplx(-1.0));
    return MonoidalSystem(std::move(labels), one, std::move(rules), std::move(f));
}

MonoidalSystem build_category(const CategorySpec& spec) {
    switch (spec.kind) {
        case CategoryKind::su2_generic:
        case CategoryKind::su2_level_k:
            return build_su2(spec);
        case CategoryKind::fibonacci:
            return build_fibonacci();
        case CategoryKind::ising:
            return build_ising();
    }
    throw std::invalid_argument("build_category: unknown kind");
}

const char* kind_name(CategoryKind k) {
    switch (k) {
        case CategoryKind::su2_generic: return "su2";
        case CategoryKind::su2_level_k: return "su2_level_k";
        case CategoryKind::fibonacci: return "fibonacci";
        case CategoryKind::ising: return "ising";
    }
    return "?";
}

}  // namespace tlcat
