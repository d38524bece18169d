#include "tlcat/tl_builder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tlcat {

namespace {

// Unique simple summand of a x b, or -1 when the product is not simple.
int simple_summand(const MonoidalSystem& sys, int a, int b) {
    int found = -1;
    unsigned total = 0;
    for (int c = 0; c < sys.num_labels(); ++c) {
        unsigned n = sys.n(a, b, c);
        total += n;
        if (n) found = c;
    }
    return total == 1 ? found : -1;
}

}  // namespace

void ChainSpec::validate() const {
    if (!sys) throw std::invalid_argument("ChainSpec: no monoidal system");
    const int L = length();
    if (L < 2) throw std::invalid_argument("ChainSpec: need at least 2 strands");
    const size_t expected_targets = periodic ? static_cast<size_t>(L) : static_cast<size_t>(L - 1);
    if (targets.size() != expected_targets)
        throw std::invalid_argument("ChainSpec: wrong number of fusion targets");
    for (int s : strands)
        if (s < 0 || s >= sys->num_labels()) throw std::invalid_argument("ChainSpec: strand label out of range");
    for (size_t i = 0; i < targets.size(); ++i) {
        int l1 = strands[i];
        int l2 = strands[(i + 1) % L];
        if (sys->n(l1, l2, targets[i]) != 1) {
            std::ostringstream os;
            os << "ChainSpec: nu_" << i + 1 << " = " << sys->label(targets[i]).id
               << " is not an admissible channel of " << sys->label(l1).id << " x "
               << sys->label(l2).id;
            throw std::invalid_argument(os.str());
        }
    }
}

SparseOperator projection_matrix(const ChainSpec& chain, std::shared_ptr<const PathBasis> basis,
                                 int i) {
    chain.validate();
    const int L = chain.length();
    const int imax = chain.periodic ? L : L - 1;
    if (i < 1 || i > imax) throw std::invalid_argument("projection_matrix: strand index out of range");
    const MonoidalSystem& sys = *chain.sys;
    const int li = chain.strands[i - 1];
    const int lj = chain.strands[i % L];
    const int nu = chain.targets[i - 1];

    SparseOperator p(basis);
    const bool seam = chain.periodic && i == L;
    for (int col = 0; col < basis->size(); ++col) {
        const PathState& mu = basis->state(col);
        // Heights around position i: for the seam projection the moving
        // height is mu_L = mu_0 and its neighbours wrap.
        const int a = seam ? mu.seq[L - 1] : mu.seq[i - 1];
        const int d = seam ? mu.seq[1] : mu.seq[i + 1];
        const int mid = seam ? mu.seq[L] : mu.seq[i];
        cplx left = sys.f_symbol(a, li, lj, d, mid, nu);
        if (left == cplx(0.0)) continue;
        for (int m = 0; m < sys.num_labels(); ++m) {
            if (!(sys.n(a, li, m) && sys.n(m, lj, d))) continue;
            cplx right = sys.f_inverse(a, li, lj, d, nu, m);
            if (right == cplx(0.0)) continue;
            PathState nu_state = mu;
            if (seam) {
                nu_state.seq[L] = m;
                nu_state.seq[0] = m;
            } else {
                nu_state.seq[i] = m;
            }
            if (!basis->contains(nu_state)) continue;
            p.add_to(basis->index(nu_state), col, left * right);
        }
    }
    return p;
}

cplx compute_c(const ChainSpec& chain, int i) {
    chain.validate();
    const int L = chain.length();
    const int imax = chain.periodic ? L : L - 2;
    if (i < 1 || i > imax) throw std::invalid_argument("compute_c: index out of range");
    const MonoidalSystem& sys = *chain.sys;
    const int l1 = chain.strands[i - 1];
    const int l2 = chain.strands[i % L];
    const int l3 = chain.strands[(i + 1) % L];
    const int nu1 = chain.targets[i - 1];
    const int nu2 = chain.targets[i % (chain.periodic ? L : L - 1)];

    const int m1 = simple_summand(sys, nu1, l3);
    if (m1 < 0) {
        std::ostringstream os;
        os << "compute_c: nu_" << i << " x lambda_" << i + 2 << " is not simple";
        throw std::runtime_error(os.str());
    }
    const int m2 = simple_summand(sys, l1, nu2);
    if (m2 < 0) {
        std::ostringstream os;
        os << "compute_c: lambda_" << i << " x nu_" << i + 1 << " is not simple";
        throw std::runtime_error(os.str());
    }
    if (m1 != m2) {
        std::ostringstream os;
        os << "compute_c: simple summands of nu_" << i << " x lambda_" << i + 2 << " and lambda_"
           << i << " x nu_" << i + 1 << " disagree (" << sys.label(m1).id << " vs "
           << sys.label(m2).id << ")";
        throw std::runtime_error(os.str());
    }
    cplx c = sys.f_symbol(l1, l2, l3, m1, nu1, nu2) * sys.f_inverse(l1, l2, l3, m1, nu2, nu1);
    if (c == cplx(0.0)) throw std::runtime_error("compute_c: vanishing constant");
    return c;
}

HomogeneityReport verify_c_homogeneity(const ChainSpec& chain) {
    chain.validate();
    const int L = chain.length();
    const int imax = chain.periodic ? L : L - 2;
    if (imax < 2) throw std::invalid_argument("verify_c_homogeneity: need at least two c values");
    HomogeneityReport rep;
    for (int i = 1; i <= imax; ++i) rep.c.push_back(compute_c(chain, i));
    for (const cplx& ci : rep.c) rep.max_deviation = std::max(rep.max_deviation, std::abs(ci - rep.c[0]));
    return rep;
}

std::vector<SparseOperator> normalize_generators(const std::vector<SparseOperator>& projections,
                                                 const std::vector<cplx>& c, cplx c0) {
    if (c0 == cplx(0.0)) throw std::invalid_argument("normalize_generators: c0 = 0");
    if (projections.empty()) throw std::invalid_argument("normalize_generators: no projections");
    if (c.size() + 1 < projections.size())
        throw std::invalid_argument("normalize_generators: missing c values");
    std::vector<SparseOperator> u;
    cplx gamma = c0;
    for (size_t i = 0; i < projections.size(); ++i) {
        u.push_back(projections[i].scaled(gamma));
        if (i + 1 < projections.size()) {
            if (c[i] == cplx(0.0)) throw std::runtime_error("normalize_generators: zero c encountered");
            gamma = cplx(1.0) / (c[i] * gamma);
        }
    }
    return u;
}

cplx loop_parameter(const SparseOperator& u, double tol) {
    double best = 0.0;
    std::pair<int, int> pos{-1, -1};
    for (const auto& [k, v] : u.entries())
        if (std::abs(v) > best) {
            best = std::abs(v);
            pos = k;
        }
    if (pos.first < 0) throw std::invalid_argument("loop_parameter: zero operator");
    SparseOperator u2 = u * u;
    cplx d = u2.at(pos.first, pos.second) / u.at(pos.first, pos.second);
    if ((u2 - u.scaled(d)).norm_max() > tol)
        throw std::runtime_error("loop_parameter: U^2 is not proportional to U");
    return d;
}

TLFamily build_tl_family(const ChainSpec& chain) {
    chain.validate();
    if (chain.periodic)
        throw std::invalid_argument("build_tl_family: use periodic_constraint_check for closed chains");
    const MonoidalSystem& sys = *chain.sys;
    StrandDecoration dec;
    dec.strands = chain.strands;
    dec.start_set = chain.start_set;
    if (dec.start_set.empty())
        for (int i = 0; i < sys.num_labels(); ++i) dec.start_set.insert(i);

    TLFamily fam;
    fam.basis = std::make_shared<PathBasis>(sys, dec);
    fam.c0 = chain.c0;
    const int L = chain.length();
    for (int i = 1; i <= L - 1; ++i) fam.p.push_back(projection_matrix(chain, fam.basis, i));
    for (int i = 1; i <= L - 2; ++i) fam.c.push_back(compute_c(chain, i));
    fam.u = normalize_generators(fam.p, fam.c, chain.c0);
    for (const auto& ui : fam.u) fam.d.push_back(loop_parameter(ui));
    fam.delta = fam.d.front();
    return fam;
}

double TLReport::max_residual() const {
    double m = std::max({idempotency, loop, commutation});
    if (cubic_applicable) m = std::max({m, cubic_up, cubic_down});
    return m;
}

TLReport verify_tl(const TLFamily& family, double tol) {
    (void)tol;
    TLReport rep;
    const int n = static_cast<int>(family.u.size());
    for (int i = 0; i < n; ++i) {
        rep.idempotency = std::max(rep.idempotency, (family.p[i] * family.p[i] - family.p[i]).norm_max());
        rep.loop = std::max(rep.loop,
                            (family.u[i] * family.u[i] - family.u[i].scaled(family.delta)).norm_max());
        for (int j = i + 2; j < n; ++j)
            rep.commutation = std::max(
                rep.commutation, (family.u[i] * family.u[j] - family.u[j] * family.u[i]).norm_max());
        if (i + 1 < n) {
            rep.cubic_up = std::max(
                rep.cubic_up, (family.u[i] * family.u[i + 1] * family.u[i] - family.u[i]).norm_max());
            rep.cubic_down = std::max(
                rep.cubic_down,
                (family.u[i + 1] * family.u[i] * family.u[i + 1] - family.u[i + 1]).norm_max());
        }
    }
    rep.cubic_applicable = n >= 2;
    return rep;
}

PeriodicReport periodic_constraint_check(const ChainSpec& chain, double tol) {
    chain.validate();
    if (!chain.periodic) throw std::invalid_argument("periodic_constraint_check: chain not periodic");
    const int L = chain.length();
    if (L < 3) throw std::invalid_argument("periodic_constraint_check: need L >= 3");
    for (int s : chain.strands)
        if (s != chain.strands[0])
            throw std::invalid_argument("periodic_constraint_check: inhomogeneous strands");
    for (int t : chain.targets)
        if (t != chain.targets[0])
            throw std::invalid_argument("periodic_constraint_check: inhomogeneous targets");

    const MonoidalSystem& sys = *chain.sys;
    StrandDecoration dec;
    dec.strands = chain.strands;
    dec.start_set = chain.start_set;
    if (dec.start_set.empty())
        for (int i = 0; i < sys.num_labels(); ++i) dec.start_set.insert(i);
    dec.closed = true;
    auto basis = std::make_shared<PathBasis>(sys, dec);

    std::vector<SparseOperator> p;
    for (int i = 1; i <= L; ++i) p.push_back(projection_matrix(chain, basis, i));

    PeriodicReport rep;
    rep.c = compute_c(chain, 1);
    const cplx root = cplx(1.0) / std::sqrt(rep.c);
    if (L % 2 == 1)
        rep.c0_tested = {root, -root, cplx(1.0)};
    else
        rep.c0_tested = {root, cplx(1.0), cplx(0.7)};

    rep.ok = true;
    for (const cplx& c0 : rep.c0_tested) {
        std::vector<cplx> gamma(L);
        gamma[0] = c0;
        for (int i = 1; i < L; ++i) gamma[i] = cplx(1.0) / (rep.c * gamma[i - 1]);
        std::vector<SparseOperator> u;
        for (int i = 0; i < L; ++i) u.push_back(p[i].scaled(gamma[i]));
        double worst = 0.0;
        for (int i = 0; i < L; ++i) {
            const auto& a = u[i];
            const auto& b = u[(i + 1) % L];
            worst = std::max(worst, (a * b * a - a).norm_max());
            worst = std::max(worst, (b * a * b - b).norm_max());
        }
        // The prefactor recurrence closes around the loop iff c0^2 c = 1 for
        // odd L; for even L it closes for any invertible c0.
        bool expect = (L % 2 == 0) || std::abs(c0 * c0 * rep.c - cplx(1.0)) < 1e-9;
        rep.residuals.push_back(worst);
        rep.expected_pass.push_back(expect);
        if ((worst < tol) != expect) rep.ok = false;
    }
    return rep;
}

}  // namespace tlcat
