#include "tlcat/schur_weyl.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tlcat {

void AdmissibleSequence::validate() const {
    if (seq.empty() || seq.front() != 1)
        throw std::invalid_argument("AdmissibleSequence: must start with s_0 = 1");
    for (size_t i = 1; i < seq.size(); ++i) {
        if (std::abs(seq[i] - seq[i - 1]) != 1)
            throw std::invalid_argument("AdmissibleSequence: steps must be +-1");
        if (seq[i] < 1) throw std::invalid_argument("AdmissibleSequence: entries must stay >= 1");
    }
}

PathState AdmissibleSequence::to_path() const {
    PathState p;
    for (int s : seq) p.seq.push_back(s - 1);
    return p;
}

SchurWeylChain::SchurWeylChain(int length, cplx q) : length_(length), q_(q) {
    if (length < 2) throw std::invalid_argument("SchurWeylChain: need L >= 2");
    delta_ = quantum_integer(2, q);
    CategorySpec spec;
    spec.kind = CategoryKind::su2_generic;
    spec.q = q;
    spec.max_label = length;
    sys_ = std::make_unique<MonoidalSystem>(build_su2(spec));

    ChainSpec chain;
    chain.sys = sys_.get();
    chain.strands.assign(length, 1);
    chain.targets.assign(length - 1, 0);
    chain.start_set = {0};
    chain.c0 = delta_;  // 1/sqrt(c) with c = 1/delta^2
    family_ = build_tl_family(chain);
}

SparseOperator SchurWeylChain::jones_wenzl(int m, int shift) const {
    if (m < 1) throw std::invalid_argument("jones_wenzl: m >= 1 required");
    if (shift < 0 || shift + m - 2 > length_ - 1)
        throw std::invalid_argument("jones_wenzl: index range exceeds the chain");
    SparseOperator e = SparseOperator::identity(basis());
    for (int j = 1; j <= m - 2; ++j) {
        cplx ratio = quantum_integer(j, q_) / quantum_integer(j + 1, q_);
        if (std::abs(quantum_integer(j + 1, q_)) < 1e-12)
            throw std::runtime_error("jones_wenzl: idempotent does not exist at this q");
        e = e - (e * u(shift + j) * e).scaled(ratio);
    }
    double r = (e * e - e).norm_max();
    for (int j = 1; j <= m - 2; ++j) {
        r = std::max(r, (e * u(shift + j)).norm_max());
        r = std::max(r, (u(shift + j) * e).norm_max());
    }
    if (r > 1e-9) throw std::runtime_error("jones_wenzl: defining properties fail numerically");
    return e;
}

POSElement SchurWeylChain::pos_seed(int m) const {
    if ((m + length_) % 2 == 0)
        throw std::invalid_argument("pos_seed: parity condition m + L odd violated");
    if (m >= length_ + 2 || m < 1) throw std::invalid_argument("pos_seed: m out of range");
    const int p = (length_ - m + 1) / 2;

    AdmissibleSequence em;
    for (int i = 0; i < p; ++i) {
        em.seq.push_back(1);
        em.seq.push_back(2);
    }
    for (int j = 1; j <= m; ++j) em.seq.push_back(j);
    em.validate();

    SparseOperator product = jones_wenzl(m, 2 * p);
    for (int i = 1; i <= p; ++i) product = (u(2 * i - 1) * product).scaled(cplx(1.0) / delta_);

    POSElement elem{em, em, theta(em, em, basis())};
    if ((product - elem.op).norm_max() > 1e-9)
        throw std::runtime_error("pos_seed: product form and rank-one form disagree");
    return elem;
}

POSElement SchurWeylChain::pos_raise(const POSElement& element, int i) const {
    const auto& s = element.s.seq;
    if (i < 1 || i + 1 >= static_cast<int>(s.size()))
        throw std::invalid_argument("pos_raise: position out of range");
    const int g = s[i - 1];
    if (!(s[i] == g - 1 && s[i + 1] == g))
        throw std::invalid_argument("pos_raise: sequence has no minimum at i");
    cplx kg = k(g);
    if (std::abs(kg) < 1e-12) throw std::runtime_error("pos_raise: k_g vanishes");
    cplx kg1 = k(g + 1);

    POSElement raised = element;
    raised.s.seq[i] += 2;
    raised.s.validate();
    raised.op = (element.op - (u(i) * element.op).scaled(cplx(1.0) / kg)).scaled(std::sqrt(kg * kg1));
    return raised;
}

SparseOperator SchurWeylChain::pos_action_matrix(int i) const {
    if (i < 1 || i > length_ - 1) throw std::invalid_argument("pos_action_matrix: index out of range");
    auto b = basis();
    SparseOperator m(b);
    for (int col = 0; col < b->size(); ++col) {
        const PathState& mu = b->state(col);
        const int lo = mu.seq[i - 1], mid = mu.seq[i], hi = mu.seq[i + 1];
        if (lo != hi) continue;  // slope: annihilated
        const int x = lo;
        if (mid == x - 1) {  // minimum at i
            m.add_to(col, col, k(x + 1));
            PathState up = mu;
            up.seq[i] = x + 1;
            if (b->contains(up))
                m.add_to(b->index(up), col, -std::sqrt(k(x + 1) / k(x + 2)));
        } else {  // maximum at i
            m.add_to(col, col, cplx(1.0) / k(x + 2));
            if (x >= 1) {
                PathState down = mu;
                down.seq[i] = x - 1;
                if (b->contains(down))
                    m.add_to(b->index(down), col, -std::sqrt(k(x + 1) / k(x + 2)));
            }
        }
    }
    return m;
}

SparseOperator theta(const AdmissibleSequence& mu, const AdmissibleSequence& mu_prime,
                     std::shared_ptr<const PathBasis> basis) {
    mu.validate();
    mu_prime.validate();
    if (mu.seq.size() != mu_prime.seq.size())
        throw std::invalid_argument("theta: sequences have different lengths");
    if (mu.seq.back() != mu_prime.seq.back()) {
        std::ostringstream os;
        os << "theta: undefined element, final entries differ (" << mu.seq.back() << " vs "
           << mu_prime.seq.back() << ")";
        throw std::invalid_argument(os.str());
    }
    return rank_one(basis, mu.to_path(), mu_prime.to_path());
}

double check_f_identity(const MonoidalSystem& su2_sys, int x, cplx q) {
    if (x < 1 || x + 1 >= su2_sys.num_labels())
        throw std::invalid_argument("check_f_identity: label out of range");
    cplx delta = quantum_integer(2, q);
    cplx lhs = su2_sys.f_symbol(x, 1, 1, x, x - 1, 0) * su2_sys.f_inverse(x, 1, 1, x, 0, x - 1);
    return std::abs(lhs - chebyshev_ratio(x + 1, delta) / delta);
}

PosComparisonReport verify_pos_vs_fsymbol(int length, cplx q) {
    SchurWeylChain chain(length, q);
    PosComparisonReport rep;
    rep.generators = length - 1;
    for (int i = 1; i <= length - 1; ++i)
        rep.max_deviation =
            std::max(rep.max_deviation, (chain.u(i) - chain.pos_action_matrix(i)).norm_max());
    return rep;
}

}  // namespace tlcat
