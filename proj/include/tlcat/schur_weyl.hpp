#ifndef TLCAT_SCHUR_WEYL_HPP
#define TLCAT_SCHUR_WEYL_HPP

#include <memory>
#include <vector>

#include "tlcat/category_zoo.hpp"
#include "tlcat/path_basis.hpp"
#include "tlcat/qseries.hpp"
#include "tlcat/tl_builder.hpp"

namespace tlcat {

/// Sequence (s_0,...,s_L) with s_0 = 1, steps +-1 and all entries >= 1.
/// Shifting every entry down by one gives an su2 path over spin-1 strands
/// starting at 0.
struct AdmissibleSequence {
    std::vector<int> seq;
    void validate() const;  // throws when the defining constraints fail
    int length() const { return static_cast<int>(seq.size()) - 1; }
    PathState to_path() const;  // the shifted sequence s - 1
};

/// A pair-of-sequences basis element (s,t) together with its rank-one
/// realization |s-1><t-1| on the path basis.
struct POSElement {
    AdmissibleSequence s;
    AdmissibleSequence t;
    SparseOperator op;
};

/// The su2 chain every Schur-Weyl check runs on: L spin-1 strands over the
/// generic-q su2 category, I_0 = {0}, all fusion targets the vacuum, and
/// generators normalized with c0 = delta = [2]_q.
class SchurWeylChain {
public:
    SchurWeylChain(int length, cplx q);

    int length() const { return length_; }
    cplx q() const { return q_; }
    cplx delta() const { return delta_; }
    cplx k(int n) const { return chebyshev_ratio(n, delta_); }
    const MonoidalSystem& system() const { return *sys_; }
    std::shared_ptr<const PathBasis> basis() const { return family_.basis; }
    const TLFamily& family() const { return family_; }
    const SparseOperator& u(int i) const { return family_.u.at(i - 1); }  // 1-based

    /// Jones-Wenzl idempotent E_m built from U_{shift+1} .. U_{shift+m-2}
    /// by the Wenzl recursion; its defining properties (idempotency and
    /// annihilation by the generators in range) are verified before return.
    SparseOperator jones_wenzl(int m, int shift = 0) const;

    /// The seed element (e_m, e_m) = ((12)^p 1m, (12)^p 1m): the product
    /// form (prod_i U_{2i-1}/delta) E_m^{(2p)} and the rank-one form
    /// theta(e_m, e_m) are both computed and compared; the idempotent
    /// normalization U/delta makes the two agree exactly.
    POSElement pos_seed(int m) const;

    /// (s^i, t) = sqrt(k_g k_{g+1}) (1 - U_i/k_g) (s, t), at a minimum
    /// s_i = g - 1 with neighbours g.
    POSElement pos_raise(const POSElement& element, int i) const;

    /// Generator action on paths built purely from Chebyshev ratios:
    /// slope paths are annihilated, and on a min/max pair at height x the
    /// block is [[k_{x+1}, -r], [-r, 1/k_{x+2}]] with r = sqrt(k_{x+1}/k_{x+2}).
    SparseOperator pos_action_matrix(int i) const;

private:
    int length_;
    cplx q_;
    cplx delta_;
    std::unique_ptr<MonoidalSystem> sys_;
    TLFamily family_;
};

/// Rank-one operator |mu-1><mu'-1|; throws when lengths or final entries
/// differ (the element (mu, mu') is undefined).
SparseOperator theta(const AdmissibleSequence& mu, const AdmissibleSequence& mu_prime,
                     std::shared_ptr<const PathBasis> basis);

/// |F^{x11}_{x;x-1,0} (F^-1)^{x11}_{x;0,x-1} - k_{x+1}/delta|.
double check_f_identity(const MonoidalSystem& su2_sys, int x, cplx q);

struct PosComparisonReport {
    double max_deviation = 0.0;  // entrywise, F-symbol route vs Chebyshev route
    int generators = 0;
    bool pass(double tol) const { return max_deviation < tol; }
};

/// Builds every U_i both from the F-symbol projection construction and from
/// the pairs-of-sequences action coefficients, and compares entrywise.
PosComparisonReport verify_pos_vs_fsymbol(int length, cplx q);

}  // namespace tlcat

#endif
