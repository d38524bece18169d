#ifndef TLCAT_TL_BUILDER_HPP
#define TLCAT_TL_BUILDER_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tlcat/path_basis.hpp"

namespace tlcat {

/// A chain of decorated strands with fusion targets nu_i selecting the
/// channel each projection p_i projects onto.
struct ChainSpec {
    const MonoidalSystem* sys = nullptr;
    std::vector<int> strands;  // lambda_1..lambda_L
    std::vector<int> targets;  // nu_1..nu_{L-1} (nu_1..nu_L when periodic)
    std::set<int> start_set;   // I_0
    bool periodic = false;
    cplx c0{1.0};

    int length() const { return static_cast<int>(strands.size()); }
    void validate() const;  // throws on malformed data or N^{nu_i}_{lambda_i lambda_{i+1}} != 1
};

/// The constructed family: projections, generators, and their constants.
struct TLFamily {
    std::shared_ptr<const PathBasis> basis;
    std::vector<SparseOperator> p;  // p_1..p_{L-1}
    std::vector<SparseOperator> u;  // U_1..U_{L-1}
    std::vector<cplx> c;            // c_1..c_{L-2}, from the F-symbol formula
    std::vector<cplx> d;            // loop parameter of each U_i
    cplx delta{0.0};                // d_1
    cplx c0{1.0};
};

struct TLReport {
    double idempotency = 0.0;       // max ||p_i^2 - p_i||
    double loop = 0.0;              // max ||U_i^2 - delta U_i||
    double commutation = 0.0;       // max ||[U_i, U_j]||, |i-j| > 1
    double cubic_up = 0.0;          // max ||U_i U_{i+1} U_i - U_i||
    double cubic_down = 0.0;        // max ||U_i U_{i-1} U_i - U_i||
    bool cubic_applicable = true;   // false for L = 2
    double max_residual() const;
    bool pass(double tol) const { return max_residual() < tol; }
};

/// Matrix of p_i on the path basis, from the F-symbol formula
///   <mu'|p_i|mu> = F^{mu_{i-1} l_i l_{i+1}}_{mu_{i+1}; mu_i, nu_i}
///                  (F^-1)^{mu'_{i-1} l_i l_{i+1}}_{mu'_{i+1}; nu_i, mu'_i}
///                  prod_{j != i} delta_{mu_j, mu'_j}   (1 <= i <= L-1).
SparseOperator projection_matrix(const ChainSpec& chain, std::shared_ptr<const PathBasis> basis,
                                 int i);

/// c_i = F^{l_i l_{i+1} l_{i+2}}_{mu_i; nu_i, nu_{i+1}}
///       (F^-1)^{l_i l_{i+1} l_{i+2}}_{mu_i; nu_{i+1}, nu_i}.
/// Throws when a simplicity hypothesis fails (nu_i x l_{i+2} or
/// l_i x nu_{i+1} not simple, or their simple summands disagree).
cplx compute_c(const ChainSpec& chain, int i);

struct HomogeneityReport {
    std::vector<cplx> c;
    double max_deviation = 0.0;  // max_i |c_i - c_1|
    bool pass(double tol) const { return max_deviation < tol; }
};
HomogeneityReport verify_c_homogeneity(const ChainSpec& chain);

/// U_1 = c0 p_1 and then gamma_{i+1} = 1/(c_i gamma_i), which reproduces the
/// alternating product formula for the even/odd prefactors.
std::vector<SparseOperator> normalize_generators(const std::vector<SparseOperator>& projections,
                                                 const std::vector<cplx>& c, cplx c0);

/// The scalar d with U^2 = d U; throws if no scalar fits within tolerance.
cplx loop_parameter(const SparseOperator& u, double tol = 1e-9);

/// Builds basis, projections, constants and normalized generators for an
/// open chain. I_0 defaults to all labels when chain.start_set is empty.
TLFamily build_tl_family(const ChainSpec& chain);

TLReport verify_tl(const TLFamily& family, double tol);

struct PeriodicReport {
    cplx c;
    std::vector<cplx> c0_tested;
    std::vector<double> residuals;  // worst cubic residual per c0
    std::vector<bool> expected_pass;
    bool ok = false;  // every c0 behaved as predicted
};

/// Closed chain: heights live on a circle (mu_L = mu_0) and p_L couples
/// strands L and 1 across the seam. For odd L the cubic relations pin
/// c0 = +-1/sqrt(c); for even L any invertible c0 works.
PeriodicReport periodic_constraint_check(const ChainSpec& chain, double tol);

}  // namespace tlcat

#endif
