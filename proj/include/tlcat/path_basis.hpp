#ifndef TLCAT_PATH_BASIS_HPP
#define TLCAT_PATH_BASIS_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tlcat/monoidal_system.hpp"

namespace tlcat {

/// Strand decoration (lambda_1,...,lambda_L) with the allowed source labels
/// I_0 and an optional filter on the final label.
struct StrandDecoration {
    std::vector<int> strands;
    std::set<int> start_set;
    std::optional<std::set<int>> end_set;
    bool closed = false;  // keep only mu_L == mu_0 (periodic chains)
};

/// One admissible fusion path |mu_0, mu_1, ..., mu_L>.
struct PathState {
    std::vector<int> seq;
    bool operator==(const PathState& o) const { return seq == o.seq; }
    bool operator<(const PathState& o) const { return seq < o.seq; }
};

/// All admissible paths over a decoration, in deterministic (lexicographic
/// by label index) order. Paths with different mu_0 live in different
/// sectors; operators built on this basis never mix them.
class PathBasis {
public:
    PathBasis(const MonoidalSystem& sys, StrandDecoration decoration);

    int size() const { return static_cast<int>(states_.size()); }
    const PathState& state(int i) const { return states_.at(i); }
    const std::vector<PathState>& states() const { return states_; }
    int index(const PathState& s) const;  // throws if not a member
    bool contains(const PathState& s) const { return index_.count(s) > 0; }
    const StrandDecoration& decoration() const { return decoration_; }
    const MonoidalSystem& system() const { return *sys_; }
    int length() const { return static_cast<int>(decoration_.strands.size()); }

private:
    const MonoidalSystem* sys_;
    StrandDecoration decoration_;
    std::vector<PathState> states_;
    std::map<PathState, int> index_;
};

PathBasis enumerate_paths(const MonoidalSystem& sys, StrandDecoration decoration);

/// <mu'|mu> -- exact Kronecker delta of label sequences.
int braket(const PathBasis& basis, const PathState& bra, const PathState& ket);

/// Complex matrix over a path basis, stored sparsely keyed by (row, col);
/// iteration order is sorted so reports are deterministic.
class SparseOperator {
public:
    explicit SparseOperator(std::shared_ptr<const PathBasis> basis) : basis_(std::move(basis)) {}

    static SparseOperator identity(std::shared_ptr<const PathBasis> basis);

    void set(int row, int col, cplx value);
    void add_to(int row, int col, cplx value);
    cplx at(int row, int col) const;  // 0 if absent
    const std::map<std::pair<int, int>, cplx>& entries() const { return entries_; }
    const PathBasis& basis() const { return *basis_; }
    std::shared_ptr<const PathBasis> basis_ptr() const { return basis_; }

    SparseOperator operator+(const SparseOperator& o) const;
    SparseOperator operator-(const SparseOperator& o) const;
    SparseOperator operator*(const SparseOperator& o) const;  // composition
    SparseOperator scaled(cplx s) const;
    SparseOperator adjoint() const;
    cplx trace() const;

    /// Max absolute entry; the norm used for all residual reports.
    double norm_max() const;

    /// Drops entries below the threshold.
    void prune(double eps = 1e-15);

private:
    void check_same_basis(const SparseOperator& o) const;
    std::shared_ptr<const PathBasis> basis_;
    std::map<std::pair<int, int>, cplx> entries_;
};

/// |mu'><mu| as a single-entry matrix.
SparseOperator rank_one(std::shared_ptr<const PathBasis> basis, const PathState& ket,
                        const PathState& bra);

}  // namespace tlcat

#endif
