#ifndef TLCAT_MONOIDAL_SYSTEM_HPP
#define TLCAT_MONOIDAL_SYSTEM_HPP

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tlcat {

using cplx = std::complex<double>;

struct LabelInfo {
    std::string id;    // unique key, also used in files
    std::string name;  // display name
};

/// Fusion multiplicities N^c_{ab}, keyed by label indices (a,b,c).
/// Entries default to zero; only nonzero values are stored.
class FusionRules {
public:
    void set(int a, int b, int c, unsigned n);
    unsigned n(int a, int b, int c) const;
    bool multiplicity_free() const;
    const std::map<std::array<int, 3>, unsigned>& entries() const { return n_; }

private:
    std::map<std::array<int, 3>, unsigned> n_;
};

/// F-symbol table F^{abc}_{d;e,f}.
///
/// Index convention (used everywhere in this project): F^{abc}_{d;e,f} is
/// the coefficient expressing the right-associated tree vector (b x c fused
/// first, internal label f) in the left-associated basis (a x b fused first,
/// internal label e),
///     |a(bc) -> d; f>  =  sum_e  F^{abc}_{d;e,f} |(ab)c -> d; e> .
/// Lookups at inadmissible index tuples return 0.
class FSymbolTable {
public:
    void set(int a, int b, int c, int d, int e, int f, cplx value);
    cplx get(int a, int b, int c, int d, int e, int f) const;  // 0 if absent
    const std::map<std::array<int, 6>, cplx>& entries() const { return entries_; }

private:
    std::map<std::array<int, 6>, cplx> entries_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

struct PentagonReport {
    double max_residual = 0.0;
    long equations_checked = 0;
    std::array<int, 9> worst_tuple{};  // (a,b,c,d,e,x,y,v,w)
    bool pass(double tol) const { return max_residual < tol; }
};

/// The monoidal-system data (I, F, V, 1): label set, fusion multiplicities,
/// F-symbol table and unit label. Immutable after construction; all lookups
/// are safe for concurrent reads.
class MonoidalSystem {
public:
    MonoidalSystem(std::vector<LabelInfo> labels, int unit, FusionRules rules,
                   FSymbolTable f, double tolerance = 1e-10,
                   std::optional<int> truncation_cap = std::nullopt);

    int num_labels() const { return static_cast<int>(labels_.size()); }
    int unit() const { return unit_; }
    const LabelInfo& label(int i) const { return labels_.at(i); }
    const std::vector<LabelInfo>& labels() const { return labels_; }
    int label_index(const std::string& id) const;  // throws on unknown id
    double tolerance() const { return tol_; }

    const FusionRules& rules() const { return rules_; }
    const FSymbolTable& f_table() const { return f_; }
    unsigned n(int a, int b, int c) const { return rules_.n(a, b, c); }

    /// Stored F-symbol entry; exactly 0 for inadmissible tuples.
    cplx f_symbol(int a, int b, int c, int d, int e, int f) const;

    /// Entry (f,e) of the matrix inverse of the block [F^{abc}_d]_{e,f}.
    /// Throws if the block is empty or singular.
    cplx f_inverse(int a, int b, int c, int d, int f, int e) const;

    /// Labels in range for truncated generic systems (no-op otherwise).
    /// Validators only visit quadruples whose internal fusion channels stay
    /// below the cap, since a windowed generic su2 table is a partial system.
    bool quad_in_range(int a, int b, int c, int d) const;
    std::optional<int> truncation_cap() const { return cap_; }

private:
    struct Block {
        std::vector<int> rows;  // admissible e
        std::vector<int> cols;  // admissible f
        std::vector<cplx> inv;  // row-major inverse, indexed [f][e]
    };
    const Block* block(int a, int b, int c, int d) const;

    std::vector<LabelInfo> labels_;
    int unit_;
    FusionRules rules_;
    FSymbolTable f_;
    double tol_;
    std::optional<int> cap_;
    std::map<std::array<int, 4>, Block> blocks_;  // precomputed inverses
};

/// Exact integer checks of the unit law and the associativity count
/// identity. Violations are listed with the offending tuple; referencing a
/// label outside [0, #labels) in the multiplicity map is a structural error
/// and throws instead.
ValidationReport validate_fusion(const FusionRules& rules,
                                 const std::vector<LabelInfo>& labels, int unit,
                                 std::optional<int> truncation_cap = std::nullopt);

/// Checks F^{a1c}_d = identity on admissible tuples within tolerance.
ValidationReport check_unit_constraints(const MonoidalSystem& sys);

/// Evaluates every admissible pentagon equation
///   sum_u F^{bcd}_{w;u,v} F^{aud}_{e;y,w} F^{abc}_{y;x,u}
///     = F^{abv}_{e;x,w} F^{xcd}_{e;y,v}
/// and reports the maximum absolute residual.
PentagonReport check_pentagon(const MonoidalSystem& sys);

bool is_multiplicity_free(const FusionRules& rules);

}  // namespace tlcat

#endif
