#include "tlcat/monoidal_system.hpp"

#include <Eigen/Dense>

#include <sstream>
#include <stdexcept>

namespace tlcat {

void FusionRules::set(int a, int b, int c, unsigned n) {
    if (n == 0)
        n_.erase({a, b, c});
    else
        n_[{a, b, c}] = n;
}

unsigned FusionRules::n(int a, int b, int c) const {
    auto it = n_.find({a, b, c});
    return it == n_.end() ? 0u : it->second;
}

bool FusionRules::multiplicity_free() const {
    for (const auto& [k, v] : n_)
        if (v > 1) return false;
    return true;
}

bool is_multiplicity_free(const FusionRules& rules) { return rules.multiplicity_free(); }

void FSymbolTable::set(int a, int b, int c, int d, int e, int f, cplx value) {
    entries_[{a, b, c, d, e, f}] = value;
}

cplx FSymbolTable::get(int a, int b, int c, int d, int e, int f) const {
    auto it = entries_.find({a, b, c, d, e, f});
    return it == entries_.end() ? cplx(0.0) : it->second;
}

MonoidalSystem::MonoidalSystem(std::vector<LabelInfo> labels, int unit, FusionRules rules,
                               FSymbolTable f, double tolerance, std::optional<int> cap)
    : labels_(std::move(labels)),
      unit_(unit),
      rules_(std::move(rules)),
      f_(std::move(f)),
      tol_(tolerance),
      cap_(cap) {
    if (labels_.empty()) throw std::invalid_argument("monoidal system needs labels");
    if (unit_ < 0 || unit_ >= num_labels()) throw std::invalid_argument("unit label out of range");
    if (tol_ <= 0) throw std::invalid_argument("tolerance must be positive");
    for (const auto& [k, v] : rules_.entries())
        for (int x : k)
            if (x < 0 || x >= num_labels())
                throw std::invalid_argument("fusion rules reference unknown label index");

    // Precompute the inverse of every nonempty F block (a,b,c,d).
    const int n = num_labels();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Block blk;
                    for (int e = 0; e < n; ++e)
                        if (rules_.n(a, b, e) && rules_.n(e, c, d)) blk.rows.push_back(e);
                    for (int fl = 0; fl < n; ++fl)
                        if (rules_.n(b, c, fl) && rules_.n(a, fl, d)) blk.cols.push_back(fl);
                    if (blk.rows.empty() || blk.cols.empty()) continue;
                    if (blk.rows.size() != blk.cols.size()) continue;  // inconsistent rules; validators report it
                    const int m = static_cast<int>(blk.rows.size());
                    Eigen::MatrixXcd M(m, m);
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < m; ++j)
                            M(i, j) = f_.get(a, b, c, d, blk.rows[i], blk.cols[j]);
                    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
                    if (!lu.isInvertible()) {
                        blk.inv.clear();  // singular; flagged on first f_inverse use
                    } else {
                        Eigen::MatrixXcd inv = lu.inverse();
                        blk.inv.resize(static_cast<size_t>(m) * m);
                        for (int i = 0; i < m; ++i)
                            for (int j = 0; j < m; ++j) blk.inv[static_cast<size_t>(i) * m + j] = inv(i, j);
                    }
                    blocks_.emplace(std::array<int, 4>{a, b, c, d}, std::move(blk));
                }
}

int MonoidalSystem::label_index(const std::string& id) const {
    for (int i = 0; i < num_labels(); ++i)
        if (labels_[i].id == id) return i;
    throw std::invalid_argument("unknown label id: " + id);
}

cplx MonoidalSystem::f_symbol(int a, int b, int c, int d, int e, int f) const {
    for (int x : {a, b, c, d, e, f})
        if (x < 0 || x >= num_labels()) throw std::invalid_argument("f_symbol: label out of range");
    return f_.get(a, b, c, d, e, f);
}

const MonoidalSystem::Block* MonoidalSystem::block(int a, int b, int c, int d) const {
    auto it = blocks_.find({a, b, c, d});
    return it == blocks_.end() ? nullptr : &it->second;
}

cplx MonoidalSystem::f_inverse(int a, int b, int c, int d, int f, int e) const {
    const Block* blk = block(a, b, c, d);
    if (!blk) {
        std::ostringstream os;
        os << "f_inverse: empty F block (" << a << "," << b << "," << c << "," << d << ")";
        throw std::invalid_argument(os.str());
    }
    if (blk->inv.empty()) {
        std::ostringstream os;
        os << "f_inverse: singular F block (" << a << "," << b << "," << c << "," << d << ")";
        throw std::runtime_error(os.str());
    }
    const int m = static_cast<int>(blk->rows.size());
    int fi = -1, ei = -1;
    for (int j = 0; j < m; ++j)
        if (blk->cols[j] == f) fi = j;
    for (int i = 0; i < m; ++i)
        if (blk->rows[i] == e) ei = i;
    if (fi < 0 || ei < 0) return cplx(0.0);
    return blk->inv[static_cast<size_t>(fi) * m + ei];
}

bool MonoidalSystem::quad_in_range(int a, int b, int c, int d) const {
    if (!cap_) return true;
    // Truncated generic su2: labels are their own integer values. Internal
    // channels of neighbouring pairs must not be clipped by the window.
    return a + b <= *cap_ && b + c <= *cap_ && c + d <= *cap_;
}

ValidationReport validate_fusion(const FusionRules& rules, const std::vector<LabelInfo>& labels,
                                 int unit, std::optional<int> cap) {
    if (labels.empty()) throw std::invalid_argument("validate_fusion: empty label set");
    const int n = static_cast<int>(labels.size());
    if (unit < 0 || unit >= n) throw std::invalid_argument("validate_fusion: unit not in labels");
    for (const auto& [k, v] : rules.entries())
        for (int x : k)
            if (x < 0 || x >= n)
                throw std::invalid_argument("validate_fusion: unknown label referenced in multiplicity map");

    ValidationReport rep;
    auto in_range2 = [&](int a, int b) { return !cap || a + b <= *cap; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            unsigned expect = (a == b) ? 1u : 0u;
            if (rules.n(a, unit, b) != expect) {
                std::ostringstream os;
                os << "unit law violated: N^{" << labels[b].id << "}_{" << labels[a].id << ",1} = "
                   << rules.n(a, unit, b) << ", expected " << expect;
                rep.violations.push_back(os.str());
            }
            if (rules.n(unit, a, b) != expect) {
                std::ostringstream os;
                os << "unit law violated: N^{" << labels[b].id << "}_{1," << labels[a].id << "} = "
                   << rules.n(unit, a, b) << ", expected " << expect;
                rep.violations.push_back(os.str());
            }
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!in_range2(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (!in_range2(b, c)) continue;
                for (int d = 0; d < n; ++d) {
                    long lhs = 0, rhs = 0;
                    for (int e = 0; e < n; ++e) lhs += static_cast<long>(rules.n(e, c, d)) * rules.n(a, b, e);
                    for (int f = 0; f < n; ++f) rhs += static_cast<long>(rules.n(a, f, d)) * rules.n(b, c, f);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "associativity count violated at (" << labels[a].id << "," << labels[b].id
                           << "," << labels[c].id << "," << labels[d].id << "): " << lhs << " != " << rhs;
                        rep.violations.push_back(os.str());
                    }
                }
            }
        }
    return rep;
}

ValidationReport check_unit_constraints(const MonoidalSystem& sys) {
    ValidationReport rep;
    const int n = sys.num_labels();
    const int one = sys.unit();
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
                if (!(sys.n(a, one, a) && sys.n(a, c, d))) continue;
                if (!sys.quad_in_range(a, one, c, d)) continue;
                cplx v = sys.f_symbol(a, one, c, d, a, c);
                if (std::abs(v - cplx(1.0)) > sys.tolerance()) {
                    std::ostringstream os;
                    os << "unit F constraint: F^{" << sys.label(a).id << ",1," << sys.label(c).id
                       << "}_{" << sys.label(d).id << "} = " << v.real();
                    if (v.imag() != 0.0) os << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
                    os << ", expected 1 (deviation " << std::abs(v - cplx(1.0)) << ")";
                    rep.violations.push_back(os.str());
                }
            }
    return rep;
}

PentagonReport check_pentagon(const MonoidalSystem& sys) {
    PentagonReport rep;
    const int n = sys.num_labels();
    const auto& N = sys.rules();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (!sys.quad_in_range(a, b, c, d)) continue;
                    for (int x = 0; x < n; ++x) {
                        if (!N.n(a, b, x)) continue;
                        for (int y = 0; y < n; ++y) {
                            if (!N.n(x, c, y)) continue;
                            for (int e = 0; e < n; ++e) {
                                if (!N.n(y, d, e)) continue;
                                for (int v = 0; v < n; ++v) {
                                    if (!N.n(c, d, v)) continue;
                                    for (int w = 0; w < n; ++w) {
                                        if (!N.n(b, v, w) || !N.n(a, w, e)) continue;
                                        cplx lhs(0.0);
                                        for (int u = 0; u < n; ++u) {
                                            if (!N.n(b, c, u)) continue;
                                            lhs += sys.f_symbol(b, c, d, w, u, v) *
                                                   sys.f_symbol(a, u, d, e, y, w) *
                                                   sys.f_symbol(a, b, c, y, x, u);
                                        }
                                        cplx rhs = sys.f_symbol(a, b, v, e, x, w) *
                                                   sys.f_symbol(x, c, d, e, y, v);
                                        double r = std::abs(lhs - rhs);
                                        ++rep.equations_checked;
                                        if (r > rep.max_residual) {
                                            rep.max_residual = r;
                                            rep.worst_tuple = {a, b, c, d, e, x, y, v, w};
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
    return rep;
}

}  // namespace tlcat
