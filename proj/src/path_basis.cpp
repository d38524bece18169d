#include "tlcat/path_basis.hpp"

#include <stdexcept>

namespace tlcat {

PathBasis::PathBasis(const MonoidalSystem& sys, StrandDecoration decoration)
    : sys_(&sys), decoration_(std::move(decoration)) {
    const auto& dec = decoration_;
    if (dec.strands.empty()) throw std::invalid_argument("enumerate_paths: decoration needs L >= 1");
    if (dec.start_set.empty()) throw std::invalid_argument("enumerate_paths: empty start set I_0");
    const int n = sys.num_labels();
    for (int s : dec.strands)
        if (s < 0 || s >= n) throw std::invalid_argument("enumerate_paths: strand label out of range");
    for (int s : dec.start_set)
        if (s < 0 || s >= n) throw std::invalid_argument("enumerate_paths: start label out of range");

    const int L = static_cast<int>(dec.strands.size());
    std::vector<int> cur;
    // Depth-first in increasing label order yields lexicographic ordering.
    auto extend = [&](auto&& self, int depth) -> void {
        if (depth == L) {
            if (dec.end_set && !dec.end_set->count(cur.back())) return;
            if (dec.closed && cur.back() != cur.front()) return;
            states_.push_back(PathState{cur});
            return;
        }
        for (int next = 0; next < n; ++next) {
            if (sys.n(cur.back(), dec.strands[depth], next) != 1) continue;
            cur.push_back(next);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    for (int mu0 : dec.start_set) {
        cur.assign(1, mu0);
        extend(extend, 0);
    }
    for (int i = 0; i < size(); ++i) index_[states_[i]] = i;
}

int PathBasis::index(const PathState& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::invalid_argument("path state not in basis");
    return it->second;
}

PathBasis enumerate_paths(const MonoidalSystem& sys, StrandDecoration decoration) {
    return PathBasis(sys, std::move(decoration));
}

int braket(const PathBasis& basis, const PathState& bra, const PathState& ket) {
    basis.index(bra);
    basis.index(ket);
    return bra.seq == ket.seq ? 1 : 0;
}

SparseOperator SparseOperator::identity(std::shared_ptr<const PathBasis> basis) {
    SparseOperator op(basis);
    for (int i = 0; i < basis->size(); ++i) op.set(i, i, cplx(1.0));
    return op;
}

void SparseOperator::set(int row, int col, cplx value) {
    if (row < 0 || col < 0 || row >= basis_->size() || col >= basis_->size())
        throw std::out_of_range("SparseOperator: index out of range");
    if (value == cplx(0.0))
        entries_.erase({row, col});
    else
        entries_[{row, col}] = value;
}

void SparseOperator::add_to(int row, int col, cplx value) { set(row, col, at(row, col) + value); }

cplx SparseOperator::at(int row, int col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? cplx(0.0) : it->second;
}

void SparseOperator::check_same_basis(const SparseOperator& o) const {
    if (basis_ == o.basis_) return;
    if (basis_->states() == o.basis_->states() &&
        basis_->decoration().strands == o.basis_->decoration().strands)
        return;
    throw std::invalid_argument("operators live on different bases");
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
    check_same_basis(o);
    SparseOperator r = *this;
    for (const auto& [k, v] : o.entries_) r.add_to(k.first, k.second, v);
    return r;
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
    return *this + o.scaled(cplx(-1.0));
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
    check_same_basis(o);
    SparseOperator r(basis_);
    // Row-by-column product; the right factor's rows are contiguous in the
    // sorted entry map.
    for (const auto& [k, va] : entries_) {
        auto lo = o.entries_.lower_bound({k.second, 0});
        auto hi = o.entries_.upper_bound({k.second, basis_->size()});
        for (auto it = lo; it != hi; ++it) r.add_to(k.first, it->first.second, va * it->second);
    }
    r.prune();
    return r;
}

SparseOperator SparseOperator::scaled(cplx s) const {
    SparseOperator r(basis_);
    for (const auto& [k, v] : entries_) r.set(k.first, k.second, s * v);
    return r;
}

SparseOperator SparseOperator::adjoint() const {
    SparseOperator r(basis_);
    for (const auto& [k, v] : entries_) r.set(k.second, k.first, std::conj(v));
    return r;
}

cplx SparseOperator::trace() const {
    cplx t(0.0);
    for (const auto& [k, v] : entries_)
        if (k.first == k.second) t += v;
    return t;
}

double SparseOperator::norm_max() const {
    double m = 0.0;
    for (const auto& [k, v] : entries_) m = std::max(m, std::abs(v));
    return m;
}

void SparseOperator::prune(double eps) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (std::abs(it->second) < eps)
            it = entries_.erase(it);
        else
            ++it;
    }
}

SparseOperator rank_one(std::shared_ptr<const PathBasis> basis, const PathState& ket,
                        const PathState& bra) {
    SparseOperator op(basis);
    op.set(basis->index(ket), basis->index(bra), cplx(1.0));
    return op;
}

}  // namespace tlcat
