#ifndef SWDUAL_LINALG_HPP
#define SWDUAL_LINALG_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swdual/field.hpp"
#include "swdual/operators.hpp"

namespace swdual {

/// Sparse coordinate vector: (index, value) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<std::int64_t, Scalar>>;

namespace detail {

inline void axpy(SparseVec& v, const Scalar& c, const SparseVec& w) {
    // v += c*w
    SparseVec out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            Scalar x = c * w[j].second;
            if (!x.is_zero()) out.emplace_back(w[j].first, x);
            ++j;
        } else {
            Scalar x = v[i].second + c * w[j].second;
            if (!x.is_zero()) out.emplace_back(v[i].first, x);
            ++i;
            ++j;
        }
    }
    v = std::move(out);
}

inline void scale(SparseVec& v, const Scalar& c) {
    for (auto& [i, x] : v) x *= c;
}

} // namespace detail

/// Echelonized basis of a subspace of K^ambient, kept in reduced row-echelon
/// form with distinct pivots; canonical, so equality of spans is equality of
/// bases and membership testing is pivot elimination.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    SubspaceBasis(std::int64_t ambient, FieldSpec f) : ambient_(ambient), field_(f) {}

    std::int64_t ambient() const { return ambient_; }
    const FieldSpec& field() const { return field_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& rows() const { return rows_; }

    /// Residual of v after elimination against the basis.
    SparseVec reduce(SparseVec v) const {
        for (const auto& row : rows_) {
            if (v.empty()) break;
            std::int64_t p = row.front().first;
            auto it = std::lower_bound(v.begin(), v.end(), p,
                                       [](const auto& a, std::int64_t b) { return a.first < b; });
            if (it == v.end() || it->first != p) continue;
            detail::axpy(v, -it->second, row);
        }
        return v;
    }

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    /// Insert a vector, maintaining canonical RREF. Returns false if v was
    /// already in the span.
    bool insert(SparseVec v) {
        check(v);
        v = reduce(std::move(v));
        if (v.empty()) return false;
        detail::scale(v, v.front().second.inverse());
        const std::int64_t p = v.front().first;
        // back-eliminate the new pivot from existing rows
        for (auto& row : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), p,
                                       [](const auto& a, std::int64_t b) { return a.first < b; });
            if (it != row.end() && it->first == p) detail::axpy(row, -it->second, v);
        }
        auto at = std::lower_bound(rows_.begin(), rows_.end(), p,
                                   [](const SparseVec& r, std::int64_t q) { return r.front().first < q; });
        rows_.insert(at, std::move(v));
        return true;
    }

    bool operator==(const SubspaceBasis& o) const {
        return ambient_ == o.ambient_ && field_ == o.field_ && rows_ == o.rows_;
    }

private:
    void check(const SparseVec& v) const {
        if (!v.empty() && (v.back().first >= ambient_ || v.front().first < 0))
            throw std::invalid_argument("vector exceeds ambient dimension");
    }

    std::int64_t ambient_ = 0;
    FieldSpec field_;
    std::vector<SparseVec> rows_;
};

/// Canonical echelon basis of the span of the given vectors.
inline SubspaceBasis rref(const std::vector<SparseVec>& vectors, std::int64_t ambient,
                          FieldSpec field) {
    SubspaceBasis b(ambient, field);
    for (const auto& v : vectors) b.insert(v);
    return b;
}

inline bool subspace_contains(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient() || !(a.field() == b.field()))
        throw std::invalid_argument("ambient mismatch");
    for (const auto& v : b.rows())
        if (!a.contains(v)) return false;
    return true;
}

inline bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a == b; // canonical form
}

/// Flatten a matrix to a row-major coordinate vector in K^(N^2).
inline SparseVec flatten(const OperatorMatrix& M) {
    const std::int64_t N = M.dim();
    std::map<std::int64_t, Scalar> acc;
    for (std::int64_t j = 0; j < N; ++j)
        for (const auto& [i, v] : M.col(j)) acc.emplace(i * N + j, v);
    return SparseVec(acc.begin(), acc.end());
}

inline OperatorMatrix unflatten(const SparseVec& v, std::int64_t N, FieldSpec f) {
    OperatorMatrix M(N, f);
    for (const auto& [idx, x] : v) M.add(idx / N, idx % N, x);
    return M;
}

/// Canonical basis of {X : XA = AX for all A in ops}: the endomorphism
/// algebra of the module over the algebra generated by ops.
inline SubspaceBasis commutant(const std::vector<OperatorMatrix>& ops, std::int64_t N,
                               FieldSpec field) {
    if (N == 0) throw std::invalid_argument("empty ambient space");
    // Assemble the linear system: for each generator A and each (I,J),
    //   sum_K x_{IK} A_{KJ} - A_{IK} x_{KJ} = 0.
    SubspaceBasis constraints(N * N, field);
    for (const auto& A : ops) {
        // row view of A
        std::vector<std::map<std::int64_t, Scalar>> rows(N);
        for (std::int64_t j = 0; j < N; ++j)
            for (const auto& [i, v] : A.col(j)) rows[i].emplace(j, v);
        for (std::int64_t I = 0; I < N; ++I)
            for (std::int64_t J = 0; J < N; ++J) {
                std::map<std::int64_t, Scalar> coeff;
                for (const auto& [K, v] : A.col(J)) {
                    auto [it, fresh] = coeff.emplace(I * N + K, v);
                    if (!fresh) it->second += v;
                }
                for (const auto& [K, v] : rows[I]) {
                    auto [it, fresh] = coeff.emplace(K * N + J, -v);
                    if (!fresh) it->second -= v;
                }
                SparseVec row;
                for (const auto& [c, v] : coeff)
                    if (!v.is_zero()) row.emplace_back(c, v);
                if (!row.empty()) constraints.insert(std::move(row));
            }
    }
    // Nullspace from the echelonized constraints.
    std::set<std::int64_t> pivots;
    for (const auto& row : constraints.rows()) pivots.insert(row.front().first);
    SubspaceBasis out(N * N, field);
    for (std::int64_t f = 0; f < N * N; ++f) {
        if (pivots.count(f)) continue;
        SparseVec v;
        std::map<std::int64_t, Scalar> entries;
        entries.emplace(f, Scalar::one(field));
        for (const auto& row : constraints.rows()) {
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& a, std::int64_t b) { return a.first < b; });
            if (it != row.end() && it->first == f) entries.emplace(row.front().first, -it->second);
        }
        for (const auto& [c, x] : entries) v.emplace_back(c, x);
        out.insert(std::move(v));
    }
    return out;
}

/// Canonical basis of the smallest unital subalgebra of N x N matrices
/// containing gens: seeded with the identity, saturated breadth-first by
/// right-multiplication with generators until the span stabilizes.
inline SubspaceBasis algebra_closure(const std::vector<OperatorMatrix>& gens, std::int64_t N,
                                     FieldSpec field, bool include_identity = true) {
    SubspaceBasis basis(N * N, field);
    std::vector<OperatorMatrix> frontier;
    if (include_identity) {
        OperatorMatrix I = OperatorMatrix::identity(N, field);
        if (basis.insert(flatten(I))) frontier.push_back(I);
    }
    for (const auto& g : gens)
        if (basis.insert(flatten(g))) frontier.push_back(g);
    while (!frontier.empty()) {
        std::vector<OperatorMatrix> next;
        for (const auto& M : frontier)
            for (const auto& g : gens) {
                OperatorMatrix P = M * g;
                if (basis.insert(flatten(P))) next.push_back(std::move(P));
            }
        frontier = std::move(next);
    }
    return basis;
}

} // namespace swdual

#endif
