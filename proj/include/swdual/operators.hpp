#ifndef SWDUAL_OPERATORS_HPP
#define SWDUAL_OPERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "swdual/algebra.hpp"
#include "swdual/diagram.hpp"
#include "swdual/field.hpp"

namespace swdual {

/// Mixed tensor space V^{(x)r} (x) W^{(x)s} over GL(m) (n = 0) or GL(m|n).
struct TensorSpaceSpec {
    int m = 1, n = 0, r = 0, s = 0;
    FieldSpec field;

    int letters() const { return m + n; }
    int slots() const { return r + s; }
    std::int64_t dim() const {
        std::int64_t d = 1;
        for (int t = 0; t < slots(); ++t) d *= letters();
        return d;
    }
    bool classical() const { return n == 0; }
};

/// Parity |i|: 0 for i <= m, 1 for m < i <= m+n.
inline int parity(int i, const TensorSpaceSpec& spec) {
    if (i < 1 || i > spec.letters()) throw std::invalid_argument("basis index out of range");
    return i <= spec.m ? 0 : 1;
}

/// Basis label (i_1,...,i_{r+s}) with entries in 1..m+n, in bijective,
/// lexicographic correspondence with positions 0..N-1.
struct MultiIndex {
    std::vector<int> entries; // 1-based values

    static MultiIndex from_position(std::int64_t pos, const TensorSpaceSpec& spec) {
        MultiIndex I;
        I.entries.assign(spec.slots(), 1);
        for (int t = spec.slots() - 1; t >= 0; --t) {
            I.entries[t] = static_cast<int>(pos % spec.letters()) + 1;
            pos /= spec.letters();
        }
        return I;
    }

    std::int64_t position(const TensorSpaceSpec& spec) const {
        std::int64_t pos = 0;
        for (int v : entries) pos = pos * spec.letters() + (v - 1);
        return pos;
    }

    /// Sum of parities of entries in slots [0, t), for Koszul signs.
    int parity_prefix(int t, const TensorSpaceSpec& spec) const {
        int acc = 0;
        for (int a = 0; a < t; ++a) acc += parity(entries[a], spec);
        return acc & 1;
    }
};

/// Exact sparse matrix on the tensor basis, column convention: entry (I,J)
/// is the coefficient a_IJ of phi = sum a_IJ E_IJ, i.e. column J holds the
/// coordinates of the image of v_J.
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    OperatorMatrix(std::int64_t dim, FieldSpec f) : dim_(dim), field_(f), cols_(dim) {}

    static OperatorMatrix identity(std::int64_t dim, FieldSpec f) {
        OperatorMatrix M(dim, f);
        for (std::int64_t j = 0; j < dim; ++j) M.cols_[j].emplace(j, Scalar::one(f));
        return M;
    }

    std::int64_t dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }
    const std::map<std::int64_t, Scalar>& col(std::int64_t j) const { return cols_[j]; }

    void add(std::int64_t row, std::int64_t col, const Scalar& v) {
        if (v.is_zero()) return;
        auto& c = cols_[col];
        auto it = c.find(row);
        if (it == c.end()) {
            c.emplace(row, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) c.erase(it);
        }
    }

    Scalar entry(std::int64_t row, std::int64_t col) const {
        auto it = cols_[col].find(row);
        return it == cols_[col].end() ? Scalar::zero(field_) : it->second;
    }

    OperatorMatrix operator*(const OperatorMatrix& o) const {
        check(o);
        OperatorMatrix out(dim_, field_);
        for (std::int64_t j = 0; j < dim_; ++j)
            for (const auto& [k, bkj] : o.cols_[j])
                for (const auto& [i, aik] : cols_[k]) out.add(i, j, aik * bkj);
        return out;
    }
    OperatorMatrix operator+(const OperatorMatrix& o) const {
        check(o);
        OperatorMatrix out = *this;
        for (std::int64_t j = 0; j < dim_; ++j)
            for (const auto& [i, v] : o.cols_[j]) out.add(i, j, v);
        return out;
    }
    OperatorMatrix operator-(const OperatorMatrix& o) const {
        check(o);
        OperatorMatrix out = *this;
        for (std::int64_t j = 0; j < dim_; ++j)
            for (const auto& [i, v] : o.cols_[j]) out.add(i, j, -v);
        return out;
    }
    OperatorMatrix scaled(const Scalar& c) const {
        OperatorMatrix out(dim_, field_);
        if (c.is_zero()) return out;
        for (std::int64_t j = 0; j < dim_; ++j)
            for (const auto& [i, v] : cols_[j]) out.add(i, j, v * c);
        return out;
    }

    bool is_zero() const {
        for (const auto& c : cols_)
            if (!c.empty()) return false;
        return true;
    }
    bool operator==(const OperatorMatrix& o) const {
        return dim_ == o.dim_ && field_ == o.field_ && cols_ == o.cols_;
    }

    bool commutes_with(const OperatorMatrix& o) const {
        return (*this * o - o * *this).is_zero();
    }

    /// Matrix-vector product on column coordinates.
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
        std::vector<Scalar> y(dim_, Scalar::zero(field_));
        for (std::int64_t j = 0; j < dim_; ++j) {
            if (x[j].is_zero()) continue;
            for (const auto& [i, v] : cols_[j]) y[i] += v * x[j];
        }
        return y;
    }

    /// Line-oriented dump: header "dim N field q|p", then "row col value"
    /// triples sorted by (col,row).
    std::string dump() const {
        std::ostringstream os;
        os << "dim " << dim_ << " field " << field_.name() << "\n";
        for (std::int64_t j = 0; j < dim_; ++j)
            for (const auto& [i, v] : cols_[j]) os << i << " " << j << " " << v.str() << "\n";
        return os.str();
    }

private:
    void check(const OperatorMatrix& o) const {
        if (dim_ != o.dim_ || !(field_ == o.field_))
            throw std::invalid_argument("operator shape/field mismatch");
    }

    std::int64_t dim_ = 0;
    FieldSpec field_;
    std::vector<std::map<std::int64_t, Scalar>> cols_;
};

namespace detail {

/// Classical code path: e_ij as a derivation over all slots, no signs.
inline OperatorMatrix left_matrix_unit_classical(int i, int j, const TensorSpaceSpec& spec) {
    const std::int64_t N = spec.dim();
    OperatorMatrix M(N, spec.field);
    const Scalar one = Scalar::one(spec.field);
    for (std::int64_t c = 0; c < N; ++c) {
        MultiIndex L = MultiIndex::from_position(c, spec);
        for (int a = 0; a < spec.r; ++a) {
            if (L.entries[a] != j) continue;
            MultiIndex I = L;
            I.entries[a] = i;
            M.add(I.position(spec), c, one);
        }
        for (int b = 0; b < spec.s; ++b) {
            if (L.entries[spec.r + b] != i) continue;
            MultiIndex I = L;
            I.entries[spec.r + b] = j;
            M.add(I.position(spec), c, -one);
        }
    }
    return M;
}

/// Super code path: Koszul sign past earlier slots, W-slot action
/// e_ij v*_k = -delta_{ik} (-1)^{|i|(|i|+|j|)} v*_j.
inline OperatorMatrix left_matrix_unit_super(int i, int j, const TensorSpaceSpec& spec) {
    const std::int64_t N = spec.dim();
    OperatorMatrix M(N, spec.field);
    const int pe = (parity(i, spec) + parity(j, spec)) & 1; // |e_ij|
    const int pw = (parity(i, spec) * ((parity(i, spec) + parity(j, spec)) & 1)) & 1;
    for (std::int64_t c = 0; c < N; ++c) {
        MultiIndex L = MultiIndex::from_position(c, spec);
        for (int a = 0; a < spec.r; ++a) {
            if (L.entries[a] != j) continue;
            int sgn = pe * L.parity_prefix(a, spec);
            MultiIndex I = L;
            I.entries[a] = i;
            M.add(I.position(spec), c, Scalar::of(sgn ? -1 : 1, spec.field));
        }
        for (int b = 0; b < spec.s; ++b) {
            int t = spec.r + b;
            if (L.entries[t] != i) continue;
            int sgn = (1 + pw + pe * L.parity_prefix(t, spec)) & 1;
            MultiIndex I = L;
            I.entries[t] = j;
            M.add(I.position(spec), c, Scalar::of(sgn ? -1 : 1, spec.field));
        }
    }
    return M;
}

inline OperatorMatrix right_tau_classical(int j, const TensorSpaceSpec& spec) {
    const std::int64_t N = spec.dim();
    OperatorMatrix M(N, spec.field);
    const Scalar one = Scalar::one(spec.field);
    for (std::int64_t c = 0; c < N; ++c) {
        MultiIndex L = MultiIndex::from_position(c, spec);
        if (j != spec.r) {
            MultiIndex I = L;
            std::swap(I.entries[j - 1], I.entries[j]);
            M.add(I.position(spec), c, one);
        } else if (L.entries[spec.r - 1] == L.entries[spec.r]) {
            for (int t = 1; t <= spec.letters(); ++t) {
                MultiIndex I = L;
                I.entries[spec.r - 1] = t;
                I.entries[spec.r] = t;
                M.add(I.position(spec), c, one);
            }
        }
    }
    return M;
}

inline OperatorMatrix right_tau_super(int j, const TensorSpaceSpec& spec) {
    const std::int64_t N = spec.dim();
    OperatorMatrix M(N, spec.field);
    for (std::int64_t c = 0; c < N; ++c) {
        MultiIndex L = MultiIndex::from_position(c, spec);
        if (j != spec.r) {
            int sgn = parity(L.entries[j - 1], spec) * parity(L.entries[j], spec);
            MultiIndex I = L;
            std::swap(I.entries[j - 1], I.entries[j]);
            M.add(I.position(spec), c, Scalar::of(sgn ? -1 : 1, spec.field));
        } else if (L.entries[spec.r - 1] == L.entries[spec.r]) {
            // Contraction onto sum_k v_k (x) v*_k, sign (-1)^{|i_r|}. The sign
            // is fixed so that tau_r^2 = delta*tau_r holds in the
            // representation and the n = 0 case matches the classical formula.
            int sgn = parity(L.entries[spec.r - 1], spec);
            for (int t = 1; t <= spec.letters(); ++t) {
                MultiIndex I = L;
                I.entries[spec.r - 1] = t;
                I.entries[spec.r] = t;
                M.add(I.position(spec), c, Scalar::of(sgn ? -1 : 1, spec.field));
            }
        }
    }
    return M;
}

} // namespace detail

/// Left action of the matrix unit e_ij on the mixed tensor space.
inline OperatorMatrix left_matrix_unit(int i, int j, const TensorSpaceSpec& spec) {
    parity(i, spec);
    parity(j, spec); // range checks
    return detail::left_matrix_unit_super(i, j, spec);
}

/// Right action of tau_j (place transposition for j != r, contraction for j = r).
inline OperatorMatrix right_tau(int j, const TensorSpaceSpec& spec) {
    if (j < 1 || j > spec.slots() - 1)
        throw std::invalid_argument("tau index out of range: " + std::to_string(j));
    return detail::right_tau_super(j, spec);
}

/// Divided power e_ij^{(k)} (i != j) or binomial diagonal element
/// binom(e_ii; k), defined integrally so it survives reduction mod p.
inline OperatorMatrix divided_power(int i, int j, int k, const TensorSpaceSpec& spec) {
    parity(i, spec);
    parity(j, spec);
    if (k < 0 || k > spec.slots()) throw std::invalid_argument("divided power k out of range");
    const std::int64_t N = spec.dim();
    if (k == 0) return OperatorMatrix::identity(N, spec.field);

    if (i == j) {
        OperatorMatrix M(N, spec.field);
        for (std::int64_t c = 0; c < N; ++c) {
            MultiIndex L = MultiIndex::from_position(c, spec);
            long long cnt = 0;
            for (int a = 0; a < spec.r; ++a) cnt += (L.entries[a] == i);
            for (int b = 0; b < spec.s; ++b) cnt -= (L.entries[spec.r + b] == i);
            M.add(c, c, binomial_scalar(cnt, k, spec.field));
        }
        return M;
    }

    const bool odd = ((parity(i, spec) + parity(j, spec)) & 1) != 0;
    if (odd) {
        if (k >= 2) throw std::invalid_argument("odd root vector admits divided powers k <= 1 only");
        return left_matrix_unit(i, j, spec);
    }

    // Even i != j: signed sum over k-element subsets of the eligible slots
    // (V slots carrying j, W slots carrying i); each chosen W slot
    // contributes a factor -1, Koszul signs vanish since |e_ij| = 0.
    OperatorMatrix M(N, spec.field);
    for (std::int64_t c = 0; c < N; ++c) {
        MultiIndex L = MultiIndex::from_position(c, spec);
        std::vector<int> eligible; // slot indices, 0-based
        for (int a = 0; a < spec.r; ++a)
            if (L.entries[a] == j) eligible.push_back(a);
        for (int b = 0; b < spec.s; ++b)
            if (L.entries[spec.r + b] == i) eligible.push_back(spec.r + b);
        const int e = static_cast<int>(eligible.size());
        if (e < k) continue;
        std::vector<int> pick(k);
        for (int t = 0; t < k; ++t) pick[t] = t;
        while (true) {
            MultiIndex I = L;
            int wcount = 0;
            for (int t = 0; t < k; ++t) {
                int slot = eligible[pick[t]];
                if (slot < spec.r) {
                    I.entries[slot] = i;
                } else {
                    I.entries[slot] = j;
                    ++wcount;
                }
            }
            M.add(I.position(spec), c, Scalar::of(wcount & 1 ? -1 : 1, spec.field));
            // next k-combination
            int t = k - 1;
            while (t >= 0 && pick[t] == e - k + t) --t;
            if (t < 0) break;
            ++pick[t];
            for (int u = t + 1; u < k; ++u) pick[u] = pick[u - 1] + 1;
        }
    }
    return M;
}

/// Coordinates of the coevaluation element tau = sum_k v_k (x) v*_k (r = s = 1).
inline std::vector<Scalar> invariant_element(const TensorSpaceSpec& spec) {
    if (spec.r != 1 || spec.s != 1) throw std::invalid_argument("invariant element needs r = s = 1");
    std::vector<Scalar> v(spec.dim(), Scalar::zero(spec.field));
    for (int t = 1; t <= spec.letters(); ++t) {
        MultiIndex I;
        I.entries = {t, t};
        v[I.position(spec)] = Scalar::one(spec.field);
    }
    return v;
}

/// Words in tau-generators for every basis diagram of shape (r,s), found by
/// cycle-free breadth-first search from the identity diagram.
class DiagramWordTable {
public:
    DiagramWordTable(int r, int s) : r_(r), s_(s) {
        const WalledDiagram id = WalledDiagram::identity(r, s);
        words_[id] = {};
        std::vector<WalledDiagram> frontier{id};
        const int k = r + s;
        while (!frontier.empty()) {
            std::vector<WalledDiagram> next;
            for (const auto& d : frontier)
                for (int i = 1; i <= k - 1; ++i) {
                    auto [e, t] = multiply_diagrams(d, tau_generator(i, r, s));
                    if (t != 0 || words_.count(e)) continue;
                    auto w = words_[d];
                    w.push_back(i);
                    words_.emplace(e, std::move(w));
                    next.push_back(e);
                }
            frontier = std::move(next);
        }
    }

    const std::vector<int>& word(const WalledDiagram& d) const {
        auto it = words_.find(d);
        if (it == words_.end())
            throw std::runtime_error("diagram not reachable by a cycle-free generator word");
        return it->second;
    }

    std::size_t size() const { return words_.size(); }

private:
    int r_, s_;
    std::map<WalledDiagram, std::vector<int>> words_;
};

/// Representation matrix of a diagram-algebra element. The right action makes
/// this an anti-homomorphism on matrix products: with multiply_diagrams
/// applying its first factor first, op(xy) = op(y) op(x) — i.e. a
/// homomorphism into the opposite algebra, as for the induced maps into
/// End(...)^op.
inline OperatorMatrix diagram_operator(const DiagramAlgebraElement& x,
                                       const TensorSpaceSpec& spec,
                                       const DiagramWordTable* table = nullptr) {
    if (x.r != spec.r || x.s != spec.s) throw std::invalid_argument("diagram shape mismatch");
    if (!(x.field == spec.field)) throw std::invalid_argument("field mismatch");
    const std::int64_t N = spec.dim();
    std::optional<DiagramWordTable> local;
    if (!table) {
        local.emplace(spec.r, spec.s);
        table = &*local;
    }
    const DiagramWordTable& tab = *table;

    OperatorMatrix out(N, spec.field);
    for (const auto& [d, c] : x.terms) {
        OperatorMatrix M = OperatorMatrix::identity(N, spec.field);
        // word g1..gk applied in order; column convention composes right-to-left
        for (int g : tab.word(d)) M = right_tau(g, spec) * M;
        out = out + M.scaled(c);
    }
    return out;
}

/// Checks the polarization identity
///   sum_{sigma} f_{sigma(1)} (x) ... (x) f_{sigma(r)}
///     = sum_{I subset {1..r}} (-1)^{r-|I|} (sum_{i in I} f_i)^{(x)r}
/// on a deterministic generic tuple in a dimU-dimensional space.
inline bool polarization_check(int r, int dimU, FieldSpec field) {
    const auto ch = field.characteristic();
    if (ch != 0 && ch <= static_cast<std::uint64_t>(r))
        throw std::invalid_argument("polarization requires char 0 or char > r");
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long long>((state >> 33) % 7) + 1;
    };
    std::vector<std::vector<Scalar>> f(r, std::vector<Scalar>(dimU, Scalar::zero(field)));
    for (int i = 0; i < r; ++i) {
        f[i][i % dimU] = Scalar::one(field);
        for (int t = 0; t < dimU; ++t) f[i][t] += Scalar::of(next(), field);
    }
    std::int64_t N = 1;
    for (int t = 0; t < r; ++t) N *= dimU;
    auto tensor_power_add = [&](std::vector<Scalar>& acc, const std::vector<Scalar>& g,
                                const Scalar& coef) {
        for (std::int64_t pos = 0; pos < N; ++pos) {
            Scalar prod = coef;
            std::int64_t q = pos;
            for (int t = r - 1; t >= 0; --t) {
                prod *= g[q % dimU];
                q /= dimU;
            }
            acc[pos] += prod;
        }
    };

    std::vector<Scalar> lhs(N, Scalar::zero(field));
    std::vector<int> perm(r);
    for (int t = 0; t < r; ++t) perm[t] = t;
    do {
        for (std::int64_t pos = 0; pos < N; ++pos) {
            Scalar prod = Scalar::one(field);
            std::int64_t q = pos;
            for (int t = r - 1; t >= 0; --t) {
                prod *= f[perm[t]][q % dimU];
                q /= dimU;
            }
            lhs[pos] += prod;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Scalar> rhs(N, Scalar::zero(field));
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<Scalar> g(dimU, Scalar::zero(field));
        int sz = 0;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) {
                ++sz;
                for (int t = 0; t < dimU; ++t) g[t] += f[i][t];
            }
        tensor_power_add(rhs, g, Scalar::of((r - sz) & 1 ? -1 : 1, field));
    }
    return lhs == rhs;
}

} // namespace swdual

#endif
