#ifndef SWDUAL_DIAGRAM_HPP
#define SWDUAL_DIAGRAM_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swdual {

/// A permutation of {1..k}, stored 0-based.
struct Permutation {
    std::vector<int> images; // images[i] = p(i+1)-1

    static Permutation identity(int k) {
        Permutation p;
        p.images.resize(k);
        std::iota(p.images.begin(), p.images.end(), 0);
        return p;
    }

    static Permutation transposition(int k, int a, int b) { // 1-based a, b
        Permutation p = identity(k);
        std::swap(p.images[a - 1], p.images[b - 1]);
        return p;
    }

    int size() const { return static_cast<int>(images.size()); }

    bool valid() const {
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= size() || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }
};

/// A walled Brauer diagram on 2(r+s) vertices.
///
/// Vertex ids: 0..k-1 are the upper vertices 1..k, k..2k-1 the lower
/// vertices 1..k, where k = r+s. The matching is a fixed-point-free
/// involution; vertical edges stay on one side of the wall (between
/// positions r and r+1), horizontal edges cross it.
struct WalledDiagram {
    int r = 0, s = 0;
    std::vector<int> mate; // mate[v] = partner of vertex v

    int strands() const { return r + s; }

    static bool upper(int v, int k) { return v < k; }
    static int pos(int v, int k) { return (v < k ? v : v - k) + 1; } // 1-based strand position

    void validate() const {
        const int k = strands();
        if (static_cast<int>(mate.size()) != 2 * k)
            throw std::invalid_argument("matching has wrong size");
        for (int v = 0; v < 2 * k; ++v) {
            int w = mate[v];
            if (w < 0 || w >= 2 * k || w == v || mate[w] != v)
                throw std::invalid_argument("matching is not a fixed-point-free involution");
        }
        for (int v = 0; v < 2 * k; ++v) {
            int w = mate[v];
            bool left_v = pos(v, k) <= r, left_w = pos(w, k) <= r;
            if (upper(v, k) != upper(w, k)) {
                if (left_v != left_w)
                    throw std::invalid_argument("vertical edge crosses the wall");
            } else {
                if (left_v == left_w)
                    throw std::invalid_argument("horizontal edge does not cross the wall");
            }
        }
    }

    static WalledDiagram identity(int r, int s) {
        const int k = r + s;
        WalledDiagram d{r, s, std::vector<int>(2 * k)};
        for (int j = 0; j < k; ++j) {
            d.mate[j] = j + k;
            d.mate[j + k] = j;
        }
        return d;
    }

    bool operator==(const WalledDiagram& o) const {
        return r == o.r && s == o.s && mate == o.mate;
    }
    bool operator<(const WalledDiagram& o) const {
        if (r != o.r) return r < o.r;
        if (s != o.s) return s < o.s;
        return mate < o.mate;
    }

    /// Sorted edge list, e.g. "U1-L2,U2-L1".
    std::string str() const {
        const int k = strands();
        auto label = [&](int v) {
            return (upper(v, k) ? "U" : "L") + std::to_string(pos(v, k));
        };
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < 2 * k; ++v)
            if (v < mate[v]) edges.emplace_back(v, mate[v]);
        std::sort(edges.begin(), edges.end());
        std::string out;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i) out += ",";
            out += label(edges[i].first) + "-" + label(edges[i].second);
        }
        return out;
    }
};

/// Generator tau_i of B_{r,s}(delta): a place transposition for i != r,
/// the contraction diagram for i = r.
inline WalledDiagram tau_generator(int i, int r, int s) {
    const int k = r + s;
    if (i < 1 || i > k - 1)
        throw std::invalid_argument("generator index out of range: tau_" + std::to_string(i));
    WalledDiagram d = WalledDiagram::identity(r, s);
    if (i != r) {
        // upper j connected to lower sigma_i(j)
        d.mate[i - 1] = k + i;
        d.mate[k + i] = i - 1;
        d.mate[i] = k + i - 1;
        d.mate[k + i - 1] = i;
    } else {
        // upper r -- upper r+1, lower r -- lower r+1
        d.mate[r - 1] = r;
        d.mate[r] = r - 1;
        d.mate[k + r - 1] = k + r;
        d.mate[k + r] = k + r - 1;
    }
    d.validate();
    return d;
}

/// Concatenation product: a is placed under b, internal cycles removed.
/// Returns the resulting diagram and the cycle count t (so ab = delta^t * result).
inline std::pair<WalledDiagram, int> multiply_diagrams(const WalledDiagram& a,
                                                       const WalledDiagram& b) {
    if (a.r != b.r || a.s != b.s) throw std::invalid_argument("diagram shape mismatch");
    const int k = a.strands();
    // Layers: result upper = b's upper; middle = b's lower glued to a's upper;
    // result lower = a's lower.
    WalledDiagram out{a.r, a.s, std::vector<int>(2 * k, -1)};
    std::vector<char> mid_seen(k, 0); // middle strand positions 0..k-1

    // Walk from a boundary vertex to the opposite boundary.
    // State: (in_b, vertex id within that diagram).
    auto walk = [&](bool start_in_b, int v0) {
        bool in_b = start_in_b;
        int v = in_b ? v0 : v0; // vertex id in the current diagram
        while (true) {
            int w = in_b ? b.mate[v] : a.mate[v];
            if (in_b) {
                if (w < k) return std::pair<bool, int>{true, w}; // b upper: result upper
                mid_seen[w - k] = 1;                              // b lower -> a upper
                in_b = false;
                v = w - k;
            } else {
                if (w >= k) return std::pair<bool, int>{false, w - k}; // a lower: result lower
                mid_seen[w] = 1;                                        // a upper -> b lower
                in_b = true;
                v = w + k;
            }
        }
    };

    auto out_id = [&](bool up, int strand) { return up ? strand : strand + k; };

    for (int j = 0; j < k; ++j) {
        if (out.mate[j] == -1) { // result upper vertex j = b upper j
            auto [up, strand] = walk(true, j);
            int u = out_id(true, j), w = out_id(up, strand);
            out.mate[u] = w;
            out.mate[w] = u;
        }
        if (out.mate[j + k] == -1) { // result lower vertex j = a lower j
            auto [up, strand] = walk(false, j + k);
            int u = out_id(false, j), w = out_id(up, strand);
            out.mate[u] = w;
            out.mate[w] = u;
        }
    }

    // Remaining middle strands form closed cycles alternating between the
    // two diagrams; middle strand x meets b at its lower vertex x+k and a at
    // its upper vertex x.
    int cycles = 0;
    for (int j = 0; j < k; ++j) {
        if (mid_seen[j]) continue;
        ++cycles;
        int x = j;
        bool via_b = true;
        do {
            mid_seen[x] = 1;
            x = via_b ? b.mate[x + k] - k : a.mate[x];
            via_b = !via_b;
        } while (!(x == j && via_b));
    }

    out.validate();
    return {out, cycles};
}

/// Linear bijection flip_{r,s}: permutations of r+s -> walled diagram basis.
///
/// The permutation diagram of p (upper j joined to lower p(j)) is bent at the
/// wall: upper/lower are exchanged at positions > r, after precomposing with
/// the nested-arc involution pairing r+1-t with r+t, so that the identity
/// permutation maps to the full contraction diagram.
inline WalledDiagram flip(const Permutation& p, int r, int s) {
    const int k = r + s;
    if (p.size() != k || !p.valid()) throw std::invalid_argument("not a permutation of r+s");
    Permutation xi = Permutation::identity(k);
    for (int t = 1; t <= std::min(r, s); ++t)
        std::swap(xi.images[r - t], xi.images[r + t - 1]);
    // w = xi o p
    std::vector<int> w(k);
    for (int j = 0; j < k; ++j) w[j] = xi.images[p.images[j]];

    WalledDiagram d{r, s, std::vector<int>(2 * k, -1)};
    auto relabel = [&](int v) {
        int position = WalledDiagram::pos(v, k);
        if (position <= r) return v;
        return v < k ? v + k : v - k; // swap rows right of the wall
    };
    for (int j = 0; j < k; ++j) {
        int u = relabel(j), v = relabel(w[j] + k);
        d.mate[u] = v;
        d.mate[v] = u;
    }
    d.validate();
    return d;
}

/// All walled diagrams for (r,s), generated directly by matching backtracking.
inline std::vector<WalledDiagram> enumerate_walled_diagrams(int r, int s) {
    const int k = r + s;
    std::vector<WalledDiagram> out;
    WalledDiagram d{r, s, std::vector<int>(2 * k, -1)};

    auto legal = [&](int v, int w) {
        bool up_v = WalledDiagram::upper(v, k), up_w = WalledDiagram::upper(w, k);
        bool left_v = WalledDiagram::pos(v, k) <= r, left_w = WalledDiagram::pos(w, k) <= r;
        return up_v != up_w ? left_v == left_w : left_v != left_w;
    };

    std::function<void(int)> rec = [&](int v) {
        while (v < 2 * k && d.mate[v] != -1) ++v;
        if (v == 2 * k) {
            out.push_back(d);
            return;
        }
        for (int w = v + 1; w < 2 * k; ++w) {
            if (d.mate[w] != -1 || !legal(v, w)) continue;
            d.mate[v] = w;
            d.mate[w] = v;
            rec(v + 1);
            d.mate[v] = -1;
            d.mate[w] = -1;
        }
    };
    rec(0);
    return out;
}

} // namespace swdual

#endif
