#ifndef SWDUAL_ALGEBRA_HPP
#define SWDUAL_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "swdual/diagram.hpp"
#include "swdual/field.hpp"

namespace swdual {

/// A finite linear combination of walled diagrams of a common shape (r,s).
/// Powers of delta arising in products are folded into the coefficients.
struct DiagramAlgebraElement {
    int r = 0, s = 0;
    FieldSpec field;
    std::map<WalledDiagram, Scalar> terms; // no zero coefficients stored

    static DiagramAlgebraElement zero(int r, int s, FieldSpec f) {
        return DiagramAlgebraElement{r, s, f, {}};
    }
    static DiagramAlgebraElement unit(int r, int s, FieldSpec f) {
        DiagramAlgebraElement x{r, s, f, {}};
        x.terms.emplace(WalledDiagram::identity(r, s), Scalar::one(f));
        return x;
    }
    static DiagramAlgebraElement of(const WalledDiagram& d, FieldSpec f) {
        DiagramAlgebraElement x{d.r, d.s, f, {}};
        x.terms.emplace(d, Scalar::one(f));
        return x;
    }

    void add_term(const WalledDiagram& d, const Scalar& c) {
        auto it = terms.find(d);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    DiagramAlgebraElement operator+(const DiagramAlgebraElement& o) const {
        check_shape(o);
        DiagramAlgebraElement x = *this;
        for (const auto& [d, c] : o.terms) x.add_term(d, c);
        return x;
    }
    DiagramAlgebraElement operator-(const DiagramAlgebraElement& o) const {
        check_shape(o);
        DiagramAlgebraElement x = *this;
        for (const auto& [d, c] : o.terms) x.add_term(d, -c);
        return x;
    }
    DiagramAlgebraElement scaled(const Scalar& c) const {
        DiagramAlgebraElement x{r, s, field, {}};
        for (const auto& [d, cd] : terms) x.add_term(d, cd * c);
        return x;
    }

    bool operator==(const DiagramAlgebraElement& o) const {
        return r == o.r && s == o.s && field == o.field && terms == o.terms;
    }

    void check_shape(const DiagramAlgebraElement& o) const {
        if (r != o.r || s != o.s) throw std::invalid_argument("shape mismatch");
        if (!(field == o.field)) throw std::invalid_argument("field mismatch");
    }
};

/// Bilinear extension of diagram concatenation; each internal cycle
/// contributes a factor delta. multiply_diagrams(a, b) places a under b and
/// the product x*y applies x first under the right action.
inline DiagramAlgebraElement algebra_multiply(const DiagramAlgebraElement& x,
                                              const DiagramAlgebraElement& y,
                                              const Scalar& delta) {
    x.check_shape(y);
    if (!(delta.field() == x.field)) throw std::invalid_argument("field mismatch for delta");
    DiagramAlgebraElement out = DiagramAlgebraElement::zero(x.r, x.s, x.field);
    for (const auto& [dx, cx] : x.terms)
        for (const auto& [dy, cy] : y.terms) {
            auto [d, t] = multiply_diagrams(dx, dy);
            out.add_term(d, cx * cy * delta.pow(static_cast<unsigned>(t)));
        }
    return out;
}

struct RelationCheck {
    std::string name;
    bool pass = false;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// The standard walled-Brauer presentation relations among tau_1..tau_{r+s-1},
/// checked in the diagram algebra at a given delta.
inline RelationReport verify_generator_relations(int r, int s, const Scalar& delta) {
    const int k = r + s;
    if (k < 2) throw std::invalid_argument("need r+s >= 2");
    const FieldSpec f = delta.field();
    const auto one = DiagramAlgebraElement::unit(r, s, f);
    std::vector<DiagramAlgebraElement> tau(k); // 1-based
    for (int i = 1; i <= k - 1; ++i)
        tau[i] = DiagramAlgebraElement::of(tau_generator(i, r, s), f);
    auto mul = [&](const DiagramAlgebraElement& a, const DiagramAlgebraElement& b) {
        return algebra_multiply(a, b, delta);
    };

    RelationReport rep;
    auto record = [&](std::string name, const DiagramAlgebraElement& lhs,
                      const DiagramAlgebraElement& rhs) {
        rep.checks.push_back({std::move(name), lhs == rhs});
    };

    for (int i = 1; i <= k - 1; ++i) {
        if (i != r)
            record("tau_" + std::to_string(i) + "^2 = 1", mul(tau[i], tau[i]), one);
        else
            record("tau_r^2 = delta*tau_r", mul(tau[r], tau[r]), tau[r].scaled(delta));
    }
    for (int i = 1; i + 1 <= k - 1; ++i) {
        if (i == r || i + 1 == r) continue;
        record("braid(" + std::to_string(i) + "," + std::to_string(i + 1) + ")",
               mul(mul(tau[i], tau[i + 1]), tau[i]), mul(mul(tau[i + 1], tau[i]), tau[i + 1]));
    }
    for (int i = 1; i <= k - 1; ++i)
        for (int j = i + 2; j <= k - 1; ++j)
            record("commute(" + std::to_string(i) + "," + std::to_string(j) + ")",
                   mul(tau[i], tau[j]), mul(tau[j], tau[i]));
    if (r >= 1 && s >= 1) {
        if (r >= 2)
            record("tau_r tau_{r-1} tau_r = tau_r", mul(mul(tau[r], tau[r - 1]), tau[r]), tau[r]);
        if (s >= 2)
            record("tau_r tau_{r+1} tau_r = tau_r", mul(mul(tau[r], tau[r + 1]), tau[r]), tau[r]);
        if (r >= 2 && s >= 2)
            record("tau_r tau_{r+1} tau_{r-1} tau_r = tau_r tau_{r-1} tau_{r+1} tau_r",
                   mul(mul(mul(tau[r], tau[r + 1]), tau[r - 1]), tau[r]),
                   mul(mul(mul(tau[r], tau[r - 1]), tau[r + 1]), tau[r]));
    }
    return rep;
}

} // namespace swdual

#endif
