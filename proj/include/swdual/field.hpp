#ifndef SWDUAL_FIELD_HPP
#define SWDUAL_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace swdual {

enum class FieldKind { Rationals, PrimeField };

namespace detail {
inline std::uint64_t smallest_factor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return d;
    return n;
}
} // namespace detail

/// Ground field: the rationals, or F_p for a prime p.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

    static FieldSpec prime(std::uint64_t p) {
        if (p < 2) throw std::invalid_argument("modulus must be at least 2");
        if (p >= (std::uint64_t{1} << 31))
            throw std::invalid_argument("modulus too large (must fit in 31 bits)");
        std::uint64_t f = detail::smallest_factor(p);
        if (f != p)
            throw std::invalid_argument("composite modulus: " + std::to_string(p) + " = " +
                                        std::to_string(f) + "*" + std::to_string(p / f));
        return FieldSpec{FieldKind::PrimeField, p};
    }

    std::uint64_t characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }

    bool operator==(const FieldSpec&) const = default;

    std::string name() const {
        return kind == FieldKind::Rationals ? std::string("q") : "p" + std::to_string(p);
    }
};

/// Exact field element in canonical form: a reduced fraction over Q,
/// or a residue in [0, p) over F_p.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(FieldSpec f) : field_(f) {}

    static Scalar of(long long v, FieldSpec f) {
        Scalar x(f);
        if (f.kind == FieldKind::Rationals) {
            x.q_ = mpq_class(static_cast<long>(v));
        } else {
            long long m = v % static_cast<long long>(f.p);
            if (m < 0) m += static_cast<long long>(f.p);
            x.r_ = static_cast<std::uint64_t>(m);
        }
        return x;
    }

    static Scalar of(const mpz_class& v, FieldSpec f) {
        Scalar x(f);
        if (f.kind == FieldKind::Rationals) {
            x.q_ = mpq_class(v);
        } else {
            mpz_class m = v % mpz_class(static_cast<unsigned long>(f.p));
            if (m < 0) m += static_cast<unsigned long>(f.p);
            x.r_ = m.get_ui();
        }
        return x;
    }

    static Scalar zero(FieldSpec f) { return of(0, f); }
    static Scalar one(FieldSpec f) { return of(1, f); }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const {
        return field_.kind == FieldKind::Rationals ? q_ == 0 : r_ == 0;
    }
    bool is_one() const {
        return field_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
    }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar x(field_);
        if (rational()) x.q_ = q_ + o.q_;
        else x.r_ = (r_ + o.r_) % field_.p;
        return x;
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        Scalar x(field_);
        if (rational()) x.q_ = q_ - o.q_;
        else x.r_ = (r_ + field_.p - o.r_) % field_.p;
        return x;
    }
    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar x(field_);
        if (rational()) x.q_ = q_ * o.q_;
        else x.r_ = (r_ * o.r_) % field_.p;
        return x;
    }
    Scalar operator-() const {
        Scalar x(field_);
        if (rational()) x.q_ = -q_;
        else x.r_ = r_ == 0 ? 0 : field_.p - r_;
        return x;
    }
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Scalar x(field_);
        if (rational()) {
            x.q_ = 1 / q_;
        } else {
            // extended Euclid
            std::int64_t a = static_cast<std::int64_t>(r_), b = static_cast<std::int64_t>(field_.p);
            std::int64_t u = 1, v = 0;
            while (b != 0) {
                std::int64_t t = a / b;
                a -= t * b; std::swap(a, b);
                u -= t * v; std::swap(u, v);
            }
            if (u < 0) u += static_cast<std::int64_t>(field_.p);
            x.r_ = static_cast<std::uint64_t>(u);
        }
        return x;
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    Scalar pow(unsigned e) const {
        Scalar acc = one(field_), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && (rational() ? q_ == o.q_ : r_ == o.r_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {
        check(o);
        return rational() ? q_ < o.q_ : r_ < o.r_;
    }

    // Canonical-form accessors for Q (tests assert gcd==1, den>0).
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    std::uint64_t residue() const { return r_; }

    std::string str() const {
        if (rational()) return q_.get_str();
        return std::to_string(r_);
    }

private:
    bool rational() const { return field_.kind == FieldKind::Rationals; }
    void check(const Scalar& o) const {
        if (field_ != o.field_) throw std::invalid_argument("field mismatch");
    }

    FieldSpec field_{};
    mpq_class q_{0};
    std::uint64_t r_ = 0;
};

inline FieldSpec make_field(FieldKind kind, std::uint64_t p = 0) {
    return kind == FieldKind::Rationals ? FieldSpec::rationals() : FieldSpec::prime(p);
}

/// delta = m - n mapped into the field.
inline Scalar delta_scalar(int m, int n, FieldSpec f) {
    if (m < 1 || n < 0) throw std::invalid_argument("require m >= 1, n >= 0");
    return Scalar::of(static_cast<long long>(m) - n, f);
}

/// binom(c, k) for integer c (possibly negative), as an exact field element.
inline Scalar binomial_scalar(long long c, int k, FieldSpec f) {
    mpz_class num = 1;
    for (int t = 0; t < k; ++t) num *= mpz_class(static_cast<long>(c - t));
    mpz_class den = 1;
    for (int t = 1; t <= k; ++t) den *= t;
    mpz_class q = num / den; // exact: product of k consecutive integers
    return Scalar::of(q, f);
}

} // namespace swdual

#endif
