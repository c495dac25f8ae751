#pragma once

// Exact arithmetic in K = Q(zeta)(a), zeta a primitive cube root of unity and
// a^3 = tau for a configurable non-cube rational tau.

#include <array>
#include <complex>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace waring {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class FieldElem;

namespace detail {
struct FieldConfig {
    Rational tau;
};
}  // namespace detail

/// Handle to one tau-configuration of K. Handles are interned: two fields
/// compare equal iff their tau values are equal.
class Field {
public:
    static Field with_tau(const Rational& tau);

    const Rational& tau() const { return cfg_->tau; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem zeta() const;
    /// The real cube root a of tau.
    FieldElem cube_root() const;
    FieldElem from_rational(const Rational& q) const;
    FieldElem from_int(long v) const;
    /// Builds c0 + c1 a + c2 a^2 + zeta (c3 + c4 a + c5 a^2).
    FieldElem from_coeffs(const std::array<Rational, 6>& coeffs) const;

    friend bool operator==(const Field& x, const Field& y) { return x.cfg_ == y.cfg_; }

private:
    explicit Field(const detail::FieldConfig* cfg) : cfg_(cfg) {}
    const detail::FieldConfig* cfg_;

    friend class FieldElem;
};

/// Element of K, stored as six rationals over the basis
/// (1, a, a^2, zeta, zeta a, zeta a^2).
class FieldElem {
public:
    static constexpr int kDegree = 6;

    const Rational& coeff(int i) const { return c_[i]; }
    const std::array<Rational, 6>& coeffs() const { return c_; }
    Field field() const { return Field(cfg_); }

    bool is_zero() const;
    bool is_one() const;
    /// True when every a-component vanishes, i.e. the element lies in Q(zeta).
    bool in_cyclotomic() const;

    FieldElem& operator+=(const FieldElem& y);
    FieldElem& operator-=(const FieldElem& y);
    FieldElem& operator*=(const FieldElem& y);
    FieldElem& operator/=(const FieldElem& y) { return *this *= y.inv(); }

    friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
    friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
    friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }
    FieldElem operator-() const;

    /// Throws std::domain_error on zero.
    FieldElem inv() const;
    /// Complex conjugation: fixes a, sends zeta to zeta^2.
    FieldElem conjugate() const;
    FieldElem pow(unsigned k) const;
    /// *this += x * y without materializing the product. x and y must not alias *this.
    void add_product(const FieldElem& x, const FieldElem& y);
    FieldElem scaled(const Rational& q) const;

    /// Numeric image under zeta -> exp(2 pi i / 3), a -> real cube root of tau.
    std::complex<double> embed_complex() const;

    /// Human-readable form such as "1 - 2*zeta*a^2".
    std::string to_string() const;

    friend bool operator==(const FieldElem& x, const FieldElem& y);

private:
    explicit FieldElem(const detail::FieldConfig* cfg) : cfg_(cfg) {}
    void check_same(const FieldElem& y) const;

    std::array<Rational, 6> c_;
    const detail::FieldConfig* cfg_;

    friend class Field;
};

/// add / mul / inv / conjugate in free-function form.
inline FieldElem add(const FieldElem& x, const FieldElem& y) { return x + y; }
inline FieldElem mul(const FieldElem& x, const FieldElem& y) { return x * y; }
inline FieldElem inv(const FieldElem& x) { return x.inv(); }
inline FieldElem conjugate(const FieldElem& x) { return x.conjugate(); }
inline std::complex<double> embed_complex(const FieldElem& x) { return x.embed_complex(); }

}  // namespace waring
