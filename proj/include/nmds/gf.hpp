#pragma once

// Arithmetic in GF(p^r) built from an explicit irreducible polynomial.
//
// Elements are stored as packed integers: the coefficient of x^i of the
// polynomial-basis representative is the i-th base-p digit. For p = 2 this is
// the usual bit packing (bit i = coefficient of x^i).
//
// Fields with q <= 2^16 get exp/log tables for multiplication and discrete
// logarithms; larger fields fall back to schoolbook multiplication and a
// baby-step/giant-step logarithm.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmds/error.hpp"

namespace nmds {

/// Packed representative of a field element, always in [0, q).
using Rep = std::uint32_t;

class FieldElement;

enum class Notation { Power, Hex };

class Field {
public:
    /// `poly` lists the coefficients of the defining polynomial from the
    /// constant term up to the (monic) leading term, so it has r + 1 entries.
    static Field create(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> poly);

    /// Parses `GF(<p>^<r>;<poly>)`, where <poly> is either a hex packing of
    /// the defining polynomial (p = 2 only, e.g. 0x13 for x^4+x+1) or a comma
    /// list of coefficients from the constant term upward.
    static Field parse(std::string_view text);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint64_t order() const noexcept;
    const std::vector<std::uint32_t>& defining_poly() const noexcept;

    /// Canonical text form accepted by `parse`.
    std::string to_string() const;

    Rep zero() const noexcept { return 0; }
    Rep one() const noexcept { return 1; }

    Rep add(Rep a, Rep b) const;
    Rep sub(Rep a, Rep b) const;
    Rep neg(Rep a) const;
    Rep mul(Rep a, Rep b) const;
    /// Throws DivisionByZero for a == 0.
    Rep inv(Rep a) const;
    Rep div(Rep a, Rep b) const;
    /// Negative exponents invert first; 0^0 = 1.
    Rep pow(Rep a, std::int64_t e) const;
    /// The integer n reduced into the prime subfield.
    Rep from_integer(std::int64_t n) const;

    /// Smallest packed value whose multiplicative order is q - 1. All
    /// `a^k` notation in this library is relative to this element.
    Rep primitive() const noexcept;
    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(Rep a) const;
    /// k with primitive()^k = a, 0 <= k <= q - 2. Throws DivisionByZero for 0.
    std::uint64_t log(Rep a) const;
    Rep exp(std::int64_t k) const;

    bool contains(Rep a) const noexcept { return a < order(); }

    FieldElement element(Rep a) const;
    FieldElement alpha_power(std::int64_t k) const;

    /// Element grammar: `0` | `1` | `a^<k>` (0 <= k <= q-2) | `0x<hex>` (p = 2).
    Rep parse_rep(std::string_view text) const;
    std::string format_rep(Rep a, Notation notation = Notation::Power) const;

    bool operator==(const Field& other) const noexcept;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// One element bound to its field. Mixed-field arithmetic throws FieldMismatch.
class FieldElement {
public:
    FieldElement(Field field, Rep value);

    const Field& field() const noexcept { return field_; }
    Rep value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;
    std::string format(Notation notation = Notation::Power) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    Field field_;
    Rep value_;
};

FieldElement parse_element(const Field& field, std::string_view text);
std::string format_element(const FieldElement& a, Notation notation = Notation::Power);

/// Parses a comma-separated element list, e.g. `1,a^1,a^2`.
std::vector<Rep> parse_rep_list(const Field& field, std::string_view text);

bool is_prime(std::uint64_t n) noexcept;

namespace gfpoly {

// Dense polynomials over GF(p), coefficients from the constant term upward,
// trimmed so the last entry is nonzero (the zero polynomial is empty).

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
Poly mod(Poly a, const Poly& m, std::uint32_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
/// Irreducibility over GF(p) for a monic polynomial of degree >= 1.
bool is_irreducible(const Poly& f, std::uint32_t p);

}  // namespace gfpoly

}  // namespace nmds
