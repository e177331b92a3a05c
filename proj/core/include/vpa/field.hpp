#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "vpa/errors.hpp"

namespace vpa {

/// Ground field: the rationals, or a prime field F_p with p an odd prime.
/// Characteristic 2 is rejected at construction.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
    static FieldSpec prime(std::uint64_t p); // validates p odd prime (trial division)

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    bool is_prime_field() const { return kind_ == Kind::PrimeField; }
    std::uint64_t p() const { return p_; }

    std::string name() const; // "Q" or "F_p"

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint64_t p_; // 0 when rationals
};

/// An exact field element. Carries its FieldSpec; mixing fields in
/// arithmetic throws rather than coercing. Canonical form is unique:
/// lowest terms with positive denominator over Q, least non-negative
/// residue over F_p. Equality is structural (field included).
class Scalar {
public:
    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long v);

    /// Parses the canonical text encoding: "a" or "a/b" over Q (fraction is
    /// canonicalized on read), a decimal residue in [0, p) over F_p.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Sign of the value under the real embedding (-1, 0, +1); Q only.
    int sign() const;

    Scalar operator-() const;
    Scalar inverse() const; // throws division_by_zero on 0

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    std::string str() const;

    const mpq_class& rat() const { return rat_; }      // Q only
    std::uint64_t residue() const { return res_; }     // F_p only

private:
    Scalar(FieldSpec f, mpq_class q, std::uint64_t r)
        : field_(f), rat_(std::move(q)), res_(r) {}

    FieldSpec field_;
    mpq_class rat_;      // used when rationals
    std::uint64_t res_;  // used when prime field
};

/// A square root of `a` in its field if one exists. Exact in both fields:
/// Euler criterion plus root extraction over F_p, integer square roots of
/// numerator and denominator over Q. The returned root is canonical
/// (non-negative over Q, the smaller of the two residues over F_p).
std::optional<Scalar> is_square(const Scalar& a);

/// The constant 1/2, which exists since char != 2 ((p+1)/2 over F_p).
Scalar one_half(const FieldSpec& f);

} // namespace vpa
