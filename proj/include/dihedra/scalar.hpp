#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace dihedra {

// Coefficient field: the rationals, or a prime field F_p (p odd) used for
// exhaustive-enumeration tests.
struct FieldSpec {
    std::uint64_t prime = 0;  // 0 = Q

    bool is_rational() const { return prime == 0; }
    bool operator==(const FieldSpec&) const = default;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime_field(std::uint64_t p);

    // "Q" or "F_p".
    static FieldSpec parse(const std::string& s);
    std::string str() const;
};

// Exact scalar: an arbitrary-precision rational, or a residue in F_p.
// Integer-constructed scalars are rational and coerce into F_p when they
// meet an F_p operand; a genuine F_p value never coerces back to Q.
class Scalar {
  public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(int n) : v_(mpq_class(n)) {}
    Scalar(long n) : v_(mpq_class(static_cast<signed long>(n))) {}
    explicit Scalar(const mpq_class& q) : v_(q) {}

    // num/den over Q; canonicalizes.
    Scalar(long num, long den);

    struct FpValue {
        std::uint64_t v;
        std::uint64_t p;
        bool operator==(const FpValue&) const = default;
    };

    static Scalar fp(std::uint64_t v, std::uint64_t p);
    static Scalar zero(const FieldSpec& f) { return in_field(0, f); }
    static Scalar one(const FieldSpec& f) { return in_field(1, f); }
    static Scalar in_field(long n, const FieldSpec& f);

    // Parses "p/q" or an integer literal, into the given field.
    static Scalar parse(const std::string& s, const FieldSpec& f = FieldSpec::rationals());

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    FieldSpec field() const;

    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rat() const;
    FpValue fp_value() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;

    // Canonical text form: "3", "-1/2", ... (F_p residues print as integers).
    std::string str() const;

  private:
    std::variant<mpq_class, FpValue> v_;

    static FpValue reduce(const mpq_class& q, std::uint64_t p);
};

}  // namespace dihedra
