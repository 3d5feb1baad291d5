#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace quotforge {

/// Thrown when values from different coefficient fields are combined.
struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown on dimension / shape violations.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class FieldKind : std::uint8_t { rational, prime };

/// Deterministic primality test (trial division; moduli are < 2^31).
bool is_prime(std::uint64_t n);

/// Coefficient domain: the rationals, or GF(p) for a prime 2 <= p < 2^31.
class FieldSpec {
  public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::rational, 0); }
    static FieldSpec prime_field(std::uint32_t p);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::rational; }
    std::uint32_t modulus() const;

    bool operator==(const FieldSpec&) const = default;

    std::string describe() const;

  private:
    FieldSpec(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); prime-field values are residues in
/// [0, p). Arithmetic across different FieldSpecs throws FieldMismatchError;
/// equality across different FieldSpecs is simply false.
class Scalar {
  public:
    static Scalar zero(const FieldSpec& f) { return of_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return of_int(f, 1); }
    static Scalar of_int(const FieldSpec& f, long n);
    static Scalar of_fraction(long num, long den);
    static Scalar of_mpq(mpq_class v);
    static Scalar residue(const FieldSpec& f, std::uint64_t r);

    /// Parses the serialized form: "n" or "n/d" for rationals, a decimal
    /// integer (reduced mod p) for prime fields.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Multiplicative inverse; Fermat power x^(p-2) over GF(p).
    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    std::string str() const;

    const mpq_class& rational_value() const;
    std::uint32_t residue_value() const;

  private:
    explicit Scalar(const FieldSpec& f) : field_(f) {}
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class rat_;
    std::uint32_t res_ = 0;
};

/// x^e mod p with 64-bit-safe intermediates (p < 2^31).
std::uint32_t pow_mod(std::uint32_t x, std::uint64_t e, std::uint32_t p);

}  // namespace quotforge
