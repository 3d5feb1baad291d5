#include "quotforge/field.hpp"

namespace quotforge {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (p < 2 || !is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
    if (p > (1u << 31)) {
        throw std::invalid_argument("modulus exceeds 2^31");
    }
    return FieldSpec(FieldKind::prime, p);
}

std::uint32_t FieldSpec::modulus() const {
    if (kind_ != FieldKind::prime) {
        throw std::logic_error("modulus() on the rational field");
    }
    return p_;
}

std::string FieldSpec::describe() const {
    return kind_ == FieldKind::rational ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

std::uint32_t pow_mod(std::uint32_t x, std::uint64_t e, std::uint32_t p) {
    std::uint64_t base = x % p;
    std::uint64_t acc = 1 % p;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

Scalar Scalar::of_int(const FieldSpec& f, long n) {
    Scalar s(f);
    if (f.is_rational()) {
        s.rat_ = mpq_class(n);
    } else {
        const std::uint32_t p = f.modulus();
        long m = n % static_cast<long>(p);
        if (m < 0) m += p;
        s.res_ = static_cast<std::uint32_t>(m);
    }
    return s;
}

Scalar Scalar::of_fraction(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Scalar s(FieldSpec::rationals());
    s.rat_ = mpq_class(num, den);
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::of_mpq(mpq_class v) {
    Scalar s(FieldSpec::rationals());
    v.canonicalize();
    s.rat_ = std::move(v);
    return s;
}

Scalar Scalar::residue(const FieldSpec& f, std::uint64_t r) {
    if (f.is_rational()) throw FieldMismatchError("residue() on the rational field");
    Scalar s(f);
    s.res_ = static_cast<std::uint32_t>(r % f.modulus());
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    if (f.is_rational()) {
        mpq_class v;
        if (v.set_str(text, 10) != 0) {
            throw std::invalid_argument("bad rational literal: " + text);
        }
        if (v.get_den() == 0) {
            throw std::invalid_argument("zero denominator: " + text);
        }
        v.canonicalize();
        Scalar s(f);
        s.rat_ = std::move(v);
        return s;
    }
    mpz_class v;
    if (v.set_str(text, 10) != 0) {
        throw std::invalid_argument("bad integer literal: " + text);
    }
    mpz_class m = v % f.modulus();
    if (m < 0) m += f.modulus();
    return residue(f, m.get_ui());
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1 % field_.modulus();
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) {
        throw FieldMismatchError("mixed scalars: " + field_.describe() + " vs " + o.field_.describe());
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ + o.rat_;
    } else {
        const std::uint64_t p = field_.modulus();
        s.res_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(res_) + o.res_) % p);
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ - o.rat_;
    } else {
        const std::uint64_t p = field_.modulus();
        s.res_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(res_) + p - o.res_) % p);
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ * o.rat_;
    } else {
        const std::uint64_t p = field_.modulus();
        s.res_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(res_) * o.res_ % p);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = -rat_;
    } else {
        s.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = 1 / rat_;
    } else {
        const std::uint32_t p = field_.modulus();
        s.res_ = pow_mod(res_, p - 2, p);
    }
    return s;
}

std::string Scalar::str() const {
    if (!field_.is_rational()) return std::to_string(res_);
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

const mpq_class& Scalar::rational_value() const {
    if (!field_.is_rational()) throw FieldMismatchError("rational_value() on a prime-field scalar");
    return rat_;
}

std::uint32_t Scalar::residue_value() const {
    if (field_.is_rational()) throw FieldMismatchError("residue_value() on a rational scalar");
    return res_;
}

}  // namespace quotforge
