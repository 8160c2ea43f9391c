#include "dihedra/scalar.hpp"

namespace dihedra {

namespace {

bool is_small_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("division by zero in F_p");
    return powmod(a % p, p - 2, p);
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_small_prime(p)) throw std::invalid_argument("F_p requires a prime modulus");
    if (p == 2) throw std::invalid_argument("F_2 is not supported (eigenspace projections divide by 2)");
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.size() > 2 && s.compare(0, 2, "F_") == 0) {
        std::uint64_t p = std::stoull(s.substr(2));
        return prime_field(p);
    }
    throw std::invalid_argument("unknown field: \"" + s + "\" (expected \"Q\" or \"F_p\")");
}

std::string FieldSpec::str() const {
    return is_rational() ? "Q" : "F_" + std::to_string(prime);
}

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    v_ = q;
}

Scalar Scalar::fp(std::uint64_t v, std::uint64_t p) {
    FieldSpec f = FieldSpec::prime_field(p);
    Scalar s;
    s.v_ = FpValue{v % f.prime, f.prime};
    return s;
}

Scalar Scalar::in_field(long n, const FieldSpec& f) {
    if (f.is_rational()) return Scalar(n);
    long r = n % static_cast<long>(f.prime);
    if (r < 0) r += static_cast<long>(f.prime);
    return fp(static_cast<std::uint64_t>(r), f.prime);
}

Scalar Scalar::parse(const std::string& s, const FieldSpec& f) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: \"" + s + "\"");
    if (q.get_den() == 0) throw std::domain_error("zero denominator in \"" + s + "\"");
    q.canonicalize();
    Scalar r(q);
    if (!f.is_rational()) {
        Scalar t;
        t.v_ = reduce(q, f.prime);
        return t;
    }
    return r;
}

FieldSpec Scalar::field() const {
    if (is_rational()) return FieldSpec::rationals();
    return FieldSpec{std::get<FpValue>(v_).p};
}

bool Scalar::is_zero() const {
    if (is_rational()) return sgn(std::get<mpq_class>(v_)) == 0;
    return std::get<FpValue>(v_).v == 0;
}

bool Scalar::is_one() const {
    if (is_rational()) return std::get<mpq_class>(v_) == 1;
    return std::get<FpValue>(v_).v == 1;
}

const mpq_class& Scalar::rat() const {
    if (!is_rational()) throw std::logic_error("F_p scalar used where a rational is required");
    return std::get<mpq_class>(v_);
}

Scalar::FpValue Scalar::fp_value() const {
    if (is_rational()) throw std::logic_error("rational scalar has no F_p value");
    return std::get<FpValue>(v_);
}

Scalar::FpValue Scalar::reduce(const mpq_class& q, std::uint64_t p) {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nr = q.get_num() % pz, dr = q.get_den() % pz;
    if (nr < 0) nr += pz;
    if (dr < 0) dr += pz;
    return {mulmod(nr.get_ui(), invmod(dr.get_ui(), p), p), p};
}

namespace {

// Common-field alignment: a promoted rational reduces mod p; two genuine
// F_p values must share the modulus.
std::pair<Scalar::FpValue, Scalar::FpValue> align_fp(const Scalar& a, const Scalar& b) {
    if (a.is_rational()) {
        auto fb = b.fp_value();
        Scalar ra = Scalar::parse(a.str(), FieldSpec::prime_field(fb.p));
        return {ra.fp_value(), fb};
    }
    if (b.is_rational()) {
        auto fa = a.fp_value();
        Scalar rb = Scalar::parse(b.str(), FieldSpec::prime_field(fa.p));
        return {fa, rb.fp_value()};
    }
    auto fa = a.fp_value(), fb = b.fp_value();
    if (fa.p != fb.p)
        throw std::logic_error("mixed prime fields F_" + std::to_string(fa.p) + " and F_" +
                               std::to_string(fb.p));
    return {fa, fb};
}

}  // namespace

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
    auto f = std::get<FpValue>(v_);
    return fp(f.v == 0 ? 0 : f.p - f.v, f.p);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    } else {
        auto [a, b] = align_fp(*this, o);
        v_ = FpValue{(a.v + b.v) % a.p, a.p};
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    } else {
        auto [a, b] = align_fp(*this, o);
        v_ = FpValue{(a.v + a.p - b.v) % a.p, a.p};
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    } else {
        auto [a, b] = align_fp(*this, o);
        v_ = FpValue{mulmod(a.v, b.v, a.p), a.p};
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        std::get<mpq_class>(v_) /= std::get<mpq_class>(o.v_);
    } else {
        auto [a, b] = align_fp(*this, o);
        v_ = FpValue{mulmod(a.v, invmod(b.v, a.p), a.p), a.p};
    }
    return *this;
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() && o.is_rational())
        return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    Scalar d = *this;
    d -= o;
    return d.is_zero();
}

Scalar Scalar::inverse() const {
    return one(field()) / *this;
}

std::string Scalar::str() const {
    if (is_rational()) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<FpValue>(v_).v);
}

}  // namespace dihedra
