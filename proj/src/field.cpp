#include "gerst/field.hpp"

#include <cctype>

namespace gerst {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw InvalidInputError("field modulus " + std::to_string(p) +
                                " is not a prime below 2^31");
    FieldSpec f;
    f.p_ = p;
    return f;
}

FieldSpec FieldSpec::rational() { return FieldSpec(); }

std::uint32_t FieldSpec::p() const {
    if (!is_prime()) throw InvalidInputError("rational field has no modulus");
    return p_;
}

std::string FieldSpec::to_string() const {
    return is_prime() ? "F_" + std::to_string(p_) : "Q";
}

Scalar::Scalar(const FieldSpec& f, long long n) : field_(f) {
    if (f.is_prime()) {
        long long m = n % static_cast<long long>(f.p());
        if (m < 0) m += f.p();
        v_ = static_cast<std::uint64_t>(m);
    } else {
        v_ = mpq_class(static_cast<long>(n));
    }
}

Scalar::Scalar(const FieldSpec& f, long long num, long long den) : field_(f) {
    if (den == 0) throw InvalidInputError("zero denominator");
    if (f.is_prime()) {
        Scalar d(f, den);
        *this = Scalar(f, num) * d.inverse();
    } else {
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        v_ = q;
    }
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    if (f.is_prime()) {
        if (!all_digits(text) || text.size() > 10)
            throw ParseError("bad residue '" + text + "' for " + f.to_string());
        unsigned long long v = std::stoull(text);
        if (v >= f.p())
            throw ParseError("residue '" + text + "' not canonical in " + f.to_string());
        Scalar s(f, 0);
        s.v_ = static_cast<std::uint64_t>(v);
        return s;
    }
    std::string num = text, den;
    if (auto pos = text.find('/'); pos != std::string::npos) {
        num = text.substr(0, pos);
        den = text.substr(pos + 1);
    }
    std::string digits = num;
    if (!digits.empty() && digits[0] == '-') digits = digits.substr(1);
    if (!all_digits(digits) || (!den.empty() && !all_digits(den)))
        throw ParseError("bad rational literal '" + text + "'");
    if (!digits.empty() && digits.size() > 1 && digits[0] == '0')
        throw ParseError("rational literal '" + text + "' has a leading zero");
    mpq_class q;
    if (den.empty()) {
        q = mpq_class(num);
    } else {
        if (den == "0") throw ParseError("zero denominator in '" + text + "'");
        if (den == "1" || den[0] == '0')
            throw ParseError("rational literal '" + text + "' not canonical");
        q = mpq_class(num + "/" + den);
        mpq_class canon = q;
        canon.canonicalize();
        if (cmp(canon.get_num(), q.get_num()) != 0 || cmp(canon.get_den(), q.get_den()) != 0)
            throw ParseError("rational literal '" + text + "' not reduced");
    }
    Scalar s(f, 0);
    s.v_ = q;
    return s;
}

bool Scalar::is_zero() const {
    if (field_.is_prime()) return std::get<std::uint64_t>(v_) == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_prime()) return std::get<std::uint64_t>(v_) == 1 % field_.p();
    return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("scalar field mismatch: " + field_.to_string() + " vs " +
                                 o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_, 0);
    if (field_.is_prime()) {
        std::uint64_t s = std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_);
        if (s >= field_.p()) s -= field_.p();
        r.v_ = s;
    } else {
        r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r(field_, 0);
    if (field_.is_prime()) {
        std::uint64_t a = std::get<std::uint64_t>(v_);
        r.v_ = a == 0 ? 0 : field_.p() - a;
    } else {
        r.v_ = mpq_class(-std::get<mpq_class>(v_));
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_, 0);
    if (field_.is_prime()) {
        r.v_ = std::get<std::uint64_t>(v_) * std::get<std::uint64_t>(o.v_) % field_.p();
    } else {
        r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InvalidInputError("inverse of zero");
    Scalar r(field_, 0);
    if (field_.is_prime()) {
        r.v_ = pow_mod(std::get<std::uint64_t>(v_), field_.p() - 2, field_.p());
    } else {
        r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime()) return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
    return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

std::string Scalar::to_string() const {
    if (field_.is_prime()) return std::to_string(std::get<std::uint64_t>(v_));
    return std::get<mpq_class>(v_).get_str();
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime()) throw InvalidInputError("residue() on a rational scalar");
    return std::get<std::uint64_t>(v_);
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw InvalidInputError("rational() on a prime-field scalar");
    return std::get<mpq_class>(v_);
}

std::uint64_t SeededRng::below(std::uint64_t n) {
    if (n == 0) throw InvalidInputError("empty sampling range");
    return eng_() % n;
}

Scalar SeededRng::scalar(const FieldSpec& f) {
    if (f.is_prime()) {
        Scalar s(f, 0);
        return Scalar(f, static_cast<long long>(below(f.p())));
    }
    // Small plain fractions keep rational tensors readable and fast.
    long long num = static_cast<long long>(below(9)) - 4;
    long long den = static_cast<long long>(below(3)) + 1;
    return Scalar(f, num, den);
}

Scalar SeededRng::nonzero_scalar(const FieldSpec& f) {
    for (;;) {
        Scalar s = scalar(f);
        if (!s.is_zero()) return s;
    }
}

}  // namespace gerst
