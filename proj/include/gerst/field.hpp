#ifndef GERST_FIELD_HPP
#define GERST_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "gerst/common.hpp"

namespace gerst {

/// The base field: a prime field F_p (p < 2^31, checked prime by trial
/// division) or the rationals.
class FieldSpec {
  public:
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec rational();

    bool is_prime() const { return p_ != 0; }
    bool is_rational() const { return p_ == 0; }
    std::uint32_t p() const;

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

    std::string to_string() const;  // "F_7" or "Q"

  private:
    FieldSpec() = default;
    std::uint32_t p_ = 0;  // 0 means rational
};

/// An exact field element in canonical form: residue in [0,p) for prime
/// fields, reduced fraction with positive denominator for Q.
class Scalar {
  public:
    Scalar() : field_(FieldSpec::rational()), v_(mpq_class(0)) {}
    Scalar(const FieldSpec& f, long long n);
    Scalar(const FieldSpec& f, long long num, long long den);

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

    // Strict parse of the serialized form: decimal residue for F_p,
    // "num" or "num/den" (reduced, den > 1) for Q.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

    // Canonical residue; only valid for prime fields.
    std::uint64_t residue() const;
    // Only valid for rationals.
    const mpq_class& rational() const;

  private:
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    std::variant<std::uint64_t, mpq_class> v_;
};

/// Deterministic sampling helper. mt19937_64 is fully pinned by the
/// standard, and the bounded draw below uses plain modulo, so sequences
/// are reproducible across platforms.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n);  // uniform-ish in [0, n)
    Scalar scalar(const FieldSpec& f);     // residue in [0,p) or small rational
    Scalar nonzero_scalar(const FieldSpec& f);

  private:
    std::mt19937_64 eng_;
};

}  // namespace gerst

#endif
