#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellplus/error.hpp"

namespace cellplus {

enum class RingKind {
    Integers,          // Z
    Rationals,         // Q
    ModP,              // Z/p, p prime
    LocalizedIntegers, // Z[1/S], S a finite set of primes
    GaussianIntegers,  // Z[i]
};

// Descriptor of one of the supported exact coefficient rings. Cheap to copy
// (shared immutable payload). Equality is structural.
class RingSpec {
public:
    RingSpec() : RingSpec(integers()) {}

    static RingSpec integers();
    static RingSpec rationals();
    static RingSpec mod_p(const mpz_class& p);
    static RingSpec localized_integers(std::vector<mpz_class> primes);
    static RingSpec gaussian_integers();

    // Ring tokens: Z, Q, Z/5, Z[1/2,1/3], Z[i].
    static RingSpec parse(const std::string& token);
    std::string token() const;

    RingKind kind() const { return data_->kind; }
    const mpz_class& modulus() const;
    const std::vector<mpz_class>& inverted_primes() const;

    bool is_field() const;
    // Every supported ring is a Euclidean domain (fields trivially so).
    bool is_euclidean() const { return true; }

    bool operator==(const RingSpec& other) const;
    bool operator!=(const RingSpec& other) const { return !(*this == other); }

private:
    struct Data {
        RingKind kind;
        mpz_class p;                    // ModP
        std::vector<mpz_class> primes;  // LocalizedIntegers, sorted ascending
    };
    explicit RingSpec(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

// Exact element of a RingSpec. Payload layout:
//   Integers / Rationals / LocalizedIntegers: re = canonical mpq (den 1 for Z)
//   ModP: re = residue in [0, p), den 1
//   GaussianIntegers: re + im*i, both integers
class Scalar {
public:
    Scalar() : ring_(RingSpec::integers()), re_(0), im_(0) {}

    static Scalar zero(const RingSpec& ring);
    static Scalar one(const RingSpec& ring);
    static Scalar from_int(const RingSpec& ring, long v);
    static Scalar from_mpz(const RingSpec& ring, const mpz_class& v);
    static Scalar from_mpq(const RingSpec& ring, const mpq_class& v);
    static Scalar gaussian(const mpz_class& re, const mpz_class& im);
    static Scalar parse(const RingSpec& ring, const std::string& text);

    const RingSpec& ring() const { return ring_; }
    const mpq_class& rat() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Euclidean norm as a non-negative integer; 0 iff the element is 0.
    mpz_class norm() const;
    // q, r with *this = q*y + r and norm(r) < norm(y). Error on y = 0.
    std::pair<Scalar, Scalar> divmod(const Scalar& y) const;
    // Exact quotient if y divides *this.
    std::optional<Scalar> exact_div(const Scalar& y) const;
    bool divides(const Scalar& dividend) const;

    bool is_unit() const;
    Scalar inverse() const;
    // The canonical associate: positive generator over Z and Z[1/S], 1 in
    // fields, first-quadrant representative over Z[i]; 0 maps to 0.
    Scalar canonical_associate() const;

    std::string str() const;

private:
    Scalar(RingSpec ring, mpq_class re, mpq_class im)
        : ring_(std::move(ring)), re_(std::move(re)), im_(std::move(im)) {}
    void normalize();
    void check_same_ring(const Scalar& o) const;

    RingSpec ring_;
    mpq_class re_;
    mpq_class im_;
};

Scalar gcd(const Scalar& a, const Scalar& b);

// g = gcd(x, y) as a canonical associate, with a*x + b*y = g.
struct ExtGcd {
    Scalar g, a, b;
};
ExtGcd ext_gcd(const Scalar& x, const Scalar& y);

// S-free positive core of n: |n| with every prime of S divided out.
mpz_class s_free_core(const mpz_class& n, const std::vector<mpz_class>& primes);

} // namespace cellplus
