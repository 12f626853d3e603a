#include "cellplus/ring.hpp"

#include <algorithm>
#include <sstream>

namespace cellplus {

namespace {

bool is_prime(const mpz_class& p) {
    return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

// Nearest integer to q with ties rounded toward zero.
mpz_class round_nearest_tie_to_zero(const mpq_class& q) {
    mpz_class fl, rem;
    mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    mpq_class frac(rem, q.get_den());
    frac.canonicalize();
    if (frac * 2 < 1) return fl;
    if (frac * 2 > 1) return fl + 1;
    // tie: fl + 1/2; pick the neighbor closer to zero
    return (fl >= 0) ? fl : fl + 1;
}

} // namespace

RingSpec RingSpec::integers() {
    static const auto data = std::make_shared<const Data>(Data{RingKind::Integers, 0, {}});
    return RingSpec(data);
}

RingSpec RingSpec::rationals() {
    static const auto data = std::make_shared<const Data>(Data{RingKind::Rationals, 0, {}});
    return RingSpec(data);
}

RingSpec RingSpec::mod_p(const mpz_class& p) {
    if (!is_prime(p)) fail(Error::Kind::Invariant, "Z/p modulus must be prime, got " + p.get_str());
    return RingSpec(std::make_shared<const Data>(Data{RingKind::ModP, p, {}}));
}

RingSpec RingSpec::localized_integers(std::vector<mpz_class> primes) {
    if (primes.empty())
        fail(Error::Kind::Invariant, "Z[1/S] needs a nonempty prime set");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const auto& p : primes)
        if (!is_prime(p))
            fail(Error::Kind::Invariant, "Z[1/S] inverts primes only, got " + p.get_str());
    return RingSpec(std::make_shared<const Data>(Data{RingKind::LocalizedIntegers, 0, std::move(primes)}));
}

RingSpec RingSpec::gaussian_integers() {
    static const auto data = std::make_shared<const Data>(Data{RingKind::GaussianIntegers, 0, {}});
    return RingSpec(data);
}

RingSpec RingSpec::parse(const std::string& token) {
    std::string t;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "Z") return integers();
    if (t == "Q") return rationals();
    if (t == "Z[i]") return gaussian_integers();
    if (t.rfind("Z/", 0) == 0) {
        std::string num = t.substr(2);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            fail(Error::Kind::Parse, "bad ring token: " + token);
        return mod_p(mpz_class(num));
    }
    if (t.rfind("Z[1/", 0) == 0 && t.back() == ']') {
        std::vector<mpz_class> primes;
        std::string inner = t.substr(2, t.size() - 3); // "1/2,1/3"
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.rfind("1/", 0) != 0)
                fail(Error::Kind::Parse, "bad ring token: " + token);
            std::string num = item.substr(2);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                fail(Error::Kind::Parse, "bad ring token: " + token);
            primes.emplace_back(num);
        }
        return localized_integers(std::move(primes));
    }
    fail(Error::Kind::Parse, "unknown ring token: " + token);
}

std::string RingSpec::token() const {
    switch (kind()) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::ModP: return "Z/" + data_->p.get_str();
    case RingKind::GaussianIntegers: return "Z[i]";
    case RingKind::LocalizedIntegers: {
        std::string s = "Z[";
        for (size_t i = 0; i < data_->primes.size(); ++i) {
            if (i) s += ",";
            s += "1/" + data_->primes[i].get_str();
        }
        return s + "]";
    }
    }
    return "?";
}

const mpz_class& RingSpec::modulus() const {
    if (kind() != RingKind::ModP) fail(Error::Kind::Domain, "modulus() on non Z/p ring");
    return data_->p;
}

const std::vector<mpz_class>& RingSpec::inverted_primes() const {
    if (kind() != RingKind::LocalizedIntegers)
        fail(Error::Kind::Domain, "inverted_primes() on non Z[1/S] ring");
    return data_->primes;
}

bool RingSpec::is_field() const {
    return kind() == RingKind::Rationals || kind() == RingKind::ModP;
}

bool RingSpec::operator==(const RingSpec& other) const {
    if (data_ == other.data_) return true;
    if (data_->kind != other.data_->kind) return false;
    return data_->p == other.data_->p && data_->primes == other.data_->primes;
}

mpz_class s_free_core(const mpz_class& n, const std::vector<mpz_class>& primes) {
    mpz_class core = abs(n);
    if (core == 0) return core;
    for (const auto& p : primes) {
        while (mpz_divisible_p(core.get_mpz_t(), p.get_mpz_t()))
            mpz_divexact(core.get_mpz_t(), core.get_mpz_t(), p.get_mpz_t());
    }
    return core;
}

void Scalar::normalize() {
    switch (ring_.kind()) {
    case RingKind::Integers:
        if (re_.get_den() != 1)
            fail(Error::Kind::Invariant, "non-integer value in Z: " + re_.get_str());
        break;
    case RingKind::Rationals:
        break; // mpq_class canonicalizes
    case RingKind::ModP: {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), re_.get_num().get_mpz_t(), ring_.modulus().get_mpz_t());
        re_ = mpq_class(r);
        break;
    }
    case RingKind::LocalizedIntegers: {
        if (s_free_core(re_.get_den(), ring_.inverted_primes()) != 1)
            fail(Error::Kind::Invariant,
                 "denominator not supported in " + ring_.token() + ": " + re_.get_str());
        break;
    }
    case RingKind::GaussianIntegers:
        if (re_.get_den() != 1 || im_.get_den() != 1)
            fail(Error::Kind::Invariant, "non-integral Gaussian value");
        break;
    }
    if (ring_.kind() != RingKind::GaussianIntegers && im_ != 0)
        fail(Error::Kind::Invariant, "imaginary part outside Z[i]");
}

Scalar Scalar::zero(const RingSpec& ring) { return Scalar(ring, 0, 0); }
Scalar Scalar::one(const RingSpec& ring) {
    Scalar s(ring, 1, 0);
    s.normalize();
    return s;
}
Scalar Scalar::from_int(const RingSpec& ring, long v) {
    Scalar s(ring, mpq_class(v), 0);
    s.normalize();
    return s;
}
Scalar Scalar::from_mpz(const RingSpec& ring, const mpz_class& v) {
    Scalar s(ring, mpq_class(v), 0);
    s.normalize();
    return s;
}
Scalar Scalar::from_mpq(const RingSpec& ring, const mpq_class& v) {
    Scalar s(ring, v, 0);
    s.normalize();
    return s;
}
Scalar Scalar::gaussian(const mpz_class& re, const mpz_class& im) {
    return Scalar(RingSpec::gaussian_integers(), mpq_class(re), mpq_class(im));
}

bool Scalar::is_zero() const { return re_ == 0 && im_ == 0; }
bool Scalar::is_one() const { return re_ == 1 && im_ == 0; }

void Scalar::check_same_ring(const Scalar& o) const {
    if (ring_ != o.ring_)
        fail(Error::Kind::RingMismatch,
             "mixed-ring arithmetic: " + ring_.token() + " vs " + o.ring_.token());
}

Scalar Scalar::operator-() const {
    Scalar s(ring_, -re_, -im_);
    s.normalize();
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_ring(o);
    Scalar s(ring_, re_ + o.re_, im_ + o.im_);
    s.normalize();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_ring(o);
    Scalar s(ring_, re_ - o.re_, im_ - o.im_);
    s.normalize();
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_ring(o);
    if (ring_.kind() == RingKind::GaussianIntegers) {
        Scalar s(ring_, re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
        return s;
    }
    Scalar s(ring_, re_ * o.re_, 0);
    s.normalize();
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_ring(o);
    return re_ == o.re_ && im_ == o.im_;
}

mpz_class Scalar::norm() const {
    if (is_zero()) return 0;
    switch (ring_.kind()) {
    case RingKind::Integers: return abs(mpz_class(re_.get_num()));
    case RingKind::Rationals:
    case RingKind::ModP: return 1;
    case RingKind::LocalizedIntegers: return s_free_core(re_.get_num(), ring_.inverted_primes());
    case RingKind::GaussianIntegers: {
        mpz_class a = re_.get_num(), b = im_.get_num();
        return a * a + b * b;
    }
    }
    return 0;
}

std::pair<Scalar, Scalar> Scalar::divmod(const Scalar& y) const {
    check_same_ring(y);
    if (y.is_zero()) fail(Error::Kind::Domain, "division by zero");
    switch (ring_.kind()) {
    case RingKind::Rationals:
    case RingKind::ModP:
        return {*this * y.inverse(), zero(ring_)};
    case RingKind::Integers: {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), re_.get_num().get_mpz_t(),
                    y.re_.get_num().get_mpz_t());
        return {from_mpz(ring_, q), from_mpz(ring_, r)};
    }
    case RingKind::GaussianIntegers: {
        // exact quotient (a+bi)(c-di)/(c^2+d^2), each coordinate rounded to
        // the nearest integer with ties toward zero
        mpz_class a = re_.get_num(), b = im_.get_num();
        mpz_class c = y.re_.get_num(), d = y.im_.get_num();
        mpz_class den = c * c + d * d;
        mpq_class qre(a * c + b * d, den), qim(b * c - a * d, den);
        qre.canonicalize();
        qim.canonicalize();
        Scalar q = gaussian(round_nearest_tie_to_zero(qre), round_nearest_tie_to_zero(qim));
        Scalar r = *this - q * y;
        return {q, r};
    }
    case RingKind::LocalizedIntegers: {
        const auto& S = ring_.inverted_primes();
        mpz_class mx = s_free_core(re_.get_num(), S);
        mpz_class my = s_free_core(y.re_.get_num(), S);
        if (is_zero()) return {zero(ring_), zero(ring_)};
        // x = u*mx, y = v*my with u, v units
        mpq_class u = re_ / mpq_class(mx);
        mpq_class v = y.re_ / mpq_class(my);
        mpz_class q0, r0;
        mpz_tdiv_qr(q0.get_mpz_t(), r0.get_mpz_t(), mx.get_mpz_t(), my.get_mpz_t());
        mpq_class q = u * mpq_class(q0) / v;
        q.canonicalize();
        Scalar qs = from_mpq(ring_, q);
        Scalar rs = *this - qs * y;
        return {qs, rs};
    }
    }
    fail(Error::Kind::Domain, "divmod unreachable");
}

std::optional<Scalar> Scalar::exact_div(const Scalar& y) const {
    auto [q, r] = divmod(y);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

bool Scalar::divides(const Scalar& dividend) const {
    if (is_zero()) return dividend.is_zero();
    return dividend.exact_div(*this).has_value();
}

bool Scalar::is_unit() const {
    if (is_zero()) return false;
    switch (ring_.kind()) {
    case RingKind::Integers: return re_ == 1 || re_ == -1;
    case RingKind::Rationals:
    case RingKind::ModP: return true;
    case RingKind::GaussianIntegers: return norm() == 1;
    case RingKind::LocalizedIntegers:
        return s_free_core(re_.get_num(), ring_.inverted_primes()) == 1;
    }
    return false;
}

Scalar Scalar::inverse() const {
    if (!is_unit()) fail(Error::Kind::Domain, "inverse of non-unit " + str());
    switch (ring_.kind()) {
    case RingKind::Integers: return *this;
    case RingKind::Rationals:
    case RingKind::LocalizedIntegers: {
        mpq_class inv = 1 / re_;
        return from_mpq(ring_, inv);
    }
    case RingKind::ModP: {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), re_.get_num().get_mpz_t(), ring_.modulus().get_mpz_t()) == 0)
            fail(Error::Kind::Domain, "no inverse mod p");
        return from_mpz(ring_, inv);
    }
    case RingKind::GaussianIntegers: {
        // units: 1, -1, i, -i; inverse is the conjugate
        return gaussian(re_.get_num(), mpz_class(-im_.get_num()));
    }
    }
    fail(Error::Kind::Domain, "inverse unreachable");
}

Scalar Scalar::canonical_associate() const {
    if (is_zero()) return *this;
    switch (ring_.kind()) {
    case RingKind::Integers:
    case RingKind::LocalizedIntegers: {
        Scalar c = (re_ < 0) ? -*this : *this;
        if (ring_.kind() == RingKind::LocalizedIntegers)
            return from_mpz(ring_, s_free_core(re_.get_num(), ring_.inverted_primes()));
        return c;
    }
    case RingKind::Rationals:
    case RingKind::ModP: return one(ring_);
    case RingKind::GaussianIntegers: {
        Scalar c = *this;
        for (int k = 0; k < 4; ++k) {
            if (c.re_ > 0 && c.im_ >= 0) return c;
            c = c * gaussian(0, 1);
        }
        fail(Error::Kind::Invariant, "no first-quadrant associate for " + str());
    }
    }
    fail(Error::Kind::Domain, "canonical_associate unreachable");
}

std::string Scalar::str() const {
    if (ring_.kind() == RingKind::GaussianIntegers) {
        mpz_class a = re_.get_num(), b = im_.get_num();
        if (b == 0) return a.get_str();
        if (a == 0) return b.get_str() + "i";
        mpz_class ab = abs(b);
        return a.get_str() + (b > 0 ? "+" : "-") + ab.get_str() + "i";
    }
    return re_.get_str();
}

Scalar Scalar::parse(const RingSpec& ring, const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) fail(Error::Kind::Parse, "empty scalar");
    try {
        if (ring.kind() == RingKind::GaussianIntegers) {
            // forms: a, bi, a+bi, a-bi (i coefficient may be omitted for +-1)
            if (t.back() == 'i') {
                std::string body = t.substr(0, t.size() - 1);
                size_t split = std::string::npos;
                for (size_t j = body.size(); j-- > 1;) {
                    if (body[j] == '+' || body[j] == '-') {
                        split = j;
                        break;
                    }
                }
                auto coeff = [](std::string s) {
                    if (s.empty() || s == "+") return mpz_class(1);
                    if (s == "-") return mpz_class(-1);
                    if (s[0] == '+') s = s.substr(1);
                    return mpz_class(s);
                };
                if (split == std::string::npos) return gaussian(0, coeff(body));
                return gaussian(mpz_class(body.substr(0, split)), coeff(body.substr(split)));
            }
            return gaussian(mpz_class(t), 0);
        }
        if (t.find('/') != std::string::npos) {
            if (ring.kind() != RingKind::Rationals && ring.kind() != RingKind::LocalizedIntegers)
                fail(Error::Kind::Parse, "fraction not valid in " + ring.token());
            mpq_class q(t);
            q.canonicalize();
            return from_mpq(ring, q);
        }
        return from_mpz(ring, mpz_class(t));
    } catch (const std::invalid_argument&) {
        fail(Error::Kind::Parse, "bad scalar literal '" + text + "' for " + ring.token());
    }
}

Scalar gcd(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        (void)q;
        x = y;
        y = r;
    }
    return x.canonical_associate();
}

ExtGcd ext_gcd(const Scalar& x, const Scalar& y) {
    RingSpec R = x.ring();
    Scalar r0 = x, r1 = y;
    Scalar s0 = Scalar::one(R), s1 = Scalar::zero(R);
    Scalar t0 = Scalar::zero(R), t1 = Scalar::one(R);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Scalar s2 = s0 - q * s1;
        Scalar t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = std::move(s2);
        t0 = t1; t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        Scalar canon = r0.canonical_associate();
        if (canon != r0) {
            Scalar u = *canon.exact_div(r0);
            r0 = std::move(canon);
            s0 = s0 * u;
            t0 = t0 * u;
        }
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

} // namespace cellplus
