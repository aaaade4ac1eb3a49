#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace fsp {

class Scalar;
class Rng;

// Either F_p (p prime) or Q. Stored as the modulus, 0 meaning Q.
class Field {
public:
    Field() = default;  // F_2
    static Field prime(std::uint64_t p);
    static Field rationals();
    static Field parse(std::string_view text);  // "F<p>" or "Q"

    bool is_prime() const { return p_ != 0; }
    bool is_rational() const { return p_ == 0; }
    std::uint32_t p() const { return p_; }
    std::string str() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_mpz(const mpz_class& v) const;
    Scalar parse_scalar(std::string_view text) const;
    // canonical element order 0,1,..,p-1; only for prime fields
    Scalar element(std::uint64_t i) const;
    // random element: uniform over F_p, small fractions over Q
    Scalar random(Rng& rng) const;
    Scalar random_nonzero(Rng& rng) const;

    friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
    friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 2;
    friend class Scalar;
};

void check_same(Field a, Field b);

// Field element in canonical form: residue in [0,p) or reduced fraction.
class Scalar {
public:
    Scalar() : p_(2), v_(std::uint32_t{0}) {}
    static Scalar from_residue(std::uint32_t p, std::uint64_t r) { return Scalar(p, static_cast<std::uint32_t>(r % p)); }
    static Scalar rational(mpq_class q);

    Field field() const { return Field(p_); }
    bool is_zero() const;
    bool is_one() const;
    std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::string str() const;

    Scalar operator+(const Scalar& b) const;
    Scalar operator-(const Scalar& b) const;
    Scalar operator*(const Scalar& b) const;
    Scalar operator/(const Scalar& b) const;
    Scalar operator-() const;
    Scalar inv() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // total order used only for deterministic sorting
    friend bool operator<(const Scalar& a, const Scalar& b);

private:
    Scalar(std::uint32_t p, std::uint32_t r) : p_(p), v_(r) {}
    std::uint32_t p_;  // 0 for Q
    std::variant<std::uint32_t, mpq_class> v_;
    friend class Field;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar div(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
Scalar inv(const Scalar& a);

bool is_prime_number(std::uint64_t n);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class Poly {
public:
    explicit Poly(Field f) : f_(f) {}
    Poly(Field f, std::vector<Scalar> coeffs);
    static Poly from_ints(Field f, const std::vector<long long>& coeffs);
    static Poly monomial(Field f, int deg);  // t^deg
    static Poly constant(const Scalar& c);
    // e.g. "t^2+t+1", "t-1", "2*t^3-1/2*t"
    static Poly parse(Field f, std::string_view text);

    Field field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int i) const;
    Scalar lead() const;
    Scalar eval(const Scalar& x) const;
    std::string str() const;

    Poly operator+(const Poly& b) const;
    Poly operator-(const Poly& b) const;
    Poly operator*(const Poly& b) const;
    Poly scaled(const Scalar& s) const;
    Poly monic() const;
    Poly derivative() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b);

private:
    void trim();
    Field f_;
    std::vector<Scalar> c_;
};

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic, or zero
Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod);
Poly poly_power(const Poly& p, int s);

bool is_irreducible(const Poly& p);
// All monic irreducible polynomials of the given degree over F_p, in
// coefficient order.
std::vector<Poly> monic_irreducibles(Field f, int degree);

// Factorization into pairwise coprime monic irreducible powers over F_p
// (Yun + distinct degree + Cantor-Zassenhaus). Sorted by (degree, coeffs).
std::vector<std::pair<Poly, int>> factor(const Poly& p, std::uint64_t seed = 0);

// Some split a = g*h into coprime monic nonconstant factors, if one is
// found. Exact over F_p. Over Q only square-free-part and rational-root
// splits are attempted, so "none found" is not a proof there.
bool coprime_split(const Poly& a, Poly& g, Poly& h);

}  // namespace fsp
