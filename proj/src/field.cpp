#include "fsp/field.hpp"

#include <algorithm>
#include <cctype>

#include "fsp/error.hpp"
#include "fsp/rng.hpp"

namespace fsp {

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
    if (p > UINT32_MAX || !is_prime_number(p)) fail("InvalidField", "modulus " + std::to_string(p) + " is not a supported prime");
    return Field(static_cast<std::uint32_t>(p));
}

Field Field::rationals() { return Field(0u); }

Field Field::parse(std::string_view s) {
    if (s == "Q") return rationals();
    if (s.size() >= 2 && s[0] == 'F') {
        std::string_view digits = s.substr(s[1] == '_' ? 2 : 1);
        if (!digits.empty() && digits.size() <= 10 &&
            std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return prime(std::stoull(std::string(digits)));
    }
    fail("ParseError", "bad field '" + std::string(s) + "' (expected F<p> or Q)");
}

std::string Field::str() const { return p_ ? "F" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    if (!p_) return Scalar::rational(mpq_class(mpz_class(static_cast<long>(v))));
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Scalar(p_, static_cast<std::uint32_t>(r));
}

Scalar Field::from_mpz(const mpz_class& v) const {
    if (!p_) return Scalar::rational(mpq_class(v));
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return Scalar(p_, static_cast<std::uint32_t>(r.get_ui()));
}

Scalar Field::parse_scalar(std::string_view s) const {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && t[0] == '-') t.remove_prefix(1);
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(s)) fail("ParseError", "bad scalar '" + std::string(s) + "'");
        return from_mpz(mpz_class(std::string(s), 10));
    }
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (p_ || !is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '0')
        fail("ParseError", "bad scalar '" + std::string(s) + "' for field " + str());
    mpq_class q{mpz_class{std::string(num), 10}, mpz_class{std::string(den), 10}};
    q.canonicalize();
    return Scalar::rational(q);
}

Scalar Field::element(std::uint64_t i) const {
    if (!p_) fail("UnsupportedField", "element enumeration needs a finite field");
    return Scalar(p_, static_cast<std::uint32_t>(i % p_));
}

Scalar Field::random(Rng& rng) const {
    if (p_) return Scalar(p_, static_cast<std::uint32_t>(rng.below(p_)));
    mpq_class q(static_cast<long>(rng.range(-6, 6)), static_cast<unsigned long>(rng.range(1, 3)));
    q.canonicalize();
    return Scalar::rational(q);
}

Scalar Field::random_nonzero(Rng& rng) const {
    for (;;) {
        Scalar s = random(rng);
        if (!s.is_zero()) return s;
    }
}

void check_same(Field a, Field b) {
    if (a != b) fail("FieldMismatch", a.str() + " vs " + b.str());
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::rational(mpq_class q) {
    Scalar s;
    s.p_ = 0;
    s.v_ = std::move(q);
    return s;
}

bool Scalar::is_zero() const { return p_ ? residue() == 0 : sgn(rational()) == 0; }
bool Scalar::is_one() const { return p_ ? residue() == 1 : rational() == 1; }

std::string Scalar::str() const { return p_ ? std::to_string(residue()) : rational().get_str(); }

static void same(const Scalar& a, const Scalar& b) { check_same(a.field(), b.field()); }

Scalar Scalar::operator+(const Scalar& b) const {
    if (p_ != b.p_) same(*this, b);
    if (p_) {
        std::uint64_t r = std::uint64_t(residue()) + b.residue();
        return Scalar(p_, static_cast<std::uint32_t>(r >= p_ ? r - p_ : r));
    }
    return rational(mpq_class(rational() + b.rational()));
}

Scalar Scalar::operator-(const Scalar& b) const {
    if (p_ != b.p_) same(*this, b);
    if (p_) {
        std::uint64_t r = std::uint64_t(residue()) + p_ - b.residue();
        return Scalar(p_, static_cast<std::uint32_t>(r >= p_ ? r - p_ : r));
    }
    return rational(mpq_class(rational() - b.rational()));
}

Scalar Scalar::operator*(const Scalar& b) const {
    if (p_ != b.p_) same(*this, b);
    if (p_) return Scalar(p_, static_cast<std::uint32_t>(std::uint64_t(residue()) * b.residue() % p_));
    return rational(mpq_class(rational() * b.rational()));
}

Scalar Scalar::inv() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero");
    if (p_) return Scalar(p_, inv_mod(residue(), p_));
    return rational(mpq_class(1 / rational()));
}

Scalar Scalar::operator/(const Scalar& b) const {
    if (p_ != b.p_) same(*this, b);
    return *this * b.inv();
}

Scalar Scalar::operator-() const {
    if (p_) return Scalar(p_, residue() ? p_ - residue() : 0);
    return rational(mpq_class(-rational()));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    if (a.p_) return a.residue() == b.residue();
    return a.rational() == b.rational();
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    if (a.p_) return a.residue() < b.residue();
    return a.rational() < b.rational();
}

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar div(const Scalar& a, const Scalar& b) { return a / b; }
Scalar neg(const Scalar& a) { return -a; }
Scalar inv(const Scalar& a) { return a.inv(); }

// ---------------------------------------------------------------- Poly

Poly::Poly(Field f, std::vector<Scalar> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (auto& c : c_) check_same(c.field(), f_);
    trim();
}

Poly Poly::from_ints(Field f, const std::vector<long long>& coeffs) {
    std::vector<Scalar> c;
    for (long long v : coeffs) c.push_back(f.from_int(v));
    return Poly(f, std::move(c));
}

Poly Poly::monomial(Field f, int deg) {
    std::vector<Scalar> c(deg + 1, f.zero());
    c[deg] = f.one();
    return Poly(f, std::move(c));
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : f_.zero(); }
Scalar Poly::lead() const { return c_.empty() ? f_.zero() : c_.back(); }

Scalar Poly::eval(const Scalar& x) const {
    Scalar r = f_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Scalar c = c_[i];
        if (c.is_zero()) continue;
        bool negative = f_.is_rational() && sgn(c.rational()) < 0;
        if (negative) c = -c;
        if (negative)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (i == 0) {
            out += c.str();
            continue;
        }
        if (!c.is_one()) out += c.str() + "*";
        out += 't';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Poly Poly::parse(Field f, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) fail("ParseError", "empty polynomial");
    std::vector<Scalar> c;
    auto put = [&](int deg, const Scalar& v) {
        if (static_cast<int>(c.size()) <= deg) c.resize(deg + 1, f.zero());
        c[deg] = c[deg] + v;
    };
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (i != 0) {
            fail("ParseError", "bad polynomial '" + s + "'");
        }
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        Scalar coef = f.one();
        bool have_coef = j > i;
        if (have_coef) coef = f.parse_scalar(std::string_view(s).substr(i, j - i));
        i = j;
        int deg = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_coef) fail("ParseError", "bad polynomial '" + s + "'");
            ++i;
            if (i >= s.size() || s[i] != 't') fail("ParseError", "bad polynomial '" + s + "'");
        }
        if (i < s.size() && s[i] == 't') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i || k - i > 4) fail("ParseError", "bad exponent in '" + s + "'");
                deg = std::stoi(s.substr(i, k - i));
                i = k;
            }
        } else if (!have_coef) {
            fail("ParseError", "bad polynomial '" + s + "'");
        }
        put(deg, negative ? -coef : coef);
    }
    return Poly(f, std::move(c));
}

Poly Poly::operator+(const Poly& b) const {
    check_same(f_, b.f_);
    std::vector<Scalar> c(std::max(c_.size(), b.c_.size()), f_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + b.coeff(i);
    return Poly(f_, std::move(c));
}

Poly Poly::operator-(const Poly& b) const {
    check_same(f_, b.f_);
    std::vector<Scalar> c(std::max(c_.size(), b.c_.size()), f_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - b.coeff(i);
    return Poly(f_, std::move(c));
}

Poly Poly::operator*(const Poly& b) const {
    check_same(f_, b.f_);
    if (c_.empty() || b.c_.empty()) return Poly(f_);
    std::vector<Scalar> c(c_.size() + b.c_.size() - 1, f_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * b.c_[j];
    }
    return Poly(f_, std::move(c));
}

Poly Poly::scaled(const Scalar& s) const {
    std::vector<Scalar> c = c_;
    for (auto& x : c) x = x * s;
    return Poly(f_, std::move(c));
}

Poly Poly::monic() const { return c_.empty() ? *this : scaled(c_.back().inv()); }

Poly Poly::derivative() const {
    std::vector<Scalar> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * f_.from_int(static_cast<long long>(i)));
    return Poly(f_, std::move(c));
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    check_same(a.field(), b.field());
    if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    Field f = a.field();
    std::vector<Scalar> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) {
        q = Poly(f);
        r = a;
        return;
    }
    std::vector<Scalar> quo(a.degree() - db + 1, f.zero());
    Scalar lead_inv = b.lead().inv();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i].is_zero()) continue;
        Scalar c = rem[i] * lead_inv;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - c * b.coeffs()[j];
    }
    rem.resize(db);
    q = Poly(f, std::move(quo));
    r = Poly(f, std::move(rem));
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q(a.field()), r(a.field());
    divmod(a, b, q, r);
    return q;
}

Poly operator%(const Poly& a, const Poly& b) {
    Poly q(a.field()), r(a.field());
    divmod(a, b, q, r);
    return r;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod) {
    Poly result = Poly::constant(base.field().one()) % mod;
    Poly b = base % mod;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % mod;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
    }
    return result;
}

Poly poly_power(const Poly& p, int s) {
    Poly r = Poly::constant(p.field().one());
    for (int i = 0; i < s; ++i) r = r * p;
    return r;
}

// ---------------------------------------------------------------- irreducibility

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// rational roots of a polynomial over Q, ascending
std::vector<mpq_class> rational_roots(const Poly& p) {
    std::vector<mpq_class> roots;
    if (p.degree() < 1) return roots;
    mpz_class l = 1;
    for (auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> a;
    for (auto& c : p.coeffs()) a.push_back(mpz_class(c.rational() * l));
    std::size_t low = 0;
    while (a[low] == 0) ++low;
    if (low > 0) roots.push_back(0);
    if (static_cast<int>(low) == p.degree()) return roots;
    for (auto& num : divisors(a[low]))
        for (auto& den : divisors(a.back()))
            for (int sign : {1, -1}) {
                mpq_class x(num * sign, den);
                x.canonicalize();
                if (p.eval(Scalar::rational(x)).is_zero() && std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Poly t_poly(Field f) { return Poly::monomial(f, 1); }

Poly pth_root(const Poly& a) {
    Field f = a.field();
    std::vector<Scalar> c;
    for (int i = 0; i <= a.degree(); i += static_cast<int>(f.p())) c.push_back(a.coeff(i));
    return Poly(f, std::move(c));
}

void squarefree(const Poly& f0, int mult, std::vector<std::pair<Poly, int>>& out) {
    Field f = f0.field();
    Poly one = Poly::constant(f.one());
    Poly c = gcd(f0, f0.derivative());
    Poly w = f0 / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        if (f.is_rational()) fail("Internal", "squarefree remainder over Q");
        squarefree(pth_root(c), mult * static_cast<int>(f.p()), out);
    }
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly g) {
    Field f = g.field();
    std::vector<std::pair<Poly, int>> out;
    Poly t = t_poly(f);
    Poly h = t;
    mpz_class p = f.p();
    for (int i = 1; 2 * i <= g.degree(); ++i) {
        h = powmod(h, p, g);
        Poly d = gcd(g, h - t);
        if (d.degree() > 0) {
            out.push_back({d, i});
            g = g / d;
            h = h % g;
        }
    }
    if (g.degree() > 0) out.push_back({g.monic(), g.degree()});
    return out;
}

void equal_degree(const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    Field f = g.field();
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), f.p(), d);
    for (;;) {
        std::vector<Scalar> c;
        for (int i = 0; i < g.degree(); ++i) c.push_back(f.random(rng));
        Poly a(f, std::move(c));
        if (a.degree() < 1) continue;
        Poly b(f);
        if (f.p() == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            Poly term = a % g;
            b = term;
            for (int i = 1; i < d; ++i) {
                term = (term * term) % g;
                b = b + term;
            }
        } else {
            b = powmod(a, (q - 1) / 2, g) - Poly::constant(f.one());
        }
        Poly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(const Poly& p) {
    Field f = p.field();
    if (p.degree() < 1) return false;
    if (p.degree() == 1) return true;
    if (f.is_rational()) {
        if (p.degree() > 3) fail("UnsupportedField", "irreducibility over Q is supported up to degree 3");
        return rational_roots(p).empty();
    }
    Poly m = p.monic();
    Poly t = t_poly(f);
    Poly h = t;
    mpz_class q = f.p();
    for (int i = 1; 2 * i <= m.degree(); ++i) {
        h = powmod(h, q, m);
        if (gcd(m, h - t).degree() > 0) return false;
    }
    return true;
}

std::vector<Poly> monic_irreducibles(Field f, int degree) {
    if (!f.is_prime()) fail("UnsupportedField", "enumeration needs a finite field");
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= f.p();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Scalar> c;
        std::uint64_t x = idx;
        for (int i = 0; i < degree; ++i) {
            c.push_back(f.element(x % f.p()));
            x /= f.p();
        }
        c.push_back(f.one());
        Poly p(f, std::move(c));
        if (is_irreducible(p)) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Poly, int>> factor(const Poly& p, std::uint64_t seed) {
    Field f = p.field();
    if (!f.is_prime()) fail("UnsupportedField", "factorization needs a finite field");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() < 1) return out;
    std::vector<std::pair<Poly, int>> sqf;
    squarefree(p.monic(), 1, sqf);
    Rng rng(seed);
    for (auto& [g, mult] : sqf)
        for (auto& [h, d] : distinct_degree(g)) {
            std::vector<Poly> irr;
            equal_degree(h, d, rng, irr);
            for (auto& q : irr) out.push_back({q, mult});
        }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

bool coprime_split(const Poly& a, Poly& g, Poly& h) {
    Field f = a.field();
    if (a.degree() < 2) return false;
    if (f.is_prime()) {
        auto fac = factor(a);
        if (fac.size() < 2) return false;
        g = poly_power(fac[0].first, fac[0].second);
        h = a.monic() / g;
        return true;
    }
    std::vector<std::pair<Poly, int>> sqf;
    squarefree(a.monic(), 1, sqf);
    if (sqf.size() >= 2) {
        g = poly_power(sqf[0].first, sqf[0].second);
        h = a.monic() / g;
        return true;
    }
    const Poly& u = sqf[0].first;
    int k = sqf[0].second;
    auto roots = rational_roots(u);
    if (roots.empty() || u.degree() == 1) return false;
    Poly lin(f, {Scalar::rational(mpq_class(-roots[0])), f.one()});
    g = poly_power(lin, k);
    h = a.monic() / g;
    return true;
}

}  // namespace fsp
