#include "doctest.h"

#include "fsp/error.hpp"
#include "fsp/functors.hpp"
#include "fsp/linrel.hpp"
#include "gen.hpp"

using namespace fsp;
using namespace gen;

namespace {

using Vec = std::vector<std::uint32_t>;

std::pair<Vec, Vec> cut(const Vec& v, std::size_t d1) {
    return {Vec(v.begin(), v.begin() + d1), Vec(v.begin() + d1, v.end())};
}

// Composition straight from the definition, over F_p.
std::set<Vec> brute_compose(const RelObj& sigma, const RelObj& rho) {
    std::set<Vec> out;
    auto R = span_set(rho.basis), S = span_set(sigma.basis);
    for (auto& r : R) {
        auto [x, y] = cut(r, rho.dim1);
        for (auto& s : S) {
            auto [y2, z] = cut(s, sigma.dim1);
            if (y != y2) continue;
            Vec xz = x;
            xz.insert(xz.end(), z.begin(), z.end());
            out.insert(xz);
        }
    }
    return out;
}

// (f, g) with f(x) = g(y) on all of R, by enumerating functionals.
std::set<Vec> brute_dual(const RelObj& rho) {
    const Field F = rho.field;
    const std::uint32_t p = F.p();
    std::set<Vec> out;
    auto R = span_set(rho.basis);
    for (auto& fg : span_set(Matrix::identity(F, rho.dim1 + rho.dim2))) {
        bool ok = true;
        for (auto& r : R) {
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < rho.dim1; ++i) s += std::uint64_t(fg[i]) * r[i];
            for (std::size_t i = rho.dim1; i < fg.size(); ++i) s += std::uint64_t(p - fg[i]) * r[i];
            if (s % p) ok = false;
        }
        if (ok) out.insert(fg);
    }
    return out;
}

std::size_t brute_hom_count(const RelObj& rho, const RelObj& sigma, RelKind kind) {
    std::size_t n = 0;
    auto A = all_matrices(rho.field, sigma.dim1, rho.dim1);
    if (kind == RelKind::OneSpace) {
        for (auto& f : A) n += maps_into(rho, sigma, f, f);
        return n;
    }
    auto B = all_matrices(rho.field, sigma.dim2, rho.dim2);
    for (auto& f : A)
        for (auto& g : B) n += maps_into(rho, sigma, f, g);
    return n;
}

std::size_t power(std::size_t p, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= p;
    return r;
}

}  // namespace

TEST_CASE("relation examples") {
    Field f = Field::prime(2);
    Matrix a = Matrix::from_rows(f, {{0, 1}, {0, 0}});
    RelObj g = rel_from_operator(a);
    CHECK(g.dim() == 2);
    CHECK(rel_inverse(rel_inverse(g)) == g);
    // graph of a composed with itself is the graph of a^2 = 0
    CHECK(rel_compose(g, g) == rel_from_operator(a * a));
    // the full relation is dual to zero
    RelObj full = make_rel(f, 2, 2, Matrix::identity(f, 4));
    CHECK(rel_dual(full).dim() == 0);
    CHECK(rel_dual(make_rel(f, 2, 2, Matrix(f, 4, 0))) == full);
    CHECK_THROWS_AS(make_rel(f, 2, 2, Matrix(f, 3, 1)), Error);
}

TEST_CASE("property: composition matches the set-theoretic definition") {
    Rng rng(3);
    for (Field f : {Field::prime(2), Field::prime(3)}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t d1 = rng.below(3), d2 = rng.below(3), d3 = rng.below(3);
            RelObj rho = random_rel(f, d1, d2, rng.below(4), rng);
            RelObj sigma = random_rel(f, d2, d3, rng.below(4), rng);
            RelObj c = rel_compose(sigma, rho);
            REQUIRE(span_set(c.basis) == brute_compose(sigma, rho));
        }
    }
}

TEST_CASE("property: dual matches enumeration and is an involution") {
    Rng rng(5);
    for (Field f : {Field::prime(2), Field::prime(3)}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t d1 = rng.below(3), d2 = rng.below(3);
            RelObj rho = random_rel(f, d1, d2, rng.below(5), rng);
            RelObj d = rel_dual(rho);
            REQUIRE(span_set(d.basis) == brute_dual(rho));
            REQUIRE(d.dim() == d1 + d2 - rho.dim());
            REQUIRE(rel_dual(d) == rho);
        }
    }
}

TEST_CASE("property: composition is associative and respects graphs") {
    Rng rng(11);
    Field f = Field::prime(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng.below(3);
        RelObj a = random_rel(f, n, n, rng.below(2 * n + 1), rng);
        RelObj b = random_rel(f, n, n, rng.below(2 * n + 1), rng);
        RelObj c = random_rel(f, n, n, rng.below(2 * n + 1), rng);
        REQUIRE(rel_compose(c, rel_compose(b, a)) == rel_compose(rel_compose(c, b), a));
        Matrix x = random_matrix(f, n, n, rng), y = random_matrix(f, n, n, rng);
        REQUIRE(rel_compose(rel_from_operator(y), rel_from_operator(x)) == rel_from_operator(y * x));
        // (sigma rho)^-1 = rho^-1 sigma^-1
        REQUIRE(rel_inverse(rel_compose(b, a)) == rel_compose(rel_inverse(a), rel_inverse(b)));
    }
}

TEST_CASE("property: hom dimensions match enumeration") {
    Rng rng(13);
    Field f = Field::prime(2);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng.below(2), m = 1 + rng.below(2);
        RelObj a = random_rel(f, n, n, rng.below(2 * n + 1), rng);
        RelObj b = random_rel(f, m, m, rng.below(2 * m + 1), rng);
        auto one = rel_hom_basis(a, b, RelKind::OneSpace);
        for (auto& h : one) REQUIRE(is_rel_morphism(a, b, h));
        REQUIRE(power(2, one.size()) == brute_hom_count(a, b, RelKind::OneSpace));
        auto two = rel_hom_basis(a, b, RelKind::TwoSpace);
        REQUIRE(power(2, two.size()) == brute_hom_count(a, b, RelKind::TwoSpace));
    }
}

TEST_CASE("property: isomorphism under basis change, and invariants separate") {
    Rng rng(17);
    for (Field f : {Field::prime(2), Field::prime(3)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 1 + rng.below(2);
            RelObj a = random_rel(f, n, n, rng.below(2 * n + 1), rng);
            Matrix g = random_invertible(f, n, rng);
            REQUIRE(rel_is_isomorphic(a, rel_change_basis(a, g, g), RelKind::OneSpace));
            Matrix h = random_invertible(f, n, rng);
            REQUIRE(rel_is_isomorphic(a, rel_change_basis(a, g, h), RelKind::TwoSpace));
            RelObj b = random_rel(f, n, n, rng.below(2 * n + 1), rng);
            bool iso = rel_is_isomorphic(a, b, RelKind::OneSpace);
            // a one-space isomorphism gives one on two spaces
            if (iso) REQUIRE(rel_is_isomorphic(a, b, RelKind::TwoSpace));
            if (a.dim() != b.dim()) REQUIRE_FALSE(iso);
        }
    }
}

TEST_CASE("property: one-space isomorphism agrees with exhaustive search") {
    Rng rng(19);
    Field f = Field::prime(2);
    auto inv2 = all_matrices(f, 2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        RelObj a = random_rel(f, 2, 2, rng.below(5), rng), b = random_rel(f, 2, 2, rng.below(5), rng);
        bool brute = false;
        for (auto& g : inv2)
            if (is_invertible(g) && rel_change_basis(a, g, g) == b) brute = true;
        REQUIRE(rel_is_isomorphic(a, b, RelKind::OneSpace) == brute);
    }
}

TEST_CASE("property: idempotents split") {
    Rng rng(23);
    for (Field f : {Field::prime(2), Field::prime(5)}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t n1 = 1 + rng.below(2), n2 = 1 + rng.below(2);
            RelObj a = random_rel(f, n1, n1, rng.below(2 * n1 + 1), rng);
            RelObj b = random_rel(f, n2, n2, rng.below(2 * n2 + 1), rng);
            Matrix g = random_invertible(f, n1 + n2, rng);
            Matrix gi = *inverse(g);
            RelObj s = rel_change_basis(rel_direct_sum(a, b), g, g);
            // projection onto the first summand, transported by g
            Matrix e = g * direct_sum(Matrix::identity(f, n1), Matrix(f, n2, n2)) * gi;
            RelMorphism em{e, e};
            REQUIRE(is_rel_morphism(s, s, em));
            IdempotentSplit sp = rel_split_idempotent(s, em);
            REQUIRE(sp.q.f1 * sp.p.f1 == e);
            REQUIRE(sp.p.f1 * sp.q.f1 == Matrix::identity(f, n1));
            REQUIRE(is_rel_morphism(s, sp.sigma, sp.p));
            REQUIRE(is_rel_morphism(sp.sigma, s, sp.q));
            REQUIRE(rel_is_isomorphic(sp.sigma, a, RelKind::OneSpace));
        }
    }
    Field f = Field::prime(2);
    RelObj r = rel_from_operator(Matrix::identity(f, 2));
    Matrix proj = Matrix::from_rows(f, {{1, 1}, {0, 0}});
    CHECK_NOTHROW(rel_split_idempotent(r, {proj, proj}));
    Matrix nil = Matrix::from_rows(f, {{0, 1}, {0, 0}});
    CHECK_THROWS_AS(rel_split_idempotent(r, {nil, nil}), Error);
}

TEST_CASE("property: decomposition of relations recovers the summands") {
    Rng rng(29);
    for (Field f : {Field::prime(2), Field::prime(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<RelObj> parts;
            RelObj sum = make_rel(f, 0, 0, Matrix(f, 0, 0));
            int count = 1 + static_cast<int>(rng.below(3));
            for (int i = 0; i < count; ++i) {
                std::size_t n = 1 + rng.below(2);
                RelObj r = random_rel(f, n, n, rng.below(2 * n + 1), rng);
                for (auto& x : rel_decompose_flat(r, trial)) parts.push_back(x);
                sum = rel_direct_sum(sum, r);
            }
            Matrix g = random_invertible(f, sum.dim1, rng);
            auto flat = rel_decompose_flat(rel_change_basis(sum, g, g), trial);
            REQUIRE(flat.size() == parts.size());
            std::vector<bool> used(parts.size(), false);
            for (auto& x : flat) {
                REQUIRE(is_indecomposable(apply_functor(5, x)));
                bool found = false;
                for (std::size_t j = 0; j < parts.size() && !found; ++j)
                    if (!used[j] && rel_is_isomorphic(x, parts[j], RelKind::OneSpace)) used[j] = found = true;
                REQUIRE(found);
            }
        }
    }
}

TEST_CASE("pair decomposition") {
    Rng rng(31);
    Field f = Field::prime(2);
    for (int trial = 0; trial < 20; ++trial) {
        PairRelObj a = random_pair(f, 1 + rng.below(2), rng.below(2), rng.below(3), rng.below(3), rng);
        PairRelObj b = random_pair(f, rng.below(2), 1, rng.below(3), rng.below(3), rng);
        PairRelObj s = pair_direct_sum(a, b);
        PairRelObj c = pair_change_basis(s, random_invertible(f, s.dim1, rng), random_invertible(f, s.dim2, rng));
        auto parts = pair_decompose_flat(c, trial);
        PairRelObj re = make_pair_rel(f, 0, 0, Matrix(f, 0, 0), Matrix(f, 0, 0));
        for (auto& x : parts) re = pair_direct_sum(re, x);
        REQUIRE(pair_is_isomorphic(re, s));
    }
}
