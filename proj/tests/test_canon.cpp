#include "doctest.h"

#include "fsp/canon.hpp"
#include "fsp/error.hpp"
#include "gen.hpp"

using namespace fsp;
using namespace gen;

namespace {

const std::vector<Category> kAll{Category::F,       Category::S,      Category::D, Category::K, Category::C,
                                 Category::LinRel1, Category::PairRel};

// Untwisted tags of a category with n <= nmax; type 0 over every monic
// irreducible p != t with deg p <= 2.
std::vector<IndecompTag> tags_upto(Category c, Field f, int nmax) {
    std::vector<IndecompTag> out;
    for (Family fam : families(c)) {
        if (fam >= Family::Inj1) {
            out.push_back({c, fam, 0, std::nullopt, 0, ""});
            continue;
        }
        for (int n = min_n(c, fam); n <= nmax; ++n) {
            if (fam != Family::Zero) {
                out.push_back({c, fam, n, std::nullopt, 0, ""});
                continue;
            }
            for (int d = 1; d <= 2; ++d)
                if (n % d == 0)
                    for (auto& p : monic_irreducibles(f, d))
                        if (p != Poly::monomial(f, 1)) out.push_back({c, fam, n, p, n / d, ""});
        }
    }
    return out;
}

using Dims = std::vector<std::size_t>;

// Dimension tuples as printed beside each table entry (subspace dimensions
// for F). Type V is printed as (n+1, n+1, n+1, n), which its own blocks
// (stripes of width n) do not produce; it is checked against the blocks.
std::optional<Dims> printed_tuple(Category c, Family f, std::size_t n) {
    using enum Family;
    const std::size_t m = n + 1;
    switch (c) {
        case Category::F:
            switch (f) {
                case Zero:
                case I: return Dims{n, n, n, n};
                case II: return Dims{m, m, n, n};
                case III: return Dims{m, n, n, n};
                case IIIStar: return Dims{n, m, m, m};
                case IV: return Dims{m, m, m, n};
                case IVStar: return Dims{m, m, m, n + 2};
                case V: return Dims{n, n, n, n};
                case VStar: return Dims{m, m, m, m};
                default: return std::nullopt;
            }
        case Category::S:
            switch (f) {
                case Zero:
                case I: return Dims{n, n, n, n};
                case II: return Dims{m, n, m, n};
                case III: return Dims{m, n, n, n};
                case IIIStar: return Dims{n, m, m, m};
                case IV: return Dims{m, m, m, n};
                case IVStar: return Dims{n, n, n, m};
                default: return std::nullopt;
            }
        case Category::D:
            switch (f) {
                case Zero:
                case I: return Dims{n, n, n};
                case II: return Dims{m, n, m};
                case III: return Dims{m, n, n};
                case IIIStar: return Dims{n, m, m};
                case IV: return Dims{m, m, n};
                case IVStar: return Dims{n, n, m};
                default: return std::nullopt;
            }
        case Category::K:
            if (f == II) return Dims{m, n};
            if (f == III) return Dims{n, m};
            return Dims{n, n};
        case Category::C:
            if (f == II) return Dims{n, m};
            if (f == III) return Dims{m, n};
            return Dims{n, n};
        default: return std::nullopt;
    }
}

}  // namespace

TEST_CASE("canon examples") {
    Field f2 = Field::prime(2);
    CHECK(object_dims(canon_rep({Category::F, Family::Inj1}, f2)) == Dims{0, 1, 0, 0, 0});
    CHECK(object_dims(canon_rep({Category::K, Family::II, 0}, f2)) == Dims{1, 0});
    IndecompTag z{Category::F, Family::Zero, 1, Poly::from_ints(f2, {1, 1}), 1, ""};
    CHECK(object_dims(canon_rep(z, f2)) == Dims{2, 1, 1, 1, 1});
    CHECK_THROWS_AS(canon_rep({Category::F, Family::Zero, 1, Poly::monomial(f2, 1), 1, ""}, f2), Error);
    CHECK_THROWS_AS(canon_rep({Category::K, Family::V, 1}, f2), Error);
    CHECK_THROWS_AS(canon_rep({Category::F, Family::I, 0}, f2), Error);
    try {
        (void)canon_rep({Category::F, Family::Zero, 2, Poly::from_ints(f2, {1, 0, 1}), 1, ""}, f2);
        FAIL("expected ReducibleModulus");
    } catch (const Error& e) {
        CHECK(e.kind() == "ReducibleModulus");
    }
}

TEST_CASE("nhat examples") {
    Field f2 = Field::prime(2);
    Rep v = nhat(Poly::from_ints(f2, {1, 1, 1}), 1);
    CHECK(v.dims == Dims{4, 2, 2, 2, 2});
    CHECK(v.mats[3].row_range(0, 2) == Matrix::from_rows(f2, {{0, 1}, {1, 1}}));
    CHECK(is_indecomposable(v));
    Field q = Field::rationals();
    Rep w = nhat(Poly::from_ints(q, {-1, 1}), 1);
    CHECK(w.dims == Dims{2, 1, 1, 1, 1});
    CHECK(w.mats[3].row_range(0, 1) == Matrix::from_rows(q, {{1}}));
    auto c = classify(v);
    REQUIRE(c.size() == 1);
    CHECK(c[0].tag.family == Family::Zero);
    CHECK(*c[0].tag.p == Poly::from_ints(f2, {1, 1, 1}));
    CHECK(c[0].tag.s == 1);
}

TEST_CASE("tag text roundtrip") {
    Field f3 = Field::prime(3);
    for (Category c : kAll)
        for (auto& t : tags_upto(c, f3, 2)) {
            for (auto& sym : symmetries(c)) {
                IndecompTag u = t;
                u.sym = sym;
                REQUIRE(parse_tag(tag_str(u), f3) == u);
            }
        }
    IndecompTag k = parse_tag("K:0(2,p=t^2+t+2,s=1)", f3);
    CHECK(k.category == Category::K);
    CHECK(k.p->degree() == 2);
    CHECK(tag_str(parse_tag("F:III(2)", f3)) == "F:III(2)");
    CHECK(parse_tag("F:Inj3", f3).family == Family::Inj3);
    CHECK_THROWS_AS(parse_tag("F:VI(1)", f3), Error);
    CHECK_THROWS_AS(parse_tag("Q:I(1)", f3), Error);
    CHECK_THROWS_AS(parse_tag("F:I(x)", f3), Error);
}

TEST_CASE("property: canonical objects are indecomposable with the printed dimensions") {
    for (Field f : {Field::prime(2), Field::prime(3)})
        for (Category c : kAll)
            for (auto& t : tags_upto(c, f, 3)) {
                Object o = canon_rep(t, f);
                CAPTURE(tag_str(t));
                REQUIRE(object_indecomposable(o));
                REQUIRE(object_dims(o) == tag_dims(t));
                auto printed = printed_tuple(c, t.family, t.n);
                if (!printed) continue;
                Dims d = object_dims(o);
                if (c == Category::F) d.erase(d.begin());
                REQUIRE(d == *printed);
            }
}

TEST_CASE("property: symmetric variants are isomorphic to the symmetry applied") {
    Field f = Field::prime(2);
    for (Category c : kAll)
        for (auto& t : tags_upto(c, f, 2))
            for (auto& sym : symmetries(c)) {
                IndecompTag u = t;
                u.sym = sym;
                Object o = canon_rep(u, f);
                REQUIRE(object_dims(o) == tag_dims(u));
                REQUIRE(object_indecomposable(o));
            }
}

TEST_CASE("property: distinct tags give non-isomorphic objects") {
    for (Field f : {Field::prime(2), Field::prime(3)})
        for (Category c : kAll) {
            auto tags = tags_upto(c, f, 2);
            std::vector<Object> objs;
            for (auto& t : tags) objs.push_back(canon_rep(t, f));
            for (std::size_t i = 0; i < tags.size(); ++i)
                for (std::size_t j = i + 1; j < tags.size(); ++j) {
                    // the four subspace table lists I(n) and 0(n, p = t - 1)
                    // separately, but they are isomorphic
                    bool known = c == Category::F &&
                                 ((tags[i].family == Family::Zero && tags[j].family == Family::I &&
                                   *tags[i].p == Poly::from_ints(f, {-1, 1})));
                    if (known) continue;
                    CAPTURE(tag_str(tags[i]));
                    CAPTURE(tag_str(tags[j]));
                    REQUIRE_FALSE(object_isomorphic(objs[i], objs[j]));
                }
        }
}

TEST_CASE("I(n) and 0(n, p = t - 1) coincide in the four subspace table") {
    for (Field f : {Field::prime(2), Field::prime(3)})
        for (int n = 1; n <= 3; ++n) {
            Object a = canon_rep({Category::F, Family::I, n}, f);
            Object b = canon_rep({Category::F, Family::Zero, n, Poly::from_ints(f, {-1, 1}), n, ""}, f);
            CHECK(object_isomorphic(a, b));
        }
}

TEST_CASE("property: classify inverts canon_rep") {
    for (Field f : {Field::prime(2), Field::prime(3)})
        for (Category c : kAll)
            for (auto& t : tags_upto(c, f, 3)) {
                if (c == Category::F && t.family == Family::I) continue;  // reported as 0(n, p = t - 1)
                auto got = classify(canon_rep(t, f));
                CAPTURE(tag_str(t));
                REQUIRE(got.size() == 1);
                REQUIRE(got[0].mult == 1);
                REQUIRE(got[0].tag == t);
            }
}

TEST_CASE("classify direct sums") {
    Field f5 = Field::prime(5);
    Rng rng(3);
    Object a = canon_rep({Category::C, Family::II, 1}, f5), b = canon_rep({Category::C, Family::III, 0}, f5);
    Rep s = conjugate(std::get<Rep>(object_direct_sum(a, b)), rng);
    auto got = classify(s);
    REQUIRE(got.size() == 2);
    CHECK(tag_str(got[0].tag) == "C:II(1)");
    CHECK(tag_str(got[1].tag) == "C:III(0)");
    Object iv = canon_rep({Category::F, Family::IV, 2}, f5);
    auto one = classify(object_direct_sum(iv, iv));
    REQUIRE(one.size() == 1);
    CHECK(one[0].mult == 2);
    CHECK(tag_str(one[0].tag) == "F:IV(2)");
}

TEST_CASE("property: images of canonical source objects are canonical F objects") {
    Field f = Field::prime(2);
    const Category src[] = {Category::S, Category::D, Category::K, Category::C, Category::LinRel1, Category::PairRel};
    for (int i = 1; i <= 6; ++i)
        for (auto& t : tags_upto(src[i - 1], f, 2)) {
            Rep v = apply_functor(i, canon_rep(t, f));
            CAPTURE(tag_str(t));
            REQUIRE(in_image(i, v).member);
            auto got = classify(v);
            REQUIRE(got.size() == 1);
            REQUIRE(got[0].tag.family != Family::V);
            REQUIRE(got[0].tag.family != Family::VStar);
        }
}
