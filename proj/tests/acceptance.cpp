// Acceptance runner: one PASS/FAIL line per criterion. With a number as the
// only argument, runs just that criterion.
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "fsp/error.hpp"
#include "fsp/oracle.hpp"
#include "gen.hpp"

using namespace fsp;
using namespace gen;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure; later checks only count.
struct Tally {
    long checks = 0;
    long failed = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failed++ == 0) first = what;
    }
    Outcome outcome(const std::string& summary) const {
        if (failed == 0) return {true, summary + ", " + std::to_string(checks) + " checks"};
        return {false, std::to_string(failed) + " of " + std::to_string(checks) + " checks failed; first: " + first};
    }
};

const Category kSources[] = {Category::S, Category::D, Category::K, Category::C, Category::LinRel1, Category::PairRel};

// Source object of functor i with total dimension at most `cap` (ambient
// total for relations).
SourceObj random_source(int i, Field f, std::size_t cap, Rng& rng) {
    if (i <= 4) {
        Quiver q = source_quiver(i);
        std::size_t k = quiver_info(q).labels.size();
        for (;;) {
            std::vector<std::size_t> d(k);
            std::size_t sum = 0;
            for (auto& x : d) sum += x = rng.below(cap / 2 + 1);
            if (sum <= cap) return random_rep(q, f, d, rng);
        }
    }
    if (i == 5) {
        std::size_t n = rng.below(cap / 2 + 1);
        return random_rel(f, n, n, rng.below(2 * n + 1), rng);
    }
    std::size_t a = rng.below(cap / 2 + 1), b = rng.below(cap - a + 1);
    return random_pair(f, a, b, rng.below(a + b + 1), rng.below(a + b + 1), rng);
}

Object scramble(const Object& o, Rng& rng) {
    if (auto* v = std::get_if<Rep>(&o)) return conjugate(*v, rng);
    if (auto* r = std::get_if<RelObj>(&o)) {
        Matrix g = random_invertible(r->field, r->dim1, rng);
        return rel_change_basis(*r, g, g);
    }
    auto& p = std::get<PairRelObj>(o);
    return pair_change_basis(p, random_invertible(p.field, p.dim1, rng), random_invertible(p.field, p.dim2, rng));
}

bool source_iso(int i, const SourceObj& a, const SourceObj& b) {
    if (i <= 4) return is_isomorphic(std::get<Rep>(a), std::get<Rep>(b));
    if (i == 5) return rel_is_isomorphic(std::get<RelObj>(a), std::get<RelObj>(b), RelKind::OneSpace);
    return pair_is_isomorphic(std::get<PairRelObj>(a), std::get<PairRelObj>(b));
}

Outcome completeness() {
    Field f2 = Field::prime(2);
    CensusOptions opt;
    opt.parallel = true;
    opt.strict = false;
    std::vector<std::pair<Category, std::size_t>> runs{{Category::K, 4},       {Category::C, 4},
                                                       {Category::D, 4},       {Category::S, 4},
                                                       {Category::LinRel1, 4}, {Category::PairRel, 4},
                                                       {Category::F, 5}};
    std::ostringstream bad, info;
    std::size_t unmatched = 0;
    for (auto [c, max] : runs) {
        std::vector<std::string> skipped;
        auto reports = census_sweep(c, f2, max, opt, &skipped);
        std::size_t indec = 0, miss = 0;
        for (auto& r : reports) {
            indec += r.indecomposable_count();
            if (r.unmatched_count()) bad << " " << category_name(c) << "(" << dims_str(r.dims) << ")x" << r.unmatched_count();
            miss += r.unmatched_count();
        }
        unmatched += miss;
        info << " " << category_name(c) << ":" << indec << "/" << miss;
        if (!skipped.empty()) info << " (" << skipped.size() << " vectors over the guard skipped)";
    }
    std::string summary = "indecomposable/unmatched per category:" + info.str();
    if (unmatched) return {false, summary + "; unmatched in" + bad.str()};
    return {true, summary};
}

Outcome kronecker_count() {
    Tally t;
    for (std::uint32_t q : {2u, 3u}) {
        CensusReport r = census(Category::K, Field::prime(q), {1, 1});
        std::string qs = "F" + std::to_string(q);
        t.expect(r.indecomposable_count() == q + 1, qs + ": " + std::to_string(r.indecomposable_count()) + " classes");
        std::size_t zero = 0, first = 0, second = 0;
        for (auto& c : r.classes) {
            if (!c.indecomposable || !c.tag) continue;
            zero += c.tag->family == Family::Zero && c.tag->p->degree() == 1 && c.tag->s == 1;
            first += c.tag->family == Family::I;
            second += c.tag->family == Family::ISecond;
        }
        t.expect(zero == q - 1 && first == 1 && second == 1, qs + ": family structure");
    }
    return t.outcome("q + 1 classes for q = 2, 3");
}

Outcome full_faithfulness() {
    Tally t;
    Rng rng(101);
    std::size_t homs = 0;
    for (int i = 1; i <= 6; ++i)
        for (int k = 0; k < 100; ++k) {
            Field f = Field::prime(k % 2 ? 3 : 2);
            SourceObj a = random_source(i, f, 6, rng), b = random_source(i, f, 6, rng);
            HomTransport h = hom_transport_check(i, a, b);
            homs += h.dim_source;
            t.expect(h.bijective && h.dim_source == h.dim_target,
                     "F" + std::to_string(i) + " pair " + std::to_string(k));
        }
    return t.outcome("100 pairs per functor over F2/F3, total Hom dimension " + std::to_string(homs));
}

Outcome non_density() {
    Tally t;
    for (Field f : {Field::prime(2), Field::prime(3)})
        for (const char* tag : {"F:V(1)", "F:V*(1)"}) {
            Rep v = std::get<Rep>(canon_rep(parse_tag(tag, f), f));
            for (int i = 1; i <= 6; ++i)
                t.expect(!in_image(i, v).member, std::string(tag) + " in image " + std::to_string(i));
        }
    return t.outcome("V(1), V*(1) outside all six images");
}

Outcome hierarchy() {
    Tally t;
    Rng rng(103);
    for (int i = 1; i <= 6; ++i)
        for (int k = 0; k < 50; ++k) {
            Field f = Field::prime(k % 2 ? 3 : 2);
            Rep v = conjugate(apply_functor(i, random_source(i, f, 6, rng)), rng);
            bool m[7];
            for (int j = 1; j <= 6; ++j) m[j] = in_image(j, v).member;
            std::string at = category_name(kSources[i - 1]) + " object " + std::to_string(k);
            t.expect(m[i], at + ": own image");
            t.expect(!m[3] || m[2], at + ": 3 => 2");
            t.expect(!m[4] || m[2], at + ": 4 => 2");
            t.expect(!m[2] || m[1], at + ": 2 => 1");
            t.expect(!m[5] || m[1], at + ": 5 => 1");
            t.expect(!m[6] || m[1], at + ": 6 => 1");
        }
    return t.outcome("50 images per source category");
}

Outcome witnesses() {
    Tally t;
    Rng rng(107);
    for (int i = 1; i <= 6; ++i)
        for (int k = 0; k < 50; ++k) {
            Field f = Field::prime(k % 2 ? 3 : 2);
            SourceObj x = random_source(i, f, 6, rng);
            Rep v = conjugate(apply_functor(i, x), rng);
            ImageResult r = in_image(i, v);
            std::string at = "F" + std::to_string(i) + " object " + std::to_string(k);
            t.expect(r.member, at + ": not in image (" + r.reason + ")");
            if (!r.member) continue;
            t.expect(is_isomorphic(apply_functor(i, *r.witness), v), at + ": witness image");
            t.expect(source_iso(i, *r.witness, x), at + ": witness class");
        }
    return t.outcome("50 objects per functor");
}

Outcome nhat_family() {
    Tally t;
    int count = 0;
    for (std::uint32_t q : {2u, 3u}) {
        Field f = Field::prime(q);
        for (int d = 1; d <= 2; ++d)
            for (auto& p : monic_irreducibles(f, d)) {
                if (p == Poly::monomial(f, 1)) continue;
                for (int s = 1; s * d <= 3; ++s) {
                    ++count;
                    std::string at = "F" + std::to_string(q) + " p=" + p.str() + " s=" + std::to_string(s);
                    Rep v = nhat(p, s);
                    std::size_t r = s * d;
                    t.expect(v.dims == std::vector<std::size_t>{2 * r, r, r, r, r}, at + ": dims");
                    t.expect(is_indecomposable(v), at + ": decomposable");
                    auto c = classify(v);
                    t.expect(c.size() == 1 && c[0].mult == 1 && c[0].tag.p && *c[0].tag.p == p && c[0].tag.s == s,
                             at + ": tag " + (c.empty() ? std::string("none") : tag_str(c[0].tag)));
                }
            }
    }
    return t.outcome(std::to_string(count) + " (p, s) pairs");
}

std::vector<IndecompTag> sample_pool(Category c, Field f) {
    std::vector<IndecompTag> out;
    for (Family fam : families(c)) {
        if (fam >= Family::Inj1) {
            out.push_back({c, fam, 0, std::nullopt, 0, ""});
            continue;
        }
        if (c == Category::F && fam == Family::I) continue;  // listed again as 0(n, p = t - 1)
        for (int n = min_n(c, fam); n <= 2; ++n) {
            if (fam != Family::Zero) {
                out.push_back({c, fam, n, std::nullopt, 0, ""});
                continue;
            }
            for (int d = 1; d <= n; ++d)
                if (n % d == 0)
                    for (auto& p : monic_irreducibles(f, d))
                        if (p != Poly::monomial(f, 1)) out.push_back({c, fam, n, p, n / d, ""});
        }
    }
    return out;
}

Outcome krull_schmidt() {
    Tally t;
    Rng rng(109);
    const Category all[] = {Category::F, Category::S, Category::D, Category::K, Category::C,
                            Category::LinRel1, Category::PairRel};
    for (Category c : all)
        for (std::uint32_t q : {2u, 5u}) {
            Field f = Field::prime(q);
            auto pool = sample_pool(c, f);
            for (int k = 0; k < 100; ++k) {
                std::map<std::string, int> want, got;
                Object sum = object_zero(c, f);
                int parts = 1 + static_cast<int>(rng.below(4));
                for (int j = 0; j < parts; ++j) {
                    const IndecompTag& tag = pool[rng.below(pool.size())];
                    ++want[tag_str(tag)];
                    sum = object_direct_sum(sum, canon_rep(tag, f));
                }
                std::string at = category_name(c) + " over F" + std::to_string(q) + " sample " + std::to_string(k);
                try {
                    for (auto& x : classify(scramble(sum, rng), k)) got[tag_str(x.tag)] += x.mult;
                } catch (const Error& e) {
                    t.expect(false, at + ": " + e.what());
                    continue;
                }
                t.expect(got == want, at);
            }
        }
    return t.outcome("200 sums per category");
}

Outcome extension_closure() {
    Tally t;
    Rng rng(113);
    Field f = Field::prime(3);
    for (int k = 0; k < 60; ++k) {
        std::size_t n = 1 + rng.below(2), m = 1 + rng.below(2);
        Rep u = conjugate(apply_functor(5, random_rel(f, n, n, rng.below(2 * n + 1), rng)), rng);
        Rep w = conjugate(apply_functor(5, random_rel(f, m, m, rng.below(2 * m + 1), rng)), rng);
        Rep v = random_extension(u, w, k);
        std::string at = "extension " + std::to_string(k);
        t.expect(in_image(5, v).member, at + ": not in C5");
        try {
            ExtensionWitness x = extension_witness_c5(u, v, w);
            t.expect(v.mats[2] == v.mats[0] * x.eps + v.mats[1] * x.zeta, at + ": gamma equation");
            t.expect(inverse(x.eps).has_value() && inverse(x.zeta).has_value(), at + ": witness not invertible");
        } catch (const Error& e) {
            t.expect(false, at + ": " + e.what());
        }
    }
    return t.outcome("60 extensions over F3");
}

Outcome relation_axioms() {
    Tally t;
    Rng rng(127);
    for (int k = 0; k < 120; ++k) {
        Field f = Field::prime(k % 2 ? 5 : 2);
        std::string at = "sample " + std::to_string(k);
        // idempotent: projection onto a summand of a scrambled direct sum
        std::size_t n1 = 1 + rng.below(2), n2 = rng.below(3);
        RelObj a = random_rel(f, n1, n1, rng.below(2 * n1 + 1), rng);
        RelObj b = random_rel(f, n2, n2, rng.below(2 * n2 + 1), rng);
        Matrix g = random_invertible(f, n1 + n2, rng);
        RelObj s = rel_change_basis(rel_direct_sum(a, b), g, g);
        Matrix e = g * direct_sum(Matrix::identity(f, n1), Matrix(f, n2, n2)) * *inverse(g);
        IdempotentSplit sp = rel_split_idempotent(s, {e, e});
        Matrix one = Matrix::identity(f, sp.sigma.dim1);
        t.expect(sp.q.f1 * sp.p.f1 == e && sp.q.f2 * sp.p.f2 == e, at + ": qp != e");
        t.expect(sp.p.f1 * sp.q.f1 == one && sp.p.f2 * sp.q.f2 == one, at + ": pq != 1");
        t.expect(is_rel_morphism(s, sp.sigma, sp.p) && is_rel_morphism(sp.sigma, s, sp.q), at + ": not morphisms");
        // dual dimension
        std::size_t d1 = rng.below(4), d2 = rng.below(4);
        RelObj r = random_rel(f, d1, d2, rng.below(d1 + d2 + 1), rng);
        RelObj rd = rel_dual(r);
        t.expect(rd.dim() == d1 + d2 - r.dim() && rd.dim1 == d1 && rd.dim2 == d2, at + ": dim R*");
        // associativity
        std::size_t x0 = rng.below(4), x1 = rng.below(4), x2 = rng.below(4), x3 = rng.below(4);
        RelObj r1 = random_rel(f, x0, x1, rng.below(x0 + x1 + 1), rng);
        RelObj r2 = random_rel(f, x1, x2, rng.below(x1 + x2 + 1), rng);
        RelObj r3 = random_rel(f, x2, x3, rng.below(x2 + x3 + 1), rng);
        t.expect(rel_compose(r3, rel_compose(r2, r1)) == rel_compose(rel_compose(r3, r2), r1), at + ": associativity");
    }
    return t.outcome("120 idempotents, duals and triples");
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"completeness census", completeness},
        {"Kronecker (1,1) count", kronecker_count},
        {"full faithfulness", full_faithfulness},
        {"non-density of V and V*", non_density},
        {"image hierarchy", hierarchy},
        {"roundtrip witnesses", witnesses},
        {"N-hat family", nhat_family},
        {"Krull-Schmidt roundtrip", krull_schmidt},
        {"extension closure of C5", extension_closure},
        {"linear relation axioms", relation_axioms},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (only && static_cast<int>(k) + 1 != only) continue;
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw ") + e.what()};
        }
        all = all && o.pass;
        std::printf("criterion %zu %s: %s (%s)\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
