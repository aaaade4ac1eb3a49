#include "fsp/canon.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "fsp/error.hpp"

namespace fsp {

namespace {

struct FamilyName {
    Family f;
    const char* text;
    const char* alias;
};

constexpr std::array<FamilyName, 14> kFamilyNames{{
    {Family::Zero, "0", "Zero"},
    {Family::I, "I", "I"},
    {Family::ISecond, "I_second_variant", "I'"},
    {Family::II, "II", "II"},
    {Family::III, "III", "III"},
    {Family::IIIStar, "III*", "IIIStar"},
    {Family::IV, "IV", "IV"},
    {Family::IVStar, "IV*", "IVStar"},
    {Family::V, "V", "V"},
    {Family::VStar, "V*", "VStar"},
    {Family::Inj1, "Inj1", "Inj1"},
    {Family::Inj2, "Inj2", "Inj2"},
    {Family::Inj3, "Inj3", "Inj3"},
    {Family::Inj4, "Inj4", "Inj4"},
}};

[[noreturn]] void bad_tag(const std::string& msg) { fail("InvalidTag", msg); }

}  // namespace

std::string category_name(Category c) {
    switch (c) {
        case Category::F: return "F";
        case Category::S: return "S";
        case Category::D: return "D";
        case Category::K: return "K";
        case Category::C: return "C";
        case Category::LinRel1: return "LinRel1";
        case Category::PairRel: return "PairRel";
    }
    return "?";
}

Category parse_category(std::string_view s) {
    for (Category c : {Category::F, Category::S, Category::D, Category::K, Category::C, Category::LinRel1,
                       Category::PairRel})
        if (s == category_name(c)) return c;
    bad_tag("unknown category '" + std::string(s) + "'");
}

std::string family_name(Family f) {
    for (auto& x : kFamilyNames)
        if (x.f == f) return x.text;
    return "?";
}

Family parse_family(std::string_view s) {
    for (auto& x : kFamilyNames)
        if (s == x.text || s == x.alias) return x.f;
    bad_tag("unknown type '" + std::string(s) + "'");
}

std::vector<Family> families(Category c) {
    using enum Family;
    switch (c) {
        case Category::F: return {Zero, I, II, III, IIIStar, IV, IVStar, V, VStar, Inj1, Inj2, Inj3, Inj4};
        case Category::S:
        case Category::D:
        case Category::PairRel: return {Zero, I, II, III, IIIStar, IV, IVStar};
        case Category::K:
        case Category::C: return {Zero, I, ISecond, II, III};
        case Category::LinRel1: return {Zero, I, II, III};
    }
    return {};
}

int min_n(Category c, Family f) {
    switch (f) {
        case Family::Zero:
        case Family::I:
        case Family::ISecond: return 1;
        case Family::III: return c == Category::LinRel1 ? 1 : 0;
        case Family::IVStar: return c == Category::PairRel ? 1 : 0;
        default: return 0;
    }
}

std::vector<std::string> symmetries(Category c) {
    switch (c) {
        case Category::F: {
            std::vector<std::string> out;
            std::string p = "1234";
            do out.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
            out[0] = "";
            return out;
        }
        case Category::S: return {"", "2134", "1243", "2143"};
        case Category::LinRel1: return {"", "inv"};
        case Category::PairRel: return {"", "swapR", "swapV", "swapRV"};
        default: return {""};
    }
}

std::string tag_str(const IndecompTag& t) {
    std::string out = category_name(t.category) + ":" + family_name(t.family) + "(" + std::to_string(t.n);
    if (t.p) out += ",p=" + t.p->str() + ",s=" + std::to_string(t.s);
    if (!t.sym.empty()) out += ",sym=" + t.sym;
    return out + ")";
}

IndecompTag parse_tag(std::string_view text, Field f) {
    IndecompTag t;
    auto colon = text.find(':');
    if (colon == std::string_view::npos) bad_tag("tag needs '<category>:<type>(<n>...)'");
    t.category = parse_category(text.substr(0, colon));
    std::string_view rest = text.substr(colon + 1);
    auto open = rest.find('(');
    t.family = parse_family(rest.substr(0, open));
    if (open == std::string_view::npos) {
        if (t.family < Family::Inj1) bad_tag("tag needs a parameter list");
        return t;
    }
    if (rest.back() != ')') bad_tag("unterminated parameter list");
    std::string_view args = rest.substr(open + 1, rest.size() - open - 2);
    bool first = true;
    while (!args.empty()) {
        auto comma = args.find(',');
        std::string_view a = args.substr(0, comma);
        args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
        auto parse_int = [&](std::string_view s) {
            if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit((unsigned char)ch); }))
                bad_tag("expected a nonnegative integer, got '" + std::string(s) + "'");
            return std::stoi(std::string(s));
        };
        if (first) {
            t.n = parse_int(a);
            first = false;
        } else if (a.starts_with("p=")) {
            try {
                t.p = Poly::parse(f, a.substr(2));
            } catch (const Error& e) {
                bad_tag(std::string("bad polynomial: ") + e.what());
            }
        } else if (a.starts_with("s=")) {
            t.s = parse_int(a.substr(2));
        } else if (a.starts_with("sym=")) {
            t.sym = std::string(a.substr(4));
        } else {
            bad_tag("unknown tag parameter '" + std::string(a) + "'");
        }
    }
    return t;
}

Category category_of(const Object& obj) {
    if (auto r = std::get_if<Rep>(&obj)) {
        switch (r->quiver) {
            case Quiver::F: return Category::F;
            case Quiver::S: return Category::S;
            case Quiver::D: return Category::D;
            case Quiver::K: return Category::K;
            case Quiver::C: return Category::C;
        }
    }
    if (std::holds_alternative<RelObj>(obj)) return Category::LinRel1;
    return Category::PairRel;
}

std::vector<std::size_t> object_dims(const Object& obj) {
    if (auto r = std::get_if<Rep>(&obj)) return r->dims;
    if (auto r = std::get_if<RelObj>(&obj)) return {r->dim1, r->dim()};
    const auto& p = std::get<PairRelObj>(obj);
    return {p.dim1, p.dim2, p.basis1.cols(), p.basis2.cols()};
}

namespace {

std::vector<std::size_t> base_dims(Category c, Family f, std::size_t n) {
    using enum Family;
    const std::size_t m = n + 1;
    switch (c) {
        case Category::F:
            switch (f) {
                case Zero:
                case I: return {2 * n, n, n, n, n};
                case II: return {2 * n + 1, m, m, n, n};
                case III: return {2 * n + 1, m, n, n, n};
                case IIIStar: return {2 * n + 1, n, m, m, m};
                case IV: return {2 * n + 2, m, m, m, n};
                case IVStar: return {2 * n + 2, m, m, m, n + 2};
                case V: return {2 * n + 1, n, n, n, n};
                case VStar: return {2 * n + 1, m, m, m, m};
                case Inj1: return {0, 1, 0, 0, 0};
                case Inj2: return {0, 0, 1, 0, 0};
                case Inj3: return {0, 0, 0, 1, 0};
                case Inj4: return {0, 0, 0, 0, 1};
                default: break;
            }
            break;
        case Category::S:
        case Category::PairRel:
            switch (f) {
                case Zero:
                case I: return {n, n, n, n};
                case II: return {m, n, m, n};
                case III: return {m, n, n, n};
                case IIIStar: return {n, m, m, m};
                case IV: return {m, m, m, n};
                case IVStar: return {n, n, n, m};
                default: break;
            }
            break;
        case Category::D:
            switch (f) {
                case Zero:
                case I: return {n, n, n};
                case II: return {m, n, m};
                case III: return {m, n, n};
                case IIIStar: return {n, m, m};
                case IV: return {m, m, n};
                case IVStar: return {n, n, m};
                default: break;
            }
            break;
        case Category::K:
        case Category::C:
            switch (f) {
                case Zero:
                case I:
                case ISecond: return {n, n};
                case II: return c == Category::K ? std::vector<std::size_t>{m, n} : std::vector<std::size_t>{n, m};
                case III: return c == Category::K ? std::vector<std::size_t>{n, m} : std::vector<std::size_t>{m, n};
                default: break;
            }
            break;
        case Category::LinRel1:
            switch (f) {
                case Zero:
                case I: return {n, n};
                case II: return {m, n};
                case III: return {n, m};
                default: break;
            }
            break;
    }
    bad_tag("type " + family_name(f) + " does not occur for category " + category_name(c));
}

std::vector<int> digits(const std::string& sym) {
    std::vector<int> d;
    for (char ch : sym) d.push_back(ch - '0');
    return d;
}

// sigma[k] = position of v whose role position k takes over
Rep permute_vertices(const Rep& v, const std::vector<int>& sigma) {
    const auto& info = quiver_info(v.quiver);
    std::vector<std::size_t> dims(v.dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) dims[k] = v.dims[sigma[k]];
    std::vector<Matrix> mats;
    for (auto& a : info.arrows) {
        int s = sigma[a.src], t = sigma[a.tgt];
        bool found = false;
        for (std::size_t b = 0; b < info.arrows.size(); ++b)
            if (info.arrows[b].src == s && info.arrows[b].tgt == t) {
                mats.push_back(v.mats[b]);
                found = true;
            }
        if (!found) bad_tag("vertex permutation does not preserve the arrows");
    }
    return make_rep(v.quiver, v.field, dims, mats);
}

void check_sym(Category c, const std::string& sym) {
    if (sym.empty()) return;
    auto all = symmetries(c);
    if (std::find(all.begin(), all.end(), sym) == all.end())
        bad_tag("symmetry '" + sym + "' is not available for category " + category_name(c));
}

std::vector<std::size_t> permute_dims(Category c, const std::string& sym, const std::vector<std::size_t>& d) {
    if (sym.empty()) return d;
    switch (c) {
        case Category::F: {
            auto s = digits(sym);
            return {d[0], d[s[0]], d[s[1]], d[s[2]], d[s[3]]};
        }
        case Category::S: {
            auto s = digits(sym);
            return {d[s[0] - 1], d[s[1] - 1], d[s[2] - 1], d[s[3] - 1]};
        }
        case Category::PairRel: {
            auto out = d;
            if (sym == "swapR" || sym == "swapRV") std::swap(out[2], out[3]);
            if (sym == "swapV" || sym == "swapRV") std::swap(out[0], out[1]);
            return out;
        }
        default: return d;
    }
}

void validate_tag(const IndecompTag& t, Field f) {
    auto fams = families(t.category);
    if (std::find(fams.begin(), fams.end(), t.family) == fams.end())
        bad_tag("type " + family_name(t.family) + " does not occur for category " + category_name(t.category));
    check_sym(t.category, t.sym);
    if (t.family >= Family::Inj1) {
        if (t.n != 0) bad_tag("injectives take n = 0");
    } else if (t.n < min_n(t.category, t.family)) {
        bad_tag(tag_str(t) + ": n must be at least " + std::to_string(min_n(t.category, t.family)));
    }
    if (t.family == Family::Zero) {
        if (!t.p) bad_tag("type 0 needs p and s");
        if (t.p->field() != f) bad_tag("polynomial over the wrong field");
        if (t.s < 1 || t.p->degree() < 1 || t.s * t.p->degree() != t.n) bad_tag("type 0 needs n = s deg p");
        if (*t.p == Poly::monomial(f, 1)) bad_tag("type 0 excludes p = t");
    } else if (t.p) {
        bad_tag("only type 0 carries a polynomial");
    }
}

}  // namespace

std::vector<std::size_t> tag_dims(const IndecompTag& t) {
    return permute_dims(t.category, t.sym, base_dims(t.category, t.family, t.n));
}

Rep nhat(const Poly& p, int s) {
    const Field f = p.field();
    Matrix T = companion(p, s);
    const std::size_t r = T.rows();
    Matrix id = Matrix::identity(f, r), z(f, r, r);
    return make_rep(Quiver::F, f, {2 * r, r, r, r, r},
                    {vstack(id, z), vstack(z, id), vstack(id, id), vstack(T, id)});
}

namespace {

Matrix Id(Field f, std::size_t n) { return Matrix::identity(f, n); }
Matrix Zm(Field f, std::size_t r, std::size_t c) { return Matrix(f, r, c); }

Matrix v3(const Matrix& a, const Matrix& b, const Matrix& c) { return vstack(vstack(a, b), c); }

// 1 x width row with a single 1 in column `at`
Matrix unit_row(Field f, std::size_t width, std::size_t at) {
    Matrix m(f, 1, width);
    if (width) m(0, at) = f.one();
    return m;
}

// Tetrad presentations of the four subspace table, as F-reps with
// f_alpha .. f_delta the four column stripes.
Rep tetrad(Field f, std::vector<Matrix> cols) {
    std::vector<std::size_t> dims{cols[0].rows()};
    for (auto& c : cols) dims.push_back(c.cols());
    return make_rep(Quiver::F, f, dims, std::move(cols));
}

Rep canon_f(Family fam, std::size_t n, Field f, const IndecompTag& t) {
    using enum Family;
    const std::size_t m = n + 1;
    switch (fam) {
        case Zero: return nhat(*t.p, t.s);
        case I:
            return tetrad(f, {vstack(Id(f, n), Zm(f, n, n)), vstack(Id(f, n), Id(f, n)), vstack(Zm(f, n, n), Id(f, n)),
                              vstack(jordan_plus(f, n), Id(f, n))});
        case II:
            return tetrad(f, {vstack(Id(f, m), Zm(f, n, m)), vstack(Id(f, m), i_left(f, n)),
                              vstack(i_down(f, n), Id(f, n)), vstack(Zm(f, m, n), Id(f, n))});
        case III:
            return tetrad(f, {vstack(Id(f, m), Zm(f, n, m)), vstack(Zm(f, m, n), Id(f, n)), vstack(i_up(f, n), Id(f, n)),
                              vstack(i_down(f, n), Id(f, n))});
        case IIIStar:
            return tetrad(f, {vstack(Id(f, n), Zm(f, m, n)), vstack(Zm(f, n, m), Id(f, m)),
                              vstack(i_left(f, n), Id(f, m)), vstack(i_right(f, n), Id(f, m))});
        case IV:
            return tetrad(f, {vstack(Id(f, m), Zm(f, m, m)), vstack(Zm(f, m, m), Id(f, m)), vstack(Id(f, m), Id(f, m)),
                              vstack(i_up(f, n), i_down(f, n))});
        case IVStar:
            return tetrad(f, {vstack(Id(f, m), Zm(f, m, m)), vstack(Zm(f, m, m), Id(f, m)), vstack(Id(f, m), Id(f, m)),
                              vstack(i_left(f, m), i_right(f, m))});
        case V: {
            // row blocks (n, n, 1); the last row of the gamma and delta
            // stripes carries a single 1
            Matrix e = unit_row(f, n, 0), z = Zm(f, 1, n);
            Matrix J = jordan_plus(f, n);
            return tetrad(f, {v3(Id(f, n), Zm(f, n, n), z), v3(Zm(f, n, n), Id(f, n), z), v3(J, Id(f, n), e),
                              v3(Id(f, n), J, e)});
        }
        case VStar: {
            Matrix e = unit_row(f, m, 0);
            return tetrad(f, {v3(i_left(f, n), Zm(f, n, m), e), v3(i_left(f, n), i_right(f, n), e),
                              v3(i_right(f, n), i_left(f, n), e), v3(Zm(f, n, m), i_left(f, n), e)});
        }
        case Inj1:
        case Inj2:
        case Inj3:
        case Inj4: return zero_rep(Quiver::F, f, base_dims(Category::F, fam, 0));
        default: break;
    }
    bad_tag("no such F type");
}

Matrix regular_block(const IndecompTag& t, Field f) {
    return t.family == Family::Zero ? companion(*t.p, t.s) : jordan_plus(f, t.n);
}

Object canon_base(const IndecompTag& t, Field f) {
    using enum Family;
    const std::size_t n = t.n, m = n + 1;
    const Family fam = t.family;
    switch (t.category) {
        case Category::F: return canon_f(fam, n, f, t);
        case Category::S: {
            // arrows alpha, beta, gamma, delta
            auto s = [&](Matrix a, Matrix b, Matrix c, Matrix d) {
                std::vector<std::size_t> dims{a.rows(), b.rows(), a.cols(), c.cols()};
                return make_rep(Quiver::S, f, dims, {a, b, c, d});
            };
            switch (fam) {
                case Zero:
                case I: return s(Id(f, n), Id(f, n), regular_block(t, f), Id(f, n));
                case II: return s(Id(f, m), i_left(f, n), i_down(f, n), Id(f, n));
                case III: return s(i_up(f, n), Id(f, n), i_down(f, n), Id(f, n));
                case IIIStar: return s(i_left(f, n), Id(f, m), i_right(f, n), Id(f, m));
                case IV: return s(Id(f, m), Id(f, m), i_up(f, n), i_down(f, n));
                case IVStar: return s(Id(f, n), Id(f, n), i_left(f, n), i_right(f, n));
                default: break;
            }
            break;
        }
        case Category::D: {
            // gamma : V2 -> V1, alpha : V3 -> V1, beta : V3 -> V2
            auto d = [&](Matrix g, Matrix a, Matrix b) {
                std::vector<std::size_t> dims{g.rows(), g.cols(), a.cols()};
                return make_rep(Quiver::D, f, dims, {a, b, g});
            };
            switch (fam) {
                case Zero:
                case I: return d(Id(f, n), regular_block(t, f), Id(f, n));
                case II: return d(i_down(f, n), Id(f, m), i_left(f, n));
                case III: return d(i_up(f, n), i_down(f, n), Id(f, n));
                case IIIStar: return d(i_left(f, n), i_right(f, n), Id(f, m));
                case IV: return d(Id(f, m), i_up(f, n), i_down(f, n));
                case IVStar: return d(Id(f, n), i_left(f, n), i_right(f, n));
                default: break;
            }
            break;
        }
        case Category::K: {
            auto k = [&](Matrix a, Matrix b) { return make_rep(Quiver::K, f, {a.rows(), a.cols()}, {a, b}); };
            switch (fam) {
                case Zero:
                case I: return k(Id(f, n), regular_block(t, f));
                case ISecond: return k(jordan_plus(f, n), Id(f, n));
                case II: return k(i_down(f, n), i_up(f, n));
                case III: return k(i_right(f, n), i_left(f, n));
                default: break;
            }
            break;
        }
        case Category::C: {
            // alpha : V2 -> V1, beta : V1 -> V2
            auto c = [&](Matrix b, Matrix a) { return make_rep(Quiver::C, f, {b.cols(), b.rows()}, {a, b}); };
            switch (fam) {
                case Zero:
                case I: return c(regular_block(t, f), Id(f, n));
                case ISecond: return c(Id(f, n), jordan_plus(f, n));
                case II: return c(i_down(f, n), i_left(f, n));
                case III: return c(i_left(f, n), i_down(f, n));
                default: break;
            }
            break;
        }
        case Category::LinRel1: {
            // basis (X; Y) of R inside V (+) V
            auto r = [&](Matrix x, Matrix y) { return make_rel(f, x.rows(), y.rows(), vstack(x, y)); };
            switch (fam) {
                case Zero:
                case I: return r(regular_block(t, f), Id(f, n));
                case II: return r(i_up(f, n), i_down(f, n));
                case III: return r(i_left(f, n), i_right(f, n));
                default: break;
            }
            break;
        }
        case Category::PairRel: {
            // bases of R1 and R2, V1 rows on top
            auto p = [&](Matrix m1, Matrix m2, Matrix n1, Matrix n2) {
                return make_pair_rel(f, m1.rows(), m2.rows(), vstack(m1, m2), vstack(n1, n2));
            };
            switch (fam) {
                case Zero:
                case I: return p(Id(f, n), Id(f, n), regular_block(t, f), Id(f, n));
                case II: return p(Id(f, m), i_left(f, n), i_down(f, n), Id(f, n));
                case III: return p(i_up(f, n), Id(f, n), i_down(f, n), Id(f, n));
                case IIIStar: return p(i_left(f, n), Id(f, m), i_right(f, n), Id(f, m));
                case IV: return p(Id(f, m), Id(f, m), i_up(f, n), i_down(f, n));
                case IVStar: return p(Id(f, n), Id(f, n), i_left(f, n), i_right(f, n));
                default: break;
            }
            break;
        }
    }
    bad_tag("no such type");
}

}  // namespace

Object apply_symmetry(Category c, const std::string& sym, const Object& obj) {
    if (sym.empty()) return obj;
    check_sym(c, sym);
    switch (c) {
        case Category::F: {
            auto s = digits(sym);
            return permute_vertices(std::get<Rep>(obj), {0, s[0], s[1], s[2], s[3]});
        }
        case Category::S: {
            auto s = digits(sym);
            return permute_vertices(std::get<Rep>(obj), {s[0] - 1, s[1] - 1, s[2] - 1, s[3] - 1});
        }
        case Category::LinRel1: return rel_inverse(std::get<RelObj>(obj));
        case Category::PairRel: {
            PairRelObj r = std::get<PairRelObj>(obj);
            if (sym == "swapR" || sym == "swapRV") std::swap(r.basis1, r.basis2);
            if (sym == "swapV" || sym == "swapRV") {
                auto flip = [&](const Matrix& b) { return vstack(b.row_range(r.dim1, r.dim2), b.row_range(0, r.dim1)); };
                r = make_pair_rel(r.field, r.dim2, r.dim1, flip(r.basis1), flip(r.basis2));
            }
            return r;
        }
        default: break;
    }
    bad_tag("no symmetries for category " + category_name(c));
}

Object canon_rep(const IndecompTag& t, Field f) {
    validate_tag(t, f);
    return apply_symmetry(t.category, t.sym, canon_base(t, f));
}

bool object_isomorphic(const Object& a, const Object& b, std::uint64_t seed) {
    if (a.index() != b.index()) return false;
    if (auto r = std::get_if<Rep>(&a)) return is_isomorphic(*r, std::get<Rep>(b), seed);
    if (auto r = std::get_if<RelObj>(&a)) return rel_is_isomorphic(*r, std::get<RelObj>(b), RelKind::OneSpace, seed);
    return pair_is_isomorphic(std::get<PairRelObj>(a), std::get<PairRelObj>(b), seed);
}

namespace {

// F-rep standing in for obj: itself, or its F5 / F6 image (fully faithful,
// so indecomposability and isomorphism carry over).
Rep as_rep(const Object& obj) {
    if (auto r = std::get_if<Rep>(&obj)) return *r;
    if (std::holds_alternative<RelObj>(obj)) return apply_functor(5, obj);
    return apply_functor(6, obj);
}

}  // namespace

bool object_indecomposable(const Object& obj, std::uint64_t seed) { return is_indecomposable(as_rep(obj), seed); }

std::vector<Object> object_decompose_flat(const Object& obj, std::uint64_t seed) {
    std::vector<Object> out;
    if (auto r = std::get_if<Rep>(&obj)) {
        for (auto& x : decompose_flat(*r, seed)) out.push_back(x);
    } else if (auto r = std::get_if<RelObj>(&obj)) {
        for (auto& x : rel_decompose_flat(*r, seed)) out.push_back(x);
    } else {
        for (auto& x : pair_decompose_flat(std::get<PairRelObj>(obj), seed)) out.push_back(x);
    }
    return out;
}

Object object_direct_sum(const Object& a, const Object& b) {
    if (a.index() != b.index()) fail("QuiverMismatch", "direct sum of objects of different categories");
    if (auto r = std::get_if<Rep>(&a)) return direct_sum(*r, std::get<Rep>(b));
    if (auto r = std::get_if<RelObj>(&a)) return rel_direct_sum(*r, std::get<RelObj>(b));
    return pair_direct_sum(std::get<PairRelObj>(a), std::get<PairRelObj>(b));
}

Object object_zero(Category c, Field f) {
    switch (c) {
        case Category::F: return zero_rep(Quiver::F, f, {0, 0, 0, 0, 0});
        case Category::S: return zero_rep(Quiver::S, f, {0, 0, 0, 0});
        case Category::D: return zero_rep(Quiver::D, f, {0, 0, 0});
        case Category::K: return zero_rep(Quiver::K, f, {0, 0});
        case Category::C: return zero_rep(Quiver::C, f, {0, 0});
        case Category::LinRel1: return make_rel(f, 0, 0, Matrix(f, 0, 0));
        case Category::PairRel: return make_pair_rel(f, 0, 0, Matrix(f, 0, 0), Matrix(f, 0, 0));
    }
    return Object{};
}

std::vector<IndecompTag> candidate_tags(Category c, Field f, const std::vector<std::size_t>& dims,
                                        const PolyCandidates& q_candidates) {
    std::vector<IndecompTag> out;
    std::size_t total = 0;
    for (auto d : dims) total += d;
    for (const std::string& sym : symmetries(c)) {
        for (Family fam : families(c)) {
            if (fam >= Family::Inj1) {
                IndecompTag t{c, fam, 0, std::nullopt, 0, sym};
                if (tag_dims(t) == dims) out.push_back(t);
                continue;
            }
            for (std::size_t n = min_n(c, fam); n <= total; ++n) {
                IndecompTag t{c, fam, static_cast<int>(n), std::nullopt, 0, sym};
                if (tag_dims(t) != dims) continue;
                if (fam != Family::Zero) {
                    out.push_back(t);
                    continue;
                }
                if (f.is_rational()) {
                    for (auto& [p, s] : q_candidates)
                        if (p.degree() * s == static_cast<int>(n) && p != Poly::monomial(f, 1)) {
                            t.p = p;
                            t.s = s;
                            out.push_back(t);
                        }
                    continue;
                }
                for (std::size_t deg = 1; deg <= n; ++deg) {
                    if (n % deg) continue;
                    for (auto& p : monic_irreducibles(f, static_cast<int>(deg))) {
                        if (p == Poly::monomial(f, 1)) continue;
                        t.p = p;
                        t.s = static_cast<int>(n / deg);
                        out.push_back(t);
                    }
                }
            }
        }
    }
    return out;
}

std::optional<IndecompTag> identify(const Object& x, const PolyCandidates& q_candidates) {
    const Category c = category_of(x);
    const Rep rx = as_rep(x);
    Field f = rx.field;
    for (auto& t : candidate_tags(c, f, object_dims(x), q_candidates)) {
        // canonical objects are indecomposable, which makes this test exact
        if (is_isomorphic_indec(as_rep(canon_rep(t, f)), rx)) return t;
    }
    return std::nullopt;
}

std::vector<Classified> classify(const Object& v, std::uint64_t seed, const PolyCandidates& q_candidates) {
    std::vector<Classified> out;
    for (auto& x : object_decompose_flat(v, seed)) {
        auto t = identify(x, q_candidates);
        if (!t) fail("UnclassifiedSummand", "summand with dims " + [&] {
            std::string s;
            for (auto d : object_dims(x)) s += (s.empty() ? "" : ",") + std::to_string(d);
            return s;
        }() + " matches no tabulated type");
        bool found = false;
        for (auto& c : out)
            if (c.tag == *t) {
                ++c.mult;
                found = true;
            }
        if (!found) out.push_back({*t, 1});
    }
    std::sort(out.begin(), out.end(), [](const Classified& a, const Classified& b) {
        return tag_str(a.tag) < tag_str(b.tag);
    });
    return out;
}

}  // namespace fsp
