#include "fsp/quiver.hpp"

#include <algorithm>

#include "fsp/error.hpp"
#include "fsp/rng.hpp"

namespace fsp {

const QuiverInfo& quiver_info(Quiver q) {
    static const QuiverInfo F{Quiver::F, "F", {0, 1, 2, 3, 4},
                              {{"alpha", 1, 0}, {"beta", 2, 0}, {"gamma", 3, 0}, {"delta", 4, 0}}};
    // positions 0..3 hold vertices 1..4
    static const QuiverInfo S{Quiver::S, "S", {1, 2, 3, 4},
                              {{"alpha", 2, 0}, {"beta", 2, 1}, {"gamma", 3, 0}, {"delta", 3, 1}}};
    static const QuiverInfo D{Quiver::D, "D", {1, 2, 3}, {{"alpha", 2, 0}, {"beta", 2, 1}, {"gamma", 1, 0}}};
    static const QuiverInfo K{Quiver::K, "K", {1, 2}, {{"alpha", 1, 0}, {"beta", 1, 0}}};
    static const QuiverInfo C{Quiver::C, "C", {1, 2}, {{"alpha", 1, 0}, {"beta", 0, 1}}};
    switch (q) {
        case Quiver::F: return F;
        case Quiver::S: return S;
        case Quiver::D: return D;
        case Quiver::K: return K;
        case Quiver::C: return C;
    }
    fail("Internal", "unknown quiver");
}

Quiver parse_quiver(std::string_view s) {
    if (s == "F") return Quiver::F;
    if (s == "S") return Quiver::S;
    if (s == "D") return Quiver::D;
    if (s == "K") return Quiver::K;
    if (s == "C") return Quiver::C;
    fail("ParseError", "unknown quiver '" + std::string(s) + "'");
}

std::string quiver_name(Quiver q) { return quiver_info(q).name; }

std::size_t Rep::total_dim() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
}

bool operator<(const Rep& a, const Rep& b) {
    if (a.quiver != b.quiver) return a.quiver < b.quiver;
    if (a.dims != b.dims) return a.dims < b.dims;
    return a.mats < b.mats;
}

Rep zero_rep(Quiver q, Field f, const std::vector<std::size_t>& dims) {
    const auto& info = quiver_info(q);
    if (dims.size() != info.labels.size()) fail("ShapeError", "quiver " + info.name + " needs " + std::to_string(info.labels.size()) + " dimensions");
    Rep v{q, f, dims, {}};
    for (auto& a : info.arrows) v.mats.emplace_back(f, dims[a.tgt], dims[a.src]);
    return v;
}

Rep make_rep(Quiver q, Field f, const std::vector<std::size_t>& dims, std::vector<Matrix> mats) {
    Rep v{q, f, dims, std::move(mats)};
    validate(v);
    return v;
}

void validate(const Rep& v) {
    const auto& info = quiver_info(v.quiver);
    if (v.dims.size() != info.labels.size())
        fail("ShapeError", "quiver " + info.name + " needs " + std::to_string(info.labels.size()) + " dimensions");
    if (v.mats.size() != info.arrows.size())
        fail("ShapeError", "quiver " + info.name + " needs " + std::to_string(info.arrows.size()) + " arrow matrices");
    for (std::size_t a = 0; a < info.arrows.size(); ++a) {
        const auto& ar = info.arrows[a];
        const Matrix& m = v.mats[a];
        if (m.field() != v.field) fail("FieldMismatch", "arrow " + ar.name + " is over " + m.field().str());
        if (m.rows() != v.dims[ar.tgt] || m.cols() != v.dims[ar.src])
            fail("ShapeError", "arrow " + ar.name + " needs a " + std::to_string(v.dims[ar.tgt]) + "x" +
                                   std::to_string(v.dims[ar.src]) + " matrix, got " + std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()));
    }
}

static void check_pair(const Rep& v, const Rep& w) {
    if (v.quiver != w.quiver) fail("QuiverMismatch", quiver_name(v.quiver) + " vs " + quiver_name(w.quiver));
    check_same(v.field, w.field);
}

bool is_morphism(const Rep& v, const Rep& w, const RepMorphism& f) {
    check_pair(v, w);
    const auto& info = quiver_info(v.quiver);
    if (f.comps.size() != v.dims.size()) return false;
    for (std::size_t x = 0; x < v.dims.size(); ++x)
        if (f.comps[x].rows() != w.dims[x] || f.comps[x].cols() != v.dims[x]) return false;
    for (std::size_t a = 0; a < info.arrows.size(); ++a) {
        const auto& ar = info.arrows[a];
        if (f.comps[ar.tgt] * v.mats[a] != w.mats[a] * f.comps[ar.src]) return false;
    }
    return true;
}

RepMorphism identity_morphism(const Rep& v) {
    RepMorphism id;
    for (auto d : v.dims) id.comps.push_back(Matrix::identity(v.field, d));
    return id;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    if (g.comps.size() != f.comps.size()) fail("DimensionMismatch", "morphisms of different quivers");
    RepMorphism h;
    for (std::size_t x = 0; x < f.comps.size(); ++x) h.comps.push_back(g.comps[x] * f.comps[x]);
    return h;
}

bool is_iso_morphism(const RepMorphism& f) {
    return std::all_of(f.comps.begin(), f.comps.end(), [](const Matrix& m) { return is_invertible(m); });
}

RepMorphism combine(const std::vector<RepMorphism>& basis, const std::vector<Scalar>& coeffs) {
    RepMorphism r = basis.at(0);
    for (auto& m : r.comps) m = Matrix(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        for (std::size_t x = 0; x < r.comps.size(); ++x) r.comps[x] = r.comps[x] + scalar_mul(coeffs[i], basis[i].comps[x]);
    }
    return r;
}

std::vector<RepMorphism> hom_basis(const Rep& v, const Rep& w) {
    check_pair(v, w);
    const auto& info = quiver_info(v.quiver);
    const std::size_t nv = v.dims.size();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t x = 0; x < nv; ++x) off[x + 1] = off[x] + w.dims[x] * v.dims[x];
    const std::size_t unknowns = off[nv];
    std::size_t eqs = 0;
    for (auto& ar : info.arrows) eqs += w.dims[ar.tgt] * v.dims[ar.src];
    Matrix sys(v.field, eqs, unknowns);
    std::size_t row = 0;
    for (std::size_t a = 0; a < info.arrows.size(); ++a) {
        const int s = info.arrows[a].src, t = info.arrows[a].tgt;
        const Matrix& va = v.mats[a];
        const Matrix& wa = w.mats[a];
        // (X_t va - wa X_s)(i,j) = 0
        for (std::size_t i = 0; i < w.dims[t]; ++i)
            for (std::size_t j = 0; j < v.dims[s]; ++j, ++row) {
                for (std::size_t k = 0; k < v.dims[t]; ++k)
                    sys(row, off[t] + i * v.dims[t] + k) = sys(row, off[t] + i * v.dims[t] + k) + va(k, j);
                for (std::size_t k = 0; k < w.dims[s]; ++k)
                    sys(row, off[s] + k * v.dims[s] + j) = sys(row, off[s] + k * v.dims[s] + j) - wa(i, k);
            }
    }
    Matrix ker = kernel_basis(sys);
    std::vector<RepMorphism> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        RepMorphism f;
        for (std::size_t x = 0; x < nv; ++x) {
            Matrix m(v.field, w.dims[x], v.dims[x]);
            for (std::size_t i = 0; i < w.dims[x]; ++i)
                for (std::size_t j = 0; j < v.dims[x]; ++j) m(i, j) = ker(off[x] + i * v.dims[x] + j, c);
            f.comps.push_back(std::move(m));
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t hom_dim(const Rep& v, const Rep& w) { return hom_basis(v, w).size(); }
std::size_t end_dim(const Rep& v) { return hom_dim(v, v); }

Rep direct_sum(const Rep& v, const Rep& w) {
    check_pair(v, w);
    Rep s{v.quiver, v.field, {}, {}};
    for (std::size_t x = 0; x < v.dims.size(); ++x) s.dims.push_back(v.dims[x] + w.dims[x]);
    for (std::size_t a = 0; a < v.mats.size(); ++a) s.mats.push_back(fsp::direct_sum(v.mats[a], w.mats[a]));
    return s;
}

Rep change_basis(const Rep& v, const std::vector<Matrix>& g) {
    const auto& info = quiver_info(v.quiver);
    Rep w = v;
    for (std::size_t a = 0; a < info.arrows.size(); ++a) {
        auto inv = inverse(g[info.arrows[a].src]);
        if (!inv) fail("NotInvertible", "basis change at a vertex is singular");
        w.mats[a] = g[info.arrows[a].tgt] * v.mats[a] * *inv;
    }
    return w;
}

Rep restrict_to(const Rep& v, const std::vector<Matrix>& bases) {
    const auto& info = quiver_info(v.quiver);
    Rep r{v.quiver, v.field, {}, {}};
    for (auto& b : bases) r.dims.push_back(b.cols());
    for (std::size_t a = 0; a < info.arrows.size(); ++a) {
        const auto& ar = info.arrows[a];
        auto x = solve(bases[ar.tgt], v.mats[a] * bases[ar.src]);
        if (!x) fail("NotSubrepresentation", "arrow " + ar.name + " leaves the subspace");
        r.mats.push_back(std::move(*x));
    }
    return r;
}

// ---------------------------------------------------------------- isomorphism

bool is_isomorphic_indec(const Rep& v, const Rep& w) {
    check_pair(v, w);
    if (v.dims != w.dims) return false;
    if (v.is_zero()) return true;
    for (auto& f : hom_basis(v, w))
        if (is_iso_morphism(f)) return true;
    return false;
}

namespace {

bool match_multisets(std::vector<Rep> a, std::vector<Rep> b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j)
            if (!used[j] && is_isomorphic_indec(x, b[j])) used[j] = found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace

bool is_isomorphic(const Rep& v, const Rep& w, std::uint64_t seed) {
    check_pair(v, w);
    if (v.dims != w.dims) return false;
    if (v.is_zero()) return true;
    auto basis = hom_basis(v, w);
    if (basis.empty()) return false;
    for (auto& f : basis)
        if (is_iso_morphism(f)) return true;
    const Field F = v.field;
    const std::size_t d = basis.size();
    // Small coefficient spaces are exhausted, which settles the question.
    if (F.is_prime()) {
        double space = 1;
        for (std::size_t i = 0; i < d; ++i) space *= F.p();
        if (space <= 4096) {
            std::vector<std::uint64_t> idx(d, 0);
            for (;;) {
                std::size_t k = 0;
                while (k < d && ++idx[k] == F.p()) idx[k++] = 0;
                if (k == d) return false;
                std::vector<Scalar> c;
                for (auto i : idx) c.push_back(F.element(i));
                if (is_iso_morphism(combine(basis, c))) return true;
            }
        }
    }
    Rng rng(seed);
    for (int trial = 0; trial < 256; ++trial) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < d; ++i) c.push_back(F.random(rng));
        if (is_iso_morphism(combine(basis, c))) return true;
    }
    if (F.is_rational()) {
        // Random rational combinations avoid the determinant hypersurface
        // almost surely, so a miss here means no isomorphism.
        return false;
    }
    return match_multisets(decompose_flat(v, seed), decompose_flat(w, seed));
}

// ---------------------------------------------------------------- splitting

namespace {

Poly lcm(const Poly& a, const Poly& b) { return (a * b / gcd(a, b)).monic(); }

std::optional<Split> split_by(const Rep& v, const std::vector<Matrix>& b1, const std::vector<Matrix>& b2) {
    std::size_t d1 = 0, d2 = 0;
    for (auto& b : b1) d1 += b.cols();
    for (auto& b : b2) d2 += b.cols();
    if (d1 == 0 || d2 == 0) return std::nullopt;
    return Split{restrict_to(v, b1), restrict_to(v, b2), b1, b2};
}

std::vector<Scalar> flatten(const RepMorphism& f) {
    std::vector<Scalar> out;
    for (auto& m : f.comps) out.insert(out.end(), m.entries().begin(), m.entries().end());
    return out;
}

// Search End(v) exhaustively for an idempotent other than 0 and 1, using
// structure constants of the algebra in the hom basis.
std::optional<RepMorphism> exhaustive_idempotent(const Rep& v, const std::vector<RepMorphism>& E) {
    const Field F = v.field;
    const std::uint32_t p = F.p();
    const std::size_t d = E.size();
    std::size_t n = flatten(E[0]).size();
    Matrix B(F, n, d);
    for (std::size_t j = 0; j < d; ++j) {
        auto col = flatten(E[j]);
        for (std::size_t i = 0; i < n; ++i) B(i, j) = col[i];
    }
    // c[i][j][k]: E_i E_j = sum_k c E_k
    std::vector<std::uint32_t> c(d * d * d);
    Matrix prods(F, n, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto col = flatten(compose(E[i], E[j]));
            for (std::size_t r = 0; r < n; ++r) prods(r, i * d + j) = col[r];
        }
    auto x = solve(B, prods);
    if (!x) fail("Internal", "End(v) not closed under composition");
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t ij = 0; ij < d * d; ++ij) c[ij * d + k] = (*x)(k, ij).residue();
    Matrix idv(F, n, 1);
    auto idf = flatten(identity_morphism(v));
    for (std::size_t r = 0; r < n; ++r) idv(r, 0) = idf[r];
    auto one = solve(B, idv);
    std::vector<std::uint32_t> one_c(d);
    for (std::size_t k = 0; k < d; ++k) one_c[k] = (*one)(k, 0).residue();

    std::vector<std::uint32_t> e(d, 0), sq(d);
    for (;;) {
        std::size_t k = 0;
        while (k < d && ++e[k] == p) e[k++] = 0;
        if (k == d) return std::nullopt;
        if (e == one_c) continue;
        std::fill(sq.begin(), sq.end(), 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (!e[i]) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (!e[j]) continue;
                std::uint64_t w = std::uint64_t(e[i]) * e[j] % p;
                const std::uint32_t* cc = &c[(i * d + j) * d];
                for (std::size_t t = 0; t < d; ++t) sq[t] = static_cast<std::uint32_t>((sq[t] + w * cc[t]) % p);
            }
        }
        if (sq == e) {
            std::vector<Scalar> coeffs;
            for (auto x : e) coeffs.push_back(F.element(x));
            return combine(E, coeffs);
        }
    }
}

}  // namespace

std::optional<Split> find_split(const Rep& v, std::uint64_t seed, bool& undecided) {
    undecided = false;
    auto E = hom_basis(v, v);
    if (E.size() <= 1) return std::nullopt;
    const Field F = v.field;
    Rng rng(seed);
    for (int trial = 0; trial < 64; ++trial) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < E.size(); ++i) c.push_back(F.random(rng));
        RepMorphism phi = combine(E, c);
        Poly m = Poly::constant(F.one());
        for (auto& comp : phi.comps)
            if (comp.rows() > 0) m = lcm(m, min_poly(comp));
        Poly g(F), h(F);
        if (!coprime_split(m, g, h)) continue;
        std::vector<Matrix> kg, kh;
        for (auto& comp : phi.comps) {
            kg.push_back(kernel_basis(eval_poly(g, comp)));
            kh.push_back(kernel_basis(eval_poly(h, comp)));
        }
        if (auto s = split_by(v, kg, kh)) return s;
    }
    if (F.is_prime()) {
        double space = 1;
        for (std::size_t i = 0; i < E.size(); ++i) space *= F.p();
        if (space <= double(1 << 20)) {
            auto e = exhaustive_idempotent(v, E);
            if (!e) return std::nullopt;
            std::vector<Matrix> im, ker;
            for (auto& comp : e->comps) {
                im.push_back(column_space(comp));
                ker.push_back(kernel_basis(comp));
            }
            return split_by(v, im, ker);
        }
    }
    undecided = true;
    return std::nullopt;
}

IndecResult indecomposability(const Rep& v, std::uint64_t seed) {
    if (v.is_zero()) fail("ZeroObject", "the zero representation is not indecomposable by convention");
    bool undecided = false;
    auto s = find_split(v, seed, undecided);
    return IndecResult{!s.has_value(), undecided};
}

bool is_indecomposable(const Rep& v, std::uint64_t seed) { return indecomposability(v, seed).indecomposable; }

std::vector<Rep> decompose_flat(const Rep& v, std::uint64_t seed) {
    if (v.is_zero()) return {};
    bool undecided = false;
    auto s = find_split(v, seed, undecided);
    if (!s) {
        if (undecided) fail("IndecomposabilityUndecided", "no splitting found and the search was not exhaustive");
        return {v};
    }
    auto a = decompose_flat(s->first, seed);
    auto b = decompose_flat(s->second, seed);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<Summand> decompose(const Rep& v, std::uint64_t seed) {
    std::vector<Summand> out;
    for (auto& x : decompose_flat(v, seed)) {
        bool found = false;
        for (auto& s : out)
            if (is_isomorphic_indec(s.rep, x)) {
                ++s.mult;
                found = true;
                break;
            }
        if (!found) out.push_back({x, 1});
    }
    std::sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) { return a.rep < b.rep; });
    return out;
}

}  // namespace fsp
