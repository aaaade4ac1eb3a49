#include "fsp/linrel.hpp"

#include <algorithm>

#include "fsp/error.hpp"
#include "fsp/functors.hpp"
#include "fsp/quiver.hpp"

namespace fsp {

bool operator<(const RelObj& a, const RelObj& b) {
    if (a.dim1 != b.dim1) return a.dim1 < b.dim1;
    if (a.dim2 != b.dim2) return a.dim2 < b.dim2;
    return a.basis < b.basis;
}

bool operator<(const PairRelObj& a, const PairRelObj& b) {
    if (a.dim1 != b.dim1) return a.dim1 < b.dim1;
    if (a.dim2 != b.dim2) return a.dim2 < b.dim2;
    if (a.basis1 != b.basis1) return a.basis1 < b.basis1;
    return a.basis2 < b.basis2;
}

RelObj make_rel(Field f, std::size_t dim1, std::size_t dim2, const Matrix& spanning) {
    if (spanning.rows() != dim1 + dim2 || spanning.field() != f)
        fail("ShapeError", "relation spanning set has " + std::to_string(spanning.rows()) + " rows, expected " +
                               std::to_string(dim1 + dim2));
    return RelObj{f, dim1, dim2, canonical_span(spanning)};
}

PairRelObj make_pair_rel(Field f, std::size_t dim1, std::size_t dim2, const Matrix& span1, const Matrix& span2) {
    RelObj a = make_rel(f, dim1, dim2, span1), b = make_rel(f, dim1, dim2, span2);
    return PairRelObj{f, dim1, dim2, a.basis, b.basis};
}

void validate(const RelObj& r) {
    if (r.basis.rows() != r.dim1 + r.dim2) fail("ShapeError", "relation basis has wrong row count");
    if (rank(r.basis) != r.basis.cols()) fail("ShapeError", "relation basis is not independent");
}

void validate(const PairRelObj& r) {
    validate(r.first());
    validate(r.second());
}

RelObj rel_from_operator(const Matrix& f) {
    if (!f.is_square()) fail("NotSquare", "operator must be square");
    const std::size_t n = f.rows();
    // graph {(x, f x)}
    return make_rel(f.field(), n, n, vstack(Matrix::identity(f.field(), n), f));
}

RelObj rel_compose(const RelObj& sigma, const RelObj& rho) {
    check_same(sigma.field, rho.field);
    if (rho.dim2 != sigma.dim1) fail("DimensionMismatch", "composition needs matching middle space");
    const Field F = rho.field;
    // pairs (a, b) with rho.bottom a = sigma.top b give (rho.top a, sigma.bottom b)
    Matrix k = kernel_basis(hstack(rho.bottom(), -sigma.top()));
    Matrix a = k.row_range(0, rho.dim()), b = k.row_range(rho.dim(), sigma.dim());
    return make_rel(F, rho.dim1, sigma.dim2, vstack(rho.top() * a, sigma.bottom() * b));
}

RelObj rel_inverse(const RelObj& rho) {
    return make_rel(rho.field, rho.dim2, rho.dim1, vstack(rho.bottom(), rho.top()));
}

RelObj rel_dual(const RelObj& rho) {
    // (f, g) with f(x) = g(y) on every basis pair
    Matrix k = kernel_basis(hstack(rho.top().transpose(), -rho.bottom().transpose()));
    return make_rel(rho.field, rho.dim1, rho.dim2, k);
}

namespace {

// basis of R1 (+) R2 inside (V1 (+) W1) (+) (V2 (+) W2)
Matrix sum_basis(const RelObj& a, const RelObj& b) {
    return vstack(direct_sum(a.top(), b.top()), direct_sum(a.bottom(), b.bottom()));
}

Matrix transform(const RelObj& rho, const Matrix& g1, const Matrix& g2) {
    return vstack(g1 * rho.top(), g2 * rho.bottom());
}

}  // namespace

RelObj rel_direct_sum(const RelObj& a, const RelObj& b) {
    check_same(a.field, b.field);
    return make_rel(a.field, a.dim1 + b.dim1, a.dim2 + b.dim2, sum_basis(a, b));
}

PairRelObj pair_direct_sum(const PairRelObj& a, const PairRelObj& b) {
    check_same(a.field, b.field);
    return make_pair_rel(a.field, a.dim1 + b.dim1, a.dim2 + b.dim2, sum_basis(a.first(), b.first()),
                         sum_basis(a.second(), b.second()));
}

RelObj rel_change_basis(const RelObj& rho, const Matrix& g1, const Matrix& g2) {
    return make_rel(rho.field, g1.rows(), g2.rows(), transform(rho, g1, g2));
}

PairRelObj pair_change_basis(const PairRelObj& rho, const Matrix& g1, const Matrix& g2) {
    return make_pair_rel(rho.field, g1.rows(), g2.rows(), transform(rho.first(), g1, g2),
                         transform(rho.second(), g1, g2));
}

bool maps_into(const RelObj& rho, const RelObj& sigma, const Matrix& f1, const Matrix& f2) {
    if (f1.rows() != sigma.dim1 || f1.cols() != rho.dim1 || f2.rows() != sigma.dim2 || f2.cols() != rho.dim2)
        return false;
    Matrix img = transform(rho, f1, f2);
    return rank(hstack(sigma.basis, img)) == sigma.dim();
}

bool is_rel_morphism(const RelObj& rho, const RelObj& sigma, const RelMorphism& m) {
    return maps_into(rho, sigma, m.f1, m.f2);
}

bool is_pair_morphism(const PairRelObj& rho, const PairRelObj& sigma, const RelMorphism& m) {
    return maps_into(rho.first(), sigma.first(), m.f1, m.f2) && maps_into(rho.second(), sigma.second(), m.f1, m.f2);
}

namespace {

// Rows of the linear system Q (f1 (+) f2) B = 0 in the unknowns
// vec(f1) (row-major), then vec(f2); with `same` the two maps share
// unknowns.
void add_conditions(const RelObj& rho, const RelObj& sigma, bool same, std::vector<std::vector<Scalar>>& rows,
                    std::size_t nunk) {
    const Field F = rho.field;
    Matrix Q = left_annihilator(sigma.basis);
    Matrix Q1 = Q.col_range(0, sigma.dim1), Q2 = Q.col_range(sigma.dim1, sigma.dim2);
    Matrix B1 = rho.top(), B2 = rho.bottom();
    const std::size_t off2 = same ? 0 : sigma.dim1 * rho.dim1;
    for (std::size_t r = 0; r < Q.rows(); ++r)
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            std::vector<Scalar> row(nunk, F.zero());
            for (std::size_t i = 0; i < sigma.dim1; ++i)
                for (std::size_t j = 0; j < rho.dim1; ++j) {
                    Scalar& x = row[i * rho.dim1 + j];
                    x = x + Q1(r, i) * B1(j, c);
                }
            for (std::size_t i = 0; i < sigma.dim2; ++i)
                for (std::size_t j = 0; j < rho.dim2; ++j) {
                    Scalar& x = row[off2 + i * rho.dim2 + j];
                    x = x + Q2(r, i) * B2(j, c);
                }
            rows.push_back(std::move(row));
        }
}

std::vector<RelMorphism> solve_hom(const std::vector<const RelObj*>& rhos, const std::vector<const RelObj*>& sigmas,
                                   bool same) {
    const RelObj& r0 = *rhos[0];
    const RelObj& s0 = *sigmas[0];
    const Field F = r0.field;
    if (same && (r0.dim1 != r0.dim2 || s0.dim1 != s0.dim2))
        fail("DimensionMismatch", "relations on one space need dim1 == dim2");
    const std::size_t n1 = s0.dim1 * r0.dim1, n2 = same ? 0 : s0.dim2 * r0.dim2;
    const std::size_t nunk = n1 + n2;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t k = 0; k < rhos.size(); ++k) add_conditions(*rhos[k], *sigmas[k], same, rows, nunk);
    Matrix sys(F, rows.size(), nunk);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < nunk; ++c) sys(r, c) = rows[r][c];
    Matrix K = kernel_basis(sys);
    std::vector<RelMorphism> out;
    for (std::size_t c = 0; c < K.cols(); ++c) {
        Matrix f1(F, s0.dim1, r0.dim1), f2(F, s0.dim2, r0.dim2);
        for (std::size_t i = 0; i < n1; ++i) f1(i / r0.dim1, i % r0.dim1) = K(i, c);
        if (same) {
            f2 = f1;
        } else {
            for (std::size_t i = 0; i < n2; ++i) f2(i / r0.dim2, i % r0.dim2) = K(n1 + i, c);
        }
        out.push_back({f1, f2});
    }
    return out;
}

bool invertible_pair(const RelMorphism& m) { return is_invertible(m.f1) && is_invertible(m.f2); }

bool quick_iso(const std::vector<RelMorphism>& basis) {
    for (auto& m : basis)
        if (invertible_pair(m)) return true;
    return false;
}

}  // namespace

std::vector<RelMorphism> rel_hom_basis(const RelObj& rho, const RelObj& sigma, RelKind kind) {
    check_same(rho.field, sigma.field);
    return solve_hom({&rho}, {&sigma}, kind == RelKind::OneSpace);
}

std::vector<RelMorphism> pair_hom_basis(const PairRelObj& rho, const PairRelObj& sigma) {
    check_same(rho.field, sigma.field);
    RelObj a = rho.first(), b = rho.second(), c = sigma.first(), d = sigma.second();
    return solve_hom({&a, &b}, {&c, &d}, false);
}

// A direct look for an invertible basis element first; otherwise the question
// goes to the image under F5 / F6, where full faithfulness makes the answer
// the same.
bool rel_is_isomorphic(const RelObj& rho, const RelObj& sigma, RelKind kind, std::uint64_t seed) {
    check_same(rho.field, sigma.field);
    if (rho.dim1 != sigma.dim1 || rho.dim2 != sigma.dim2 || rho.dim() != sigma.dim()) return false;
    if (quick_iso(rel_hom_basis(rho, sigma, kind))) return true;
    if (kind == RelKind::OneSpace) return is_isomorphic(apply_functor(5, rho), apply_functor(5, sigma), seed);
    const Field F = rho.field;
    PairRelObj a{F, rho.dim1, rho.dim2, rho.basis, Matrix(F, rho.dim1 + rho.dim2, 0)};
    PairRelObj b{F, sigma.dim1, sigma.dim2, sigma.basis, Matrix(F, sigma.dim1 + sigma.dim2, 0)};
    return is_isomorphic(apply_functor(6, a), apply_functor(6, b), seed);
}

bool pair_is_isomorphic(const PairRelObj& rho, const PairRelObj& sigma, std::uint64_t seed) {
    check_same(rho.field, sigma.field);
    if (rho.dim1 != sigma.dim1 || rho.dim2 != sigma.dim2 || rho.basis1.cols() != sigma.basis1.cols() ||
        rho.basis2.cols() != sigma.basis2.cols())
        return false;
    if (quick_iso(pair_hom_basis(rho, sigma))) return true;
    return is_isomorphic(apply_functor(6, rho), apply_functor(6, sigma), seed);
}

IdempotentSplit rel_split_idempotent(const RelObj& rho, const RelMorphism& e) {
    if (!is_rel_morphism(rho, rho, e)) fail("NotIdempotent", "not an endomorphism of the relation");
    if (e.f1 * e.f1 != e.f1 || e.f2 * e.f2 != e.f2) fail("NotIdempotent", "e * e != e");
    const Field F = rho.field;
    Matrix C1 = column_space(e.f1), C2 = column_space(e.f2);
    // corestrictions of e onto its image, in the column bases
    auto coords = [](const Matrix& C, const Matrix& m) {
        auto x = solve(C, m);
        if (!x) fail("WitnessFailed", "image coordinates");
        return *x;
    };
    Matrix p1 = coords(C1, e.f1), p2 = coords(C2, e.f2);
    Matrix S = vstack(p1 * rho.top(), p2 * rho.bottom());
    IdempotentSplit out{make_rel(F, C1.cols(), C2.cols(), S), {p1, p2}, {C1, C2}};
    return out;
}

namespace {

template <class Obj>
std::vector<Obj> pull_back(int functor, const std::vector<Rep>& parts) {
    std::vector<Obj> out;
    for (auto& x : parts) {
        ImageResult r = in_image(functor, x);
        if (!r.member || !r.witness) fail("ImagePullbackError", "summand outside the image: " + r.reason);
        out.push_back(std::get<Obj>(*r.witness));
    }
    return out;
}

template <class Obj, class Summ, class Iso>
std::vector<Summ> group(std::vector<Obj> flat, Iso iso) {
    std::vector<Summ> out;
    for (auto& x : flat) {
        bool found = false;
        for (auto& s : out)
            if (iso(s.rel, x)) {
                ++s.mult;
                found = true;
                break;
            }
        if (!found) out.push_back({x, 1});
    }
    std::sort(out.begin(), out.end(), [](const Summ& a, const Summ& b) { return a.rel < b.rel; });
    return out;
}

}  // namespace

std::vector<RelObj> rel_decompose_flat(const RelObj& rho, std::uint64_t seed) {
    if (rho.dim1 != rho.dim2) fail("DimensionMismatch", "relation on one space needs dim1 == dim2");
    return pull_back<RelObj>(5, decompose_flat(apply_functor(5, rho), seed));
}

std::vector<RelSummand> rel_decompose(const RelObj& rho, std::uint64_t seed) {
    return group<RelObj, RelSummand>(rel_decompose_flat(rho, seed), [seed](const RelObj& a, const RelObj& b) {
        return rel_is_isomorphic(a, b, RelKind::OneSpace, seed);
    });
}

std::vector<PairRelObj> pair_decompose_flat(const PairRelObj& rho, std::uint64_t seed) {
    return pull_back<PairRelObj>(6, decompose_flat(apply_functor(6, rho), seed));
}

std::vector<PairSummand> pair_decompose(const PairRelObj& rho, std::uint64_t seed) {
    return group<PairRelObj, PairSummand>(pair_decompose_flat(rho, seed), [seed](const PairRelObj& a, const PairRelObj& b) {
        return pair_is_isomorphic(a, b, seed);
    });
}

}  // namespace fsp
