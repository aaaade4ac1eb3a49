#include "fsp/functors.hpp"

#include "fsp/error.hpp"
#include "fsp/rng.hpp"

namespace fsp {

Quiver source_quiver(int functor) {
    switch (functor) {
        case 1: return Quiver::S;
        case 2: return Quiver::D;
        case 3: return Quiver::K;
        case 4: return Quiver::C;
    }
    fail("InvalidArgument", "functor " + std::to_string(functor) + " has no quiver source");
}

std::string source_name(int functor) {
    if (functor >= 1 && functor <= 4) return quiver_name(source_quiver(functor));
    if (functor == 5) return "LinRel1";
    if (functor == 6) return "PairRel";
    fail("InvalidArgument", "functor index must be 1..6");
}

namespace {

Matrix I(Field f, std::size_t n) { return Matrix::identity(f, n); }
Matrix Z(Field f, std::size_t r, std::size_t c) { return Matrix(f, r, c); }

// F-rep on V1 (+) V2 with f_alpha, f_beta the two block inclusions
Rep realize(Field f, std::size_t n1, std::size_t n2, const Matrix& fg, const Matrix& fd) {
    Matrix fa = vstack(I(f, n1), Z(f, n2, n1));
    Matrix fb = vstack(Z(f, n1, n2), I(f, n2));
    return make_rep(Quiver::F, f, {n1 + n2, n1, n2, fg.cols(), fd.cols()}, {fa, fb, fg, fd});
}

const Rep& rep_of(int functor, const SourceObj& obj) {
    const Rep* v = std::get_if<Rep>(&obj);
    if (!v) fail("QuiverMismatch", "functor " + std::to_string(functor) + " needs a quiver representation");
    if (v->quiver != source_quiver(functor))
        fail("QuiverMismatch", "functor " + std::to_string(functor) + " expects quiver " +
                                   quiver_name(source_quiver(functor)) + ", got " + quiver_name(v->quiver));
    return *v;
}

const RelObj& rel_of(const SourceObj& obj) {
    const RelObj* r = std::get_if<RelObj>(&obj);
    if (!r) fail("QuiverMismatch", "functor 5 needs a relation on one space");
    if (r->dim1 != r->dim2) fail("DimensionMismatch", "functor 5 needs a relation on one space");
    return *r;
}

const PairRelObj& pair_of(const SourceObj& obj) {
    const PairRelObj* r = std::get_if<PairRelObj>(&obj);
    if (!r) fail("QuiverMismatch", "functor 6 needs a pair of relations");
    return *r;
}

// coordinates of img in the columns of basis
Matrix restrict_cols(const Matrix& basis, const Matrix& img) {
    auto x = solve(basis, img);
    if (!x) fail("RestrictionNotContained", "morphism does not map the relation into the target relation");
    return *x;
}

}  // namespace

Rep apply_functor(int functor, const SourceObj& obj) {
    switch (functor) {
        case 1: {
            const Rep& s = rep_of(1, obj);
            return realize(s.field, s.dims[0], s.dims[1], vstack(s.mats[0], s.mats[1]), vstack(s.mats[2], s.mats[3]));
        }
        case 2: {
            const Rep& d = rep_of(2, obj);
            return realize(d.field, d.dims[0], d.dims[1], vstack(d.mats[0], d.mats[1]),
                           vstack(d.mats[2], I(d.field, d.dims[1])));
        }
        case 3: {
            const Rep& k = rep_of(3, obj);
            Matrix id = I(k.field, k.dims[1]);
            return realize(k.field, k.dims[0], k.dims[1], vstack(k.mats[0], id), vstack(k.mats[1], id));
        }
        case 4: {
            const Rep& c = rep_of(4, obj);
            // alpha : V2 -> V1, beta : V1 -> V2
            return realize(c.field, c.dims[0], c.dims[1], vstack(I(c.field, c.dims[0]), c.mats[1]),
                           vstack(c.mats[0], I(c.field, c.dims[1])));
        }
        case 5: {
            const RelObj& r = rel_of(obj);
            Matrix id = I(r.field, r.dim1);
            return realize(r.field, r.dim1, r.dim1, vstack(id, id), r.basis);
        }
        case 6: {
            const PairRelObj& r = pair_of(obj);
            return realize(r.field, r.dim1, r.dim2, r.basis1, r.basis2);
        }
    }
    fail("InvalidArgument", "functor index must be 1..6");
}

RepMorphism apply_functor_mor(int functor, const SourceObj& v, const SourceObj& w, const SourceMor& l) {
    if (functor >= 1 && functor <= 4) {
        rep_of(functor, v);
        rep_of(functor, w);
        const RepMorphism* m = std::get_if<RepMorphism>(&l);
        if (!m) fail("QuiverMismatch", "expected a quiver morphism");
        const auto& c = m->comps;
        Matrix top = direct_sum(c[0], c[1]);
        switch (functor) {
            case 1: return {{top, c[0], c[1], c[2], c[3]}};
            case 2: return {{top, c[0], c[1], c[2], c[1]}};
            case 3: return {{top, c[0], c[1], c[1], c[1]}};
            default: return {{top, c[0], c[1], c[0], c[1]}};
        }
    }
    const RelMorphism* m = std::get_if<RelMorphism>(&l);
    if (!m) fail("QuiverMismatch", "expected a relation morphism");
    if (functor == 5) {
        const RelObj &a = rel_of(v), &b = rel_of(w);
        Matrix r = restrict_cols(b.basis, vstack(m->f1 * a.top(), m->f1 * a.bottom()));
        return {{direct_sum(m->f1, m->f1), m->f1, m->f1, m->f1, r}};
    }
    if (functor == 6) {
        const PairRelObj &a = pair_of(v), &b = pair_of(w);
        Matrix r1 = restrict_cols(b.basis1, vstack(m->f1 * a.first().top(), m->f2 * a.first().bottom()));
        Matrix r2 = restrict_cols(b.basis2, vstack(m->f1 * a.second().top(), m->f2 * a.second().bottom()));
        return {{direct_sum(m->f1, m->f2), m->f1, m->f2, r1, r2}};
    }
    fail("InvalidArgument", "functor index must be 1..6");
}

Matrix eta(const Rep& v) {
    if (v.quiver != Quiver::F) fail("QuiverMismatch", "eta needs a representation of the four subspace quiver");
    return hstack(v.mats[0], v.mats[1]);
}

namespace {

std::optional<Matrix> block_inverse(const Matrix& m, std::string& reason) {
    if (!m.is_square()) {
        reason = "NonSquareBlock";
        return std::nullopt;
    }
    auto x = inverse(m);
    if (!x) reason = "SingularBlock";
    return x;
}

}  // namespace

ImageResult in_image(int functor, const Rep& v) {
    if (functor < 1 || functor > 6) fail("InvalidArgument", "functor index must be 1..6");
    if (v.quiver != Quiver::F) fail("QuiverMismatch", "image test needs a representation of the four subspace quiver");
    ImageResult out;
    const Field F = v.field;
    const std::size_t d1 = v.dims[1], d2 = v.dims[2], d3 = v.dims[3], d4 = v.dims[4];
    Matrix e = eta(v);
    auto ei = e.is_square() ? inverse(e) : std::nullopt;
    if (!ei) {
        out.reason = "EtaNotInvertible";
        return out;
    }
    Matrix A = *ei * v.mats[2], B = *ei * v.mats[3];
    out.phi = A.row_range(0, d1);
    out.zeta = A.row_range(d1, d2);
    out.psi = B.row_range(0, d1);
    out.theta = B.row_range(d1, d2);
    const Matrix &phi = *out.phi, &zeta = *out.zeta, &psi = *out.psi, &theta = *out.theta;
    std::string reason;
    switch (functor) {
        case 1:
            out.witness = make_rep(Quiver::S, F, {d1, d2, d3, d4}, {phi, zeta, psi, theta});
            break;
        case 2: {
            auto ti = block_inverse(theta, reason);
            if (!ti) break;
            out.witness = make_rep(Quiver::D, F, {d1, d2, d3}, {phi, zeta, psi * *ti});
            break;
        }
        case 3: {
            auto zi = block_inverse(zeta, reason);
            if (!zi) break;
            auto ti = block_inverse(theta, reason);
            if (!ti) break;
            out.witness = make_rep(Quiver::K, F, {d1, d2}, {phi * *zi, psi * *ti});
            break;
        }
        case 4: {
            auto pi = block_inverse(phi, reason);
            if (!pi) break;
            auto ti = block_inverse(theta, reason);
            if (!ti) break;
            out.witness = make_rep(Quiver::C, F, {d1, d2}, {psi * *ti, zeta * *pi});
            break;
        }
        case 5: {
            if (rank(v.mats[3]) != d4) {
                reason = "NotInjective";
                break;
            }
            auto pi = block_inverse(phi, reason);
            if (!pi) break;
            auto zi = block_inverse(zeta, reason);
            if (!zi) break;
            out.witness = make_rel(F, d3, d3, vstack(*pi * psi, *zi * theta));
            break;
        }
        case 6:
            if (rank(v.mats[2]) != d3 || rank(v.mats[3]) != d4) {
                reason = "NotInjective";
                break;
            }
            out.witness = make_pair_rel(F, d1, d2, A, B);
            break;
    }
    out.member = out.witness.has_value();
    out.reason = out.member ? "ok" : reason;
    return out;
}

std::vector<SourceMor> source_hom_basis(int functor, const SourceObj& v, const SourceObj& w) {
    std::vector<SourceMor> out;
    if (functor >= 1 && functor <= 4) {
        for (auto& h : hom_basis(rep_of(functor, v), rep_of(functor, w))) out.push_back(h);
    } else if (functor == 5) {
        for (auto& h : rel_hom_basis(rel_of(v), rel_of(w), RelKind::OneSpace)) out.push_back(h);
    } else if (functor == 6) {
        for (auto& h : pair_hom_basis(pair_of(v), pair_of(w))) out.push_back(h);
    } else {
        fail("InvalidArgument", "functor index must be 1..6");
    }
    return out;
}

HomTransport hom_transport_check(int functor, const SourceObj& v, const SourceObj& w) {
    auto basis = source_hom_basis(functor, v, w);
    Rep fv = apply_functor(functor, v), fw = apply_functor(functor, w);
    HomTransport out;
    out.dim_source = basis.size();
    out.dim_target = hom_dim(fv, fw);
    // images as columns of one matrix; independence = injectivity
    std::size_t len = 0;
    for (std::size_t x = 0; x < fv.dims.size(); ++x) len += fv.dims[x] * fw.dims[x];
    Matrix cols(fv.field, len, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        RepMorphism img = apply_functor_mor(functor, v, w, basis[c]);
        if (!is_morphism(fv, fw, img)) return out;
        std::size_t r = 0;
        for (auto& m : img.comps)
            for (auto& e : m.entries()) cols(r++, c) = e;
    }
    out.bijective = rank(cols) == basis.size() && out.dim_target == basis.size();
    return out;
}

Rep random_extension(const Rep& u, const Rep& w, std::uint64_t seed) {
    if (u.quiver != w.quiver) fail("QuiverMismatch", "extension of representations of different quivers");
    check_same(u.field, w.field);
    Rng rng(seed);
    const auto& info = quiver_info(u.quiver);
    std::vector<std::size_t> dims;
    for (std::size_t x = 0; x < u.dims.size(); ++x) dims.push_back(u.dims[x] + w.dims[x]);
    std::vector<Matrix> mats;
    for (std::size_t a = 0; a < info.arrows.size(); ++a) {
        int s = info.arrows[a].src, t = info.arrows[a].tgt;
        Matrix h(u.field, u.dims[t], w.dims[s]);
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) = u.field.random(rng);
        Matrix m(u.field, dims[t], dims[s]);
        m.set_block(0, 0, u.mats[a]);
        m.set_block(0, u.dims[s], h);
        m.set_block(u.dims[t], u.dims[s], w.mats[a]);
        mats.push_back(m);
    }
    return make_rep(u.quiver, u.field, dims, mats);
}

ExtensionWitness extension_witness_c5(const Rep& u, const Rep& v, const Rep& w) {
    for (const Rep* x : {&u, &v, &w})
        if (x->quiver != Quiver::F) fail("QuiverMismatch", "extension test needs four subspace representations");
    for (std::size_t x = 0; x < 5; ++x)
        if (v.dims[x] != u.dims[x] + w.dims[x]) fail("DimensionMismatch", "middle term has the wrong dimensions");
    ImageResult ru = in_image(5, u), rw = in_image(5, w);
    if (!ru.member) fail("NotInC5", "first term is not in the image of F5: " + ru.reason);
    if (!rw.member) fail("NotInC5", "last term is not in the image of F5: " + rw.reason);
    const Field F = v.field;
    const auto &U = u.dims, &W = w.dims;
    // the U-row, W-column blocks of the middle term's arrows
    auto h = [&](int a) { return v.mats[a].block(0, U[a + 1], U[0], W[a + 1]); };
    Matrix rhs = h(2) - h(0) * *rw.phi - h(1) * *rw.zeta;
    Matrix sigma = *inverse(eta(u)) * rhs;
    Matrix s_eps = sigma.row_range(0, U[1]), s_zeta = sigma.row_range(U[1], U[2]);
    auto assemble = [&](const Matrix& a, const Matrix& s, const Matrix& b, std::size_t top) {
        Matrix m(F, top + b.rows(), U[3] + W[3]);
        m.set_block(0, 0, a);
        m.set_block(0, U[3], s);
        m.set_block(top, U[3], b);
        return m;
    };
    ExtensionWitness out{assemble(*ru.phi, s_eps, *rw.phi, U[1]), assemble(*ru.zeta, s_zeta, *rw.zeta, U[2])};
    if (v.mats[2] != v.mats[0] * out.eps + v.mats[1] * out.zeta || !is_invertible(out.eps) ||
        !is_invertible(out.zeta))
        fail("WitnessFailed", "constructed splitting does not satisfy the gamma equation");
    return out;
}

}  // namespace fsp
