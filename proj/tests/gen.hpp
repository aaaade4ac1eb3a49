#pragma once

// Hand-rolled generators shared by the property tests.

#include <set>
#include <vector>

#include "fsp/linrel.hpp"
#include "fsp/quiver.hpp"
#include "fsp/rng.hpp"

namespace gen {

using namespace fsp;

inline Matrix random_matrix(Field f, std::size_t r, std::size_t c, Rng& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.random(rng);
    return m;
}

inline Matrix random_invertible(Field f, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(f, n, n, rng);
        if (is_invertible(m)) return m;
    }
}

inline Rep random_rep(Quiver q, Field f, const std::vector<std::size_t>& dims, Rng& rng) {
    Rep v = zero_rep(q, f, dims);
    for (auto& m : v.mats) m = random_matrix(f, m.rows(), m.cols(), rng);
    return v;
}

inline Rep conjugate(const Rep& v, Rng& rng) {
    std::vector<Matrix> g;
    for (auto d : v.dims) g.push_back(random_invertible(v.field, d, rng));
    return change_basis(v, g);
}

// spanned by k random vectors, so any dimension up to min(k, d1 + d2)
inline RelObj random_rel(Field f, std::size_t d1, std::size_t d2, std::size_t k, Rng& rng) {
    return make_rel(f, d1, d2, random_matrix(f, d1 + d2, k, rng));
}

inline PairRelObj random_pair(Field f, std::size_t d1, std::size_t d2, std::size_t k1, std::size_t k2, Rng& rng) {
    return make_pair_rel(f, d1, d2, random_matrix(f, d1 + d2, k1, rng), random_matrix(f, d1 + d2, k2, rng));
}

// Every vector of the column span, as residue tuples (prime fields only).
inline std::set<std::vector<std::uint32_t>> span_set(const Matrix& m) {
    std::set<std::vector<std::uint32_t>> out;
    const std::uint32_t p = m.field().p();
    std::vector<std::uint32_t> c(m.cols(), 0);
    for (;;) {
        std::vector<std::uint32_t> v(m.rows(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < m.cols(); ++j) s += std::uint64_t(m(i, j).residue()) * c[j];
            v[i] = static_cast<std::uint32_t>(s % p);
        }
        out.insert(v);
        std::size_t k = 0;
        while (k < c.size() && ++c[k] == p) c[k++] = 0;
        if (k == c.size()) return out;
    }
}

// All r x c matrices over F_p, in a fixed order.
inline std::vector<Matrix> all_matrices(Field f, std::size_t r, std::size_t c) {
    std::vector<Matrix> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r * c; ++i) total *= f.p();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Matrix m(f, r, c);
        std::uint64_t k = idx;
        for (std::size_t i = 0; i < r * c; ++i) {
            m(i / c, i % c) = f.from_int(static_cast<long long>(k % f.p()));
            k /= f.p();
        }
        out.push_back(m);
    }
    return out;
}

}  // namespace gen
