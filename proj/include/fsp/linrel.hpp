#pragma once

#include <cstdint>
#include <vector>

#include "fsp/matrix.hpp"

namespace fsp {

// R inside V1 (+) V2, stored as the canonical basis of its span: the first
// dim1 rows are V1 coordinates.
struct RelObj {
    Field field;
    std::size_t dim1 = 0, dim2 = 0;
    Matrix basis;

    std::size_t dim() const { return basis.cols(); }
    Matrix top() const { return basis.row_range(0, dim1); }
    Matrix bottom() const { return basis.row_range(dim1, dim2); }
    friend bool operator==(const RelObj& a, const RelObj& b) {
        return a.field == b.field && a.dim1 == b.dim1 && a.dim2 == b.dim2 && a.basis == b.basis;
    }
    friend bool operator<(const RelObj& a, const RelObj& b);
};

struct PairRelObj {
    Field field;
    std::size_t dim1 = 0, dim2 = 0;
    Matrix basis1, basis2;

    RelObj first() const { return RelObj{field, dim1, dim2, basis1}; }
    RelObj second() const { return RelObj{field, dim1, dim2, basis2}; }
    friend bool operator==(const PairRelObj& a, const PairRelObj& b) {
        return a.field == b.field && a.dim1 == b.dim1 && a.dim2 == b.dim2 && a.basis1 == b.basis1 && a.basis2 == b.basis2;
    }
    friend bool operator<(const PairRelObj& a, const PairRelObj& b);
};

// For relations on one space (LinRel1) f1 == f2 is enforced by the hom
// computation; for two spaces they are independent.
struct RelMorphism {
    Matrix f1, f2;
};

enum class RelKind { OneSpace, TwoSpace };

// Any spanning set is accepted; the stored basis is canonical.
RelObj make_rel(Field f, std::size_t dim1, std::size_t dim2, const Matrix& spanning);
PairRelObj make_pair_rel(Field f, std::size_t dim1, std::size_t dim2, const Matrix& span1, const Matrix& span2);
void validate(const RelObj& r);
void validate(const PairRelObj& r);

RelObj rel_from_operator(const Matrix& f);
RelObj rel_compose(const RelObj& sigma, const RelObj& rho);  // sigma after rho
RelObj rel_inverse(const RelObj& rho);
RelObj rel_dual(const RelObj& rho);
RelObj rel_direct_sum(const RelObj& a, const RelObj& b);
PairRelObj pair_direct_sum(const PairRelObj& a, const PairRelObj& b);
// Image of rho under invertible g1 (+) g2 (basis change).
RelObj rel_change_basis(const RelObj& rho, const Matrix& g1, const Matrix& g2);
PairRelObj pair_change_basis(const PairRelObj& rho, const Matrix& g1, const Matrix& g2);

// (f1 (+) f2)(R) inside S
bool maps_into(const RelObj& rho, const RelObj& sigma, const Matrix& f1, const Matrix& f2);
bool is_rel_morphism(const RelObj& rho, const RelObj& sigma, const RelMorphism& m);
bool is_pair_morphism(const PairRelObj& rho, const PairRelObj& sigma, const RelMorphism& m);

std::vector<RelMorphism> rel_hom_basis(const RelObj& rho, const RelObj& sigma, RelKind kind);
std::vector<RelMorphism> pair_hom_basis(const PairRelObj& rho, const PairRelObj& sigma);
bool rel_is_isomorphic(const RelObj& rho, const RelObj& sigma, RelKind kind, std::uint64_t seed = 0);
bool pair_is_isomorphic(const PairRelObj& rho, const PairRelObj& sigma, std::uint64_t seed = 0);

struct IdempotentSplit {
    RelObj sigma;
    RelMorphism p;  // rho -> sigma
    RelMorphism q;  // sigma -> rho
};

// Splits an idempotent endomorphism e of rho as e = q p with p q = 1.
IdempotentSplit rel_split_idempotent(const RelObj& rho, const RelMorphism& e);

struct RelSummand {
    RelObj rel;
    int mult = 1;
};
struct PairSummand {
    PairRelObj rel;
    int mult = 1;
};

// One relation on one space: routed through F5 and pulled back.
std::vector<RelSummand> rel_decompose(const RelObj& rho, std::uint64_t seed = 0);
std::vector<RelObj> rel_decompose_flat(const RelObj& rho, std::uint64_t seed = 0);
// Pairs of relations: routed through F6.
std::vector<PairSummand> pair_decompose(const PairRelObj& rho, std::uint64_t seed = 0);
std::vector<PairRelObj> pair_decompose_flat(const PairRelObj& rho, std::uint64_t seed = 0);

}  // namespace fsp
