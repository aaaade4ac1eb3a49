#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsp/matrix.hpp"

namespace fsp {

enum class Quiver { F, S, D, K, C };

struct ArrowInfo {
    std::string name;  // alpha, beta, gamma, delta
    int src;           // vertex positions (indices into dims)
    int tgt;
};

struct QuiverInfo {
    Quiver id;
    std::string name;
    std::vector<int> labels;  // printed vertex labels, by position
    std::vector<ArrowInfo> arrows;
};

const QuiverInfo& quiver_info(Quiver q);
Quiver parse_quiver(std::string_view s);
std::string quiver_name(Quiver q);

// mats[a] is dims[tgt] x dims[src].
struct Rep {
    Quiver quiver = Quiver::F;
    Field field;
    std::vector<std::size_t> dims;
    std::vector<Matrix> mats;

    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    friend bool operator==(const Rep& a, const Rep& b) {
        return a.quiver == b.quiver && a.field == b.field && a.dims == b.dims && a.mats == b.mats;
    }
    friend bool operator!=(const Rep& a, const Rep& b) { return !(a == b); }
    friend bool operator<(const Rep& a, const Rep& b);
};

Rep zero_rep(Quiver q, Field f, const std::vector<std::size_t>& dims);
Rep make_rep(Quiver q, Field f, const std::vector<std::size_t>& dims, std::vector<Matrix> mats);
void validate(const Rep& v);  // throws ShapeError naming the arrow

// One matrix per vertex, comps[x] is dims_w[x] x dims_v[x].
struct RepMorphism {
    std::vector<Matrix> comps;
    friend bool operator==(const RepMorphism& a, const RepMorphism& b) { return a.comps == b.comps; }
};

bool is_morphism(const Rep& v, const Rep& w, const RepMorphism& f);
RepMorphism identity_morphism(const Rep& v);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f
bool is_iso_morphism(const RepMorphism& f);
RepMorphism combine(const std::vector<RepMorphism>& basis, const std::vector<Scalar>& coeffs);

std::vector<RepMorphism> hom_basis(const Rep& v, const Rep& w);
std::size_t hom_dim(const Rep& v, const Rep& w);
std::size_t end_dim(const Rep& v);

Rep direct_sum(const Rep& v, const Rep& w);
// The rep with arrow matrices g_t f_a g_s^-1 (g invertible per vertex).
Rep change_basis(const Rep& v, const std::vector<Matrix>& g);
// Subrepresentation spanned by the given column bases (one per vertex);
// throws NotSubrepresentation if some arrow leaves the subspace.
Rep restrict_to(const Rep& v, const std::vector<Matrix>& bases);

bool is_isomorphic(const Rep& v, const Rep& w, std::uint64_t seed = 0);
// Exact when v is known to be indecomposable: then v and w are isomorphic
// iff some basis element of Hom(v,w) is invertible.
bool is_isomorphic_indec(const Rep& v, const Rep& w);

struct IndecResult {
    bool indecomposable = true;
    bool heuristic = false;  // only possible over Q
};

IndecResult indecomposability(const Rep& v, std::uint64_t seed = 0);
bool is_indecomposable(const Rep& v, std::uint64_t seed = 0);

struct Split {
    Rep first, second;
    std::vector<Matrix> first_basis, second_basis;  // vertexwise columns in v
};

// A nontrivial direct sum splitting of v, if one exists. `undecided` is set
// when the search was not exhaustive (over Q).
std::optional<Split> find_split(const Rep& v, std::uint64_t seed, bool& undecided);

struct Summand {
    Rep rep;
    int mult = 1;
};

// Indecomposable summands with multiplicities, pairwise non-isomorphic,
// sorted by (dims, matrices).
std::vector<Summand> decompose(const Rep& v, std::uint64_t seed = 0);
// Same, one entry per summand occurrence, in splitting order.
std::vector<Rep> decompose_flat(const Rep& v, std::uint64_t seed = 0);

}  // namespace fsp
