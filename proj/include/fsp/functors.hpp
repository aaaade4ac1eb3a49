#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "fsp/linrel.hpp"
#include "fsp/quiver.hpp"

namespace fsp {

// Source objects of the six functors: reps of S, D, K, C (functors 1-4),
// a relation on one space (5), a pair of relations (6).
using SourceObj = std::variant<Rep, RelObj, PairRelObj>;
using SourceMor = std::variant<RepMorphism, RelMorphism>;

Quiver source_quiver(int functor);  // 1..4
std::string source_name(int functor);

Rep apply_functor(int functor, const SourceObj& obj);
// l : v -> w in the source category
RepMorphism apply_functor_mor(int functor, const SourceObj& v, const SourceObj& w, const SourceMor& l);

// [f_alpha | f_beta] : V1 (+) V2 -> V0
Matrix eta(const Rep& v);

struct ImageResult {
    bool member = false;
    std::string reason;  // "ok" or a reason code
    // blocks of eta^-1 f_gamma = (phi; zeta) and eta^-1 f_delta = (psi; theta),
    // present when eta is invertible
    std::optional<Matrix> phi, zeta, psi, theta;
    std::optional<SourceObj> witness;
};

ImageResult in_image(int functor, const Rep& v);

struct HomTransport {
    std::size_t dim_source = 0, dim_target = 0;
    bool bijective = false;
};

HomTransport hom_transport_check(int functor, const SourceObj& v, const SourceObj& w);
std::vector<SourceMor> source_hom_basis(int functor, const SourceObj& v, const SourceObj& w);

// Middle term of 0 -> U -> V -> W -> 0 with V_i = U_i (+) W_i and arrow
// matrices [[u_a, h_a], [0, w_a]], h_a random.
Rep random_extension(const Rep& u, const Rep& w, std::uint64_t seed);

struct ExtensionWitness {
    Matrix eps, zeta;  // V3 -> V1, V3 -> V2
};

// The splitting construction for C5; v must have the block shape produced
// by random_extension. Throws NotInC5 or WitnessFailed.
ExtensionWitness extension_witness_c5(const Rep& u, const Rep& v, const Rep& w);

}  // namespace fsp
