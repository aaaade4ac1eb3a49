#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsp/functors.hpp"

namespace fsp {

enum class Category { F, S, D, K, C, LinRel1, PairRel };

enum class Family { Zero, I, ISecond, II, III, IIIStar, IV, IVStar, V, VStar, Inj1, Inj2, Inj3, Inj4 };

// `sym` names a symmetry applied to the tabulated object: an arm
// permutation for F ("2134": new arm k is old arm digit k), a Klein vertex
// permutation for S, "inv" for LinRel1, "swapR" / "swapV" / "swapRV" for
// PairRel. Empty means the object as tabulated.
struct IndecompTag {
    Category category = Category::F;
    Family family = Family::Zero;
    int n = 0;
    std::optional<Poly> p;  // Zero only; n = s deg p
    int s = 0;
    std::string sym;

    friend bool operator==(const IndecompTag& a, const IndecompTag& b) {
        return a.category == b.category && a.family == b.family && a.n == b.n && a.p == b.p && a.s == b.s &&
               a.sym == b.sym;
    }
};

using Object = SourceObj;

std::string category_name(Category c);
Category parse_category(std::string_view s);
std::string family_name(Family f);
Family parse_family(std::string_view s);
std::vector<Family> families(Category c);
int min_n(Category c, Family f);
std::vector<std::string> symmetries(Category c);  // identity first

std::string tag_str(const IndecompTag& t);
// `<category>:<type>(<n>[,p=<poly>,s=<s>][,sym=<code>])`
IndecompTag parse_tag(std::string_view text, Field f);

Category category_of(const Object& obj);
std::vector<std::size_t> object_dims(const Object& obj);
std::vector<std::size_t> tag_dims(const IndecompTag& t);

// Throws InvalidTag, ReducibleModulus.
Object canon_rep(const IndecompTag& t, Field f);
Rep nhat(const Poly& p, int s);
Object apply_symmetry(Category c, const std::string& sym, const Object& obj);

bool object_isomorphic(const Object& a, const Object& b, std::uint64_t seed = 0);
bool object_indecomposable(const Object& obj, std::uint64_t seed = 0);
std::vector<Object> object_decompose_flat(const Object& obj, std::uint64_t seed = 0);
Object object_direct_sum(const Object& a, const Object& b);
Object object_zero(Category c, Field f);

using PolyCandidates = std::vector<std::pair<Poly, int>>;

// Tags whose objects have the given dimension data, in classification
// order: untwisted tags by family, n, polynomial, then symmetric variants.
// Over Q the Zero family only uses the supplied (p, s) candidates.
std::vector<IndecompTag> candidate_tags(Category c, Field f, const std::vector<std::size_t>& dims,
                                        const PolyCandidates& q_candidates = {});

// First tag whose object is isomorphic to the indecomposable x.
std::optional<IndecompTag> identify(const Object& x, const PolyCandidates& q_candidates = {});

struct Classified {
    IndecompTag tag;
    int mult = 1;
};

// Throws UnclassifiedSummand.
std::vector<Classified> classify(const Object& v, std::uint64_t seed = 0, const PolyCandidates& q_candidates = {});

}  // namespace fsp
