#include "fsp/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "fsp/error.hpp"

namespace fsp {

std::size_t CensusReport::indecomposable_count() const {
    std::size_t n = 0;
    for (auto& c : classes) n += c.indecomposable;
    return n;
}

std::size_t CensusReport::unmatched_count() const {
    std::size_t n = 0;
    for (auto& c : classes) n += c.indecomposable && !c.tag;
    return n;
}

std::string dims_str(const std::vector<std::size_t>& dims) {
    std::string s;
    for (auto d : dims) s += (s.empty() ? "" : ",") + std::to_string(d);
    return s;
}

namespace {

constexpr double kGuard = 1e8;

Quiver quiver_of(Category c) {
    switch (c) {
        case Category::F: return Quiver::F;
        case Category::S: return Quiver::S;
        case Category::D: return Quiver::D;
        case Category::K: return Quiver::K;
        default: return Quiver::C;
    }
}

bool is_quiver(Category c) { return c != Category::LinRel1 && c != Category::PairRel; }

// All r-dimensional subspaces of F_q^d as column bases, in order of pivot
// set then free entries (row-major, canonical element order).
std::vector<Matrix> subspaces(Field f, std::size_t d, std::size_t r) {
    std::vector<Matrix> out;
    if (r > d) return out;
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    const std::uint32_t q = f.p();
    for (;;) {
        // free positions: row i, columns after piv[i] that are not pivots
        std::vector<std::pair<std::size_t, std::size_t>> freepos;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = piv[i] + 1; j < d; ++j)
                if (std::find(piv.begin(), piv.end(), j) == piv.end()) freepos.push_back({i, j});
        std::vector<std::uint32_t> digit(freepos.size(), 0);
        for (;;) {
            Matrix rows(f, r, d);
            for (std::size_t i = 0; i < r; ++i) rows(i, piv[i]) = f.one();
            for (std::size_t k = 0; k < freepos.size(); ++k) rows(freepos[k].first, freepos[k].second) = f.element(digit[k]);
            out.push_back(rows.transpose());
            std::size_t k = freepos.size();
            while (k > 0 && ++digit[k - 1] == q) digit[--k] = 0;
            if (k == 0) break;
        }
        // next pivot combination
        std::size_t i = r;
        while (i > 0 && piv[i - 1] == d - r + i - 1) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

// Enumeration of one census: item count, decoder, and the partition of the
// index range by the first matrix (or first subspace).
struct Space {
    Category cat;
    Field f;
    std::vector<std::size_t> dims;
    // quivers
    Rep shape;
    std::size_t entries = 0;
    std::size_t first_entries = 0;
    // relations
    std::vector<Matrix> subs1, subs2;

    std::uint64_t size() const {
        if (is_quiver(cat)) {
            std::uint64_t n = 1;
            for (std::size_t i = 0; i < entries; ++i) n *= f.p();
            return n;
        }
        return cat == Category::LinRel1 ? subs1.size() : subs1.size() * subs2.size();
    }

    std::uint64_t partitions() const {
        if (is_quiver(cat)) {
            std::uint64_t n = 1;
            for (std::size_t i = 0; i < first_entries; ++i) n *= f.p();
            return n;
        }
        return subs1.size();
    }

    Object at(std::uint64_t idx) const {
        if (is_quiver(cat)) {
            Rep v = shape;
            // first entry is the most significant digit
            std::vector<std::uint32_t> digit(entries);
            for (std::size_t k = entries; k-- > 0;) {
                digit[k] = static_cast<std::uint32_t>(idx % f.p());
                idx /= f.p();
            }
            std::size_t k = 0;
            for (auto& m : v.mats)
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.element(digit[k++]);
            return v;
        }
        if (cat == Category::LinRel1) return make_rel(f, dims[0], dims[0], subs1[idx]);
        return make_pair_rel(f, dims[0], dims[1], subs1[idx / subs2.size()], subs2[idx % subs2.size()]);
    }
};

Space make_space(Category c, Field f, const std::vector<std::size_t>& dims) {
    if (!f.is_prime()) fail("UnsupportedField", "census needs a finite field");
    for (auto d : dims)
        if (d > 4) fail("TooLarge", "census dimensions are capped at 4");
    Space s{c, f, dims, {}, 0, 0, {}, {}};
    if (is_quiver(c)) {
        Quiver q = quiver_of(c);
        if (dims.size() != quiver_info(q).labels.size()) fail("DimensionMismatch", "wrong number of vertex dimensions");
        s.shape = zero_rep(q, f, dims);
        for (auto& m : s.shape.mats) s.entries += m.rows() * m.cols();
        for (auto& m : s.shape.mats)
            if (m.rows() * m.cols() != 0) {
                s.first_entries = m.rows() * m.cols();
                break;
            }
        double count = 1;
        for (std::size_t i = 0; i < s.entries; ++i) count *= f.p();
        if (count > kGuard) fail("TooLarge", "census of " + dims_str(dims) + " exceeds 10^8 representations");
        return s;
    }
    const std::size_t want = c == Category::LinRel1 ? 2 : 4;
    if (dims.size() != want) fail("DimensionMismatch", "wrong number of dimensions for " + category_name(c));
    const std::size_t amb = c == Category::LinRel1 ? 2 * dims[0] : dims[0] + dims[1];
    if (c == Category::LinRel1) {
        s.subs1 = subspaces(f, amb, dims[1]);
    } else {
        s.subs1 = subspaces(f, amb, dims[2]);
        s.subs2 = subspaces(f, amb, dims[3]);
    }
    if (double(s.size()) > kGuard) fail("TooLarge", "census of " + dims_str(dims) + " exceeds 10^8 objects");
    return s;
}

using Fingerprint = std::vector<std::size_t>;

// Ranks of every arrow, of [f_a | f_b] for arrows into a common vertex and of
// (f_a ; f_b) for arrows out of a common vertex, and dim End.
Fingerprint fingerprint(const Object& obj) {
    Rep v;
    if (auto r = std::get_if<Rep>(&obj)) v = *r;
    else if (std::holds_alternative<RelObj>(obj)) v = apply_functor(5, obj);
    else v = apply_functor(6, obj);
    const auto& arrows = quiver_info(v.quiver).arrows;
    Fingerprint fp;
    for (auto& m : v.mats) fp.push_back(rank(m));
    for (std::size_t a = 0; a < arrows.size(); ++a)
        for (std::size_t b = a + 1; b < arrows.size(); ++b) {
            if (arrows[a].tgt == arrows[b].tgt) fp.push_back(rank(hstack(v.mats[a], v.mats[b])));
            if (arrows[a].src == arrows[b].src) fp.push_back(rank(vstack(v.mats[a], v.mats[b])));
        }
    fp.push_back(end_dim(v));
    return fp;
}

struct Bucketed {
    Object rep;
    Fingerprint fp;
    std::uint64_t orbit = 0;
};

// Adds x (orbit weight w) to classes; exact test inside equal fingerprints.
void add_to(std::vector<Bucketed>& classes, const Object& x, const Fingerprint& fp, std::uint64_t w) {
    for (auto& c : classes)
        if (c.fp == fp && object_isomorphic(c.rep, x)) {
            c.orbit += w;
            return;
        }
    classes.push_back({x, fp, w});
}

std::vector<Bucketed> scan(const Space& s, std::uint64_t lo, std::uint64_t hi, bool prefilter) {
    std::vector<Bucketed> classes;
    for (std::uint64_t i = lo; i < hi; ++i) {
        Object x = s.at(i);
        add_to(classes, x, prefilter ? fingerprint(x) : Fingerprint{}, 1);
    }
    return classes;
}

}  // namespace

std::uint64_t census_size(Category c, Field f, const std::vector<std::size_t>& dims) {
    return make_space(c, f, dims).size();
}

CensusReport census(Category c, Field f, const std::vector<std::size_t>& dims, const CensusOptions& opt) {
    Space s = make_space(c, f, dims);
    const std::uint64_t total = s.size();
    std::vector<Bucketed> classes;
    if (!opt.parallel) {
        classes = scan(s, 0, total, opt.prefilter);
    } else {
        const std::uint64_t parts = s.partitions();
        const std::uint64_t step = total / parts;
        std::vector<std::vector<Bucketed>> local(parts);
#pragma omp parallel for schedule(dynamic)
        for (long long k = 0; k < static_cast<long long>(parts); ++k)
            local[k] = scan(s, k * step, (k + 1) * step, opt.prefilter);
        // merging in partition order keeps first-appearance order
        for (auto& part : local)
            for (auto& b : part) add_to(classes, b.rep, b.fp, b.orbit);
    }
    CensusReport r{c, f, dims, total, {}};
    r.classes.resize(classes.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
    for (long long k = 0; k < static_cast<long long>(classes.size()); ++k) {
        CensusClass& cc = r.classes[k];
        cc.rep = classes[k].rep;
        cc.orbit = classes[k].orbit;
        bool zero = true;
        for (auto d : object_dims(cc.rep)) zero = zero && d == 0;
        if (!zero) cc.indecomposable = object_indecomposable(cc.rep);
        if (cc.indecomposable) cc.tag = identify(cc.rep);
    }
    return r;
}

std::vector<std::vector<std::size_t>> sweep_dims(Category c, std::size_t max_total) {
    std::vector<std::vector<std::size_t>> out;
    if (c == Category::LinRel1) {
        for (std::size_t n = 0; 2 * n <= max_total; ++n)
            for (std::size_t r = 0; r <= 2 * n; ++r) out.push_back({n, r});
        return out;
    }
    if (c == Category::PairRel) {
        for (std::size_t t = 0; t <= max_total; ++t)
            for (std::size_t a = 0; a <= t; ++a)
                for (std::size_t r1 = 0; r1 <= t; ++r1)
                    for (std::size_t r2 = 0; r2 <= t; ++r2) out.push_back({a, t - a, r1, r2});
        return out;
    }
    const std::size_t nv = quiver_info(quiver_of(c)).labels.size();
    std::vector<std::size_t> d(nv, 0);
    // by total, then lexicographic
    for (std::size_t t = 0; t <= max_total; ++t) {
        std::fill(d.begin(), d.end(), 0);
        for (;;) {
            std::size_t sum = 0;
            for (auto x : d) sum += x;
            if (sum == t) out.push_back(d);
            std::size_t k = nv;
            while (k > 0 && ++d[k - 1] > t) d[--k] = 0;
            if (k == 0) break;
        }
    }
    return out;
}

std::vector<CensusReport> census_sweep(Category c, Field f, std::size_t max_total, const CensusOptions& opt,
                                       std::vector<std::string>* skipped) {
    std::vector<CensusReport> out;
    for (auto& d : sweep_dims(c, max_total)) {
        try {
            out.push_back(census(c, f, d, opt));
        } catch (const Error& e) {
            if (e.kind() != "TooLarge") throw;
            if (skipped) skipped->push_back(dims_str(d) + ": " + e.what());
            continue;
        }
        if (opt.strict && out.back().unmatched_count())
            fail("UnmatchedClass", category_name(c) + " dims " + dims_str(d) + " has " +
                                       std::to_string(out.back().unmatched_count()) + " unmatched indecomposable classes");
    }
    return out;
}

std::string report_lines(const CensusReport& r) {
    std::ostringstream os;
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
        const auto& c = r.classes[k];
        os << "class " << k << " dims " << dims_str(r.dims) << " indecomposable " << (c.indecomposable ? "true" : "false")
           << " tag " << (c.indecomposable ? (c.tag ? tag_str(*c.tag) : "UNMATCHED") : "-") << " orbit " << c.orbit
           << "\n";
    }
    return os.str();
}

std::string report_text(const CensusReport& r) {
    std::ostringstream os;
    os << "category " << category_name(r.category) << "  field " << r.field.str() << "  dims " << dims_str(r.dims)
       << "\n";
    os << "  enumerated " << r.total << "  classes " << r.classes.size() << "  indecomposable "
       << r.indecomposable_count() << "  unmatched " << r.unmatched_count() << "\n";
    std::size_t width = 0;
    for (auto& c : r.classes)
        if (c.indecomposable) width = std::max(width, c.tag ? tag_str(*c.tag).size() : std::size_t{9});
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
        const auto& c = r.classes[k];
        if (!c.indecomposable) continue;
        std::string t = c.tag ? tag_str(*c.tag) : "UNMATCHED";
        os << "  " << k << "  " << t << std::string(width - t.size(), ' ') << "  orbit " << c.orbit << "\n";
    }
    return os.str();
}

}  // namespace fsp
