#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsp/canon.hpp"

namespace fsp {

// Dimension data: vertex dimensions for quivers, (dim V, dim R) for
// LinRel1, (dim V1, dim V2, dim R1, dim R2) for PairRel.
struct CensusClass {
    Object rep;  // first enumerated member
    bool indecomposable = false;
    std::optional<IndecompTag> tag;  // indecomposable classes only
    std::uint64_t orbit = 0;
};

struct CensusReport {
    Category category = Category::F;
    Field field;
    std::vector<std::size_t> dims;
    std::uint64_t total = 0;
    std::vector<CensusClass> classes;

    std::size_t indecomposable_count() const;
    std::size_t unmatched_count() const;
};

struct CensusOptions {
    bool prefilter = true;
    bool parallel = false;
    bool strict = true;  // census_sweep throws UnmatchedClass
};

std::uint64_t census_size(Category c, Field f, const std::vector<std::size_t>& dims);

// Throws TooLarge beyond 10^8 objects or a dimension above 4.
CensusReport census(Category c, Field f, const std::vector<std::size_t>& dims, const CensusOptions& opt = {});

// Every dimension vector of total at most max_total (for relations, the
// total of the ambient spaces). Vectors over the guard are skipped and
// named in `skipped`.
std::vector<CensusReport> census_sweep(Category c, Field f, std::size_t max_total, const CensusOptions& opt = {},
                                       std::vector<std::string>* skipped = nullptr);

std::vector<std::vector<std::size_t>> sweep_dims(Category c, std::size_t max_total);

std::string dims_str(const std::vector<std::size_t>& dims);
std::string report_text(const CensusReport& r);
std::string report_lines(const CensusReport& r);

}  // namespace fsp
