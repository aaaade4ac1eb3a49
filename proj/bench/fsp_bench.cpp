// Serial versus OpenMP census on a few dimension vectors.
#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "fsp/oracle.hpp"

using namespace fsp;

namespace {

struct Case {
    Category c;
    std::uint32_t q;
    std::vector<std::size_t> dims;
};

double seconds_of(const std::function<void()>& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census benchmark", "fsp_bench"};
    int reps = 3;
    bool quick = false;
    app.add_option("--reps", reps, "best of this many runs")->check(CLI::PositiveNumber);
    app.add_flag("--quick", quick, "small cases only");
    CLI11_PARSE(app, argc, argv);

    std::vector<Case> cases{{Category::K, 3, {2, 2}},
                            {Category::S, 2, {2, 1, 1, 1}},
                            {Category::F, 2, {2, 1, 1, 1, 1}}};
    if (!quick) {
        cases.push_back({Category::D, 2, {2, 2, 2}});
        cases.push_back({Category::PairRel, 2, {2, 2, 2, 2}});
        cases.push_back({Category::F, 2, {3, 1, 1, 1, 1}});
    }

    std::printf("threads %d\n", omp_get_max_threads());
    std::printf("%-8s %-3s %-11s %10s %8s %10s %10s %8s %s\n", "category", "q", "dims", "objects", "classes",
                "serial_s", "parallel_s", "speedup", "agree");
    bool all_agree = true;
    for (auto& k : cases) {
        Field f = Field::prime(k.q);
        CensusOptions ser, par;
        par.parallel = true;
        CensusReport a, b;
        double ts = seconds_of([&] { a = census(k.c, f, k.dims, ser); }, reps);
        double tp = seconds_of([&] { b = census(k.c, f, k.dims, par); }, reps);
        bool agree = report_lines(a) == report_lines(b);
        all_agree = all_agree && agree;
        std::printf("%-8s %-3u %-11s %10llu %8zu %10.3f %10.3f %8.2f %s\n", category_name(k.c).c_str(), k.q,
                    dims_str(k.dims).c_str(), static_cast<unsigned long long>(a.total), a.classes.size(), ts, tp,
                    ts / tp, agree ? "yes" : "NO");
    }
    return all_agree ? 0 : 1;
}
