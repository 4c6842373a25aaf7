#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "svt/involutions.hpp"

namespace svt {

struct Instance {
    SkewShape shape;
    int n = 0;
    std::string shape_text;
};

std::vector<Partition> partitions_up_to(int max_cells);
std::vector<Partition> subpartitions(const Partition& lambda);

// Every (lambda, mu, n) with |lambda| <= max_cells, mu inside lambda and
// 1 <= n <= max_n, sorted by (|lambda|, shape text, n). Infeasible instances
// (a column taller than n) are included; callers decide how to report them.
std::vector<Instance> instance_grid(int max_cells, int max_n);

bool feasible(const Instance& inst);

// Serial reference kernel: results in instance order.
template <typename T, typename Fn>
std::vector<T> map_instances_serial(const std::vector<Instance>& xs, Fn&& fn) {
    std::vector<T> out;
    out.reserve(xs.size());
    for (const Instance& x : xs) out.push_back(fn(x));
    return out;
}

// OpenMP kernel: same results in the same order regardless of scheduling.
// threads <= 0 uses the OpenMP default.
template <typename T, typename Fn>
std::vector<T> map_instances_parallel(const std::vector<Instance>& xs, Fn&& fn, int threads) {
    std::vector<T> out(xs.size());
#ifdef _OPENMP
    int want = threads > 0 ? threads : omp_get_max_threads();
    #pragma omp parallel for schedule(dynamic) num_threads(want)
    for (long i = 0; i < static_cast<long>(xs.size()); ++i) out[i] = fn(xs[i]);
#else
    (void)threads;
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = fn(xs[i]);
#endif
    return out;
}

struct SweepRow {
    std::string shape_text;
    int n = 0;
    BigInt svt_count;
    std::string parity;
    BigInt signed_count;
    BigInt sst_count;
    double wall_ms = 0.0;
};

std::vector<SweepRow> run_sweep(int max_cells, int max_n, int threads);
std::vector<SweepRow> run_sweep_serial(int max_cells, int max_n);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os);

enum class Suite { parity, involution_f, involution_g, bialternant, specialization, all };
std::optional<Suite> parse_suite(std::string_view name);

struct VerifyLine {
    std::string shape_text;
    int n = 0;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string json;
};

struct VerifyOutcome {
    std::vector<VerifyLine> lines;
    bool all_pass = true;
    std::string first_failure;
};

VerifyOutcome run_verify(Suite suite, int max_cells, int max_n, int threads);

}  // namespace svt
