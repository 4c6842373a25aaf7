// Acceptance suite: runs every criterion end to end and prints one pass/fail
// line per criterion. Exits nonzero when anything fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "svt/grothendieck.hpp"
#include "svt/sweep.hpp"

using namespace svt;

namespace {

SetValuedTableau make_tableau(const SkewShape& shape, int n,
                              const std::vector<std::vector<int>>& entries) {
    std::vector<uint64_t> masks;
    for (const auto& e : entries) masks.push_back(letters_mask(e, n));
    return SetValuedTableau(shape, n, std::move(masks));
}

bool all_true(const std::vector<char>& xs) {
    for (char x : xs)
        if (!x) return false;
    return true;
}

// --- criterion 1: the six counts -------------------------------------------
bool known_count_table() {
    struct Row {
        const char* shape;
        int n;
        long long count;
    };
    const Row rows[] = {
        {"2,1", 3, 27}, {"2,2", 3, 13}, {"4,3", 3, 103},
        {"2,1", 4, 159}, {"2,2", 4, 97}, {"4,3", 4, 1759},
    };
    for (const Row& r : rows)
        if (count_svt(parse_shape(r.shape), r.n) != r.count) return false;
    return true;
}

// --- criterion 2: the 27-element listing ------------------------------------
bool full_listing_21() {
    SkewShape shape(Partition({2, 1}));
    const std::vector<std::vector<std::vector<int>>> fixtures = {
        {{1}, {1}, {2}},       {{1}, {1}, {3}},       {{1}, {2}, {2}},
        {{1}, {2}, {3}},       {{1}, {3}, {2}},       {{1}, {3}, {3}},
        {{2}, {2}, {3}},       {{2}, {3}, {3}},       {{1}, {1, 2}, {2}},
        {{1}, {1, 3}, {2}},    {{1}, {2, 3}, {2}},    {{1}, {1, 2}, {3}},
        {{1}, {1, 3}, {3}},    {{1}, {2, 3}, {3}},    {{1}, {1}, {2, 3}},
        {{1}, {2}, {2, 3}},    {{1}, {3}, {2, 3}},    {{2}, {2, 3}, {3}},
        {{1, 2}, {2}, {3}},    {{1, 2}, {3}, {3}},    {{1}, {1, 2}, {2, 3}},
        {{1}, {1, 3}, {2, 3}}, {{1}, {2, 3}, {2, 3}}, {{1, 2}, {2, 3}, {3}},
        {{1}, {1, 2, 3}, {2}}, {{1}, {1, 2, 3}, {3}}, {{1}, {1, 2, 3}, {2, 3}},
    };
    std::set<std::vector<uint64_t>> want;
    for (const auto& f : fixtures) want.insert(make_tableau(shape, 3, f).entries());
    std::set<std::vector<uint64_t>> got;
    for (const auto& t : collect_svt(shape, 3)) got.insert(t.entries());
    return want.size() == 27 && got == want;
}

// --- criterion 3: single box ------------------------------------------------
bool single_box_counts() {
    SkewShape box(Partition({1}));
    BigInt power = 2;
    for (int n = 1; n <= 10; ++n) {
        if (count_svt(box, n) != power - 1) return false;
        power *= 2;
    }
    return true;
}

// --- criterion 4: hook product vs exhaustive enumeration --------------------
bool hook_formula_vs_enumeration() {
    for (const Partition& lambda : partitions_up_to(6))
        for (int n = 1; n <= 4; ++n)
            if (sst_count_hook(lambda, n) !=
                BigInt(collect_sst(SkewShape(lambda), n).size()))
                return false;
    return true;
}

// --- criterion 5: G_(2,1) written out term by term ---------------------------
bool expanded_polynomial() {
    MultiPoly want(3);
    want.add_term({2, 1, 0, 0}, 1);
    want.add_term({2, 0, 1, 0}, 1);
    want.add_term({1, 2, 0, 0}, 1);
    want.add_term({1, 1, 1, 0}, 2);
    want.add_term({1, 0, 2, 0}, 1);
    want.add_term({0, 2, 1, 0}, 1);
    want.add_term({0, 1, 2, 0}, 1);
    want.add_term({2, 2, 0, 1}, 1);
    want.add_term({2, 0, 2, 1}, 1);
    want.add_term({0, 2, 2, 1}, 1);
    want.add_term({2, 1, 1, 1}, 3);
    want.add_term({1, 2, 1, 1}, 3);
    want.add_term({1, 1, 2, 1}, 3);
    want.add_term({2, 2, 1, 2}, 2);
    want.add_term({2, 1, 2, 2}, 2);
    want.add_term({1, 2, 2, 2}, 2);
    want.add_term({2, 2, 2, 3}, 1);
    return grothendieck_tableaux(SkewShape(Partition({2, 1})), 3) == want;
}

// --- criterion 6: bialternant equivalence -----------------------------------
bool bialternant_equivalence() {
    for (const Partition& lambda : partitions_up_to(9)) {
        if (lambda.length() > 3 || lambda.part(1) > 3) continue;
        for (int n = std::max(1, lambda.length()); n <= 3; ++n) {
            if (grothendieck_bialternant(lambda, n) !=
                grothendieck_tableaux(SkewShape(lambda), n))
                return false;
            if (schur_bialternant(lambda, n) != schur_tableaux(lambda, n)) return false;
        }
    }
    return true;
}

// --- criteria 7..10 share the skew family -----------------------------------
std::vector<Instance> feasible_grid(int max_cells, int max_n) {
    std::vector<Instance> out;
    for (const Instance& inst : instance_grid(max_cells, max_n))
        if (feasible(inst)) out.push_back(inst);
    return out;
}

bool odd_count_family() {
    auto grid = feasible_grid(6, 4);
    auto pass = map_instances_parallel<char>(grid, [](const Instance& inst) {
        BigInt fast = count_svt(inst.shape, inst.n);
        return static_cast<char>(fast % 2 == 1 &&
                                 fast == count_svt_enumerate(inst.shape, inst.n));
    }, 0);
    return all_true(pass);
}

bool corner_claims() {
    auto grid = feasible_grid(5, 3);
    auto pass = map_instances_parallel<char>(grid, [](const Instance& inst) {
        if (inst.shape.cell_count() == 0) return static_cast<char>(true);
        return static_cast<char>(verify_claims(inst.shape, inst.n).ok());
    }, 0);
    return all_true(pass);
}

bool g_involution() {
    SkewShape appb(Partition({5, 3, 3, 2}), Partition({3, 1, 1}));
    if (minimal_tableau(appb, 3) !=
        make_tableau(appb, 3, {{1}, {1}, {1}, {1}, {2}, {2}, {1}, {3}}))
        return false;
    SetValuedTableau t1 =
        make_tableau(appb, 3, {{1}, {1, 2, 3}, {1}, {1}, {2}, {2, 3}, {1}, {3}});
    if (g_map(t1) != make_tableau(appb, 3, {{1}, {1, 2, 3}, {1}, {1}, {2}, {3}, {1}, {3}}))
        return false;
    SetValuedTableau t2 = make_tableau(appb, 3, {{2}, {2, 3}, {1}, {1}, {2}, {2}, {1}, {3}});
    if (g_map(t2) != make_tableau(appb, 3, {{1, 2}, {2, 3}, {1}, {1}, {2}, {2}, {1}, {3}}))
        return false;

    auto grid = feasible_grid(5, 3);
    auto pass = map_instances_parallel<char>(grid, [](const Instance& inst) {
        GReport r = verify_g(inst.shape, inst.n);
        return static_cast<char>(r.ok() && r.count - 1 == 2 * r.orbits);
    }, 0);
    return all_true(pass);
}

bool specializations() {
    auto grid = feasible_grid(6, 4);
    auto pass = map_instances_parallel<char>(grid, [](const Instance& inst) {
        MultiPoly g = grothendieck_tableaux(inst.shape, inst.n);
        if (!specialize_principal(g).is_single_term(inst.shape.cell_count(), 1)) return '\0';
        if (signed_excess_count(inst.shape, inst.n) != 1) return '\0';
        std::vector<BigRational> ones(inst.n, 1);
        if (poly_eval(g, ones, -1) != 1) return '\0';
        if (poly_eval(g, ones, 1) != BigRational(count_svt(inst.shape, inst.n))) return '\0';
        return '\1';
    }, 0);
    return all_true(pass);
}

// --- criterion 11: peel-off identity ----------------------------------------
bool reduction_identity() {
    std::mt19937_64 rng(20250810);
    auto rational = [&rng]() {
        std::uniform_int_distribution<int> num(1, 9);
        std::uniform_int_distribution<int> den(1, 9);
        std::uniform_int_distribution<int> sign(0, 1);
        BigRational r(num(rng), den(rng));
        return sign(rng) ? r : -r;
    };
    for (const Partition& lambda : partitions_up_to(6)) {
        if (lambda.length() > 3) continue;
        for (int n = std::max(1, lambda.length()); n <= 3; ++n) {
            for (int point = 0; point < 5; ++point) {
                std::vector<BigRational> xs;
                for (int i = 0; i < n - 1; ++i) xs.push_back(rational());
                if (!check_reduction_identity(lambda, n, xs, rational())) return false;
            }
        }
    }
    return true;
}

// --- criterion 12: sweep determinism through the CLI -------------------------
int run_quiet(const std::string& cmd) {
    int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// everything except the trailing wall-time column
std::vector<std::string> stable_columns(const std::filesystem::path& file) {
    std::ifstream in(file);
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t cut = line.rfind(',');
        rows.push_back(cut == std::string::npos ? line : line.substr(0, cut));
    }
    return rows;
}

bool sweep_determinism() {
    namespace fs = std::filesystem;
    fs::path a = fs::temp_directory_path() / "svt_acceptance_sweep_a.csv";
    fs::path b = fs::temp_directory_path() / "svt_acceptance_sweep_b.csv";
    std::string base = std::string(SVT_CLI_PATH) + " sweep --max-cells 5 --max-n 3 --out ";
    if (run_quiet(base + a.string()) != 0) return false;
    if (run_quiet(base + b.string() + " --threads 2") != 0) return false;
    auto ra = stable_columns(a);
    auto rb = stable_columns(b);
    std::error_code ec;
    fs::remove(a, ec);
    fs::remove(b, ec);
    return !ra.empty() && ra == rb;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "known count table (27/13/103/159/97/1759)", known_count_table},
        {2, "full SVT((2,1),3) listing", full_listing_21},
        {3, "single box counts 2^n-1 for n=1..10", single_box_counts},
        {4, "hook product equals SST enumeration, |shape|<=6, n<=4", hook_formula_vs_enumeration},
        {5, "G_(2,1) against its term-by-term expansion", expanded_polynomial},
        {6, "bialternant equals tableaux sum inside the 3x3 box", bialternant_equivalence},
        {7, "odd counts over all feasible skew shapes, |outer|<=6, n<=4", odd_count_family},
        {8, "corner-box claims (fill sets, h-classes, f pairing)", corner_claims},
        {9, "g pairing and the worked fixtures", g_involution},
        {10, "principal specialization, signed sums, count identity", specializations},
        {11, "peel-off identity at 5 random rational points", reduction_identity},
        {12, "sweep determinism across repeated CLI runs", sweep_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::printf("FAIL  c%02d  %s  (exception: %s)\n", c.id, c.name, e.what());
            ++failures;
            continue;
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        std::printf("%s  c%02d  %s  (%.0f ms)\n", ok ? "PASS" : "FAIL", c.id, c.name, ms);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
