#include "svt/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <tuple>

#include "json.hpp"
#include "svt/grothendieck.hpp"

namespace svt {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    out.emplace_back(cur);
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

void subpartitions_rec(const Partition& lambda, int row, int cap, std::vector<int>& cur,
                       std::vector<Partition>& out) {
    if (row > lambda.length()) {
        out.emplace_back(cur);
        return;
    }
    for (int p = 0; p <= std::min(lambda.part(row), cap); ++p) {
        cur.push_back(p);
        subpartitions_rec(lambda, row + 1, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_up_to(int max_cells) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(max_cells, max_cells, cur, out);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    subpartitions_rec(lambda, 1, lambda.part(1), cur, out);
    return out;
}

std::vector<Instance> instance_grid(int max_cells, int max_n) {
    std::vector<Instance> grid;
    for (const Partition& lambda : partitions_up_to(max_cells)) {
        for (const Partition& mu : subpartitions(lambda)) {
            SkewShape shape(lambda, mu);
            std::string text = format_shape(shape);
            for (int n = 1; n <= max_n; ++n) grid.push_back({shape, n, text});
        }
    }
    std::sort(grid.begin(), grid.end(), [](const Instance& a, const Instance& b) {
        return std::tuple(a.shape.outer().size(), a.shape_text, a.n) <
               std::tuple(b.shape.outer().size(), b.shape_text, b.n);
    });
    return grid;
}

bool feasible(const Instance& inst) { return inst.shape.max_column_height() <= inst.n; }

namespace {

std::optional<SweepRow> sweep_one(const Instance& inst) {
    if (!feasible(inst)) return std::nullopt;
    auto start = std::chrono::steady_clock::now();
    SweepRow row;
    row.shape_text = inst.shape_text;
    row.n = inst.n;
    row.svt_count = count_svt(inst.shape, inst.n);
    row.parity = row.svt_count % 2 == 1 ? "odd" : "even";
    row.signed_count = signed_excess_count(inst.shape, inst.n);
    row.sst_count = inst.shape.inner().empty() ? sst_count_hook(inst.shape.outer(), inst.n)
                                               : count_sst(inst.shape, inst.n);
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
    return row;
}

std::vector<SweepRow> collect_rows(std::vector<std::optional<SweepRow>> cells) {
    std::vector<SweepRow> rows;
    for (auto& c : cells)
        if (c) rows.push_back(std::move(*c));
    return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(int max_cells, int max_n, int threads) {
    auto grid = instance_grid(max_cells, max_n);
    return collect_rows(
        map_instances_parallel<std::optional<SweepRow>>(grid, sweep_one, threads));
}

std::vector<SweepRow> run_sweep_serial(int max_cells, int max_n) {
    auto grid = instance_grid(max_cells, max_n);
    return collect_rows(map_instances_serial<std::optional<SweepRow>>(grid, sweep_one));
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "shape,n,svt_count,parity,signed_count,sst_count,wall_time_ms\n";
    char buf[32];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
        // the shape field holds commas, so it is always quoted
        os << '"' << r.shape_text << '"' << ',' << r.n << ',' << r.svt_count.str() << ','
           << r.parity << ',' << r.signed_count.str() << ',' << r.sst_count.str() << ',' << buf
           << '\n';
    }
}

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "parity") return Suite::parity;
    if (name == "involution-f") return Suite::involution_f;
    if (name == "involution-g") return Suite::involution_g;
    if (name == "bialternant") return Suite::bialternant;
    if (name == "specialization") return Suite::specialization;
    if (name == "all") return Suite::all;
    return std::nullopt;
}

namespace {

using Json = nlohmann::ordered_json;

void add_claims(Json& j, const ClaimsReport& c, std::string& failed) {
    j["claim1"] = c.claim1;
    Json sizes = Json::object();
    for (const auto& [h, size] : c.class_sizes) sizes[std::to_string(h)] = size.str();
    j["claim2_sizes"] = std::move(sizes);
    j["fill_sum"] = c.fill_sum.str();
    if (!c.ok() && failed.empty()) {
        if (!c.claim1) failed = "claim1";
        else if (!c.claim2) failed = "claim2 class parity";
        else if (!c.f_involution_ok) failed = "f involution";
        else if (!c.fill_closed_form_ok) failed = "fill-set closed form";
        else if (!c.h0_has_singleton_n) failed = "singleton {n} fill";
        else failed = "corner-fill counting identity";
    }
}

void add_parity(Json& j, const ParityReport& p, std::string& failed) {
    j["count"] = p.count.str();
    j["parity"] = p.odd ? "odd" : "even";
    j["g_orbits"] = p.g_orbits.str();
    j["signed_count"] = p.signed_count.str();
    if (!p.consistent() && failed.empty()) {
        if (p.count != p.count_enumerated) failed = "count paths disagree";
        else if (!p.odd) failed = "count is even";
        else if (p.signed_count != 1) failed = "signed count != 1";
        else failed = "g pairing";
    }
}

VerifyLine verify_one(const Instance& inst, Suite suite) {
    VerifyLine line;
    line.shape_text = inst.shape_text;
    line.n = inst.n;
    Json j;
    j["shape"] = inst.shape_text;
    j["n"] = inst.n;

    if (!feasible(inst)) {
        line.status = "skipped";
        j["status"] = "skipped";
        j["reason"] = "column taller than n";
        line.json = j.dump();
        return line;
    }

    std::string failed;
    bool ran_any = false;
    try {
        if (suite == Suite::parity || suite == Suite::all) {
            ran_any = true;
            add_parity(j, verify_parity(inst.shape, inst.n), failed);
        }
        if (suite == Suite::involution_f || suite == Suite::all) {
            if (inst.shape.cell_count() >= 1) {
                ran_any = true;
                add_claims(j, verify_claims(inst.shape, inst.n), failed);
            }
        }
        if (suite == Suite::involution_g || suite == Suite::all) {
            ran_any = true;
            GReport g = verify_g(inst.shape, inst.n);
            j["g_orbits"] = g.orbits.str();
            if (!g.ok() && failed.empty())
                failed = g.pairing_ok ? "minimal tableau not unique" : "g pairing";
        }
        if (suite == Suite::bialternant || suite == Suite::all) {
            bool applicable = inst.shape.inner().empty() &&
                              inst.shape.outer().length() <= inst.n;
            if (applicable) {
                ran_any = true;
                const Partition& lambda = inst.shape.outer();
                bool g_eq = grothendieck_bialternant(lambda, inst.n) ==
                            grothendieck_tableaux(inst.shape, inst.n);
                bool s_eq = schur_bialternant(lambda, inst.n) == schur_tableaux(lambda, inst.n);
                bool b0 = check_beta_zero(lambda, inst.n);
                j["bialternant"] = g_eq && s_eq && b0;
                if (!g_eq && failed.empty()) failed = "grothendieck bialternant mismatch";
                if (!s_eq && failed.empty()) failed = "schur bialternant mismatch";
                if (!b0 && failed.empty()) failed = "beta=0 reduction";
            } else if (suite == Suite::bialternant) {
                line.status = "skipped";
                j["status"] = "skipped";
                j["reason"] = "bialternant needs a non-skew shape with rows <= n";
                line.json = j.dump();
                return line;
            }
        }
        if (suite == Suite::specialization || suite == Suite::all) {
            ran_any = true;
            bool principal = check_principal_specialization(inst.shape, inst.n);
            bool counts = check_count_identity(inst.shape, inst.n);
            MultiPoly g = grothendieck_tableaux(inst.shape, inst.n);
            std::vector<BigRational> ones(inst.n, 1);
            bool at_minus_one = poly_eval(g, ones, -1) == 1;
            BigInt sgn = signed_excess_count(inst.shape, inst.n);
            j["principal"] = principal;
            j["count_identity"] = counts;
            j["eval_minus_one"] = at_minus_one;
            j["signed_count"] = sgn.str();
            if (!principal && failed.empty()) failed = "principal specialization";
            if (!counts && failed.empty()) failed = "count identity";
            if (!at_minus_one && failed.empty()) failed = "G(1,..,1|-1) != 1";
            if (sgn != 1 && failed.empty()) failed = "signed count != 1";
        }
    } catch (const std::exception& e) {
        if (failed.empty()) failed = std::string("exception: ") + e.what();
    }

    if (!ran_any) {
        line.status = "skipped";
        j["status"] = "skipped";
        j["reason"] = "not applicable";
    } else if (failed.empty()) {
        line.status = "pass";
        j["status"] = "pass";
    } else {
        line.status = "fail";
        j["status"] = "fail";
        j["failed"] = failed;
    }
    line.json = j.dump();
    return line;
}

}  // namespace

VerifyOutcome run_verify(Suite suite, int max_cells, int max_n, int threads) {
    auto grid = instance_grid(max_cells, max_n);
    VerifyOutcome out;
    out.lines = map_instances_parallel<VerifyLine>(
        grid, [suite](const Instance& inst) { return verify_one(inst, suite); }, threads);
    for (const VerifyLine& line : out.lines) {
        if (line.status == "fail") {
            out.all_pass = false;
            out.first_failure = "shape=" + line.shape_text + " n=" + std::to_string(line.n);
            break;
        }
    }
    return out;
}

}  // namespace svt
