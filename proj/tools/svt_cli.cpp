// Command-line front end: exact counting, enumeration, polynomial
// construction, verification sweeps and CSV reports for set-valued tableaux.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 internal invariant breach.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "svt/grothendieck.hpp"
#include "svt/sweep.hpp"

namespace {

using Json = nlohmann::ordered_json;

int cmd_count(const std::string& shape_text, int n, const std::string& kind, bool as_json) {
    svt::SkewShape shape = svt::parse_shape(shape_text);
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    svt::BigInt count;
    if (kind == "sst")
        count = shape.inner().empty() ? svt::sst_count_hook(shape.outer(), n)
                                      : svt::count_sst(shape, n);
    else
        count = svt::count_svt(shape, n);
    if (as_json) {
        Json j;
        j["shape"] = svt::format_shape(shape);
        j["n"] = n;
        j["count"] = count.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << count.str() << "\n";
    }
    return 0;
}

int cmd_enumerate(const std::string& shape_text, int n, const std::string& format,
                  long long limit) {
    svt::SkewShape shape = svt::parse_shape(shape_text);
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    long long emitted = 0;
    bool first = true;
    svt::enumerate_svt(shape, n, [&](const svt::SetValuedTableau& t) {
        if (limit >= 0 && emitted >= limit) return false;
        if (format == "jsonl") {
            std::cout << svt::tableau_json(t) << "\n";
        } else {
            if (!first) std::cout << "\n";
            std::cout << svt::render_text(t) << "\n";
            first = false;
        }
        ++emitted;
        return limit < 0 || emitted < limit;
    });
    return 0;
}

int cmd_poly(const std::string& shape_text, int n, const std::string& formula,
             const std::string& basis, bool as_json) {
    svt::SkewShape shape = svt::parse_shape(shape_text);
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    svt::MultiPoly value(n);
    if (formula == "bialternant") {
        if (!shape.inner().empty())
            throw std::invalid_argument("bialternant needs a non-skew shape");
        value = basis == "schur" ? svt::schur_bialternant(shape.outer(), n)
                                 : svt::grothendieck_bialternant(shape.outer(), n);
    } else {
        value = basis == "schur" ? svt::schur_tableaux(shape, n)
                                 : svt::grothendieck_tableaux(shape, n);
    }
    if (as_json) {
        std::cout << svt::report_json({shape, n, formula, basis, value}) << "\n";
    } else {
        std::cout << value.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite_name, int max_cells, int max_n, int threads) {
    auto suite = svt::parse_suite(suite_name);
    if (!suite) throw std::invalid_argument("unknown suite: " + suite_name);
    svt::VerifyOutcome out = svt::run_verify(*suite, max_cells, max_n, threads);
    for (const svt::VerifyLine& line : out.lines) std::cout << line.json << "\n";
    if (!out.all_pass) {
        std::cerr << "verification failed first at " << out.first_failure << "\n";
        return 1;
    }
    return 0;
}

int cmd_sweep(int max_cells, int max_n, const std::string& out_path, int threads) {
    std::vector<svt::SweepRow> rows = svt::run_sweep(max_cells, max_n, threads);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        return 2;
    }
    svt::write_sweep_csv(rows, out);
    out.flush();
    if (!out.good()) {
        std::cerr << "write to " << out_path << " failed\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and verification for set-valued tableaux"};
    app.require_subcommand(1);

    std::string shape_text;
    int n = 0;
    bool as_json = false;
    std::string kind = "svt";
    std::string format = "text";
    long long limit = -1;
    std::string formula = "tableaux";
    std::string basis = "grothendieck";
    std::string suite_name = "all";
    int max_cells = 4;
    int max_n = 3;
    int threads = 0;
    std::string out_path;

    CLI::App* count = app.add_subcommand("count", "count tableaux of a shape");
    count->add_option("--shape", shape_text, "shape text, e.g. 5,3,2,1/3,2")->required();
    count->add_option("--n", n, "alphabet size")->required();
    count->add_option("--kind", kind)->check(CLI::IsMember({"svt", "sst"}));
    count->add_flag("--json", as_json);

    CLI::App* enumerate = app.add_subcommand("enumerate", "stream every tableau of a shape");
    enumerate->add_option("--shape", shape_text)->required();
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));
    enumerate->add_option("--limit", limit, "stop after this many tableaux");

    CLI::App* poly = app.add_subcommand("poly", "construct a Schur or Grothendieck polynomial");
    poly->add_option("--shape", shape_text)->required();
    poly->add_option("--n", n)->required();
    poly->add_option("--formula", formula)->check(CLI::IsMember({"tableaux", "bialternant"}));
    poly->add_option("--basis", basis)->check(CLI::IsMember({"schur", "grothendieck"}));
    poly->add_flag("--json", as_json);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite over a shape grid");
    verify->add_option("--suite", suite_name,
                       "parity|involution-f|involution-g|bialternant|specialization|all")
        ->check(CLI::IsMember(
            {"parity", "involution-f", "involution-g", "bialternant", "specialization", "all"}));
    verify->add_option("--max-cells", max_cells)->check(CLI::PositiveNumber);
    verify->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    verify->add_option("--threads", threads);

    CLI::App* sweep = app.add_subcommand("sweep", "write a CSV of counts over a shape grid");
    sweep->add_option("--max-cells", max_cells)->check(CLI::PositiveNumber);
    sweep->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_path, "output CSV path")->required();
    sweep->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(count)) return cmd_count(shape_text, n, kind, as_json);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(shape_text, n, format, limit);
        if (app.got_subcommand(poly)) return cmd_poly(shape_text, n, formula, basis, as_json);
        if (app.got_subcommand(verify)) return cmd_verify(suite_name, max_cells, max_n, threads);
        if (app.got_subcommand(sweep)) return cmd_sweep(max_cells, max_n, out_path, threads);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
