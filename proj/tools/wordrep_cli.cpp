// Command-line front end for the word-representation counting library.
//
//   wordrep count 3 1                 per-shape counts with cross-checks
//   wordrep table --max-cells 15      golden table, CSV/JSON/markdown
//   wordrep verify                    full verification matrix
//   wordrep series --which P ...      exact series coefficients
//
// Exit codes: 0 success; 1 verification failure or internal inconsistency;
// 2 bad flags or an unsupported method/shape combination; 3 orbit or class
// counts requested for a square shape; 4 brute-force budget exceeded.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wordrep/egf.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/report.hpp"
#include "wordrep/series.hpp"
#include "wordrep/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace wordrep;

int oracle_cells_from_env() {
    if (const char* raw = std::getenv("WORDREP_ORACLE_CELLS")) {
        try {
            int v = std::stoi(raw);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw UnsupportedMethodError(std::string("WORDREP_ORACLE_CELLS must be a positive "
                                                 "integer; got \"") +
                                     raw + "\"");
    }
    return OracleLimit{}.max_cells;
}

std::string rational_text(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

struct CountArgs {
    int rows = 1;
    int cols = 1;
    std::string quantities;  // comma-separated letters, empty = all applicable
    std::string method = "auto";
    bool json = false;
};

int cmd_count(const CountArgs& args) {
    GridShape shape{args.rows, args.cols};
    MethodPolicy policy = MethodPolicy::automatic;
    if (args.method == "egf") policy = MethodPolicy::egf;
    else if (args.method == "sum") policy = MethodPolicy::closed_sum;
    else if (args.method == "oracle") policy = MethodPolicy::oracle;
    else if (args.method != "auto")
        throw UnsupportedMethodError("unknown method \"" + args.method + "\"");

    std::set<Quantity> wanted;
    if (args.quantities.empty()) {
        wanted = all_quantities;
        if (shape.square()) {
            wanted.erase(Quantity::W);
            wanted.erase(Quantity::C);
        }
    } else {
        for (char c : args.quantities) {
            if (c == ',' || c == ' ') continue;
            auto q = parse_quantity(std::toupper(static_cast<unsigned char>(c)));
            if (!q)
                throw UnsupportedMethodError(std::string("unknown quantity letter \"") + c +
                                             "\" (expected P,H,V,R,S,W,C)");
            wanted.insert(*q);
        }
    }

    OracleLimit limit{oracle_cells_from_env()};
    CountReport report = count_report(shape, policy, wanted, limit);

    std::ostringstream out;
    if (args.json) {
        ordered_json j;
        j["m"] = shape.rows;
        j["n"] = shape.cols;
        for (Quantity q : all_quantities)
            if (report.has(q) && wanted.count(q))
                j[std::string(1, quantity_letter(q))] = report.at(q).str();
        ordered_json methods;
        for (Quantity q : all_quantities)
            if (report.has(q) && wanted.count(q))
                methods[std::string(1, quantity_letter(q))] = report.method.at(q);
        j["method"] = methods;
        j["checks"] = report.checks;
        out << j.dump(2) << "\n";
    } else {
        out << "m=" << shape.rows << " n=" << shape.cols;
        for (Quantity q : all_quantities)
            if (report.has(q) && wanted.count(q))
                out << " " << quantity_letter(q) << "=" << report.at(q);
        out << "\n";
        if (!report.checks.empty()) {
            out << "checks:";
            for (const std::string& c : report.checks) out << " [" << c << "]";
            out << "\n";
        }
    }
    std::cout << out.str();
    return 0;
}

struct TableArgs {
    int max_cells = 15;
    std::string format = "csv";
};

int cmd_table(const TableArgs& args) {
    OracleLimit limit{oracle_cells_from_env()};
    std::vector<GridShape> shapes;
    for (int area = 1; area <= args.max_cells; ++area)
        for (int rows = 1; rows <= area; ++rows)
            if (area % rows == 0 && rows != area / rows) shapes.push_back({rows, area / rows});

    std::vector<std::pair<CountReport, bool>> rows;  // report, oracle-checked
    for (GridShape s : shapes) {
        CountReport r = count_report(
            s, MethodPolicy::automatic,
            {Quantity::P, Quantity::H, Quantity::V, Quantity::R, Quantity::S, Quantity::W},
            limit);
        rows.push_back({std::move(r), s.cells() <= limit.max_cells});
    }

    const Quantity columns[] = {Quantity::P, Quantity::H, Quantity::V,
                                Quantity::R, Quantity::S, Quantity::W};
    std::ostringstream out;
    if (args.format == "csv") {
        out << "m,n,P,H,V,R,S,W\n";
        for (const auto& [r, checked] : rows) {
            out << r.shape.rows << "," << r.shape.cols;
            for (Quantity q : columns) out << "," << r.at(q);
            out << "\n";
        }
    } else if (args.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& [r, checked] : rows) {
            ordered_json j;
            j["m"] = r.shape.rows;
            j["n"] = r.shape.cols;
            for (Quantity q : columns) j[std::string(1, quantity_letter(q))] = r.at(q).str();
            j["method"] = "egf";
            j["checked"] = checked;
            arr.push_back(j);
        }
        out << arr.dump(2) << "\n";
    } else if (args.format == "markdown") {
        out << "| m | n | P | H | V | R | S | W |\n";
        out << "|---|---|---|---|---|---|---|---|\n";
        for (const auto& [r, checked] : rows) {
            out << "| " << r.shape.rows << " | " << r.shape.cols;
            for (Quantity q : columns) out << " | " << r.at(q);
            out << " |\n";
        }
    } else {
        throw UnsupportedMethodError("unknown table format \"" + args.format +
                                     "\" (expected csv, json or markdown)");
    }
    std::cout << out.str();
    return 0;
}

struct VerifyArgs {
    int max_cells = 0;  // 0 = env default
    bool json = false;
    std::string perturb;  // hidden: "n,t,delta" corrupts the Stirling cache first
};

int cmd_verify(const VerifyArgs& args) {
    if (!args.perturb.empty()) {
        int n = 0, t = 0;
        long long delta = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(args.perturb);
        if (!(in >> n >> c1 >> t >> c2 >> delta) || c1 != ',' || c2 != ',' || n < 0 || t < 0 ||
            t > n)
            throw UnsupportedMethodError("--perturb-stirling expects n,t,delta");
        testing::perturb_stirling(n, t, delta);
    }
    VerifyOptions opt;
    opt.oracle_cells = args.max_cells > 0 ? args.max_cells : oracle_cells_from_env();
    VerifyReport report = run_verification(opt);

    std::ostringstream out;
    if (args.json) {
        ordered_json j;
        j["pass"] = report.all_pass();
        ordered_json checks = ordered_json::array();
        for (const CheckResult& c : report.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["scope"] = c.scope;
            jc["pass"] = c.pass;
            jc["detail"] = c.detail;
            checks.push_back(jc);
        }
        j["checks"] = checks;
        out << j.dump(2) << "\n";
    } else {
        for (const CheckResult& c : report.checks) {
            out << (c.pass ? "[pass] " : "[FAIL] ") << c.name << " -- " << c.scope;
            if (!c.detail.empty()) out << " -- " << c.detail;
            out << "\n";
        }
        out << (report.all_pass() ? "all checks passed" : "verification FAILED") << "\n";
    }
    std::cout << out.str();
    return report.all_pass() ? 0 : 1;
}

struct SeriesArgs {
    std::string which;
    std::string caps = "0,0,0";
};

int cmd_series(const SeriesArgs& args) {
    static const std::map<std::string, ExponentKind> kinds = {
        {"P", ExponentKind::all_arrays},
        {"Heven", ExponentKind::mirror_even},
        {"Hodd", ExponentKind::mirror_odd},
        {"Roddodd", ExponentKind::half_turn_odd_odd},
        {"See", ExponentKind::quadrant_even_even},
        {"Seo", ExponentKind::quadrant_even_odd},
        {"Soo", ExponentKind::quadrant_odd_odd},
    };
    auto kind = kinds.find(args.which);
    if (kind == kinds.end()) {
        std::string known;
        for (const auto& entry : kinds) known += (known.empty() ? "" : ", ") + entry.first;
        throw UnsupportedMethodError("unknown series selector \"" + args.which +
                                     "\" (expected one of " + known + ")");
    }
    Caps caps;
    {
        std::istringstream in(args.caps);
        char c1 = 0, c2 = 0;
        if (!(in >> caps.x >> c1 >> caps.y >> c2 >> caps.z) || c1 != ',' || c2 != ',' ||
            caps.x < 0 || caps.y < 0 || caps.z < 0)
            throw UnsupportedMethodError("--caps expects dx,dy,dz with non-negative integers");
    }

    TruncatedSeries exponent = exponent_series(kind->second, caps);
    std::ostringstream out;
    auto dump = [&](const char* title, const TruncatedSeries& s) {
        out << title << ":\n";
        Degree d;
        for (d.x = 0; d.x <= caps.x; ++d.x)
            for (d.y = 0; d.y <= caps.y; ++d.y)
                for (d.z = 0; d.z <= caps.z; ++d.z)
                    out << d.x << "," << d.y << "," << d.z << ","
                        << rational_text(s.coeff(d)) << "\n";
    };
    dump("exponent", exponent);
    dump("exp", exponent.exp());
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of circled-letter arrays and their symmetry classes"};
    app.require_subcommand(1);

    CountArgs count_args;
    CLI::App* count = app.add_subcommand("count", "Count arrays for one shape");
    count->add_option("rows", count_args.rows, "number of rows (m)")
        ->required()
        ->check(CLI::PositiveNumber);
    count->add_option("cols", count_args.cols, "number of columns (n)")
        ->required()
        ->check(CLI::PositiveNumber);
    count->add_option("--quantities", count_args.quantities,
                      "comma-separated subset of P,H,V,R,S,W,C (default: all applicable)");
    count->add_option("--method", count_args.method,
                      "auto, egf, sum or oracle (default: auto = egf plus cross-checks)")
        ->check(CLI::IsMember({"auto", "egf", "sum", "oracle"}));
    count->add_flag("--json", count_args.json, "emit JSON instead of text");

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "Emit the table of counts for small shapes");
    table->add_option("--max-cells", table_args.max_cells, "largest m*n to include (default 15)")
        ->check(CLI::PositiveNumber);
    table->add_option("--format", table_args.format, "csv, json or markdown (default csv)")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the full cross-verification matrix");
    verify->add_option("--max-cells", verify_args.max_cells,
                       "brute-force budget in cells (default 10)")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--json", verify_args.json, "emit JSON instead of text");
    verify->add_option("--perturb-stirling", verify_args.perturb, "")->group("");

    SeriesArgs series_args;
    CLI::App* series = app.add_subcommand("series", "Print exact series coefficients");
    series->add_option("--which", series_args.which,
                       "P, Heven, Hodd, Roddodd, See, Seo or Soo")
        ->required();
    series->add_option("--caps", series_args.caps, "truncation degrees dx,dy,dz")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(count_args);
        if (table->parsed()) return cmd_table(table_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        return cmd_series(series_args);
    } catch (const SquareShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const OracleLimitError& e) {
        std::cerr << "error: " << e.what()
                  << " (raise WORDREP_ORACLE_CELLS to allow larger shapes)\n";
        return 4;
    } catch (const UnsupportedMethodError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
