#include "cli.hpp"

#include "records.hpp"

#include "hdq/construct.hpp"
#include "hdq/errors.hpp"
#include "hdq/hadamardesque.hpp"
#include "hdq/search.hpp"
#include "hdq/text_format.hpp"
#include "hdq/walsh.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace hdq::cli {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct MatrixInput {
    std::string path;
    bool float_mode = false;
    double tol = 1e-9;

    void add_to(CLI::App& cmd) {
        cmd.add_option("file", path, "Matrix file in the 'm n' text format ('-' for stdin)")
            ->required();
        cmd.add_flag("--float", float_mode, "Accept decimal entries (factored with --tol)");
        cmd.add_option("--tol", tol, "Relative modulus tolerance in float mode")
            ->check(CLI::NonNegativeNumber);
    }

    Factorization factor() const {
        const std::string text = read_input(path);
        if (float_mode) return to_hadamardesque(parse_float_matrix(text), tol);
        return to_hadamardesque(parse_exact_matrix(text));
    }
};

std::string pair_table_footer() {
    std::string s = "Target order (pair (i,j) -> position L = (j-1)(j-2)/2 + i):\n";
    for (int j = 2; j <= 6; ++j) {
        s += " ";
        for (int i = 1; i < j; ++i) {
            const PairIndex p{i, j};
            s += "  (" + std::to_string(i) + "," + std::to_string(j) + ")->" +
                 std::to_string(p.linear());
        }
        s += "\n";
    }
    return s;
}

unsigned default_threads() {
    if (const char* env = std::getenv("HDQ_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

void print_span(std::ostream& out, const SpanReport& report) {
    out << (report.in_span ? "true" : "false") << '\n';
    for (const auto& v : report.violations) {
        out << v.pair.i << ' ' << v.pair.j << ' ' << format_rational(v.residual) << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equal-modulus (Hadamardesque) matrix toolkit: Sylvester tables, column "
                 "representation vectors, dot-product realizations and Hadamard search",
                 "hdq"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Optional TOML/INI config file; command-line flags override it");

    int gen_k = 0;
    auto* gen = app.add_subcommand("gen-hadamard", "Print the Sylvester Hadamard matrix H_(2^k)");
    gen->add_option("k", gen_k, "Exponent k")->required()->check(CLI::NonNegativeNumber);

    int tt_m = 0;
    auto* tt = app.add_subcommand("truth-table", "Print T_m, all columns (1, ±1, ..., ±1)");
    tt->add_option("m", tt_m, "Rows")->required();

    int ct_m = 0;
    auto* ct = app.add_subcommand("ct-table", "Print CT_m, the column pairwise products of T_m");
    ct->add_option("m", ct_m, "Rows of T_m")->required();

    MatrixInput crv_in;
    bool crv_json = false;
    auto* crv_cmd = app.add_subcommand("crv", "Column representation vector of a matrix");
    crv_in.add_to(*crv_cmd);
    crv_cmd->add_flag("--json", crv_json, "Emit a {m, v} record");

    MatrixInput dots_in;
    bool dots_json = false;
    auto* dots_cmd = app.add_subcommand("dots", "Pairwise row dot products in (i,j)->L order");
    dots_in.add_to(*dots_cmd);
    dots_cmd->add_flag("--json", dots_json, "Emit a {m, a} record");

    std::string classify_path;
    bool classify_float = false;
    double classify_tol = 1e-9;
    auto* classify = app.add_subcommand("classify", "Evaluate the three Hadamard criteria (JSON)");
    classify->add_option("file", classify_path, "Square matrix file")->required();
    classify->add_flag("--float", classify_float, "Accept decimal entries");
    classify->add_option("--tol", classify_tol, "Relative modulus tolerance in float mode");

    std::string span_path;
    bool span_json = false;
    auto* span = app.add_subcommand("in-span", "Test whether a CRV lies in span RC_m");
    span->add_option("crv-file", span_path, "CRV as rational tokens or a {m, v} record")->required();
    span->add_flag("--json", span_json, "Emit a JSON report");

    int construct_m = 0;
    std::string construct_target;
    std::string flavor_str = "canonical";
    std::string shift_str = "minimal";
    std::string output_str = "matrix";
    std::size_t column_cap = kDefaultExpansionCap;
    auto* construct_cmd =
        app.add_subcommand("construct", "Realize prescribed pairwise row dot products");
    construct_cmd->add_option("m", construct_m, "Rows")->required();
    construct_cmd->add_option("targets", construct_target,
                              "Comma-separated targets a_1,...,a_(m(m-1)/2) in L order")
        ->required();
    construct_cmd->add_option("--flavor", flavor_str, "canonical | rational | irrational")
        ->check(CLI::IsMember({"canonical", "rational", "irrational"}));
    construct_cmd->add_option("--shift", shift_str, "minimal | integer | <rational value>");
    construct_cmd->add_option("--output", output_str, "matrix | multiset | crv")
        ->check(CLI::IsMember({"matrix", "multiset", "crv"}));
    construct_cmd->add_option("--column-cap", column_cap, "Refuse dense output beyond this many columns");
    construct_cmd->footer(pair_table_footer());

    int search_m = 0;
    std::uint64_t search_limit = 0;
    std::uint64_t node_limit = 0;
    double time_limit = 0.0;
    bool normalize = false;
    bool no_parity = false;
    bool no_bound = false;
    bool search_json = false;
    unsigned threads = default_threads();
    auto* search = app.add_subcommand("search", "Search Hadamard column sets of order m");
    search->add_option("m", search_m, "Order")->required();
    search->add_option("--limit", search_limit, "Stop after N solutions");
    search->add_option("--node-limit", node_limit, "Stop after about N nodes");
    search->add_option("--time-limit", time_limit, "Stop after S seconds")->check(CLI::PositiveNumber);
    search->add_flag("--normalize", normalize, "Force column 1 (all ones) into every solution");
    search->add_flag("--no-parity", no_parity, "Disable the parity prune");
    search->add_flag("--no-bound", no_bound, "Disable the pair-sum bound prune");
    search->add_option("--threads", threads, "Worker threads (default $HDQ_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    search->add_flag("--json", search_json, "Emit a JSON report instead of streaming lines");

    int verify_m = 0;
    std::vector<ColumnIndex> verify_cols;
    auto* verify = app.add_subcommand("verify-set", "Check a column set against all three criteria");
    verify->add_option("m", verify_m, "Order")->required();
    verify->add_option("indices", verify_cols, "1-based columns of T_m")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kArgumentError;
    }

    try {
        if (gen->parsed()) {
            out << format_matrix(sylvester(gen_k));
        } else if (tt->parsed()) {
            out << format_matrix(truth_table(tt_m));
        } else if (ct->parsed()) {
            out << format_matrix(ct_table(ct_m));
        } else if (crv_cmd->parsed()) {
            const CRVector v = crv(crv_in.factor().matrix);
            if (crv_json) {
                out << records::to_json(v).dump() << '\n';
            } else {
                out << format_rationals(v.values()) << '\n';
            }
        } else if (dots_cmd->parsed()) {
            const PairDotVector a = pairwise_dots(dots_in.factor().matrix);
            if (dots_json) {
                out << records::to_json(a).dump() << '\n';
            } else {
                out << format_rationals(a.values()) << '\n';
            }
        } else if (classify->parsed()) {
            const std::string text = read_input(classify_path);
            const ExactMatrix m = classify_float
                                      ? [&] {
                                            // Float input is classified after snapping each
                                            // column to its factored exact form.
                                            auto f = to_hadamardesque(parse_float_matrix(text),
                                                                      classify_tol);
                                            return f.matrix.expand();
                                        }()
                                      : parse_exact_matrix(text);
            out << records::to_json(classify_square(m)).dump(2) << '\n';
        } else if (span->parsed()) {
            const SpanReport report = in_span_rc(records::parse_crv(read_input(span_path)));
            if (span_json) {
                out << records::to_json(report).dump() << '\n';
            } else {
                print_span(out, report);
            }
        } else if (construct_cmd->parsed()) {
            ConstructionOptions opts;
            opts.flavor = flavor_str == "rational"     ? Flavor::uniform_rational
                          : flavor_str == "irrational" ? Flavor::uniform_irrational
                                                       : Flavor::canonical;
            if (shift_str == "minimal") {
                opts.shift = ShiftPolicy::minimal;
            } else if (shift_str == "integer") {
                opts.shift = ShiftPolicy::minimal_integer;
            } else {
                opts.shift = ShiftPolicy::explicit_value;
                opts.explicit_shift = parse_rational(shift_str);
            }
            opts.expand = output_str == "matrix";
            opts.column_cap = column_cap;
            const auto target = parse_entries(construct_target);
            const Realization r = construct(construct_m, target, opts);
            if (output_str == "matrix") {
                out << format_matrix(*r.dense);
            } else if (output_str == "crv") {
                out << format_rationals(r.crv.values()) << '\n';
            } else {
                out << records::multiset_record(r, opts.flavor).dump() << '\n';
            }
        } else if (search->parsed()) {
            SearchOptions opts;
            if (search_limit > 0) opts.solution_limit = search_limit;
            if (node_limit > 0) opts.node_limit = node_limit;
            if (time_limit > 0) {
                opts.time_limit = std::chrono::milliseconds(static_cast<long>(time_limit * 1000.0));
            }
            opts.force_first_column = normalize;
            opts.parity_prune = !no_parity;
            opts.bound_prune = !no_bound;
            opts.workers = threads;
            opts.materialize = false;

            SolutionCallback stream;
            if (!search_json) {
                stream = [&out, search_m](const Solution& s) {
                    out << search_m << ':';
                    for (ColumnIndex j : s.columns) out << ' ' << j;
                    out << '\n' << std::flush;
                };
            }
            const SearchReport report = find_hadamard_column_sets(search_m, opts, stream);
            if (search_json) {
                out << records::to_json(report).dump(2) << '\n';
            } else {
                if (report.solutions.empty()) {
                    out << (report.exhaustive ? "no solutions (exhaustive)" : "no solutions found")
                        << '\n';
                }
                out << "nodes=" << report.nodes << " elapsed=" << report.elapsed.count()
                    << "s exhaustive=" << (report.exhaustive ? "true" : "false")
                    << " limit=" << to_string(report.limit)
                    << " solutions=" << report.solutions.size()
                    << (report.normalized ? " normalized=column1" : "") << '\n';
            }
            if (report.limit == LimitHit::nodes || report.limit == LimitHit::time) {
                err << "search stopped by the " << to_string(report.limit) << " limit\n";
                return kResourceLimit;
            }
        } else if (verify->parsed()) {
            const auto v = verify_column_set(verify_m, verify_cols);
            out << (v.accepted() ? "true" : "false") << '\n';
            out << "size_ok=" << v.size_ok << " sums_zero=" << v.sums_zero << " in_span="
                << (v.in_span ? (*v.in_span ? "1" : "0") : "skipped")
                << " dense_hadamard=" << v.dense_hadamard << '\n';
        }
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed record: " << e.what() << '\n';
        return kArgumentError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    }
    return kOk;
}

}  // namespace hdq::cli
