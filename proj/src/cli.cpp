#include "farey/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "farey/farey.hpp"
#include "farey/rational.hpp"
#include "farey/terminal.hpp"
#include "farey/tree.hpp"
#include "farey/young.hpp"
#include "json.hpp"

namespace farey::cli {

namespace {

constexpr std::int64_t kDefaultVerifyHeight = 60;
constexpr std::int64_t kLargeHeightThreshold = 300;
constexpr std::int64_t kResidentHeightLimit = 200;

void apply_jobs(std::int64_t jobs) {
#ifdef _OPENMP
    if (jobs >= 1) omp_set_num_threads(static_cast<int>(jobs));
#else
    (void)jobs;
#endif
}

std::string shape_json(const LShape& shape) {
    nlohmann::ordered_json j;
    j["bottom"] = shape.bottom;
    j["left"] = shape.left;
    return j.dump();
}

void print_table_grid(std::ostream& out, const RankingTable& table) {
    const std::int64_t width = std::to_string(table.m * table.n).size();
    for (std::int64_t j = table.n; j >= 1; --j) {  // row j=1 is the bottom line
        for (std::int64_t i = 1; i <= table.m; ++i) {
            if (i > 1) out << ' ';
            out << std::setw(static_cast<int>(width)) << table.at(i, j);
        }
        out << '\n';
    }
}

std::string table_json(const RankingTable& table) {
    nlohmann::ordered_json j;
    j["m"] = table.m;
    j["n"] = table.n;
    j["xi"] = table.xi.str();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::int64_t row = 1; row <= table.n; ++row) {
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (std::int64_t i = 1; i <= table.m; ++i) cells.push_back(table.at(i, row));
        rows.push_back(std::move(cells));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file \"" + path + "\"");
    file << text;
}

void print_report(std::ostream& out, const VerificationReport& report, bool stats) {
    out << "mode=" << report.mode << ' ' << (report.mode == "corollary2" ? "max_mn_sum=" : "height=")
        << report.height << " status=" << (report.pass ? "pass" : "fail")
        << " vertices=" << report.total_vertices;
    if (report.mode != "corollary2") out << " precedent_height=" << VerificationReport::precedent_height;
    out << '\n';
    if (!report.pass) out << "counterexample: " << report.counterexample << '\n';
    if (stats) {
        for (const LevelStats& level : report.levels) {
            out << "stats level=" << level.level << " blocks=";
            for (std::size_t i = 0; i < level.blocks.size(); ++i) {
                if (i) out << ',';
                out << '(' << level.blocks[i].m << ',' << level.blocks[i].n << "):" << level.blocks[i].count;
            }
            out << '\n';
        }
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Farey interval trees, terminal-pair recursion and their verified equivalence"};
    app.require_subcommand(1);

    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::string xi_text;
    std::string a_text;
    std::string b_text;
    std::string kind_text = "terminal";
    std::string format_text = "json";
    std::string mode_text = "all";
    std::string output_path;
    std::int64_t height = kDefaultVerifyHeight;
    std::int64_t jobs = 0;
    std::int64_t budget = 1'000'000'000;
    std::int64_t guard = 9;
    std::int64_t max_mn_sum = 8;
    bool side_left = false;
    bool side_right = false;
    bool as_json = false;
    bool stream = false;
    bool yes_large = false;
    bool show_stats = false;

    auto* seq_cmd = app.add_subcommand("seq", "print the generalized Farey sequence for indices m n");
    seq_cmd->add_option("m", m)->required();
    seq_cmd->add_option("n", n)->required();

    auto* intervals_cmd = app.add_subcommand("intervals", "print the tagged open intervals for indices m n");
    intervals_cmd->add_option("m", m)->required();
    intervals_cmd->add_option("n", n)->required();

    auto* table_cmd = app.add_subcommand("table", "print the ranking table of size m n at slope p/q");
    table_cmd->add_option("m", m)->required();
    table_cmd->add_option("n", n)->required();
    table_cmd->add_option("xi", xi_text)->required();
    table_cmd->add_flag("--json", as_json, "emit the JSON form instead of a grid");

    auto* delta_cmd = app.add_subcommand("delta", "corner difference of the size-(m,n) table at slope p/q");
    delta_cmd->add_option("m", m)->required();
    delta_cmd->add_option("n", n)->required();
    delta_cmd->add_option("xi", xi_text)->required();
    auto* left_flag = delta_cmd->add_flag("--left", side_left, "one-sided limit from below");
    delta_cmd->add_flag("--right", side_right, "one-sided limit from above")->excludes(left_flag);

    auto* suranyi_cmd =
        app.add_subcommand("suranyi", "terminal pair of the interval (a, b) tagged with indices m n");
    suranyi_cmd->add_option("a", a_text)->required();
    suranyi_cmd->add_option("b", b_text)->required();
    suranyi_cmd->add_option("m", m)->required();
    suranyi_cmd->add_option("n", n)->required();

    auto* decompress_cmd = app.add_subcommand("decompress", "rebuild the L-shape of the terminal pair s t m n");
    decompress_cmd->add_option("s", s)->required();
    decompress_cmd->add_option("t", t)->required();
    decompress_cmd->add_option("m", m)->required();
    decompress_cmd->add_option("n", n)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference enumerations");
    auto* lshapes_cmd = oracle_cmd->add_subcommand("lshapes", "all difference-type L-shapes of size m n");
    lshapes_cmd->add_option("m", m)->required();
    lshapes_cmd->add_option("n", n)->required();
    lshapes_cmd->add_option("--guard", guard, "cap on m + n for exhaustive searches");

    auto* tree_cmd = app.add_subcommand("tree", "build or verify the leveled trees");
    tree_cmd->require_subcommand(1);
    auto* build_cmd = tree_cmd->add_subcommand("build", "build a tree and export it");
    build_cmd->add_option("--kind", kind_text, "farey | terminal | young")->required();
    build_cmd->add_option("--height", height)->required();
    build_cmd->add_option("--format", format_text, "json | dot");
    build_cmd->add_option("-o,--output", output_path, "write to a file instead of standard output");
    build_cmd->add_option("--jobs", jobs, "worker threads (1 = serial)");
    build_cmd->add_option("--budget", budget, "vertex budget guard");

    auto* verify_cmd = tree_cmd->add_subcommand("verify", "verify the tree equivalences up to a height");
    verify_cmd->add_option("--height", height, "levels to check (default 60)");
    verify_cmd->add_option("--mode", mode_text, "theorem1 | isomorphism | corollary2 | all");
    verify_cmd->add_flag("--stream", stream, "keep only adjacent levels in memory");
    verify_cmd->add_option("--jobs", jobs, "worker threads (1 = serial)");
    verify_cmd->add_option("--max-mn-sum", max_mn_sum, "size bound for the enumeration check");
    verify_cmd->add_option("--guard", guard, "cap on m + n for exhaustive searches");
    verify_cmd->add_option("--budget", budget, "vertex budget guard");
    verify_cmd->add_flag("--yes-large", yes_large, "allow heights above the warning threshold");
    verify_cmd->add_flag("--stats", show_stats, "print per-level block counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*seq_cmd) {
            const FareySequence sequence = farey_sequence(m, n);
            for (std::size_t i = 0; i < sequence.terms.size(); ++i) {
                if (i) out << ' ';
                out << sequence.terms[i].str();
            }
            out << '\n';
            return 0;
        }
        if (*intervals_cmd) {
            for (const FareyVertex& v : farey_intervals(m, n)) out << label(v) << '\n';
            return 0;
        }
        if (*table_cmd) {
            const RankingTable table = ranking_table(m, n, Rational::parse(xi_text));
            if (as_json)
                out << table_json(table) << '\n';
            else
                print_table_grid(out, table);
            return 0;
        }
        if (*delta_cmd) {
            const Rational xi = Rational::parse(xi_text);
            if (side_left || side_right)
                out << delta_one_sided(m, n, xi, side_left ? Side::left : Side::right) << '\n';
            else
                out << delta(m, n, xi) << '\n';
            return 0;
        }
        if (*suranyi_cmd) {
            const FareyVertex v{Rational::parse(a_text), Rational::parse(b_text), m, n};
            if (!is_valid_interval(v))
                throw std::domain_error(label(v) + " is not an interval of the (" + std::to_string(m) + "," +
                                        std::to_string(n) + ") sequence");
            const TerminalPair pair = suranyi_terminal(v);
            out << pair.s << ' ' << pair.t << ' ' << pair.m << ' ' << pair.n << '\n';
            return 0;
        }
        if (*decompress_cmd) {
            out << shape_json(decompress(TerminalPair{s, t, m, n})) << '\n';
            return 0;
        }
        if (*lshapes_cmd) {
            for (const LShape& shape : enumerate_difference_lshapes(m, n, guard)) out << shape_json(shape) << '\n';
            return 0;
        }
        if (*build_cmd) {
            if (height < 0) throw std::invalid_argument("height must be nonnegative");
            if (format_text != "json" && format_text != "dot")
                throw std::invalid_argument("unknown format \"" + format_text + "\"");
            apply_jobs(jobs);
            BuildOptions options;
            options.parallel = jobs != 1;
            options.max_vertices = budget;
            const TreeKind kind = tree_kind_from_string(kind_text);
            std::string text;
            if (kind == TreeKind::farey) {
                const FareyTree tree = build_farey_tree(height, options);
                text = format_text == "json" ? export_json(tree) : export_dot(tree);
            } else {
                const PairTree tree =
                    kind == TreeKind::terminal ? build_terminal_tree(height, options) : build_young_tree(height, options);
                text = format_text == "json" ? export_json(tree) : export_dot(tree);
            }
            write_output(text, output_path, out);
            return 0;
        }
        if (*verify_cmd) {
            if (height < 0) throw std::invalid_argument("height must be nonnegative");
            if (mode_text != "theorem1" && mode_text != "isomorphism" && mode_text != "corollary2" &&
                mode_text != "all")
                throw std::invalid_argument("unknown mode \"" + mode_text + "\"");
            if (height > kLargeHeightThreshold && !yes_large)
                throw std::invalid_argument("height " + std::to_string(height) + " exceeds the warning threshold " +
                                            std::to_string(kLargeHeightThreshold) + "; pass --yes-large to proceed");
            apply_jobs(jobs);
            VerifyOptions options;
            options.parallel = jobs != 1;
            options.streaming = stream;
            options.max_vertices = budget;
            options.enumeration_guard = guard;
            if (!options.streaming && height > kResidentHeightLimit) {
                err << "note: switching to streaming mode for height " << height << " > " << kResidentHeightLimit
                    << '\n';
                options.streaming = true;
            }

            bool all_pass = true;
            const auto report_one = [&](const VerificationReport& report) {
                print_report(out, report, show_stats);
                all_pass = all_pass && report.pass;
            };
            if (mode_text == "theorem1" || mode_text == "all") report_one(verify_theorem1(height, options));
            if (mode_text == "isomorphism" || mode_text == "all") report_one(verify_isomorphism(height, options));
            if (mode_text == "corollary2" || mode_text == "all")
                report_one(verify_corollary2(std::min(max_mn_sum, guard), options));
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand selected\n";
    return 2;
}

}  // namespace farey::cli
