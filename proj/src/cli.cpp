#include "chainlls/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "chainlls/checks.hpp"
#include "chainlls/instance.hpp"
#include "chainlls/io.hpp"

namespace chainlls {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error("cannot write " + path);
}

// Primary document of a command: to --out when given, else to the
// stream.
void emit(const std::string& doc, const std::string& out_path,
          std::ostream& out) {
    if (out_path.empty())
        out << doc;
    else
        write_file(out_path, doc);
}

Field parse_field(const std::string& text) {
    if (text == "rational") return Field::rationals();
    if (text.rfind("prime:", 0) == 0) {
        const std::string digits = text.substr(6);
        long long p = 0;
        std::size_t used = 0;
        bool ok = !digits.empty();
        if (ok) {
            try {
            p = std::stoll(digits, &used);
            } catch (const std::exception&) {
                ok = false;
            }
            ok = ok && used == digits.size();
        }
        if (!ok)
            throw Error("malformed field \"" + text +
                        "\" (expected rational or prime:P)");
        return Field::prime(p);
    }
    throw Error("unknown field \"" + text +
                "\" (expected rational or prime:P)");
}

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& what) {
    const auto fail = [&]() -> Error {
        return Error(what + " must be a comma-separated integer list");
    };
    if (text.empty()) throw fail();
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw fail();
        } catch (const std::exception&) {
            throw fail();
        }
    }
    return out;
}

std::string int_list_str(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(xs[k]);
    }
    return out;
}

struct GenTokens {
    std::string kind = "random";
    int d = 0;
    std::optional<std::vector<int>> b;
    std::optional<std::vector<int>> bp;
    std::optional<std::vector<int>> m;
};

GenTokens parse_gen_tokens(const std::vector<std::string>& tokens) {
    GenTokens g;
    bool have_d = false;
    std::set<std::string> seen;
    for (const std::string& token : tokens) {
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error("malformed generation token \"" + token +
                        "\" (expected key=value)");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (!seen.insert(key).second)
            throw Error("duplicate generation key \"" + key + "\"");
        if (key == "kind") {
            if (value != "monomial" && value != "random")
                throw Error("kind must be monomial or random");
            g.kind = value;
        } else if (key == "d") {
            const std::vector<int> v = parse_int_list(value, "d");
            if (v.size() != 1) throw Error("d must be a single integer");
            g.d = v[0];
            have_d = true;
        } else if (key == "b") {
            g.b = parse_int_list(value, "b");
        } else if (key == "bp") {
            g.bp = parse_int_list(value, "bp");
        } else if (key == "m") {
            g.m = parse_int_list(value, "m");
        } else {
            throw Error("unknown generation key \"" + key + "\"");
        }
    }
    if (!have_d) throw Error("generation needs d=<degree>");
    return g;
}

RefinedSeries generate(const GenTokens& g, const Field& f,
                       std::uint64_t seed) {
    if (g.kind == "monomial") {
        if (g.m && g.b && *g.m != *g.b)
            throw Error("monomial generation: m and b must agree");
        std::vector<int> m;
        if (g.m)
            m = *g.m;
        else if (g.b)
            m = *g.b;
        else
            throw Error("monomial generation needs m=<exponents>");
        if (m.empty()) throw Error("m must be nonempty");
        std::vector<int> bp;
        for (std::size_t k = m.size(); k > 0; --k)
            bp.push_back(g.d - m[k - 1]);
        if (g.bp && *g.bp != bp)
            throw Error("monomial generation: bp is forced to " +
                        int_list_str(bp) + " by the exponents");
        const SequenceSpec spec(g.d, static_cast<int>(m.size()) - 1, m, bp);
        return monomial_instance(spec, f, m);
    }
    if (!g.b || !g.bp)
        throw Error("random generation needs b=<orders> and bp=<orders>");
    if (g.b->empty() || g.b->size() != g.bp->size())
        throw Error("b and bp must be nonempty lists of equal length");
    const SequenceSpec spec(g.d, static_cast<int>(g.b->size()) - 1, *g.b,
                            *g.bp);
    return random_refined(spec, f, seed);
}

int run_gen(const std::vector<std::string>& tokens, const Field& f,
            std::uint64_t seed, const std::string& out_path,
            std::ostream& out) {
    const RefinedSeries h = generate(parse_gen_tokens(tokens), f, seed);
    out << "a = " << int_list_str(h.a) << "\n";
    out << "b = " << int_list_str(h.b) << "\n";
    out << "bp = " << int_list_str(h.bp) << "\n";
    out << "c = " << int_list_str(h.c) << "\n";
    emit(instance_to_json(h), out_path, out);
    return 0;
}

CheckReport corner_report(const RefinedSeries& h, const GridCells& cells) {
    CheckReport report;
    report.name = "restricts_to_input";
    report.add(-1, -1, "corner_cells_match_components",
               verify_extends(h, cells));
    return report;
}

bool reports_pass(const std::vector<CheckReport>& reports) {
    for (const CheckReport& report : reports)
        if (!report.all_pass()) return false;
    return true;
}

int run_check(const std::string& instance_path, const std::string& grid_path,
              const std::string& out_path, std::ostream& out) {
    const RefinedSeries h = instance_from_json(read_file(instance_path));
    const KernelGrid kg(h);
    std::vector<CheckReport> reports;
    reports.push_back(validate(h));
    std::vector<CheckReport> grid_checks = run_all_checks(kg);
    for (CheckReport& report : grid_checks)
        reports.push_back(std::move(report));
    if (!grid_path.empty()) {
        const GridCells cells = grid_from_json(h, read_file(grid_path));
        reports.push_back(verify_exact(h, kg, cells));
        reports.push_back(corner_report(h, cells));
    }
    emit(reports_to_json(reports), out_path, out);
    return reports_pass(reports) ? 0 : 1;
}

int run_build(const std::string& instance_path, bool seeded,
              std::uint64_t seed, const std::string& out_path,
              std::ostream& out) {
    const RefinedSeries h = instance_from_json(read_file(instance_path));
    const KernelGrid kg(h);
    const ChoiceStrategy strategy = seeded ? ChoiceStrategy::seeded(seed)
                                           : ChoiceStrategy::deterministic();
    const ExtensionGrid grid = build_extension(h, kg, strategy);
    std::vector<CheckReport> reports;
    reports.push_back(verify_exact(h, kg, grid.cells()));
    reports.push_back(corner_report(h, grid.cells()));
    out << reports_to_json(reports);
    const std::string grid_doc = grid_to_json(h, grid.cells());
    const std::string trace_doc = traces_to_json_lines(grid.traces());
    if (out_path.empty()) {
        out << grid_doc;
        out << trace_doc;
    } else {
        write_file(out_path, grid_doc);
        write_file(out_path + ".trace.jsonl", trace_doc);
    }
    return reports_pass(reports) ? 0 : 1;
}

int run_unique(const std::string& instance_path, int trials,
               std::uint64_t seed, const std::string& out_path,
               std::ostream& out) {
    const RefinedSeries h = instance_from_json(read_file(instance_path));
    const UniquenessVerdict verdict = decide_unique(h, trials, seed);
    emit(verdict_to_json(h, verdict), out_path, out);
    return 0;
}

int run_grid(const std::string& instance_path, const std::string& format,
             const std::string& out_path, std::ostream& out) {
    const RefinedSeries h = instance_from_json(read_file(instance_path));
    const KernelGrid kg(h);
    const std::string doc = format == "csv" ? grid_table_csv(h, kg)
                                            : grid_table_json(h, kg);
    emit(doc, out_path, out);
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact section grids on a three-component chain of "
                 "rational curves"};
    app.name("chainlls");
    app.require_subcommand(1);

    std::vector<std::string> gen_tokens;
    std::string field_text = "rational";
    std::uint64_t seed = 0;
    int trials = 10;
    std::string out_path;
    std::string instance_path;
    std::string grid_path;
    std::string format = "json";

    CLI::App* gen = app.add_subcommand(
        "gen", "generate an instance from key=value tokens");
    gen->add_option("tokens", gen_tokens,
                    "kind=monomial|random d=N, then m=LIST for monomial or "
                    "b=LIST bp=LIST for random");
    gen->add_option("--field", field_text, "rational (default) or prime:P");
    gen->add_option("--seed", seed, "seed for random generation");
    gen->add_option("--out", out_path, "write the instance JSON here");

    CLI::App* check = app.add_subcommand(
        "check", "verify the kernel-grid propositions of an instance");
    check->add_option("--instance", instance_path, "instance JSON path")
        ->required();
    check->add_option("--grid", grid_path,
                      "also verify this grid JSON against the instance");
    check->add_option("--out", out_path, "write the report JSON here");

    CLI::App* build = app.add_subcommand(
        "build", "build an exact extension grid and verify it");
    build->add_option("--instance", instance_path, "instance JSON path")
        ->required();
    CLI::Option* build_seed = build->add_option(
        "--seed", seed, "seeded choice strategy (omit for deterministic)");
    build->add_option("--out", out_path,
                      "write the grid JSON here and the step traces to "
                      "<out>.trace.jsonl");

    CLI::App* unique = app.add_subcommand(
        "unique", "decide whether the exact extension is unique");
    unique->add_option("--instance", instance_path, "instance JSON path")
        ->required();
    unique->add_option("--trials", trials,
                       "seeded builds in the corroboration sweep");
    unique->add_option("--seed", seed, "base seed for the sweep");
    unique->add_option("--out", out_path, "write the verdict JSON here");

    CLI::App* table = app.add_subcommand(
        "grid", "emit the kernel dimension table with region annotations");
    table->add_option("--instance", instance_path, "instance JSON path")
        ->required();
    table->add_option("--format", format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--out", out_path, "write the table here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_tokens, parse_field(field_text), seed,
                           out_path, out);
        if (check->parsed())
            return run_check(instance_path, grid_path, out_path, out);
        if (build->parsed())
            return run_build(instance_path, build_seed->count() > 0, seed,
                             out_path, out);
        if (unique->parsed())
            return run_unique(instance_path, trials, seed, out_path, out);
        if (table->parsed())
            return run_grid(instance_path, format, out_path, out);
    } catch (const InternalError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace chainlls
