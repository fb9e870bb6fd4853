// ldcode: location-domination invariants, associated graphs, extremal
// constructions and exhaustive verification sweeps.
//
// Exit codes: 0 success / all checks passed, 1 violations found, 2 usage or input error.

#include "ldcode/assoc.hpp"
#include "ldcode/extremal.hpp"
#include "ldcode/families.hpp"
#include "ldcode/graph6.hpp"
#include "ldcode/ld.hpp"
#include "ldcode/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ldcode;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphInput {
    std::string input;
    std::string family;
    int n = 0;
    int r = 0;
    int s = 0;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("input", input, "graph6 string, graph6 file (one per line), edge-list file, or - for stdin");
        cmd->add_option("--family", family, "named family instead of an input");
        cmd->add_option("--n", n, "family order");
        cmd->add_option("--r", r, "first side (complete_bipartite, bistar)");
        cmd->add_option("--s", s, "second side (complete_bipartite, bistar)");
    }
};

std::string read_all(std::istream& in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    return read_all(in);
}

bool looks_like_edge_list(const std::string& text)
{
    // graph6 never uses digits or spaces.
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && std::isdigit(static_cast<unsigned char>(text[first]));
}

std::vector<Graph> graphs_from_text(const std::string& text)
{
    if (looks_like_edge_list(text))
        return {parse_edge_list(text)};
    return read_graph6_lines(text);
}

FamilySpec family_spec(const std::string& kind_name, int n, int r, int s)
{
    const auto kind = parse_family_kind(kind_name);
    if (!kind)
        throw UsageError("unknown family '" + kind_name +
                         "' (path, cycle, wheel, complete, star, complete_bipartite, bistar)");
    FamilySpec spec = FamilySpec::of_order(*kind, n);
    if (spec.two_parameter()) {
        if (r <= 0 || s <= 0)
            throw UsageError(kind_name + " needs --r and --s");
        spec = FamilySpec::of_sides(*kind, r, s);
    } else if (n <= 0) {
        throw UsageError(kind_name + " needs --n");
    }
    return spec;
}

std::vector<Graph> load(const GraphInput& in)
{
    if (!in.family.empty()) {
        if (!in.input.empty())
            throw UsageError("give either an input or --family, not both");
        return {generate_family(family_spec(in.family, in.n, in.r, in.s))};
    }
    if (in.input.empty())
        throw UsageError("missing input (graph6 string, file, or --family)");
    std::vector<Graph> graphs;
    if (in.input == "-")
        graphs = graphs_from_text(read_all(std::cin));
    else if (std::filesystem::is_regular_file(in.input))
        graphs = graphs_from_text(read_file(in.input));
    else
        graphs = {decode_graph6(in.input)};
    if (graphs.empty())
        throw UsageError("input contains no graphs");
    return graphs;
}

std::string prefix(const std::vector<Graph>& all, const Graph& g)
{
    return all.size() > 1 ? encode_graph6(g) + " " : std::string();
}

int cmd_lambda(const GraphInput& in)
{
    const auto graphs = load(in);
    for (const Graph& g : graphs) {
        const LdCode code = lambda(g);
        std::cout << prefix(graphs, g) << "lambda=" << code.size << " witness=" << code.witness.to_string()
                  << " lambda_complement=" << lambda_complement(g) << '\n';
    }
    return kExitOk;
}

int cmd_global(const GraphInput& in)
{
    const auto graphs = load(in);
    for (const Graph& g : graphs) {
        const LdCode code = lambda_global(g);
        std::cout << prefix(graphs, g) << "lambda_global=" << code.size << " witness=" << code.witness.to_string()
                  << " lambda=" << lambda(g).size << " lambda_complement=" << lambda_complement(g) << '\n';
    }
    return kExitOk;
}

VertexSet parse_set(const std::string& text)
{
    VertexSet out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 0 || v >= kMaxOrder)
            throw UsageError("--set: '" + item + "' is not a vertex index");
        out.insert(v);
    }
    return out;
}

int cmd_assoc(const GraphInput& in, const std::string& set_text, bool dot)
{
    const auto graphs = load(in);
    if (graphs.size() != 1)
        throw UsageError("assoc takes exactly one graph");
    const Graph& g = graphs.front();
    const VertexSet s = parse_set(set_text);
    if (!s.is_subset_of(g.vertices()))
        throw UsageError("--set names a vertex outside 0.." + std::to_string(g.order() - 1));
    const AssocGraph a = build_associated(g, s);
    if (dot) {
        std::cout << to_dot(a);
        return kExitOk;
    }
    std::cout << "order=" << a.order() << " size=" << a.edges().size() << " deg(z)=" << degree_of_z(a) << '\n';
    for (int i = 0; i < a.order(); ++i)
        std::cout << "vertex " << a.name(i) << " level=" << a.level(i) << " trace=" << a.trace(i).to_string() << '\n';
    for (const auto& e : a.edges())
        std::cout << "edge " << a.name(e.x) << " " << a.name(e.y) << " label=" << e.label << '\n';
    std::mt19937_64 rng(1);
    const auto trails = sample_trails(a, 100, static_cast<int>(a.edges().size()), rng);
    const auto paths = monotone_paths(a);
    const PropertyReport rep = check_properties(a, trails, paths);
    auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
    std::cout << "order_formula=" << flag(rep.order_formula) << " bipartite=" << flag(rep.bipartite)
              << " incident_labels=" << flag(rep.incident_labels_distinct)
              << " cycle_parity=" << flag(rep.cycle_label_parity) << " closed_walks=" << flag(rep.closed_walks)
              << " monotone_paths=" << flag(rep.monotone_paths) << " levels=" << flag(rep.level_structure) << '\n';
    for (const auto& f : rep.failures)
        std::cout << "failure: " << f << '\n';
    return rep.all() ? kExitOk : kExitViolations;
}

void print_graph(const Graph& g, const std::string& format)
{
    if (format == "edgelist")
        std::cout << to_edge_list(g);
    else
        std::cout << encode_graph6(g) << '\n';
}

int cmd_construct(int r, int s, const std::string& kind, const std::string& format)
{
    if (kind == "extremal") {
        const SubsetFamilyGraph built = construct_extremal(r, s);
        print_graph(built.graph, format);
        std::cout << "r=" << r << " s=" << s << " lambda=" << built.lambda
                  << " lambda_complement=" << built.lambda_complement << " certified family=" << built.provenance
                  << '\n';
        std::cout << "W =";
        for (Subset x : built.w_subsets)
            std::cout << ' ' << subset_name(x, r);
        std::cout << '\n';
        return kExitOk;
    }
    Graph g = kind == "bistar" ? construct_gap_minus(r, s) : construct_gap_zero(r, s);
    print_graph(g, format);
    const GapCertificate cert = certify_gap(g);
    std::cout << "r=" << r << " s=" << s << " lambda=" << cert.lambda << " lambda_complement=" << cert.lambda_complement
              << '\n';
    return kExitOk;
}

int cmd_family(const std::string& kind, const std::vector<int>& params, const std::string& format)
{
    const auto parsed = parse_family_kind(kind);
    if (!parsed)
        throw UsageError("unknown family '" + kind + "'");
    FamilySpec probe = FamilySpec::of_order(*parsed, 0);
    const std::size_t want = probe.two_parameter() ? 2 : 1;
    if (params.size() != want)
        throw UsageError(kind + " takes " + std::to_string(want) + " parameter(s)");
    const FamilySpec spec = want == 2 ? FamilySpec::of_sides(*parsed, params[0], params[1])
                                      : FamilySpec::of_order(*parsed, params[0]);
    print_graph(generate_family(spec), format);
    return kExitOk;
}

void emit(const std::vector<VerificationReport>& reports, const std::string& format, std::ostream& out)
{
    out << (format == "csv" ? reports_to_csv(reports) : reports_to_json(reports));
}

int cmd_verify(const std::string& suite, SuiteOptions options, const std::string& graph6_file,
               const std::string& report_file, const std::string& format)
{
    if (!graph6_file.empty()) {
        options.external = read_graph6_lines(read_file(graph6_file));
    }
    const VerificationReport rep = run_suite(suite, options);
    std::cout << "suite=" << rep.suite << " universe=\"" << rep.universe << "\" checked=" << rep.checked
              << " violations=" << rep.violations.size() << " elapsed=" << rep.elapsed_seconds << "s "
              << (rep.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& [key, value] : rep.counters)
        std::cout << "  " << key << "=" << value << '\n';
    for (const auto& v : rep.violations)
        std::cout << "VIOLATION " << v.graph6 << " " << v.details << '\n';
    if (!report_file.empty()) {
        std::ofstream out(report_file);
        if (!out)
            throw UsageError("cannot write " + report_file);
        emit({rep}, format, out);
    }
    return rep.passed() ? kExitOk : kExitViolations;
}

int cmd_report(std::vector<std::string> suites, SuiteOptions options, const std::string& graph6_file,
               const std::string& format)
{
    if (!graph6_file.empty())
        options.external = read_graph6_lines(read_file(graph6_file));
    if (suites.empty())
        suites = suite_names();
    std::vector<VerificationReport> reports;
    for (const auto& name : suites)
        reports.push_back(run_suite(name, options));
    emit(reports, format, std::cout);
    for (const auto& r : reports)
        if (!r.passed())
            return kExitViolations;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Location-domination toolkit: exact invariants, associated graphs, constructions, sweeps"};
    app.require_subcommand(1);

    GraphInput lambda_in, global_in, assoc_in;
    auto* lambda_cmd = app.add_subcommand("lambda", "location-domination number with a witness code");
    lambda_in.attach(lambda_cmd);
    auto* global_cmd = app.add_subcommand("global", "global location-domination number with a witness");
    global_in.attach(global_cmd);

    auto* assoc_cmd = app.add_subcommand("assoc", "associated graph of an LD-set and its property checks");
    assoc_in.attach(assoc_cmd);
    std::string assoc_set;
    bool assoc_dot = false;
    assoc_cmd->add_option("--set", assoc_set, "LD-set as comma-separated vertex indices")->required();
    assoc_cmd->add_flag("--dot", assoc_dot, "print Graphviz DOT instead of the text summary");

    auto* construct_cmd = app.add_subcommand("construct", "bipartite witness for a given complement gap");
    int cons_r = 0, cons_s = 0;
    std::string cons_kind = "extremal";
    std::string cons_format = "graph6";
    construct_cmd->add_option("--r", cons_r, "smaller side")->required();
    construct_cmd->add_option("--s", cons_s, "larger side")->required();
    construct_cmd->add_option("--kind", cons_kind, "extremal | bistar | biclique")
        ->check(CLI::IsMember({"extremal", "bistar", "biclique"}));
    construct_cmd->add_option("--format", cons_format, "graph6 | edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* family_cmd = app.add_subcommand("family", "named family graph");
    std::string fam_kind;
    std::vector<int> fam_params;
    std::string fam_format = "graph6";
    family_cmd->add_option("kind", fam_kind, "path | cycle | wheel | complete | star | complete_bipartite | bistar")
        ->required();
    family_cmd->add_option("params", fam_params, "n, or r s")->required();
    family_cmd->add_option("--format", fam_format, "graph6 | edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));

    SuiteOptions verify_opts;
    std::string verify_suite, verify_graph6, verify_report, verify_format = "json";
    auto* verify_cmd = app.add_subcommand("verify", "run one verification suite");
    verify_cmd->add_option("suite", verify_suite, "difuno | teoremon | gsymmetry | table1 | bipartite_gap | assoc | cactus | extremal")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--n-max", verify_opts.n_max, "largest order to enumerate (0 = external graphs only)");
    verify_cmd->add_option("--n-min", verify_opts.n_min, "smallest order (table1)");
    verify_cmd->add_option("--graph6", verify_graph6, "extra graphs, one graph6 per line");
    verify_cmd->add_option("--samples", verify_opts.samples, "random trails per LD-set (assoc)");
    verify_cmd->add_option("--seed", verify_opts.seed, "random seed (assoc, cactus)");
    verify_cmd->add_option("--count", verify_opts.count, "random graphs (cactus)");
    verify_cmd->add_option("--r-max", verify_opts.r_max, "largest r (extremal)");
    verify_cmd->add_option("--report", verify_report, "write the report to this file");
    verify_cmd->add_option("--format", verify_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    SuiteOptions report_opts;
    std::vector<std::string> report_suites;
    std::string report_graph6, report_format = "json";
    auto* report_cmd = app.add_subcommand("report", "run suites and print a combined report");
    report_cmd->add_option("--format", report_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    report_cmd->add_option("--suite", report_suites, "suite to include (repeatable; default all)")
        ->check(CLI::IsMember(suite_names()));
    report_cmd->add_option("--n-max", report_opts.n_max, "largest order to enumerate");
    report_cmd->add_option("--graph6", report_graph6, "extra graphs, one graph6 per line");
    report_cmd->add_option("--samples", report_opts.samples, "random trails per LD-set (assoc)");
    report_cmd->add_option("--seed", report_opts.seed, "random seed");
    report_cmd->add_option("--count", report_opts.count, "random graphs (cactus)");
    report_cmd->add_option("--r-max", report_opts.r_max, "largest r (extremal)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (lambda_cmd->parsed())
            return cmd_lambda(lambda_in);
        if (global_cmd->parsed())
            return cmd_global(global_in);
        if (assoc_cmd->parsed())
            return cmd_assoc(assoc_in, assoc_set, assoc_dot);
        if (construct_cmd->parsed())
            return cmd_construct(cons_r, cons_s, cons_kind, cons_format);
        if (family_cmd->parsed())
            return cmd_family(fam_kind, fam_params, fam_format);
        if (verify_cmd->parsed())
            return cmd_verify(verify_suite, verify_opts, verify_graph6, verify_report, verify_format);
        if (report_cmd->parsed())
            return cmd_report(report_suites, report_opts, report_graph6, report_format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
