#include "ldcode/verify.hpp"

#include "ldcode/assoc.hpp"
#include "ldcode/cactus.hpp"
#include "ldcode/enumerate.hpp"
#include "ldcode/extremal.hpp"
#include "ldcode/families.hpp"
#include "ldcode/graph6.hpp"
#include "ldcode/ld.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

namespace ldcode {

std::string Universe::description() const
{
    std::string out = bipartite_only ? "connected bipartite graphs" : "connected graphs";
    if (n_max > 0)
        out += ", n <= " + std::to_string(std::min(n_max, bipartite_only ? kBipartiteEnumerationCap : kEnumerationCap));
    if (!external.empty())
        out += (n_max > 0 ? " + " : ", ") + std::to_string(external.size()) + " external graphs";
    return out;
}

std::vector<Graph> Universe::graphs() const
{
    const int cap = bipartite_only ? kBipartiteEnumerationCap : kEnumerationCap;
    if (n_max > cap && external.empty())
        throw EnumerationCapError(n_max, cap);
    std::vector<Graph> out;
    if (n_max > 0)
        for_each_connected_graph(std::min(n_max, cap), bipartite_only, [&](const Graph& g) { out.push_back(g); });
    for (const Graph& g : external) {
        if (!is_connected(g))
            continue;
        if (bipartite_only && !is_bipartite(g))
            continue;
        out.push_back(g);
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;
using Check = std::function<std::vector<std::string>(const Graph&)>;

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += "; ";
        out += p;
    }
    return out;
}

std::string num(long x)
{
    return std::to_string(x);
}

std::string set_text(VertexSet s)
{
    return "{" + s.to_string() + "}";
}

// FNV-1a, so per-graph seeds do not depend on sweep order or the standard library.
std::uint64_t mix_seed(std::uint64_t seed, const std::string& text)
{
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

class SuiteRun {
public:
    SuiteRun(std::string suite, std::string universe) : start_(Clock::now())
    {
        report_.suite = std::move(suite);
        report_.universe = std::move(universe);
    }

    void check(const Graph& g, const Check& fn)
    {
        ++report_.checked;
        std::vector<std::string> problems;
        try {
            problems = fn(g);
        } catch (const std::exception& e) {
            problems.push_back(std::string("exception: ") + e.what());
        }
        if (!problems.empty())
            report_.violations.push_back({encode_graph6(g), join(problems)});
    }

    void count(const std::string& key, long by = 1) { report_.counters[key] += by; }
    void add_checked(long by = 1) { report_.checked += by; }
    void violation(std::string graph6, const std::string& details) { report_.violations.push_back({std::move(graph6), details}); }
    VerificationReport& report() { return report_; }

    VerificationReport finish()
    {
        std::sort(report_.violations.begin(), report_.violations.end());
        report_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return std::move(report_);
    }

private:
    Clock::time_point start_;
    VerificationReport report_;
};

// Structure forced on G^U when λ(complement) = λ + 1 and U is an LD-code.
// `sides` is oriented so that u_side is that code.
std::vector<std::string> gap_plus_structure(const Graph& g, const Bipartition& sides)
{
    std::vector<std::string> bad;
    const int r = sides.r();
    const int s = sides.s();
    const AssocGraph a = build_associated(g, sides.u_side);
    for (Vertex u : sides.u_side) {
        const auto edges = edges_with_label(a, u);
        if (edges.size() < 2)
            bad.push_back("label " + num(u) + " has " + num(static_cast<long>(edges.size())) + " edge(s) in G^U");
    }
    if (!bad.empty())
        return bad;

    const bool deg1 = has_degree1_w_vertex(g, sides);
    const int z_degree = degree_of_z(a);
    if ((z_degree != 0) != deg1)
        bad.push_back("deg(z) = " + num(z_degree) + " disagrees with the degree-1 W vertex test");
    if (!deg1 && 2 * s < 3 * r + 2)
        bad.push_back("no degree-1 W vertex yet s < 3r/2 + 1");
    if (z_degree == 0 && 2 * s < 3 * r + 2)
        bad.push_back("deg(z) = 0 yet s < 3r/2 + 1");

    const ChoiceRule rules[] = {{ChoiceRule::Kind::lexicographic, 0},
                                {ChoiceRule::Kind::reverse, 0},
                                {ChoiceRule::Kind::random, mix_seed(7, encode_graph6(g))}};
    for (const auto& rule : rules) {
        const SubgraphH h = select_h(a, rule);
        const std::string tag = "H(rule " + num(static_cast<long>(rule.kind)) + ")";
        if (!is_cactus(h.graph)) {
            bad.push_back(tag + " has a component that is not a cactus");
            continue;
        }
        const CactusStats st = cactus_stats(h.graph);
        if (st.size != 2 * r)
            bad.push_back(tag + " has " + num(st.size) + " edges, expected 2r");
        if (st.order != st.size - st.cy + st.cc)
            bad.push_back(tag + " breaks |V| = |E| - cy + cc");
        if (st.ex < 0 || 4 * st.order != 3 * st.size + st.ex + 4 * st.cc)
            bad.push_back(tag + " breaks |V| = 3/4 |E| + ex/4 + cc");
        if (4 * st.order < 3 * st.size + 4)
            bad.push_back(tag + " breaks |V| >= 3/4 |E| + 1");
        if (s + 1 < st.order)
            bad.push_back(tag + " has more vertices than G^U");
        if (st.cc >= 2 && 2 * s < 3 * r + 2)
            bad.push_back(tag + " is disconnected yet s < 3r/2 + 1");
    }
    return bad;
}

// Smallest global LD-set by plain subset scan; independent of the solver's search window.
int scan_lambda_global(const Graph& g)
{
    const int n = g.order();
    int best = n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet s(mask);
        if (s.size() < best && is_global_ld_set(g, s))
            best = s.size();
    }
    return best;
}

} // namespace

std::vector<std::string> check_difuno(const Graph& g)
{
    const int own = lambda(g).size;
    const int other = lambda_complement(g);
    if (std::abs(own - other) > 1)
        return {"lambda=" + num(own) + " lambda_complement=" + num(other)};
    return {};
}

std::vector<std::string> check_teoremon(const Graph& g)
{
    std::vector<std::string> bad;
    const Graph gc = complement(g);
    const int own = lambda(g).size;
    const int other = lambda(gc).size;
    const LdCode glob = lambda_global(g);
    const std::string values = " (lambda=" + num(own) + " lambda_complement=" + num(other) +
                               " lambda_global=" + num(glob.size) + ")";

    if (g.order() <= 10 && scan_lambda_global(g) != glob.size)
        bad.push_back("subset scan finds lambda_global=" + num(scan_lambda_global(g)) + values);
    if (!is_global_ld_set(g, glob.witness))
        bad.push_back("global witness " + set_text(glob.witness) + " is not a global LD-set");
    if (glob.size < std::max(own, other) || glob.size > std::min(own, other) + 1)
        bad.push_back("sandwich bound fails" + values);
    if (own != other && glob.size != std::max(own, other))
        bad.push_back("unequal case: lambda_global != max" + values);

    bool some_global = false;
    for (VertexSet code : all_ld_codes(g)) {
        const auto dom = dominating_vertex(g, code);
        const bool ld_in_complement = is_ld_set(gc, code);
        const bool dominating_in_complement = is_dominating(gc, code);
        if (ld_in_complement != dominating_in_complement)
            bad.push_back("code " + set_text(code) + ": LD in complement differs from dominating in complement");
        if (ld_in_complement == dom.has_value())
            bad.push_back("code " + set_text(code) + ": LD in complement disagrees with the dominating-vertex test");
        if (dom) {
            VertexSet grown = code;
            grown.insert(*dom);
            if (!is_ld_set(gc, grown))
                bad.push_back("code " + set_text(code) + " plus its dominating vertex is not LD in the complement");
        }
        some_global = some_global || !dom.has_value();
    }
    if ((glob.size == own + 1) != !some_global)
        bad.push_back(std::string("lambda_global = lambda + 1 disagrees with ") +
                      (some_global ? "a global LD-code existing" : "every LD-code being non-global") + values);
    if (some_global && other > own)
        bad.push_back("a global LD-code exists yet lambda_complement > lambda" + values);
    return bad;
}

std::vector<std::string> check_global_symmetry(const Graph& g)
{
    const int here = lambda_global(g).size;
    const int there = lambda_global(complement(g)).size;
    if (here != there)
        return {"lambda_global=" + num(here) + " but " + num(there) + " on the complement"};
    return {};
}

std::vector<std::string> check_bipartite_gap(const Graph& g, bool* gap_plus)
{
    std::vector<std::string> bad;
    if (gap_plus)
        *gap_plus = false;
    const auto sides = bipartition(g);
    if (!sides)
        return {"graph is not bipartite"};
    const int r = sides->r();
    const int s = sides->s();
    const int n = g.order();
    const int own = lambda(g).size;
    const int other = lambda_complement(g);
    const bool plus = other == own + 1;
    if (gap_plus)
        *gap_plus = plus;
    const std::string values = " (r=" + num(r) + " s=" + num(s) + " lambda=" + num(own) +
                               " lambda_complement=" + num(other) + ")";

    if (n >= 3 && r <= 2 && other > own)
        bad.push_back("r <= 2 yet lambda_complement > lambda" + values);
    if (n < 4)
        return bad;

    const auto codes = all_ld_codes(g);
    const bool many_w = r < 62 && static_cast<long long>(s) >= (1LL << r);
    for (VertexSet code : codes) {
        const bool mixed = code.intersects(sides->u_side) && code.intersects(sides->w_side);
        const bool is_w = r < s && code == sides->w_side;
        if ((mixed || is_w || many_w) && other > own)
            bad.push_back("code " + set_text(code) + " meets a sufficient condition yet lambda_complement > lambda" +
                          values);
    }

    // deg(z) != 0 in G^U exactly when some W vertex is a leaf, whenever U is an LD-set.
    for (const Bipartition& oriented : {*sides, Bipartition{sides->w_side, sides->u_side}}) {
        if (!is_ld_set(g, oriented.u_side))
            continue;
        const AssocGraph a = build_associated(g, oriented.u_side);
        if ((degree_of_z(a) != 0) != has_degree1_w_vertex(g, oriented))
            bad.push_back("deg(z) disagrees with the degree-1 test for U=" + set_text(oriented.u_side));
    }

    if (!plus)
        return bad;

    if (r < 3)
        bad.push_back("gap-plus graph with r < 3" + values);
    if (2 * s < 3 * r + 2)
        bad.push_back("gap-plus graph with s < 3r/2 + 1" + values);
    if (r < 62 && static_cast<long long>(s) > (1LL << r) - 1)
        bad.push_back("gap-plus graph with s > 2^r - 1" + values);
    if (3 * r <= 2 * s && 2 * s < 3 * r + 2)
        bad.push_back("gap-plus graph with 3r/2 <= s < 3r/2 + 1" + values);

    std::optional<Bipartition> oriented;
    if (r < s) {
        if (codes.size() != 1 || codes.front() != sides->u_side)
            bad.push_back("U is not the unique LD-code" + values);
        else
            oriented = *sides;
    } else {
        for (const Bipartition& cand : {*sides, Bipartition{sides->w_side, sides->u_side}}) {
            const bool is_code = std::find(codes.begin(), codes.end(), cand.u_side) != codes.end();
            if (is_code && dominating_vertex(g, cand.u_side).has_value()) {
                oriented = cand;
                break;
            }
        }
        if (!oriented)
            bad.push_back("r = s but neither side is a non-global LD-code" + values);
    }
    if (oriented)
        for (auto& msg : gap_plus_structure(g, *oriented))
            bad.push_back(msg + values);
    return bad;
}

std::vector<std::string> check_assoc_properties(const Graph& g, int samples_per_set, std::uint64_t seed)
{
    std::vector<std::string> bad;
    std::mt19937_64 rng(mix_seed(seed, encode_graph6(g)));
    const LdCode best = lambda(g);
    std::vector<std::pair<VertexSet, bool>> sets;
    for (VertexSet code : ld_sets_of_size(g, best.size))
        sets.emplace_back(code, true);
    if (g.order() > 6) {
        std::uniform_int_distribution<int> size_dist(best.size + 1, g.order());
        for (int attempt = 0; attempt < samples_per_set; ++attempt) {
            const int k = size_dist(rng);
            std::vector<Vertex> pool = g.vertices().to_vector();
            std::shuffle(pool.begin(), pool.end(), rng);
            VertexSet s = VertexSet::from(std::vector<Vertex>(pool.begin(), pool.begin() + k));
            if (is_ld_set(g, s))
                sets.emplace_back(s, false);
        }
    }

    for (const auto& [s, is_code] : sets) {
        const AssocGraph a = build_associated(g, s);
        const auto trails = sample_trails(a, samples_per_set, static_cast<int>(a.edges().size()), rng);
        const auto paths = monotone_paths(a);
        const PropertyReport rep = check_properties(a, trails, paths);
        if (!rep.all())
            bad.push_back("S=" + set_text(s) + ": " + join(rep.failures));
        for (Vertex u : s) {
            const VertexSet rest = s - VertexSet::single(u);
            const VertexSet own = trace_of(g, u, rest);
            bool collides = own.empty();
            for (Vertex x : g.vertices() - s)
                collides = collides || trace_of(g, x, rest) == own;
            const bool predicted = !edges_with_label(a, u).empty() || collides;
            if (predicted == is_ld_set(g, rest))
                bad.push_back("S=" + set_text(s) + ": removing " + num(u) + (predicted ? " keeps" : " breaks") +
                              " the LD property against the G^S prediction");
            if (is_code && !predicted)
                bad.push_back("LD-code " + set_text(s) + " stays an LD-set without " + num(u));
        }
    }

    if (is_bipartite(g) && g.order() >= 4) {
        const auto sides = bipartition(g);
        if (lambda_complement(g) == best.size + 1) {
            for (const Bipartition& cand : {*sides, Bipartition{sides->w_side, sides->u_side}}) {
                if (cand.u_side.size() != best.size || !is_ld_set(g, cand.u_side))
                    continue;
                for (auto& msg : gap_plus_structure(g, cand))
                    bad.push_back("U=" + set_text(cand.u_side) + ": " + msg);
            }
        }
    }
    return bad;
}

VerificationReport suite_difuno(const Universe& universe)
{
    SuiteRun run("difuno", universe.description());
    for (const Graph& g : universe.graphs())
        run.check(g, check_difuno);
    return run.finish();
}

VerificationReport suite_teoremon(const Universe& universe)
{
    SuiteRun run("teoremon", universe.description());
    for (const Graph& g : universe.graphs())
        run.check(g, check_teoremon);
    return run.finish();
}

VerificationReport suite_global_symmetry(const Universe& universe)
{
    SuiteRun run("gsymmetry", universe.description());
    for (const Graph& g : universe.graphs())
        run.check(g, check_global_symmetry);
    return run.finish();
}

VerificationReport suite_table1(int n_min, int n_max)
{
    SuiteRun run("table1", "named families with closed forms, n = " + num(n_min) + ".." + num(n_max));
    std::vector<FamilySpec> specs;
    for (int n = std::max(n_min, 1); n <= n_max; ++n) {
        for (FamilyKind kind : {FamilyKind::path, FamilyKind::cycle, FamilyKind::wheel, FamilyKind::complete,
                                FamilyKind::star}) {
            const auto spec = FamilySpec::of_order(kind, n);
            if (closed_form_defined(spec))
                specs.push_back(spec);
        }
        for (FamilyKind kind : {FamilyKind::complete_bipartite, FamilyKind::bistar})
            for (int r = 1; 2 * r <= n; ++r) {
                const auto spec = FamilySpec::of_sides(kind, r, n - r);
                if (closed_form_defined(spec))
                    specs.push_back(spec);
            }
    }
    for (const auto& spec : specs) {
        run.count(std::string(family_name(spec.kind)));
        run.check(generate_family(spec), [&](const Graph& g) {
            std::vector<std::string> bad;
            const int got[] = {lambda(g).size, lambda_complement(g), lambda_global(g).size};
            const char* names[] = {"lambda", "lambda_complement", "lambda_global"};
            const Invariant which[] = {Invariant::lambda, Invariant::lambda_complement, Invariant::lambda_global};
            for (int i = 0; i < 3; ++i) {
                const int want = closed_form(spec, which[i]);
                if (got[i] != want)
                    bad.push_back(spec.name() + " " + names[i] + "=" + num(got[i]) + " expected " + num(want));
            }
            return bad;
        });
    }
    return run.finish();
}

VerificationReport suite_bipartite_gap(const Universe& universe)
{
    Universe bip = universe;
    bip.bipartite_only = true;
    SuiteRun run("bipartite_gap", bip.description());
    for (const Graph& g : bip.graphs()) {
        run.check(g, [&](const Graph& h) {
            bool plus = false;
            auto bad = check_bipartite_gap(h, &plus);
            if (plus)
                run.count("gap_plus_graphs");
            return bad;
        });
    }
    return run.finish();
}

VerificationReport suite_assoc_properties(const Universe& universe, int samples_per_graph, std::uint64_t seed)
{
    SuiteRun run("assoc", universe.description() + ", " + num(samples_per_graph) + " trails per set, seed " +
                              std::to_string(seed));
    for (const Graph& g : universe.graphs())
        run.check(g, [&](const Graph& h) { return check_assoc_properties(h, samples_per_graph, seed); });
    return run.finish();
}

VerificationReport suite_cactus(int count, std::uint64_t seed)
{
    SuiteRun run("cactus", num(count) + " random cactus graphs, seed " + std::to_string(seed));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const RandomCactus rc = random_cactus(rng, i % 2 == 0);
        if (rc.bipartite)
            run.count("bipartite");
        run.check(rc.graph, [&](const Graph& h) {
            std::vector<std::string> bad;
            if (!is_cactus(h))
                return std::vector<std::string>{"generated graph not recognised as a cactus"};
            const CactusStats st = cactus_stats(h);
            if (st.cc != rc.components || st.cy != rc.cycles)
                bad.push_back("stats (cc=" + num(st.cc) + ", cy=" + num(st.cy) + ") differ from construction (" +
                              num(rc.components) + ", " + num(rc.cycles) + ")");
            if (st.order != st.size - st.cy + st.cc)
                bad.push_back("|V| != |E| - cy + cc");
            if (!rc.bipartite)
                return bad;
            if (st.ex < 0)
                bad.push_back("negative excess on a bipartite cactus");
            if (4 * st.order != 3 * st.size + st.ex + 4 * st.cc)
                bad.push_back("|V| != 3/4 |E| + ex/4 + cc");
            if (4 * st.order < 3 * st.size + 4)
                bad.push_back("|V| < 3/4 |E| + 1");
            const bool tight = 4 * st.order == 3 * st.size + 4;
            const bool shape = rc.components == 1 && rc.all_c4;
            if (tight != shape)
                bad.push_back(std::string("equality ") + (tight ? "holds" : "fails") + " but the graph is " +
                              (shape ? "" : "not ") + "a connected chain of 4-cycles");
            if (tight)
                run.count("tight");
            if (rc.components == 1) {
                if (tightness_check(h) != rc.all_c4)
                    bad.push_back("tightness_check disagrees with the construction");
                if (all_blocks_are_c4(h) != rc.all_c4)
                    bad.push_back("all_blocks_are_c4 disagrees with the construction");
            }
            return bad;
        });
    }
    return run.finish();
}

VerificationReport suite_extremal(const std::vector<std::pair<int, int>>& pairs)
{
    SuiteRun run("extremal", num(static_cast<long>(pairs.size())) + " (r, s) pairs");
    for (auto [r, s] : pairs) {
        SubsetFamilyGraph built;
        try {
            built = construct_extremal(r, s);
        } catch (const CertificationError& e) {
            run.add_checked();
            run.violation(e.graph6(), "construct_extremal(" + num(r) + ", " + num(s) + "): " + e.what());
            continue;
        } catch (const std::exception& e) {
            run.add_checked();
            run.violation("", "construct_extremal(" + num(r) + ", " + num(s) + "): " + e.what());
            continue;
        }
        run.check(built.graph, [&](const Graph& g) {
            std::vector<std::string> bad;
            const std::string tag = "G(" + num(r) + "," + num(s) + ")";
            const auto sides = bipartition(g);
            if (!sides || sides->r() != r || sides->s() != s)
                bad.push_back(tag + " does not have sides of sizes r and s");
            const VertexSet u = VertexSet::first(r);
            if (!is_ld_set(g, u))
                bad.push_back(tag + ": U is not an LD-set");
            const int own = lambda(g).size;
            const int other = lambda_complement(g);
            if (own != r || other != r + 1)
                bad.push_back(tag + ": lambda=" + num(own) + " lambda_complement=" + num(other));
            if (r < s) {
                const auto codes = ld_sets_of_size(g, own);
                if (codes.size() != 1 || codes.front() != u)
                    bad.push_back(tag + ": U is not the unique LD-code (" + num(static_cast<long>(codes.size())) +
                                  " codes)");
            }
            return bad;
        });
    }
    return run.finish();
}

std::vector<std::string> suite_names()
{
    return {"difuno", "teoremon", "gsymmetry", "table1", "bipartite_gap", "assoc", "cactus", "extremal"};
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options)
{
    Universe universe{options.n_max, false, options.external};
    if (name == "difuno")
        return suite_difuno(universe);
    if (name == "teoremon")
        return suite_teoremon(universe);
    if (name == "gsymmetry")
        return suite_global_symmetry(universe);
    if (name == "table1")
        return suite_table1(std::max(options.n_min, 2), options.n_max);
    if (name == "bipartite_gap")
        return suite_bipartite_gap(universe);
    if (name == "assoc")
        return suite_assoc_properties(universe, options.samples, options.seed);
    if (name == "cactus")
        return suite_cactus(options.count, options.seed);
    if (name == "extremal") {
        std::vector<std::pair<int, int>> pairs;
        for (int r = 3; r <= options.r_max; ++r) {
            const int top = std::min({(1 << std::min(r, 20)) - 1, 16, kMaxOrder - r});
            for (int s = r; s <= top; ++s)
                if (feasibility(r, s))
                    pairs.emplace_back(r, s);
        }
        return suite_extremal(pairs);
    }
    throw GraphError("unknown suite '" + name + "'");
}

} // namespace ldcode
