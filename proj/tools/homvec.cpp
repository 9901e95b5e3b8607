#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <homvec/homvec.hpp>
#include <homvec/suites.hpp>

using namespace homvec;

namespace {

constexpr int kExitDistinguished = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_argument(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) throw UsageError("cannot open " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph read_graph(const std::string& arg) {
    std::string text = read_argument(arg);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
    return parse_graph6(text);
}

WeightedGraph read_weighted(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_weighted_json(buf.str());
}

std::string verdict(bool equivalent) { return equivalent ? "equivalent" : "distinguished"; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
}

ClassSpec parse_class(const std::string& name, std::size_t bound) {
    if (name == "all") return ClassSpec::named(NamedClass::all, bound);
    if (name == "trees") return ClassSpec::named(NamedClass::trees, bound);
    if (name == "cycles") return ClassSpec::named(NamedClass::cycles, bound);
    if (name == "paths") return ClassSpec::named(NamedClass::paths, bound);
    if (name == "cliques") return ClassSpec::named(NamedClass::cliques, bound);
    if (name == "independents") return ClassSpec::named(NamedClass::independents, bound);
    if (name.rfind("tw<=", 0) == 0) {
        int w = 0;
        try {
            w = std::stoi(name.substr(4));
        } catch (const std::exception&) {
            throw UsageError("bad treewidth class " + name);
        }
        if (w < 0) throw UsageError("bad treewidth class " + name);
        return ClassSpec::named(NamedClass::treewidth_le, bound, w);
    }
    throw UsageError("unknown class " + name);
}

struct CountArgs {
    std::string mode = "hom", left, right, weighted, semiring = "naturals";
};

int run_count(const CountArgs& a) {
    Graph left = read_graph(a.left);
    if (a.mode == "aut") {
        std::cout << count_aut(left) << '\n';
        return 0;
    }
    if (!a.weighted.empty()) {
        if (a.mode != "hom") throw UsageError("--weighted requires --mode hom");
        WeightedGraph w = read_weighted(a.weighted);
        if (a.semiring == "boolean")
            std::cout << (count_hom_weighted(left, w, BooleanSemiring{}) ? "true" : "false") << '\n';
        else if (a.semiring == "naturals")
            std::cout << count_hom_weighted(left, w, NaturalSemiring{}) << '\n';
        else if (a.semiring == "rationals")
            std::cout << format_rational(count_hom_weighted(left, w, RationalSemiring{})) << '\n';
        else
            throw UsageError("unknown semiring " + a.semiring);
        return 0;
    }
    if (a.right.empty()) throw UsageError("--right is required for mode " + a.mode);
    Graph right = read_graph(a.right);
    if (a.mode == "hom") std::cout << count_hom(left, right) << '\n';
    else if (a.mode == "inj") std::cout << count_inj(left, right) << '\n';
    else if (a.mode == "sur") std::cout << count_sur(left, right) << '\n';
    else if (a.mode == "exists") std::cout << (hom_exists(left, right) ? "true" : "false") << '\n';
    else throw UsageError("unknown mode " + a.mode);
    return 0;
}

struct VectorArgs {
    std::string side = "left", cls = "all", graph;
    std::size_t bound = 0;
};

int run_vector(const VectorArgs& a) {
    Graph g = read_graph(a.graph);
    ClassSpec c = parse_class(a.cls, a.bound);
    if (a.side == "left") std::cout << vector_to_csv(left_vector(g, c));
    else if (a.side == "right") std::cout << vector_to_csv(right_vector(g, c));
    else throw UsageError("unknown side " + a.side);
    return 0;
}

struct TestArgs {
    std::string relation, first, second, report;
};

/// Decides the relation and, when distinguished, looks for a witness in the
/// homomorphism class that characterises it.
int run_test(const TestArgs& a) {
    Graph g = read_graph(a.first), h = read_graph(a.second);
    std::size_t n = std::max(g.vertex_count(), h.vertex_count());
    bool equivalent = false;
    std::optional<std::pair<Side, ClassSpec>> witness;
    const std::string& r = a.relation;
    if (r == "iso") {
        equivalent = is_isomorphic(g, h);
        witness.emplace(Side::left, ClassSpec::named(NamedClass::all, n));
    } else if (r == "fraciso") {
        equivalent = fractional_isomorphism_lp(g, h).has_value();
        witness.emplace(Side::left, ClassSpec::named(NamedClass::trees, n));
    } else if (r.rfind("wl:", 0) == 0) {
        unsigned k = 0;
        try {
            k = static_cast<unsigned>(std::stoul(r.substr(3)));
        } catch (const std::exception&) {
            throw UsageError("bad relation " + r);
        }
        if (k == 0) throw UsageError("bad relation " + r);
        equivalent = wl_equivalent(g, h, k);
        if (k == 1) witness.emplace(Side::left, ClassSpec::named(NamedClass::trees, n));
        else
            witness.emplace(Side::left, ClassSpec::named(NamedClass::treewidth_le, n, static_cast<int>(k)));
    } else if (r == "cospectral") {
        equivalent = cospectral(g, h);
        witness.emplace(Side::left, ClassSpec::named(NamedClass::cycles, n));
    } else if (r == "chromeq") {
        equivalent = chromatically_equivalent(g, h);
        witness.emplace(Side::right, ClassSpec::named(NamedClass::cliques, n + 1));
    } else if (r == "homeq") {
        equivalent = hom_equivalent(g, h);
    } else {
        throw UsageError("unknown relation " + r);
    }
    std::cout << verdict(equivalent) << '\n';
    if (!equivalent && witness) {
        try {
            if (auto d = first_distinguisher(g, h, witness->first, witness->second))
                std::cout << write_graph6(d->member) << ',' << d->first << ',' << d->second << '\n';
        } catch (const GuardError& e) {
            std::cerr << "note: no witness printed, " << e.what() << '\n';
        }
    }
    if (!a.report.empty())
        write_file(a.report, "g6_left,g6_right,relation,verdict\n" + write_graph6(g) + ',' + write_graph6(h) + ',' + r + ',' +
                                 verdict(equivalent) + '\n');
    return equivalent ? 0 : kExitDistinguished;
}

struct PolyArgs {
    std::string which, graph;
};

int run_poly(const PolyArgs& a) {
    Graph g = read_graph(a.graph);
    if (a.which == "chromatic") std::cout << chromatic_polynomial(g).to_string() << '\n';
    else if (a.which == "characteristic") std::cout << characteristic_polynomial(g).to_string() << '\n';
    else if (a.which == "cep") std::cout << cluster_expansion_polynomial(g).to_string() << '\n';
    else if (a.which == "independence") std::cout << independence_polynomial(g).to_string() << '\n';
    else throw UsageError("unknown polynomial " + a.which);
    return 0;
}

struct ParamArgs {
    std::string which, graph, report;
};

int run_param(const ParamArgs& a) {
    Graph g = read_graph(a.graph);
    if (a.which == "chi") std::cout << chromatic_number(g) << '\n';
    else if (a.which == "omega") std::cout << clique_number(g) << '\n';
    else if (a.which == "chif") std::cout << format_rational(fractional_chromatic_number(g)) << '\n';
    else if (a.which == "omegaf") std::cout << format_rational(fractional_clique_number(g)) << '\n';
    else throw UsageError("unknown parameter " + a.which);
    if (!a.report.empty())
        write_file(a.report, "g6,chi,omega,chi_f\n" + write_graph6(g) + ',' + std::to_string(chromatic_number(g)) + ',' +
                                 std::to_string(clique_number(g)) + ',' + format_rational(fractional_chromatic_number(g)) +
                                 '\n');
    return 0;
}

int run_suite(const std::string& name, bool timings) {
    bool all_passed = true, found = false;
    for (const auto& entry : suites::all_suites()) {
        if (name != "all" && name != entry.name) continue;
        found = true;
        auto report = suites::run_timed(entry);
        all_passed = all_passed && report.passed;
        if (timings) std::cout << suites::format_report(report) << '\n';
        else std::cout << (report.passed ? "PASS" : "FAIL") << " [" << report.id << "] " << report.name << '\n';
    }
    if (!found) throw UsageError("unknown suite " + name);
    return all_passed ? 0 : kExitDistinguished;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homomorphism counts, hom vectors and isomorphism relaxations"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count homomorphisms between two graphs");
    count->add_option("--mode", count_args.mode, "hom|inj|sur|aut|exists")
        ->check(CLI::IsMember({"hom", "inj", "sur", "aut", "exists"}));
    count->add_option("--left", count_args.left, "graph6 literal or @file")->required();
    count->add_option("--right", count_args.right, "graph6 literal or @file");
    count->add_option("--weighted", count_args.weighted, "weighted target as JSON file (mode hom)");
    count->add_option("--semiring", count_args.semiring, "naturals|boolean|rationals");

    VectorArgs vector_args;
    auto* vector = app.add_subcommand("vector", "print a left or right hom vector as CSV");
    vector->add_option("--side", vector_args.side, "left|right")->check(CLI::IsMember({"left", "right"}));
    vector->add_option("--class", vector_args.cls, "trees|cycles|paths|cliques|independents|tw<=w|all");
    vector->add_option("--bound", vector_args.bound, "largest member size")->required();
    vector->add_option("graph", vector_args.graph, "graph6 literal or @file")->required();

    TestArgs test_args;
    auto* test = app.add_subcommand("test", "decide an equivalence relation between two graphs");
    test->add_option("--relation", test_args.relation, "iso|fraciso|wl:k|cospectral|chromeq|homeq")->required();
    test->add_option("--report", test_args.report, "write a CSV report to this file");
    test->add_option("first", test_args.first, "graph6 literal or @file")->required();
    test->add_option("second", test_args.second, "graph6 literal or @file")->required();

    PolyArgs poly_args;
    auto* poly = app.add_subcommand("poly", "print a graph polynomial");
    poly->add_option("--which", poly_args.which, "chromatic|characteristic|cep|independence")->required();
    poly->add_option("graph", poly_args.graph, "graph6 literal or @file")->required();

    ParamArgs param_args;
    auto* param = app.add_subcommand("param", "print a graph parameter");
    param->add_option("--which", param_args.which, "chi|omega|chif|omegaf")->required();
    param->add_option("--report", param_args.report, "write a CSV report to this file");
    param->add_option("graph", param_args.graph, "graph6 literal or @file")->required();

    std::string suite_name = "all";
    bool timings = false;
    auto* suite = app.add_subcommand("suite", "run acceptance suites");
    suite->add_option("--name", suite_name, "suite name or all");
    suite->add_flag("--timings", timings, "print details and wall-clock times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*count) return run_count(count_args);
        if (*vector) return run_vector(vector_args);
        if (*test) return run_test(test_args);
        if (*poly) return run_poly(poly_args);
        if (*param) return run_param(param_args);
        if (*suite) return run_suite(suite_name, timings);
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
