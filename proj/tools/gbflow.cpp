// gbflow: exact-arithmetic minimum cost flow on acyclic tournament graphs
// via toric Groebner bases and standard pairs. JSON in, JSON out.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbflow/fan.hpp"
#include "gbflow/pairs.hpp"
#include "gbflow/solver.hpp"

using json = nlohmann::ordered_json;
using namespace gbflow;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat json_to_rat(const json& v) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw usage_error("numbers must be integers or exact strings like \"3/2\"");
}

json rat_to_json(const Rat& v) {
    if (is_integral(v)) {
        const Int& n = rat_num(v);
        if (n >= std::numeric_limits<long long>::min() &&
            n <= std::numeric_limits<long long>::max())
            return json(static_cast<long long>(n));
    }
    return json(rat_to_string(v));
}

RatVec json_to_ratvec(const json& arr) {
    if (!arr.is_array()) throw usage_error("expected an array of numbers");
    RatVec out;
    for (const auto& v : arr) out.push_back(json_to_rat(v));
    return out;
}

json expo_to_json(const ExponentVec& e) {
    json arr = json::array();
    for (std::size_t i = 0; i < e.size(); ++i) arr.push_back(e[i]);
    return arr;
}

json basis_to_json(const GroebnerBasis& gb) {
    json arr = json::array();
    for (const auto& b : gb.elements)
        arr.push_back(json{{"lead", expo_to_json(b.lead)}, {"trail", expo_to_json(b.trail)}});
    return arr;
}

json parse_instance(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw usage_error(std::string("malformed instance JSON: ") + e.what());
    }
}

std::string read_instance_arg(const std::string& arg) {
    if (arg.empty() || arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return arg;
}

void check_len(const RatVec& v, std::size_t n, const char* what) {
    if (v.size() != n)
        throw usage_error(std::string(what) + " has length " + std::to_string(v.size()) +
                          ", expected " + std::to_string(n));
}

void emit(const json& out, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << out.dump(2) << std::endl;
    } else {
        std::ofstream f(out_file);
        if (!f) throw usage_error("cannot open output file " + out_file);
        f << out.dump(2) << std::endl;
    }
}

int get_d(const json& inst) {
    if (!inst.contains("d") || !inst["d"].is_number_integer())
        throw usage_error("instance needs an integer field d");
    int d = inst["d"].get<int>();
    if (d < 2) throw usage_error("d must be at least 2");
    return d;
}

int cmd_gb(const std::string& inst_arg, const std::string& out_file) {
    json inst = parse_instance(read_instance_arg(inst_arg));
    const int d = get_d(inst);
    TournamentGraph g(d);
    const std::size_t n = static_cast<std::size_t>(g.arc_count());
    json out{{"d", d}};
    GroebnerBasis gb;
    if (inst.contains("btilde")) {
        RatVec w = json_to_ratvec(inst["btilde"]);
        check_len(w, n, "btilde");
        gb = gb_from_universal(cutset_binomials(g), TermOrder(w));
        out["side"] = "dual";
    } else if (inst.contains("c")) {
        RatVec c = json_to_ratvec(inst["c"]);
        check_len(c, n, "c");
        TermOrder o(c);
        o.set_grading(length_grading(g));
        gb = gb_from_universal(circuit_binomials(g), o);
        out["side"] = "primal";
    } else {
        throw usage_error("instance needs c (primal) or btilde (dual)");
    }
    out["cardinality"] = gb.elements.size();
    out["basis"] = basis_to_json(gb);
    emit(out, out_file);
    return 0;
}

int cmd_solve(const std::string& inst_arg, const std::string& method,
              const std::string& out_file) {
    json inst = parse_instance(read_instance_arg(inst_arg));
    FlowInstance fi;
    fi.d = get_d(inst);
    TournamentGraph g(fi.d);
    if (!inst.contains("b") || !inst.contains("c"))
        throw usage_error("solve needs fields b and c");
    for (const auto& v : inst["b"]) {
        if (!v.is_number_integer()) throw usage_error("b must be integral");
        fi.b.push_back(v.get<long long>());
    }
    if (fi.b.size() != static_cast<std::size_t>(fi.d))
        throw usage_error("b must have length d");
    fi.c = json_to_ratvec(inst["c"]);
    check_len(fi.c, static_cast<std::size_t>(g.arc_count()), "c");

    SolveOutcome sol;
    if (method == "ct")
        sol = conti_traverso(fi);
    else if (method == "pairs")
        sol = solve_by_standard_pairs(fi);
    else if (method == "oracle")
        sol = oracle_optimum(fi);
    else
        throw usage_error("method must be ct, pairs, or oracle");

    json out{{"d", fi.d}, {"method", method}, {"feasible", sol.feasible}};
    if (sol.feasible) {
        out["x"] = expo_to_json(sol.x);
        out["objective"] = rat_to_json(sol.objective);
    } else if (sol.violated_prefix > 0) {
        out["violated_prefix"] = sol.violated_prefix;
    }
    if (method == "pairs") out["pairs_examined"] = sol.pairs_examined;
    emit(out, out_file);
    return sol.feasible ? 0 : 1;
}

int cmd_pairs(const std::string& inst_arg, const std::string& out_file) {
    json inst = parse_instance(read_instance_arg(inst_arg));
    const int d = get_d(inst);
    TournamentGraph g(d);
    const std::size_t n = static_cast<std::size_t>(g.arc_count());
    json out{{"d", d}};
    std::vector<StandardPair> pairs;
    if (inst.contains("btilde")) {
        RatVec w = json_to_ratvec(inst["btilde"]);
        check_len(w, n, "btilde");
        pairs = standard_pairs_dual(g, w);
        out["side"] = "dual";
    } else if (inst.contains("c")) {
        RatVec c = json_to_ratvec(inst["c"]);
        check_len(c, n, "c");
        TermOrder o(c);
        o.set_grading(length_grading(g));
        pairs = standard_pairs_primal(g, o);
        out["side"] = "primal";
    } else {
        throw usage_error("instance needs c (primal) or btilde (dual)");
    }
    json arr = json::array();
    for (const auto& p : pairs) {
        json sigma = json::array();
        for (int a : p.sigma)
            sigma.push_back(json::array({g.arc(a).tail, g.arc(a).head}));
        arr.push_back(json{{"root", expo_to_json(p.root)}, {"sigma", sigma}});
    }
    out["arithmetic_degree"] = arithmetic_degree(pairs);
    out["pairs"] = arr;
    emit(out, out_file);
    return 0;
}

Side parse_side(const std::string& side) {
    if (side == "primal") return Side::primal;
    if (side == "dual") return Side::dual;
    throw usage_error("side must be primal or dual");
}

json fan_summary(Side s, int d, const FanResult& fan) {
    json out{{"side", s == Side::primal ? "primal" : "dual"},
             {"d", d},
             {"count", fan.count},
             {"max_cardinality", fan.max_card},
             {"min_cardinality", fan.min_card},
             {"partial", fan.partial}};
    if (s == Side::dual) out["usable_cost_cones"] = fan.valid_count;
    return out;
}

int cmd_fan(const std::string& side, int d, std::size_t budget, int parallel,
            const std::string& out_file, const std::string& dump_file) {
    const Side s = parse_side(side);
    FanOptions opts;
    opts.budget = budget;
    opts.threads = parallel;
    std::vector<std::pair<std::string, json>> dump;  // keyed for stable order
    std::mutex dump_mu;
    if (!dump_file.empty())
        opts.sink = [&](const GroebnerBasis& gb) {
            std::pair<std::string, json> entry{basis_key(gb), basis_to_json(gb)};
            std::lock_guard<std::mutex> lk(dump_mu);
            dump.push_back(std::move(entry));
        };
    auto fan = enumerate_fan(s, d, opts);
    if (!dump_file.empty()) {
        std::sort(dump.begin(), dump.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        json arr = json::array();
        for (auto& [key, b] : dump) arr.push_back(std::move(b));
        std::ofstream f(dump_file);
        if (!f) throw usage_error("cannot open dump file " + dump_file);
        f << arr.dump(2) << std::endl;
    }
    emit(fan_summary(s, d, fan), out_file);
    return 0;
}

int cmd_catalog(const std::string& kind, int d, const std::string& what,
                const std::string& out_file) {
    json out{{"kind", kind}, {"d", d}};
    CostVector cost;
    std::vector<MarkedBinomial> basis;
    TournamentGraph g(d);
    if (kind == "type1") {
        cost = cost_type1(d);
        basis = gb_type1(d);
    } else if (kind == "type2") {
        cost = cost_type2(d);
        basis = gb_type2(d);
    } else if (kind == "type3") {
        cost = cost_type3(d);
        basis = gb_type3(d);
    } else if (kind == "dual") {
        cost = dual_cost_decreasing(d);
        basis = dual_gb(d);
    } else {
        throw usage_error("kind must be type1, type2, type3, or dual");
    }
    if (what == "cost" || what == "both") {
        json arr = json::array();
        for (const auto& v : cost.values) arr.push_back(rat_to_json(v));
        out["cost"] = arr;
    }
    if (what == "basis" || what == "both") {
        out["cardinality"] = basis.size();
        out["basis"] = basis_to_json(GroebnerBasis{std::move(basis), TermOrder{}});
    }
    if (what != "cost" && what != "basis" && what != "both")
        throw usage_error("--what must be basis, cost, or both");
    emit(out, out_file);
    return 0;
}

int cmd_volume(int d, const std::string& out_file) {
    auto rep = max_arith_degree_check(d);
    json out{{"d", d},
             {"catalan", rat_to_json(Rat(rep.catalan))},
             {"max_arithmetic_degree", rep.degree_type1},
             {"pattern_trees", rep.pattern_trees},
             {"equal", rep.equal}};
    emit(out, out_file);
    return rep.equal ? 0 : 1;
}

int cmd_verify(unsigned seed, int parallel, const std::string& out_file) {
    std::mt19937 rng(seed);
    json out;
    bool ok = true;

    json catalog = json::array();
    for (int d = 3; d <= 6; ++d)
        for (auto [kind, name] :
             {std::pair{CatalogKind::type1, "type1"}, {CatalogKind::type2, "type2"},
              {CatalogKind::type3, "type3"}, {CatalogKind::dual, "dual"}}) {
            auto rep = verify_catalog(d, kind);
            ok &= rep.equal;
            catalog.push_back(json{{"d", d}, {"kind", name}, {"equal", rep.equal}});
        }
    out["catalog"] = catalog;

    std::uniform_int_distribution<int> supply(-10, 10), cost(1, 20);
    int feasible = 0, disagreements = 0;
    for (int d = 3; d <= 5; ++d) {
        TournamentGraph g(d);
        for (int t = 0; t < 40; ++t) {
            FlowInstance fi;
            fi.d = d;
            fi.b.assign(static_cast<std::size_t>(d), 0);
            long long sum = 0;
            for (int i = 0; i + 1 < d; ++i) {
                fi.b[static_cast<std::size_t>(i)] = supply(rng);
                sum += fi.b[static_cast<std::size_t>(i)];
            }
            fi.b[static_cast<std::size_t>(d - 1)] = -sum;
            for (int i = 0; i < g.arc_count(); ++i) fi.c.emplace_back(cost(rng));
            auto ct = conti_traverso(fi);
            auto oc = oracle_optimum(fi);
            if (ct.feasible != oc.feasible ||
                (ct.feasible && ct.objective != oc.objective)) {
                ++disagreements;
                continue;
            }
            if (ct.feasible) ++feasible;
        }
    }
    ok &= disagreements == 0;
    out["solver_agreement"] =
        json{{"feasible", feasible}, {"disagreements", disagreements}};

    std::uniform_int_distribution<int> w(1, 60);
    int homog_ok = 0, homog_total = 0;
    for (int d = 3; d <= 4; ++d) {
        TournamentGraph g(d);
        for (int got = 0, t = 0; got < 10 && t < 200; ++t) {
            RatVec c(static_cast<std::size_t>(g.arc_count()));
            for (auto& x : c) x = w(rng);
            auto rep = verify_homog_correspondence(g, c);
            if (!rep.generic) continue;  // correspondence needs generic costs
            ++homog_total;
            ++got;
            if (rep.bijection) ++homog_ok;
        }
    }
    ok &= homog_ok == homog_total;
    out["homogenization"] = json{{"checked", homog_total}, {"bijections", homog_ok}};

    FanOptions fopts;
    fopts.threads = parallel;
    json fans = json::array();
    for (Side s : {Side::primal, Side::dual}) {
        auto fan = enumerate_fan(s, 4, fopts);
        auto cc = fan_cross_check(s, 4, fan, 100, seed);
        ok &= cc.complete();
        fans.push_back(json{{"side", s == Side::primal ? "primal" : "dual"},
                            {"d", 4},
                            {"count", fan.count},
                            {"cross_check_trials", cc.trials},
                            {"cross_check_found", cc.found}});
    }
    out["fan_cross_check"] = fans;

    out["ok"] = ok;
    emit(out, out_file);
    return ok ? 0 : 1;
}

int cmd_tables(const std::string& side, int d, std::size_t budget, int parallel,
               const std::string& out_file) {
    const Side s = parse_side(side);
    FanOptions opts;
    opts.budget = budget;
    opts.threads = parallel;
    auto fan = enumerate_fan(s, d, opts);
    json out = fan_summary(s, d, fan);
    // reference rows where known
    struct Row {
        Side s;
        int d;
        std::size_t count, maxc, minc;
    };
    static const Row rows[] = {
        {Side::primal, 3, 2, 1, 1},    {Side::primal, 4, 10, 5, 3},
        {Side::primal, 5, 211, 15, 6}, {Side::primal, 6, 48312, 37, 10},
        {Side::dual, 3, 2, 2, 2},      {Side::dual, 4, 7, 5, 3},
        {Side::dual, 5, 48, 10, 4},    {Side::dual, 6, 820, 20, 5},
        {Side::dual, 7, 44288, 39, 6},
    };
    int rc = 0;
    for (const auto& r : rows) {
        if (r.s != s || r.d != d) continue;
        const bool match = !fan.partial && fan.count == r.count &&
                           fan.max_card == r.maxc && fan.min_card == r.minc;
        out["expected"] = json{{"count", r.count},
                               {"max_cardinality", r.maxc},
                               {"min_cardinality", r.minc}};
        out["match"] = match;
        if (!match) rc = 1;
    }
    emit(out, out_file);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Groebner-basis solver for minimum cost flow on acyclic "
                 "tournament graphs"};
    app.require_subcommand(1);

    std::string instance, out_file, dump_file, method = "ct", side = "primal",
                                               what = "both";
    int d = 3, parallel = 1;
    std::size_t budget = 500000;
    unsigned seed = 0;

    auto add_out = [&](CLI::App* c) {
        c->add_option("--out", out_file, "write the JSON result to FILE");
    };

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis for an instance");
    gb->add_option("instance", instance, "instance JSON ('-' or empty reads stdin)");
    add_out(gb);

    auto* solve = app.add_subcommand("solve", "solve a minimum cost flow instance");
    solve->add_option("instance", instance, "instance JSON {d, b, c}");
    solve->add_option("--method", method, "ct | pairs | oracle")->capture_default_str();
    add_out(solve);

    auto* pairs = app.add_subcommand("pairs", "standard pairs and arithmetic degree");
    pairs->add_option("instance", instance, "instance JSON {d, c} or {d, btilde}");
    add_out(pairs);

    auto* fan = app.add_subcommand("fan", "enumerate the Groebner fan");
    fan->add_option("--side", side, "primal | dual")->capture_default_str();
    fan->add_option("--d", d, "graph size")->capture_default_str();
    fan->add_option("--budget", budget, "maximum number of cones")->capture_default_str();
    fan->add_option("--parallel", parallel, "worker threads")->capture_default_str();
    fan->add_option("--dump", dump_file, "write every basis to FILE");
    add_out(fan);

    auto* catalog = app.add_subcommand("catalog", "closed-form bases and cost vectors");
    std::string kind = "type1";
    catalog->add_option("--kind", kind, "type1 | type2 | type3 | dual")
        ->capture_default_str();
    catalog->add_option("--d", d, "graph size")->capture_default_str();
    catalog->add_option("--what", what, "basis | cost | both")->capture_default_str();
    add_out(catalog);

    auto* volume = app.add_subcommand("volume", "maximum arithmetic degree check");
    volume->add_option("--d", d, "graph size")->capture_default_str();
    add_out(volume);

    auto* verify = app.add_subcommand("verify", "run the randomized invariant suite");
    verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify->add_option("--parallel", parallel, "worker threads")->capture_default_str();
    add_out(verify);

    auto* tables = app.add_subcommand("tables", "reproduce a fan statistics row");
    tables->add_option("--side", side, "primal | dual")->capture_default_str();
    tables->add_option("--d", d, "graph size")->capture_default_str();
    tables->add_option("--budget", budget, "maximum number of cones")
        ->capture_default_str();
    tables->add_option("--parallel", parallel, "worker threads")->capture_default_str();
    add_out(tables);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gb->parsed()) return cmd_gb(instance, out_file);
        if (solve->parsed()) return cmd_solve(instance, method, out_file);
        if (pairs->parsed()) return cmd_pairs(instance, out_file);
        if (fan->parsed()) return cmd_fan(side, d, budget, parallel, out_file, dump_file);
        if (catalog->parsed()) return cmd_catalog(kind, d, what, out_file);
        if (volume->parsed()) return cmd_volume(d, out_file);
        if (verify->parsed()) return cmd_verify(seed, parallel, out_file);
        if (tables->parsed()) return cmd_tables(side, d, budget, parallel, out_file);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const gbflow::error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 2;
}
