#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hist/audit.hpp"
#include "hist/families.hpp"
#include "hist/graph.hpp"
#include "hist/graph6.hpp"
#include "hist/mindeg.hpp"
#include "hist/sigma2.hpp"
#include "hist/solver.hpp"
#include "hist/tree.hpp"

namespace {

using namespace hist;

constexpr int kExitFound = 0;
constexpr int kExitNotExists = 1;
constexpr int kExitInconclusive = 2;  // stuck or budget exhausted
constexpr int kExitUsage = 64;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Edgelist: "n m" header then m "u v" lines (0-indexed). Anything else is
// treated as a graph6 line.
Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string first;
    std::getline(in, first);
    std::istringstream head(first);
    int n, m;
    char extra;
    if (head >> n >> m && !(head >> extra)) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        edges.reserve(m);
        for (int i = 0; i < m; ++i) {
            VertexId u, v;
            if (!(in >> u >> v)) throw std::runtime_error("edgelist truncated");
            edges.emplace_back(u, v);
        }
        return Graph(n, edges);
    }
    while (!first.empty() && (first.back() == '\n' || first.back() == '\r')) first.pop_back();
    return graph6_decode(first);
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

std::string emit_edgelist(const Graph& g) {
    std::ostringstream os;
    os << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edge_list()) os << u << ' ' << v << '\n';
    return os.str();
}

void write_out(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << data;
}

// Parent array of the tree rooted at vertex 0 (parent[0] = -1).
std::vector<int> parent_array(const TreeEdgeSet& t) {
    int n = t.host().num_vertices();
    std::vector<int> parent(n, -2);
    std::vector<VertexId> queue = {0};
    parent[0] = -1;
    for (size_t h = 0; h < queue.size(); ++h) {
        VertexId u = queue[h];
        for (VertexId v : t.tree_neighbors(u))
            if (parent[v] == -2) {
                parent[v] = u;
                queue.push_back(v);
            }
    }
    return parent;
}

void print_tree(const TreeEdgeSet& t) {
    std::cout << "tree:";
    for (int p : parent_array(t)) std::cout << ' ' << p;
    std::cout << '\n';
}

int cmd_find(const Graph& g, int k, const std::string& mode, uint64_t budget) {
    std::string chosen = mode;
    if (chosen == "auto") {
        DegreeStats st = degree_stats(g);
        Thresholds th = compute_thresholds(k, g.num_vertices());
        if (k == 2 && g.num_vertices() >= 10 && st.sigma2_at_least(g.num_vertices() - 2))
            chosen = "sigma2";
        else if (st.delta >= th.min_degree_bound())
            chosen = "mindeg";
        else
            chosen = "exact";
    }
    std::cout << "mode: " << chosen << '\n';
    if (chosen == "sigma2") {
        if (k != 2) throw std::runtime_error("--mode sigma2 requires k = 2");
        Sigma2Result r = find_hist_sigma2(g);
        if (r.ok()) {
            std::cout << "outcome: Found\n";
            print_tree(*r.tree);
            return kExitFound;
        }
        std::cout << "outcome: NotExists\n";
        return kExitNotExists;
    }
    if (chosen == "mindeg") {
        MindegResult r = find_2k_st_mindeg(g, k);
        if (r.ok()) {
            std::cout << "outcome: Found\n";
            print_tree(*r.tree);
            return kExitFound;
        }
        std::cout << "outcome: Stuck (" << r.stuck->reason << ")\n";
        return kExitInconclusive;
    }
    SearchVerdict v = solve_2k_st(g, k, SearchBudget(budget));
    if (v.found()) {
        std::cout << "outcome: Found\n";
        print_tree(*v.tree);
        return kExitFound;
    }
    if (v.not_exists()) {
        std::cout << "outcome: NotExists\n";
        return kExitNotExists;
    }
    std::cout << "outcome: BudgetExceeded\n";
    return kExitInconclusive;
}

int cmd_check(const Graph& g) {
    int n = g.num_vertices();
    DegreeStats st = degree_stats(g);
    std::cout << "n=" << n << '\n' << "m=" << g.num_edges() << '\n';
    std::cout << "connected=" << (is_connected(g) ? 1 : 0) << '\n';
    std::cout << "delta=" << st.delta << '\n';
    if (st.sigma2) std::cout << "sigma2=" << *st.sigma2 << '\n';
    else std::cout << "sigma2=inf\n";
    if (is_connected(g)) std::cout << "diameter=" << diameter(g) << '\n';
    for (int k = 2; k <= 5; ++k) {
        Thresholds th = compute_thresholds(k, n);
        std::cout << "c_" << k << '=' << th.c_k << '\n';
        std::cout << "p_" << k << '=' << th.p << '\n';
        std::cout << "mindeg_hypothesis_k" << k << '='
                  << (st.delta >= th.min_degree_bound() ? 1 : 0) << '\n';
    }
    bool sig_hyp = n >= 10 && st.sigma2_at_least(n - 2);
    std::cout << "sigma2_hypothesis=" << (sig_hyp ? 1 : 0) << '\n';
    auto dn = recognize_Dn(g);
    std::cout << "is_dn=" << (dn ? 1 : 0) << '\n';
    std::cout << "# " << n << " vertices, " << g.num_edges() << " edges, delta " << st.delta;
    if (st.sigma2) std::cout << ", sigma2 " << *st.sigma2;
    else std::cout << ", complete";
    if (sig_hyp)
        std::cout << (dn ? "; sigma2 hypothesis holds but the graph is the pendant-clique "
                           "exception (no valid tree)"
                         : "; sigma2 hypothesis holds: a degree-2-free spanning tree exists");
    std::cout << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"histforge: spanning trees avoiding the degree window [2,k]"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family member");
    std::string gen_spec, gen_format = "graph6", gen_out = "-";
    gen->add_option("spec", gen_spec, "family spec, e.g. dn:10, ahat:3,2,2, bp:4, gkd:2,2")
        ->required();
    gen->add_option("--format", gen_format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    gen->add_option("-o,--output", gen_out, "output file ('-' = stdout)");

    // find
    auto* find = app.add_subcommand("find", "find a spanning tree avoiding degrees [2,k]");
    std::string find_in = "-", find_mode = "auto";
    int find_k = 2;
    uint64_t find_budget = SearchBudget{}.max_nodes;
    find->add_option("input", find_in, "graph file, '-' = stdin (graph6 or edgelist)");
    find->add_option("-k,--k", find_k, "forbidden degree window is [2,k]")
        ->check(CLI::Range(2, 64));
    find->add_option("--mode", find_mode, "exact, mindeg, sigma2, or auto")
        ->check(CLI::IsMember({"exact", "mindeg", "sigma2", "auto"}));
    find->add_option("--budget", find_budget, "exact-search node budget");

    // check
    auto* check = app.add_subcommand("check", "report degree statistics and hypotheses");
    std::string check_in = "-";
    check->add_option("input", check_in, "graph file, '-' = stdin");

    // audit
    auto* audit = app.add_subcommand("audit", "run a reproducible audit suite");
    std::vector<std::string> audit_suites;
    hist::AuditOptions aopt;
    audit
        ->add_option("suite", audit_suites,
                     "claim11, thm1, thm2, prop-gkd, thmC-families, oracle-xcheck, or all")
        ->required();
    audit->add_option("--seed", aopt.seed, "base RNG seed");
    audit->add_option("--nmax", aopt.nmax, "oracle cross-check order cap")->check(CLI::Range(2, 9));
    audit->add_option("--budget", aopt.budget_nodes, "exact-search node budget");
    audit->add_option("--instances", aopt.thm2_instances, "random instances for the thm2 sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Graph g = generate(FamilySpec::parse(gen_spec));
            write_out(gen_out, gen_format == "graph6" ? graph6_encode(g) + "\n"
                                                      : emit_edgelist(g));
            return 0;
        }
        if (*find) return cmd_find(load_graph(find_in), find_k, find_mode, find_budget);
        if (*check) return cmd_check(load_graph(check_in));
        if (*audit) {
            if (audit_suites.size() == 1 && audit_suites[0] == "all")
                audit_suites = {"claim11", "prop-gkd",      "thmC-families",
                                "thm2",    "oracle-xcheck", "thm1"};
            bool all_ok = true;
            for (const std::string& s : audit_suites) {
                hist::AuditReport rep = hist::run_audit(s, aopt);
                std::cout << rep.summary() << '\n';
                for (const std::string& f : rep.failures) std::cout << "  FAIL " << f << '\n';
                all_ok = all_ok && rep.ok();
            }
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
