// Command-line front end: generator construction, character enumeration,
// normalizer/Galois actions on tree functions, orbits, and the verification
// suites.  Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sylow/io.hpp"
#include "sylow/verify.hpp"

using namespace sylow;

namespace {

std::size_t oracle_budget_default() {
    if (const char* env = std::getenv("PSYLOW_ORACLE_BUDGET")) {
        const long long v = std::atoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultOracleBudget;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

struct LoadedTree {
    NTreeFn tuple;
    bool bare;  // input was a single {"p","k","labels"} object
};

LoadedTree load_tree(const std::string& path) {
    const json j = load_json(path);
    return {any_tree_from_json(j), !j.contains("components")};
}

void emit_tree(const NTreeFn& t, bool bare) {
    if (bare && t.comps.size() == 1)
        std::cout << tree_to_json(t.comps[0]).dump(2) << "\n";
    else
        std::cout << ntree_to_json(t).dump(2) << "\n";
}

void print_results(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        std::printf(" (%.2fs)", r.seconds);
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
    }
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sylow p-subgroups of symmetric groups: generators, tree-function characters, actions"};
    app.require_subcommand(1);

    long long n = 0;
    int p = 0, k = 0, a = 0, m = 1;
    bool as_json = false, run_all = false, serial = false;
    unsigned seed = 12345;
    std::size_t budget = oracle_budget_default();
    std::size_t cap = 1'000'000;
    int threads = 0;
    std::string tree_path, gen_spec, gens_choice = "all-sigma", out_path, format;

    auto* gens_cmd = app.add_subcommand("gens", "print the generators of P_n and N_n");
    gens_cmd->add_option("--n", n, "degree")->required();
    gens_cmd->add_option("--p", p, "prime")->required();
    gens_cmd->add_option("--a", a, "primitive root mod p (default: smallest)");
    gens_cmd->add_flag("--json", as_json, "emit JSON");
    gens_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* chars_cmd = app.add_subcommand("chars", "enumerate the admissible tree functions with degrees");
    chars_cmd->add_option("--p", p, "prime")->required();
    chars_cmd->add_option("--k", k, "height parameter (p^k mode)");
    chars_cmd->add_option("--n", n, "degree (general mode)");
    chars_cmd->add_flag("--json", as_json, "emit JSON");
    chars_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* act_cmd = app.add_subcommand("act", "apply one action generator to a tree function");
    act_cmd->add_option("--tree", tree_path, "tree JSON file")->required();
    act_cmd->add_option("--gen", gen_spec, "sigma:i,j,l | galois:m | rho:y:xi,zeta,...")->required();
    act_cmd->add_option("--a", a, "primitive root mod p (default: smallest)");
    act_cmd->add_option("--format", format, "json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));

    auto* galois_cmd = app.add_subcommand("galois", "apply the Galois generator m times");
    galois_cmd->add_option("--tree", tree_path, "tree JSON file")->required();
    galois_cmd->add_option("--m", m, "power of the Galois generator");
    galois_cmd->add_option("--a", a, "primitive root mod p (default: smallest)");
    galois_cmd->add_option("--format", format, "json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));

    auto* orbit_cmd = app.add_subcommand("orbit", "BFS orbit closure under a generator set");
    orbit_cmd->add_option("--tree", tree_path, "tree JSON file")->required();
    orbit_cmd->add_option("--gens", gens_choice, "all-sigma | all | galois")
        ->check(CLI::IsMember({"all-sigma", "all", "galois"}));
    orbit_cmd->add_option("--a", a, "primitive root mod p (default: smallest)");
    orbit_cmd->add_option("--cap", cap, "orbit size cap");

    auto* ce_cmd = app.add_subcommand("counterexample", "verify the Galois-but-not-normalizer pair in P_125");

    auto* verify_cmd = app.add_subcommand("verify", "run the oracle agreement suites");
    verify_cmd->add_option("--p", p, "prime");
    verify_cmd->add_option("--k", k, "height parameter");
    verify_cmd->add_flag("--all", run_all, "run the full matrix");
    verify_cmd->add_option("--a", a, "primitive root used at p=5 (default 2)");
    verify_cmd->add_option("--budget", budget, "oracle element budget");
    verify_cmd->add_flag("--serial", serial, "disable the parallel kernels");
    verify_cmd->add_option("--seed", seed, "seed for the randomized spot-checks");
    verify_cmd->add_option("--threads", threads, "worker thread count (0 = runtime default)");

    auto* dot_cmd = app.add_subcommand("dot", "render a tree function to DOT");
    dot_cmd->add_option("--tree", tree_path, "tree JSON file")->required();
    dot_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
#ifdef _OPENMP
        if (threads > 0) omp_set_num_threads(threads);
#endif
        if (format.empty()) format = (act_cmd->parsed() || galois_cmd->parsed()) ? "json" : "text";
        as_json |= format == "json";

        if (gens_cmd->parsed()) {
            const int root = a ? a : smallest_primitive_root(p);
            const auto gs = generators_N(n, p, root);
            if (as_json) {
                std::cout << generators_to_json(gs).dump(2) << "\n";
            } else {
                std::cout << "P_" << n << " (p=" << p << ", a=" << root << ")\n";
                for (const auto& e : gs.entries) {
                    std::cout << "g(" << e.i << "," << e.j << "," << e.ell << ") = " << e.g.to_cycle_string()
                              << "\n";
                    std::cout << "sigma(" << e.i << "," << e.j << "," << e.ell << ") = "
                              << e.sigma.to_cycle_string() << "\n";
                }
                for (size_t i = 0; i < gs.xi.size(); ++i) {
                    std::cout << "xi_" << i + 1 << " = " << gs.xi[i].to_cycle_string() << "\n";
                    std::cout << "zeta_" << i + 1 << " = " << gs.zeta[i].to_cycle_string() << "\n";
                }
            }
            return 0;
        }

        if (chars_cmd->parsed()) {
            if ((k == 0) == (n == 0)) throw std::runtime_error("pass exactly one of --k or --n");
            json arr = json::array();
            size_t idx = 0;
            if (k > 0) {
                for (const auto& t : enumerate_admissible(p, k)) {
                    if (as_json) {
                        arr.push_back(json{{"index", idx},
                                           {"degree", degree_of(t).str()},
                                           {"description", describe(*psi(t))},
                                           {"tree", tree_to_json(t)}});
                    } else {
                        std::cout << "#" << idx << " deg=" << degree_of(t).str() << "  " << describe(*psi(t))
                                  << "\n";
                    }
                    ++idx;
                }
            } else {
                for (const auto& t : n_enumerate(p_adic_shape(n, p))) {
                    if (as_json) {
                        arr.push_back(json{{"index", idx},
                                           {"degree", n_degree(t).str()},
                                           {"description", describe(psi_n(t))},
                                           {"tree", ntree_to_json(t)}});
                    } else {
                        std::cout << "#" << idx << " deg=" << n_degree(t).str() << "  " << describe(psi_n(t))
                                  << "\n";
                    }
                    ++idx;
                }
            }
            if (as_json) std::cout << arr.dump(2) << "\n";
            return 0;
        }

        if (act_cmd->parsed() || galois_cmd->parsed()) {
            const auto loaded = load_tree(tree_path);
            const int root = a ? a : smallest_primitive_root(loaded.tuple.shape.p);
            const ActionGen gen = act_cmd->parsed() ? parse_action_gen(gen_spec) : galois_gen(m);
            const NTreeFn moved = act_n(loaded.tuple, gen, root);
            if (format == "dot") {
                std::cout << (loaded.bare ? tree_to_dot(moved.comps[0]) : ntree_to_dot(moved));
            } else if (format == "text") {
                for (const auto& c : moved.comps) {
                    if (c.k == 0) {
                        std::cout << "(trivial)\n";
                        continue;
                    }
                    for (const auto& addr : skeleton_addresses(c.p, c.k))
                        std::cout << (addr.empty() ? "." : address_to_string(addr)) << "=" << label_at(c, addr)
                                  << " ";
                    std::cout << "\n";
                }
            } else {
                emit_tree(moved, loaded.bare);
            }
            return 0;
        }

        if (orbit_cmd->parsed()) {
            const auto loaded = load_tree(tree_path);
            const int root = a ? a : smallest_primitive_root(loaded.tuple.shape.p);
            std::vector<ActionGen> gens;
            if (gens_choice == "galois") {
                gens.push_back(galois_gen(1));
            } else {
                gens = all_sigma_gens(loaded.tuple.shape);
                if (gens_choice == "all")
                    for (auto& r : all_rho_gens(loaded.tuple.shape)) gens.push_back(std::move(r));
            }
            const auto orb = orbit(loaded.tuple, gens, root, cap);
            json arr = json::array();
            for (const auto& t : orb) arr.push_back(ntree_to_json(t));
            std::cout << json{{"size", orb.size()}, {"orbit", arr}}.dump(2) << "\n";
            return 0;
        }

        if (ce_cmd->parsed()) {
            const auto rep = verify_counterexample();
            std::cout << counterexample_to_json(rep).dump(2) << "\n";
            return rep.pass() ? 0 : 1;
        }

        if (verify_cmd->parsed()) {
            VerifyOptions opt;
            if (a) opt.a5 = a;
            opt.budget = budget;
            opt.parallel = !serial;
            opt.seed = seed;
            std::vector<CheckResult> results;
            if (run_all) {
                results = verify_all(opt);
            } else {
                if (p == 0 || k == 0) throw std::runtime_error("pass --p and --k, or --all");
                results = verify_prime_power(p, k, opt);
            }
            print_results(results);
            const bool ok = all_pass(results);
            std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
            return ok ? 0 : 1;
        }

        if (dot_cmd->parsed()) {
            const auto loaded = load_tree(tree_path);
            const std::string dot = loaded.bare ? tree_to_dot(loaded.tuple.comps[0])
                                                : ntree_to_dot(loaded.tuple);
            if (out_path.empty()) {
                std::cout << dot;
            } else {
                std::ofstream out(out_path);
                if (!out) throw std::runtime_error("cannot write " + out_path);
                out << dot;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
