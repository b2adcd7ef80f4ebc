#include "sylow/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "sylow/actions.hpp"

namespace sylow {

namespace {

template <typename Fn>
CheckResult timed(const std::string& name, Fn&& body) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        std::ostringstream detail;
        r.pass = body(detail);
        r.detail = detail.str();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

bool same_images(const Perm& got, const std::string& want_cycles, std::ostringstream& detail,
                 const std::string& label) {
    const Perm want = Perm::parse_cycles(got.degree(), want_cycles);
    if (got == want) return true;
    detail << label << ": got " << got.to_cycle_string() << ", want " << want_cycles << "; ";
    return false;
}

}  // namespace

int primitive_root_for(int p, const VerifyOptions& opt) {
    return p == 5 ? opt.a5 : smallest_primitive_root(p);
}

CheckResult check_example_n25(const VerifyOptions& opt) {
    return timed("example n=25 generators", [&](std::ostringstream& d) {
        const auto gs = generators_N(25, 5, opt.a5);
        bool ok = true;
        ok &= same_images(gs.at(1, 1, 1).g, "(1,2,3,4,5)", d, "g_1");
        ok &= same_images(gs.at(1, 1, 2).g,
                          "(1,6,11,16,21)(2,7,12,17,22)(3,8,13,18,23)(4,9,14,19,24)(5,10,15,20,25)", d, "g_2");
        ok &= same_images(gs.at(1, 1, 1).sigma, "(2,4,3,1)(7,9,8,6)(12,14,13,11)(17,19,18,16)(22,24,23,21)", d,
                          "sigma_1");
        ok &= same_images(gs.at(1, 1, 2).sigma, "(6,16,11,1)(7,17,12,2)(8,18,13,3)(9,19,14,4)(10,20,15,5)", d,
                          "sigma_2");
        const Perm g1 = gs.at(1, 1, 1).g, g2 = gs.at(1, 1, 2).g;
        const Perm s1 = gs.at(1, 1, 1).sigma, s2 = gs.at(1, 1, 2).sigma;
        if (g1.conjugate_by(s1) != g1.pow(2)) { d << "g1^s1 != g1^2; "; ok = false; }
        if (g1.conjugate_by(s2) != g1.conjugate_by(g2)) { d << "g1^s2 != g1^g2; "; ok = false; }
        if (g2.conjugate_by(s1) != g2) { d << "g2^s1 != g2; "; ok = false; }
        if (g2.conjugate_by(s2) != g2.pow(2)) { d << "g2^s2 != g2^2; "; ok = false; }
        return ok;
    });
}

CheckResult check_example_n19(const VerifyOptions& opt) {
    return timed("example n=19 generators", [&](std::ostringstream& d) {
        const auto gs = generators_N(19, 5, opt.a5);
        const auto& shape = gs.shape;
        bool ok = true;
        ok &= tau_embed(shape, 1, 1) == Perm::identity(19);
        ok &= same_images(tau_embed(shape, 1, 2), "(1,6)(2,7)(3,8)(4,9)(5,10)", d, "tau(1,2)");
        ok &= same_images(tau_embed(shape, 1, 3), "(1,11)(2,12)(3,13)(4,14)(5,15)", d, "tau(1,3)");
        ok &= same_images(tau_embed(shape, 2, 1), "(1,16)", d, "tau(2,1)");
        ok &= same_images(tau_embed(shape, 2, 2), "(1,17)", d, "tau(2,2)");
        ok &= same_images(tau_embed(shape, 2, 3), "(1,18)", d, "tau(2,3)");
        ok &= same_images(tau_embed(shape, 2, 4), "(1,19)", d, "tau(2,4)");
        ok &= same_images(gs.at(1, 1, 1).g, "(1,2,3,4,5)", d, "g(1,1,1)");
        ok &= same_images(gs.at(1, 2, 1).g, "(6,7,8,9,10)", d, "g(1,2,1)");
        ok &= same_images(gs.at(1, 3, 1).g, "(11,12,13,14,15)", d, "g(1,3,1)");
        ok &= same_images(gs.at(1, 1, 1).sigma, "(2,4,3,1)", d, "sigma(1,1,1)");
        ok &= same_images(gs.at(1, 2, 1).sigma, "(7,9,8,6)", d, "sigma(1,2,1)");
        ok &= same_images(gs.at(1, 3, 1).sigma, "(12,14,13,11)", d, "sigma(1,3,1)");
        ok &= same_images(gs.zeta[0], "(1,6,11)(2,7,12)(3,8,13)(4,9,14)(5,10,15)", d, "zeta_1");
        // zeta_2 is the conjugate of the 4-cycle (1,2,3,4) by tau_15
        ok &= same_images(gs.zeta[1], "(16,17,18,19)", d, "zeta_2");
        ok &= same_images(gs.xi[0], "(1,6)(2,7)(3,8)(4,9)(5,10)", d, "xi_1");
        ok &= same_images(gs.xi[1], "(16,17)", d, "xi_2");
        if (gs.entries.size() != 3) { d << "|L(19)| != 3; "; ok = false; }
        return ok;
    });
}

CheckResult check_bijection_count(int p, int k, const VerifyOptions& opt) {
    return timed("class count (" + std::to_string(p) + "," + std::to_string(k) + ")",
                 [&](std::ostringstream& d) {
                     const auto G = enumerate_group(generators_P(ipow(p, k), p).g_list(), opt.budget);
                     const auto trees = enumerate_admissible(p, k);
                     d << "classes=" << G.class_count() << " trees=" << trees.size()
                       << " recurrence=" << count_admissible(p, k).str();
                     return BigInt(static_cast<long long>(G.class_count())) == count_admissible(p, k) &&
                            trees.size() == G.class_count();
                 });
}

CheckResult check_orthogonality(int p, int k, const VerifyOptions& opt) {
    return timed("orthogonality (" + std::to_string(p) + "," + std::to_string(k) + ")",
                 [&](std::ostringstream& d) {
                     const auto G = enumerate_group(generators_P(ipow(p, k), p).g_list(), opt.budget);
                     const auto trees = enumerate_admissible(p, k);
                     std::vector<CharPtr> chars;
                     for (const auto& t : trees) chars.push_back(psi(t));
                     const auto tables = value_tables(chars, G, opt.parallel);
                     const auto gram = gram_matrix(tables, G, opt.parallel);
                     bool ok = true;
                     for (size_t i = 0; i < gram.size() && ok; ++i)
                         for (size_t j = 0; j < gram.size() && ok; ++j)
                             if (gram[i][j] != (i == j ? 1 : 0)) {
                                 d << "[chi_" << i << ", chi_" << j << "] = " << gram[i][j].str() << "; ";
                                 ok = false;
                             }
                     BigInt sq = 0;
                     for (const auto& t : trees) sq += degree_of(t) * degree_of(t);
                     if (sq != static_cast<long long>(G.order())) {
                         d << "sum deg^2 = " << sq.str() << " != " << G.order() << "; ";
                         ok = false;
                     }
                     d << trees.size() << " characters";
                     return ok;
                 });
}

CheckResult check_th1_agreement(int p, int k, const VerifyOptions& opt) {
    return timed("normalizer action (" + std::to_string(p) + "," + std::to_string(k) + ")",
                 [&](std::ostringstream& d) {
                     const int a = primitive_root_for(p, opt);
                     const auto G = enumerate_group(generators_P(ipow(p, k), p).g_list(), opt.budget);
                     const auto trees = enumerate_admissible(p, k);
                     std::vector<CharPtr> chars;
                     for (const auto& t : trees) chars.push_back(psi(t));
                     const auto tables = value_tables(chars, G, opt.parallel);
                     for (int j = 1; j <= k; ++j) {
                         const Perm sigma = gen_sigma(p, k, j, a);
                         for (size_t i = 0; i < trees.size(); ++i) {
                             const auto moved = direct_conjugate(*chars[i], sigma, G);
                             if (!(trees[match_character(moved, tables)] == act_sigma(trees[i], j, a))) {
                                 d << "mismatch at tree " << i << ", j=" << j;
                                 return false;
                             }
                         }
                     }
                     d << trees.size() << " trees x " << k << " generators";
                     return true;
                 });
}

CheckResult check_addresswise(int p, int k, const VerifyOptions& opt) {
    return timed("addresswise action (" + std::to_string(p) + "," + std::to_string(k) + ")",
                 [&](std::ostringstream& d) {
                     const int a = primitive_root_for(p, opt);
                     const auto trees = enumerate_admissible(p, k);
                     for (const auto& t : trees)
                         for (int j = 1; j <= k; ++j)
                             if (!equivalent(act_sigma_addresswise(t, j, a), act_sigma(t, j, a))) {
                                 d << "mismatch at j=" << j;
                                 return false;
                             }
                     d << trees.size() << " trees x " << k << " generators";
                     return true;
                 });
}

CheckResult check_th3_agreement(int p, int k, const VerifyOptions& opt) {
    return timed("galois action (" + std::to_string(p) + "," + std::to_string(k) + ")",
                 [&](std::ostringstream& d) {
                     const int a = primitive_root_for(p, opt);
                     const int b = inverse_mod(a, p);
                     const auto G = enumerate_group(generators_P(ipow(p, k), p).g_list(), opt.budget);
                     const auto trees = enumerate_admissible(p, k);
                     std::vector<CharPtr> chars;
                     for (const auto& t : trees) chars.push_back(psi(t));
                     const auto tables = value_tables(chars, G, opt.parallel);
                     for (size_t i = 0; i < trees.size(); ++i) {
                         const auto moved = direct_galois(tables[i], b);
                         if (!(trees[match_character(moved, tables)] == act_galois(trees[i], a))) {
                             d << "mismatch at tree " << i;
                             return false;
                         }
                     }
                     d << trees.size() << " characters over " << G.order() << " elements";
                     return true;
                 });
}

CheckResult check_degree_formula(int p, int k, const VerifyOptions& opt) {
    (void)opt;
    return timed("degree formula (" + std::to_string(p) + "," + std::to_string(k) + ")",
                 [&](std::ostringstream& d) {
                     const Perm id = Perm::identity(static_cast<int>(ipow(p, k)));
                     const auto trees = enumerate_admissible(p, k);
                     for (const auto& t : trees) {
                         const auto v = evaluate(*psi(t), id).as_integer();
                         if (!v || *v != degree_of(t)) {
                             d << "degree mismatch";
                             return false;
                         }
                     }
                     d << trees.size() << " trees";
                     return true;
                 });
}

CheckResult check_counterexample(const VerifyOptions&) {
    return timed("galois pair outside the normalizer orbit (n=125)", [&](std::ostringstream& d) {
        const auto rep = verify_counterexample();
        d << "degrees " << rep.degree1.str() << "/" << rep.degree2.str() << ", orbit size "
          << rep.sigma_orbit_size;
        return rep.pass();
    });
}

CheckResult check_linear_identity(long long n, int p, const VerifyOptions& opt) {
    return timed("linear identity n=" + std::to_string(n), [&](std::ostringstream&) {
        return linear_identity_check(n, p, primitive_root_for(p, opt));
    });
}

CheckResult check_general_n_agreement(long long n, int p, const VerifyOptions& opt) {
    return timed("general-n agreement n=" + std::to_string(n), [&](std::ostringstream& d) {
        const int a = primitive_root_for(p, opt);
        const auto gs = generators_N(n, p, a);
        const auto G = enumerate_group(gs.g_list(), opt.budget);
        const auto tuples = n_enumerate(gs.shape);
        std::vector<NCharExpr> chars;
        for (const auto& t : tuples) chars.push_back(psi_n(t));
        const auto tables = value_tables(chars, G, opt.parallel);
        for (const auto& e : gs.entries)
            for (size_t i = 0; i < tuples.size(); ++i)
                if (!(tuples[match_character(direct_conjugate(chars[i], e.sigma, G), tables)] ==
                      act_n(tuples[i], sigma_gen(e.i, e.j, e.ell), a))) {
                    d << "sigma(" << e.i << "," << e.j << "," << e.ell << ") mismatch";
                    return false;
                }
        for (int y = 1; y <= gs.shape.term_count(); ++y) {
            if (gs.shape.terms[static_cast<size_t>(y) - 1].a < 2) continue;
            for (auto letter : {ActionGen::RhoLetter::Xi, ActionGen::RhoLetter::Zeta}) {
                const Perm h = letter == ActionGen::RhoLetter::Xi ? gs.xi[static_cast<size_t>(y) - 1]
                                                                  : gs.zeta[static_cast<size_t>(y) - 1];
                for (size_t i = 0; i < tuples.size(); ++i)
                    if (!(tuples[match_character(direct_conjugate(chars[i], h, G), tables)] ==
                          act_n(tuples[i], rho_gen(y, {letter}), a))) {
                        d << "rho mismatch at term " << y;
                        return false;
                    }
            }
        }
        for (size_t i = 0; i < tuples.size(); ++i)
            if (!(tuples[match_character(direct_galois(tables[i], gs.b), tables)] ==
                  act_galois_n(tuples[i], a))) {
                d << "galois mismatch";
                return false;
            }
        d << tuples.size() << " characters, " << G.order() << " elements";
        return true;
    });
}

CheckResult check_sigma_relations(int p, int k, const VerifyOptions& opt) {
    return timed("wreath conjugation spot-checks (" + std::to_string(p) + "," + std::to_string(k) + ")",
                 [&](std::ostringstream& d) {
                     const int a = primitive_root_for(p, opt);
                     std::mt19937 rng(opt.seed);
                     const auto tau = tau_label_perm(p, a);
                     const long long q = ipow(p, k - 1);
                     const auto G_small = enumerate_group(generators_P(q, p).g_list(), opt.budget);
                     for (int trial = 0; trial < 50; ++trial) {
                         std::vector<Perm> base;
                         for (int i = 0; i < p; ++i)
                             base.push_back(G_small.elements[rng() % G_small.order()]);
                         const int s = static_cast<int>(rng() % p);
                         const Perm g = wreath_compose(base, s, p, k);
                         const auto wk = wreath_decompose(g.conjugate_by(gen_sigma(p, k, k, a)), p, k);
                         const Perm delta = gen_g(p, 1, 1).pow(s);
                         if (gen_g(p, 1, 1).pow(wk.top_exp) != delta.conjugate_by(gen_sigma(p, 1, 1, a))) {
                             d << "top entry mismatch";
                             return false;
                         }
                         for (int i = 1; i <= p; ++i)
                             if (wk.base[static_cast<size_t>(i) - 1] !=
                                 base[static_cast<size_t>(tau[static_cast<size_t>(i)]) - 1]) {
                                 d << "base transport mismatch";
                                 return false;
                             }
                         for (int j = 1; j < k; ++j) {
                             const auto wj = wreath_decompose(g.conjugate_by(gen_sigma(p, k, j, a)), p, k);
                             if (wj.top_exp != s) {
                                 d << "top changed for j<k";
                                 return false;
                             }
                             for (int i = 0; i < p; ++i)
                                 if (wj.base[static_cast<size_t>(i)] !=
                                     base[static_cast<size_t>(i)].conjugate_by(gen_sigma(p, k - 1, j, a))) {
                                     d << "entrywise conjugation mismatch";
                                     return false;
                                 }
                         }
                     }
                     d << "50 random elements";
                     return true;
                 });
}

std::vector<CheckResult> verify_prime_power(int p, int k, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(check_bijection_count(p, k, opt));
    out.push_back(check_degree_formula(p, k, opt));
    out.push_back(check_orthogonality(p, k, opt));
    out.push_back(check_th1_agreement(p, k, opt));
    out.push_back(check_addresswise(p, k, opt));
    out.push_back(check_th3_agreement(p, k, opt));
    if (k >= 2) out.push_back(check_sigma_relations(p, k, opt));
    return out;
}

std::vector<CheckResult> verify_all(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(check_example_n25(opt));
    out.push_back(check_example_n19(opt));
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
        out.push_back(check_bijection_count(p, k, opt));
        out.push_back(check_degree_formula(p, k, opt));
    }
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}}) {
        out.push_back(check_orthogonality(p, k, opt));
        out.push_back(check_addresswise(p, k, opt));
    }
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}})
        out.push_back(check_th1_agreement(p, k, opt));
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}})
        out.push_back(check_th3_agreement(p, k, opt));
    out.push_back(check_general_n_agreement(19, 5, opt));
    out.push_back(check_general_n_agreement(18, 3, opt));  // rho moves height-2 components
    out.push_back(check_general_n_agreement(13, 3, opt));  // three-term offset bookkeeping
    out.push_back(check_counterexample(opt));
    for (long long n : {5, 9, 19, 25, 27}) out.push_back(check_linear_identity(n, n % 3 == 0 ? 3 : 5, opt));
    out.push_back(check_sigma_relations(3, 2, opt));
    out.push_back(check_sigma_relations(5, 2, opt));
    return out;
}

}  // namespace sylow
