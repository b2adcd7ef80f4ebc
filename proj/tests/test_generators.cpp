#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "sylow/generators.hpp"

using namespace sylow;

TEST_CASE("p-adic shapes") {
    const auto s = p_adic_shape(19, 5);
    REQUIRE(s.term_count() == 2);
    CHECK(s.terms[0].k == 1);
    CHECK(s.terms[0].a == 3);
    CHECK(s.terms[1].k == 0);
    CHECK(s.terms[1].a == 4);
    CHECK(s.q == std::vector<int>{0, 3, 7});
    CHECK(s.comp_exponent(1) == 1);
    CHECK(s.comp_exponent(3) == 1);
    CHECK(s.comp_exponent(4) == 0);
    CHECK(s.comp_exponent(7) == 0);

    const auto s125 = p_adic_shape(125, 5);
    REQUIRE(s125.term_count() == 1);
    CHECK(s125.terms[0].k == 3);
    CHECK(s125.terms[0].a == 1);

    const auto s1 = p_adic_shape(1, 7);
    REQUIRE(s1.term_count() == 1);
    CHECK(s1.terms[0].k == 0);
    CHECK(s1.terms[0].a == 1);

    CHECK_THROWS(p_adic_shape(10, 4));
    CHECK_THROWS(p_adic_shape(0, 5));

    // digit/exponent sanity on a batch of n
    for (long long n = 1; n <= 200; ++n) {
        const auto sh = p_adic_shape(n, 3);
        long long total = 0;
        for (const auto& t : sh.terms) {
            CHECK(t.a >= 1);
            CHECK(t.a <= 2);
            total += t.a * t.pk;
        }
        CHECK(total == n);
    }

    // offsets stay exact well past 32 bits
    const auto big = p_adic_shape(1'000'000'000'039ll, 3);
    long long total = 0;
    for (const auto& t : big.terms) total += t.a * t.pk;
    CHECK(total == 1'000'000'000'039ll);
    CHECK(big.block_offset(1, 1) == 0);
    CHECK(big.term_offset(big.term_count()) > static_cast<long long>(1u << 31));
}

TEST_CASE("primitive roots") {
    CHECK(is_primitive_root(2, 5));
    CHECK(!is_primitive_root(4, 5));
    CHECK(smallest_primitive_root(5) == 2);
    CHECK(smallest_primitive_root(2) == 1);
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(inverse_mod(2, 5) == 3);
}

TEST_CASE("gen_g matches the displayed cycle products") {
    CHECK(gen_g(5, 2, 1) == Perm::parse_cycles(25, "(1,2,3,4,5)"));
    CHECK(gen_g(5, 2, 2) ==
          Perm::parse_cycles(25, "(1,6,11,16,21)(2,7,12,17,22)(3,8,13,18,23)(4,9,14,19,24)(5,10,15,20,25)"));
    CHECK(gen_g(2, 2, 1) == Perm::parse_cycles(4, "(1,2)"));
    CHECK(gen_g(2, 2, 2) == Perm::parse_cycles(4, "(1,3)(2,4)"));
    CHECK_THROWS(gen_g(5, 2, 3));
}

TEST_CASE("gen_sigma matches the displayed cycle products") {
    CHECK(gen_sigma(5, 1, 1, 2) == Perm::parse_cycles(5, "(2,4,3,1)"));
    CHECK(gen_sigma(5, 2, 1, 2) ==
          Perm::parse_cycles(25, "(2,4,3,1)(7,9,8,6)(12,14,13,11)(17,19,18,16)(22,24,23,21)"));
    CHECK(gen_sigma(5, 2, 2, 2) ==
          Perm::parse_cycles(25, "(6,16,11,1)(7,17,12,2)(8,18,13,3)(9,19,14,4)(10,20,15,5)"));
    // p = 2 degenerates to identities, not an error
    CHECK(gen_sigma(2, 3, 1, 1) == Perm::identity(8));
    CHECK(gen_sigma(2, 3, 3, 1) == Perm::identity(8));
    CHECK_THROWS(gen_sigma(5, 2, 1, 4));
}

TEST_CASE("conjugation identities of the p^k normalizer") {
    // g_1^{sigma_1} = (g_1)^2 = (1,3,5,2,4); g_2^{sigma_1} = g_2; and the sigma_2 pair
    const Perm g1 = gen_g(5, 2, 1), g2 = gen_g(5, 2, 2);
    const Perm s1 = gen_sigma(5, 2, 1, 2), s2 = gen_sigma(5, 2, 2, 2);
    CHECK(g1.conjugate_by(s1) == Perm::parse_cycles(25, "(1,3,5,2,4)"));
    CHECK(g1.conjugate_by(s1) == g1.pow(2));
    CHECK(g1.conjugate_by(s2) == g1.conjugate_by(g2));
    CHECK(g1.conjugate_by(g2) == Perm::parse_cycles(25, "(6,7,8,9,10)"));
    CHECK(g2.conjugate_by(s1) == g2);
    CHECK(g2.conjugate_by(s2) == g2.pow(2));
}

TEST_CASE("sigma relations for small p, k") {
    for (int p : {2, 3, 5}) {
        const int a = smallest_primitive_root(p);
        for (int k = 1; k <= 3; ++k) {
            std::vector<Perm> g, s;
            for (int j = 1; j <= k; ++j) {
                g.push_back(gen_g(p, k, j));
                s.push_back(gen_sigma(p, k, j, a));
            }
            for (int j = 1; j <= k; ++j) {
                // sigma_j raises g_j to the a-th power and centralizes g_i for i > j
                CHECK(g[j - 1].conjugate_by(s[j - 1]) == g[j - 1].pow(a));
                for (int i = j + 1; i <= k; ++i)
                    CHECK(g[i - 1].conjugate_by(s[j - 1]) == g[i - 1]);
                // order p-1 (order 1 at p = 2), pairwise commuting
                CHECK(s[j - 1].order() == (p == 2 ? 1 : p - 1));
                for (int i = 1; i <= k; ++i)
                    CHECK(s[i - 1] * s[j - 1] == s[j - 1] * s[i - 1]);
            }
        }
    }
}

TEST_CASE("tau label permutation") {
    CHECK(tau_label_perm(5, 2) == std::vector<int>{0, 3, 1, 4, 2, 5});  // cycle (3,4,2,1), 0 and 5 fixed
    CHECK(tau_label_perm(2, 1) == std::vector<int>{0, 1, 2});
    CHECK(tau_label_perm(3, 2) == std::vector<int>{0, 2, 1, 3});  // cycle (2,1), 0 and 3 fixed
    CHECK_THROWS(tau_label_perm(5, 4));
}

TEST_CASE("example layout for n = 19") {
    const auto shape = p_adic_shape(19, 5);
    CHECK(tau_embed(shape, 1, 1) == Perm::identity(19));
    CHECK(tau_embed(shape, 1, 2) == Perm::parse_cycles(19, "(1,6)(2,7)(3,8)(4,9)(5,10)"));
    CHECK(tau_embed(shape, 1, 3) == Perm::parse_cycles(19, "(1,11)(2,12)(3,13)(4,14)(5,15)"));
    CHECK(tau_embed(shape, 2, 1) == Perm::parse_cycles(19, "(1,16)"));
    CHECK(tau_embed(shape, 2, 4) == Perm::parse_cycles(19, "(1,19)"));
    CHECK_THROWS(tau_embed(shape, 3, 1));

    const auto gs = generators_N(19, 5, 2);
    REQUIRE(gs.entries.size() == 3);
    CHECK(gs.entries[0].i == 1);
    CHECK(gs.entries[0].j == 1);
    CHECK(gs.entries[0].ell == 1);
    CHECK(gs.entries[2].j == 3);
    CHECK(gs.at(1, 1, 1).g == Perm::parse_cycles(19, "(1,2,3,4,5)"));
    CHECK(gs.at(1, 2, 1).g == Perm::parse_cycles(19, "(6,7,8,9,10)"));
    CHECK(gs.at(1, 3, 1).g == Perm::parse_cycles(19, "(11,12,13,14,15)"));
    CHECK(gs.at(1, 1, 1).sigma == Perm::parse_cycles(19, "(2,4,3,1)"));
    CHECK(gs.at(1, 2, 1).sigma == Perm::parse_cycles(19, "(7,9,8,6)"));
    CHECK(gs.at(1, 3, 1).sigma == Perm::parse_cycles(19, "(12,14,13,11)"));

    CHECK(gs.xi[0] == Perm::parse_cycles(19, "(1,6)(2,7)(3,8)(4,9)(5,10)"));
    CHECK(gs.zeta[0] == Perm::parse_cycles(19, "(1,6,11)(2,7,12)(3,8,13)(4,9,14)(5,10,15)"));
    CHECK(gs.xi[1] == Perm::parse_cycles(19, "(16,17)"));
    // the a_2-fold block cycle of term 2: the shifted conjugate of the 4-cycle (1,2,3,4)
    CHECK(gs.zeta[1] == Perm::parse_cycles(19, "(16,17,18,19)"));

    // xi and zeta generate the full symmetric group on the copies: |S_3| and |S_4|
    CHECK(gs.zeta[0].order() == 3);
    CHECK(gs.zeta[1].order() == 4);
    CHECK((gs.xi[1] * gs.zeta[1]).order() == 3);  // (1,2)(1,2,3,4) has order 3 in S_4
}

TEST_CASE("degenerate generator sets") {
    const auto g1 = generators_P(1, 5);
    CHECK(g1.entries.empty());
    const auto gp = generators_P(5, 5);
    REQUIRE(gp.entries.size() == 1);
    CHECK(gp.entries[0].g == Perm::parse_cycles(5, "(1,2,3,4,5)"));
}

TEST_CASE("wreath coordinates pin the paper conventions") {
    const Perm g1 = gen_g(5, 2, 1), g2 = gen_g(5, 2, 2);

    auto w = wreath_decompose(g1, 5, 2);
    CHECK(w.top_exp == 0);
    CHECK(w.base[0] == Perm::parse_cycles(5, "(1,2,3,4,5)"));
    for (int i = 1; i < 5; ++i) CHECK(w.base[static_cast<size_t>(i)] == Perm::identity(5));

    w = wreath_decompose(g2, 5, 2);
    CHECK(w.top_exp == 1);
    for (int i = 0; i < 5; ++i) CHECK(w.base[static_cast<size_t>(i)] == Perm::identity(5));

    w = wreath_decompose(g1.conjugate_by(g2), 5, 2);
    CHECK(w.top_exp == 0);
    CHECK(w.base[1] == Perm::parse_cycles(5, "(1,2,3,4,5)"));
    CHECK(w.base[0] == Perm::identity(5));

    // recursive relation g_j^{(k)} = (g_j^{(k-1)}, 1, ..., 1; 1)
    for (int p : {2, 3, 5}) {
        for (int k = 2; k <= 3; ++k) {
            for (int j = 1; j < k; ++j) {
                auto wc = wreath_decompose(gen_g(p, k, j), p, k);
                CHECK(wc.top_exp == 0);
                CHECK(wc.base[0] == gen_g(p, k - 1, j));
            }
            auto wc = wreath_decompose(gen_g(p, k, k), p, k);
            CHECK(wc.top_exp == 1);
        }
    }

    CHECK_THROWS(wreath_decompose(Perm::parse_cycles(25, "(5,6)"), 5, 2));  // blocks broken
    // blocks preserved but the block permutation (1 2) is not a power of the 5-cycle
    CHECK_THROWS(wreath_decompose(Perm::parse_cycles(25, "(1,6)(2,7)(3,8)(4,9)(5,10)"), 5, 2));
    CHECK_THROWS(wreath_decompose(Perm::parse_cycles(4, "(1,2,3)"), 2, 2));  // blocks broken
}

TEST_CASE("wreath compose inverts decompose on random elements") {
    std::mt19937 rng(999);
    for (int p : {2, 3, 5}) {
        const int k = 2;
        const long long q = ipow(p, k - 1);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Perm> base;
            for (int i = 0; i < p; ++i) {
                // random power of the q-cycle keeps entries inside P_{p^{k-1}}
                base.push_back(gen_g(p, k - 1, 1).pow(static_cast<long long>(rng() % p)));
            }
            const int s = static_cast<int>(rng() % p);
            const Perm g = wreath_compose(base, s, p, k);
            const auto w = wreath_decompose(g, p, k);
            CHECK(w.top_exp == s);
            for (int i = 0; i < p; ++i) CHECK(w.base[static_cast<size_t>(i)] == base[static_cast<size_t>(i)]);
            (void)q;
        }
    }
}

TEST_CASE("wreath coordinates obey the group law") {
    // (f_1, f_2; gamma)^2 = (f_1 f_2, f_2 f_1; 1): the base entries of a product
    // pick up the entry of the block their source moves to
    std::mt19937 rng(31337);
    const auto G4 = std::vector<Perm>{gen_g(2, 2, 1), gen_g(2, 2, 2)};
    std::vector<Perm> elements{Perm::identity(4)};
    for (size_t head = 0; head < elements.size(); ++head)
        for (const auto& g : G4) {
            const Perm nxt = elements[head] * g;
            if (std::find(elements.begin(), elements.end(), nxt) == elements.end()) elements.push_back(nxt);
        }
    REQUIRE(elements.size() == 8);
    for (int trial = 0; trial < 100; ++trial) {
        const Perm f1 = elements[rng() % 8], f2 = elements[rng() % 8];
        const Perm g = wreath_compose({f1, f2}, 1, 2, 3);
        const auto sq = wreath_decompose(g * g, 2, 3);
        CHECK(sq.top_exp == 0);
        CHECK(sq.base[0] == f1 * f2);
        CHECK(sq.base[1] == f2 * f1);
    }
}

TEST_CASE("conjugation by sigma in wreath coordinates") {
    // (f, delta)^{sigma_k} = (f_{(1)tau}, ..., f_{(p)tau}; delta^{sigma_1^{(1)}})
    // (f, delta)^{sigma_j} = (f_1^{sigma_j^{(k-1)}}, ..., f_p^{sigma_j^{(k-1)}}; delta), j < k
    std::mt19937 rng(4242);
    for (int p : {3, 5}) {
        const int k = 2;
        const int a = smallest_primitive_root(p);
        const auto tau = tau_label_perm(p, a);
        const Perm sigma_11 = gen_sigma(p, 1, 1, a);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Perm> base;
            for (int i = 0; i < p; ++i) base.push_back(gen_g(p, 1, 1).pow(static_cast<long long>(rng() % p)));
            const int s = static_cast<int>(rng() % p);
            const Perm g = wreath_compose(base, s, p, k);

            // j = k case
            const auto wk = wreath_decompose(g.conjugate_by(gen_sigma(p, k, k, a)), p, k);
            const Perm delta = gen_g(p, 1, 1).pow(s);
            CHECK(gen_g(p, 1, 1).pow(wk.top_exp) == delta.conjugate_by(sigma_11));
            for (int i = 1; i <= p; ++i)
                CHECK(wk.base[static_cast<size_t>(i) - 1] == base[static_cast<size_t>(tau[static_cast<size_t>(i)]) - 1]);

            // j < k case
            const auto wj = wreath_decompose(g.conjugate_by(gen_sigma(p, k, 1, a)), p, k);
            CHECK(wj.top_exp == s);
            for (int i = 0; i < p; ++i)
                CHECK(wj.base[static_cast<size_t>(i)] ==
                      base[static_cast<size_t>(i)].conjugate_by(gen_sigma(p, 1, 1, a)));
        }
    }
}

TEST_CASE("proof items of the sigma proposition") {
    for (int p : {2, 3, 5}) {
        const int a = smallest_primitive_root(p);
        for (int k = 2; k <= 3; ++k) {
            // (i): conjugating g_t^{(k)} by g_k^{(k)} moves the base entry to slot 2
            for (int t = 1; t < k; ++t) {
                const auto w = wreath_decompose(gen_g(p, k, t).conjugate_by(gen_g(p, k, k)), p, k);
                CHECK(w.top_exp == 0);
                CHECK(w.base[0] == Perm::identity(static_cast<int>(ipow(p, k - 1))));
                CHECK(w.base[1] == gen_g(p, k - 1, t));
            }
            // (v): sigma_r^{(l)} centralizes g_t^{(l)} for r < t < l
            for (int t = 1; t < k; ++t)
                for (int r = 1; r < t; ++r)
                    CHECK(gen_g(p, k, t).conjugate_by(gen_sigma(p, k, r, a)) == gen_g(p, k, t));
        }
    }
}
