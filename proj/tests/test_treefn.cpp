#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "sylow/generators.hpp"
#include "sylow/treefn.hpp"

using namespace sylow;

namespace {

TreeFn height2(int p, int root, std::vector<int> leaves) {
    std::vector<TreeFn> ch;
    for (int v : leaves) ch.push_back(make_leaf(p, v));
    return assemble(std::move(ch), root);
}

// The four labeled trees of height 2 over p = 3 used as fixtures.
TreeFn tree_A() {
    return assemble({height2(3, 3, {3, 1, 2}), height2(3, 3, {2, 1, 2}), height2(3, 3, {1, 2, 1})}, 3);
}
TreeFn tree_B() {
    return assemble({height2(3, 0, {1, 1, 1}), height2(3, 0, {1, 1, 1}), height2(3, 0, {1, 1, 1})}, 2);
}
TreeFn tree_C() {
    return assemble({height2(3, 3, {0, 1, 1}), height2(3, 0, {2, 2, 2}), height2(3, 0, {1, 1, 1})}, 3);
}
TreeFn tree_D() {
    return assemble({height2(3, 0, {1, 1, 1}), height2(3, 3, {1, 0, 1}), height2(3, 0, {2, 2, 2})}, 3);
}

// Independent equivalence oracle: try every assignment of a cyclic rotation
// to every internal address and compare the transported labels directly.
bool brute_force_equivalent(const TreeFn& t1, const TreeFn& t2) {
    REQUIRE(t1.p == t2.p);
    REQUIRE(t1.k == t2.k);
    const int p = t1.p, k = t1.k;
    if (k <= 1) return t1 == t2;
    if (label_at(t1, {}) != label_at(t2, {})) return false;
    std::vector<Address> internal;
    for (const auto& a : skeleton_addresses(p, k))
        if (static_cast<int>(a.size()) <= k - 2) internal.push_back(a);
    const auto all = skeleton_addresses(p, k);
    std::map<Address, int> rot;
    unsigned long long combos = 1;
    for (size_t i = 0; i < internal.size(); ++i) combos *= static_cast<unsigned long long>(p);
    for (unsigned long long c = 0; c < combos; ++c) {
        unsigned long long rem = c;
        for (const auto& q : internal) {
            rot[q] = static_cast<int>(rem % p);
            rem /= p;
        }
        bool ok = true;
        for (const auto& s : all) {
            Address mapped;
            Address prefix;
            for (int sym : s) {
                const int r = rot.at(prefix);
                mapped.push_back((sym - 1 + r) % p + 1);
                prefix.push_back(sym);
            }
            if (label_at(t1, s) != label_at(t2, mapped)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<TreeFn> all_labelings(int p, int k) {
    const auto addrs = skeleton_addresses(p, k);
    std::vector<TreeFn> out;
    std::vector<int> labels(addrs.size(), 0);
    auto build = [&]() {
        // rebuild a tree from the flat address->label map
        std::map<Address, int> m;
        for (size_t i = 0; i < addrs.size(); ++i) m[addrs[i]] = labels[i];
        std::function<TreeFn(const Address&, int)> rec = [&](const Address& at, int height) -> TreeFn {
            if (height == 1) return make_leaf(p, m.at(at));
            std::vector<TreeFn> ch;
            for (int sym = 1; sym <= p; ++sym) {
                Address child = at;
                child.push_back(sym);
                ch.push_back(rec(child, height - 1));
            }
            return assemble(std::move(ch), m.at(at));
        };
        return rec({}, k);
    };
    while (true) {
        out.push_back(build());
        size_t pos = labels.size();
        while (pos > 0 && labels[pos - 1] == p) {
            labels[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
        ++labels[pos - 1];
    }
    return out;
}

}  // namespace

TEST_CASE("label access on the fixture trees") {
    CHECK(label_at(tree_B(), {}) == 2);
    CHECK(label_at(tree_C(), {2, 2}) == 2);
    CHECK(label_at(tree_C(), {1}) == 3);
    const TreeFn zero = make_uniform(3, 3, {0, 0, 0});
    for (const auto& s : skeleton_addresses(3, 3)) CHECK(label_at(zero, s) == 0);
    CHECK_THROWS(label_at(tree_B(), {1, 1, 1}));
    CHECK_THROWS(label_at(tree_B(), {4}));
}

TEST_CASE("subfunctions") {
    const TreeFn c = tree_C();
    CHECK(subfunction(c, {}) == c);
    CHECK(subfunction(c, {1}) == height2(3, 3, {0, 1, 1}));
    CHECK(subfunction(c, {1, 2}) == make_leaf(3, 1));
    CHECK_THROWS(subfunction(c, {1, 2, 3}));
}

TEST_CASE("assemble round trips") {
    const TreeFn sub = height2(3, 1, {0, 2, 1});
    const TreeFn t = assemble({sub, sub, sub}, 2);
    for (int i = 1; i <= 3; ++i) CHECK(subfunction(t, {i}) == sub);
    CHECK(assemble({tree_C().children[0], tree_C().children[1], tree_C().children[2]}, 3) == tree_C());
    CHECK_THROWS(assemble({make_leaf(3, 0), make_leaf(3, 1)}, 0));          // wrong arity
    CHECK_THROWS(assemble({make_leaf(3, 0), make_leaf(3, 1), make_leaf(5, 1)}, 0));
}

TEST_CASE("equivalence on the fixture trees") {
    CHECK(equivalent(tree_C(), tree_D()));
    CHECK(equivalent(tree_C(), tree_C()));
    CHECK(!equivalent(tree_B(), tree_C()));
    CHECK(canonicalize(tree_C()) == canonicalize(tree_D()));
    CHECK(canonicalize(tree_B()) == tree_B());
    CHECK_THROWS(equivalent(make_leaf(3, 0), make_leaf(5, 0)));
}

TEST_CASE("canonicalize is idempotent and classes match the brute-force oracle") {
    // exhaustive over all labelings at (2,2) and (3,2)
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        const auto all = all_labelings(p, k);
        for (const auto& t : all) {
            const TreeFn c = canonicalize(t);
            CHECK(canonicalize(c) == c);
            CHECK(brute_force_equivalent(t, c));
        }
        for (const auto& t1 : all)
            for (const auto& t2 : all)
                CHECK(equivalent(t1, t2) == brute_force_equivalent(t1, t2));
    }
    // (2,3): group by canonical form, check within groups exhaustively and
    // across groups on a random sample
    const auto all = all_labelings(2, 3);
    std::map<std::vector<int>, std::vector<size_t>> groups;
    for (size_t i = 0; i < all.size(); ++i) groups[serialize(canonicalize(all[i]))].push_back(i);
    for (const auto& [key, members] : groups)
        for (size_t a : members)
            for (size_t b : members) CHECK(brute_force_equivalent(all[a], all[b]));
    std::mt19937 rng(777);
    for (int trial = 0; trial < 3000; ++trial) {
        const size_t a = rng() % all.size(), b = rng() % all.size();
        CHECK(equivalent(all[a], all[b]) == brute_force_equivalent(all[a], all[b]));
    }
}

TEST_CASE("canonical classes at (5,2) agree with the brute-force oracle") {
    const auto all = all_labelings(5, 2);
    REQUIRE(all.size() == 46656);
    std::map<std::vector<int>, std::vector<size_t>> groups;
    for (size_t i = 0; i < all.size(); ++i) groups[serialize(canonicalize(all[i]))].push_back(i);
    for (const auto& [key, members] : groups)
        for (size_t m : members) CHECK(brute_force_equivalent(all[members.front()], all[m]));
    std::mt19937 rng(555);
    for (int trial = 0; trial < 2000; ++trial) {
        const size_t a = rng() % all.size(), b = rng() % all.size();
        CHECK(equivalent(all[a], all[b]) == brute_force_equivalent(all[a], all[b]));
    }
}

TEST_CASE("admissibility") {
    CHECK(!is_admissible(tree_A()));
    CHECK(is_admissible(tree_B()));
    CHECK(is_admissible(tree_C()));
    CHECK(is_admissible(tree_D()));
    CHECK(!is_admissible(make_leaf(3, 3)));  // single node labeled p
    CHECK(is_admissible(make_leaf(3, 2)));
    CHECK(is_admissible(make_trivial(5)));

    // admissibility is a class property
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        for (const auto& t : all_labelings(p, k))
            CHECK(is_admissible(t) == is_admissible(canonicalize(t)));
    }
}

TEST_CASE("label counts and degrees") {
    const auto counts_c = label_counts(tree_C());
    CHECK(counts_c == std::vector<long long>{3, 5, 3, 2});
    CHECK(degree_of(tree_C()) == 9);
    CHECK(degree_of(make_uniform(3, 3, {0, 0, 0})) == 1);
    CHECK(degree_of(make_trivial(5)) == 1);
    // skeleton size check: counts sum to (p^k - 1)/(p - 1)
    long long total = 0;
    for (long long c : counts_c) total += c;
    CHECK(total == 13);
}

TEST_CASE("enumeration counts match the recurrence and the class model") {
    CHECK(enumerate_admissible(2, 2).size() == 5);
    CHECK(enumerate_admissible(3, 2).size() == 17);
    CHECK(enumerate_admissible(2, 3).size() == 20);
    CHECK(enumerate_admissible(5, 2).size() == 649);
    CHECK(count_admissible(2, 2) == 5);
    CHECK(count_admissible(3, 2) == 17);
    CHECK(count_admissible(2, 3) == 20);
    CHECK(count_admissible(5, 2) == 649);
    CHECK(count_admissible(3, 3) == 1683);
    CHECK(enumerate_admissible(3, 3).size() == 1683);

    // (p,1): the p single-node trees labeled 0..p-1
    const auto lvl1 = enumerate_admissible(7, 1);
    REQUIRE(lvl1.size() == 7);
    for (int eps = 0; eps < 7; ++eps) CHECK(lvl1[static_cast<size_t>(eps)] == make_leaf(7, eps));

    // every admissible class appears exactly once, as its canonical form
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        std::set<std::vector<int>> expected;
        for (const auto& t : all_labelings(p, k))
            if (is_admissible(t)) expected.insert(serialize(canonicalize(t)));
        std::set<std::vector<int>> got;
        for (const auto& t : enumerate_admissible(p, k)) {
            CHECK(canonicalize(t) == t);
            CHECK(is_admissible(t));
            got.insert(serialize(t));
        }
        CHECK(got == expected);
        CHECK(got.size() == enumerate_admissible(p, k).size());
    }

    // deterministic lexicographic order
    const auto lst = enumerate_admissible(3, 2);
    for (size_t i = 1; i < lst.size(); ++i) CHECK(serialize(lst[i - 1]) < serialize(lst[i]));

    CHECK_THROWS(enumerate_admissible(5, 4));  // budget
}

TEST_CASE("sum of squared degrees equals the group order") {
    const std::map<std::pair<int, int>, long long> orders{
        {{2, 2}, 8}, {{2, 3}, 128}, {{3, 2}, 81}, {{5, 2}, 15625}};
    for (const auto& [pk, order] : orders) {
        BigInt total = 0;
        for (const auto& t : enumerate_admissible(pk.first, pk.second)) {
            const BigInt d = degree_of(t);
            total += d * d;
        }
        CHECK(total == order);
    }
}

TEST_CASE("linear trees") {
    const auto lin = all_linear_trees(3, 3);
    CHECK(lin.size() == 27);
    for (const auto& t : lin) {
        CHECK(is_admissible(t));
        CHECK(canonicalize(t) == t);
        CHECK(degree_of(t) == 1);
    }
    CHECK(all_linear_trees(5, 0).size() == 1);
}

TEST_CASE("n-level tuples") {
    const auto shape = p_adic_shape(19, 5);
    const auto tuples = n_enumerate(shape);
    CHECK(tuples.size() == 125);
    for (const auto& t : tuples) {
        CHECK(n_is_admissible(t));
        CHECK(n_canonicalize(t) == t);
    }
    // the all-zero tuple has degree 1
    std::vector<TreeFn> comps;
    for (int j = 1; j <= shape.components(); ++j)
        comps.push_back(shape.comp_exponent(j) == 0 ? make_trivial(5) : make_leaf(5, 0));
    const NTreeFn zero = make_ntree(shape, comps);
    CHECK(n_degree(zero) == 1);
    CHECK(n_is_admissible(zero));
    CHECK(n_equivalent(zero, zero));

    // mismatched component heights are rejected
    comps[0] = make_trivial(5);
    CHECK_THROWS(make_ntree(shape, comps));

    // 25 = 1 * 5^2: one component of height parameter 2
    const auto shape25 = p_adic_shape(25, 5);
    CHECK(n_enumerate(shape25).size() == 649);
}
