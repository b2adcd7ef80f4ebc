#include "sylow/actions.hpp"

#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace sylow {

namespace {

TreeFn act_sigma_rec(const TreeFn& t, int j, const std::vector<int>& tau) {
    if (j == t.k) {
        TreeFn out = transport_children(t, tau);
        out.label = tau[static_cast<size_t>(t.label)];
        return out;
    }
    TreeFn out = t;
    for (auto& c : out.children) c = act_sigma_rec(c, j, tau);
    return out;
}

}  // namespace

TreeFn act_sigma(const TreeFn& t, int j, int a) {
    if (t.k < 1 || j < 1 || j > t.k) throw std::invalid_argument("require 1 <= j <= k");
    const TreeFn c = canonicalize(t);
    if (!is_admissible(c)) throw std::invalid_argument("act_sigma needs an admissible tree function");
    return canonicalize(act_sigma_rec(c, j, tau_label_perm(t.p, a)));
}

int act_sigma_label_at(const TreeFn& t, int j, int a, const Address& s) {
    if (t.k < 1 || j < 1 || j > t.k) throw std::invalid_argument("require 1 <= j <= k");
    const auto tau = tau_label_perm(t.p, a);
    const int pos = t.k - j;  // depth at which the top case of the recursion fires
    const int len = static_cast<int>(s.size());
    if (len < pos) return label_at(t, s);
    if (len == pos) return tau[static_cast<size_t>(label_at(t, s))];
    Address mapped = s;
    mapped[static_cast<size_t>(pos)] = tau[static_cast<size_t>(s[static_cast<size_t>(pos)])];
    return label_at(t, mapped);
}

TreeFn act_sigma_addresswise(const TreeFn& t, int j, int a) {
    std::map<Address, int> labels;
    for (const auto& s : skeleton_addresses(t.p, t.k)) labels[s] = act_sigma_label_at(t, j, a, s);
    std::function<TreeFn(Address&, int)> build = [&](Address& at, int height) -> TreeFn {
        if (height == 1) return make_leaf(t.p, labels.at(at));
        std::vector<TreeFn> ch;
        ch.reserve(static_cast<size_t>(t.p));
        for (int sym = 1; sym <= t.p; ++sym) {
            at.push_back(sym);
            ch.push_back(build(at, height - 1));
            at.pop_back();
        }
        return assemble(std::move(ch), labels.at(at));
    };
    Address root;
    return build(root, t.k);
}

TreeFn act_galois(const TreeFn& t, int a) {
    if (t.k == 0) return t;
    if (!is_admissible(t)) throw std::invalid_argument("act_galois needs an admissible tree function");
    const auto tau = tau_label_perm(t.p, a);
    std::function<TreeFn(const TreeFn&)> relabel = [&](const TreeFn& node) -> TreeFn {
        TreeFn out = node;
        out.label = tau[static_cast<size_t>(node.label)];
        for (auto& c : out.children) c = relabel(c);
        return out;
    };
    return canonicalize(relabel(canonicalize(t)));
}

ActionGen sigma_gen(int i, int j, int ell) {
    ActionGen g;
    g.kind = ActionGen::Kind::Sigma;
    g.i = i;
    g.j = j;
    g.ell = ell;
    return g;
}

ActionGen rho_gen(int y, std::vector<ActionGen::RhoLetter> word) {
    ActionGen g;
    g.kind = ActionGen::Kind::Rho;
    g.y = y;
    g.word = std::move(word);
    return g;
}

ActionGen galois_gen(int m) {
    ActionGen g;
    g.kind = ActionGen::Kind::Galois;
    g.m = m;
    return g;
}

std::vector<ActionGen> all_sigma_gens(const PAdicShape& shape) {
    std::vector<ActionGen> out;
    for (int i = 1; i <= shape.term_count(); ++i)
        for (int j = 1; j <= shape.terms[static_cast<size_t>(i) - 1].a; ++j)
            for (int ell = 1; ell <= shape.terms[static_cast<size_t>(i) - 1].k; ++ell)
                out.push_back(sigma_gen(i, j, ell));
    return out;
}

std::vector<ActionGen> all_rho_gens(const PAdicShape& shape) {
    std::vector<ActionGen> out;
    for (int y = 1; y <= shape.term_count(); ++y) {
        if (shape.terms[static_cast<size_t>(y) - 1].a < 2) continue;
        out.push_back(rho_gen(y, {ActionGen::RhoLetter::Xi}));
        out.push_back(rho_gen(y, {ActionGen::RhoLetter::Zeta}));
    }
    return out;
}

std::vector<int> rho_word_permutation(const PAdicShape& shape, int y,
                                      const std::vector<ActionGen::RhoLetter>& word) {
    if (y < 1 || y > shape.term_count()) throw std::invalid_argument("rho term index out of range");
    const int ay = shape.terms[static_cast<size_t>(y) - 1].a;
    std::vector<int> rho(static_cast<size_t>(ay + 1));
    for (int x = 0; x <= ay; ++x) rho[static_cast<size_t>(x)] = x;
    for (const auto letter : word) {
        std::vector<int> step(static_cast<size_t>(ay + 1));
        for (int x = 0; x <= ay; ++x) step[static_cast<size_t>(x)] = x;
        if (letter == ActionGen::RhoLetter::Xi) {
            if (ay >= 2) {
                step[1] = 2;
                step[2] = 1;
            }
        } else {
            for (int x = 1; x <= ay; ++x) step[static_cast<size_t>(x)] = x % ay + 1;
        }
        for (int x = 1; x <= ay; ++x)
            rho[static_cast<size_t>(x)] = step[static_cast<size_t>(rho[static_cast<size_t>(x)])];
    }
    return rho;
}

NTreeFn act_n(const NTreeFn& t, const ActionGen& gen, int a) {
    NTreeFn out = t;
    const PAdicShape& shape = t.shape;
    switch (gen.kind) {
        case ActionGen::Kind::Sigma: {
            if (gen.i < 1 || gen.i > shape.term_count()) throw std::invalid_argument("sigma term out of range");
            const auto& term = shape.terms[static_cast<size_t>(gen.i) - 1];
            if (gen.j < 1 || gen.j > term.a) throw std::invalid_argument("sigma copy out of range");
            if (gen.ell < 1 || gen.ell > term.k) throw std::invalid_argument("sigma level out of range");
            const int comp = shape.q[static_cast<size_t>(gen.i) - 1] + gen.j;
            out.comps[static_cast<size_t>(comp) - 1] =
                act_sigma(t.comps[static_cast<size_t>(comp) - 1], gen.ell, a);
            return out;
        }
        case ActionGen::Kind::Rho: {
            const auto rho = rho_word_permutation(shape, gen.y, gen.word);
            const int ay = shape.terms[static_cast<size_t>(gen.y) - 1].a;
            std::vector<int> rho_inv(static_cast<size_t>(ay + 1));
            for (int x = 1; x <= ay; ++x) rho_inv[static_cast<size_t>(rho[static_cast<size_t>(x)])] = x;
            const int base = shape.q[static_cast<size_t>(gen.y) - 1];
            for (int m = 1; m <= ay; ++m)
                out.comps[static_cast<size_t>(base + m) - 1] =
                    t.comps[static_cast<size_t>(base + rho_inv[static_cast<size_t>(m)]) - 1];
            return out;
        }
        case ActionGen::Kind::Galois:
            return act_galois_n(t, a, gen.m);
    }
    throw std::logic_error("unreachable");
}

NTreeFn act_galois_n(const NTreeFn& t, int a, int times) {
    NTreeFn out = t;
    for (int r = 0; r < times; ++r)
        for (auto& c : out.comps) c = act_galois(c, a);
    return out;
}

std::vector<NTreeFn> orbit(const NTreeFn& t, const std::vector<ActionGen>& gens, int a, std::size_t cap) {
    if (!n_is_admissible(t)) throw std::invalid_argument("orbit needs an admissible tuple");
    std::vector<NTreeFn> out;
    std::map<std::vector<int>, std::size_t> seen;
    std::deque<std::size_t> frontier;
    const NTreeFn start = n_canonicalize(t);
    seen.emplace(n_serialize(start), 0);
    out.push_back(start);
    frontier.push_back(0);
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        for (const auto& gen : gens) {
            NTreeFn next = act_n(out[cur], gen, a);
            auto key = n_serialize(next);
            if (seen.contains(key)) continue;
            if (out.size() >= cap) throw std::length_error("orbit cap exceeded");
            seen.emplace(std::move(key), out.size());
            frontier.push_back(out.size());
            out.push_back(std::move(next));
        }
    }
    return out;
}

namespace {

TreeFn uniform_height2(int p, int root, int leaf) {
    return assemble(std::vector<TreeFn>(static_cast<size_t>(p), make_leaf(p, leaf)), root);
}

TreeFn counterexample_component(int second_level_leaf, const std::vector<int>& sibling_roots) {
    // root 5; first child has root 5 with leaves (0, 0, x, x, x); the other
    // four children are uniform all-zero trees with the given root labels
    std::vector<TreeFn> leaves;
    leaves.push_back(make_leaf(5, 0));
    leaves.push_back(make_leaf(5, 0));
    for (int i = 0; i < 3; ++i) leaves.push_back(make_leaf(5, second_level_leaf));
    std::vector<TreeFn> children;
    children.push_back(assemble(std::move(leaves), 5));
    for (int root : sibling_roots) children.push_back(uniform_height2(5, root, 0));
    return assemble(std::move(children), 5);
}

}  // namespace

NTreeFn counterexample_t1() {
    return make_ntree(p_adic_shape(125, 5), {canonicalize(counterexample_component(1, {0, 1, 2, 3}))});
}

NTreeFn counterexample_t2() {
    return make_ntree(p_adic_shape(125, 5), {canonicalize(counterexample_component(3, {0, 3, 1, 4}))});
}

CounterexampleReport verify_counterexample() {
    const int a = 2;
    const NTreeFn t1 = counterexample_t1();
    const NTreeFn t2 = counterexample_t2();
    CounterexampleReport rep;
    rep.t1_admissible = n_is_admissible(t1);
    rep.t2_admissible = n_is_admissible(t2);
    rep.degree1 = n_degree(t1);
    rep.degree2 = n_degree(t2);
    rep.galois_sends_t1_to_t2 = act_galois_n(t1, a) == t2;
    const auto orb = orbit(t1, all_sigma_gens(t1.shape), a);
    rep.sigma_orbit_size = orb.size();
    rep.t2_in_sigma_orbit = false;
    for (const auto& x : orb)
        if (x == t2) rep.t2_in_sigma_orbit = true;
    return rep;
}

bool linear_identity_check(long long n, int p, int a) {
    const auto shape = p_adic_shape(n, p);
    const auto sigmas = all_sigma_gens(shape);
    // componentwise product of the per-component linear trees
    std::vector<std::vector<TreeFn>> per_comp;
    unsigned long long total = 1;
    for (int j = 1; j <= shape.components(); ++j) {
        per_comp.push_back(all_linear_trees(p, shape.comp_exponent(j)));
        total *= per_comp.back().size();
        if (total > 1'000'000ull) throw std::length_error("too many linear tuples");
    }
    std::vector<size_t> idx(per_comp.size(), 0);
    while (true) {
        std::vector<TreeFn> comps;
        comps.reserve(per_comp.size());
        for (size_t j = 0; j < per_comp.size(); ++j) comps.push_back(per_comp[j][idx[j]]);
        const NTreeFn lambda = make_ntree(shape, std::move(comps));
        NTreeFn rhs = lambda;
        for (const auto& gen : sigmas) rhs = act_n(rhs, gen, a);
        if (!(act_galois_n(lambda, a) == rhs)) return false;
        size_t pos = per_comp.size();
        while (pos > 0 && idx[pos - 1] + 1 == per_comp[pos - 1].size()) {
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
        ++idx[pos - 1];
    }
    return true;
}

}  // namespace sylow
