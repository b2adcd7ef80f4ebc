#include "sylow/oracle.hpp"

#include <deque>
#include <stdexcept>

namespace sylow {

EnumeratedGroup enumerate_group(const std::vector<Perm>& gens, std::size_t budget) {
    if (gens.empty()) throw std::invalid_argument("need at least one generator (possibly the identity)");
    const int n = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != n) throw std::invalid_argument("generator degrees differ");

    EnumeratedGroup G;
    const Perm id = Perm::identity(n);
    G.elements.push_back(id);
    G.index.emplace(id, 0);
    for (std::size_t head = 0; head < G.elements.size(); ++head) {
        const Perm cur = G.elements[head];  // copy: the vector may reallocate
        for (const auto& g : gens) {
            Perm nxt = cur * g;
            if (G.index.contains(nxt)) continue;
            if (G.elements.size() >= budget) throw std::length_error("group enumeration budget exceeded");
            G.index.emplace(nxt, static_cast<int>(G.elements.size()));
            G.elements.push_back(std::move(nxt));
        }
    }

    // conjugation-orbit closure seeded from the least unvisited BFS index
    std::vector<Perm> gen_invs;
    for (const auto& g : gens) gen_invs.push_back(g.inverse());
    G.class_of.assign(G.elements.size(), -1);
    for (std::size_t seed = 0; seed < G.elements.size(); ++seed) {
        if (G.class_of[seed] != -1) continue;
        const int cls = static_cast<int>(G.class_reps.size());
        G.class_reps.push_back(static_cast<int>(seed));
        G.class_sizes.push_back(0);
        std::deque<int> frontier{static_cast<int>(seed)};
        G.class_of[seed] = cls;
        while (!frontier.empty()) {
            const int cur = frontier.front();
            frontier.pop_front();
            ++G.class_sizes[static_cast<size_t>(cls)];
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                const Perm conj = gen_invs[gi] * G.elements[static_cast<size_t>(cur)] * gens[gi];
                const int idx = G.index.at(conj);
                if (G.class_of[static_cast<size_t>(idx)] == -1) {
                    G.class_of[static_cast<size_t>(idx)] = cls;
                    frontier.push_back(idx);
                }
            }
        }
    }
    return G;
}

ValueTable value_table(const CharFn& chi, const EnumeratedGroup& G) {
    ValueTable vt;
    vt.reserve(G.class_count());
    for (std::size_t c = 0; c < G.class_count(); ++c) vt.push_back(chi(G.rep(static_cast<int>(c))));
    return vt;
}

ValueTable value_table(const CharExpr& c, const EnumeratedGroup& G) {
    return value_table([&c](const Perm& g) { return evaluate(c, g); }, G);
}

ValueTable value_table(const NCharExpr& c, const EnumeratedGroup& G) {
    return value_table([&c](const Perm& g) { return evaluate(c, g); }, G);
}

namespace {

const CharExpr& deref(const CharPtr& c) { return *c; }
const NCharExpr& deref(const NCharExpr& c) { return c; }

template <typename CharT>
std::vector<ValueTable> fill_tables(const std::vector<CharT>& chars, const EnumeratedGroup& G, bool parallel) {
    std::vector<ValueTable> out(chars.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(chars.size()); ++i)
            out[static_cast<size_t>(i)] = value_table(deref(chars[static_cast<size_t>(i)]), G);
    } else {
        for (std::size_t i = 0; i < chars.size(); ++i) out[i] = value_table(deref(chars[i]), G);
    }
    return out;
}

}  // namespace

std::vector<ValueTable> value_tables_serial(const std::vector<CharPtr>& chars, const EnumeratedGroup& G) {
    return fill_tables(chars, G, false);
}

std::vector<ValueTable> value_tables(const std::vector<CharPtr>& chars, const EnumeratedGroup& G, bool parallel) {
    return fill_tables(chars, G, parallel);
}

std::vector<ValueTable> value_tables_serial(const std::vector<NCharExpr>& chars, const EnumeratedGroup& G) {
    return fill_tables(chars, G, false);
}

std::vector<ValueTable> value_tables(const std::vector<NCharExpr>& chars, const EnumeratedGroup& G,
                                     bool parallel) {
    return fill_tables(chars, G, parallel);
}

BigInt inner_product(const ValueTable& x, const ValueTable& y, const EnumeratedGroup& G) {
    if (x.size() != G.class_count() || y.size() != G.class_count())
        throw std::invalid_argument("table size does not match the class count");
    const int p = x.front().p();
    Cyclotomic total(p);
    for (std::size_t c = 0; c < x.size(); ++c) {
        Cyclotomic term = x[c] * y[c].conj();
        term *= Cyclotomic::integer(p, G.class_sizes[c]);
        total += term;
    }
    const auto as_int = total.as_integer();
    if (!as_int) throw std::runtime_error("inner product sum is not rational: evaluation defect");
    const BigInt order = static_cast<long long>(G.order());
    if (*as_int % order != 0) throw std::runtime_error("inner product sum is not divisible by |G|: evaluation defect");
    return *as_int / order;
}

namespace {

std::vector<std::vector<BigInt>> fill_gram(const std::vector<ValueTable>& tables, const EnumeratedGroup& G,
                                           bool parallel) {
    const std::size_t m = tables.size();
    std::vector<std::vector<BigInt>> out(m, std::vector<BigInt>(m));
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(m); ++i)
            for (std::size_t j = 0; j < m; ++j)
                out[static_cast<size_t>(i)][j] = inner_product(tables[static_cast<size_t>(i)], tables[j], G);
    } else {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) out[i][j] = inner_product(tables[i], tables[j], G);
    }
    return out;
}

}  // namespace

std::vector<std::vector<BigInt>> gram_matrix_serial(const std::vector<ValueTable>& tables,
                                                    const EnumeratedGroup& G) {
    return fill_gram(tables, G, false);
}

std::vector<std::vector<BigInt>> gram_matrix(const std::vector<ValueTable>& tables, const EnumeratedGroup& G,
                                             bool parallel) {
    return fill_gram(tables, G, parallel);
}

ValueTable direct_conjugate(const CharFn& chi, const Perm& h, const EnumeratedGroup& G) {
    const Perm hinv = h.inverse();
    ValueTable vt;
    vt.reserve(G.class_count());
    for (std::size_t c = 0; c < G.class_count(); ++c) {
        // chi^h(g) = chi(h g h^{-1}) = chi(g^{h^{-1}})
        const Perm moved = G.rep(static_cast<int>(c)).conjugate_by(hinv);
        if (!G.index.contains(moved)) throw std::invalid_argument("conjugator does not normalize the group");
        vt.push_back(chi(moved));
    }
    return vt;
}

ValueTable direct_conjugate(const CharExpr& c, const Perm& h, const EnumeratedGroup& G) {
    return direct_conjugate([&c](const Perm& g) { return evaluate(c, g); }, h, G);
}

ValueTable direct_conjugate(const NCharExpr& c, const Perm& h, const EnumeratedGroup& G) {
    return direct_conjugate([&c](const Perm& g) { return evaluate(c, g); }, h, G);
}

ValueTable direct_galois(const ValueTable& vt, int b) {
    ValueTable out;
    out.reserve(vt.size());
    for (const auto& v : vt) out.push_back(v.galois(b));
    return out;
}

std::size_t match_character(const ValueTable& vt, const std::vector<ValueTable>& candidates) {
    std::size_t found = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i] == vt) {
            if (found != candidates.size()) throw std::runtime_error("value table matches more than one character");
            found = i;
        }
    }
    if (found == candidates.size()) throw std::runtime_error("value table matches no character");
    return found;
}

}  // namespace sylow
