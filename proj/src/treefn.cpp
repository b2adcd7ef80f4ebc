#include "sylow/treefn.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace sylow {

namespace {

void check_label(int p, int label) {
    if (label < 0 || label > p) throw std::invalid_argument("label out of [0, p]");
}

void check_address_symbols(int p, const Address& s) {
    for (int sym : s)
        if (sym < 1 || sym > p) throw std::invalid_argument("address symbol out of [1, p]");
}

}  // namespace

TreeFn make_trivial(int p) {
    TreeFn t;
    t.p = p;
    t.k = 0;
    return t;
}

TreeFn make_leaf(int p, int label) {
    check_label(p, label);
    TreeFn t;
    t.p = p;
    t.k = 1;
    t.label = label;
    return t;
}

TreeFn assemble(std::vector<TreeFn> children, int eps) {
    if (children.empty()) throw std::invalid_argument("assemble needs p children");
    const int p = children.front().p;
    const int kc = children.front().k;
    if (kc < 1) throw std::invalid_argument("cannot assemble trivial components");
    if (static_cast<int>(children.size()) != p) throw std::invalid_argument("assemble needs exactly p children");
    for (const auto& c : children)
        if (c.p != p || c.k != kc) throw std::invalid_argument("mismatched children in assemble");
    check_label(p, eps);
    TreeFn t;
    t.p = p;
    t.k = kc + 1;
    t.label = eps;
    t.children = std::move(children);
    return t;
}

TreeFn make_uniform(int p, int k, const std::vector<int>& level_labels) {
    if (k == 0) return make_trivial(p);
    if (static_cast<int>(level_labels.size()) != k) throw std::invalid_argument("need one label per level");
    TreeFn t = make_leaf(p, level_labels.back());
    for (int d = k - 2; d >= 0; --d)
        t = assemble(std::vector<TreeFn>(static_cast<size_t>(p), t), level_labels[static_cast<size_t>(d)]);
    return t;
}

int label_at(const TreeFn& t, const Address& s) {
    check_address_symbols(t.p, s);
    const TreeFn* node = &t;
    for (int sym : s) {
        if (node->k <= 1) throw std::invalid_argument("address too long");
        node = &node->children[static_cast<size_t>(sym) - 1];
    }
    if (node->k == 0) throw std::invalid_argument("trivial component has no labels");
    return node->label;
}

TreeFn subfunction(const TreeFn& t, const Address& s) {
    check_address_symbols(t.p, s);
    const TreeFn* node = &t;
    for (int sym : s) {
        if (node->k <= 1) throw std::invalid_argument("address too long");
        node = &node->children[static_cast<size_t>(sym) - 1];
    }
    return *node;
}

std::vector<Address> skeleton_addresses(int p, int k) {
    std::vector<Address> out;
    std::vector<Address> level{Address{}};
    for (int len = 0; len < k; ++len) {
        for (const auto& a : level) out.push_back(a);
        if (len + 1 >= k) break;
        std::vector<Address> next;
        for (const auto& a : level)
            for (int sym = 1; sym <= p; ++sym) {
                Address b = a;
                b.push_back(sym);
                next.push_back(std::move(b));
            }
        level = std::move(next);
    }
    return out;
}

namespace {

void serialize_into(const TreeFn& t, std::vector<int>& out) {
    if (t.k == 0) return;
    out.push_back(t.label);
    for (const auto& c : t.children) serialize_into(c, out);
}

}  // namespace

std::vector<int> serialize(const TreeFn& t) {
    std::vector<int> out;
    serialize_into(t, out);
    return out;
}

TreeFn transport_children(const TreeFn& t, const std::vector<int>& pi) {
    if (t.k < 2) return t;
    TreeFn out = t;
    for (int i = 1; i <= t.p; ++i)
        out.children[static_cast<size_t>(i) - 1] = t.children[static_cast<size_t>(pi[static_cast<size_t>(i)]) - 1];
    return out;
}

TreeFn canonicalize(const TreeFn& t) {
    if (t.k < 2) return t;
    TreeFn out = t;
    for (auto& c : out.children) c = canonicalize(c);
    const int p = t.p;
    std::vector<std::vector<int>> ser;
    ser.reserve(static_cast<size_t>(p));
    for (const auto& c : out.children) ser.push_back(serialize(c));
    // rotation by r sends new child slot i to old child (i + r) mod p
    int best = 0;
    for (int r = 1; r < p; ++r) {
        for (int i = 0; i < p; ++i) {
            const auto& a = ser[static_cast<size_t>((i + r) % p)];
            const auto& b = ser[static_cast<size_t>((i + best) % p)];
            if (a == b) continue;
            if (a < b) best = r;
            break;
        }
    }
    if (best != 0) {
        std::vector<TreeFn> rotated;
        rotated.reserve(static_cast<size_t>(p));
        for (int i = 0; i < p; ++i) rotated.push_back(std::move(out.children[static_cast<size_t>((i + best) % p)]));
        out.children = std::move(rotated);
    }
    return out;
}

bool equivalent(const TreeFn& t1, const TreeFn& t2) {
    if (t1.p != t2.p || t1.k != t2.k) throw std::invalid_argument("shape mismatch");
    return canonicalize(t1) == canonicalize(t2);
}

namespace {

// assumes every node below t is already canonical
bool admissible_canonical(const TreeFn& t) {
    if (t.k == 0) return true;
    if (t.k == 1) return t.label != t.p;
    bool all_equal = true;
    for (const auto& c : t.children) {
        if (!admissible_canonical(c)) return false;
        if (!(c == t.children.front())) all_equal = false;
    }
    return t.label == t.p ? !all_equal : all_equal;
}

}  // namespace

bool is_admissible(const TreeFn& t) { return admissible_canonical(canonicalize(t)); }

std::vector<long long> label_counts(const TreeFn& t) {
    std::vector<long long> counts(static_cast<size_t>(t.p + 1), 0);
    if (t.k == 0) return counts;
    for (int v : serialize(t)) ++counts[static_cast<size_t>(v)];
    return counts;
}

BigInt degree_of(const TreeFn& t) {
    const long long a = t.k == 0 ? 0 : label_counts(t)[static_cast<size_t>(t.p)];
    BigInt d = 1;
    for (long long i = 0; i < a; ++i) d *= t.p;
    return d;
}

BigInt count_admissible(int p, int k) {
    if (k == 0) return 1;
    BigInt n = p;
    for (int i = 2; i <= k; ++i) {
        BigInt pw = 1;
        for (int e = 0; e < p; ++e) pw *= n;
        n = p * n + (pw - n) / p;
    }
    return n;
}

namespace {

std::mutex g_enum_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const std::vector<TreeFn>>> g_enum_cache;

std::shared_ptr<const std::vector<TreeFn>> enumerate_shared(int p, int k, const EnumBudget& budget) {
    {
        std::lock_guard<std::mutex> lock(g_enum_mutex);
        auto it = g_enum_cache.find({p, k});
        if (it != g_enum_cache.end()) return it->second;
    }
    std::vector<TreeFn> out;
    if (k == 0) {
        out.push_back(make_trivial(p));
    } else if (k == 1) {
        for (int eps = 0; eps < p; ++eps) out.push_back(make_leaf(p, eps));
    } else {
        const auto prev = enumerate_shared(p, k - 1, budget);
        const size_t n_prev = prev->size();
        unsigned long long scan = 1;
        for (int i = 0; i < p; ++i) {
            if (scan > budget.max_tuple_scan / n_prev + 1) throw std::length_error("enumeration budget exceeded");
            scan *= n_prev;
        }
        if (scan > budget.max_tuple_scan) throw std::length_error("enumeration budget exceeded");
        // extensions: root label in [0, p-1] over p equal subtrees
        for (const auto& sub : *prev)
            for (int eps = 0; eps < p; ++eps)
                out.push_back(assemble(std::vector<TreeFn>(static_cast<size_t>(p), sub), eps));
        // induced: root label p over a non-constant necklace of subtrees
        std::vector<size_t> idx(static_cast<size_t>(p), 0);
        while (true) {
            bool constant = true, minimal = true;
            for (int i = 1; i < p && constant; ++i)
                if (idx[static_cast<size_t>(i)] != idx[0]) constant = false;
            if (!constant) {
                for (int r = 1; r < p && minimal; ++r) {
                    for (int i = 0; i < p; ++i) {
                        const size_t a = idx[static_cast<size_t>((i + r) % p)];
                        const size_t b = idx[static_cast<size_t>(i)];
                        if (a == b) continue;
                        if (a < b) minimal = false;
                        break;
                    }
                }
                if (minimal) {
                    std::vector<TreeFn> children;
                    children.reserve(static_cast<size_t>(p));
                    for (int i = 0; i < p; ++i) children.push_back((*prev)[idx[static_cast<size_t>(i)]]);
                    out.push_back(assemble(std::move(children), p));
                }
            }
            int pos = p - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] + 1 == n_prev) {
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TreeFn& a, const TreeFn& b) { return serialize(a) < serialize(b); });
    auto shared = std::make_shared<const std::vector<TreeFn>>(std::move(out));
    std::lock_guard<std::mutex> lock(g_enum_mutex);
    return g_enum_cache.try_emplace({p, k}, shared).first->second;
}

}  // namespace

std::vector<TreeFn> enumerate_admissible(int p, int k, const EnumBudget& budget) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    return *enumerate_shared(p, k, budget);
}

std::vector<TreeFn> all_linear_trees(int p, int k) {
    std::vector<TreeFn> out;
    if (k == 0) {
        out.push_back(make_trivial(p));
        return out;
    }
    std::vector<int> levels(static_cast<size_t>(k), 0);
    while (true) {
        out.push_back(make_uniform(p, k, levels));
        int pos = k - 1;
        while (pos >= 0 && levels[static_cast<size_t>(pos)] + 1 == p) {
            levels[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++levels[static_cast<size_t>(pos)];
    }
    return out;
}

NTreeFn make_ntree(const PAdicShape& shape, std::vector<TreeFn> comps) {
    if (static_cast<int>(comps.size()) != shape.components())
        throw std::invalid_argument("component count does not match shape");
    for (int j = 1; j <= shape.components(); ++j) {
        const auto& c = comps[static_cast<size_t>(j) - 1];
        if (c.p != shape.p || c.k != shape.comp_exponent(j))
            throw std::invalid_argument("component height does not match shape");
    }
    return NTreeFn{shape, std::move(comps)};
}

NTreeFn n_canonicalize(const NTreeFn& t) {
    NTreeFn out = t;
    for (auto& c : out.comps) c = canonicalize(c);
    return out;
}

bool n_equivalent(const NTreeFn& a, const NTreeFn& b) {
    if (a.shape.p != b.shape.p || a.shape.n != b.shape.n) throw std::invalid_argument("shape mismatch");
    for (size_t j = 0; j < a.comps.size(); ++j)
        if (!equivalent(a.comps[j], b.comps[j])) return false;
    return true;
}

bool n_is_admissible(const NTreeFn& t) {
    for (const auto& c : t.comps)
        if (!is_admissible(c)) return false;
    return true;
}

BigInt n_degree(const NTreeFn& t) {
    BigInt d = 1;
    for (const auto& c : t.comps) d *= degree_of(c);
    return d;
}

std::vector<int> n_serialize(const NTreeFn& t) {
    std::vector<int> out;
    for (const auto& c : t.comps) {
        out.push_back(-1);  // component separator
        const auto s = serialize(c);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

std::vector<NTreeFn> n_enumerate(const PAdicShape& shape, const EnumBudget& budget) {
    std::vector<std::shared_ptr<const std::vector<TreeFn>>> per_comp;
    unsigned long long total = 1;
    for (int j = 1; j <= shape.components(); ++j) {
        auto lst = std::make_shared<const std::vector<TreeFn>>(
            enumerate_admissible(shape.p, shape.comp_exponent(j), budget));
        if (total > budget.max_tuple_scan / lst->size() + 1) throw std::length_error("enumeration budget exceeded");
        total *= lst->size();
        per_comp.push_back(std::move(lst));
    }
    if (total > budget.max_tuple_scan) throw std::length_error("enumeration budget exceeded");
    std::vector<NTreeFn> out;
    out.reserve(total);
    std::vector<size_t> idx(per_comp.size(), 0);
    while (true) {
        std::vector<TreeFn> comps;
        comps.reserve(per_comp.size());
        for (size_t j = 0; j < per_comp.size(); ++j) comps.push_back((*per_comp[j])[idx[j]]);
        out.push_back(make_ntree(shape, std::move(comps)));
        size_t pos = per_comp.size();
        while (pos > 0 && idx[pos - 1] + 1 == per_comp[pos - 1]->size()) {
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
        ++idx[pos - 1];
    }
    return out;
}

}  // namespace sylow
