#include "sylow/charexpr.hpp"

#include <sstream>
#include <stdexcept>

namespace sylow {

bool char_equal(const CharExpr& a, const CharExpr& b) {
    if (a.kind != b.kind || a.p != b.p || a.k != b.k || a.eps != b.eps) return false;
    if (a.parts.size() != b.parts.size()) return false;
    for (size_t i = 0; i < a.parts.size(); ++i)
        if (!char_equal(*a.parts[i], *b.parts[i])) return false;
    return true;
}

CharPtr make_trivial_char(int p) {
    auto c = std::make_shared<CharExpr>();
    c->kind = CharExpr::Kind::Trivial;
    c->p = p;
    c->k = 0;
    return c;
}

CharPtr make_linear(int p, int eps) {
    if (eps < 0 || eps >= p) throw std::invalid_argument("linear label out of [0, p-1]");
    auto c = std::make_shared<CharExpr>();
    c->kind = CharExpr::Kind::Linear;
    c->p = p;
    c->k = 1;
    c->eps = eps;
    return c;
}

CharPtr make_ext(CharPtr inner, int eps) {
    if (!inner || inner->k < 1) throw std::invalid_argument("ext needs an inner character of height >= 1");
    if (eps < 0 || eps >= inner->p) throw std::invalid_argument("ext label out of [0, p-1]");
    auto c = std::make_shared<CharExpr>();
    c->kind = CharExpr::Kind::Ext;
    c->p = inner->p;
    c->k = inner->k + 1;
    c->eps = eps;
    c->parts.push_back(std::move(inner));
    return c;
}

CharPtr make_induced(std::vector<CharPtr> parts) {
    if (parts.empty() || !parts.front()) throw std::invalid_argument("induced needs p parts");
    const int p = parts.front()->p;
    const int k = parts.front()->k;
    if (static_cast<int>(parts.size()) != p) throw std::invalid_argument("induced needs exactly p parts");
    bool all_equal = true;
    for (const auto& q : parts) {
        if (!q || q->p != p || q->k != k) throw std::invalid_argument("mismatched induced parts");
        if (!char_equal(*q, *parts.front())) all_equal = false;
    }
    if (k < 1) throw std::invalid_argument("induced parts must have height >= 1");
    if (all_equal) throw std::invalid_argument("induced parts must not all be equal");
    auto c = std::make_shared<CharExpr>();
    c->kind = CharExpr::Kind::Induced;
    c->p = p;
    c->k = k + 1;
    c->parts = std::move(parts);
    return c;
}

std::string describe(const CharExpr& c) {
    switch (c.kind) {
        case CharExpr::Kind::Trivial:
            return "1";
        case CharExpr::Kind::Linear:
            return "phi_" + std::to_string(c.eps);
        case CharExpr::Kind::Ext:
            return "X(" + describe(*c.parts.front()) + ";" + std::to_string(c.eps) + ")";
        case CharExpr::Kind::Induced: {
            std::ostringstream os;
            os << "(";
            for (size_t i = 0; i < c.parts.size(); ++i) {
                if (i) os << " x ";
                os << describe(*c.parts[i]);
            }
            os << ")^";
            return os.str();
        }
    }
    return "?";
}

BigInt char_degree(const CharExpr& c) {
    switch (c.kind) {
        case CharExpr::Kind::Trivial:
        case CharExpr::Kind::Linear:
            return 1;
        case CharExpr::Kind::Ext: {
            const BigInt d = char_degree(*c.parts.front());
            BigInt out = 1;
            for (int i = 0; i < c.p; ++i) out *= d;
            return out;
        }
        case CharExpr::Kind::Induced: {
            BigInt out = c.p;
            for (const auto& q : c.parts) out *= char_degree(*q);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

CharPtr psi(const TreeFn& t_in) {
    const TreeFn t = canonicalize(t_in);
    if (!is_admissible(t)) throw std::invalid_argument("psi needs an admissible tree function");
    if (t.k == 0) return make_trivial_char(t.p);
    if (t.k == 1) return make_linear(t.p, t.label);
    if (t.label < t.p) return make_ext(psi(t.children.front()), t.label);
    std::vector<CharPtr> parts;
    parts.reserve(t.children.size());
    for (const auto& c : t.children) parts.push_back(psi(c));
    return make_induced(std::move(parts));
}

TreeFn phi(const CharExpr& c) {
    switch (c.kind) {
        case CharExpr::Kind::Trivial:
            return make_trivial(c.p);
        case CharExpr::Kind::Linear:
            return make_leaf(c.p, c.eps);
        case CharExpr::Kind::Ext:
            return assemble(std::vector<TreeFn>(static_cast<size_t>(c.p), phi(*c.parts.front())), c.eps);
        case CharExpr::Kind::Induced: {
            std::vector<TreeFn> children;
            children.reserve(c.parts.size());
            for (const auto& q : c.parts) children.push_back(phi(*q));
            return canonicalize(assemble(std::move(children), c.p));
        }
    }
    throw std::logic_error("unreachable");
}

Cyclotomic evaluate(const CharExpr& c, const Perm& g) {
    const int p = c.p;
    switch (c.kind) {
        case CharExpr::Kind::Trivial:
            if (g.degree() != 1) throw std::invalid_argument("element outside P_1");
            return Cyclotomic::one(p);
        case CharExpr::Kind::Linear: {
            if (g.degree() != p) throw std::invalid_argument("element has wrong degree");
            const int s = g(1) - 1;
            for (int i = 1; i <= p; ++i)
                if (g(i) != (i - 1 + s) % p + 1)
                    throw std::invalid_argument("element outside the cyclic group");
            return Cyclotomic::omega_pow(p, static_cast<long long>(c.eps) * s);
        }
        case CharExpr::Kind::Ext: {
            const auto w = wreath_decompose(g, p, c.k);
            const CharExpr& inner = *c.parts.front();
            if (w.top_exp != 0) {
                // cycle product f_1 f_{(1)delta} f_{(1)delta^2} ... around the top p-cycle
                Perm h = w.base[0];
                int i = 0;
                for (int m = 1; m < p; ++m) {
                    i = (i + w.top_exp) % p;
                    h *= w.base[static_cast<size_t>(i)];
                }
                return Cyclotomic::omega_pow(p, static_cast<long long>(c.eps) * w.top_exp) * evaluate(inner, h);
            }
            Cyclotomic out = Cyclotomic::one(p);
            for (const auto& f : w.base) out *= evaluate(inner, f);
            return out;
        }
        case CharExpr::Kind::Induced: {
            const auto w = wreath_decompose(g, p, c.k);
            if (w.top_exp != 0) return Cyclotomic::zero(p);  // vanishes off the base group
            std::vector<std::vector<Cyclotomic>> vals(static_cast<size_t>(p));
            for (int i = 0; i < p; ++i) {
                vals[static_cast<size_t>(i)].reserve(static_cast<size_t>(p));
                for (int j = 0; j < p; ++j)
                    vals[static_cast<size_t>(i)].push_back(evaluate(*c.parts[static_cast<size_t>(j)],
                                                                    w.base[static_cast<size_t>(i)]));
            }
            Cyclotomic out = Cyclotomic::zero(p);
            for (int r = 0; r < p; ++r) {
                Cyclotomic prod = Cyclotomic::one(p);
                for (int i = 0; i < p; ++i) prod *= vals[static_cast<size_t>(i)][static_cast<size_t>((i + r) % p)];
                out += prod;
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

NCharExpr psi_n(const NTreeFn& t) {
    NCharExpr c;
    c.shape = t.shape;
    c.comps.reserve(t.comps.size());
    for (const auto& comp : t.comps) c.comps.push_back(psi(comp));
    return c;
}

NTreeFn phi_n(const NCharExpr& c) {
    std::vector<TreeFn> comps;
    comps.reserve(c.comps.size());
    for (const auto& q : c.comps) comps.push_back(phi(*q));
    return make_ntree(c.shape, std::move(comps));
}

BigInt char_degree(const NCharExpr& c) {
    BigInt d = 1;
    for (const auto& q : c.comps) d *= char_degree(*q);
    return d;
}

std::string describe(const NCharExpr& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.comps.size(); ++i) {
        if (i) os << " * ";
        os << describe(*c.comps[i]);
    }
    return os.str();
}

Cyclotomic evaluate(const NCharExpr& c, const Perm& g) {
    const auto& shape = c.shape;
    if (g.degree() != shape.n) throw std::invalid_argument("element has wrong degree");
    Cyclotomic out = Cyclotomic::one(shape.p);
    int comp = 0;
    for (int i = 1; i <= shape.term_count(); ++i) {
        const auto& term = shape.terms[static_cast<size_t>(i) - 1];
        for (int j = 1; j <= term.a; ++j) {
            ++comp;
            const long long r = shape.block_offset(i, j);
            std::vector<int> img(static_cast<size_t>(term.pk));
            for (long long y = 1; y <= term.pk; ++y) {
                const int v = g(static_cast<int>(r + y));
                if (v <= r || v > r + term.pk)
                    throw std::invalid_argument("element does not preserve the factor blocks");
                img[static_cast<size_t>(y) - 1] = static_cast<int>(v - r);
            }
            const Perm restricted = Perm::from_images(std::move(img));
            out *= evaluate(*c.comps[static_cast<size_t>(comp) - 1], restricted);
        }
    }
    return out;
}

}  // namespace sylow
