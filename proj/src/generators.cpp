#include "sylow/generators.hpp"

#include <limits>
#include <stdexcept>

namespace sylow {

bool is_primitive_root(int a, int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return false;
    long long x = 1;
    for (int e = 1; e < p - 1; ++e) {
        x = (x * r) % p;
        if (x == 1) return false;
    }
    return true;
}

int smallest_primitive_root(int p) {
    for (int a = 1; a < p; ++a)
        if (is_primitive_root(a, p)) return a;
    throw std::logic_error("no primitive root found");
}

int inverse_mod(int a, int p) {
    int r = a % p;
    if (r < 0) r += p;
    for (int b = 1; b < p; ++b)
        if ((static_cast<long long>(r) * b) % p == 1) return b;
    throw std::invalid_argument("not invertible mod p");
}

namespace {

int checked_degree(long long n) {
    if (n > std::numeric_limits<int>::max())
        throw std::invalid_argument("degree too large for explicit permutations");
    return static_cast<int>(n);
}

// Shift a permutation supported on [1, small.degree()] into [r+1, r+degree]
// inside S_n; this is exactly conjugation by the block transposition tau_r.
Perm embed_shifted(const Perm& small, long long n, long long r) {
    Perm g(checked_degree(n));
    std::vector<int> img = g.images();
    for (int y = 1; y <= small.degree(); ++y)
        img[static_cast<size_t>(r + y) - 1] = static_cast<int>(r) + small(y);
    return Perm::from_images(std::move(img));
}

}  // namespace

Perm gen_g(int p, int k, int j) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 1 || j < 1 || j > k) throw std::invalid_argument("require 1 <= j <= k");
    const long long deg = ipow(p, k);
    const long long block = ipow(p, j - 1);
    std::vector<std::vector<int>> cycles;
    for (long long m = 1; m <= block; ++m) {
        std::vector<int> cyc;
        for (int i = 0; i < p; ++i) cyc.push_back(static_cast<int>(i * block + m));
        cycles.push_back(std::move(cyc));
    }
    return Perm::from_cycles(checked_degree(deg), cycles);
}

Perm gen_sigma(int p, int k, int j, int a) {
    if (!is_primitive_root(a, p)) throw std::invalid_argument("a is not a primitive root mod p");
    if (k < 1 || j < 1 || j > k) throw std::invalid_argument("require 1 <= j <= k");
    if (j < k) {
        // blockwise copies of sigma_j^{(k-1)}, one per p^{k-1}-block
        const Perm inner = gen_sigma(p, k - 1, j, a);
        const long long q = ipow(p, k - 1);
        Perm g(checked_degree(ipow(p, k)));
        std::vector<int> img = g.images();
        for (int i = 0; i < p; ++i)
            for (int y = 1; y <= inner.degree(); ++y)
                img[static_cast<size_t>(i * q + y) - 1] = static_cast<int>(i * q) + inner(y);
        return Perm::from_images(std::move(img));
    }
    // j == k: on each p-cycle (c_1, ..., c_p) of g_k^{(k)} act by the
    // (p-1)-cycle (c_{a_1}, ..., c_{a_{p-1}}), a_i = a^i mod p; c_p stays fixed.
    const long long q = ipow(p, k - 1);
    std::vector<int> apow(static_cast<size_t>(p - 1));
    long long x = 1;
    for (int i = 0; i < p - 1; ++i) {
        x = (x * a) % p;
        apow[static_cast<size_t>(i)] = static_cast<int>(x);
    }
    std::vector<std::vector<int>> cycles;
    for (long long m = 1; m <= q; ++m) {
        std::vector<int> cyc;
        for (int i = 0; i < p - 1; ++i)
            cyc.push_back(static_cast<int>((apow[static_cast<size_t>(i)] - 1) * q + m));
        cycles.push_back(std::move(cyc));
    }
    return Perm::from_cycles(checked_degree(ipow(p, k)), cycles);
}

Perm tau_shift(long long m_all, long long m) {
    Perm g(checked_degree(m_all));
    std::vector<int> img(static_cast<size_t>(m_all));
    for (long long i = 1; i <= m_all; ++i) {
        long long v = (i - 1 + m) % m_all;
        if (v < 0) v += m_all;
        img[static_cast<size_t>(i) - 1] = static_cast<int>(v + 1);
    }
    return Perm::from_images(std::move(img));
}

Perm tau_embed(const PAdicShape& shape, int i, int j) {
    const long long r = shape.block_offset(i, j);
    const long long pk = shape.terms[static_cast<size_t>(i) - 1].pk;
    Perm g(checked_degree(shape.n));
    if (r == 0) return g;
    std::vector<int> img = g.images();
    for (long long y = 1; y <= pk; ++y) {
        img[static_cast<size_t>(y) - 1] = static_cast<int>(y + r);
        img[static_cast<size_t>(y + r) - 1] = static_cast<int>(y);
    }
    return Perm::from_images(std::move(img));
}

std::pair<Perm, Perm> gen_xi_zeta(const PAdicShape& shape, int i) {
    if (i < 1 || i > shape.term_count()) throw std::out_of_range("term index out of range");
    const auto& term = shape.terms[static_cast<size_t>(i) - 1];
    const int n = checked_degree(shape.n);
    if (term.a == 1) return {Perm(n), Perm(n)};
    const long long pk = term.pk;
    const long long r = shape.term_offset(i);
    std::vector<std::vector<int>> xi_cycles, zeta_cycles;
    for (long long y = 1; y <= pk; ++y) {
        xi_cycles.push_back({static_cast<int>(r + y), static_cast<int>(r + pk + y)});
        std::vector<int> cyc;
        for (int m = 0; m < term.a; ++m) cyc.push_back(static_cast<int>(r + m * pk + y));
        zeta_cycles.push_back(std::move(cyc));
    }
    return {Perm::from_cycles(n, xi_cycles), Perm::from_cycles(n, zeta_cycles)};
}

std::vector<int> tau_label_perm(int p, int a) {
    if (!is_primitive_root(a, p)) throw std::invalid_argument("a is not a primitive root mod p");
    const int b = inverse_mod(a, p);
    std::vector<int> tau(static_cast<size_t>(p + 1));
    for (int x = 0; x <= p; ++x) tau[static_cast<size_t>(x)] = x;
    // cycle (b_1, ..., b_{p-1}) with b_i = b^i mod p
    std::vector<int> bpow;
    long long x = 1;
    for (int i = 1; i <= p - 1; ++i) {
        x = (x * b) % p;
        bpow.push_back(static_cast<int>(x));
    }
    for (size_t i = 0; i + 1 < bpow.size(); ++i)
        tau[static_cast<size_t>(bpow[i])] = bpow[i + 1];
    if (!bpow.empty()) tau[static_cast<size_t>(bpow.back())] = bpow.front();
    return tau;
}

std::vector<Perm> GeneratorSet::g_list() const {
    std::vector<Perm> out;
    for (const auto& e : entries) out.push_back(e.g);
    return out;
}

std::vector<Perm> GeneratorSet::sigma_list() const {
    std::vector<Perm> out;
    for (const auto& e : entries) out.push_back(e.sigma);
    return out;
}

const GeneratorSet::Entry& GeneratorSet::at(int i, int j, int ell) const {
    for (const auto& e : entries)
        if (e.i == i && e.j == j && e.ell == ell) return e;
    throw std::out_of_range("index triple not in L(n)");
}

namespace {

GeneratorSet build_generators(long long n, int p, int a, bool with_normalizer) {
    GeneratorSet gs;
    gs.p = p;
    gs.n = n;
    gs.shape = p_adic_shape(n, p);
    checked_degree(n);
    if (with_normalizer) {
        if (!is_primitive_root(a, p)) throw std::invalid_argument("a is not a primitive root mod p");
        gs.a = a;
        gs.b = inverse_mod(a, p);
    }
    for (int i = 1; i <= gs.shape.term_count(); ++i) {
        const auto& term = gs.shape.terms[static_cast<size_t>(i) - 1];
        for (int j = 1; j <= term.a; ++j) {
            const long long r = gs.shape.block_offset(i, j);
            for (int ell = 1; ell <= term.k; ++ell) {
                GeneratorSet::Entry e;
                e.i = i;
                e.j = j;
                e.ell = ell;
                e.g = embed_shifted(gen_g(p, term.k, ell), n, r);
                if (with_normalizer) e.sigma = embed_shifted(gen_sigma(p, term.k, ell, a), n, r);
                gs.entries.push_back(std::move(e));
            }
        }
        if (with_normalizer) {
            auto [xi, zeta] = gen_xi_zeta(gs.shape, i);
            gs.xi.push_back(std::move(xi));
            gs.zeta.push_back(std::move(zeta));
        }
    }
    return gs;
}

}  // namespace

GeneratorSet generators_P(long long n, int p) { return build_generators(n, p, 0, false); }

GeneratorSet generators_N(long long n, int p, int a) { return build_generators(n, p, a, true); }

WreathCoords wreath_decompose(const Perm& g, int p, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const long long q = ipow(p, k - 1);
    if (g.degree() != ipow(p, k)) throw std::invalid_argument("degree is not p^k");
    // block map: all points of a block must land in one block, and the induced
    // permutation of blocks must be a power of the p-cycle
    std::vector<int> block_img(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        const int bi = static_cast<int>((g(static_cast<int>(i * q + 1)) - 1) / q);
        for (long long y = 1; y <= q; ++y)
            if ((g(static_cast<int>(i * q + y)) - 1) / q != bi)
                throw std::invalid_argument("element does not respect the block system");
        block_img[static_cast<size_t>(i)] = bi;
    }
    const int s = block_img[0];
    for (int i = 0; i < p; ++i)
        if (block_img[static_cast<size_t>(i)] != (i + s) % p)
            throw std::invalid_argument("block permutation is not a power of the p-cycle");
    WreathCoords w;
    w.top_exp = s;
    for (int i = 0; i < p; ++i) {
        std::vector<int> img(static_cast<size_t>(q));
        const long long shift = static_cast<long long>(block_img[static_cast<size_t>(i)]) * q;
        for (long long y = 1; y <= q; ++y)
            img[static_cast<size_t>(y) - 1] = static_cast<int>(g(static_cast<int>(i * q + y)) - shift);
        w.base.push_back(Perm::from_images(std::move(img)));
    }
    return w;
}

Perm wreath_compose(const std::vector<Perm>& base, int top_exp, int p, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (static_cast<int>(base.size()) != p) throw std::invalid_argument("need exactly p base entries");
    const long long q = ipow(p, k - 1);
    std::vector<int> img(static_cast<size_t>(ipow(p, k)));
    int s = top_exp % p;
    if (s < 0) s += p;
    for (int i = 0; i < p; ++i) {
        if (base[static_cast<size_t>(i)].degree() != q)
            throw std::invalid_argument("base entry has wrong degree");
        const long long shift = static_cast<long long>((i + s) % p) * q;
        for (long long y = 1; y <= q; ++y)
            img[static_cast<size_t>(i * q + y) - 1] =
                static_cast<int>(shift + base[static_cast<size_t>(i)](static_cast<int>(y)));
    }
    return Perm::from_images(std::move(img));
}

}  // namespace sylow
