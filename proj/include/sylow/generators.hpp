#pragma once

#include <utility>
#include <vector>

#include "sylow/padic.hpp"
#include "sylow/perm.hpp"

namespace sylow {

bool is_primitive_root(int a, int p);
int smallest_primitive_root(int p);
int inverse_mod(int a, int p);

// g_j^{(k)}: product of p^{j-1} p-cycles, degree p^k.
Perm gen_g(int p, int k, int j);

// sigma_j^{(k)} for the primitive root a, degree p^k; order p-1 (identity at p=2).
Perm gen_sigma(int p, int k, int j, int a);

// tau_m on [1, m_all]: i -> i + m, numbers modulo m_all taken in [1, m_all].
Perm tau_shift(long long m_all, long long m);

// Block transposition tau(i,j) swapping [1, p^{k_i}] with the (i,j) block; degree n.
Perm tau_embed(const PAdicShape& shape, int i, int j);

// (xi_i, zeta_i): identity pair when a_i = 1, otherwise the transposition of the
// first two p^{k_i}-blocks of term i and the a_i-fold block cycle, both shifted by r_i.
std::pair<Perm, Perm> gen_xi_zeta(const PAdicShape& shape, int i);

// Label permutation tau on [0, p]: the cycle (b_1, ..., b_{p-1}) with b_i = b^i mod p
// (b = a^{-1} mod p), fixing 0 and p.  Returned as an image table indexed by label.
std::vector<int> tau_label_perm(int p, int a);

struct GeneratorSet {
    struct Entry {
        int i, j, ell;  // index triple in L(n)
        Perm g;
        Perm sigma;  // identity-degree 0 when only P-generators were requested
    };

    int p = 0;
    long long n = 0;
    int a = 0;  // primitive root (0 when not applicable)
    int b = 0;  // inverse root
    PAdicShape shape;
    std::vector<Entry> entries;      // ordered lexicographically by (i, j, ell)
    std::vector<Perm> xi, zeta;      // one per term (only for generators_N)

    std::vector<Perm> g_list() const;
    std::vector<Perm> sigma_list() const;
    const Entry& at(int i, int j, int ell) const;
};

GeneratorSet generators_P(long long n, int p);
GeneratorSet generators_N(long long n, int p, int a);

// Wreath coordinates of g in P_{p^k} = P_{p^{k-1}} wr C_p: p base entries of
// degree p^{k-1} plus the top exponent s with block map gamma^s.  Conventions:
// point (i-1)p^{k-1} + y maps to ((i)gamma^s - 1)p^{k-1} + (y)f_i.
struct WreathCoords {
    std::vector<Perm> base;
    int top_exp = 0;
};

WreathCoords wreath_decompose(const Perm& g, int p, int k);
Perm wreath_compose(const std::vector<Perm>& base, int top_exp, int p, int k);

}  // namespace sylow
