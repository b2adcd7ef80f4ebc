#pragma once

#include <vector>

namespace sylow {

// p-adic expansion n = sum a_i p^{k_i} with k_1 > ... > k_t >= 0 and
// digits a_i in [1, p-1], plus the offset bookkeeping q_0 = 0,
// q_i = q_{i-1} + a_i and the component-exponent map o: [1, q_t] -> {k_i}.
struct PAdicShape {
    struct Term {
        int k;       // exponent
        int a;       // digit in [1, p-1]
        long long pk;  // p^k
    };

    int p = 0;
    long long n = 0;
    std::vector<Term> terms;
    std::vector<int> q;  // q_0 .. q_t

    int term_count() const { return static_cast<int>(terms.size()); }
    int components() const { return q.back(); }

    // o(j) for j in [1, q_t]
    int comp_exponent(int j) const;
    // the term index i with q_{i-1} < j <= q_i
    int comp_term(int j) const;

    // r(i,j) = sum_{z<i} a_z p^{k_z} + (j-1) p^{k_i}, 1-based i, j
    long long block_offset(int i, int j) const;
    // r_i = sum_{e<i} a_e p^{k_e}
    long long term_offset(int i) const;
};

bool is_prime(int p);
PAdicShape p_adic_shape(long long n, int p);

long long ipow(long long base, int exp);

}  // namespace sylow
