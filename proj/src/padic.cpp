#include "sylow/padic.hpp"

#include <stdexcept>

namespace sylow {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1ll << 62) / base) throw std::overflow_error("ipow overflow");
        r *= base;
    }
    return r;
}

int PAdicShape::comp_exponent(int j) const { return terms[static_cast<size_t>(comp_term(j)) - 1].k; }

int PAdicShape::comp_term(int j) const {
    if (j < 1 || j > components()) throw std::out_of_range("component index out of range");
    for (int i = 1; i <= term_count(); ++i)
        if (q[static_cast<size_t>(i) - 1] < j && j <= q[static_cast<size_t>(i)]) return i;
    throw std::logic_error("inconsistent offsets");
}

long long PAdicShape::term_offset(int i) const {
    if (i < 1 || i > term_count()) throw std::out_of_range("term index out of range");
    long long r = 0;
    for (int z = 1; z < i; ++z)
        r += static_cast<long long>(terms[static_cast<size_t>(z) - 1].a) * terms[static_cast<size_t>(z) - 1].pk;
    return r;
}

long long PAdicShape::block_offset(int i, int j) const {
    if (i < 1 || i > term_count()) throw std::out_of_range("term index out of range");
    if (j < 1 || j > terms[static_cast<size_t>(i) - 1].a) throw std::out_of_range("copy index out of range");
    return term_offset(i) + static_cast<long long>(j - 1) * terms[static_cast<size_t>(i) - 1].pk;
}

PAdicShape p_adic_shape(long long n, int p) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    std::vector<int> digits;  // base-p digits, least significant first
    long long m = n;
    while (m > 0) {
        digits.push_back(static_cast<int>(m % p));
        m /= p;
    }
    PAdicShape s;
    s.p = p;
    s.n = n;
    s.q.push_back(0);
    for (int k = static_cast<int>(digits.size()) - 1; k >= 0; --k) {
        if (digits[static_cast<size_t>(k)] == 0) continue;
        s.terms.push_back({k, digits[static_cast<size_t>(k)], ipow(p, k)});
        s.q.push_back(s.q.back() + digits[static_cast<size_t>(k)]);
    }
    return s;
}

}  // namespace sylow
