#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace sylow {

using BigInt = boost::multiprecision::cpp_int;

// Exact element of Z[w], w = exp(2*pi*i/p), stored in the power basis
// {1, w, ..., w^{p-2}} with w^{p-1} = -(1 + w + ... + w^{p-2}).
// Equality is coefficient equality in this reduced form.
class Cyclotomic {
public:
    Cyclotomic() = default;  // invalid sentinel (p = 0); any arithmetic throws
    explicit Cyclotomic(int p);
    Cyclotomic(int p, std::vector<BigInt> coeffs);

    static Cyclotomic zero(int p) { return Cyclotomic(p); }
    static Cyclotomic integer(int p, BigInt v);
    static Cyclotomic one(int p) { return integer(p, 1); }
    // w^e, exponent taken mod p
    static Cyclotomic omega_pow(int p, long long e);

    int p() const { return p_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const;
    std::optional<BigInt> as_integer() const;  // value when all w-coefficients vanish

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    // Galois map w -> w^b, gcd(b, p) = 1.
    Cyclotomic galois(int b) const;
    // Complex conjugation, w -> w^{p-1}.
    Cyclotomic conj() const { return galois(p_ - 1); }

    bool operator==(const Cyclotomic&) const = default;

    // "c0 + c1*w + ... (p=5)"
    std::string to_string() const;

private:
    void check_same(const Cyclotomic& o) const;

    int p_ = 0;
    std::vector<BigInt> c_;  // length p-1
};

}  // namespace sylow
