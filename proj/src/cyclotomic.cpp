#include "sylow/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace sylow {

Cyclotomic::Cyclotomic(int p) : p_(p) {
    if (p < 2) throw std::invalid_argument("cyclotomic order must be a prime >= 2");
    c_.resize(static_cast<size_t>(p - 1));
}

Cyclotomic::Cyclotomic(int p, std::vector<BigInt> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) throw std::invalid_argument("cyclotomic order must be a prime >= 2");
    if (c_.size() != static_cast<size_t>(p - 1))
        throw std::invalid_argument("coefficient vector must have length p-1");
}

Cyclotomic Cyclotomic::integer(int p, BigInt v) {
    Cyclotomic x(p);
    x.c_[0] = std::move(v);
    return x;
}

Cyclotomic Cyclotomic::omega_pow(int p, long long e) {
    Cyclotomic x(p);
    long long r = e % p;
    if (r < 0) r += p;
    if (r == p - 1) {
        for (auto& c : x.c_) c = -1;  // w^{p-1} = -(1 + w + ... + w^{p-2})
    } else {
        x.c_[static_cast<size_t>(r)] = 1;
    }
    return x;
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
    if (p_ == 0 || o.p_ == 0) throw std::logic_error("arithmetic on default-constructed cyclotomic");
    if (p_ != o.p_) throw std::invalid_argument("mismatched cyclotomic orders");
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

std::optional<BigInt> Cyclotomic::as_integer() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_.empty() ? BigInt(0) : c_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    const int p = a.p_;
    // accumulate in Z[x]/(x^p - 1), then eliminate the x^{p-1} slot
    std::vector<BigInt> tmp(static_cast<size_t>(p));
    for (int i = 0; i < p - 1; ++i) {
        if (a.c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < p - 1; ++j) {
            if (b.c_[static_cast<size_t>(j)] == 0) continue;
            tmp[static_cast<size_t>((i + j) % p)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    Cyclotomic out(p);
    for (int i = 0; i < p - 1; ++i)
        out.c_[static_cast<size_t>(i)] = tmp[static_cast<size_t>(i)] - tmp[static_cast<size_t>(p - 1)];
    return out;
}

Cyclotomic Cyclotomic::galois(int b) const {
    if (p_ == 0) throw std::logic_error("galois on default-constructed cyclotomic");
    int r = b % p_;
    if (r < 0) r += p_;
    if (r == 0) throw std::invalid_argument("galois exponent must be coprime to p");
    std::vector<BigInt> tmp(static_cast<size_t>(p_));
    for (int i = 0; i < p_ - 1; ++i)
        tmp[static_cast<size_t>((static_cast<long long>(i) * r) % p_)] += c_[static_cast<size_t>(i)];
    Cyclotomic out(p_);
    for (int i = 0; i < p_ - 1; ++i)
        out.c_[static_cast<size_t>(i)] = tmp[static_cast<size_t>(i)] - tmp[static_cast<size_t>(p_ - 1)];
    return out;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << c_[i];
        if (i == 1) os << "*w";
        if (i > 1) os << "*w^" << i;
    }
    os << " (p=" << p_ << ")";
    return os.str();
}

}  // namespace sylow
