#include "sylow/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sylow {

Perm::Perm(int degree) {
    if (degree < 0) throw std::invalid_argument("permutation degree must be >= 0");
    img_.resize(static_cast<size_t>(degree));
    std::iota(img_.begin(), img_.end(), 1);
}

Perm Perm::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : images) {
        if (v < 1 || v > n) throw std::invalid_argument("image out of range [1, n]");
        if (seen[static_cast<size_t>(v) - 1]) throw std::invalid_argument("images are not a bijection");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
    Perm g;
    g.img_ = std::move(images);
    return g;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm g(degree);
    std::vector<char> used(static_cast<size_t>(degree), 0);
    for (const auto& cyc : cycles) {
        for (int pt : cyc) {
            if (pt < 1 || pt > degree) throw std::invalid_argument("cycle point out of range");
            if (used[static_cast<size_t>(pt) - 1]) throw std::invalid_argument("repeated point in cycle input");
            used[static_cast<size_t>(pt) - 1] = 1;
        }
        if (cyc.size() < 2) continue;
        for (size_t i = 0; i < cyc.size(); ++i)
            g.img_[static_cast<size_t>(cyc[i]) - 1] = cyc[(i + 1) % cyc.size()];
    }
    return g;
}

Perm Perm::parse_cycles(int degree, std::string_view text) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            int v = 0;
            bool any = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                any = true;
                ++i;
            }
            if (!any) throw std::invalid_argument("expected point in cycle notation");
            cyc.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
        }
        if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
        ++i;  // ')'
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in composition");
    Perm g;
    g.img_.resize(a.img_.size());
    for (size_t i = 0; i < a.img_.size(); ++i)
        g.img_[i] = b.img_[static_cast<size_t>(a.img_[i]) - 1];
    return g;
}

Perm Perm::inverse() const {
    Perm g;
    g.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        g.img_[static_cast<size_t>(img_[i]) - 1] = static_cast<int>(i) + 1;
    return g;
}

Perm Perm::conjugate_by(const Perm& h) const {
    if (degree() != h.degree()) throw std::invalid_argument("degree mismatch in conjugation");
    // h^{-1} * this * h computed pointwise: (i)result = (((i)h^{-1})this)h
    Perm g;
    g.img_.resize(img_.size());
    const Perm hinv = h.inverse();
    for (int i = 1; i <= degree(); ++i)
        g.img_[static_cast<size_t>(i) - 1] = h((*this)(hinv(i)));
    return g;
}

Perm Perm::pow(long long m) const {
    if (m < 0) return inverse().pow(-m);
    Perm acc = identity(degree());
    Perm base = *this;
    while (m > 0) {
        if (m & 1) acc *= base;
        base *= base;
        m >>= 1;
    }
    return acc;
}

long long Perm::order() const {
    long long ord = 1;
    for (const auto& cyc : cycles())
        ord = std::lcm(ord, static_cast<long long>(cyc.size()));
    return ord;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int start = 1; start <= degree(); ++start) {
        if (seen[static_cast<size_t>(start) - 1] || (*this)(start) == start) continue;
        std::vector<int> cyc;
        for (int pt = start; !seen[static_cast<size_t>(pt) - 1]; pt = (*this)(pt)) {
            seen[static_cast<size_t>(pt) - 1] = 1;
            cyc.push_back(pt);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Perm::fixed_points() const {
    std::vector<int> out;
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) == i) out.push_back(i);
    return out;
}

std::string Perm::to_cycle_string() const {
    auto cycs = cycles();
    if (cycs.empty()) return "()";
    std::ostringstream os;
    for (const auto& cyc : cycs) {
        os << '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << ',';
            os << cyc[i];
        }
        os << ')';
    }
    return os.str();
}

}  // namespace sylow
