#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sylow {

// Permutation of the point set [1, n].  Composition is left-to-right,
// matching the right-action notation (i)pi used throughout: (i)(a*b) = ((i)a)b.
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);  // identity

    static Perm identity(int degree) { return Perm(degree); }

    // images[i-1] is the image of point i; must be a bijection of [1, n].
    static Perm from_images(std::vector<int> images);

    // Disjoint cycles over [1, n]; a repeated point is an error.
    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    // Text form "(1,2,3)(4,5)"; "()" is the identity.
    static Perm parse_cycles(int degree, std::string_view text);

    int degree() const { return static_cast<int>(img_.size()); }

    // Image of a 1-based point.
    int operator()(int point) const { return img_[static_cast<size_t>(point) - 1]; }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;

    friend Perm operator*(const Perm& a, const Perm& b);
    Perm& operator*=(const Perm& other) { return *this = *this * other; }

    Perm inverse() const;

    // x^h = h^{-1} x h: relabels the moved points of x through h.
    Perm conjugate_by(const Perm& h) const;

    Perm pow(long long m) const;

    long long order() const;

    // Disjoint cycles of length >= 2, each starting at its least element,
    // sorted by least moved point.
    std::vector<std::vector<int>> cycles() const;

    std::vector<int> fixed_points() const;

    std::string to_cycle_string() const;

    bool operator==(const Perm&) const = default;

private:
    std::vector<int> img_;
};

struct PermHash {
    size_t operator()(const Perm& g) const {
        // FNV-1a over the image vector
        uint64_t h = 14695981039346656037ull;
        for (int v : g.images()) {
            h ^= static_cast<uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace sylow
