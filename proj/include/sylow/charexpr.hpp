#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sylow/cyclotomic.hpp"
#include "sylow/generators.hpp"
#include "sylow/perm.hpp"
#include "sylow/treefn.hpp"

namespace sylow {

// Recursive character description: Linear(eps) for the p linear characters of
// C_p; Ext(inner, eps) for the extension X(inner; eps) to the wreath product;
// Induced(parts) for (theta_1 x ... x theta_p) induced from the base group,
// parts not all equal.  Trivial is the character of P_1.
struct CharExpr;
using CharPtr = std::shared_ptr<const CharExpr>;

struct CharExpr {
    enum class Kind { Trivial, Linear, Ext, Induced };

    Kind kind = Kind::Trivial;
    int p = 0;
    int k = 0;  // height parameter: 0 Trivial, 1 Linear, >= 2 Ext/Induced
    int eps = 0;
    std::vector<CharPtr> parts;  // Ext: one entry; Induced: p entries
};

bool char_equal(const CharExpr& a, const CharExpr& b);

CharPtr make_trivial_char(int p);
CharPtr make_linear(int p, int eps);
CharPtr make_ext(CharPtr inner, int eps);
CharPtr make_induced(std::vector<CharPtr> parts);

// X(X(phi_1;0);2) style rendering
std::string describe(const CharExpr& c);

BigInt char_degree(const CharExpr& c);

// The bijection from admissible tree functions to characters and its inverse;
// phi returns the canonical representative, and psi(phi(c)) agrees with c up
// to rotation of induced parts.
CharPtr psi(const TreeFn& t);
TreeFn phi(const CharExpr& c);

// Exact value at g in P_{p^k}; throws when g is outside the group far enough
// for the wreath recursion to notice.
Cyclotomic evaluate(const CharExpr& c, const Perm& g);

struct NCharExpr {
    PAdicShape shape;
    std::vector<CharPtr> comps;
};

NCharExpr psi_n(const NTreeFn& t);
NTreeFn phi_n(const NCharExpr& c);
BigInt char_degree(const NCharExpr& c);
std::string describe(const NCharExpr& c);

// Value at g in P_n: restrict to each translated block, pull back by the
// block transposition, evaluate the component, multiply.
Cyclotomic evaluate(const NCharExpr& c, const Perm& g);

}  // namespace sylow
