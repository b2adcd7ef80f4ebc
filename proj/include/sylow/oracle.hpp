#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "sylow/charexpr.hpp"
#include "sylow/cyclotomic.hpp"
#include "sylow/perm.hpp"

namespace sylow {

inline constexpr std::size_t kDefaultOracleBudget = 2'000'000;

// Fully enumerated small group with conjugacy classes.  Element order is BFS
// from the identity over the generator list; class representatives are the
// least BFS index of each class, which fixes the class order across runs.
struct EnumeratedGroup {
    std::vector<Perm> elements;
    std::unordered_map<Perm, int, PermHash> index;
    std::vector<int> class_of;     // element index -> class index
    std::vector<int> class_reps;   // class index -> element index
    std::vector<long long> class_sizes;

    std::size_t order() const { return elements.size(); }
    std::size_t class_count() const { return class_reps.size(); }
    const Perm& rep(int cls) const { return elements[static_cast<size_t>(class_reps[static_cast<size_t>(cls)])]; }
};

EnumeratedGroup enumerate_group(const std::vector<Perm>& gens, std::size_t budget = kDefaultOracleBudget);

// One character's exact values, indexed by conjugacy class.
using ValueTable = std::vector<Cyclotomic>;

using CharFn = std::function<Cyclotomic(const Perm&)>;

ValueTable value_table(const CharFn& chi, const EnumeratedGroup& G);
ValueTable value_table(const CharExpr& c, const EnumeratedGroup& G);
ValueTable value_table(const NCharExpr& c, const EnumeratedGroup& G);

// Bulk table fill over many characters.  The parallel kernel distributes
// characters across OpenMP threads; the serial path is the reference the
// tests compare against.
std::vector<ValueTable> value_tables_serial(const std::vector<CharPtr>& chars, const EnumeratedGroup& G);
std::vector<ValueTable> value_tables(const std::vector<CharPtr>& chars, const EnumeratedGroup& G,
                                     bool parallel = true);
std::vector<ValueTable> value_tables_serial(const std::vector<NCharExpr>& chars, const EnumeratedGroup& G);
std::vector<ValueTable> value_tables(const std::vector<NCharExpr>& chars, const EnumeratedGroup& G,
                                     bool parallel = true);

// [x, y] = (1/|G|) sum_g x(g) conj(y(g)), exact; throws when the sum is not a
// rational integer multiple of |G| (that signals an evaluation defect).
BigInt inner_product(const ValueTable& x, const ValueTable& y, const EnumeratedGroup& G);

// Full Gram matrix, serial reference and parallel kernel.
std::vector<std::vector<BigInt>> gram_matrix_serial(const std::vector<ValueTable>& tables,
                                                    const EnumeratedGroup& G);
std::vector<std::vector<BigInt>> gram_matrix(const std::vector<ValueTable>& tables, const EnumeratedGroup& G,
                                             bool parallel = true);

// Table of g -> chi(h g h^{-1}) for h normalizing the group.
ValueTable direct_conjugate(const CharFn& chi, const Perm& h, const EnumeratedGroup& G);
ValueTable direct_conjugate(const CharExpr& c, const Perm& h, const EnumeratedGroup& G);
ValueTable direct_conjugate(const NCharExpr& c, const Perm& h, const EnumeratedGroup& G);

ValueTable direct_galois(const ValueTable& vt, int b);

// Index of the unique candidate with an identical table; throws when there is
// no match or more than one (a bijectivity failure).
std::size_t match_character(const ValueTable& vt, const std::vector<ValueTable>& candidates);

}  // namespace sylow
