#pragma once

#include <cstddef>
#include <vector>

#include "sylow/cyclotomic.hpp"
#include "sylow/padic.hpp"

namespace sylow {

// Address in the p^k-skeleton: a sequence over [1, p] of length <= k-1.
// The empty sequence is the root.
using Address = std::vector<int>;

// A labeled complete p-ary tree of height k-1: labels in [0, p] on every
// skeleton address.  k = 0 is the distinguished trivial component (no nodes),
// used for the P_1 factors of general n.
struct TreeFn {
    int p = 0;
    int k = 0;
    int label = 0;
    std::vector<TreeFn> children;  // exactly p when k >= 2, empty otherwise

    bool operator==(const TreeFn&) const = default;
};

TreeFn make_trivial(int p);
TreeFn make_leaf(int p, int label);
// Root label eps over p children of equal height.
TreeFn assemble(std::vector<TreeFn> children, int eps);
// Constant-per-level labels, one per depth 0..k-1 (a linear tree when all < p).
TreeFn make_uniform(int p, int k, const std::vector<int>& level_labels);

int label_at(const TreeFn& t, const Address& s);
TreeFn subfunction(const TreeFn& t, const Address& s);

// All skeleton addresses, shortest first, lexicographic within a length.
std::vector<Address> skeleton_addresses(int p, int k);

// Preorder label list; the canonical form is the class key and two labeling
// functions are equivalent iff their canonical serializations agree.
std::vector<int> serialize(const TreeFn& t);
TreeFn canonicalize(const TreeFn& t);
bool equivalent(const TreeFn& t1, const TreeFn& t2);

// Reindex children: new child i is old child (i)pi where pi is an image
// table over [1, p] (entry 0 unused).
TreeFn transport_children(const TreeFn& t, const std::vector<int>& pi);

bool is_admissible(const TreeFn& t);

// Counts of each label value over the whole skeleton, indexed by label 0..p.
std::vector<long long> label_counts(const TreeFn& t);
// p^(number of p-labels)
BigInt degree_of(const TreeFn& t);

struct EnumBudget {
    // refuse enumerations whose induced-tuple scan would exceed this
    unsigned long long max_tuple_scan = 20'000'000ull;
};

// One canonical representative per admissible class, sorted by serialization.
std::vector<TreeFn> enumerate_admissible(int p, int k, const EnumBudget& budget = {});
// Class count by the recurrence N(p,1) = p, N(p,k) = p N + (N^p - N)/p.
BigInt count_admissible(int p, int k);

// All linear trees (constant per level, labels in [0, p-1]); the single
// trivial tree when k = 0.
std::vector<TreeFn> all_linear_trees(int p, int k);

// Tuple of tree functions matching a p-adic shape: component j has height
// parameter o(j).
struct NTreeFn {
    PAdicShape shape;
    std::vector<TreeFn> comps;

    friend bool operator==(const NTreeFn& a, const NTreeFn& b) {
        return a.shape.p == b.shape.p && a.shape.n == b.shape.n && a.comps == b.comps;
    }
};

NTreeFn make_ntree(const PAdicShape& shape, std::vector<TreeFn> comps);
NTreeFn n_canonicalize(const NTreeFn& t);
bool n_equivalent(const NTreeFn& a, const NTreeFn& b);
bool n_is_admissible(const NTreeFn& t);
BigInt n_degree(const NTreeFn& t);
std::vector<int> n_serialize(const NTreeFn& t);
std::vector<NTreeFn> n_enumerate(const PAdicShape& shape, const EnumBudget& budget = {});

}  // namespace sylow
