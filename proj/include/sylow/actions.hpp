#pragma once

#include <cstddef>
#include <vector>

#include "sylow/cyclotomic.hpp"
#include "sylow/generators.hpp"
#include "sylow/treefn.hpp"

namespace sylow {

// Action of sigma_j^{(k)} on an admissible tree function (canonical in and
// out): for j = k the root label and the child slots move through tau, for
// j < k the action recurses into the subtrees.
TreeFn act_sigma(const TreeFn& t, int j, int a);

// The per-address form of the same action, kept as an independent cross-check
// path: the label of t^{sigma_j} at address s, computed without any
// re-canonicalization.  The full address map is only equivalent to
// act_sigma(t, j, a), not nodewise equal.
int act_sigma_label_at(const TreeFn& t, int j, int a, const Address& s);
TreeFn act_sigma_addresswise(const TreeFn& t, int j, int a);

// Galois action: every label moves through tau (0 and p fixed).
TreeFn act_galois(const TreeFn& t, int a);

struct ActionGen {
    enum class Kind { Sigma, Rho, Galois };
    enum class RhoLetter { Xi, Zeta };

    Kind kind = Kind::Sigma;
    int i = 0, j = 0, ell = 0;        // Sigma(i, j, ell) in L(n)
    int y = 0;                        // Rho term index
    std::vector<RhoLetter> word;      // Rho word over {xi_y, zeta_y}
    int m = 1;                        // Galois exponent
};

ActionGen sigma_gen(int i, int j, int ell);
ActionGen rho_gen(int y, std::vector<ActionGen::RhoLetter> word);
ActionGen galois_gen(int m);

std::vector<ActionGen> all_sigma_gens(const PAdicShape& shape);
// xi and zeta words for every term with a_i >= 2
std::vector<ActionGen> all_rho_gens(const PAdicShape& shape);

// Reduces a rho word to the permutation of [1, a_y] it induces on the copies
// of term y (image table, entry 0 unused).
std::vector<int> rho_word_permutation(const PAdicShape& shape, int y,
                                      const std::vector<ActionGen::RhoLetter>& word);

NTreeFn act_n(const NTreeFn& t, const ActionGen& gen, int a);
NTreeFn act_galois_n(const NTreeFn& t, int a, int times = 1);

// BFS closure under the generators, keyed on canonical serialization;
// discovery order is deterministic.
std::vector<NTreeFn> orbit(const NTreeFn& t, const std::vector<ActionGen>& gens, int a,
                           std::size_t cap = 1'000'000);

// The certified pair of Galois-conjugate characters of P_125 (p = 5, a = 2)
// lying in distinct normalizer orbits.
NTreeFn counterexample_t1();
NTreeFn counterexample_t2();

struct CounterexampleReport {
    bool t1_admissible = false;
    bool t2_admissible = false;
    BigInt degree1, degree2;
    bool galois_sends_t1_to_t2 = false;
    std::size_t sigma_orbit_size = 0;
    bool t2_in_sigma_orbit = true;

    bool pass() const {
        return t1_admissible && t2_admissible && degree1 == 25 && degree2 == 25 &&
               galois_sends_t1_to_t2 && !t2_in_sigma_orbit && sigma_orbit_size <= 64;
    }
};

CounterexampleReport verify_counterexample();

// For every linear tuple, the Galois action agrees with applying each
// sigma(i,j,ell) once.
bool linear_identity_check(long long n, int p, int a);

}  // namespace sylow
