#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sylow/oracle.hpp"

namespace sylow {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    int a5 = 2;  // primitive root used at p = 5 (the worked examples fix a = 2)
    std::size_t budget = kDefaultOracleBudget;
    bool parallel = true;
    unsigned seed = 12345;
};

// Reproduction of the two worked generator examples, exact as image maps.
CheckResult check_example_n25(const VerifyOptions& = {});
CheckResult check_example_n19(const VerifyOptions& = {});

// |enumerate_admissible(p,k)| == #classes of the enumerated group, and the
// recurrence value agrees.
CheckResult check_bijection_count(int p, int k, const VerifyOptions& = {});

// [chi_i, chi_j] = delta_ij over all pairs and sum of squared degrees = |G|.
CheckResult check_orthogonality(int p, int k, const VerifyOptions& = {});

// formula action equals oracle conjugation for every tree and every sigma_j.
CheckResult check_th1_agreement(int p, int k, const VerifyOptions& = {});

// addresswise formula output is equivalent to the recursive action.
CheckResult check_addresswise(int p, int k, const VerifyOptions& = {});

// entrywise Galois on tables equals the relabeling action.
CheckResult check_th3_agreement(int p, int k, const VerifyOptions& = {});

// degree_of(t) == evaluate(psi(t), id) for every enumerated tree.
CheckResult check_degree_formula(int p, int k, const VerifyOptions& = {});

CheckResult check_counterexample(const VerifyOptions& = {});

CheckResult check_linear_identity(long long n, int p, const VerifyOptions& = {});

// full normalizer generator list (sigma, xi, zeta words and Galois) against
// the oracle at a composite n.
CheckResult check_general_n_agreement(long long n, int p, const VerifyOptions& = {});

// randomized spot-check of the conjugation rules in wreath coordinates.
CheckResult check_sigma_relations(int p, int k, const VerifyOptions& = {});

// the per-shape suite behind `verify --p P --k K`
std::vector<CheckResult> verify_prime_power(int p, int k, const VerifyOptions& = {});

// the full matrix behind `verify --all`
std::vector<CheckResult> verify_all(const VerifyOptions& = {});

int primitive_root_for(int p, const VerifyOptions& opt);

}  // namespace sylow
