#pragma once

#include "shuffle_lab/spectra.hpp"

#include <cstdint>
#include <vector>

namespace shuffle_lab {

// Formula catalogs against the brute-force spectrum, with count and trace
// identities: RT, RTR, OST and OST_biased (alpha -1, 1, 2) for 2 <= n <=
// min(n_max, 6); B_RT and B_OST for 2 <= n <= min(n_max, 4). Adds the
// random-to-random reconciliation for n <= min(n_max, 7).
std::vector<CheckReport> oracle_suite(int n_max, int threads = 0);

// Random-to-random: (lambda, mu) multiplicities plus the kernel sum to n!.
CheckReport rtr_reconciliation(int n);

// Reference lifts, then lifting_checks for OST, RT, OST_biased (alpha -1..2)
// with n <= min(n_max, 6) and B_RT, B_OST, B_OST_biased (alpha 2) with n <= min(n_max, 4).
std::vector<CheckReport> lifting_suite(int n_max, int threads = 0);

// Tableau-ordering checks (unbiased and alpha -1, 1, 2), the box-index bound
// and the dimension, diagonal and first-row inequalities for n <= n_max.
std::vector<CheckReport> ordering_suite(int n_max);

// operator_identity_checks for 1 <= n <= min(n_max, 6).
std::vector<CheckReport> identity_suite(int n_max, int trials = 1000, std::uint64_t seed = 1);

// fixed-point lower bound <= exact TV <= l2 bound for t = 0..t_max on every
// reversible kind with n <= 5 (S_n) and n <= 3 (B_n).
std::vector<CheckReport> bound_sandwich_suite(int t_max = 30, int threads = 0);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace shuffle_lab
