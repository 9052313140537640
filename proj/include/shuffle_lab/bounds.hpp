#pragma once

#include "shuffle_lab/exact_engine.hpp"
#include "shuffle_lab/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shuffle_lab {

// (1/2) sqrt(sum of mult * eig^{2t}) over the catalog with one copy of the
// eigenvalue 1 removed, summed in log space. Errors: no eigenvalue 1.
double l2_upper_bound(const EigenCatalog& catalog, double t);

struct RelaxedCaps {
    int max_n = 40;
};

// (1/2) sqrt(eig(T_{(1^n)})^{2t} + 2 sum d_lambda^2 eig(T_lambda row-wise)^{2t}),
// the sum over lambda != (n) whose row-wise eigenvalue is non-negative.
// Errors: n above the cap.
double relaxed_ost_bound(int n, double t, int threads = 1, const RelaxedCaps& caps = {});
// Raw sum under the square root, for comparison with the exact l2 sum.
double relaxed_ost_sum(int n, double t, int threads = 1, const RelaxedCaps& caps = {});
// Exact-tableau sum of mult * eig^{2t} without the trivial eigenvalue.
double l2_sum(const EigenCatalog& catalog, double t);

// sum over lambda with first row n-k of d_lambda^2 <= C(n,k)^2 k!.
bool dimension_bound_check(int n, int k, const RelaxedCaps& caps = {});
// 2 Diag <= (n-1)n - 2(n-lambda_1)(lambda_1+1) when lambda_1 >= n/2, and
// 2 Diag <= (lambda_1 - 1)n always.
bool diag_bound_check(const Partition& lambda);
// (n + 2 Diag)/n^2 <= 1 - 2(lambda_1+1)(n-lambda_1)/n^2 when lambda_1 >= 3n/4,
// and <= lambda_1/n always.
bool first_row_bound_check(const Partition& lambda);

// |P^t(F) - pi(F)| where F is the set of elements with at least one fixed
// point among the top ceil(n/m) positions; index i of the result is t = i.
// Errors: cyclic kinds, m < 1, exact-engine caps.
std::vector<double> fixed_point_lower_curve(const ShuffleSpec& spec, int t_max, int m, const EngineCaps& caps = {});
double fixed_point_lower_bound(const ShuffleSpec& spec, int t, int m, const EngineCaps& caps = {});
// pi(F) for the same set.
Rational fixed_point_stationary_mass(const ShuffleSpec& spec, int m, const EngineCaps& caps = {});

// N_alpha(n)/n^alpha for alpha <= 1, N_alpha(n)/N_{alpha-1}(n) for alpha >= 1.
double biased_time_scale(int n, double alpha);

struct BoundRow {
    int t = 0;
    std::optional<double> exact_tv;
    std::optional<double> l2_bound;
    std::optional<double> relaxed_bound;
    std::optional<double> lower_bound;
};

struct BoundOptions {
    int top_fraction = 2;
    int threads = 1;
    EngineCaps engine{};
};

// One row per grid time; columns that do not apply to the spec or exceed the
// caps stay empty.
std::vector<BoundRow> bound_table(const ShuffleSpec& spec, const std::vector<int>& grid, const BoundOptions& options = {});
// CSV: t,exact_tv,l2_bound,relaxed_bound,lower_bound.
std::string bound_csv(const std::vector<BoundRow>& rows);

}  // namespace shuffle_lab
