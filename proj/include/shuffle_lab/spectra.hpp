#pragma once

#include "shuffle_lab/numeric.hpp"
#include "shuffle_lab/shuffles.hpp"
#include "shuffle_lab/tableaux.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace shuffle_lab {

// Remainder of a random-to-random catalog not covered by (lambda, mu) pairs.
struct KernelIndex {
    auto operator<=>(const KernelIndex&) const = default;
};

using EigenIndex = std::variant<Partition, StandardTableau, std::pair<Partition, Partition>, BiPartition, BiTableau, KernelIndex>;

std::string index_to_string(const EigenIndex& index);

struct CatalogEntry {
    EigenIndex index;
    std::optional<Rational> exact_value;
    double value = 0.0;
    std::int64_t multiplicity = 0;
};

class EigenCatalog {
public:
    EigenCatalog(ShuffleSpec spec, std::vector<CatalogEntry> entries, std::int64_t kernel_deficit = 0);

    const ShuffleSpec& spec() const { return spec_; }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    bool exact() const { return spec_.exact(); }
    // Multiplicity assigned to the kernel (random-to-random only).
    std::int64_t kernel_deficit() const { return kernel_deficit_; }

    std::int64_t total_multiplicity() const;
    Rational exact_trace() const;
    double trace() const;

    // Every eigenvalue repeated by multiplicity, sorted descending.
    std::vector<double> expanded() const;

private:
    ShuffleSpec spec_;
    std::vector<CatalogEntry> entries_;
    std::int64_t kernel_deficit_ = 0;
};

// (1/n) sum over boxes of (j-i+1)/T(i,j).
Rational ost_eig(const StandardTableau& t);
// (1/N_w(n)) sum over boxes of (j-i+1) w(T(i,j))/T(i,j).
Rational biased_ost_eig(const StandardTableau& t, const Weight& w);
double biased_ost_eig_real(const StandardTableau& t, const Weight& w);
// (n + 2 Diag(lambda))/n^2.
Rational rt_eig(const Partition& lambda);
// Requires mu inside lambda with lambda/mu a horizontal strip.
Rational rtr_eig(const Partition& lambda, const Partition& mu);
Rational brt_eig(const BiPartition& lambda);
// First component weighted by (j-i+1), second by (j-i); w = 1 when absent.
Rational bost_eig(const BiTableau& t, const std::optional<Weight>& w = std::nullopt);
double bost_eig_real(const BiTableau& t, const std::optional<Weight>& w = std::nullopt);

struct SpectraCaps {
    TableauCaps tableaux{};
    int max_n = 14;
};

// Errors: unknown kind (TTR, cyclic), size cap.
EigenCatalog build_catalog(const ShuffleSpec& spec, const SpectraCaps& caps = {});

struct SpectrumComparison {
    bool matches = false;
    double max_deviation = 0.0;
    std::string witness;
};

SpectrumComparison compare_spectra(const EigenCatalog& catalog, const std::vector<double>& oracle, double tol = 1e-9);

struct CatalogIdentities {
    bool count_ok = false;
    bool trace_ok = false;
    std::string detail;
};

// Count: sum of multiplicities equals |G|. Trace: sum of mult * eig equals |G| pmf(e).
CatalogIdentities check_identities(const EigenCatalog& catalog);

struct CheckReport {
    std::string name;
    bool passed = true;
    std::int64_t cases = 0;
    std::string witness;
};

// Tableau-ordering properties of the one-sided shuffle at deck size n, for
// the unbiased weight or a power weight j^alpha.
std::vector<CheckReport> eig_order_checks(int n, const std::optional<Weight>& weight = std::nullopt,
                                          const SpectraCaps& caps = {});

// The box-index bound for (n-k, *) shapes with T filled diagonal-wise, k in 1..n-2.
CheckReport boxindex_check(int n);

}  // namespace shuffle_lab
