#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padic/frobenius.hpp"

namespace padic {

/// prod f_i^(a_i) mod z^N; every f_i must have constant term 1.
TruncSeries product_power(const std::vector<TruncSeries>& fs, const std::vector<long>& exps);

/// A K0(z) element congruent to g mod pi^M over g's reliable order, or none.
std::optional<Certificate> analytic_element_certificate(const TruncSeries& g, int level,
                                                        int deg_bound);

struct DependenceCandidate {
  std::vector<long> exponents;
  Certificate product;
  Certificate logderiv;
};

struct ScanStatistics {
  long rays = 0;
  long tuples_tested = 0;
  long screened_out = 0;    // no log-derivative certificate
  long product_failed = 0;  // log-derivative passed, product did not
};

struct DependenceReport {
  std::vector<std::string> series;
  std::vector<int> derivative_orders;  // empty when no derivatives were taken
  int exp_bound = 0;
  int level = 0;
  int deg_bound = 0;
  int order = 0;
  std::vector<DependenceCandidate> candidates;
  ScanStatistics stats;
  /// Absence of candidates is bounded evidence only.
  std::string scope_note;
};

struct ScanInput {
  std::string name;
  TruncSeries series;
};

/// Apply the r-th derivative and divide by the leading term c z^k, so the
/// result has constant term 1. Throws BadParameters if the derivative vanishes.
TruncSeries normalized_derivative(const TruncSeries& f, int r);

/// Sign-normalized primitive directions of the box ||a||_inf <= bound.
std::vector<std::vector<long>> primitive_rays(int dims, int bound);

/// Search for prod f_i^(a_i) in E_0 modulo pi^M. Along each primitive ray,
/// the smallest multiple whose log-derivative combination and product both
/// admit certificates is reported. Thread count comes from PADIC_THREADS.
DependenceReport dependence_scan(const std::vector<ScanInput>& fs, int exp_bound, int level,
                              int deg_bound,
                              const std::optional<std::vector<int>>& derivative_orders = std::nullopt);

int configured_threads();

}  // namespace padic
