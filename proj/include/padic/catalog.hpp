#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padic/diffops.hpp"

namespace padic {

enum class SeriesKind { Hypergeometric, Apery, Bessel, Exponential, FFrak };

std::string_view to_string(SeriesKind k);

struct SeriesSpec {
  SeriesKind kind = SeriesKind::Apery;
  std::vector<mpq_class> alpha;  // hypergeometric parameters
  PadicContext context{PadicField(5, Ramification::Unramified), 64};

  /// Short name such as "apery" or "hyp:1/2,1/2".
  std::string name() const;
};

/// Parse "apery", "bessel", "exp", "ffrak" or "hyp:a1,a2,...".
SeriesSpec parse_series_spec(std::string_view text, const PadicContext& context);

struct CatalogEntry {
  std::string name;
  TruncSeries series;
  std::optional<RawOperator> raw_operator;
  std::optional<DiffOp> op;
  /// Frobenius period annotation; never computed from the series.
  int period = 1;
  std::string period_note;
  std::vector<std::string> warnings;
};

CatalogEntry build(const SeriesSpec& spec);

/// lcm of the denominators of the parameters.
long common_denominator(const std::vector<mpq_class>& alpha);
/// (x)_j = x (x+1) ... (x+j-1).
mpq_class pochhammer(const mpq_class& x, int j);
/// sum_k C(n,k)^2 C(n+k,k)^2 for n < count.
std::vector<mpz_class> apery_numbers(int count);

struct LucasReport {
  bool pass = true;
  int first_failure = -1;
  int checked_order = 0;
  std::string note;
};

/// f = F_(p-1)(z) f(z^p) mod p, using f(z^p) for f(z)^p.
LucasReport p_lucas_check(const TruncSeries& f);

struct DworkReport {
  bool pass = true;
  int s = 0;
  int first_failure = -1;
  int checked_order = 0;
};

/// f F_(s-1)(z^p) = F_s f(z^p) mod p^s, F_s the truncation below degree p^s.
DworkReport dwork_congruence_check(const TruncSeries& f, int s);

}  // namespace padic
