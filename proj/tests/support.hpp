#pragma once

#include <gmpxx.h>

#include <random>
#include <vector>

#include "padic/catalog.hpp"
#include "padic/dependence.hpp"

namespace testing_support {

using namespace padic;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline mpq_class random_rational(long num_range = 20, long den_range = 6) {
  mpq_class q(uniform(-num_range, num_range), uniform(1, den_range));
  q.canonicalize();
  return q;
}

inline Coefficient random_coefficient(const PadicField& f, long num_range = 20, long den_range = 6) {
  std::vector<mpq_class> c;
  for (int i = 0; i < f.e(); ++i) c.push_back(random_rational(num_range, den_range));
  return Coefficient(f, c);
}

inline Coefficient random_nonzero(const PadicField& f) {
  for (;;) {
    Coefficient c = random_coefficient(f);
    if (!c.is_zero()) return c;
  }
}

inline TruncSeries random_series(const PadicField& f, int n, long num_range = 20, long den_range = 6) {
  std::vector<Coefficient> c;
  for (int j = 0; j < n; ++j) c.push_back(random_coefficient(f, num_range, den_range));
  return TruncSeries(f, c);
}

/// Random series with constant term 1.
inline TruncSeries random_unit_series(const PadicField& f, int n) {
  TruncSeries s = random_series(f, n);
  s[0] = Coefficient::one(f);
  return s;
}

// ----- independent oracles -------------------------------------------------

/// Binomial coefficients from Pascal's triangle.
inline std::vector<std::vector<mpz_class>> pascal(int rows) {
  std::vector<std::vector<mpz_class>> t(rows, std::vector<mpz_class>());
  for (int n = 0; n < rows; ++n) {
    t[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

inline std::vector<mpq_class> apery_oracle(int count) {
  auto b = pascal(2 * count + 1);
  std::vector<mpq_class> out;
  for (int n = 0; n < count; ++n) {
    mpz_class s = 0;
    for (int k = 0; k <= n; ++k) {
      mpz_class t = b[n][k] * b[n + k][k];
      s += t * t;
    }
    out.emplace_back(s);
  }
  return out;
}

/// prod_i (a_i)_j / j!^n, built term by term from the ratio
/// c_(j+1)/c_j = prod (a_i + j) / (j+1)^n.
inline std::vector<mpq_class> hypergeometric_oracle(const std::vector<mpq_class>& a, int count) {
  std::vector<mpq_class> out{mpq_class(1)};
  for (int j = 0; j + 1 < count; ++j) {
    mpq_class r = out.back();
    for (const auto& x : a) r *= x + j;
    for (std::size_t i = 0; i < a.size(); ++i) r /= (j + 1);
    out.push_back(r);
  }
  return out;
}

inline int digit_sum(long n, int base) {
  int s = 0;
  for (; n > 0; n /= base) s += static_cast<int>(n % base);
  return s;
}

inline TruncSeries geometric(const PadicField& f, int n) {
  return TruncSeries::from_rationals(f, std::vector<mpq_class>(n, mpq_class(1)));
}

inline Polynomial poly(const PadicField& f, const std::vector<long>& c) {
  std::vector<Coefficient> cs;
  for (long x : c) cs.emplace_back(f, x);
  return Polynomial(f, cs);
}

inline TruncSeries catalog_series(const std::string& spec, int p, Ramification r, int n) {
  return build(parse_series_spec(spec, PadicContext(PadicField(p, r), n))).series;
}

}  // namespace testing_support
