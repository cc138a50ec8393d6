#pragma once

#include <vector>

#include "padic/coeff.hpp"

namespace padic {

/// Power series modulo z^N. The length of the coefficient vector is the
/// order N to which the series is reliable; every operation returns a
/// series whose length is its own reliable order.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(const PadicField& field, std::vector<Coefficient> coeffs);
  static TruncSeries zero(const PadicField& field, int order);
  static TruncSeries one(const PadicField& field, int order);
  static TruncSeries monomial(const PadicField& field, int degree, int order,
                              const Coefficient& c);
  static TruncSeries from_rationals(const PadicField& field, const std::vector<mpq_class>& q);

  const PadicField& field() const { return field_; }
  int order() const { return static_cast<int>(c_.size()); }
  const Coefficient& operator[](int j) const { return c_[j]; }
  Coefficient& operator[](int j) { return c_[j]; }
  const std::vector<Coefficient>& coeffs() const { return c_; }

  TruncSeries truncated(int order) const;
  bool is_zero() const;
  /// Minimum coefficient valuation over indices [from, upto).
  Valuation min_valuation(int from = 0, int upto = -1) const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Coefficient& c);
  TruncSeries& operator/=(const Coefficient& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Coefficient& c) { return a *= c; }
  friend TruncSeries operator*(const Coefficient& c, TruncSeries a) { return a *= c; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  PadicField field_;
  std::vector<Coefficient> c_;
};

/// delta = z d/dz.
TruncSeries delta(const TruncSeries& f);
TruncSeries delta_pow(const TruncSeries& f, int k);
/// Ordinary derivative; the result is reliable to order N-1.
TruncSeries d_dz(const TruncSeries& f);
/// Cartier operator sum a_n z^n -> sum a_{np} z^n; reliable to ceil(N/p).
TruncSeries cartier(const TruncSeries& f);
TruncSeries cartier_pow(const TruncSeries& f, int k);
/// z -> z^(p^k). The result has order min(target, p^k * N); target < 0
/// keeps the input order.
TruncSeries subst_zpk(const TruncSeries& f, int k, int target = -1);
/// z -> z^d for an arbitrary positive integer d.
TruncSeries subst_pow(const TruncSeries& f, long d, int target = -1);
TruncSeries invert_unit(const TruncSeries& f);
TruncSeries log_derivative(const TruncSeries& f);
TruncSeries hadamard(const TruncSeries& f, const TruncSeries& g);
TruncSeries power(const TruncSeries& f, long k);
/// True iff v(f_j - g_j) >= m for all j < upto.
bool congruent_mod(const TruncSeries& f, const TruncSeries& g, int m, int upto);
/// First index j < upto with v(f_j - g_j) < m, or -1.
int first_incongruence(const TruncSeries& f, const TruncSeries& g, int m, int upto);

long ipow(long base, int exp);

}  // namespace padic
