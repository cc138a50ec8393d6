#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padic/series.hpp"

namespace padic {

/// Dense univariate polynomial in z over the coefficient field.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const PadicField& field, std::vector<Coefficient> coeffs);
  static Polynomial constant(const PadicField& field, const Coefficient& c);
  static Polynomial monomial(const PadicField& field, int degree, const Coefficient& c);
  static Polynomial from_rationals(const PadicField& field, const std::vector<mpq_class>& q);

  const PadicField& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Coefficient coeff(int j) const;
  const std::vector<Coefficient>& coeffs() const { return c_; }
  Coefficient leading() const { return c_.back(); }
  /// Minimum coefficient valuation (infinite for 0).
  Valuation valuation() const;

  TruncSeries to_series(int order) const;
  Polynomial subst_pow(long d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Coefficient& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Coefficient& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Euclidean division over the field: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  std::string to_string() const;

 private:
  void trim();

  PadicField field_;
  std::vector<Coefficient> c_;
};

/// Quotient of polynomials, normalized so the denominator has constant term 1
/// whenever its constant term is nonzero.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(const PadicField& field, const Coefficient& c);
  static RationalFunction polynomial(Polynomial p);

  const PadicField& field() const { return num_.field().bound() ? num_.field() : den_.field(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  /// log of the Gauss norm in pi-units: v(num) - v(den), so |R|_G = 1 iff 0.
  Valuation gauss_valuation() const;
  bool gauss_norm_is_one() const;
  bool gauss_norm_at_most_one() const;
  /// No pole in the open unit disc: v(b_j) >= v(b_0) for every j.
  bool in_k0() const;

  /// Series expansion; requires den(0) != 0.
  TruncSeries to_series(int order) const;
  RationalFunction subst_pow(long d) const;

  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  /// Equality as rational functions (cross-multiplication).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// Denominator/numerator candidates r/t with r/t = g mod z^(total+1) and
/// deg r + deg t <= total, in order of increasing denominator degree, as read
/// off the extended Euclidean remainder sequence of (z^(total+1), g).
/// Candidates with t(0) = 0 are dropped.
std::vector<RationalFunction> pade_candidates(const TruncSeries& g, int total);

/// All Padé candidates with numerator and denominator degree <= deg_bound,
/// ordered by total degree, then by denominator degree.
std::vector<RationalFunction> pade_search(const TruncSeries& g, int deg_bound);

/// A/B with B(0) = 1, deg A, deg B <= deg_bound and integral coefficients
/// such that g = A/B mod pi^m over the whole reliable order of g, or none.
/// Exact decision for integral g: a K0 denominator can always be scaled to
/// B(0) = 1, which makes it integral. Throws NegativeValuation otherwise.
std::optional<RationalFunction> modular_certificate(const TruncSeries& g, int m, int deg_bound);

}  // namespace padic
