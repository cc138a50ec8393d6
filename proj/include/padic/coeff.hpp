#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "padic/error.hpp"

namespace padic {

enum class Ramification { Unramified, DworkEisenstein };

std::string_view to_string(Ramification r);
Ramification parse_ramification(std::string_view s);

/// The coefficient field: Q_p (uniformizer p) or Q_p(pi) with pi^(p-1) = -p.
struct PadicField {
  int p = 0;
  Ramification ramification = Ramification::Unramified;

  PadicField() = default;
  PadicField(int prime, Ramification r);

  /// Ramification index: 1 or p-1.
  int e() const { return ramification == Ramification::Unramified ? 1 : p - 1; }
  bool bound() const { return p != 0; }

  friend bool operator==(const PadicField&, const PadicField&) = default;
};

/// Field plus the working truncation order and default congruence level.
struct PadicContext {
  PadicField field;
  int trunc_order = 1;
  int level = 1;

  PadicContext(PadicField f, int n, int m = 1);
};

bool is_prime(long n);

/// Valuations are reported in integer pi-units: v(pi) = 1, v(p) = e.
using Valuation = std::int64_t;
inline constexpr Valuation kInfinite = std::numeric_limits<Valuation>::max();
inline bool is_infinite(Valuation v) { return v == kInfinite; }
std::string valuation_string(Valuation v);

/// p-adic valuation of a nonzero rational (in powers of p).
long vp(const mpq_class& q, int p);

/// Exact element sum_i c_i pi^i of Q or Q[pi]/(pi^(p-1)+p).
///
/// A default-constructed Coefficient is an unbound zero that combines with
/// values of any field.
class Coefficient {
 public:
  Coefficient() : comps_(1) {}
  Coefficient(const PadicField& field, const mpq_class& q);
  Coefficient(const PadicField& field, long q) : Coefficient(field, mpq_class(q)) {}
  Coefficient(const PadicField& field, std::vector<mpq_class> comps);

  static Coefficient zero(const PadicField& field) { return Coefficient(field, 0L); }
  static Coefficient one(const PadicField& field) { return Coefficient(field, 1L); }
  /// pi^k for any integer k (pi = p when unramified).
  static Coefficient uniformizer_power(const PadicField& field, long k);

  const PadicField& field() const { return field_; }
  int e() const { return static_cast<int>(comps_.size()); }
  /// Component of pi^i; zero past the stored length.
  mpq_class component(int i) const;
  const std::vector<mpq_class>& components() const { return comps_; }

  bool is_zero() const;
  bool is_rational() const;  // all pi-components beyond the first vanish

  Valuation valuation() const;
  Coefficient inverse() const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);
  Coefficient& operator*=(const mpq_class& q);
  Coefficient& operator/=(const mpq_class& q);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend Coefficient operator*(Coefficient a, const mpq_class& q) { return a *= q; }
  friend Coefficient operator*(const mpq_class& q, Coefficient a) { return a *= q; }
  friend Coefficient operator/(Coefficient a, const mpq_class& q) { return a /= q; }

  friend bool operator==(const Coefficient& a, const Coefficient& b);
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  /// Canonical text: "a/b" for rationals, "c0 + c1*pi + c2*pi^2" otherwise.
  std::string to_string() const;
  static Coefficient parse(const PadicField& field, std::string_view text);

 private:
  void adopt_field(const PadicField& other);

  PadicField field_;
  std::vector<mpq_class> comps_;
};

/// Canonical residue of c in O_K / pi^m: each component c_i reduced to an
/// integer in [0, p^k_i) with k_i = ceil((m - i)/e).
Coefficient reduce_mod(const Coefficient& c, int m);

}  // namespace padic
