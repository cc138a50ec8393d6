#pragma once

#include <vector>

#include "padic/series.hpp"

namespace padic {

/// Dense square matrix of exact coefficients.
class ConstMatrix {
 public:
  ConstMatrix() = default;
  ConstMatrix(const PadicField& field, int n);
  static ConstMatrix identity(const PadicField& field, int n);

  int size() const { return n_; }
  const PadicField& field() const { return field_; }
  Coefficient& operator()(int i, int j) { return a_[i * n_ + j]; }
  const Coefficient& operator()(int i, int j) const { return a_[i * n_ + j]; }

  friend ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b);
  friend ConstMatrix operator+(const ConstMatrix& a, const ConstMatrix& b);
  friend ConstMatrix operator-(const ConstMatrix& a, const ConstMatrix& b);
  friend bool operator==(const ConstMatrix& a, const ConstMatrix& b);
  bool is_zero() const;

  /// Throws SingularMatrix.
  ConstMatrix inverse() const;

 private:
  PadicField field_;
  int n_ = 0;
  std::vector<Coefficient> a_;
};

/// Solve M x = b over the field by Gaussian elimination; throws SingularMatrix.
std::vector<Coefficient> solve_linear(std::vector<std::vector<Coefficient>> m,
                                      std::vector<Coefficient> b);

/// n x n matrix of truncated power series (row-major).
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(const PadicField& field, int n, int order);
  static SeriesMatrix identity(const PadicField& field, int n, int order);
  static SeriesMatrix constant(const ConstMatrix& c, int order);
  /// diag(1, s, s^2, ..., s^(n-1)).
  static SeriesMatrix geometric_diag(const Coefficient& s, int n, int order);

  int size() const { return n_; }
  int order() const;
  const PadicField& field() const { return field_; }
  TruncSeries& operator()(int i, int j) { return a_[i * n_ + j]; }
  const TruncSeries& operator()(int i, int j) const { return a_[i * n_ + j]; }

  /// Coefficient matrix of z^k.
  ConstMatrix coefficient(int k) const;
  SeriesMatrix truncated(int order) const;
  Valuation min_valuation() const;
  bool is_zero() const;
  /// First order k at which some entry has a nonzero coefficient, or -1.
  int first_nonzero_order() const;
  /// First order k at which some entry has negative valuation, or -1.
  int first_negative_valuation_order() const;

  SeriesMatrix& operator*=(const Coefficient& c);
  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(SeriesMatrix a, const Coefficient& c) { return a *= c; }
  friend SeriesMatrix operator*(const Coefficient& c, SeriesMatrix a) { return a *= c; }
  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b);

  template <class F>
  SeriesMatrix map(F&& f) const {
    SeriesMatrix r;
    r.field_ = field_;
    r.n_ = n_;
    r.a_.reserve(a_.size());
    for (const auto& s : a_) r.a_.push_back(f(s));
    return r;
  }

 private:
  PadicField field_;
  int n_ = 0;
  std::vector<TruncSeries> a_;
};

SeriesMatrix delta(const SeriesMatrix& m);
SeriesMatrix cartier(const SeriesMatrix& m);
SeriesMatrix cartier_pow(const SeriesMatrix& m, int k);
SeriesMatrix subst_zpk(const SeriesMatrix& m, int k, int target = -1);
/// Inverse as a series matrix; requires an invertible constant term.
SeriesMatrix inverse(const SeriesMatrix& m);

}  // namespace padic
