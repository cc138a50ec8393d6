#include "padic/matrix.hpp"

#include <algorithm>

namespace padic {

ConstMatrix::ConstMatrix(const PadicField& field, int n)
    : field_(field), n_(n), a_(static_cast<std::size_t>(n) * n, Coefficient::zero(field)) {}

ConstMatrix ConstMatrix::identity(const PadicField& field, int n) {
  ConstMatrix m(field, n);
  for (int i = 0; i < n; ++i) m(i, i) = Coefficient::one(field);
  return m;
}

ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b) {
  ConstMatrix r(a.field_, a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

ConstMatrix operator+(const ConstMatrix& a, const ConstMatrix& b) {
  ConstMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

ConstMatrix operator-(const ConstMatrix& a, const ConstMatrix& b) {
  ConstMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

bool operator==(const ConstMatrix& a, const ConstMatrix& b) {
  return a.n_ == b.n_ && a.a_ == b.a_;
}

bool ConstMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Coefficient& c) { return c.is_zero(); });
}

ConstMatrix ConstMatrix::inverse() const {
  ConstMatrix r(field_, n_);
  for (int col = 0; col < n_; ++col) {
    std::vector<std::vector<Coefficient>> m(n_, std::vector<Coefficient>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
    std::vector<Coefficient> b(n_, Coefficient::zero(field_));
    b[col] = Coefficient::one(field_);
    auto x = solve_linear(std::move(m), std::move(b));
    for (int i = 0; i < n_; ++i) r(i, col) = x[i];
  }
  return r;
}

std::vector<Coefficient> solve_linear(std::vector<std::vector<Coefficient>> m,
                                      std::vector<Coefficient> b) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::SingularMatrix, "singular linear system");
    std::swap(m[piv], m[c]);
    std::swap(b[piv], b[c]);
    const Coefficient inv = m[c][c].inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Coefficient f = m[r][c] * inv;
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Coefficient> x(n);
  for (int r = n - 1; r >= 0; --r) {
    Coefficient acc = b[r];
    for (int k = r + 1; k < n; ++k)
      if (!m[r][k].is_zero()) acc -= m[r][k] * x[k];
    x[r] = acc / m[r][r];
  }
  return x;
}

SeriesMatrix::SeriesMatrix(const PadicField& field, int n, int order)
    : field_(field), n_(n), a_(static_cast<std::size_t>(n) * n, TruncSeries::zero(field, order)) {}

SeriesMatrix SeriesMatrix::identity(const PadicField& field, int n, int order) {
  SeriesMatrix m(field, n, order);
  for (int i = 0; i < n; ++i) m(i, i) = TruncSeries::one(field, order);
  return m;
}

SeriesMatrix SeriesMatrix::constant(const ConstMatrix& c, int order) {
  SeriesMatrix m(c.field(), c.size(), order);
  for (int i = 0; i < c.size(); ++i)
    for (int j = 0; j < c.size(); ++j)
      if (order > 0) m(i, j)[0] = c(i, j);
  return m;
}

SeriesMatrix SeriesMatrix::geometric_diag(const Coefficient& s, int n, int order) {
  const PadicField& f = s.field();
  SeriesMatrix m(f, n, order);
  Coefficient x = Coefficient::one(f);
  for (int i = 0; i < n; ++i) {
    m(i, i) = TruncSeries::monomial(f, 0, order, x);
    x *= s;
  }
  return m;
}

int SeriesMatrix::order() const {
  int o = a_.empty() ? 0 : a_.front().order();
  for (const auto& s : a_) o = std::min(o, s.order());
  return o;
}

ConstMatrix SeriesMatrix::coefficient(int k) const {
  ConstMatrix c(field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (k < (*this)(i, j).order()) c(i, j) = (*this)(i, j)[k];
  return c;
}

SeriesMatrix SeriesMatrix::truncated(int order) const {
  return map([order](const TruncSeries& s) { return s.truncated(order); });
}

Valuation SeriesMatrix::min_valuation() const {
  Valuation v = kInfinite;
  for (const auto& s : a_) v = std::min(v, s.min_valuation());
  return v;
}

bool SeriesMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const TruncSeries& s) { return s.is_zero(); });
}

int SeriesMatrix::first_nonzero_order() const {
  for (int k = 0; k < order(); ++k)
    for (const auto& s : a_)
      if (!s[k].is_zero()) return k;
  return -1;
}

int SeriesMatrix::first_negative_valuation_order() const {
  for (int k = 0; k < order(); ++k)
    for (const auto& s : a_) {
      Valuation v = s[k].valuation();
      if (!is_infinite(v) && v < 0) return k;
    }
  return -1;
}

SeriesMatrix& SeriesMatrix::operator*=(const Coefficient& c) {
  for (auto& s : a_) s *= c;
  return *this;
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  const int order = std::min(a.order(), b.order());
  SeriesMatrix r(a.field_, a.n_, order);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += a(i, k) * b(k, j);
      }
    }
  return r;
}

bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
  return a.n_ == b.n_ && a.a_ == b.a_;
}

SeriesMatrix delta(const SeriesMatrix& m) {
  return m.map([](const TruncSeries& s) { return delta(s); });
}

SeriesMatrix cartier(const SeriesMatrix& m) {
  return m.map([](const TruncSeries& s) { return cartier(s); });
}

SeriesMatrix cartier_pow(const SeriesMatrix& m, int k) {
  return m.map([k](const TruncSeries& s) { return cartier_pow(s, k); });
}

SeriesMatrix subst_zpk(const SeriesMatrix& m, int k, int target) {
  return m.map([k, target](const TruncSeries& s) { return subst_zpk(s, k, target); });
}

SeriesMatrix inverse(const SeriesMatrix& m) {
  const int n = m.size();
  const int order = m.order();
  const PadicField& f = m.field();
  ConstMatrix m0_inv;
  try {
    m0_inv = m.coefficient(0).inverse();
  } catch (const Error&) {
    throw Error(ErrorCode::NotAUnit, "constant term of series matrix is singular");
  }
  // X_j = -M_0^{-1} sum_{l>=1} M_l X_{j-l}.
  std::vector<ConstMatrix> mk, xk;
  for (int k = 0; k < order; ++k) mk.push_back(m.coefficient(k));
  xk.push_back(m0_inv);
  for (int j = 1; j < order; ++j) {
    ConstMatrix acc(f, n);
    for (int l = 1; l <= j; ++l) {
      if (mk[l].is_zero()) continue;
      acc = acc + mk[l] * xk[j - l];
    }
    ConstMatrix neg(f, n);
    xk.push_back(neg - m0_inv * acc);
  }
  SeriesMatrix r(f, n, order);
  for (int j = 0; j < order; ++j)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) r(a, b)[j] = xk[j](a, b);
  return r;
}

}  // namespace padic
