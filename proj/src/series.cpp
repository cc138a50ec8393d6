#include "padic/series.hpp"

#include <algorithm>

namespace padic {

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

namespace {

void require_same_field(const TruncSeries& a, const TruncSeries& b) {
  if (a.field().bound() && b.field().bound() && !(a.field() == b.field()))
    throw Error(ErrorCode::ContextMismatch, "series over different fields");
}

}  // namespace

TruncSeries::TruncSeries(const PadicField& field, std::vector<Coefficient> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  for (auto& c : c_)
    if (!c.field().bound()) c += Coefficient::zero(field_);
}

TruncSeries TruncSeries::zero(const PadicField& field, int order) {
  return TruncSeries(field, std::vector<Coefficient>(std::max(order, 0), Coefficient::zero(field)));
}

TruncSeries TruncSeries::one(const PadicField& field, int order) {
  TruncSeries s = zero(field, order);
  if (order > 0) s.c_[0] = Coefficient::one(field);
  return s;
}

TruncSeries TruncSeries::monomial(const PadicField& field, int degree, int order,
                                  const Coefficient& c) {
  TruncSeries s = zero(field, order);
  if (degree < order) s.c_[degree] = c;
  return s;
}

TruncSeries TruncSeries::from_rationals(const PadicField& field, const std::vector<mpq_class>& q) {
  std::vector<Coefficient> c;
  c.reserve(q.size());
  for (const auto& x : q) c.emplace_back(field, x);
  return TruncSeries(field, std::move(c));
}

TruncSeries TruncSeries::truncated(int order) const {
  TruncSeries r = *this;
  if (order < r.order()) r.c_.resize(std::max(order, 0));
  return r;
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Coefficient& c) { return c.is_zero(); });
}

Valuation TruncSeries::min_valuation(int from, int upto) const {
  if (upto < 0 || upto > order()) upto = order();
  Valuation v = kInfinite;
  for (int j = std::max(from, 0); j < upto; ++j) v = std::min(v, c_[j].valuation());
  return v;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  require_same_field(*this, o);
  if (o.order() < order()) c_.resize(o.order());
  for (int j = 0; j < order(); ++j) c_[j] += o.c_[j];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  require_same_field(*this, o);
  if (o.order() < order()) c_.resize(o.order());
  for (int j = 0; j < order(); ++j) c_[j] -= o.c_[j];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Coefficient& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

TruncSeries& TruncSeries::operator/=(const Coefficient& c) {
  if (c.is_zero()) throw Error(ErrorCode::DivisionByZero, "series divided by zero");
  const Coefficient inv = c.inverse();
  for (auto& x : c_) x *= inv;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  require_same_field(a, b);
  const int n = std::min(a.order(), b.order());
  const PadicField& field = a.field().bound() ? a.field() : b.field();
  TruncSeries r = TruncSeries::zero(field, n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) return false;
  for (int j = 0; j < a.order(); ++j)
    if (a.c_[j] != b.c_[j]) return false;
  return true;
}

TruncSeries delta(const TruncSeries& f) {
  TruncSeries r = f;
  for (int j = 0; j < r.order(); ++j) r[j] *= mpq_class(j);
  return r;
}

TruncSeries delta_pow(const TruncSeries& f, int k) {
  TruncSeries r = f;
  for (int i = 0; i < k; ++i) r = delta(r);
  return r;
}

TruncSeries d_dz(const TruncSeries& f) {
  std::vector<Coefficient> c;
  for (int j = 1; j < f.order(); ++j) c.push_back(f[j] * mpq_class(j));
  return TruncSeries(f.field(), std::move(c));
}

TruncSeries cartier(const TruncSeries& f) {
  const int p = f.field().p;
  std::vector<Coefficient> c;
  for (int j = 0; j * p < f.order(); ++j) c.push_back(f[j * p]);
  return TruncSeries(f.field(), std::move(c));
}

TruncSeries cartier_pow(const TruncSeries& f, int k) {
  TruncSeries r = f;
  for (int i = 0; i < k; ++i) r = cartier(r);
  return r;
}

TruncSeries subst_pow(const TruncSeries& f, long d, int target) {
  if (d < 1) throw Error(ErrorCode::BadParameters, "substitution exponent must be >= 1");
  long reliable = d * static_cast<long>(f.order());
  long n = target < 0 ? f.order() : target;
  n = std::min(n, reliable);
  TruncSeries r = TruncSeries::zero(f.field(), static_cast<int>(n));
  for (long j = 0; j * d < n; ++j) r[static_cast<int>(j * d)] = f[static_cast<int>(j)];
  return r;
}

TruncSeries subst_zpk(const TruncSeries& f, int k, int target) {
  if (k < 0) throw Error(ErrorCode::BadParameters, "k must be >= 0");
  return subst_pow(f, ipow(f.field().p, k), target);
}

TruncSeries invert_unit(const TruncSeries& f) {
  if (f.order() == 0) return f;
  if (f[0].is_zero()) throw Error(ErrorCode::NotAUnit, "constant term vanishes");
  const int n = f.order();
  const Coefficient inv0 = f[0].inverse();
  TruncSeries r = TruncSeries::zero(f.field(), n);
  r[0] = inv0;
  for (int j = 1; j < n; ++j) {
    Coefficient acc = Coefficient::zero(f.field());
    for (int l = 1; l <= j; ++l) {
      if (f[l].is_zero()) continue;
      acc += f[l] * r[j - l];
    }
    r[j] = -(acc * inv0);
  }
  return r;
}

TruncSeries log_derivative(const TruncSeries& f) {
  if (f.order() > 0 && f[0].is_zero()) throw Error(ErrorCode::NotAUnit, "constant term vanishes");
  return d_dz(f) * invert_unit(f);
}

TruncSeries hadamard(const TruncSeries& f, const TruncSeries& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<Coefficient> c;
  c.reserve(n);
  for (int j = 0; j < n; ++j) c.push_back(f[j] * g[j]);
  return TruncSeries(f.field().bound() ? f.field() : g.field(), std::move(c));
}

TruncSeries power(const TruncSeries& f, long k) {
  TruncSeries base = k < 0 ? invert_unit(f) : f;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  TruncSeries result = TruncSeries::one(f.field(), f.order());
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

int first_incongruence(const TruncSeries& f, const TruncSeries& g, int m, int upto) {
  if (upto > f.order() || upto > g.order())
    throw Error(ErrorCode::OrderExhausted, "congruence requested past the reliable order");
  for (int j = 0; j < upto; ++j) {
    Valuation v = (f[j] - g[j]).valuation();
    if (!is_infinite(v) && v < m) return j;
  }
  return -1;
}

bool congruent_mod(const TruncSeries& f, const TruncSeries& g, int m, int upto) {
  return first_incongruence(f, g, m, upto) < 0;
}

}  // namespace padic
