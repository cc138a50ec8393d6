#include "padic/rational.hpp"

#include <algorithm>

namespace padic {

Polynomial::Polynomial(const PadicField& field, std::vector<Coefficient> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  for (auto& c : c_)
    if (!c.field().bound()) c += Coefficient::zero(field_);
  trim();
}

Polynomial Polynomial::constant(const PadicField& field, const Coefficient& c) {
  return Polynomial(field, {c});
}

Polynomial Polynomial::monomial(const PadicField& field, int degree, const Coefficient& c) {
  std::vector<Coefficient> v(degree + 1, Coefficient::zero(field));
  v[degree] = c;
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::from_rationals(const PadicField& field, const std::vector<mpq_class>& q) {
  std::vector<Coefficient> v;
  for (const auto& x : q) v.emplace_back(field, x);
  return Polynomial(field, std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Coefficient Polynomial::coeff(int j) const {
  return j >= 0 && j < static_cast<int>(c_.size()) ? c_[j] : Coefficient::zero(field_);
}

Valuation Polynomial::valuation() const {
  Valuation v = kInfinite;
  for (const auto& c : c_) v = std::min(v, c.valuation());
  return v;
}

TruncSeries Polynomial::to_series(int order) const {
  TruncSeries s = TruncSeries::zero(field_, order);
  for (int j = 0; j < std::min(order, degree() + 1); ++j) s[j] = c_[j];
  return s;
}

Polynomial Polynomial::subst_pow(long d) const {
  if (is_zero()) return *this;
  std::vector<Coefficient> v(static_cast<std::size_t>(degree()) * d + 1, Coefficient::zero(field_));
  for (int j = 0; j <= degree(); ++j) v[static_cast<std::size_t>(j) * d] = c_[j];
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!field_.bound()) field_ = o.field_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coefficient::zero(field_));
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Coefficient& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const PadicField& field = a.field_.bound() ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return Polynomial(field, {});
  std::vector<Coefficient> v(a.c_.size() + b.c_.size() - 1, Coefficient::zero(field));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(field, std::move(v));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t j = 0; j < a.c_.size(); ++j)
    if (a.c_[j] != b.c_[j]) return false;
  return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const PadicField& field = field_.bound() ? field_ : d.field_;
  Polynomial r = *this;
  if (r.degree() < d.degree()) return {Polynomial(field, {}), r};
  std::vector<Coefficient> q(r.degree() - d.degree() + 1, Coefficient::zero(field));
  const Coefficient lead_inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const Coefficient t = r.leading() * lead_inv;
    q[shift] = t;
    for (int j = 0; j <= d.degree(); ++j) r.c_[j + shift] -= t * d.c_[j];
    r.c_.pop_back();  // leading term cancels exactly
    r.trim();
  }
  return {Polynomial(field, std::move(q)), r};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = 0; j <= degree(); ++j) {
    if (c_[j].is_zero()) continue;
    std::string c = c_[j].to_string();
    if (!c_[j].is_rational() || c.find(' ') != std::string::npos) c = "(" + c + ")";
    std::string term = j == 0 ? c : (c == "1" ? "" : c == "-1" ? "-" : c + "*") +
                                         (j == 1 ? std::string("z") : "z^" + std::to_string(j));
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  normalize();
}

RationalFunction RationalFunction::constant(const PadicField& field, const Coefficient& c) {
  return {Polynomial::constant(field, c), Polynomial::constant(field, Coefficient::one(field))};
}

RationalFunction RationalFunction::polynomial(Polynomial p) {
  PadicField f = p.field();
  return {std::move(p), Polynomial::constant(f, Coefficient::one(f))};
}

void RationalFunction::normalize() {
  const PadicField f = field();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(f, Coefficient::one(f));
    return;
  }
  // Cancel common powers of z, then divide out a common polynomial factor.
  int shift = 0;
  while (num_.coeff(shift).is_zero() && den_.coeff(shift).is_zero()) ++shift;
  if (shift > 0) {
    num_ = Polynomial(f, std::vector<Coefficient>(num_.coeffs().begin() + shift, num_.coeffs().end()));
    den_ = Polynomial(f, std::vector<Coefficient>(den_.coeffs().begin() + shift, den_.coeffs().end()));
  }
  Polynomial a = num_, b = den_;
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.degree() > 0) {
    num_ = num_.divmod(a).first;
    den_ = den_.divmod(a).first;
  }
  Coefficient scale = den_.coeff(0).is_zero() ? den_.leading() : den_.coeff(0);
  const Coefficient inv = scale.inverse();
  num_ *= inv;
  den_ *= inv;
}

Valuation RationalFunction::gauss_valuation() const {
  if (num_.is_zero()) return kInfinite;
  return num_.valuation() - den_.valuation();
}

bool RationalFunction::gauss_norm_is_one() const { return gauss_valuation() == 0; }

bool RationalFunction::gauss_norm_at_most_one() const {
  Valuation v = gauss_valuation();
  return is_infinite(v) || v >= 0;
}

bool RationalFunction::in_k0() const {
  const Coefficient b0 = den_.coeff(0);
  if (b0.is_zero()) return false;
  const Valuation v0 = b0.valuation();
  for (const auto& b : den_.coeffs())
    if (!b.is_zero() && b.valuation() < v0) return false;
  return true;
}

TruncSeries RationalFunction::to_series(int order) const {
  if (den_.coeff(0).is_zero()) throw Error(ErrorCode::NotAUnit, "denominator vanishes at 0");
  return num_.to_series(order) * invert_unit(den_.to_series(order));
}

RationalFunction RationalFunction::subst_pow(long d) const {
  return {num_.subst_pow(d), den_.subst_pow(d)};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0 && den_.coeff(0) == Coefficient::one(field())) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::vector<RationalFunction> pade_candidates(const TruncSeries& g, int total) {
  const PadicField f = g.field();
  const int len = total + 1;
  if (len > g.order()) throw Error(ErrorCode::OrderExhausted, "Padé window exceeds series order");
  std::vector<RationalFunction> out;
  std::vector<Coefficient> head(g.coeffs().begin(), g.coeffs().begin() + len);
  Polynomial r0 = Polynomial::monomial(f, len, Coefficient::one(f));
  Polynomial r1(f, std::move(head));
  Polynomial t0(f, {});
  Polynomial t1 = Polynomial::constant(f, Coefficient::one(f));
  if (r1.is_zero()) {
    out.push_back(RationalFunction::constant(f, Coefficient::zero(f)));
    return out;
  }
  // Invariant: r_i = t_i * g mod z^len, deg t_i = len - deg r_{i-1}.
  while (!r1.is_zero() && t1.degree() <= total) {
    if (r1.degree() + t1.degree() <= total && !t1.coeff(0).is_zero())
      out.emplace_back(r1, t1);
    auto [q, r2] = r0.divmod(r1);
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return out;
}

std::vector<RationalFunction> pade_search(const TruncSeries& g, int deg_bound) {
  std::vector<RationalFunction> out;
  const int max_total = std::min(2 * deg_bound, g.order() - 1);
  for (int total = 0; total <= max_total; ++total) {
    for (auto& c : pade_candidates(g, total)) {
      if (c.num().degree() > deg_bound || c.den().degree() > deg_bound) continue;
      bool seen = std::any_of(out.begin(), out.end(), [&](const RationalFunction& o) {
        return o.num() == c.num() && o.den() == c.den();
      });
      if (seen) continue;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::optional<RationalFunction> modular_certificate(const TruncSeries& g, int m, int deg_bound) {
  const PadicField f = g.field();
  const int n = g.order();
  const int d = std::max(0, std::min(deg_bound, n - 1));
  for (int j = 0; j < n; ++j) {
    const Valuation v = g[j].valuation();
    if (!is_infinite(v) && v < 0)
      throw Error(ErrorCode::NegativeValuation, "modular reconstruction needs an integral series");
  }
  auto small = [m](const Coefficient& c) { return reduce_mod(c, m); };

  // Unknowns b_1..b_d of B = 1 + b_1 z + ... ; equation j > d says the
  // z^j coefficient of g B vanishes mod pi^m.
  const int rows = n - 1 - d;
  std::vector<std::vector<Coefficient>> a(std::max(rows, 0), std::vector<Coefficient>(d));
  std::vector<Coefficient> rhs(std::max(rows, 0));
  for (int r = 0; r < rows; ++r) {
    const int j = d + 1 + r;
    for (int l = 1; l <= d; ++l) a[r][l - 1] = small(g[j - l]);
    rhs[r] = small(-g[j]);
  }
  std::vector<int> col(d);
  for (int c = 0; c < d; ++c) col[c] = c;

  // Elimination over O / pi^m, always pivoting on the entry of least valuation.
  int rank = 0;
  for (; rank < std::min(rows, d); ++rank) {
    int pr = -1, pc = -1;
    Valuation best = m;
    for (int r = rank; r < rows; ++r)
      for (int c = rank; c < d; ++c) {
        const Valuation v = a[r][c].valuation();
        if (v < best) best = v, pr = r, pc = c;
      }
    if (pr < 0) break;
    std::swap(a[rank], a[pr]);
    std::swap(rhs[rank], rhs[pr]);
    if (pc != rank) {
      for (auto& row : a) std::swap(row[rank], row[pc]);
      std::swap(col[rank], col[pc]);
    }
    const Coefficient inv = a[rank][rank].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][rank].is_zero()) continue;
      const Coefficient factor = a[r][rank] * inv;
      for (int c = rank; c < d; ++c) a[r][c] = small(a[r][c] - factor * a[rank][c]);
      rhs[r] = small(rhs[r] - factor * rhs[rank]);
    }
  }
  for (int r = rank; r < rows; ++r) {
    const Valuation v = rhs[r].valuation();
    if (!is_infinite(v) && v < m) return std::nullopt;
  }
  std::vector<Coefficient> x(d, Coefficient::zero(f));
  for (int r = rank - 1; r >= 0; --r) {
    Coefficient acc = rhs[r];
    for (int c = r + 1; c < d; ++c) acc -= a[r][c] * x[c];
    acc = small(acc);
    if (!acc.is_zero() && acc.valuation() < a[r][r].valuation()) return std::nullopt;
    x[r] = small(acc / a[r][r]);
  }
  std::vector<Coefficient> den(d + 1, Coefficient::zero(f));
  den[0] = Coefficient::one(f);
  for (int c = 0; c < d; ++c) den[col[c] + 1] = x[c];
  const Polynomial b(f, den);
  std::vector<Coefficient> head(g.coeffs().begin(), g.coeffs().begin() + d + 1);
  const Polynomial prod = Polynomial(f, std::move(head)) * b;
  std::vector<Coefficient> num(d + 1, Coefficient::zero(f));
  for (int j = 0; j <= d; ++j) num[j] = small(prod.coeff(j));
  return RationalFunction(Polynomial(f, std::move(num)), b);
}

}  // namespace padic
