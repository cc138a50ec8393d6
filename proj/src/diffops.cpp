#include "padic/diffops.hpp"

#include <algorithm>

namespace padic {

int RawOperator::order() const {
  int n = -1;
  for (const auto& t : terms) {
    for (int k = static_cast<int>(t.deltapoly.size()) - 1; k >= 0; --k)
      if (!t.deltapoly[k].is_zero()) {
        n = std::max(n, k);
        break;
      }
  }
  return n;
}

Polynomial RawOperator::delta_coefficient(int k) const {
  Polynomial q(field, {});
  for (const auto& t : terms) {
    if (k >= static_cast<int>(t.deltapoly.size()) || t.deltapoly[k].is_zero()) continue;
    q += Polynomial::monomial(field, t.zdeg, t.deltapoly[k]);
  }
  return q;
}

int DiffOp::series_order() const {
  int o = coeffs.empty() ? 0 : coeffs.front().order();
  for (const auto& a : coeffs) o = std::min(o, a.order());
  return o;
}

bool DiffOp::is_mom() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const TruncSeries& a) { return a.order() == 0 || a[0].is_zero(); });
}

std::optional<bool> DiffOp::gauss_norm_bounded() const {
  if (!rational) return std::nullopt;
  return std::all_of(rational->begin(), rational->end(),
                     [](const RationalFunction& r) { return r.gauss_norm_at_most_one(); });
}

DiffOp monicize(const RawOperator& raw, int order) {
  const int n = raw.order();
  if (n < 1) throw Error(ErrorCode::BadParameters, "operator must have order >= 1");
  const Polynomial lead = raw.delta_coefficient(n);
  if (lead.coeff(0).is_zero())
    throw Error(ErrorCode::LeadingNotUnit, "leading coefficient vanishes at z = 0");
  DiffOp op;
  op.field = raw.field;
  op.rational.emplace();
  for (int i = 1; i <= n; ++i) {
    RationalFunction a(raw.delta_coefficient(n - i), lead);
    op.coeffs.push_back(a.to_series(order));
    op.rational->push_back(std::move(a));
  }
  return op;
}

SeriesMatrix companion(const DiffOp& op) {
  const int n = op.order();
  const int order = op.series_order();
  SeriesMatrix a(op.field, n, order);
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = TruncSeries::one(op.field, order);
  for (int j = 0; j < n; ++j) a(n - 1, j) = -op.coeffs[n - 1 - j].truncated(order);
  return a;
}

TruncSeries apply(const DiffOp& op, const TruncSeries& f) {
  const int n = op.order();
  std::vector<TruncSeries> powers{f};
  for (int k = 1; k <= n; ++k) powers.push_back(delta(powers.back()));
  TruncSeries r = powers[n];
  for (int i = 1; i <= n; ++i) r += op.coeffs[i - 1] * powers[n - i];
  return r;
}

TruncSeries unit_solution(const DiffOp& op, int order) {
  if (!op.is_mom()) throw Error(ErrorCode::NotMOM, "some a_i(0) != 0");
  if (order > op.series_order())
    throw Error(ErrorCode::OrderExhausted, "operator coefficients known only to order " +
                                               std::to_string(op.series_order()));
  const int n = op.order();
  const PadicField& field = op.field;
  TruncSeries f = TruncSeries::zero(field, order);
  if (order == 0) return f;
  f[0] = Coefficient::one(field);
  // j^n f_j = -sum_{i, l>=1} a_{i,l} (j-l)^(n-i) f_{j-l}
  for (int j = 1; j < order; ++j) {
    Coefficient acc = Coefficient::zero(field);
    for (int l = 1; l <= j; ++l) {
      if (f[j - l].is_zero()) continue;
      mpq_class base(j - l);
      for (int i = 1; i <= n; ++i) {
        const Coefficient& a = op.coeffs[i - 1][l];
        if (a.is_zero()) continue;
        mpq_class w(1);
        for (int k = 0; k < n - i; ++k) w *= base;
        if (w == 0) continue;
        acc += a * f[j - l] * w;
      }
    }
    mpq_class jn(1);
    for (int k = 0; k < n; ++k) jn *= j;
    f[j] = -acc / jn;
  }
  return f;
}

SeriesMatrix uniform_part(const SeriesMatrix& a, int order) {
  const int n = a.size();
  const PadicField& field = a.field();
  if (order > a.order())
    throw Error(ErrorCode::OrderExhausted, "matrix known only to order " + std::to_string(a.order()));
  const ConstMatrix a0 = a.coefficient(0);
  ConstMatrix pow = a0;
  for (int k = 1; k < n; ++k) pow = pow * a0;
  if (!pow.is_zero()) throw Error(ErrorCode::NotNilpotent, "A(0)^n != 0");

  std::vector<ConstMatrix> ak, yk;
  for (int k = 0; k < order; ++k) ak.push_back(a.coefficient(k));
  yk.push_back(ConstMatrix::identity(field, n));
  // Sylvester system per j: j Y_j + Y_j A0 - A0 Y_j = sum_{l>=1} A_l Y_{j-l},
  // unknowns Y_j(r, c) flattened to index r*n + c.
  const int dim = n * n;
  for (int j = 1; j < order; ++j) {
    ConstMatrix rhs(field, n);
    for (int l = 1; l <= j; ++l) {
      if (ak[l].is_zero()) continue;
      rhs = rhs + ak[l] * yk[j - l];
    }
    if (rhs.is_zero()) {
      yk.push_back(ConstMatrix(field, n));
      continue;
    }
    std::vector<std::vector<Coefficient>> m(dim, std::vector<Coefficient>(dim, Coefficient::zero(field)));
    std::vector<Coefficient> b(dim);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const int row = r * n + c;
        b[row] = rhs(r, c);
        m[row][row] += Coefficient(field, j);
        for (int k = 0; k < n; ++k) {
          m[row][r * n + k] += a0(k, c);   // (Y A0)(r,c) = sum_k Y(r,k) A0(k,c)
          m[row][k * n + c] -= a0(r, k);   // (A0 Y)(r,c) = sum_k A0(r,k) Y(k,c)
        }
      }
    auto x = solve_linear(std::move(m), std::move(b));
    ConstMatrix y(field, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) y(r, c) = x[r * n + c];
    yk.push_back(std::move(y));
  }
  SeriesMatrix out(field, n, order);
  for (int j = 0; j < order; ++j)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) out(r, c)[j] = yk[j](r, c);
  return out;
}

}  // namespace padic
