#pragma once

#include <optional>
#include <vector>

#include "padic/matrix.hpp"
#include "padic/rational.hpp"

namespace padic {

/// One summand z^zdeg * P(delta) of an operator written with all z-factors on
/// the left; deltapoly holds c_0, c_1, ... of P.
struct RawTerm {
  int zdeg = 0;
  std::vector<Coefficient> deltapoly;
};

struct RawOperator {
  PadicField field;
  std::vector<RawTerm> terms;

  int order() const;
  /// Coefficient polynomial q_k(z) of delta^k.
  Polynomial delta_coefficient(int k) const;
};

/// Monic operator delta^n + a_1 delta^(n-1) + ... + a_n.
struct DiffOp {
  PadicField field;
  std::vector<TruncSeries> coeffs;  // a_1 .. a_n
  std::optional<std::vector<RationalFunction>> rational;

  int order() const { return static_cast<int>(coeffs.size()); }
  int series_order() const;
  /// a_i(0) = 0 for all i.
  bool is_mom() const;
  /// |a_i|_G <= 1 for all i; empty when no rational forms are known.
  std::optional<bool> gauss_norm_bounded() const;
};

DiffOp monicize(const RawOperator& raw, int order);
SeriesMatrix companion(const DiffOp& op);
/// delta^n f + sum a_i delta^(n-i) f.
TruncSeries apply(const DiffOp& op, const TruncSeries& f);
/// The solution in 1 + z K[[z]] of a MOM operator, to order N.
TruncSeries unit_solution(const DiffOp& op, int order);
/// Y with Y(0) = I and delta Y = A Y - Y A(0), for nilpotent A(0).
SeriesMatrix uniform_part(const SeriesMatrix& a, int order);

}  // namespace padic
