#include "padic/frobenius.hpp"

#include <algorithm>

namespace padic {

namespace {

int ceil_div(long a, long b) { return static_cast<int>((a + b - 1) / b); }

// p^k capped just above `cap`, so orders never overflow.
long capped_pow(long p, long k, long cap) {
  long r = 1;
  for (long i = 0; i < k; ++i) {
    r *= p;
    if (r > cap) return cap + 1;
  }
  return r;
}

void require_unit_constant(const TruncSeries& f) {
  if (f.order() == 0 || f[0] != Coefficient::one(f.field()))
    throw Error(ErrorCode::BadParameters, "series must satisfy f(0) = 1");
}

}  // namespace

AntecedentData compute_antecedent(const DiffOp& op, int order) {
  if (!op.is_mom()) throw Error(ErrorCode::NotMOM, "operator is not MOM at zero");
  if (op.series_order() < order)
    throw Error(ErrorCode::OrderExhausted, "operator known only to order " +
                                               std::to_string(op.series_order()));
  const PadicField& field = op.field;
  const int n = op.order();
  const int p = field.p;
  const SeriesMatrix a = companion(op).truncated(order);

  AntecedentData d;
  d.uniform = uniform_part(a, order);
  d.cartier_uniform = cartier(d.uniform);
  const int low = d.cartier_uniform.order();
  const SeriesMatrix a0 = SeriesMatrix::constant(a.coefficient(0), low);
  const Coefficient inv_p(field, mpq_class(1, p));
  d.frobenius = (delta(d.cartier_uniform) + inv_p * (d.cartier_uniform * a0)) *
                inverse(d.cartier_uniform);
  d.h0 = d.uniform * inverse(subst_zpk(d.cartier_uniform, 1, order));
  d.passage = d.h0 * SeriesMatrix::geometric_diag(Coefficient(field, p), n, order);

  // L_1 = delta^n - b_nn delta^(n-1) - (1/p) b_n,n-1 delta^(n-2) - ... - (1/p^(n-1)) b_n1.
  d.next.field = field;
  mpq_class scale(1);
  for (int k = 1; k <= n; ++k) {
    TruncSeries b = d.frobenius(n - 1, n - k);
    d.next.coeffs.push_back(-(b * Coefficient(field, 1 / scale)));
    scale *= p;
  }
  return d;
}

AntecedentLevel antecedent_step(const DiffOp& op, int order) {
  auto chain = antecedent_chain(op, 1, order);
  return std::move(chain.front());
}

std::vector<AntecedentLevel> antecedent_chain(const DiffOp& op, int levels, int order) {
  std::vector<AntecedentLevel> out;
  if (!op.is_mom()) throw Error(ErrorCode::NotMOM, "operator is not MOM at zero");
  if (levels <= 0) return out;
  const PadicField& field = op.field;
  const int p = field.p;
  const int n = op.order();
  if (ceil_div(order, capped_pow(p, levels, order)) < 2)
    throw Error(ErrorCode::OrderExhausted,
                "order " + std::to_string(order) + " cannot support " + std::to_string(levels) +
                    " levels at p = " + std::to_string(p));

  const SeriesMatrix a = companion(op).truncated(order);
  const TruncSeries f = unit_solution(op, order);

  DiffOp current = op;
  int current_order = order;
  SeriesMatrix uniform_a;
  SeriesMatrix passage;
  for (int level = 1; level <= levels; ++level) {
    AntecedentData d = compute_antecedent(current, current_order);
    if (level == 1) {
      uniform_a = d.uniform;
      passage = d.passage;
    } else {
      passage = passage * subst_zpk(d.passage, level - 1, order);
    }

    AntecedentLevel lv;
    lv.level = level;
    lv.op = d.next;
    lv.operator_order = lv.op.series_order();
    lv.companion = companion(lv.op);
    lv.passage = passage;
    lv.checked_order = passage.order();

    const Coefficient pm(field, mpq_class(capped_pow(p, level, 1L << 40)));
    lv.residual = delta(passage) - a * passage +
                  pm * (passage * subst_zpk(lv.companion, level, order));
    lv.residual_min_valuation = lv.residual.min_valuation();
    if (int k = lv.residual.first_nonzero_order(); k >= 0)
      throw VerificationError("passage identity fails at level " + std::to_string(level), k);

    // Closed form of the composed passage matrix.
    const SeriesMatrix closed =
        uniform_a * inverse(subst_zpk(cartier_pow(uniform_a, level), level, order)) *
        SeriesMatrix::geometric_diag(pm, n, order);
    if (!(closed.truncated(lv.checked_order) == passage.truncated(lv.checked_order)))
      throw VerificationError("composed passage differs from closed form at level " +
                                  std::to_string(level),
                              (closed - passage).first_nonzero_order());

    const ConstMatrix expected0 = SeriesMatrix::geometric_diag(pm, n, 1).coefficient(0);
    if (!(passage.coefficient(0) == expected0))
      throw VerificationError("passage constant term is not diag(1, p^m, ...)", 0);

    lv.passage_min_valuation = passage.min_valuation();
    if (int k = passage.first_negative_valuation_order(); k >= 0)
      throw VerificationError("passage matrix is not integral at level " + std::to_string(level), k);

    if (!lv.op.is_mom())
      throw VerificationError("antecedent operator is not MOM at level " + std::to_string(level), 0);

    lv.solution = cartier_pow(f, level);
    lv.solution_residual = apply(lv.op, lv.solution.truncated(lv.operator_order));
    lv.solution_residual_min_valuation = lv.solution_residual.min_valuation();
    for (int j = 0; j < lv.solution_residual.order(); ++j)
      if (!lv.solution_residual[j].is_zero())
        throw VerificationError("Lambda_p^m(f) is not annihilated at level " + std::to_string(level), j);
    const TruncSeries via_chain = unit_solution(lv.op, lv.operator_order);
    if (!(via_chain == lv.solution.truncated(lv.operator_order)))
      throw VerificationError("unit solution of L_m differs from Lambda_p^m(f)", 0);

    out.push_back(std::move(lv));
    current = d.next;
    current_order = current.series_order();
  }
  return out;
}

mpq_class root_of_unity_constant(int p, int j) {
  mpz_class sum = 0;
  for (int k = 0; k <= j; k += p) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), j, k);
    if ((j - k) % 2 == 0) sum += binom;
    else sum -= binom;
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), j);
  mpq_class r(sum, fact);
  r.canonicalize();
  return r;
}

std::vector<SeriesMatrix> higher_derivative_matrices(const SeriesMatrix& a, int count) {
  std::vector<SeriesMatrix> out;
  const int n = a.size();
  const int order = a.order();
  out.push_back(SeriesMatrix::identity(a.field(), n, order));
  for (int j = 0; j + 1 < count; ++j) {
    const SeriesMatrix& aj = out.back();
    const SeriesMatrix shifted =
        a - Coefficient(a.field(), j) * SeriesMatrix::identity(a.field(), n, order);
    out.push_back(delta(aj) + aj * shifted);
  }
  return out;
}

IntegralityReport integrality_check(const TruncSeries& f, int level) {
  require_unit_constant(f);
  IntegralityReport r;
  r.level = level;
  const long limit = capped_pow(f.field().p, level, f.order()) - 1;
  r.checked_upto = static_cast<int>(std::min<long>(limit, f.order() - 1));
  for (int j = 1; j <= r.checked_upto; ++j) {
    const Valuation v = f[j].valuation();
    r.min_valuation = std::min(r.min_valuation, v);
    if (!is_infinite(v) && v < 0 && r.first_failure < 0) r.first_failure = j;
  }
  r.pass = r.first_failure < 0;
  return r;
}

int first_rational_mismatch(const RationalFunction& r, const TruncSeries& g, int m, int upto) {
  const Polynomial& num = r.num();
  const Polynomial& den = r.den();
  if (den.coeff(0).is_zero()) return 0;
  const Coefficient inv0 = den.coeff(0).inverse();
  std::vector<Coefficient> s;
  s.reserve(upto);
  for (int j = 0; j < upto; ++j) {
    Coefficient acc = num.coeff(j);
    for (int l = 1; l <= std::min(j, den.degree()); ++l) {
      const Coefficient& b = den.coeffs()[l];
      if (!b.is_zero()) acc -= b * s[j - l];
    }
    acc *= inv0;
    const Valuation v = (acc - g[j]).valuation();
    if (!is_infinite(v) && v < m) return j;
    s.push_back(std::move(acc));
  }
  return -1;
}

namespace {

Residual residual_of(const TruncSeries& diff, int level) {
  Residual r;
  for (int j = 0; j < diff.order(); ++j) {
    const Valuation v = diff[j].valuation();
    r.min_valuation = std::min(r.min_valuation, v);
    if (!is_infinite(v) && v < level && r.first_failure < 0) r.first_failure = j;
  }
  return r;
}

enum class SearchOutcome { Found, NoCandidate, OnlyOutsideK0 };

SearchOutcome run_search(const CertificateSearch& s, Certificate& out) {
  const TruncSeries& g = s.target;
  bool congruent_outside_k0 = false;
  const int max_total = std::min(2 * s.deg_bound, g.order() - 1);
  std::vector<RationalFunction> tried;
  for (int total = 0; total <= max_total; ++total) {
    for (auto& cand : pade_candidates(g, total)) {
      if (cand.num().degree() > s.deg_bound || cand.den().degree() > s.deg_bound) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](const RationalFunction& t) {
            return t.num() == cand.num() && t.den() == cand.den();
          }))
        continue;
      tried.push_back(cand);
      if (first_rational_mismatch(cand, g, s.level, g.order()) >= 0) continue;
      if (s.require_unit_norm && !cand.gauss_norm_is_one()) continue;
      if (!cand.in_k0()) {
        congruent_outside_k0 = true;
        continue;
      }
      const Residual res = s.verify(cand);
      if (res.first_failure >= 0) continue;
      out.kind = s.kind;
      out.level = s.level;
      out.rational = cand;
      out.verified_order = g.order();
      out.min_residual_valuation = res.min_valuation;
      return SearchOutcome::Found;
    }
  }
  return congruent_outside_k0 ? SearchOutcome::OnlyOutsideK0 : SearchOutcome::NoCandidate;
}

}  // namespace

std::optional<Certificate> try_find_certificate(const CertificateSearch& search) {
  Certificate c;
  if (run_search(search, c) == SearchOutcome::Found) return c;
  return std::nullopt;
}

Certificate find_certificate(const CertificateSearch& search) {
  Certificate c;
  switch (run_search(search, c)) {
    case SearchOutcome::Found:
      return c;
    case SearchOutcome::OnlyOutsideK0:
      throw Error(ErrorCode::NotInK0, search.kind + ": congruent candidates have poles in the open unit disc");
    case SearchOutcome::NoCandidate:
      break;
  }
  throw Error(ErrorCode::ReconstructionFailed,
              search.kind + ": no certificate with degrees <= " + std::to_string(search.deg_bound));
}

Certificate ratio_certificate(const TruncSeries& f, int level, int deg_bound) {
  require_unit_constant(f);
  const int n = f.order();
  const TruncSeries u = subst_zpk(cartier(f), 1, n);
  CertificateSearch s;
  s.kind = "ratio";
  s.level = level;
  s.deg_bound = deg_bound;
  s.target = f * invert_unit(u);
  s.verify = [f, u, level, n](const RationalFunction& r) {
    return residual_of(r.to_series(n) * u - f, level);
  };
  return find_certificate(s);
}

Certificate period_ratio_certificate(const TruncSeries& f, int period, int k, int deg_bound) {
  require_unit_constant(f);
  if (period < 1 || k < 0) throw Error(ErrorCode::BadParameters, "period >= 1 and k >= 0 required");
  const int steps = period * k;
  const TruncSeries lam = cartier_pow(f, steps);
  const int n = lam.order();
  if (n < 2)
    throw Error(ErrorCode::OrderExhausted, "Lambda_p^" + std::to_string(steps) + " leaves order " +
                                               std::to_string(n));
  const TruncSeries base = f.truncated(n);
  CertificateSearch s;
  s.kind = "period_ratio";
  s.level = steps;
  s.deg_bound = deg_bound;
  s.target = lam * invert_unit(base);
  s.verify = [lam, base, steps, n](const RationalFunction& r) {
    return residual_of(r.to_series(n) * base - lam, steps);
  };
  return find_certificate(s);
}

Certificate frobenius_ratio_certificate(const TruncSeries& f, int period, int k, int deg_bound) {
  require_unit_constant(f);
  if (period < 1 || k < 0) throw Error(ErrorCode::BadParameters, "period >= 1 and k >= 0 required");
  const int steps = period * k;
  const int n = f.order();
  const long d = capped_pow(f.field().p, steps, n);
  const TruncSeries u = subst_pow(f, d, n);
  CertificateSearch s;
  s.kind = "frobenius_ratio";
  s.level = steps;
  s.deg_bound = deg_bound;
  s.target = f * invert_unit(u);
  s.verify = [f, u, steps, n](const RationalFunction& r) {
    return residual_of(r.to_series(n) * u - f, steps);
  };
  return find_certificate(s);
}

RationalFunction frobenius_quotient(const RationalFunction& next, const RationalFunction& prev,
                                    int p, int period) {
  return next / prev.subst_pow(ipow(p, period));
}

Certificate logderiv_certificate(const TruncSeries& f, int period, int level, int deg_bound) {
  (void)period;  // recorded by callers; the congruence itself is mod pi^level
  const TruncSeries g = log_derivative(f);
  CertificateSearch s;
  s.kind = "logderiv";
  s.level = level;
  s.deg_bound = deg_bound;
  s.require_unit_norm = false;
  s.target = g;
  s.verify = [g, level](const RationalFunction& r) {
    return residual_of(r.to_series(g.order()) - g, level);
  };
  return find_certificate(s);
}

Certificate search_doubling(const std::function<Certificate(int)>& attempt, int start, int cap) {
  int deg = std::max(start, 0);
  for (;;) {
    try {
      return attempt(deg);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ReconstructionFailed || deg >= cap) throw;
    }
    deg = std::min(cap, deg == 0 ? 1 : 2 * deg);
  }
}

}  // namespace padic
