#include "padic/catalog.hpp"

#include <numeric>
#include <sstream>

namespace padic {

std::string_view to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::Hypergeometric: return "hypergeometric";
    case SeriesKind::Apery: return "apery";
    case SeriesKind::Bessel: return "bessel";
    case SeriesKind::Exponential: return "exponential";
    case SeriesKind::FFrak: return "ffrak";
  }
  return "unknown";
}

std::string SeriesSpec::name() const {
  switch (kind) {
    case SeriesKind::Hypergeometric: {
      std::string s = "hyp:";
      for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + alpha[i].get_str();
      return s;
    }
    case SeriesKind::Apery: return "apery";
    case SeriesKind::Bessel: return "bessel";
    case SeriesKind::Exponential: return "exp";
    case SeriesKind::FFrak: return "ffrak";
  }
  return "unknown";
}

SeriesSpec parse_series_spec(std::string_view text, const PadicContext& context) {
  SeriesSpec spec;
  spec.context = context;
  if (text == "apery") spec.kind = SeriesKind::Apery;
  else if (text == "bessel") spec.kind = SeriesKind::Bessel;
  else if (text == "exp" || text == "exponential") spec.kind = SeriesKind::Exponential;
  else if (text == "ffrak") spec.kind = SeriesKind::FFrak;
  else if (text.substr(0, 4) == "hyp:") {
    spec.kind = SeriesKind::Hypergeometric;
    std::string params(text.substr(4));
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        mpq_class q(item);
        q.canonicalize();
        spec.alpha.push_back(q);
      } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::ParseError, "bad hypergeometric parameter '" + item + "'");
      }
    }
    if (spec.alpha.empty()) throw Error(ErrorCode::ParseError, "hyp: needs at least one parameter");
  } else {
    throw Error(ErrorCode::ParseError, "unknown series '" + std::string(text) + "'");
  }
  return spec;
}

long common_denominator(const std::vector<mpq_class>& alpha) {
  long d = 1;
  for (const auto& a : alpha) d = std::lcm(d, a.get_den().get_si());
  return d;
}

mpq_class pochhammer(const mpq_class& x, int j) {
  mpq_class r(1);
  for (int i = 0; i < j; ++i) r *= x + i;
  return r;
}

std::vector<mpz_class> apery_numbers(int count) {
  std::vector<mpz_class> out;
  for (int n = 0; n < count; ++n) {
    mpz_class sum = 0;
    for (int k = 0; k <= n; ++k) {
      mpz_class a, b;
      mpz_bin_uiui(a.get_mpz_t(), n, k);
      mpz_bin_uiui(b.get_mpz_t(), n + k, k);
      mpz_class t = a * b;
      sum += t * t;
    }
    out.push_back(sum);
  }
  return out;
}

namespace {

RawTerm term(int zdeg, const std::vector<Coefficient>& poly) {
  return RawTerm{zdeg, poly};
}

std::vector<Coefficient> rationals(const PadicField& f, const std::vector<long>& v) {
  std::vector<Coefficient> out;
  for (long x : v) out.emplace_back(f, x);
  return out;
}

int multiplicative_order(long p, long d) {
  if (d == 1) return 1;
  long x = p % d;
  for (int h = 1; h <= d; ++h) {
    if (x == 1) return h;
    x = (x * p) % d;
  }
  return 1;
}

}  // namespace

CatalogEntry build(const SeriesSpec& spec) {
  const PadicField& field = spec.context.field;
  const int n = spec.context.trunc_order;
  const int p = field.p;
  CatalogEntry e;
  e.name = spec.name();
  switch (spec.kind) {
    case SeriesKind::Hypergeometric: {
      const long d = common_denominator(spec.alpha);
      std::vector<mpq_class> c(n);
      mpq_class fact(1);
      const int order = static_cast<int>(spec.alpha.size());
      for (int j = 0; j < n; ++j) {
        if (j > 0) fact *= j;
        mpq_class num(1);
        for (const auto& a : spec.alpha) num *= pochhammer(a, j);
        mpq_class den(1);
        for (int i = 0; i < order; ++i) den *= fact;
        c[j] = num / den;
      }
      e.series = TruncSeries::from_rationals(field, c);
      // H_alpha = delta^n - z prod (delta + alpha_i).
      Polynomial prod = Polynomial::constant(field, Coefficient::one(field));
      for (const auto& a : spec.alpha)
        prod = prod * Polynomial(field, {Coefficient(field, a), Coefficient::one(field)});
      std::vector<Coefficient> lead(order + 1, Coefficient::zero(field));
      lead[order] = Coefficient::one(field);
      std::vector<Coefficient> shifted;
      for (const auto& x : prod.coeffs()) shifted.push_back(-x);
      e.raw_operator = RawOperator{field, {term(0, lead), term(1, shifted)}};
      if (d % p == 0)
        e.warnings.push_back("p divides d_alpha = " + std::to_string(d) +
                             "; integrality is not expected");
      else
        e.period = multiplicative_order(p, d);
      e.period_note = "order of p modulo d_alpha = " + std::to_string(d);
      break;
    }
    case SeriesKind::Apery: {
      auto a = apery_numbers(n);
      std::vector<mpq_class> c(a.begin(), a.end());
      e.series = TruncSeries::from_rationals(field, c);
      // delta^3 - z(2 delta + 1)(17 delta^2 + 17 delta + 5) + z^2 (delta + 1)^3;
      // the z^2 sign is the one the Apery recurrence forces.
      e.raw_operator = RawOperator{field,
                                   {term(0, rationals(field, {0, 0, 0, 1})),
                                    term(1, rationals(field, {-5, -27, -51, -34})),
                                    term(2, rationals(field, {1, 3, 3, 1}))}};
      e.period_note = "h = 1";
      break;
    }
    case SeriesKind::Bessel: {
      if (field.ramification != Ramification::DworkEisenstein)
        throw Error(ErrorCode::BadContext, "Bessel series needs the Dwork context Q_p(pi_p)");
      if (p == 2) throw Error(ErrorCode::BadParameters, "Bessel series requires p != 2");
      // (-1)^m pi^(2m) / (4^m m!^2) at z^(2m); pi^2 = -p reduces this to a rational.
      TruncSeries s = TruncSeries::zero(field, n);
      const Coefficient pi2 = Coefficient::uniformizer_power(field, 2);
      Coefficient c = Coefficient::one(field);
      for (int m = 0; 2 * m < n; ++m) {
        if (m > 0) c = c * pi2 * mpq_class(-1, 4L * m * m);
        s[2 * m] = c;
      }
      e.series = s;
      // J_0(pi z) solves delta^2 + pi^2 z^2.
      e.raw_operator =
          RawOperator{field, {term(0, rationals(field, {0, 0, 1})), term(2, {pi2})}};
      e.period_note = "h = 1";
      break;
    }
    case SeriesKind::Exponential: {
      if (field.ramification != Ramification::DworkEisenstein)
        throw Error(ErrorCode::BadContext, "exponential series needs the Dwork context Q_p(pi_p)");
      TruncSeries s = TruncSeries::zero(field, n);
      const Coefficient pi = Coefficient::uniformizer_power(field, 1);
      Coefficient c = Coefficient::one(field);
      for (int j = 0; j < n; ++j) {
        if (j > 0) c = c * pi * mpq_class(1, j);
        s[j] = c;
      }
      e.series = s;
      e.raw_operator =
          RawOperator{field, {term(0, rationals(field, {0, 1})), term(1, {-pi})}};
      e.period_note = "h = 1";
      break;
    }
    case SeriesKind::FFrak: {
      std::vector<mpq_class> c(n);
      for (int j = 0; j < n; ++j) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), 2 * j, j);
        mpz_class pow64;
        mpz_ui_pow_ui(pow64.get_mpz_t(), 64, j);
        c[j] = mpq_class(-(b * b * b), (2 * j - 1) * pow64);
        c[j].canonicalize();
      }
      e.series = TruncSeries::from_rationals(field, c);
      e.period_note = "h = 1 (series only, no operator)";
      break;
    }
  }
  if (e.raw_operator) e.op = monicize(*e.raw_operator, n);
  return e;
}

namespace {

void require_integral(const TruncSeries& f) {
  for (int j = 0; j < f.order(); ++j) {
    const Valuation v = f[j].valuation();
    if (!is_infinite(v) && v < 0)
      throw Error(ErrorCode::IntegralityFailure,
                  "coefficient of z^" + std::to_string(j) + " has valuation " + std::to_string(v));
  }
}

TruncSeries truncation_below(const TruncSeries& f, long degree_limit) {
  TruncSeries t = TruncSeries::zero(f.field(), f.order());
  for (long j = 0; j < std::min<long>(degree_limit, f.order()); ++j) t[static_cast<int>(j)] = f[static_cast<int>(j)];
  return t;
}

}  // namespace

LucasReport p_lucas_check(const TruncSeries& f) {
  require_integral(f);
  const int p = f.field().p;
  const int n = f.order();
  const TruncSeries lhs = truncation_below(f, p) * subst_zpk(f, 1, n);
  LucasReport r;
  r.checked_order = n;
  r.first_failure = first_incongruence(f, lhs, f.field().e(), n);
  r.pass = r.first_failure < 0;
  r.note = "f(z)^p replaced by f(z^p): congruent mod p for integral coefficients";
  return r;
}

DworkReport dwork_congruence_check(const TruncSeries& f, int s) {
  if (f.field().ramification != Ramification::Unramified)
    throw Error(ErrorCode::BadContext, "Dwork congruence check runs in the unramified context");
  if (s < 1) throw Error(ErrorCode::BadParameters, "s must be >= 1");
  require_integral(f);
  const int p = f.field().p;
  const int n = f.order();
  const long ps = ipow(p, s);
  if (n < ps)
    throw Error(ErrorCode::OrderExhausted,
                "order " + std::to_string(n) + " < p^s = " + std::to_string(ps));
  const TruncSeries fs = truncation_below(f, ps);
  const TruncSeries fs1 = truncation_below(f, ps / p);
  const TruncSeries lhs = f * subst_zpk(fs1, 1, n);
  const TruncSeries rhs = fs * subst_zpk(f, 1, n);
  DworkReport r;
  r.s = s;
  r.checked_order = n;
  r.first_failure = first_incongruence(lhs, rhs, s, n);
  r.pass = r.first_failure < 0;
  return r;
}

}  // namespace padic
