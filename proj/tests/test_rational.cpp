#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "support.hpp"

using namespace padic;
using namespace testing_support;

namespace {

const PadicField kU3(3, Ramification::Unramified);
const PadicField kU5(5, Ramification::Unramified);
const PadicField kU7(7, Ramification::Unramified);
const PadicField kD3(3, Ramification::DworkEisenstein);

Polynomial random_poly(const PadicField& f, int deg) {
  std::vector<Coefficient> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_coefficient(f));
  return Polynomial(f, c);
}

// Every residue class of O_K / pi^m, one representative each.
std::vector<Coefficient> residues(const PadicField& f, int m) {
  std::vector<Coefficient> out{Coefficient::zero(f)};
  for (int i = 0; i < f.e(); ++i) {
    const int k = (m - i + f.e() - 1) / f.e();
    if (k <= 0) continue;
    const long count = ipow(f.p, k);
    std::vector<Coefficient> next;
    for (const auto& base : out)
      for (long a = 0; a < count; ++a) next.push_back(base + Coefficient(f, a) * Coefficient::uniformizer_power(f, i));
    out = std::move(next);
  }
  return out;
}

// Exhaustive search for B = 1 + b_1 z + ... + b_d z^d with g B polynomial of
// degree <= d modulo pi^m.
bool brute_force_exists(const TruncSeries& g, int m, int d) {
  const auto res = residues(g.field(), m);
  std::vector<Coefficient> b(d + 1, Coefficient::zero(g.field()));
  b[0] = Coefficient::one(g.field());
  std::function<bool(int)> rec = [&](int i) {
    if (i > d) {
      for (int j = d + 1; j < g.order(); ++j) {
        Coefficient acc = Coefficient::zero(g.field());
        for (int l = 0; l <= d; ++l) acc += b[l] * g[j - l];
        const Valuation v = acc.valuation();
        if (!is_infinite(v) && v < m) return false;
      }
      return true;
    }
    for (const auto& r : res) {
      b[i] = r;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(1);
}

TruncSeries random_integral_series(const PadicField& f, int n) {
  std::vector<Coefficient> c;
  for (int j = 0; j < n; ++j) c.push_back(random_coefficient(f, 10, 1));
  return TruncSeries(f, c);
}

}  // namespace

TEST_CASE("polynomial division") {
  for (int trial = 0; trial < 20; ++trial) {
    const PadicField& f = trial % 2 ? kU5 : kD3;
    const Polynomial a = random_poly(f, static_cast<int>(uniform(0, 7)));
    Polynomial b = random_poly(f, static_cast<int>(uniform(0, 4)));
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK(poly(kU5, {0, 0}).degree() == -1);
}

TEST_CASE("rational function normalization and equality") {
  const RationalFunction r(poly(kU5, {1, 0, -1}), poly(kU5, {1, -1}));
  CHECK(r == RationalFunction::polynomial(poly(kU5, {1, 1})));
  CHECK(r.den().degree() == 0);
  const RationalFunction s(poly(kU5, {2}), poly(kU5, {4, -4}));
  CHECK(s.den().coeff(0) == Coefficient::one(kU5));
  CHECK(s == RationalFunction(poly(kU5, {1}), poly(kU5, {2, -2})));
  const RationalFunction a(poly(kU5, {1}), poly(kU5, {1, -1}));
  const RationalFunction b(poly(kU5, {1}), poly(kU5, {1, 1}));
  CHECK(a + b == RationalFunction(poly(kU5, {2}), poly(kU5, {1, 0, -1})));
  CHECK(a * b == RationalFunction(poly(kU5, {1}), poly(kU5, {1, 0, -1})));
  CHECK(a / a == RationalFunction::constant(kU5, Coefficient::one(kU5)));
  CHECK(a.to_series(6) == geometric(kU5, 6));
}

TEST_CASE("rational arithmetic agrees with series arithmetic") {
  for (int trial = 0; trial < 10; ++trial) {
    const PadicField& f = trial % 2 ? kU3 : kD3;
    Polynomial d1 = random_poly(f, 2), d2 = random_poly(f, 2);
    if (d1.coeff(0).is_zero() || d2.coeff(0).is_zero()) continue;
    const RationalFunction a(random_poly(f, 2), d1), b(random_poly(f, 3), d2);
    CHECK((a + b).to_series(12) == a.to_series(12) + b.to_series(12));
    CHECK((a * b).to_series(12) == a.to_series(12) * b.to_series(12));
  }
}

TEST_CASE("Gauss norm and K0 membership") {
  const RationalFunction geo(poly(kU5, {1}), poly(kU5, {1, -1}));
  CHECK(geo.gauss_norm_is_one());
  CHECK(geo.in_k0());
  // Pole at z = p, inside the open unit disc.
  const RationalFunction inside(poly(kU5, {1}), poly(kU5, {5, -1}));
  CHECK_FALSE(inside.in_k0());
  // Pole at z = 1/p, outside.
  const RationalFunction outside(poly(kU5, {1}), poly(kU5, {1, -5}));
  CHECK(outside.in_k0());
  CHECK(RationalFunction::constant(kU5, Coefficient(kU5, 25)).gauss_valuation() == 2);
  CHECK(RationalFunction(poly(kU5, {1, 5}), poly(kU5, {1, 25})).gauss_valuation() == 0);
  CHECK(RationalFunction::constant(kU5, Coefficient(kU5, mpq_class(1, 5))).gauss_valuation() == -1);
  CHECK_FALSE(RationalFunction::constant(kU5, Coefficient(kU5, mpq_class(1, 5))).gauss_norm_at_most_one());
}

TEST_CASE("Padé recovers exact rational functions") {
  for (int trial = 0; trial < 10; ++trial) {
    const PadicField& f = trial % 2 ? kU5 : kD3;
    const int dn = static_cast<int>(uniform(0, 3)), dd = static_cast<int>(uniform(1, 3));
    Polynomial den = random_poly(f, dd);
    if (den.coeff(0).is_zero()) continue;
    const RationalFunction r(random_poly(f, dn), den);
    const auto cands = pade_search(r.to_series(20), 4);
    bool found = std::any_of(cands.begin(), cands.end(), [&](const RationalFunction& c) { return c == r; });
    CHECK(found);
  }
  const auto g = pade_candidates(geometric(kU5, 10), 3);
  bool found = std::any_of(g.begin(), g.end(), [&](const RationalFunction& c) {
    return c == RationalFunction(poly(kU5, {1}), poly(kU5, {1, -1}));
  });
  CHECK(found);
  const auto zero = pade_candidates(TruncSeries::zero(kU5, 5), 2);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].num().is_zero());
}

TEST_CASE("modular reconstruction matches exhaustive search") {
  struct Case {
    PadicField field;
    int m;
    int d;
    int n;
  };
  const std::vector<Case> cases = {{kU3, 1, 2, 9}, {kU3, 2, 1, 8}, {kD3, 1, 2, 9}, {kD3, 3, 1, 8}, {kU5, 1, 1, 8}};
  int positives = 0;
  for (const auto& c : cases) {
    for (int trial = 0; trial < 12; ++trial) {
      TruncSeries g = random_integral_series(c.field, c.n);
      if (trial % 2 == 0) {
        // Plant a genuine solution, perturbed by pi^m noise.
        std::vector<Coefficient> den{Coefficient::one(c.field)};
        for (int i = 1; i <= c.d; ++i) den.push_back(random_coefficient(c.field, 5, 1));
        std::vector<Coefficient> num;
        for (int i = 0; i <= c.d; ++i) num.push_back(random_coefficient(c.field, 5, 1));
        g = RationalFunction(Polynomial(c.field, num), Polynomial(c.field, den)).to_series(c.n);
        for (int j = 0; j < c.n; ++j)
          g[j] += random_coefficient(c.field, 3, 1) * Coefficient::uniformizer_power(c.field, c.m);
      }
      const bool expected = brute_force_exists(g, c.m, c.d);
      const auto got = modular_certificate(g, c.m, c.d);
      CHECK(got.has_value() == expected);
      if (got) {
        ++positives;
        CHECK(got->den().degree() <= c.d);
        CHECK(got->num().degree() <= c.d);
        CHECK(got->in_k0());
        const TruncSeries diff = got->to_series(c.n) - g;
        for (int j = 0; j < c.n; ++j) CHECK(diff[j].valuation() >= c.m);
      }
    }
  }
  CHECK(positives >= 20);
}

TEST_CASE("modular reconstruction rejects non-integral input") {
  const TruncSeries g = TruncSeries::from_rationals(kU5, {mpq_class(1), mpq_class(1, 5)});
  CHECK_THROWS_AS(modular_certificate(g, 1, 1), Error);
}

TEST_CASE("half-integer binomial series is not rational mod 7") {
  const TruncSeries g = TruncSeries::from_rationals(kU7, hypergeometric_oracle({mpq_class(1, 2)}, 64));
  CHECK_FALSE(modular_certificate(g, 1, 10).has_value());
  // Its square is the geometric series.
  CHECK(modular_certificate(g * g, 1, 10).has_value());
}

TEST_CASE("text rendering") {
  CHECK(poly(kU5, {1, -1}).to_string() == "1 - z");
  CHECK(RationalFunction(poly(kU5, {1}), poly(kU5, {1, -1})).to_string() == "(1)/(1 - z)");
  CHECK(poly(kU5, {}).to_string() == "0");
  CHECK(poly(kU5, {-2, 0, 3}).to_string() == "-2 + 3*z^2");
}
