#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <set>

#include "support.hpp"

using namespace padic;
using namespace testing_support;

namespace {

const PadicField kU5(5, Ramification::Unramified);
const PadicField kU7(7, Ramification::Unramified);

TruncSeries half(int n) { return catalog_series("hyp:1/2", 7, Ramification::Unramified, n); }

// prod f_i^(a_i) by repeated multiplication and inversion, independent of power().
TruncSeries naive_product(const std::vector<TruncSeries>& fs, const std::vector<long>& a) {
  TruncSeries acc = TruncSeries::one(fs[0].field(), fs[0].order());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const TruncSeries base = a[i] >= 0 ? fs[i] : invert_unit(fs[i]);
    for (long k = 0; k < std::labs(a[i]); ++k) acc = acc * base;
  }
  return acc;
}

void check_certificate(const Certificate& c, const TruncSeries& g) {
  const TruncSeries diff = c.rational.to_series(g.order()) - g;
  for (int j = 0; j < g.order(); ++j) CHECK(diff[j].valuation() >= c.level);
  CHECK(c.rational.in_k0());
}

void check_report_sound(const DependenceReport& r, const std::vector<TruncSeries>& gs) {
  for (const auto& cand : r.candidates) {
    long g = 0;
    for (long x : cand.exponents) g = std::gcd(g, std::labs(x));
    CHECK(g >= 1);
    auto first = std::find_if(cand.exponents.begin(), cand.exponents.end(), [](long x) { return x != 0; });
    REQUIRE(first != cand.exponents.end());
    CHECK(*first > 0);
    check_certificate(cand.product, naive_product(gs, cand.exponents));
    TruncSeries combo = TruncSeries::zero(gs[0].field(), gs[0].order() - 1);
    for (std::size_t i = 0; i < gs.size(); ++i)
      combo += log_derivative(gs[i]) * Coefficient(gs[0].field(), cand.exponents[i]);
    check_certificate(cand.logderiv, combo);
  }
}

bool has_tuple(const DependenceReport& r, const std::vector<long>& t) {
  return std::any_of(r.candidates.begin(), r.candidates.end(),
                     [&](const DependenceCandidate& c) { return c.exponents == t; });
}

}  // namespace

TEST_CASE("product of powers") {
  const TruncSeries f = random_unit_series(kU5, 12);
  CHECK(product_power({f, f}, {1, -1}) == TruncSeries::one(kU5, 12));
  const TruncSeries h = half(20);
  CHECK(product_power({h}, {2}) == geometric(kU7, 20));
  CHECK(product_power({}, {}).order() == 0);
  CHECK_THROWS_AS(product_power({f}, {1, 2}), Error);
  TruncSeries g = f;
  g[0] = Coefficient(kU5, 2);
  CHECK_THROWS_AS(product_power({g}, {1}), Error);
  const TruncSeries a = random_unit_series(kU5, 10), b = random_unit_series(kU5, 10);
  CHECK(product_power({a, b}, {2, -3}) == naive_product({a, b}, {2, -3}));
}

TEST_CASE("analytic element certificates") {
  const auto geo = analytic_element_certificate(geometric(kU5, 30), 2, 4);
  REQUIRE(geo);
  CHECK(geo->rational == RationalFunction(poly(kU5, {1}), poly(kU5, {1, -1})));
  const auto pol = analytic_element_certificate(poly(kU5, {1, 2, 3}).to_series(30), 3, 4);
  REQUIRE(pol);
  CHECK(pol->rational == RationalFunction::polynomial(poly(kU5, {1, 2, 3})));
  CHECK_FALSE(analytic_element_certificate(half(64), 1, 10).has_value());
  // Non-integral input cannot be congruent to an integral certificate.
  CHECK_FALSE(analytic_element_certificate(TruncSeries::from_rationals(kU5, {1, mpq_class(1, 5)}), 1, 2));
}

TEST_CASE("primitive rays") {
  for (int dims = 1; dims <= 3; ++dims) {
    for (int bound = 1; bound <= 4; ++bound) {
      const auto rays = primitive_rays(dims, bound);
      // Brute force: every nonzero tuple in the box, reduced to its primitive,
      // sign-normalized direction.
      std::set<std::vector<long>> expected;
      std::vector<long> t(dims, -bound);
      for (;;) {
        long g = 0;
        for (long x : t) g = std::gcd(g, std::labs(x));
        if (g > 0) {
          std::vector<long> r = t;
          for (auto& x : r) x /= g;
          auto first = std::find_if(r.begin(), r.end(), [](long x) { return x != 0; });
          if (*first < 0)
            for (auto& x : r) x = -x;
          expected.insert(r);
        }
        int i = dims - 1;
        while (i >= 0 && t[i] == bound) t[i--] = -bound;
        if (i < 0) break;
        ++t[i];
      }
      CHECK(std::set<std::vector<long>>(rays.begin(), rays.end()) == expected);
      CHECK(rays.size() == expected.size());
    }
  }
}

TEST_CASE("scan: half-integer binomial series squares to the geometric series") {
  const TruncSeries h = half(64);
  const auto r = dependence_scan({{"hyp:1/2", h}}, 2, 2, 8);
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.candidates[0].exponents == std::vector<long>{2});
  CHECK(r.candidates[0].product.rational == RationalFunction(poly(kU7, {1}), poly(kU7, {1, -1})));
  check_report_sound(r, {h});
  CHECK(r.stats.tuples_tested == 2);
  CHECK(r.stats.product_failed == 1);
  CHECK(r.scope_note.find("not a proof") != std::string::npos);
}

TEST_CASE("scan: duplicated series") {
  const TruncSeries f = catalog_series("apery", 5, Ramification::Unramified, 40);
  const auto r = dependence_scan({{"a", f}, {"b", f}}, 2, 2, 6);
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.candidates[0].exponents == std::vector<long>{1, -1});
  CHECK(r.candidates[0].product.rational == RationalFunction::constant(kU5, Coefficient::one(kU5)));
  check_report_sound(r, {f, f});
}

TEST_CASE("scan: series against its inverse") {
  const TruncSeries f = catalog_series("apery", 5, Ramification::Unramified, 40);
  const auto r = dependence_scan({{"f", f}, {"1/f", invert_unit(f)}}, 2, 2, 6);
  CHECK(has_tuple(r, {1, 1}));
  check_report_sound(r, {f, invert_unit(f)});
}

TEST_CASE("scan: series and its derivative") {
  const TruncSeries h = half(64);
  const auto r = dependence_scan({{"f", h}, {"f'", h}}, 6, 2, 10, std::vector<int>{0, 1});
  // (f')^2 f^(-6) = 1/4, i.e. the direction of (-6, 2), normalized to (3, -1).
  REQUIRE(has_tuple(r, {3, -1}));
  const auto it = std::find_if(r.candidates.begin(), r.candidates.end(),
                               [](const DependenceCandidate& c) { return c.exponents == std::vector<long>{3, -1}; });
  CHECK(it->product.rational.num().degree() == 0);
  CHECK(it->product.rational.den().degree() == 0);
  check_report_sound(r, {h, normalized_derivative(h, 1)});
  CHECK(r.derivative_orders == std::vector<int>{0, 1});
}

TEST_CASE("normalized derivative") {
  const TruncSeries h = half(20);
  const TruncSeries d = normalized_derivative(h, 1);
  CHECK(d[0] == Coefficient::one(kU7));
  CHECK(d == d_dz(h) * Coefficient(kU7, 2));
  CHECK_THROWS_AS(normalized_derivative(TruncSeries::one(kU7, 5), 1), Error);
}

TEST_CASE("certificates survive re-truncation") {
  const TruncSeries h = half(64);
  const auto r = dependence_scan({{"f", h}}, 4, 2, 8);
  for (const auto& c : r.candidates) {
    const TruncSeries short_h = h.truncated(40);
    check_certificate(c.product, naive_product({short_h}, c.exponents));
  }
}

TEST_CASE("scan output does not depend on the thread count") {
  const TruncSeries h = half(48);
  const TruncSeries f = catalog_series("apery", 7, Ramification::Unramified, 48);
  setenv("PADIC_THREADS", "1", 1);
  CHECK(configured_threads() == 1);
  const auto one = dependence_scan({{"h", h}, {"a", f}, {"h2", h}}, 2, 2, 6);
  setenv("PADIC_THREADS", "4", 1);
  CHECK(configured_threads() == 4);
  const auto four = dependence_scan({{"h", h}, {"a", f}, {"h2", h}}, 2, 2, 6);
  unsetenv("PADIC_THREADS");
  REQUIRE(one.candidates.size() == four.candidates.size());
  for (std::size_t i = 0; i < one.candidates.size(); ++i) {
    CHECK(one.candidates[i].exponents == four.candidates[i].exponents);
    CHECK(one.candidates[i].product.rational == four.candidates[i].product.rational);
  }
  CHECK(one.stats.tuples_tested == four.stats.tuples_tested);
}

TEST_CASE("scan input validation") {
  CHECK_THROWS_AS(dependence_scan({}, 2, 1, 4), Error);
  const TruncSeries h = half(20);
  CHECK_THROWS_AS(dependence_scan({{"h", h}}, 2, 1, 4, std::vector<int>{0, 1}), Error);
  TruncSeries g = h;
  g[0] = Coefficient(kU7, 3);
  CHECK_THROWS_AS(dependence_scan({{"g", g}}, 2, 1, 4), Error);
}
