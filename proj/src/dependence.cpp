#include "padic/dependence.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <thread>

namespace padic {

TruncSeries product_power(const std::vector<TruncSeries>& fs, const std::vector<long>& exps) {
  if (fs.size() != exps.size())
    throw Error(ErrorCode::BadParameters, "exponent tuple length differs from series count");
  if (fs.empty()) return TruncSeries();
  int order = fs.front().order();
  for (const auto& f : fs) order = std::min(order, f.order());
  TruncSeries acc = TruncSeries::one(fs.front().field(), order);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].order() > 0 && fs[i][0] != Coefficient::one(fs[i].field()))
      throw Error(ErrorCode::NotAUnit, "series " + std::to_string(i) + " does not start with 1");
    if (exps[i] == 0) continue;
    acc = acc * power(fs[i].truncated(order), exps[i]);
  }
  return acc;
}

std::optional<Certificate> analytic_element_certificate(const TruncSeries& g, int level,
                                                        int deg_bound) {
  const Valuation v = g.min_valuation();
  if (!is_infinite(v) && v < 0) return std::nullopt;
  const auto modular = modular_certificate(g, level, deg_bound);
  if (!modular) return std::nullopt;
  auto verify = [g, level](const RationalFunction& r) {
    Residual res;
    const TruncSeries diff = r.to_series(g.order()) - g;
    for (int j = 0; j < diff.order(); ++j) {
      const Valuation w = diff[j].valuation();
      res.min_valuation = std::min(res.min_valuation, w);
      if (!is_infinite(w) && w < level && res.first_failure < 0) res.first_failure = j;
    }
    return res;
  };
  CertificateSearch s;
  s.kind = "analytic_element";
  s.level = level;
  s.deg_bound = deg_bound;
  s.require_unit_norm = false;
  s.target = g;
  s.verify = verify;
  if (auto c = try_find_certificate(s)) return c;
  // Padé found nothing congruent; the modular solution is a certificate itself.
  const Residual res = verify(*modular);
  if (res.first_failure >= 0 || !modular->in_k0()) return std::nullopt;
  return Certificate{s.kind, level, *modular, g.order(), res.min_valuation};
}

TruncSeries normalized_derivative(const TruncSeries& f, int r) {
  TruncSeries g = f;
  for (int i = 0; i < r; ++i) g = d_dz(g);
  int k = 0;
  while (k < g.order() && g[k].is_zero()) ++k;
  if (k == g.order()) throw Error(ErrorCode::BadParameters, "derivative vanishes to its order");
  std::vector<Coefficient> c(g.coeffs().begin() + k, g.coeffs().end());
  TruncSeries shifted(g.field(), std::move(c));
  const Coefficient lead = shifted[0];
  shifted /= lead;
  return shifted;
}

std::vector<std::vector<long>> primitive_rays(int dims, int bound) {
  std::vector<std::vector<long>> out;
  if (dims <= 0 || bound <= 0) return out;
  std::vector<long> t(dims, -bound);
  for (;;) {
    long g = 0;
    for (long x : t) g = std::gcd(g, std::labs(x));
    auto first = std::find_if(t.begin(), t.end(), [](long x) { return x != 0; });
    if (g == 1 && first != t.end() && *first > 0) out.push_back(t);
    int i = dims - 1;
    while (i >= 0 && t[i] == bound) t[i--] = -bound;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

int configured_threads() {
  const char* env = std::getenv("PADIC_THREADS");
  int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (!env) return hw;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

namespace {

struct RayResult {
  std::optional<DependenceCandidate> candidate;
  ScanStatistics stats;
};

RayResult scan_ray(const std::vector<TruncSeries>& gs, const std::vector<TruncSeries>& logs,
                   const std::vector<long>& ray, int exp_bound, int level, int deg_bound) {
  RayResult out;
  long norm = 0;
  for (long x : ray) norm = std::max(norm, std::labs(x));
  for (long k = 1; k * norm <= exp_bound; ++k) {
    std::vector<long> a(ray.size());
    for (std::size_t i = 0; i < ray.size(); ++i) a[i] = k * ray[i];
    ++out.stats.tuples_tested;
    // sum a_i f_i'/f_i is linear in a, so it is screened first.
    TruncSeries combo = TruncSeries::zero(gs.front().field(), logs.front().order());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) combo += logs[i] * Coefficient(gs.front().field(), a[i]);
    auto ld = analytic_element_certificate(combo, level, deg_bound);
    if (!ld) {
      ++out.stats.screened_out;
      continue;
    }
    ld->kind = "logderiv";
    auto prod = analytic_element_certificate(product_power(gs, a), level, deg_bound);
    if (!prod) {
      ++out.stats.product_failed;
      continue;
    }
    prod->kind = "product";
    out.candidate = DependenceCandidate{a, *prod, *ld};
    break;
  }
  return out;
}

}  // namespace

DependenceReport dependence_scan(const std::vector<ScanInput>& fs, int exp_bound, int level,
                              int deg_bound, const std::optional<std::vector<int>>& derivative_orders) {
  if (fs.empty()) throw Error(ErrorCode::BadParameters, "scan needs at least one series");
  if (derivative_orders && derivative_orders->size() != fs.size())
    throw Error(ErrorCode::BadParameters, "one derivative order per series is required");
  DependenceReport report;
  report.exp_bound = exp_bound;
  report.level = level;
  report.deg_bound = deg_bound;
  if (derivative_orders) report.derivative_orders = *derivative_orders;

  std::vector<TruncSeries> gs;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    report.series.push_back(fs[i].name);
    if (derivative_orders) {
      gs.push_back(normalized_derivative(fs[i].series, (*derivative_orders)[i]));
    } else {
      const TruncSeries& f = fs[i].series;
      if (f.order() == 0 || f[0] != Coefficient::one(f.field()))
        throw Error(ErrorCode::NotAUnit, fs[i].name + " does not start with 1");
      gs.push_back(f);
    }
  }
  int order = gs.front().order();
  for (const auto& g : gs) order = std::min(order, g.order());
  for (auto& g : gs) g = g.truncated(order);
  report.order = order;

  std::vector<TruncSeries> logs;
  for (const auto& g : gs) logs.push_back(log_derivative(g));

  const auto rays = primitive_rays(static_cast<int>(gs.size()), exp_bound);
  report.stats.rays = static_cast<long>(rays.size());
  std::vector<RayResult> results(rays.size());
  const int threads = std::min<int>(configured_threads(), static_cast<int>(rays.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(rays.size());
  auto worker = [&]() {
    for (std::size_t i = next++; i < rays.size(); i = next++) {
      try {
        results[i] = scan_ray(gs, logs, rays[i], exp_bound, level, deg_bound);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& r : results) {
    report.stats.tuples_tested += r.stats.tuples_tested;
    report.stats.screened_out += r.stats.screened_out;
    report.stats.product_failed += r.stats.product_failed;
    if (r.candidate) report.candidates.push_back(std::move(*r.candidate));
  }
  std::sort(report.candidates.begin(), report.candidates.end(),
            [](const DependenceCandidate& a, const DependenceCandidate& b) {
              return a.exponents < b.exponents;
            });
  report.scope_note = "bounded search: |a|_inf <= " + std::to_string(exp_bound) + ", modulus pi^" +
                      std::to_string(level) + ", certificate degree <= " +
                      std::to_string(deg_bound) + ", order " + std::to_string(order) +
                      "; absence of a tuple is not a proof of independence";
  return report;
}

}  // namespace padic
