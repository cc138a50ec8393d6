#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "padic/diffops.hpp"

namespace padic {

// ---------------------------------------------------------------------------
// Frobenius antecedents
// ---------------------------------------------------------------------------

/// Intermediate matrices of one antecedent step for a companion matrix A.
struct AntecedentData {
  SeriesMatrix uniform;          // Y_A, order N
  SeriesMatrix cartier_uniform;  // Lambda_p(Y_A), order ceil(N/p)
  SeriesMatrix frobenius;        // F = [delta(LY) + (1/p) LY A(0)] LY^{-1}
  SeriesMatrix h0;               // Y_A (LY(z^p))^{-1}, order N
  SeriesMatrix passage;          // h0 * diag(1, p, ..., p^(n-1))
  DiffOp next;                   // L_1, read off the last row of F
};

/// Build Y_A, F, H_0, the step passage matrix and L_1 from L. No checks
/// beyond the MOM precondition.
AntecedentData compute_antecedent(const DiffOp& op, int order);

struct AntecedentLevel {
  int level = 0;
  DiffOp op;                    // L_m, reliable to operator_order
  SeriesMatrix companion;       // A_m
  SeriesMatrix passage;         // H~_m, reliable to checked_order
  SeriesMatrix residual;        // delta H~_m - A H~_m + p^m H~_m A_m(z^(p^m))
  TruncSeries solution;         // Lambda_p^m(f)
  TruncSeries solution_residual;  // L_m applied to Lambda_p^m(f)
  int checked_order = 0;
  int operator_order = 0;
  Valuation passage_min_valuation = kInfinite;
  Valuation residual_min_valuation = kInfinite;
  Valuation solution_residual_min_valuation = kInfinite;
};

/// One level: throws NotMOM or VerificationError.
AntecedentLevel antecedent_step(const DiffOp& op, int order);

/// Levels 1..m, built by iterating the step and composing passage matrices
/// H~_(m+1) = H~_m * G~(z^(p^m)). Every level is checked against the closed
/// form Y_A (Lambda_p^m(Y_A)(z^(p^m)))^{-1} diag(1, p^m, ...).
std::vector<AntecedentLevel> antecedent_chain(const DiffOp& op, int levels, int order);

/// sum_{xi^p = 1} (xi - 1)^j / (p j!), evaluated exactly through the
/// roots-of-unity filter sum_{k = 0 mod p} C(j, k) (-1)^(j-k) / j!.
mpq_class root_of_unity_constant(int p, int j);

/// A_0 = I, A_{j+1} = delta A_j + A_j (A - j I), for j < count.
std::vector<SeriesMatrix> higher_derivative_matrices(const SeriesMatrix& a, int count);

// ---------------------------------------------------------------------------
// Integrality
// ---------------------------------------------------------------------------

struct IntegralityReport {
  bool pass = true;
  int level = 0;
  int checked_upto = 0;  // indices 1..checked_upto inspected
  Valuation min_valuation = kInfinite;
  int first_failure = -1;
};

/// Minimum valuation over f_1 .. f_min(p^m - 1, N - 1).
IntegralityReport integrality_check(const TruncSeries& f, int level);

// ---------------------------------------------------------------------------
// Rational congruence certificates
// ---------------------------------------------------------------------------

struct Certificate {
  std::string kind;
  int level = 0;  // congruence modulus exponent (pi-units)
  RationalFunction rational;
  int verified_order = 0;
  Valuation min_residual_valuation = kInfinite;
};

/// Outcome of re-substituting a candidate into its defining congruence.
struct Residual {
  int first_failure = -1;
  Valuation min_valuation = kInfinite;
};

struct CertificateSearch {
  std::string kind;
  int level = 0;
  int deg_bound = 0;
  bool require_unit_norm = true;
  /// Series the candidate should approximate (used for Padé and for the
  /// cheap screening pass).
  TruncSeries target;
  /// Re-verifies the defining congruence of a candidate.
  std::function<Residual(const RationalFunction&)> verify;
};

/// First index j < upto where the expansion of r differs from g modulo pi^m,
/// or -1; stops expanding at the first mismatch.
int first_rational_mismatch(const RationalFunction& r, const TruncSeries& g, int m, int upto);

/// Padé candidates in order of total degree, screened against the target,
/// filtered by K0 membership and the norm condition, then re-verified.
/// Throws ReconstructionFailed, or NotInK0 when the only congruent
/// candidates have a pole in the open unit disc.
Certificate find_certificate(const CertificateSearch& search);
std::optional<Certificate> try_find_certificate(const CertificateSearch& search);

/// D_m with D_m(z) Lambda_p(f)(z^p) = f mod pi^m.
Certificate ratio_certificate(const TruncSeries& f, int level, int deg_bound);
/// Q_k with Q_k f = Lambda_p^(kh)(f) mod pi^(kh).
Certificate period_ratio_certificate(const TruncSeries& f, int period, int k, int deg_bound);
/// B_kh with f = B_kh f(z^(p^kh)) mod pi^(kh).
Certificate frobenius_ratio_certificate(const TruncSeries& f, int period, int k, int deg_bound);
/// B_(k+1)h(z) / B_kh(z^(p^h)), which approximates f / f(z^(p^h)).
RationalFunction frobenius_quotient(const RationalFunction& next, const RationalFunction& prev,
                                    int p, int period);
/// R with R = f'/f mod pi^M.
Certificate logderiv_certificate(const TruncSeries& f, int period, int level, int deg_bound);

/// Retry with deg_bound = start, 2*start, ... up to cap.
Certificate search_doubling(const std::function<Certificate(int)>& attempt, int start, int cap);

}  // namespace padic
