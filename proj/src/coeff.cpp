#include "padic/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace padic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LeadingNotUnit: return "LeadingNotUnit";
    case ErrorCode::NotMOM: return "NotMOM";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::OrderExhausted: return "OrderExhausted";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::NotInK0: return "NotInK0";
    case ErrorCode::IntegralityFailure: return "IntegralityFailure";
    case ErrorCode::BadContext: return "BadContext";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
  }
  return "Unknown";
}

std::string_view to_string(Ramification r) {
  return r == Ramification::Unramified ? "unramified" : "dwork";
}

Ramification parse_ramification(std::string_view s) {
  if (s == "unramified" || s == "Unramified") return Ramification::Unramified;
  if (s == "dwork" || s == "DworkEisenstein" || s == "ramified") return Ramification::DworkEisenstein;
  throw Error(ErrorCode::ParseError, "unknown ramification '" + std::string(s) + "'");
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PadicField::PadicField(int prime, Ramification r) : p(prime), ramification(r) {
  if (!is_prime(prime))
    throw Error(ErrorCode::BadContext, std::to_string(prime) + " is not prime");
}

PadicContext::PadicContext(PadicField f, int n, int m) : field(f), trunc_order(n), level(m) {
  if (!f.bound()) throw Error(ErrorCode::BadContext, "context needs a prime");
  if (n < 1) throw Error(ErrorCode::BadContext, "truncation order must be >= 1");
  if (m < 0) throw Error(ErrorCode::BadContext, "congruence level must be >= 0");
}

std::string valuation_string(Valuation v) {
  return is_infinite(v) ? std::string("inf") : std::to_string(v);
}

namespace {

long vp_int(const mpz_class& z, int p) {
  mpz_class rest;
  mpz_class prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

long vp(const mpq_class& q, int p) {
  return vp_int(q.get_num(), p) - vp_int(q.get_den(), p);
}

Coefficient::Coefficient(const PadicField& field, const mpq_class& q)
    : field_(field), comps_(std::max(1, field.e())) {
  comps_[0] = q;
}

Coefficient::Coefficient(const PadicField& field, std::vector<mpq_class> comps)
    : field_(field), comps_(std::move(comps)) {
  const auto e = static_cast<std::size_t>(std::max(1, field.e()));
  if (comps_.size() > e)
    throw Error(ErrorCode::ContextMismatch, "too many pi-components for field");
  comps_.resize(e);
}

Coefficient Coefficient::uniformizer_power(const PadicField& field, long k) {
  const int e = field.e();
  // pi^k = pi^r * (pi^e)^q = pi^r * (-p)^q, with the unramified case pi = p.
  long q = k >= 0 ? k / e : -((-k + e - 1) / e);
  long r = k - q * e;
  mpq_class scale(1);
  const mpq_class base = field.ramification == Ramification::Unramified ? mpq_class(field.p)
                                                                        : mpq_class(-field.p);
  for (long i = 0; i < std::labs(q); ++i) scale *= base;
  if (q < 0) scale = 1 / scale;
  std::vector<mpq_class> comps(e);
  comps[r] = scale;
  return Coefficient(field, std::move(comps));
}

mpq_class Coefficient::component(int i) const {
  return i < e() ? comps_[i] : mpq_class(0);
}

bool Coefficient::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const mpq_class& q) { return q == 0; });
}

bool Coefficient::is_rational() const {
  return std::all_of(comps_.begin() + 1, comps_.end(), [](const mpq_class& q) { return q == 0; });
}

Valuation Coefficient::valuation() const {
  Valuation best = kInfinite;
  const int e = static_cast<int>(comps_.size());
  for (int i = 0; i < e; ++i) {
    if (comps_[i] == 0) continue;
    Valuation v = static_cast<Valuation>(e) * vp(comps_[i], field_.p) + i;
    best = std::min(best, v);
  }
  return best;
}

void Coefficient::adopt_field(const PadicField& other) {
  if (!other.bound()) return;
  if (!field_.bound()) {
    field_ = other;
    comps_.resize(std::max(1, other.e()));
    return;
  }
  if (!(field_ == other))
    throw Error(ErrorCode::ContextMismatch, "coefficients from different fields");
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  adopt_field(o.field_);
  for (int i = 0; i < o.e(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  adopt_field(o.field_);
  for (int i = 0; i < o.e(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient r = a;
  r.adopt_field(b.field_);
  const int e = r.e();
  if (e == 1) {
    r.comps_[0] = a.comps_[0] * b.comps_[0];
    return r;
  }
  std::vector<mpq_class> out(e);
  const mpq_class wrap(-r.field_.p);  // pi^e = -p
  for (int i = 0; i < a.e(); ++i) {
    if (a.comps_[i] == 0) continue;
    for (int j = 0; j < b.e(); ++j) {
      if (b.comps_[j] == 0) continue;
      mpq_class t = a.comps_[i] * b.comps_[j];
      int k = i + j;
      if (k >= e) {
        k -= e;
        t *= wrap;
      }
      out[k] += t;
    }
  }
  r.comps_ = std::move(out);
  return r;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) { return *this = *this * o; }

Coefficient& Coefficient::operator*=(const mpq_class& q) {
  for (auto& c : comps_) c *= q;
  return *this;
}

Coefficient& Coefficient::operator/=(const mpq_class& q) {
  if (q == 0) throw Error(ErrorCode::DivisionByZero, "division by rational zero");
  for (auto& c : comps_) c /= q;
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_rational()) {
    adopt_field(o.field_);
    return *this /= o.comps_[0];
  }
  return *this *= o.inverse();
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const int e = this->e();
  if (is_rational()) {
    Coefficient r = *this;
    r.comps_[0] = 1 / comps_[0];
    return r;
  }
  int nonzero = 0, idx = 0;
  for (int i = 0; i < e; ++i)
    if (comps_[i] != 0) ++nonzero, idx = i;
  if (nonzero == 1) {
    Coefficient r = uniformizer_power(field_, -idx);
    r *= 1 / comps_[idx];
    return r;
  }
  // Solve x * y = 1 with the multiplication-by-x matrix (column j = x * pi^j).
  std::vector<std::vector<mpq_class>> m(e, std::vector<mpq_class>(e + 1));
  for (int j = 0; j < e; ++j) {
    Coefficient col = *this * uniformizer_power(field_, j);
    for (int i = 0; i < e; ++i) m[i][j] = col.comps_[i];
  }
  m[0][e] = 1;
  for (int c = 0; c < e; ++c) {
    int piv = c;
    while (piv < e && m[piv][c] == 0) ++piv;
    if (piv == e) throw Error(ErrorCode::DivisionByZero, "singular multiplication map");
    std::swap(m[piv], m[c]);
    for (int r = 0; r < e; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (int k = c; k <= e; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<mpq_class> y(e);
  for (int i = 0; i < e; ++i) y[i] = m[i][e] / m[i][i];
  return Coefficient(field_, std::move(y));
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.field_.bound() && b.field_.bound() && !(a.field_ == b.field_)) return false;
  const int e = std::max(a.e(), b.e());
  for (int i = 0; i < e; ++i)
    if (a.component(i) != b.component(i)) return false;
  return true;
}

std::string Coefficient::to_string() const {
  std::vector<std::string> terms;
  for (int i = 0; i < e(); ++i) {
    const mpq_class& c = comps_[i];
    if (c == 0) continue;
    if (i == 0) {
      terms.push_back(c.get_str());
      continue;
    }
    std::string t;
    if (c == 1) t = "pi";
    else if (c == -1) t = "-pi";
    else t = c.get_str() + "*pi";
    if (i >= 2) t += "^" + std::to_string(i);
    terms.push_back(std::move(t));
  }
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
  return out;
}

namespace {

class TermParser {
 public:
  TermParser(const PadicField& f, std::string_view s) : field_(f), s_(s) {}

  Coefficient parse() {
    Coefficient total = Coefficient::zero(field_);
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (!first) {
        if (s_[pos_] == '+') ++pos_;
        else if (s_[pos_] == '-') sign = -1, ++pos_;
        else fail("expected '+' or '-'");
        skip();
      }
      while (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        if (s_[pos_] == '-') sign = -sign;
        ++pos_;
        skip();
      }
      Coefficient t = term();
      if (sign < 0) t = -t;
      total += t;
      first = false;
      skip();
    }
    if (first) fail("empty coefficient");
    return total;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::ParseError, msg + " in '" + std::string(s_) + "'");
  }
  bool at_pi() const { return s_.substr(pos_, 2) == "pi"; }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Coefficient pi_power() {
    pos_ += 2;
    skip();
    long k = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      k = std::stol(digits());
    }
    return Coefficient::uniformizer_power(field_, k);
  }

  Coefficient term() {
    if (at_pi()) return pi_power();
    mpq_class q;
    std::string num = digits();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip();
      std::string den = digits();
      mpz_class d(den);
      if (d == 0) fail("zero denominator");
      q = mpq_class(mpz_class(num), d);
      q.canonicalize();
    } else {
      q = mpq_class(mpz_class(num));
    }
    skip();
    Coefficient c(field_, q);
    if (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip();
      if (!at_pi()) fail("expected 'pi' after '*'");
      c *= pi_power();
    }
    return c;
  }

  PadicField field_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

mpz_class reduce_rational(const mpq_class& q, int p, long k) {
  if (k <= 0) return 0;
  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, k);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw Error(ErrorCode::NegativeValuation, "denominator divisible by p");
  mpz_class r = q.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace

Coefficient Coefficient::parse(const PadicField& field, std::string_view text) {
  return TermParser(field, text).parse();
}

Coefficient reduce_mod(const Coefficient& c, int m) {
  const Valuation v = c.valuation();
  if (!is_infinite(v) && v < 0)
    throw Error(ErrorCode::NegativeValuation,
                c.to_string() + " has valuation " + std::to_string(v) + " < 0");
  const PadicField& f = c.field();
  const int e = c.e();
  std::vector<mpq_class> out(e);
  for (int i = 0; i < e; ++i) {
    if (c.component(i) == 0) continue;
    long k = m - i <= 0 ? 0 : (m - i + e - 1) / e;
    out[i] = mpq_class(reduce_rational(c.component(i), f.p, k));
  }
  return Coefficient(f, std::move(out));
}

}  // namespace padic
