#include "cyclo/cycnum.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cyclo {

namespace {

mpz_class content_gcd(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  if (r.get_den() <= 0) throw std::invalid_argument("bad rational literal: " + s);
  return r;
}

// --- rational polynomial helpers for the extended gcd in inv() ---

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p -= q * x^shift * scale
void qsubmul(QPoly& p, const QPoly& q, std::size_t shift, const Rational& scale) {
  if (p.size() < q.size() + shift) p.resize(q.size() + shift);
  for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] -= q[i] * scale;
}

// divides a by b in place (a becomes the remainder), returns the quotient
QPoly qdivmod(QPoly& a, const QPoly& b) {
  qtrim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = Rational(1) / b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = a[k + b.size() - 1] * lead_inv;
    if (c != 0) {
      q[k] = c;
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= b[j] * c;
    }
  }
  qtrim(a);
  return q;
}

}  // namespace

CycNum::CycNum(const CyclotomicContext& ctx)
    : ctx_(&ctx), num_(ctx.degree()), den_(1) {}

CycNum::CycNum(const CyclotomicContext& ctx, const Rational& c) : CycNum(ctx) {
  Rational canon = c;
  canon.canonicalize();  // mpq_class(p, q) literals arrive unreduced
  num_[0] = canon.get_num();
  den_ = canon.get_den();
}

CycNum::CycNum(const CyclotomicContext& ctx, long c) : CycNum(ctx) { num_[0] = c; }

CycNum::CycNum(const CyclotomicContext& ctx, const std::vector<Rational>& poly)
    : ctx_(&ctx), den_(1) {
  // common denominator, then reduce mod Phi_n
  for (const auto& c : poly) {
    mpz_class d = c.get_den();
    mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> raw(std::max(poly.size(), ctx.degree()));
  for (std::size_t i = 0; i < poly.size(); ++i)
    raw[i] = poly[i].get_num() * (den_ / poly[i].get_den());
  reduce_and_normalize(raw);
}

void CycNum::reduce_and_normalize(std::vector<mpz_class>& raw) {
  const IntPoly& phi = ctx_->phi();
  const std::size_t d = ctx_->degree();
  for (std::size_t i = raw.size(); i-- > d;) {
    mpz_class lead = raw[i];
    if (lead == 0) continue;
    raw[i] = 0;
    for (std::size_t j = 0; j < d; ++j) raw[i - d + j] -= lead * phi[j];
  }
  raw.resize(d);
  num_ = std::move(raw);
  normalize();
}

void CycNum::normalize() {
  mpz_class g = content_gcd(num_);
  if (g == 0) {
    den_ = 1;
    return;
  }
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational CycNum::coeff(std::size_t i) const {
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

bool CycNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycNum is not rational: " + to_string());
  return coeff(0);
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.ctx_ != b.ctx_) {
    if (!a.ctx_ || !b.ctx_ || a.ctx_->n() != b.ctx_->n()) throw ContextMismatch();
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

static void check_same(const CycNum& a, const CycNum& b) {
  if (&a.context() != &b.context() && a.context().n() != b.context().n())
    throw ContextMismatch();
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  check_same(a, b);
  CycNum r(a.context());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
  mpz_class fa = b.den_ / g, fb = a.den_ / g;
  r.den_ = a.den_ * fa;
  for (std::size_t i = 0; i < r.num_.size(); ++i)
    r.num_[i] = a.num_[i] * fa + b.num_[i] * fb;
  r.normalize();
  return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  check_same(a, b);
  const std::size_t d = a.context().degree();
  std::vector<mpz_class> raw(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.num_[j] == 0) continue;
      raw[i + j] += a.num_[i] * b.num_[j];
    }
  }
  CycNum r(a.context());
  r.den_ = a.den_ * b.den_;
  r.reduce_and_normalize(raw);
  return r;
}

CycNum CycNum::operator*(const Rational& q) const {
  Rational canon = q;
  canon.canonicalize();
  CycNum r = *this;
  for (auto& c : r.num_) c *= canon.get_num();
  r.den_ *= canon.get_den();
  r.normalize();
  return r;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw DivisionByZero();
  // extended Euclid of the representative with Phi_n over Q
  QPoly r0(ctx_->phi().begin(), ctx_->phi().end());
  QPoly r1(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) r1[i] = coeff(i);
  qtrim(r1);
  QPoly t0, t1{Rational(1)};
  while (!r1.empty()) {
    QPoly r0_copy = r0;
    QPoly q = qdivmod(r0_copy, r1);
    r0.swap(r1);
    r1 = std::move(r0_copy);
    QPoly t_next = t0;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0) qsubmul(t_next, t1, i, q[i]);
    t0.swap(t1);
    t1 = std::move(t_next);
    qtrim(t1);
  }
  // r0 is a nonzero constant: Phi_n is irreducible over Q
  if (r0.size() != 1) throw std::logic_error("gcd with Phi_n not constant");
  const Rational scale = Rational(1) / r0[0];
  std::vector<Rational> res(t0.size());
  for (std::size_t i = 0; i < t0.size(); ++i) res[i] = t0[i] * scale;
  return CycNum(*ctx_, res);
}

CycNum CycNum::conj() const {
  CycNum r(*ctx_);
  const std::size_t d = ctx_->degree();
  for (std::size_t i = 0; i < d; ++i) {
    if (num_[i] == 0) continue;
    const IntPoly& p = ctx_->zeta_power(-static_cast<long>(i));
    for (std::size_t j = 0; j < d; ++j) r.num_[j] += num_[i] * p[j];
  }
  r.den_ = den_;
  r.normalize();
  return r;
}

CycNum zeta_pow(const CyclotomicContext& ctx, long k) {
  CycNum r(ctx);
  r.num_ = ctx.zeta_power(k);
  return r;
}

namespace {

struct MpfrComplexEval {
  mpfr_t re, im;
  MpfrComplexEval(const std::vector<mpz_class>& num, const mpz_class& den, unsigned n,
                  unsigned digits) {
    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 64);
    mpfr_inits2(prec, re, im, nullptr);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    mpfr_t theta, ang, c, s, term;
    mpfr_inits2(prec, theta, ang, c, s, term, nullptr);
    mpfr_const_pi(theta, MPFR_RNDN);
    mpfr_mul_ui(theta, theta, 2, MPFR_RNDN);
    mpfr_div_ui(theta, theta, n, MPFR_RNDN);
    for (std::size_t i = 0; i < num.size(); ++i) {
      if (num[i] == 0) continue;
      mpfr_mul_ui(ang, theta, static_cast<unsigned long>(i), MPFR_RNDN);
      mpfr_sin_cos(s, c, ang, MPFR_RNDN);
      mpfr_mul_z(term, c, num[i].get_mpz_t(), MPFR_RNDN);
      mpfr_add(re, re, term, MPFR_RNDN);
      mpfr_mul_z(term, s, num[i].get_mpz_t(), MPFR_RNDN);
      mpfr_add(im, im, term, MPFR_RNDN);
    }
    mpfr_div_z(re, re, den.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(im, im, den.get_mpz_t(), MPFR_RNDN);
    mpfr_clears(theta, ang, c, s, term, nullptr);
  }
  ~MpfrComplexEval() { mpfr_clears(re, im, nullptr); }
};

}  // namespace

std::complex<double> CycNum::to_complex(unsigned digits) const {
  MpfrComplexEval ev(num_, den_, ctx_->n(), digits);
  return {mpfr_get_d(ev.re, MPFR_RNDN), mpfr_get_d(ev.im, MPFR_RNDN)};
}

std::pair<std::string, std::string> CycNum::to_complex_string(unsigned digits) const {
  MpfrComplexEval ev(num_, den_, ctx_->n(), digits);
  char* rs = nullptr;
  char* is = nullptr;
  mpfr_asprintf(&rs, "%.*Rg", static_cast<int>(digits), ev.re);
  mpfr_asprintf(&is, "%.*Rg", static_cast<int>(digits), ev.im);
  std::pair<std::string, std::string> out(rs, is);
  mpfr_free_str(rs);
  mpfr_free_str(is);
  return out;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    if (!first) os << " + ";
    os << rational_str(coeff(i));
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycNum CycNum::parse(const CyclotomicContext& ctx, const std::string& text) {
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return std::string();
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
  };
  std::vector<Rational> poly;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string term =
        trim(next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos));
    pos = next == std::string::npos ? text.size() + 1 : next + 3;
    if (term.empty()) throw std::invalid_argument("empty term in cyclotomic literal");
    if (term == "0" && poly.empty() && pos > text.size()) break;
    std::size_t star = term.find("*z^");
    unsigned long expo = 0;
    std::string coeff_text = term;
    if (star != std::string::npos) {
      coeff_text = term.substr(0, star);
      expo = std::stoul(term.substr(star + 3));
    }
    if (poly.size() <= expo) poly.resize(expo + 1);
    poly[expo] += parse_rational(coeff_text);
  }
  return CycNum(ctx, poly);
}

}  // namespace cyclo
