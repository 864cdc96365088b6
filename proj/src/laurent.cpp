#include "annulus/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <boost/multiprecision/integer.hpp>

namespace annulus {

void LaurentPoly::add_term(const QA& e, const Int& c) {
  if (c == 0) return;
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    coeffs_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
  LaurentPoly out;
  for (const auto& [el, cl] : l.coeffs_)
    for (const auto& [er, cr] : r.coeffs_)
      out.add_term(QA{el.q + er.q, el.a + er.a}, cl * cr);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int dq, int da) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[QA{e.q + dq, e.a + da}] = c;
  return out;
}

LaurentPoly LaurentPoly::invert_q() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[QA{-e.q, e.a}] = c;
  return out;
}

LaurentPoly LaurentPoly::invert_q_neg() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_)
    out.coeffs_[QA{-e.q, e.a}] = (e.q % 2 == 0) ? c : -c;
  return out;
}

LaurentPoly LaurentPoly::substitute_a(int n) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.add_term(QA{e.q + n * e.a, 0}, c);
  return out;
}

Int LaurentPoly::eval_q1() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e.a != 0) throw std::domain_error("eval_q1: polynomial involves a");
    s += c;
  }
  return s;
}

QA LaurentPoly::min_exponents() const {
  if (coeffs_.empty()) return QA{0, 0};
  int mq = coeffs_.begin()->first.q, ma = coeffs_.begin()->first.a;
  for (const auto& [e, c] : coeffs_) {
    mq = std::min(mq, e.q);
    ma = std::min(ma, e.a);
  }
  return QA{mq, ma};
}

QA LaurentPoly::lex_leading() const {
  if (coeffs_.empty()) throw std::domain_error("lex_leading of zero polynomial");
  return coeffs_.rbegin()->first;
}

bool LaurentPoly::has_a() const {
  for (const auto& [e, c] : coeffs_)
    if (e.a != 0) return true;
  return false;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  LaurentPoly rem = *this, quot;
  const QA dl = d.lex_leading();
  const Int& dc = d.coeffs_.at(dl);
  while (!rem.is_zero()) {
    const QA rl = rem.lex_leading();
    const Int& rc = rem.coeffs_.at(rl);
    if (rc % dc != 0) throw std::domain_error("non-exact polynomial division");
    LaurentPoly t = monomial(rc / dc, rl.q - dl.q, rl.a - dl.a);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : coeffs_) g = boost::multiprecision::gcd(g, c);
  return g;
}

LaurentPoly qint(int k) {
  if (k < 0) throw std::domain_error("qint: negative argument");
  LaurentPoly out;
  for (int j = 0; j < k; ++j) out.add_term(QA{k - 1 - 2 * j, 0}, 1);
  return out;
}

LaurentPoly qbinom(int n, int k) {
  if (k < 0 || n < 0) throw std::domain_error("qbinom: negative argument");
  if (k > n) return LaurentPoly();
  k = std::min(k, n - k);
  LaurentPoly num(Int(1)), den(Int(1));
  for (int i = 0; i < k; ++i) {
    num = num * qint(n - i);
    den = den * qint(i + 1);
  }
  return num.divided_by(den);
}

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(Int(1));
    return;
  }
  // Monomial normalization of den: lowest exponents zero.
  QA m = den_.min_exponents();
  den_ = den_.shifted(-m.q, -m.a);
  num_ = num_.shifted(-m.q, -m.a);
  // Content reduction.
  Int g = boost::multiprecision::gcd(num_.content(), den_.content());
  if (g > 1) {
    num_ = num_.divided_by(LaurentPoly(g));
    den_ = den_.divided_by(LaurentPoly(g));
  }
  // Positive leading coefficient of den.
  if (den_.terms().at(den_.lex_leading()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFn operator+(const RationalFn& l, const RationalFn& r) {
  return RationalFn(l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_);
}

RationalFn operator-(const RationalFn& l, const RationalFn& r) {
  return RationalFn(l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_);
}

RationalFn operator*(const RationalFn& l, const RationalFn& r) {
  return RationalFn(l.num_ * r.num_, l.den_ * r.den_);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

bool operator==(const RationalFn& l, const RationalFn& r) {
  return l.num_ * r.den_ == r.num_ * l.den_;
}

RationalFn RationalFn::invert_q() const {
  return RationalFn(num_.invert_q(), den_.invert_q());
}

RationalFn RationalFn::invert_q_neg() const {
  return RationalFn(num_.invert_q_neg(), den_.invert_q_neg());
}

LaurentPoly RationalFn::substitute_a(int n) const {
  LaurentPoly nn = num_.substitute_a(n), dd = den_.substitute_a(n);
  if (dd.is_zero())
    throw std::domain_error("substitute_a: denominator vanishes");
  return nn.divided_by(dd);
}

LaurentPoly RationalFn::series(int cutoff) const {
  if (den_.has_a()) throw std::domain_error("series: denominator involves a");
  if (num_.is_zero()) return LaurentPoly();
  // den = c * q^m * (1 + higher-order terms in q)
  int m = den_.min_exponents().q;
  LaurentPoly unit = den_.shifted(-m, 0);
  Int c = unit.coeff(0, 0);
  if (c == 0) throw std::domain_error("series: denominator has no unique lowest term");
  // Geometric inversion: 1/(c(1+u)) = (1/c) sum (-u/c)^j ... keep integrality:
  // here all our denominators have c = +-1 after normalization; enforce that.
  if (c != 1 && c != -1)
    throw std::domain_error("series: lowest denominator coefficient not a unit");
  LaurentPoly u = unit - LaurentPoly(c);  // strictly positive q-degrees
  // We need num * q^{-m} * (1/c) * sum_j (-u/c)^j truncated.
  int lead = num_.min_exponents().q - m;
  LaurentPoly acc, power(Int(1));
  int bound = cutoff - lead;  // max power index contributing below cutoff
  for (int j = 0;; ++j) {
    acc += power;
    if (u.is_zero()) break;
    LaurentPoly next = power * u;
    if (c == -1) next = -next;
    // Truncate against cutoff.
    LaurentPoly trunc;
    for (const auto& [e, co] : next.terms())
      if (e.q <= bound) trunc.add_term(e, co);
    power = trunc;
    if (power.is_zero()) break;
    if (j > 4 * (bound > 0 ? bound : 1) + 8)
      throw std::domain_error("series: failed to terminate");
  }
  if (c == -1) acc = -acc;
  LaurentPoly full = num_.shifted(-m, 0) * acc;
  LaurentPoly out;
  for (const auto& [e, co] : full.terms())
    if (e.q <= cutoff) out.add_term(e, co);
  return out;
}

RationalFn unknot_colors(int k, Convention conv) {
  if (k <= 0) throw std::domain_error("unknot_colors: k must be >= 1");
  RationalFn out{LaurentPoly(Int(1))};
  if (conv == Convention::Sym) {
    // q^k a^{-k} prod_{i=1}^k (1 - a^2 q^{2i-2}) / (1 - q^{2i})
    for (int i = 1; i <= k; ++i) {
      LaurentPoly n = LaurentPoly(Int(1)) - LaurentPoly::monomial(1, 2 * i - 2, 2);
      LaurentPoly d = LaurentPoly(Int(1)) - LaurentPoly::q_power(2 * i);
      out = out * RationalFn(n, d);
    }
    out = out * RationalFn(LaurentPoly::monomial(1, k, -k));
  } else {
    // q^{k^2} a^{-k} prod_{i=1}^k (1 - a^2 q^{2-2i}) / (1 - q^{2i})
    for (int i = 1; i <= k; ++i) {
      LaurentPoly n = LaurentPoly(Int(1)) - LaurentPoly::monomial(1, 2 - 2 * i, 2);
      LaurentPoly d = LaurentPoly(Int(1)) - LaurentPoly::q_power(2 * i);
      out = out * RationalFn(n, d);
    }
    out = out * RationalFn(LaurentPoly::monomial(1, k * k, -k));
  }
  return out;
}

void PoincarePoly::add(int q, int a, int h, const Int& c) {
  if (c == 0) return;
  QAH e{q, a, h};
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    coeffs_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Int PoincarePoly::coeff(int q, int a, int h) const {
  auto it = coeffs_.find(QAH{q, a, h});
  return it == coeffs_.end() ? Int(0) : it->second;
}

PoincarePoly& PoincarePoly::operator+=(const PoincarePoly& o) {
  for (const auto& [e, c] : o.coeffs_) add(e.q, e.a, e.h, c);
  return *this;
}

LaurentPoly PoincarePoly::euler() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_)
    out.add_term(QA{e.q, e.a}, (e.h % 2 == 0) ? c : -c);
  return out;
}

Int PoincarePoly::total_dim() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) s += boost::multiprecision::abs(c);
  return s;
}

PoincarePoly PoincarePoly::shifted(int dq, int da, int dh) const {
  PoincarePoly out;
  for (const auto& [e, c] : coeffs_) out.add(e.q + dq, e.a + da, e.h + dh, c);
  return out;
}

PoincarePoly PoincarePoly::negate_q() const {
  PoincarePoly out;
  for (const auto& [e, c] : coeffs_) out.add(-e.q, e.a, e.h, c);
  return out;
}

namespace {

void append_var(std::ostringstream& os, const char* v, int e, bool& lead) {
  if (e == 0) return;
  if (!lead) os << "*";
  lead = false;
  os << v;
  if (e != 1) os << "^" << e;
}

void append_term(std::ostringstream& os, bool first, const Int& c, int q, int a, int h) {
  Int mag = c < 0 ? Int(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  bool lead = true;
  if (mag != 1 || (q == 0 && a == 0 && h == 0)) {
    os << mag;
    lead = false;
  }
  append_var(os, "q", q, lead);
  append_var(os, "a", a, lead);
  append_var(os, "h", h, lead);
}

struct Tok {
  enum Kind { Num, Var, Plus, Minus, Star, Caret, End } kind;
  Int num;
  char var = 0;
};

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+') {
      out.push_back({Tok::Plus, 0, 0});
      ++i;
    } else if (c == '-') {
      out.push_back({Tok::Minus, 0, 0});
      ++i;
    } else if (c == '*') {
      out.push_back({Tok::Star, 0, 0});
      ++i;
    } else if (c == '^') {
      out.push_back({Tok::Caret, 0, 0});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, Int(s.substr(i, j - i)), 0});
      i = j;
    } else if (c == 'q' || c == 'a' || c == 'h') {
      out.push_back({Tok::Var, 0, c});
      ++i;
    } else {
      throw std::invalid_argument("polynomial parse error at '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, 0, 0});
  return out;
}

// Shared parser for the term grammar c*q^i*a^j*h^k.
std::map<QAH, Int> parse_terms(const std::string& s) {
  std::map<QAH, Int> acc;
  auto toks = lex(s);
  size_t p = 0;
  bool first = true;
  while (toks[p].kind != Tok::End) {
    Int sign = 1;
    if (toks[p].kind == Tok::Plus || toks[p].kind == Tok::Minus) {
      if (toks[p].kind == Tok::Minus) sign = -1;
      ++p;
    } else if (!first) {
      throw std::invalid_argument("polynomial parse error: expected + or -");
    }
    first = false;
    Int coeff = 1;
    bool saw_factor = false;
    QAH e{0, 0, 0};
    bool expect_factor = true;
    while (expect_factor) {
      if (toks[p].kind == Tok::Num) {
        coeff *= toks[p].num;
        ++p;
        saw_factor = true;
      } else if (toks[p].kind == Tok::Var) {
        char v = toks[p].var;
        ++p;
        long long exp = 1;
        if (toks[p].kind == Tok::Caret) {
          ++p;
          Int es = 1;
          if (toks[p].kind == Tok::Minus) {
            es = -1;
            ++p;
          }
          if (toks[p].kind != Tok::Num)
            throw std::invalid_argument("polynomial parse error: bad exponent");
          exp = static_cast<long long>(es * toks[p].num);
          ++p;
        }
        if (v == 'q') e.q += static_cast<int>(exp);
        if (v == 'a') e.a += static_cast<int>(exp);
        if (v == 'h') e.h += static_cast<int>(exp);
        saw_factor = true;
      } else {
        throw std::invalid_argument("polynomial parse error: expected term");
      }
      if (toks[p].kind == Tok::Star) {
        ++p;
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) throw std::invalid_argument("polynomial parse error: empty term");
    auto it = acc.find(e);
    if (it == acc.end()) {
      if (sign * coeff != 0) acc.emplace(e, sign * coeff);
    } else {
      it->second += sign * coeff;
      if (it->second == 0) acc.erase(it);
    }
  }
  return acc;
}

} // namespace

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  // Sort by (a, q) to agree with the (h, a, q) grammar at h = 0.
  std::vector<std::pair<QA, Int>> ts(coeffs_.begin(), coeffs_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
    return std::pair(l.first.a, l.first.q) < std::pair(r.first.a, r.first.q);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    append_term(os, first, c, e.q, e.a, 0);
    first = false;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
  LaurentPoly out;
  for (const auto& [e, c] : parse_terms(s)) {
    if (e.h != 0) throw std::invalid_argument("LaurentPoly::parse: unexpected h");
    out.add_term(QA{e.q, e.a}, c);
  }
  return out;
}

std::string RationalFn::str() const {
  if (den_ == LaurentPoly(Int(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string PoincarePoly::str() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::pair<QAH, Int>> ts(coeffs_.begin(), coeffs_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
    return std::tuple(l.first.h, l.first.a, l.first.q) <
           std::tuple(r.first.h, r.first.a, r.first.q);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    append_term(os, first, c, e.q, e.a, e.h);
    first = false;
  }
  return os.str();
}

PoincarePoly PoincarePoly::parse(const std::string& s) {
  PoincarePoly out;
  for (const auto& [e, c] : parse_terms(s)) out.add(e.q, e.a, e.h, c);
  return out;
}

} // namespace annulus
