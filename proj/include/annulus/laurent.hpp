#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "annulus/bigint.hpp"

namespace annulus {

// Exponent of a monomial q^q a^a.
struct QA {
  int q = 0;
  int a = 0;
  friend auto operator<=>(const QA&, const QA&) = default;
};

// Integer-coefficient Laurent polynomial in q and a.
// Invariant: no stored zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Int c) {
    if (c != 0) coeffs_[QA{0, 0}] = std::move(c);
  }

  static LaurentPoly monomial(Int c, int q, int a = 0) {
    LaurentPoly p;
    if (c != 0) p.coeffs_[QA{q, a}] = std::move(c);
    return p;
  }
  static LaurentPoly q_power(int k) { return monomial(1, k, 0); }
  static LaurentPoly a_power(int k) { return monomial(1, 0, k); }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<QA, Int>& terms() const { return coeffs_; }
  Int coeff(int q, int a = 0) const {
    auto it = coeffs_.find(QA{q, a});
    return it == coeffs_.end() ? Int(0) : it->second;
  }
  void add_term(const QA& e, const Int& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
  friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) { return l -= r; }
  friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Multiply by the monomial q^dq a^da.
  LaurentPoly shifted(int dq, int da = 0) const;

  // q -> q^{-1}
  LaurentPoly invert_q() const;
  // q -> -q^{-1}
  LaurentPoly invert_q_neg() const;
  // a -> q^n
  LaurentPoly substitute_a(int n) const;
  // evaluate q = 1 (requires a-free input)
  Int eval_q1() const;

  // Exact division; throws std::domain_error when the division is not exact.
  LaurentPoly divided_by(const LaurentPoly& d) const;

  // Content: gcd of all integer coefficients (0 for the zero polynomial).
  Int content() const;

  QA min_exponents() const;
  QA lex_leading() const;  // largest (q, a) lexicographically

  bool has_a() const;

  std::string str() const;
  static LaurentPoly parse(const std::string& s);

 private:
  std::map<QA, Int> coeffs_;
};

LaurentPoly qint(int k);
LaurentPoly qbinom(int n, int k);
Int binom(int n, int k);

// Normalized ratio of Laurent polynomials in q, a.
// den lowest exponents are (0,0) and its lex-leading coefficient is positive;
// the pair is reduced by integer content.
class RationalFn {
 public:
  RationalFn() : num_(), den_(Int(1)) {}
  RationalFn(LaurentPoly num, LaurentPoly den);
  explicit RationalFn(LaurentPoly num) : RationalFn(std::move(num), LaurentPoly(Int(1))) {}

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFn operator+(const RationalFn& l, const RationalFn& r);
  friend RationalFn operator-(const RationalFn& l, const RationalFn& r);
  friend RationalFn operator*(const RationalFn& l, const RationalFn& r);
  RationalFn operator-() const;
  // Equality via cross-multiplication.
  friend bool operator==(const RationalFn& l, const RationalFn& r);

  RationalFn invert_q() const;
  RationalFn invert_q_neg() const;
  // a -> q^n; the division must come out exact.
  LaurentPoly substitute_a(int n) const;

  // Power-series expansion in q up to q-degree <= cutoff (a-exponents exact).
  // Requires the denominator to be a-free.
  LaurentPoly series(int cutoff) const;

  std::string str() const;

 private:
  LaurentPoly num_, den_;
};

enum class Convention { Sym, Wedge };

// Value of the k-colored unknot: c_{Sym^k} or c_{Wedge^k}.
RationalFn unknot_colors(int k, Convention conv);

// Dimension table for graded vector spaces: coefficient of q^q a^a h^h.
struct QAH {
  int q = 0;
  int a = 0;
  int h = 0;
  friend auto operator<=>(const QAH&, const QAH&) = default;
};

// Finite map (q,a,h) -> integer. Graded dimensions are >= 0; Euler
// characteristics may be signed.
class PoincarePoly {
 public:
  PoincarePoly() = default;

  void add(int q, int a, int h, const Int& c);
  const std::map<QAH, Int>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int q, int a, int h) const;

  PoincarePoly& operator+=(const PoincarePoly& o);
  friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;

  // Alternating sum over h; result lives in (q,a).
  LaurentPoly euler() const;
  // Sum of |coefficients| forgetting all gradings.
  Int total_dim() const;
  PoincarePoly shifted(int dq, int da, int dh) const;
  PoincarePoly negate_q() const;

  // Terms sorted by (h, a, q), rendered in the shared text grammar.
  std::string str() const;
  static PoincarePoly parse(const std::string& s);

 private:
  std::map<QAH, Int> coeffs_;  // ordered by (q,a,h); printing resorts
};

} // namespace annulus
