#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qvir {

using BigInt = mpz_class;

// Thrown on mathematically invalid requests (division by zero, a box outside
// its diagram, substitutions that cannot be carried out exactly, ...).
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Variables of the coefficient field, in the fixed global order used for
// canonical forms and serialization.
enum class Var : int { q = 0, t = 1, k = 2, u = 3, w = 4 };

inline constexpr int kNumVars = 5;

// A power product q^(eq/2) t^(et/2) k^ek u^eu w^ew with all exponents >= 0.
// The q and t slots store twice the exponent, so half-integer powers of q and
// t are exact; k, u, w only take integer exponents.
struct Monomial {
  std::array<std::int32_t, kNumVars> e{0, 0, 0, 0, 0};

  std::int64_t grade() const {
    std::int64_t s = 0;
    for (auto x : e) s += x;
    return s;
  }
  bool is_one() const { return grade() == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  // Componentwise minimum; the gcd of two power products.
  Monomial gcd(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = std::min(e[i], o.e[i]);
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial divide(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
};

// Graded lexicographic order with q < t < k < u < w.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga < gb;
    return a.e < b.e;
  }
};

// A polynomial in Z[q^(1/2), t^(1/2), k, u, w]; negative powers live in the
// denominator of a Coeff. Terms are kept sorted ascending in grlex order with
// no zero coefficients.
class IntPoly {
 public:
  using Term = std::pair<Monomial, BigInt>;

  IntPoly() = default;
  explicit IntPoly(BigInt c);
  explicit IntPoly(long c) : IntPoly(BigInt(c)) {}
  IntPoly(Monomial m, BigInt c);

  static IntPoly variable(Var v, int exponent = 1);
  // q^(n/2) or t^(n/2); n is the doubled exponent and must be >= 0.
  static IntPoly half_variable(Var v, int doubled_exponent);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  const Term& leading() const;  // grlex-largest term
  int degree(Var v) const;      // stored exponent (doubled for q, t); -1 if zero

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // gcd of the integer coefficients, with the sign of the leading term.
  BigInt content() const;
  // Componentwise-minimum power product over all terms.
  Monomial monomial_content() const;

  IntPoly multiply_monomial(const Monomial& m, const BigInt& c) const;
  IntPoly divide_content(const BigInt& c) const;
  IntPoly divide_monomial(const Monomial& m) const;

  std::string to_string() const;

  // Orders polynomials; only used to pick deterministic representatives.
  static int compare(const IntPoly& a, const IntPoly& b);

 private:
  std::vector<Term> terms_;
  friend IntPoly poly_mul(const IntPoly&, const IntPoly&);
};

// Multivariate gcd via primitive pseudo-remainder sequences. The result has
// positive leading coefficient; gcd(0, g) = +-g.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Exact division; throws MathError if the division is not exact.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

// An element of the field Q(q^(1/2), t^(1/2), k, u, w), kept in canonical
// form: gcd(num, den) = 1 and the denominator's grlex-leading coefficient is
// positive. Values are immutable once constructed and safe to share between
// threads.
class Coeff {
 public:
  Coeff() : num_(), den_(1) {}
  Coeff(long v) : num_(v), den_(1) {}
  Coeff(BigInt v) : num_(std::move(v)), den_(1) {}
  explicit Coeff(IntPoly p) : num_(std::move(p)), den_(1) {}
  Coeff(IntPoly num, IntPoly den);
  Coeff(long num, long den);

  static Coeff zero() { return Coeff(); }
  static Coeff one() { return Coeff(1); }
  static Coeff var(Var v) { return Coeff(IntPoly::variable(v)); }
  static Coeff q() { return var(Var::q); }
  static Coeff t() { return var(Var::t); }
  static Coeff k() { return var(Var::k); }
  static Coeff u() { return var(Var::u); }
  static Coeff w() { return var(Var::w); }
  // (q/t)^(n/2) for any integer n.
  static Coeff half_power_qt(int n);
  // v^(n/2) for v in {q, t}; n may be negative.
  static Coeff half_power(Var v, int n);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one() && num_.is_constant(); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  Coeff operator-() const;
  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;  // throws MathError on zero divisor
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff& operator/=(const Coeff& o) { return *this = *this / o; }

  Coeff inverse() const;
  Coeff pow(long n) const;

  friend bool operator==(const Coeff&, const Coeff&) = default;

  // a/b == c/d iff a*d == c*b; must agree with canonical equality.
  bool equals_cross(const Coeff& o) const;

  // Exact square root. Defined for pure monomial fractions whose integer
  // coefficients are perfect squares and whose k, u, w exponents are even;
  // throws MathError otherwise.
  Coeff sqrt() const;

  // Simultaneous exact substitution for a subset of the variables. Throws
  // MathError if a denominator vanishes identically or if a half-integer
  // exponent meets a binding without an exact square root.
  Coeff substitute(const std::map<Var, Coeff>& bindings) const;

  // True if every exponent of q and t appearing in num and den is integral.
  bool has_integer_exponents() const;

  std::string to_string() const;
  std::string to_json_string() const;
  static Coeff from_json_string(const std::string& s);

  // Total order for deterministic containers and reports.
  static int compare(const Coeff& a, const Coeff& b);

 private:
  void normalize();
  IntPoly num_, den_;
};

enum class FieldOp { add, sub, mul, div };

// Four-function field arithmetic entry point; div throws on zero divisor.
Coeff field_arith(const Coeff& a, const Coeff& b, FieldOp op);

}  // namespace qvir
