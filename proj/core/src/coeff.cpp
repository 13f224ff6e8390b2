#include "qvir/coeff.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qvir {

namespace {

const char* kVarNames[kNumVars] = {"q", "t", "k", "u", "w"};

BigInt int_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(BigInt c) {
  if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
}

IntPoly::IntPoly(Monomial m, BigInt c) {
  if (c != 0) terms_.push_back({m, std::move(c)});
}

IntPoly IntPoly::variable(Var v, int exponent) {
  if (exponent < 0) throw MathError("IntPoly::variable: negative exponent");
  Monomial m;
  int idx = static_cast<int>(v);
  m.e[idx] = (v == Var::q || v == Var::t) ? 2 * exponent : exponent;
  return IntPoly(m, 1);
}

IntPoly IntPoly::half_variable(Var v, int doubled_exponent) {
  if (v != Var::q && v != Var::t)
    throw MathError("half powers only exist for q and t");
  if (doubled_exponent < 0)
    throw MathError("IntPoly::half_variable: negative exponent");
  Monomial m;
  m.e[static_cast<int>(v)] = doubled_exponent;
  return IntPoly(m, 1);
}

bool IntPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

const IntPoly::Term& IntPoly::leading() const {
  if (terms_.empty()) throw MathError("leading term of zero polynomial");
  return terms_.back();
}

int IntPoly::degree(Var v) const {
  if (terms_.empty()) return -1;
  int idx = static_cast<int>(v), d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[idx]));
  return d;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  GrlexLess less;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && less(terms_[i].first, o.terms_[j].first))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || less(o.terms_[j].first, terms_[i].first)) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      BigInt c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.push_back({terms_[i].first, std::move(c)});
      ++i, ++j;
    }
  }
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  if (o.is_monomial()) return multiply_monomial(o.terms_[0].first, o.terms_[0].second);
  if (is_monomial()) return o.multiply_monomial(terms_[0].first, terms_[0].second);
  std::map<Monomial, BigInt, GrlexLess> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
  IntPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  return r;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& [m, c] : terms_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  if (!terms_.empty() && terms_.back().second < 0) g = -g;
  return g;
}

Monomial IntPoly::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial g = terms_[0].first;
  for (const auto& [m, c] : terms_) g = g.gcd(m);
  return g;
}

IntPoly IntPoly::multiply_monomial(const Monomial& m, const BigInt& c) const {
  if (c == 0) return IntPoly();
  // A fixed monomial shift preserves grlex order, so terms stay sorted.
  IntPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_) r.terms_.push_back({mm * m, cc * c});
  return r;
}

IntPoly IntPoly::divide_content(const BigInt& c) const {
  if (c == 0) throw MathError("divide_content by zero");
  IntPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, cc] : terms_) {
    BigInt d;
    mpz_divexact(d.get_mpz_t(), cc.get_mpz_t(), c.get_mpz_t());
    r.terms_.push_back({m, std::move(d)});
  }
  return r;
}

IntPoly IntPoly::divide_monomial(const Monomial& m) const {
  IntPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_) {
    if (!m.divides(mm)) throw MathError("divide_monomial: not divisible");
    r.terms_.push_back({mm.divide(m), cc});
  }
  return r;
}

int IntPoly::compare(const IntPoly& a, const IntPoly& b) {
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  GrlexLess less;
  for (std::size_t i = a.terms_.size(); i-- > 0;) {
    if (a.terms_[i].first != b.terms_[i].first)
      return less(a.terms_[i].first, b.terms_[i].first) ? -1 : 1;
    int c = cmp(a.terms_[i].second, b.terms_[i].second);
    if (c != 0) return c;
  }
  return 0;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool printed = false;
    if (a != 1 || m.is_one()) {
      out << a.get_str();
      printed = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      int e = m.e[i];
      if (e == 0) continue;
      if (printed) out << "*";
      out << kVarNames[i];
      if (i <= 1) {  // doubled exponent slots
        if (e == 2) {
        } else if (e % 2 == 0) {
          out << "^" << e / 2;
        } else {
          out << "^(" << e << "/2)";
        }
      } else if (e != 1) {
        out << "^" << e;
      }
      printed = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// gcd / exact division

namespace {

// View of a polynomial as univariate in variable `v` with IntPoly coefficients.
std::vector<IntPoly> collect(const IntPoly& p, int v) {
  std::vector<IntPoly> cs(p.is_zero() ? 0 : p.degree(static_cast<Var>(v)) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int d = rest.e[v];
    rest.e[v] = 0;
    cs[d] += IntPoly(rest, c);
  }
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
  return cs;
}

IntPoly assemble(const std::vector<IntPoly>& cs, int v) {
  IntPoly r;
  for (std::size_t d = 0; d < cs.size(); ++d) {
    Monomial shift;
    shift.e[v] = static_cast<std::int32_t>(d);
    r += cs[d].multiply_monomial(shift, 1);
  }
  return r;
}

IntPoly gcd_many(const std::vector<IntPoly>& ps) {
  IntPoly g;
  for (const auto& p : ps) {
    g = poly_gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in the main variable (coefficient vectors,
// index = degree). Implements a := lb*a - la*x^shift*b until deg a < deg b.
std::vector<IntPoly> prem(std::vector<IntPoly> a, const std::vector<IntPoly>& b) {
  const IntPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    IntPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

IntPoly primitive_part(const std::vector<IntPoly>& cs, int v, IntPoly* cont_out) {
  IntPoly cont = gcd_many(cs);
  std::vector<IntPoly> prim(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) prim[i] = poly_divexact(cs[i], cont);
  if (cont_out) *cont_out = cont;
  return assemble(prim, v);
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  auto positive = [](IntPoly p) {
    if (!p.is_zero() && p.leading().second < 0) return -p;
    return p;
  };
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  if (a == b) return positive(a);

  BigInt ca = a.content(), cb = b.content();
  BigInt cg = int_gcd(ca, cb);
  if (cg < 0) cg = -cg;
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial mg = ma.gcd(mb);
  IntPoly pa = a.divide_monomial(ma).divide_content(ca);
  IntPoly pb = b.divide_monomial(mb).divide_content(cb);

  if (pa.is_constant() || pb.is_constant())
    return IntPoly(mg, cg);

  // Main variable: the highest-index variable occurring in either part.
  int v = kNumVars - 1;
  while (v >= 0 && pa.degree(static_cast<Var>(v)) <= 0 &&
         pb.degree(static_cast<Var>(v)) <= 0)
    --v;
  if (v < 0) return IntPoly(mg, cg);  // both constant in every variable

  auto da = pa.degree(static_cast<Var>(v)), db = pb.degree(static_cast<Var>(v));
  if (da == 0 || db == 0) {
    // gcd has degree 0 in v: reduce to the coefficient content of the other.
    IntPoly with = da == 0 ? pb : pa;
    IntPoly flat = da == 0 ? pa : pb;
    IntPoly cont = gcd_many(collect(with, v));
    return IntPoly(mg, cg) * poly_gcd(flat, cont);
  }

  std::vector<IntPoly> fa = collect(pa, v), fb = collect(pb, v);
  IntPoly conta, contb;
  IntPoly ppa = primitive_part(fa, v, &conta);
  IntPoly ppb = primitive_part(fb, v, &contb);
  IntPoly contg = poly_gcd(conta, contb);

  std::vector<IntPoly> f = collect(ppa, v), g = collect(ppb, v);
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    std::vector<IntPoly> r = prem(f, g);
    f = std::move(g);
    if (r.empty()) {
      g.clear();
    } else {
      IntPoly rp = primitive_part(r, v, nullptr);
      g = collect(rp, v);
    }
  }
  IntPoly result = primitive_part(f, v, nullptr);
  return positive(IntPoly(mg, cg) * contg * result);
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (b.is_one()) return a;
  if (b.is_monomial()) {
    const auto& [m, c] = b.terms()[0];
    IntPoly shifted = a.divide_monomial(m);
    IntPoly r;
    for (const auto& [mm, cc] : shifted.terms()) {
      BigInt d, rem;
      mpz_tdiv_qr(d.get_mpz_t(), rem.get_mpz_t(), cc.get_mpz_t(), c.get_mpz_t());
      if (rem != 0) throw MathError("divexact: coefficient not divisible");
      r += IntPoly(mm, d);
    }
    return r;
  }
  IntPoly rem = a, quot;
  const auto& [lm, lc] = b.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    if (!lm.divides(rm)) throw MathError("divexact: monomial not divisible");
    BigInt qc, qr;
    mpz_tdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), rc.get_mpz_t(), lc.get_mpz_t());
    if (qr != 0) throw MathError("divexact: coefficient not divisible");
    IntPoly term(rm.divide(lm), qc);
    quot += term;
    rem -= b * term;
  }
  return quot;
}

// ---------------------------------------------------------------------------
// Coeff

Coeff::Coeff(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Coeff::Coeff(long num, long den) : num_(num), den_(den) { normalize(); }

void Coeff::normalize() {
  if (den_.is_zero()) throw MathError("division by zero");
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  if (!den_.is_one()) {
    IntPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = poly_divexact(num_, g);
      den_ = poly_divexact(den_, g);
    }
  }
  if (den_.leading().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Coeff Coeff::half_power_qt(int n) {
  return half_power(Var::q, n) * half_power(Var::t, -n);
}

Coeff Coeff::half_power(Var v, int n) {
  if (n >= 0) return Coeff(IntPoly::half_variable(v, n));
  Coeff r;
  r.num_ = IntPoly(1);
  r.den_ = IntPoly::half_variable(v, -n);
  return r;
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  r.num_ = -r.num_;
  return r;
}

Coeff Coeff::operator+(const Coeff& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return Coeff(num_ + o.num_, den_);
  IntPoly g = poly_gcd(den_, o.den_);
  if (g.is_one()) return Coeff(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  IntPoly da = poly_divexact(den_, g);
  IntPoly db = poly_divexact(o.den_, g);
  return Coeff(num_ * db + o.num_ * da, da * o.den_);
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
  if (is_zero() || o.is_zero()) return Coeff();
  // Cross-cancel before multiplying to keep intermediates small.
  IntPoly g1 = poly_gcd(num_, o.den_);
  IntPoly g2 = poly_gcd(o.num_, den_);
  IntPoly n1 = g1.is_one() ? num_ : poly_divexact(num_, g1);
  IntPoly d2 = g1.is_one() ? o.den_ : poly_divexact(o.den_, g1);
  IntPoly n2 = g2.is_one() ? o.num_ : poly_divexact(o.num_, g2);
  IntPoly d1 = g2.is_one() ? den_ : poly_divexact(den_, g2);
  return Coeff(n1 * n2, d1 * d2);
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  Coeff r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading().second < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Coeff Coeff::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Coeff r = one(), base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    base = n > 1 ? base * base : base;
    n >>= 1;
  }
  return r;
}

bool Coeff::equals_cross(const Coeff& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

Coeff Coeff::sqrt() const {
  if (is_zero()) return Coeff();
  if (!num_.is_monomial() || !den_.is_monomial())
    throw MathError("sqrt: value is not a pure monomial");
  auto root_term = [](const IntPoly::Term& term) {
    const auto& [m, c] = term;
    if (c < 0) throw MathError("sqrt of a negative coefficient");
    if (mpz_perfect_square_p(c.get_mpz_t()) == 0)
      throw MathError("sqrt: coefficient is not a perfect square");
    BigInt rc;
    mpz_sqrt(rc.get_mpz_t(), c.get_mpz_t());
    Monomial rm;
    for (int i = 0; i < kNumVars; ++i) {
      // The q, t slots hold doubled exponents, so halving an odd doubled
      // exponent would need quarter powers; k, u, w need even exponents.
      if (m.e[i] % 2 != 0)
        throw MathError(i <= 1 ? "sqrt: would need quarter powers of q or t"
                               : "sqrt: odd exponent on k, u or w");
      rm.e[i] = m.e[i] / 2;
    }
    return IntPoly(rm, rc);
  };
  return Coeff(root_term(num_.terms()[0]), root_term(den_.terms()[0]));
}

namespace {

Coeff eval_poly(const IntPoly& p, const std::array<const Coeff*, kNumVars>& vals) {
  Coeff acc;
  for (const auto& [m, c] : p.terms()) {
    Coeff term = Coeff(c);
    for (int i = 0; i < kNumVars; ++i) {
      int e = m.e[i];
      if (e == 0) continue;
      const Coeff& base = *vals[i];
      if (i <= 1) {
        // e is a doubled exponent
        term *= base.pow(e / 2);
        if (e % 2 != 0) term *= base.sqrt();
      } else {
        term *= base.pow(e);
      }
    }
    acc += term;
  }
  return acc;
}

}  // namespace

Coeff Coeff::substitute(const std::map<Var, Coeff>& bindings) const {
  std::array<Coeff, kNumVars> owned;
  std::array<const Coeff*, kNumVars> vals{};
  for (int i = 0; i < kNumVars; ++i) {
    auto it = bindings.find(static_cast<Var>(i));
    owned[i] = it != bindings.end() ? it->second : Coeff::var(static_cast<Var>(i));
    vals[i] = &owned[i];
  }
  Coeff dn = eval_poly(den_, vals);
  if (dn.is_zero()) throw MathError("substitution makes the denominator vanish");
  Coeff nm = eval_poly(num_, vals);
  return nm / dn;
}

bool Coeff::has_integer_exponents() const {
  for (const IntPoly* p : {&num_, &den_})
    for (const auto& [m, c] : p->terms())
      if (m.e[0] % 2 != 0 || m.e[1] % 2 != 0) return false;
  return true;
}

std::string Coeff::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  std::string ns = num_.size() > 1 ? "(" + n + ")" : n;
  std::string ds = den_.size() > 1 ? "(" + d + ")" : d;
  return ns + "/" + ds;
}

int Coeff::compare(const Coeff& a, const Coeff& b) {
  int c = IntPoly::compare(a.num_, b.num_);
  if (c != 0) return c;
  return IntPoly::compare(a.den_, b.den_);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json poly_to_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json term;
    term["c"] = c.get_str();
    term["e"] = {m.e[0], m.e[1], m.e[2], m.e[3], m.e[4]};
    arr.push_back(std::move(term));
  }
  return arr;
}

IntPoly poly_from_json(const nlohmann::json& arr) {
  IntPoly p;
  for (const auto& term : arr) {
    Monomial m;
    const auto& e = term.at("e");
    if (e.size() != kNumVars) throw MathError("bad exponent vector");
    for (int i = 0; i < kNumVars; ++i) m.e[i] = e[i].get<std::int32_t>();
    BigInt c(term.at("c").get<std::string>());
    p += IntPoly(m, c);
  }
  return p;
}

}  // namespace

std::string Coeff::to_json_string() const {
  nlohmann::json j;
  j["num"] = poly_to_json(num_);
  j["den"] = poly_to_json(den_);
  return j.dump();
}

Coeff Coeff::from_json_string(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  return Coeff(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Coeff field_arith(const Coeff& a, const Coeff& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  throw MathError("unknown field operation");
}

}  // namespace qvir
