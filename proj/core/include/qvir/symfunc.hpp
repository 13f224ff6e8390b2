#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qvir/coeff.hpp"
#include "qvir/partition.hpp"

namespace qvir {

// A graded symmetric function written in the power-sum basis: a finite sum
// sum_lambda c_lambda p_lambda. Immutable value semantics; all operations are
// pure.
class SymFunc {
 public:
  SymFunc() = default;

  static SymFunc zero() { return SymFunc(); }
  static SymFunc one() { return p(Partition()); }
  static SymFunc p(int n) { return p(Partition::single_row(n)); }
  static SymFunc p(const Partition& la, Coeff c = Coeff(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, Coeff>& terms() const { return terms_; }
  Coeff coeff(const Partition& la) const;

  int max_degree() const;
  bool is_homogeneous(int* degree_out = nullptr) const;
  SymFunc degree_component(int d) const;

  SymFunc operator-() const;
  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const SymFunc& o) const;  // p-basis: multiset union
  SymFunc scale(const Coeff& c) const;
  SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
  SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
  SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

  // d/dp_n, the lowering half of the Heisenberg action.
  SymFunc d_dp(int n) const;

  // Applies a map to every coefficient (dropping zeros).
  SymFunc map_coeffs(const std::function<Coeff(const Coeff&)>& f) const;

  // The algebra endomorphism p_n -> phi(n) p_n.
  SymFunc pleth_diag(const std::function<Coeff(int)>& phi) const;

  std::string to_string() const;
  std::string to_json_string() const;
  static SymFunc from_json_string(const std::string& s);

 private:
  std::map<Partition, Coeff> terms_;
};

// e_r and h_r in the p-basis, via the Newton recurrences.
SymFunc elementary(int r);
SymFunc complete(int r);
// Schur function via the Jacobi-Trudi determinant in the h's.
SymFunc schur(const Partition& la);

// <p_la, p_mu> = delta z_la prod (1-q^la_i)/(1-t^la_i), extended bilinearly.
Coeff inner_product_qt(const SymFunc& f, const SymFunc& g);

// Classical Macdonald involution omega_{q,t}: p_n -> (-1)^(n-1) (1-q^n)/(1-t^n) p_n.
SymFunc omega_qt(const SymFunc& f);
// Its inverse omega_{t,q}.
SymFunc omega_tq(const SymFunc& f);
// Parameter swap q -> 1/t, t -> 1/q applied to every coefficient (k, u, w fixed).
SymFunc iota_swap(const SymFunc& f);
// Plethystic alphabet scaling X -> cX: p_n -> c(q^n, t^n, ...) p_n for a
// monomial-style c; implemented as pleth_diag with phi(n) = c evaluated at
// n-th powers of the variables.
SymFunc scale_alphabet(const SymFunc& f, const Coeff& c);

// The specialization p_r -> (1-u^r)/(1-t^r) for a field element u.
Coeff specialize_eps(const SymFunc& f, const Coeff& uval);

// Plethystic evaluation on a finite alphabet: p_n[A] = sum a^n.
Coeff eval_on_alphabet(const SymFunc& f, const std::vector<Coeff>& alphabet);
// e_r[Y - X]: coefficient of u^r in prod (1+uY_j) / prod (1+uX_i).
Coeff eval_e_on_difference(int r, const std::vector<Coeff>& plus,
                           const std::vector<Coeff>& minus);
// h_r[Y - X]: coefficient of u^r in prod (1-uX_i) / prod (1-uY_j).
Coeff eval_h_on_difference(int r, const std::vector<Coeff>& plus,
                           const std::vector<Coeff>& minus);

// Substitutes n-th powers of the variables into c: q -> q^n, t -> t^n,
// k -> k^n, u -> u^n, w -> w^n. Exact for any rational function c.
Coeff power_substitute(const Coeff& c, int n);

// Change of basis p <-> m at a fixed degree. Partitions are listed in the
// canonical order (descending lex). Rows of p_to_m give p_la in the m basis.
struct BasisTables {
  int degree = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<Coeff>> p_to_m;  // integer entries
  std::vector<std::vector<Coeff>> m_to_p;  // rational entries
};

// Cached per degree; safe to call from several threads after a warm-up call.
const BasisTables& basis_tables(int degree);

// m_mu expressed in the p basis.
SymFunc monomial_in_p(const Partition& mu);

}  // namespace qvir
