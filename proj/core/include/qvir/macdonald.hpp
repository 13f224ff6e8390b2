#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "qvir/linalg.hpp"
#include "qvir/report.hpp"
#include "qvir/symfunc.hpp"

namespace qvir {

// Box products c_lambda = prod (1 - q^arm t^(leg+1)) and
// c'_lambda = prod (1 - q^(arm+1) t^leg).
Coeff c_factor(const Partition& la);
Coeff cprime_factor(const Partition& la);
// The same products with substituted arguments, e.g. (1/q, 1/t).
Coeff c_factor_at(const Partition& la, const Coeff& q, const Coeff& t);
Coeff cprime_factor_at(const Partition& la, const Coeff& q, const Coeff& t);

// Vertical-strip Pieri coefficient psi'_{la/mu} (e_r P_mu = sum psi' P_la).
Coeff psi_prime(const Partition& la, const Partition& mu);
// p_1 J_mu = sum_la d_{la/mu} J_la.
Coeff pieri_d(const Partition& la, const Partition& mu);
// d/dp_1 J_la = sum_mu c_{la/mu} J_mu.
Coeff pieri_c(const Partition& la, const Partition& mu);

// theta_n = h_n of the alphabet {q^a t^-b : a, b >= 0}, computed through
// p_m = 1/((1-q^m)(1-t^-m)).
Coeff theta(int n);

// Builds and caches the Macdonald bases P, Q, J per degree. Construction per
// degree is sequential and locked; all reads after that are immutable.
class MacdonaldTable {
 public:
  const SymFunc& P(const Partition& la);
  const SymFunc& Q(const Partition& la);
  const SymFunc& J(const Partition& la);
  Coeff jj_norm(const Partition& la);  // <J, J> = c * c'

  // Exact J-basis coordinates of a graded element.
  std::map<Partition, Coeff> expand_in_J(const SymFunc& g);

  // Diagonal operator J_la -> eigen(la) J_la.
  SymFunc diagonal_in_J(const std::function<Coeff(const Partition&)>& eigen,
                        const SymFunc& g);
  // Delta_f with eigenvalue f[B_la].
  SymFunc delta_sym(const SymFunc& f, const SymFunc& g);
  SymFunc delta_e1(const SymFunc& g);
  SymFunc delta_h(int r, const SymFunc& g);
  // nabla: J_la -> q^{n(la')} t^{-n(la)} J_la.
  SymFunc nabla(const SymFunc& g);
  SymFunc nabla_inv(const SymFunc& g);
  // Eigen-form E_r: J_la -> e_r[s^la] J_la.
  SymFunc E_hat_eigen(int r, const SymFunc& g);

  // h_r[B_la] computed through theta and the eigenvalue alphabet, not through
  // B_la itself: sum_k (-t)^k theta_{r-k} e_k[s^la / (1-q)].
  Coeff h_r_of_B_via_s(const Partition& la, int r);

  // Delta_{h_r} as a weighted sum of compositions of the E_r family.
  SymFunc delta_h_via_Ehat(int r, const SymFunc& g);

  // Modified Macdonald function: t^{n(la)} J_la(q, 1/t) with p_r -> p_r/(1-t^-r).
  SymFunc modified_H(const Partition& la);

  // Single-box Pieri sum identities and their higher-order generating version.
  Report verify_pieri_sums(const Partition& mu, int rmax, int series_order = -1);

  // Pre-builds all degrees <= n (call before fanning out over threads).
  void warm_up(int n);

  // Injects an externally computed value (e.g. from the disk cache); the
  // value is trusted only after an eigenvalue spot check.
  bool adopt(const std::string& kind, const Partition& la, const SymFunc& value);

 private:
  struct DegreeData {
    bool built = false;
    std::vector<Partition> partitions;
    std::map<Partition, int> index;
    Matrix j_matrix_inv;  // p-coordinates -> J-coordinates
  };

  void build_degree(int d);
  const SymFunc& get(std::map<Partition, SymFunc>& store, const Partition& la,
                     const char* what);

  std::mutex mutex_;
  std::map<Partition, SymFunc> p_, q_, j_;
  std::map<int, DegreeData> degrees_;
};

// Shared process-wide table.
MacdonaldTable& macdonald();

// Orthogonality, norms, eigenvalues, both Pieri expansions and the first-mode
// formulas, all at degree <= nmax (box sums up to power rmax).
Report verify_macdonald_core(int nmax, int rmax);

// e_k of the alphabet {q^j x : j >= 0, x in s^la}; exact rational function.
Coeff e_k_s_alphabet_geometric(const Partition& la, int k);

}  // namespace qvir
