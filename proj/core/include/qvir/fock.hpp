#pragma once

#include "qvir/report.hpp"
#include "qvir/symfunc.hpp"

namespace qvir {

// Vertex-operator currents acting on the power-sum realization of the Fock
// space. Modes are degree-homogeneous: mode d maps degree n to degree n - d.
enum class Current {
  Eta,          // eta(z): raising 1-t^-n, lowering -(1-q^n)
  D,            // D(z):  lowering only, +(1-q^n); D_d = 0 for d < 0
  Psi,          // psi(z): raising only with (q/t)^(n/2) scalings; modes d <= 0
  LambdaPlus,   // Lambda^+(z)
  LambdaMinus,  // Lambda^-(z)
  T,            // T_d = k (q/t)^(d/2) Lambda^+_d + k^-1 (q/t)^(-d/2) Lambda^-_d
};

struct ModeOp {
  Current current;
  int d = 0;
};

// Exact action of one mode on a graded element.
SymFunc apply_mode(ModeOp op, const SymFunc& f);

inline SymFunc eta0_action(const SymFunc& f) {
  return apply_mode({Current::Eta, 0}, f);
}

// Coefficient of w^n in exp(sum_{m>=1} phi(m) p_m w^m / m).
SymFunc exp_p_series_term(const std::function<Coeff(int)>& phi, int n);

// Degree-n term of the distinguished Whittaker-type series for D(z):
// v0_term(n) = (-1)^n [w^n] exp(-sum p_m w^m / (m (1-q^m))).
SymFunc v0_series_term(int n);

// Constant-term realization of the Macdonald eigenoperator family: r nested
// eta currents with the (1-x)/(1-x/t) interaction factors, constant part in
// every variable. `term_cap` aborts runaway enumerations with MathError.
SymFunc E_hat_ct(int r, const SymFunc& f, long term_cap = 2000000);

// Coefficient-wise checks of the exchange relations between D(z), eta(z) and
// the v0 multiplication series, on all p_lambda of degree <= N with mode
// window |a|,|b| <= M.
Report verify_commutations(int N, int M);

// Mode form of psi(z) T(z) = eta((t/q)^(1/2) z) k + D((q/t)^(1/2) z) k^-1 on
// all p_lambda of degree <= n.
Report verify_psi_T_relation(int n);

// T_d against its split into the scaled Lambda^+- modes.
Report verify_lambda_T_split(int nmax);

// Commutator bookkeeping of the realized Heisenberg generators.
Report verify_heisenberg(int nmax);

// Constant-term realization against the diagonal eigen action, on the
// integral-form basis and on raw power sums of degree <= degmax.
Report verify_Ehat_ct_agreement(int rmax, int degmax);

}  // namespace qvir
