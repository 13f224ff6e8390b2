#pragma once

#include "qvir/fock.hpp"
#include "qvir/macdonald.hpp"
#include "qvir/report.hpp"

namespace qvir {

// Product-form coefficient of P_la in the Whittaker vector:
//   prod_s k / (1 - k^2 q^j t^-i) * q^arm / (1 - q^(arm+1) t^leg).
Coeff gamma_coeff(const Partition& la);

// Degree-n component sum_{la |- n} P_la gamma_la, over Q(q,t,k).
SymFunc whittaker_vector(int n);

// Integral-form components: v_r = sum J_la q^{n(la')} h_r[B_la] / <J,J>.
SymFunc whittaker_v_r(int n, int r);
// Closed u-form: sum J_la q^{n(la')} / (<J,J> prod(1 - u B_s)); exact in u.
SymFunc whittaker_v_u(int n);

// r = 0 slice and its exponential closed form.
SymFunc whittaker_v0(int n);
SymFunc whittaker_v0_closed(int n);
// The eta-side vector with t^{n(la)} weights and its closed form.
SymFunc whittaker_vinf(int n);
SymFunc whittaker_vinf_closed(int n);

// The graded T_1 descent carries the fixed scale (q/t)^(-1/2):
//   T_1 v_{n+1} = whittaker_descent_scale() * v_n.
// The free overall scale of the defining relation T_1 v = L v is pinned so
// that the closed product formula holds verbatim.
Coeff whittaker_descent_scale();

// Independent construction: solves {T_1 v = scale * v_{n-1}, T_d v = 0 for
// 2 <= d <= n} by exact elimination in the degree-n power-sum coordinates.
// Throws MathError if the system is not uniquely solvable. rank_out receives
// the coefficient-matrix rank (must equal dim of the degree-n component).
SymFunc whittaker_oracle_solve(int n, int* rank_out = nullptr);

// Parts (a)-(e): T-mode descent and annihilation, the u-form first mode
// relation, the D-annihilation of v0, the mixed eta/D relations with
// Delta_{h_r} computed two independent ways, and the eta-annihilation of
// vinf. All equalities are exact.
Report verify_whittaker(int nmax, int rmax);

}  // namespace qvir
