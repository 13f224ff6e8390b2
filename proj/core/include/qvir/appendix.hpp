#pragma once

#include "qvir/macdonald.hpp"
#include "qvir/report.hpp"

namespace qvir {

// The composite duality: omega_{q,t} followed by the parameter swap
// q -> 1/t, t -> 1/q. Applied twice it scales the alphabet by q/t.
SymFunc down_op(const SymFunc& f);

// down J_la = (-1/t)^{|la|} q^{-n(la)} t^{-n(la')} J_{la'}.
Coeff down_J_factor(const Partition& la);

// Duality of the Whittaker components: down v_la = (-q)^{|la|} v_{la'} and
// the aggregate version on each graded piece.
Report verify_v_down(int nmax);

// Mode conjugation: down Lambda^+-_d down = (-q)^{-d} Lambda^+-_d scale_{q/t},
// and on Whittaker components down Lambda^+-_d v_n = (-q)^{n-d} Lambda^+-_d v_n.
Report verify_Lambda_conjugation(int dmax, int nmax);

// tau_la: coefficients of the pure-lowering exponential in the P basis.
Coeff tau_closed(const Partition& la);
Coeff tau_recursive(const Partition& la);
std::map<Partition, Coeff> tau_from_series(int n);

// Three-way agreement of the tau computations up to degree nmax.
Report verify_tau(int nmax);

// Closed forms for the top Lambda modes on J_la, including the k (q/t)^(d/2)
// prefactor of the T split. `shifted_normalization` multiplies the expected
// prefactor by (q/t)^(+-1), the alternative convention; verify_top_modes runs
// both and records which one the direct mode computation matches.
Coeff lambda_top_plus(const Partition& la);
Coeff lambda_top_minus(const Partition& la);
Report verify_top_modes(int nmax);

// The terminating sum over partitions of n whose vanishing is equivalent to
// the top-mode annihilation T_n v_n = 0: exact zero in Q(q,t,u) for n >= 2;
// for n = 1 it equals the nonzero descent witness -1/((1-q)(1-t)).
Report verify_final_cauchy(int n);

}  // namespace qvir
