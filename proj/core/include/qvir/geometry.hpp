#pragma once

#include "qvir/macdonald.hpp"
#include "qvir/report.hpp"

namespace qvir {

// Character of the tautological fiber at the fixed point of shape la:
// sum_{(i,j) in la} q^(j-1) t^(i-1).
Coeff ch_tautological(const Partition& la);

// Alternating cotangent character: prod (1 - t^-leg q^(arm+1))(1 - t^(leg+1) q^-arm).
Coeff ch_cotangent_alt(const Partition& la);

// t -> 1/t in the coefficients, then p_r -> p_r / (1 - t^-r).
SymFunc bold_transform(const SymFunc& f);

// Fixed-point expansion of the transformed v0 series against the modified
// Macdonald functions: sum_{la |- n} H~_la / ch_cotangent_alt(la) equals the
// degree-n term of exp(sum p_m / (m (1-q^m)(1-t^m))), which is (-t)^{-n}
// times the transformed degree-n slice.
Report verify_v0_geometry(int n);

// Determinant line: prod B_s at (q, 1/t) equals q^{n(la')} t^{n(la)}.
Report verify_nabla_linebundle(const Partition& la);

// Delta_{s_f} as a diagonal operator: eigenvalue s_f[B_mu] on J_mu, and
// Delta_{s_(1^n)} = nabla on degree-n elements.
Report verify_delta_schur(const Partition& mu, const Partition& f);

// Monomial-basis coefficients of H~_la lie in Z[q,t] (smoke check).
Report verify_modified_H_integrality(int nmax);

// Both fixed-point characters against their alphabet and norm-table forms.
Report verify_characters(int nmax);

}  // namespace qvir
