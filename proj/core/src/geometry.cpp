#include "qvir/geometry.hpp"

#include "qvir/fock.hpp"
#include "qvir/linalg.hpp"

namespace qvir {

namespace {

Coeff one() { return Coeff(1); }

}  // namespace

Coeff ch_tautological(const Partition& la) {
  Coeff q = Coeff::q(), t = Coeff::t();
  Coeff r;
  for (Box s : la.boxes()) r += q.pow(s.j - 1) * t.pow(s.i - 1);
  return r;
}

Coeff ch_cotangent_alt(const Partition& la) {
  Coeff q = Coeff::q(), t = Coeff::t();
  Coeff r = one();
  for (Box s : la.boxes()) {
    int a = arm(la, s), l = leg(la, s);
    r *= (one() - t.pow(-l) * q.pow(a + 1)) * (one() - t.pow(l + 1) * q.pow(-a));
  }
  return r;
}

SymFunc bold_transform(const SymFunc& f) {
  Coeff t = Coeff::t();
  std::map<Var, Coeff> tinv{{Var::t, t.inverse()}};
  SymFunc swapped = f.map_coeffs([&](const Coeff& c) { return c.substitute(tinv); });
  return swapped.pleth_diag([&](int n) { return (one() - t.pow(-n)).inverse(); });
}

Report verify_v0_geometry(int n) {
  Report rep;
  Coeff q = Coeff::q(), t = Coeff::t();
  rep.add(run_check("geometry", "v0-fixed-point-expansion",
                    {{"n", std::to_string(n)}}, [&](std::string& witness) {
    SymFunc fixed_points;
    for (const Partition& la : partitions_of(n))
      fixed_points += macdonald().modified_H(la).scale(
          ch_cotangent_alt(la).inverse());
    SymFunc closed = exp_p_series_term(
        [&](int m) {
          return ((one() - q.pow(m)) * (one() - t.pow(m))).inverse();
        },
        n);
    if (fixed_points != closed) {
      witness = "fixed-point sum vs closed exponential: " +
                (fixed_points - closed).to_string();
      return false;
    }
    // and against the transformed r = 0 slice, which carries (-t)^n
    SymFunc bold_v0 = bold_transform(v0_series_term(n));
    Coeff scale = t.pow(n);
    if (n % 2) scale = -scale;
    if (bold_v0 != closed.scale(scale)) {
      witness = "transformed slice mismatch";
      return false;
    }
    return true;
  }));
  return rep;
}

Report verify_nabla_linebundle(const Partition& la) {
  Report rep;
  Coeff q = Coeff::q(), t = Coeff::t();
  rep.add(run_check("geometry", "nabla-line-bundle", {{"la", la.to_string()}},
                    [&](std::string& witness) {
    Coeff prod = one();
    std::map<Var, Coeff> tinv{{Var::t, t.inverse()}};
    for (const Coeff& b : B_alphabet(la)) prod *= b.substitute(tinv);
    Coeff expected = q.pow(n_stat(la.conjugate())) * t.pow(n_stat(la));
    if (prod == expected) return true;
    witness = prod.to_string() + " != " + expected.to_string();
    return false;
  }));
  return rep;
}

Report verify_delta_schur(const Partition& mu, const Partition& f) {
  Report rep;
  rep.add(run_check("geometry", "delta-schur-eigenvalue",
                    {{"mu", mu.to_string()}, {"f", f.to_string()}},
                    [&](std::string& witness) {
    SymFunc sf = schur(f);
    SymFunc lhs = macdonald().delta_sym(sf, macdonald().J(mu));
    Coeff eigen = eval_on_alphabet(sf, B_alphabet(mu));
    SymFunc rhs = macdonald().J(mu).scale(eigen);
    if (lhs == rhs) return true;
    witness = (lhs - rhs).to_string();
    return false;
  }));
  // s_(1^n) = e_n realizes nabla on degree-n elements.
  if (f.size() == mu.size() && f == Partition(std::vector<int>(mu.size(), 1))) {
    rep.add(run_check("geometry", "delta-schur-nabla",
                      {{"mu", mu.to_string()}}, [&](std::string& witness) {
      SymFunc lhs = macdonald().delta_sym(schur(f), macdonald().J(mu));
      SymFunc rhs = macdonald().nabla(macdonald().J(mu));
      if (lhs == rhs) return true;
      witness = (lhs - rhs).to_string();
      return false;
    }));
  }
  return rep;
}

Report verify_characters(int nmax) {
  Report rep;
  Coeff q = Coeff::q(), t = Coeff::t();
  std::map<Var, Coeff> tinv{{Var::t, t.inverse()}};
  for (int n = 0; n <= nmax; ++n) {
    for (const Partition& la : partitions_of(n)) {
      rep.add(run_check("geometry", "tautological-character",
                        {{"la", la.to_string()}}, [&](std::string& witness) {
        Coeff lhs = ch_tautological(la);
        Coeff rhs;
        for (const Coeff& b : B_alphabet(la)) rhs += b.substitute(tinv);
        if (la.empty() && !lhs.is_zero()) {
          witness = "empty diagram has nonzero character";
          return false;
        }
        if (lhs == rhs) return true;
        witness = lhs.to_string() + " != " + rhs.to_string();
        return false;
      }));
      rep.add(run_check("geometry", "cotangent-character",
                        {{"la", la.to_string()}}, [&](std::string& witness) {
        Coeff lhs = ch_cotangent_alt(la);
        Coeff rhs = c_factor_at(la, q.inverse(), t) *
                    cprime_factor_at(la, q, t.inverse());
        if (lhs != rhs) {
          witness = "product form vs c-form";
          return false;
        }
        // and the norm table under the same substitutions
        Coeff norm = c_factor(la).substitute(
                         std::map<Var, Coeff>{{Var::q, q.inverse()}}) *
                     cprime_factor(la).substitute(tinv);
        if (lhs != norm) {
          witness = "norm-table form differs";
          return false;
        }
        return true;
      }));
    }
  }
  return rep;
}

Report verify_modified_H_integrality(int nmax) {
  Report rep;
  for (int n = 0; n <= nmax; ++n) {
    for (const Partition& la : partitions_of(n)) {
      rep.add(run_check("geometry", "modified-H-integrality",
                        {{"la", la.to_string()}}, [&](std::string& witness) {
        SymFunc h = macdonald().modified_H(la);
        const BasisTables& tab = basis_tables(n);
        // convert to the monomial basis: coords_m = p_to_m^T coords_p
        for (std::size_t mcol = 0; mcol < tab.partitions.size(); ++mcol) {
          Coeff c;
          for (std::size_t prow = 0; prow < tab.partitions.size(); ++prow) {
            Coeff pc = h.coeff(tab.partitions[prow]);
            if (!pc.is_zero()) c += tab.p_to_m[prow][mcol] * pc;
          }
          if (!c.den().is_one() || !c.has_integer_exponents()) {
            witness = "m" + tab.partitions[mcol].to_string() + " coefficient " +
                      c.to_string();
            return false;
          }
        }
        return true;
      }));
    }
  }
  return rep;
}

}  // namespace qvir
