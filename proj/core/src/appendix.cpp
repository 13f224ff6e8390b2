#include "qvir/appendix.hpp"

#include <mutex>

#include "qvir/fock.hpp"
#include "qvir/whittaker.hpp"

namespace qvir {

namespace {

Coeff one() { return Coeff(1); }

// Partitions mu inside la with la/mu a vertical strip of size r.
std::vector<Partition> remove_vertical_strips(const Partition& la, int r) {
  std::vector<Partition> out;
  std::vector<int> cur;
  int l = la.length();
  auto recurse = [&](auto&& self, int row, int removed) -> void {
    if (row > l) {
      if (removed == r) {
        std::vector<int> parts = cur;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out.push_back(Partition(std::move(parts)));
      }
      return;
    }
    for (int drop = 0; drop <= 1 && removed + drop <= r; ++drop) {
      int p = la.part(row) - drop;
      if (!cur.empty() && p > cur.back()) continue;
      if (p < 0) continue;
      if (!cur.empty() && cur.back() == 0 && p > 0) continue;
      cur.push_back(p);
      self(self, row + 1, removed + drop);
      cur.pop_back();
    }
  };
  recurse(recurse, 1, 0);
  return out;
}

}  // namespace

SymFunc down_op(const SymFunc& f) { return iota_swap(omega_qt(f)); }

Coeff down_J_factor(const Partition& la) {
  Coeff q = Coeff::q(), t = Coeff::t();
  Coeff r = t.pow(-la.size()) * q.pow(-n_stat(la)) *
            t.pow(-n_stat(la.conjugate()));
  return la.size() % 2 ? -r : r;
}

Report verify_v_down(int nmax) {
  Report rep;
  Coeff q = Coeff::q();
  for (int n = 0; n <= nmax; ++n) {
    for (const Partition& la : partitions_of(n)) {
      rep.add(run_check("appendix", "down-J", {{"la", la.to_string()}},
                        [&](std::string& witness) {
        SymFunc lhs = down_op(macdonald().J(la));
        SymFunc rhs = macdonald().J(la.conjugate()).scale(down_J_factor(la));
        if (lhs == rhs) return true;
        witness = (lhs - rhs).to_string();
        return false;
      }));
      rep.add(run_check("appendix", "down-whittaker-component",
                        {{"la", la.to_string()}}, [&](std::string& witness) {
        SymFunc lhs = down_op(macdonald().P(la).scale(gamma_coeff(la)));
        Coeff factor = q.pow(n);
        if (n % 2) factor = -factor;
        SymFunc rhs = macdonald()
                          .P(la.conjugate())
                          .scale(gamma_coeff(la.conjugate()) * factor);
        if (lhs == rhs) return true;
        witness = (lhs - rhs).to_string();
        return false;
      }));
    }
    rep.add(run_check("appendix", "down-whittaker-graded",
                      {{"n", std::to_string(n)}}, [&](std::string& witness) {
      SymFunc v = whittaker_vector(n);
      SymFunc lhs = down_op(v);
      Coeff factor = q.pow(n);
      if (n % 2) factor = -factor;
      if (lhs == v.scale(factor)) return true;
      witness = (lhs - v.scale(factor)).to_string();
      return false;
    }));
  }
  // down twice scales the alphabet by q/t.
  rep.add(run_check("appendix", "down-squared-is-scaling",
                    {{"nmax", std::to_string(nmax)}}, [&](std::string& witness) {
    Coeff q = Coeff::q(), t = Coeff::t();
    for (int n = 0; n <= nmax; ++n) {
      for (const Partition& la : partitions_of(n)) {
        SymFunc f = macdonald().J(la);
        SymFunc lhs = down_op(down_op(f));
        SymFunc rhs = scale_alphabet(f, q / t);
        if (lhs != rhs) {
          witness = la.to_string();
          return false;
        }
      }
    }
    return true;
  }));
  return rep;
}

Report verify_Lambda_conjugation(int dmax, int nmax) {
  Report rep;
  Coeff q = Coeff::q(), t = Coeff::t();
  for (int d = 0; d <= dmax; ++d) {
    rep.add(run_check("appendix", "down-lambda-mode-conjugation",
                      {{"d", std::to_string(d)}, {"nmax", std::to_string(nmax)}},
                      [&](std::string& witness) {
      for (int n = 0; n <= nmax; ++n) {
        for (const Partition& la : partitions_of(n)) {
          SymFunc f = SymFunc::p(la);
          for (Current cur : {Current::LambdaPlus, Current::LambdaMinus}) {
            SymFunc lhs = down_op(apply_mode({cur, d}, down_op(f)));
            Coeff factor = q.pow(-d);
            if (d % 2) factor = -factor;
            SymFunc rhs =
                apply_mode({cur, d}, scale_alphabet(f, q / t)).scale(factor);
            if (lhs != rhs) {
              witness = "basis " + la.to_string() +
                        (cur == Current::LambdaPlus ? " plus" : " minus");
              return false;
            }
          }
        }
      }
      return true;
    }));
    for (int n = d; n <= nmax; ++n) {
      rep.add(run_check("appendix", "down-lambda-on-whittaker",
                        {{"d", std::to_string(d)}, {"n", std::to_string(n)}},
                        [&](std::string& witness) {
        SymFunc v = whittaker_vector(n);
        for (Current cur : {Current::LambdaPlus, Current::LambdaMinus}) {
          SymFunc image = apply_mode({cur, d}, v);
          SymFunc lhs = down_op(image);
          Coeff factor = q.pow(n - d);
          if ((n - d) % 2) factor = -factor;
          if (lhs != image.scale(factor)) {
            witness = cur == Current::LambdaPlus ? "plus" : "minus";
            return false;
          }
        }
        return true;
      }));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// tau coefficients

Coeff tau_closed(const Partition& la) {
  if (la.empty()) throw MathError("tau_closed needs a nonempty partition");
  Coeff q = Coeff::q(), t = Coeff::t();
  Coeff e1;
  Coeff prod = one();
  for (Box s : la.boxes()) {
    Coeff b = B_box(s);
    e1 += b;
    if (!(s.i == 1 && s.j == 1)) prod *= one() - b;
  }
  return (one() - q) * (t - one()) * t.pow(la.size() - 1 + n_stat(la)) * e1 *
         prod / cprime_factor(la);
}

namespace {

std::mutex tau_mutex;
std::map<Partition, Coeff> tau_memo;

}  // namespace

Coeff tau_recursive(const Partition& la) {
  if (la.empty()) throw MathError("tau_recursive needs a nonempty partition");
  {
    std::lock_guard<std::mutex> lock(tau_mutex);
    auto it = tau_memo.find(la);
    if (it != tau_memo.end()) return it->second;
  }
  int n = la.size();
  Coeff t = Coeff::t();
  Coeff acc;
  for (int r = 1; r <= n - 1; ++r) {
    Coeff sum;
    for (const Partition& mu : remove_vertical_strips(la, r)) {
      if (mu.empty()) continue;  // tau_mu defined for nonempty mu
      sum += tau_recursive(mu) * psi_prime(la, mu);
    }
    Coeff term = t.pow(r) * sum;
    acc += r % 2 ? term : -term;
  }
  if (la == Partition(std::vector<int>(n, 1))) {
    Coeff term = t.pow(n) - one();
    acc += n % 2 ? term : -term;
  }
  {
    std::lock_guard<std::mutex> lock(tau_mutex);
    tau_memo.emplace(la, acc);
  }
  return acc;
}

std::map<Partition, Coeff> tau_from_series(int n) {
  // R_n = sum_{m=0..n} (-1)^(n-m) e_{n-m} h_m t^m, expanded in the P basis.
  Coeff t = Coeff::t();
  SymFunc rn;
  for (int m = 0; m <= n; ++m) {
    SymFunc term = elementary(n - m) * complete(m);
    term = term.scale(t.pow(m));
    rn += (n - m) % 2 ? -term : term;
  }
  std::map<Partition, Coeff> out;
  for (const auto& [la, cj] : macdonald().expand_in_J(rn))
    out[la] = cj * c_factor(la);
  return out;
}

Report verify_tau(int nmax) {
  Report rep;
  for (int n = 1; n <= nmax; ++n) {
    rep.add(run_check("appendix", "tau-triple-agreement",
                      {{"n", std::to_string(n)}}, [&](std::string& witness) {
      std::map<Partition, Coeff> series = tau_from_series(n);
      for (const Partition& la : partitions_of(n)) {
        Coeff closed = tau_closed(la);
        Coeff rec = tau_recursive(la);
        Coeff ser = series.count(la) ? series.at(la) : Coeff();
        if (closed != rec || closed != ser) {
          witness = la.to_string() + ": closed=" + closed.to_string() +
                    " recursive=" + rec.to_string() + " series=" + ser.to_string();
          return false;
        }
      }
      return true;
    }));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// top modes

Coeff lambda_top_plus(const Partition& la) {
  if (la.empty()) throw MathError("top mode needs a nonempty partition");
  return Coeff::k() * Coeff::half_power_qt(la.size()) * tau_closed(la) *
         cprime_factor(la);
}

Coeff lambda_top_minus(const Partition& la) {
  if (la.empty()) throw MathError("top mode needs a nonempty partition");
  Coeff q = Coeff::q(), t = Coeff::t();
  Coeff e_min1;
  Coeff prod = one();
  for (Box s : la.boxes()) {
    Coeff b = B_box(s);
    e_min1 += b.inverse();
    if (!(s.i == 1 && s.j == 1)) prod *= one() - b;
  }
  Coeff tau_tilde_cprime = (one() - q) * (one() - t) * q.pow(la.size() - 1) *
                           t.pow(n_stat(la)) * e_min1 * prod;
  return Coeff::k().inverse() * Coeff::half_power_qt(-la.size()) *
         tau_tilde_cprime;
}

Report verify_top_modes(int nmax) {
  Report rep;
  Coeff k = Coeff::k();
  for (int n = 1; n <= nmax; ++n) {
    for (const Partition& la : partitions_of(n)) {
      rep.add(run_check("appendix", "lambda-top-modes", {{"la", la.to_string()}},
                        [&](std::string& witness) {
        const SymFunc& J = macdonald().J(la);
        SymFunc plus = apply_mode({Current::LambdaPlus, n}, J);
        SymFunc minus = apply_mode({Current::LambdaMinus, n}, J);
        // direct modes with the T-split prefactors
        SymFunc lhs_plus = plus.scale(k * Coeff::half_power_qt(n));
        SymFunc lhs_minus = minus.scale(k.inverse() * Coeff::half_power_qt(-n));
        SymFunc rhs_plus = SymFunc::one().scale(lambda_top_plus(la));
        SymFunc rhs_minus = SymFunc::one().scale(lambda_top_minus(la));
        bool plain = lhs_plus == rhs_plus && lhs_minus == rhs_minus;
        // shifted convention: an extra (q/t)^{+-1} on the prefactors
        Coeff shift = Coeff::q() / Coeff::t();
        bool shifted = lhs_plus.scale(shift) == rhs_plus &&
                       lhs_minus.scale(shift.inverse()) == rhs_minus;
        if (plain && !shifted) return true;  // the split convention matches
        witness = plain ? "both conventions match" :
                  shifted ? "only the shifted convention matches"
                          : "neither convention matches";
        return false;
      }));
    }
  }
  return rep;
}

Report verify_final_cauchy(int n) {
  Report rep;
  rep.add(run_check("appendix", "top-mode-cauchy-sum", {{"n", std::to_string(n)}},
                    [&](std::string& witness) {
    if (n < 1) return true;
    Coeff q = Coeff::q(), t = Coeff::t(), u = Coeff::u();
    Coeff total;
    for (const Partition& la : partitions_of(n)) {
      Coeff e1, em1;
      Coeff prod = one(), hu = one();
      for (Box s : la.boxes()) {
        Coeff b = B_box(s);
        e1 += b;
        em1 += b.inverse();
        hu *= one() - u * b;
        if (!(s.i == 1 && s.j == 1)) prod *= one() - b;
      }
      Coeff term = q.pow(n_stat(la.conjugate())) * t.pow(n_stat(la)) * prod /
                   (c_factor(la) * cprime_factor(la));
      term *= (u * e1 - em1) / hu;
      total += term;
    }
    Coeff expected =
        n == 1 ? -((one() - q) * (one() - t)).inverse() : Coeff();
    if (total == expected) return true;
    witness = "sum = " + total.to_string();
    return false;
  }));
  return rep;
}

}  // namespace qvir
