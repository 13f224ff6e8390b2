#include "qvir/fock.hpp"

#include <algorithm>

#include "qvir/macdonald.hpp"

namespace qvir {

namespace {

Coeff one() { return Coeff(1); }

struct VertexSpec {
  std::function<Coeff(int)> raise;  // exp(sum raise(n) p_n z^n / n)
  std::function<Coeff(int)> lower;  // exp(sum lower(n) d/dp_n z^-n)
};

// [z^-b] of the lowering exponential applied to f (b >= 0).
SymFunc lowering_mode(const VertexSpec& v, int b, const SymFunc& f) {
  if (b == 0) return f;
  SymFunc acc;
  for (const Partition& mu : partitions_of(b)) {
    Coeff c = one();
    for (int p : mu.parts()) c *= v.lower(p);
    if (c.is_zero()) continue;
    // divide by the multiplicity factorials of equal parts
    long fact = 1, run = 1;
    for (int i = 2; i <= mu.length(); ++i) {
      if (mu.part(i) == mu.part(i - 1))
        fact *= ++run;
      else
        run = 1;
    }
    SymFunc g = f;
    for (int p : mu.parts()) {
      g = g.d_dp(p);
      if (g.is_zero()) break;
    }
    if (!g.is_zero()) acc += g.scale(c / Coeff(fact));
  }
  return acc;
}

// [z^a] of the raising exponential times g (a >= 0).
SymFunc raising_mode(const VertexSpec& v, int a, const SymFunc& g) {
  if (a == 0) return g;
  SymFunc acc;
  for (const Partition& nu : partitions_of(a)) {
    Coeff c = one();
    for (int p : nu.parts()) c *= v.raise(p);
    if (c.is_zero()) continue;
    c /= Coeff(z_stat(nu));
    acc += (SymFunc::p(nu) * g).scale(c);
  }
  return acc;
}

// Full mode d of raising * lowering.
SymFunc vertex_mode(const VertexSpec& v, int d, const SymFunc& f) {
  SymFunc out;
  int n = f.max_degree();
  for (int b = std::max(0, d); b <= n; ++b) {
    SymFunc low = lowering_mode(v, b, f);
    if (low.is_zero()) continue;
    out += raising_mode(v, b - d, low);
  }
  return out;
}

VertexSpec eta_spec() {
  Coeff q = Coeff::q(), t = Coeff::t();
  return {[=](int n) { return one() - t.pow(-n); },
          [=](int n) { return -(one() - q.pow(n)); }};
}

VertexSpec d_spec() {
  Coeff q = Coeff::q();
  return {[](int) { return Coeff(); },
          [=](int n) { return one() - q.pow(n); }};
}

Coeff lambda_raise_base(int n) {
  Coeff q = Coeff::q(), t = Coeff::t();
  return (one() - t.pow(-n)) / (one() + (q / t).pow(n));
}

VertexSpec lambda_spec(bool plus) {
  Coeff q = Coeff::q();
  return {[=](int n) {
            Coeff r = lambda_raise_base(n);
            return plus ? r : -r;
          },
          [=](int n) {
            Coeff l = one() - q.pow(n);
            return plus ? -l : l;
          }};
}

VertexSpec psi_spec() {
  return {[](int n) { return lambda_raise_base(n) * Coeff::half_power_qt(n); },
          [](int) { return Coeff(); }};
}

// The two halves of T(z) as z-scaled Lambda currents (without the k factors).
VertexSpec t_plus_spec() {
  Coeff q = Coeff::q();
  return {[=](int n) { return lambda_raise_base(n) * Coeff::half_power_qt(-n); },
          [=](int n) { return -(one() - q.pow(n)) * Coeff::half_power_qt(n); }};
}

VertexSpec t_minus_spec() {
  Coeff q = Coeff::q();
  return {[=](int n) { return -lambda_raise_base(n) * Coeff::half_power_qt(n); },
          [=](int n) { return (one() - q.pow(n)) * Coeff::half_power_qt(-n); }};
}

}  // namespace

SymFunc apply_mode(ModeOp op, const SymFunc& f) {
  switch (op.current) {
    case Current::Eta:
      return vertex_mode(eta_spec(), op.d, f);
    case Current::D:
      if (op.d < 0) return SymFunc::zero();
      return vertex_mode(d_spec(), op.d, f);
    case Current::Psi:
      if (op.d > 0) return SymFunc::zero();
      return raising_mode(psi_spec(), -op.d, f);
    case Current::LambdaPlus:
      return vertex_mode(lambda_spec(true), op.d, f);
    case Current::LambdaMinus:
      return vertex_mode(lambda_spec(false), op.d, f);
    case Current::T: {
      SymFunc plus = vertex_mode(t_plus_spec(), op.d, f);
      SymFunc minus = vertex_mode(t_minus_spec(), op.d, f);
      return plus.scale(Coeff::k()) + minus.scale(Coeff::k().inverse());
    }
  }
  throw MathError("unknown current");
}

SymFunc exp_p_series_term(const std::function<Coeff(int)>& phi, int n) {
  if (n < 0) throw MathError("negative series order");
  SymFunc acc;
  for (const Partition& nu : partitions_of(n)) {
    Coeff c = one();
    for (int p : nu.parts()) c *= phi(p);
    if (!c.is_zero()) acc += SymFunc::p(nu, c / Coeff(z_stat(nu)));
  }
  return acc;
}

SymFunc v0_series_term(int n) {
  Coeff q = Coeff::q();
  SymFunc term = exp_p_series_term(
      [&](int m) { return -(one() - q.pow(m)).inverse(); }, n);
  return n % 2 ? -term : term;
}

// ---------------------------------------------------------------------------
// Constant-term realization of E_r

namespace {

// Coefficients of (1-x)/(1-x/t) as a series in x.
Coeff epsilon_series_coeff(int m) {
  Coeff t = Coeff::t();
  if (m == 0) return one();
  return t.pow(-m) - t.pow(-(m - 1));
}

}  // namespace

SymFunc E_hat_ct(int r, const SymFunc& f, long term_cap) {
  if (r < 1) throw MathError("E_hat_ct needs r >= 1");
  VertexSpec eta = eta_spec();
  int n = f.max_degree();
  Coeff t = Coeff::t();

  Coeff pref = t.pow(-static_cast<long>(r) * (r + 1) / 2);
  for (int k = 1; k <= r; ++k) pref /= one() - t.pow(-k);

  // Interaction pairs (i, j), i < j, carrying powers z_j^m z_i^-m, grouped by
  // j descending so the exponent bounds cascade from the last variable.
  std::vector<std::pair<int, int>> pairs;
  for (int j = r; j >= 2; --j)
    for (int i = 1; i < j; ++i) pairs.push_back({i, j});

  long terms = 0;
  SymFunc out;
  std::vector<int> lower_deg(r + 1, 0), eps_pow;
  eps_pow.assign(pairs.size(), 0);

  // Enumerate lowering degrees d_1..d_r, then the interaction exponents.
  auto enumerate_eps = [&](auto&& self, std::size_t idx, const SymFunc& lowered,
                           const Coeff& eps_coeff) -> void {
    if (idx == pairs.size()) {
      if (++terms > term_cap) throw MathError("E_hat_ct term cap exceeded");
      // raising exponent of each variable fixed by the constant-term condition
      SymFunc g = lowered;
      for (int v = 1; v <= r && !g.is_zero(); ++v) {
        long a = lower_deg[v];
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          if (pairs[p].second == v) a -= eps_pow[p];
          if (pairs[p].first == v) a += eps_pow[p];
        }
        if (a < 0) return;
        g = raising_mode(eta, static_cast<int>(a), g);
      }
      if (!g.is_zero()) out += g.scale(eps_coeff);
      return;
    }
    auto [i, j] = pairs[idx];
    // Exponent bound for variable j: received powers cannot exceed its
    // lowering degree plus what it sends to later variables.
    long sent = 0, received = 0;
    for (std::size_t p = 0; p < idx; ++p) {
      if (pairs[p].first == j) sent += eps_pow[p];
      if (pairs[p].second == j) received += eps_pow[p];
    }
    long bound = lower_deg[j] + sent - received;
    for (long m = 0; m <= bound; ++m) {
      eps_pow[idx] = static_cast<int>(m);
      Coeff c = eps_coeff * epsilon_series_coeff(static_cast<int>(m));
      if (!c.is_zero()) self(self, idx + 1, lowered, c);
    }
    eps_pow[idx] = 0;
  };

  auto enumerate_lower = [&](auto&& self, int v, int remaining,
                             const SymFunc& g) -> void {
    if (g.is_zero()) return;
    if (v > r) {
      enumerate_eps(enumerate_eps, 0, g, one());
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      lower_deg[v] = d;
      self(self, v + 1, remaining - d, lowering_mode(eta, d, g));
    }
    lower_deg[v] = 0;
  };

  enumerate_lower(enumerate_lower, 1, n, f);
  return out.scale(pref);
}

// ---------------------------------------------------------------------------
// Exchange-relation checks

namespace {

// Series coefficients of (1-qx)(1-x/t) / ((1-x)(1-xq/t)) up to order M.
std::vector<Coeff> f_series(int M) {
  Coeff q = Coeff::q(), t = Coeff::t();
  // numerator coefficients
  std::vector<Coeff> num{one(), -(q + t.inverse()), q / t};
  std::vector<Coeff> den{one(), -(one() + q / t), q / t};
  std::vector<Coeff> inv(M + 1), out(M + 1);
  inv[0] = one();
  for (int n = 1; n <= M; ++n) {
    Coeff s;
    for (int i = 1; i <= std::min(n, 2); ++i) s += den[i] * inv[n - i];
    inv[n] = -s;
  }
  for (int n = 0; n <= M; ++n) {
    Coeff s;
    for (int i = 0; i <= std::min(n, 2); ++i) s += num[i] * inv[n - i];
    out[n] = s;
  }
  return out;
}

// Series coefficients of (1-x)(1-qx/t) / ((1-qx)(1-x/t)) up to order M.
std::vector<Coeff> g_series(int M) {
  Coeff q = Coeff::q(), t = Coeff::t();
  std::vector<Coeff> num{one(), -(one() + q / t), q / t};
  std::vector<Coeff> den{one(), -(q + t.inverse()), q / t};
  std::vector<Coeff> inv(M + 1), out(M + 1);
  inv[0] = one();
  for (int n = 1; n <= M; ++n) {
    Coeff s;
    for (int i = 1; i <= std::min(n, 2); ++i) s += den[i] * inv[n - i];
    inv[n] = -s;
  }
  for (int n = 0; n <= M; ++n) {
    Coeff s;
    for (int i = 0; i <= std::min(n, 2); ++i) s += num[i] * inv[n - i];
    out[n] = s;
  }
  return out;
}

SymFunc eta_mode(int d, const SymFunc& f) { return apply_mode({Current::Eta, d}, f); }
SymFunc d_mode(int d, const SymFunc& f) { return apply_mode({Current::D, d}, f); }

// Mode (alpha, beta) of the normal-ordered product :eta(z) eta(w):.
SymFunc normal_pair_mode(int alpha, int beta, const SymFunc& f) {
  VertexSpec eta = eta_spec();
  int n = f.max_degree();
  SymFunc out;
  for (int l1 = 0; l1 <= n; ++l1) {
    int r1 = l1 - alpha;
    if (r1 < 0) continue;
    for (int l2 = 0; l1 + l2 <= n; ++l2) {
      int r2 = l2 - beta;
      if (r2 < 0) continue;
      SymFunc g = lowering_mode(eta, l2, f);
      if (g.is_zero()) continue;
      g = lowering_mode(eta, l1, g);
      if (g.is_zero()) continue;
      g = raising_mode(eta, r2, g);
      g = raising_mode(eta, r1, g);
      out += g;
    }
  }
  return out;
}

std::vector<Partition> basis_up_to(int N) {
  std::vector<Partition> basis;
  for (int d = 0; d <= N; ++d)
    for (const Partition& la : partitions_of(d)) basis.push_back(la);
  return basis;
}

}  // namespace

Report verify_commutations(int N, int M) {
  Report rep;
  const std::string suite = "fock";
  std::vector<Coeff> fs = f_series(2 * M + N + 2);
  std::vector<Coeff> gs = g_series(2 * M + N + 2);

  std::vector<SymFunc> v0(N + 1);
  for (int n = 0; n <= N; ++n) v0[n] = v0_series_term(n);

  for (const Partition& la : basis_up_to(N)) {
    SymFunc f = SymFunc::p(la);
    int deg = la.size();
    auto params = [&](int a, int b) {
      return std::map<std::string, std::string>{
          {"basis", la.to_string()}, {"a", std::to_string(a)}, {"b", std::to_string(b)}};
    };

    rep.add(run_check(suite, "exchange-D-eta", {{"basis", la.to_string()}, {"window", std::to_string(M)}},
                      [&](std::string& witness) {
      for (int a = 0; a <= M; ++a) {
        for (int b = -M; b <= M; ++b) {
          SymFunc lhs = d_mode(a, eta_mode(b, f));
          SymFunc rhs;
          for (int m = 0; m <= a; ++m) {
            SymFunc dm = d_mode(a - m, f);
            if (dm.is_zero()) continue;
            rhs += eta_mode(b + m, dm).scale(fs[m]);
          }
          if (lhs != rhs) {
            witness = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            return false;
          }
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "exchange-eta-eta", {{"basis", la.to_string()}, {"window", std::to_string(M)}},
                      [&](std::string& witness) {
      for (int a = -M; a <= M; ++a) {
        for (int b = -M; b <= M; ++b) {
          SymFunc lhs = eta_mode(a, eta_mode(b, f));
          SymFunc rhs;
          for (int m = 0; b + m <= deg; ++m)
            rhs += normal_pair_mode(a - m, b + m, f).scale(gs[m]);
          if (lhs != rhs) {
            witness = "a=" + std::to_string(a) + " b=" + std::to_string(b);
            return false;
          }
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "exchange-D-v0", {{"basis", la.to_string()}, {"window", std::to_string(M)}},
                      [&](std::string& witness) {
      for (int a = 0; a <= M; ++a) {
        for (int n = 0; n <= N; ++n) {
          SymFunc lhs = d_mode(a, v0[n] * f);
          SymFunc rhs = v0[n] * d_mode(a, f);
          if (n >= 1 && a >= 1) rhs += v0[n - 1] * d_mode(a - 1, f);
          if (lhs != rhs) {
            witness = "a=" + std::to_string(a) + " n=" + std::to_string(n);
            return false;
          }
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "exchange-eta-v0", {{"basis", la.to_string()}, {"window", std::to_string(M)}},
                      [&](std::string& witness) {
      for (int a = -M; a <= M; ++a) {
        for (int n = 0; n <= N; ++n) {
          SymFunc lhs = eta_mode(a, v0[n] * f);
          SymFunc rhs;
          for (int m = 0; m <= n; ++m) {
            SymFunc term = v0[n - m] * eta_mode(a - m, f);
            rhs += m % 2 ? -term : term;
          }
          if (lhs != rhs) {
            witness = "a=" + std::to_string(a) + " n=" + std::to_string(n);
            return false;
          }
        }
      }
      return true;
    }));
    (void)params;
  }
  return rep;
}

Report verify_psi_T_relation(int n) {
  Report rep;
  Coeff kk = Coeff::k();
  for (const Partition& la : basis_up_to(n)) {
    SymFunc f = SymFunc::p(la);
    rep.add(run_check("fock", "psi-T-mode-relation", {{"basis", la.to_string()}},
                      [&](std::string& witness) {
      for (int d = 0; d <= n; ++d) {
        SymFunc lhs;
        for (int j = 0; d + j <= std::max(d, la.size()); ++j) {
          SymFunc tf = apply_mode({Current::T, d + j}, f);
          if (tf.is_zero()) continue;
          lhs += apply_mode({Current::Psi, -j}, tf);
        }
        SymFunc rhs =
            apply_mode({Current::Eta, d}, f).scale(kk * Coeff::half_power_qt(d)) +
            apply_mode({Current::D, d}, f).scale(kk.inverse() * Coeff::half_power_qt(-d));
        if (lhs != rhs) {
          witness = "d=" + std::to_string(d);
          return false;
        }
      }
      return true;
    }));
  }
  return rep;
}

Report verify_lambda_T_split(int nmax) {
  Report rep;
  Coeff kk = Coeff::k();
  for (const Partition& la : basis_up_to(nmax)) {
    SymFunc f = SymFunc::p(la);
    rep.add(run_check("fock", "T-lambda-split", {{"basis", la.to_string()}},
                      [&](std::string& witness) {
      for (int d = -nmax; d <= nmax; ++d) {
        SymFunc lhs = apply_mode({Current::T, d}, f);
        SymFunc rhs =
            apply_mode({Current::LambdaPlus, d}, f).scale(kk * Coeff::half_power_qt(d)) +
            apply_mode({Current::LambdaMinus, d}, f)
                .scale(kk.inverse() * Coeff::half_power_qt(-d));
        if (lhs != rhs) {
          witness = "d=" + std::to_string(d);
          return false;
        }
      }
      return true;
    }));
  }
  return rep;
}

Report verify_heisenberg(int nmax) {
  Report rep;
  Coeff q = Coeff::q(), t = Coeff::t();
  auto a_pos = [&](int m, const SymFunc& f) {
    return f.d_dp(m).scale(Coeff(m) * (one() - q.pow(m)) / (one() - t.pow(m)));
  };
  auto a_neg = [&](int m, const SymFunc& f) { return SymFunc::p(m) * f; };
  for (const Partition& la : basis_up_to(nmax)) {
    SymFunc f = SymFunc::p(la);
    rep.add(run_check("fock", "heisenberg-commutator", {{"basis", la.to_string()}},
                      [&](std::string& witness) {
      for (int m = 1; m <= nmax; ++m) {
        for (int n = 1; n <= nmax; ++n) {
          SymFunc comm = a_pos(m, a_neg(n, f)) - a_neg(n, a_pos(m, f));
          SymFunc expect =
              m == n ? f.scale(Coeff(m) * (one() - q.pow(m)) / (one() - t.pow(m)))
                     : SymFunc::zero();
          if (comm != expect) {
            witness = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            return false;
          }
        }
      }
      return true;
    }));
  }
  return rep;
}

Report verify_Ehat_ct_agreement(int rmax, int degmax) {
  Report rep;
  MacdonaldTable& mac = macdonald();
  mac.warm_up(degmax);
  for (int r = 1; r <= rmax; ++r) {
    for (int d = 0; d <= degmax; ++d) {
      rep.add(run_check("fock", "Ehat-ct-vs-eigen",
                        {{"r", std::to_string(r)}, {"deg", std::to_string(d)}},
                        [&](std::string& witness) {
        for (const Partition& la : partitions_of(d)) {
          const SymFunc& J = mac.J(la);
          SymFunc ct = E_hat_ct(r, J);
          SymFunc eig = J.scale(e_r_s_alphabet(la, r));
          if (ct != eig) {
            witness = "J" + la.to_string();
            return false;
          }
          SymFunc f = SymFunc::p(la);
          if (E_hat_ct(r, f) != mac.E_hat_eigen(r, f)) {
            witness = "p" + la.to_string();
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
