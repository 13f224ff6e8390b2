#include "qvir/macdonald.hpp"

#include <algorithm>
#include <sstream>

#include "qvir/fock.hpp"
#include "qvir/linalg.hpp"

namespace qvir {

namespace {

Coeff one() { return Coeff(1); }

}  // namespace

Coeff c_factor_at(const Partition& la, const Coeff& q, const Coeff& t) {
  Coeff r = one();
  for (Box s : la.boxes())
    r *= one() - q.pow(arm(la, s)) * t.pow(leg(la, s) + 1);
  return r;
}

Coeff cprime_factor_at(const Partition& la, const Coeff& q, const Coeff& t) {
  Coeff r = one();
  for (Box s : la.boxes())
    r *= one() - q.pow(arm(la, s) + 1) * t.pow(leg(la, s));
  return r;
}

Coeff c_factor(const Partition& la) {
  return c_factor_at(la, Coeff::q(), Coeff::t());
}

Coeff cprime_factor(const Partition& la) {
  return cprime_factor_at(la, Coeff::q(), Coeff::t());
}

namespace {

// c_la(s) / c'_la(s) for one box.
Coeff b_ratio(const Partition& la, Box s) {
  Coeff q = Coeff::q(), t = Coeff::t();
  int a = arm(la, s), l = leg(la, s);
  return (one() - q.pow(a) * t.pow(l + 1)) / (one() - q.pow(a + 1) * t.pow(l));
}

void require_strip(const Partition& la, const Partition& mu) {
  if (la.size() < mu.size()) throw MathError("invalid skew pair");
  for (int i = 1; i <= la.length(); ++i) {
    int diff = la.part(i) - mu.part(i);
    if (diff < 0 || diff > 1) throw MathError("skew shape is not a vertical strip");
  }
}

}  // namespace

Coeff psi_prime(const Partition& la, const Partition& mu) {
  require_strip(la, mu);
  std::vector<bool> strip_row(la.length() + 1, false);
  std::vector<bool> strip_col(la.part(1) + 1, false);
  for (int i = 1; i <= la.length(); ++i) {
    if (la.part(i) != mu.part(i)) {
      strip_row[i] = true;
      strip_col[la.part(i)] = true;
    }
  }
  Coeff r = one();
  for (Box s : la.boxes()) {
    if (strip_row[s.i] || !strip_col[s.j]) continue;
    r *= b_ratio(la, s);
    if (mu.contains(s)) r /= b_ratio(mu, s);
  }
  return r;
}

Coeff pieri_d(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size() + 1) throw MathError("pieri_d needs |la| = |mu| + 1");
  return psi_prime(la, mu) * c_factor(mu) / c_factor(la);
}

Coeff pieri_c(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size() + 1) throw MathError("pieri_c needs |la| = |mu| + 1");
  Coeff q = Coeff::q(), t = Coeff::t();
  return psi_prime(la, mu) * cprime_factor(la) / cprime_factor(mu) *
         (one() - t) / (one() - q);
}

Coeff theta(int n) {
  if (n < 0) throw MathError("theta needs n >= 0");
  if (n == 0) return one();
  Coeff q = Coeff::q(), t = Coeff::t();
  Coeff acc;
  for (const Partition& la : partitions_of(n)) {
    Coeff v = Coeff(1) / Coeff(z_stat(la));
    for (int p : la.parts())
      v /= (one() - q.pow(p)) * (one() - t.pow(-p));
    acc += v;
  }
  return acc;
}

Coeff e_k_s_alphabet_geometric(const Partition& la, int k) {
  if (k < 0) throw MathError("e_k needs k >= 0");
  if (k == 0) return one();
  Coeff q = Coeff::q();
  // Newton from p_n of the alphabet {q^j x : j >= 0, x in s^la}.
  std::vector<Coeff> pvals(k + 1), e(k + 1);
  for (int n = 1; n <= k; ++n)
    pvals[n] = p_n_s_alphabet(la, n) / (one() - q.pow(n));
  e[0] = one();
  for (int n = 1; n <= k; ++n) {
    Coeff acc;
    for (int i = 1; i <= n; ++i) {
      Coeff term = pvals[i] * e[n - i];
      acc += i % 2 ? term : -term;
    }
    e[n] = acc / Coeff(n);
  }
  return e[k];
}

// ---------------------------------------------------------------------------
// MacdonaldTable

MacdonaldTable& macdonald() {
  static MacdonaldTable table;
  return table;
}

const SymFunc& MacdonaldTable::get(std::map<Partition, SymFunc>& store,
                                   const Partition& la, const char* what) {
  std::unique_lock<std::mutex> lock(mutex_);
  auto it = store.find(la);
  if (it != store.end()) return it->second;
  lock.unlock();
  build_degree(la.size());
  lock.lock();
  it = store.find(la);
  if (it == store.end()) throw MathError(std::string("missing ") + what);
  return it->second;
}

const SymFunc& MacdonaldTable::P(const Partition& la) { return get(p_, la, "P"); }
const SymFunc& MacdonaldTable::Q(const Partition& la) { return get(q_, la, "Q"); }
const SymFunc& MacdonaldTable::J(const Partition& la) { return get(j_, la, "J"); }

Coeff MacdonaldTable::jj_norm(const Partition& la) {
  return c_factor(la) * cprime_factor(la);
}

void MacdonaldTable::warm_up(int n) {
  for (int d = 0; d <= n; ++d) build_degree(d);
}

bool MacdonaldTable::adopt(const std::string& kind, const Partition& la,
                           const SymFunc& value) {
  // Only adopt values that pass an independent norm spot check.
  Coeff expected;
  if (kind == "P")
    expected = cprime_factor(la) / c_factor(la);
  else if (kind == "Q")
    expected = c_factor(la) / cprime_factor(la);
  else if (kind == "J")
    expected = jj_norm(la);
  else
    return false;
  if (inner_product_qt(value, value) != expected) return false;
  std::lock_guard<std::mutex> lock(mutex_);
  auto& store = kind == "P" ? p_ : kind == "Q" ? q_ : j_;
  store.emplace(la, value);
  return true;
}

void MacdonaldTable::build_degree(int d) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = degrees_.find(d);
    if (it != degrees_.end() && it->second.built) return;
  }
  const BasisTables& tab = basis_tables(d);
  int n = static_cast<int>(tab.partitions.size());

  // Gram matrix of the monomial basis under <.,.>_{q,t}.
  Coeff q = Coeff::q(), t = Coeff::t();
  std::vector<Coeff> pnorm(n);
  for (int i = 0; i < n; ++i) {
    Coeff v(z_stat(tab.partitions[i]));
    for (int p : tab.partitions[i].parts())
      v *= (one() - q.pow(p)) / (one() - t.pow(p));
    pnorm[i] = v;
  }
  Matrix gram(n, std::vector<Coeff>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Coeff s;
      for (int l = 0; l < n; ++l) {
        if (tab.m_to_p[a][l].is_zero() || tab.m_to_p[b][l].is_zero()) continue;
        s += tab.m_to_p[a][l] * tab.m_to_p[b][l] * pnorm[l];
      }
      gram[a][b] = s;
      gram[b][a] = std::move(s);
    }
  }

  std::map<Partition, SymFunc> new_p;
  for (int li = 0; li < n; ++li) {
    const Partition& la = tab.partitions[li];
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (p_.count(la)) continue;
    }
    std::vector<int> lower;
    for (int mi = 0; mi < n; ++mi)
      if (mi != li && dominance_less(tab.partitions[mi], la)) lower.push_back(mi);
    int m = static_cast<int>(lower.size());
    std::vector<Coeff> a(m);
    if (m > 0) {
      Matrix A(m, std::vector<Coeff>(m));
      std::vector<Coeff> rhs(m);
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) A[r][c] = gram[lower[c]][lower[r]];
        rhs[r] = -gram[li][lower[r]];
      }
      auto sol = solve_linear(std::move(A), std::move(rhs));
      if (!sol)
        throw MathError("Macdonald system is singular at " + la.to_string());
      a = std::move(*sol);
    }
    SymFunc P;
    for (int j = 0; j < n; ++j) {
      Coeff coe = tab.m_to_p[li][j];
      for (int c = 0; c < m; ++c) coe += a[c] * tab.m_to_p[lower[c]][j];
      P += SymFunc::p(tab.partitions[j], coe);
    }
    new_p.emplace(la, std::move(P));
  }

  DegreeData data;
  data.partitions = tab.partitions;
  for (int i = 0; i < n; ++i) data.index[tab.partitions[i]] = i;

  {
    std::lock_guard<std::mutex> lock(mutex_);
    for (auto& [la, P] : new_p) p_.emplace(la, std::move(P));
    for (int i = 0; i < n; ++i) {
      const Partition& la = tab.partitions[i];
      const SymFunc& P = p_.at(la);
      if (!j_.count(la)) j_.emplace(la, P.scale(c_factor(la)));
      if (!q_.count(la))
        q_.emplace(la, P.scale(c_factor(la) / cprime_factor(la)));
    }
    Matrix jmat(n, std::vector<Coeff>(n));
    for (int col = 0; col < n; ++col) {
      const SymFunc& Jc = j_.at(tab.partitions[col]);
      for (int row = 0; row < n; ++row)
        jmat[row][col] = Jc.coeff(tab.partitions[row]);
    }
    data.j_matrix_inv = invert_matrix(std::move(jmat));
    data.built = true;
    degrees_[d] = std::move(data);
  }
}

std::map<Partition, Coeff> MacdonaldTable::expand_in_J(const SymFunc& g) {
  std::map<Partition, Coeff> out;
  int maxd = g.max_degree();
  for (int d = 0; d <= maxd; ++d) {
    SymFunc comp = g.degree_component(d);
    if (comp.is_zero()) continue;
    build_degree(d);
    std::unique_lock<std::mutex> lock(mutex_);
    const DegreeData& data = degrees_.at(d);
    int n = static_cast<int>(data.partitions.size());
    std::vector<Coeff> v(n);
    for (int i = 0; i < n; ++i) v[i] = comp.coeff(data.partitions[i]);
    for (int i = 0; i < n; ++i) {
      Coeff x;
      for (int j = 0; j < n; ++j) {
        if (data.j_matrix_inv[i][j].is_zero() || v[j].is_zero()) continue;
        x += data.j_matrix_inv[i][j] * v[j];
      }
      if (!x.is_zero()) out[data.partitions[i]] = std::move(x);
    }
  }
  return out;
}

SymFunc MacdonaldTable::diagonal_in_J(
    const std::function<Coeff(const Partition&)>& eigen, const SymFunc& g) {
  SymFunc out;
  for (const auto& [la, x] : expand_in_J(g)) {
    Coeff e = eigen(la);
    if (!e.is_zero()) out += J(la).scale(x * e);
  }
  return out;
}

SymFunc MacdonaldTable::delta_sym(const SymFunc& f, const SymFunc& g) {
  return diagonal_in_J(
      [&](const Partition& la) { return eval_on_alphabet(f, B_alphabet(la)); }, g);
}

SymFunc MacdonaldTable::delta_e1(const SymFunc& g) {
  return diagonal_in_J(
      [&](const Partition& la) {
        Coeff s;
        for (const Coeff& b : B_alphabet(la)) s += b;
        return s;
      },
      g);
}

SymFunc MacdonaldTable::delta_h(int r, const SymFunc& g) {
  if (r < 0) return SymFunc::zero();
  if (r == 0) return g;
  SymFunc hr = complete(r);
  return delta_sym(hr, g);
}

SymFunc MacdonaldTable::nabla(const SymFunc& g) {
  Coeff q = Coeff::q(), t = Coeff::t();
  return diagonal_in_J(
      [&](const Partition& la) {
        return q.pow(n_stat(la.conjugate())) * t.pow(-n_stat(la));
      },
      g);
}

SymFunc MacdonaldTable::nabla_inv(const SymFunc& g) {
  Coeff q = Coeff::q(), t = Coeff::t();
  return diagonal_in_J(
      [&](const Partition& la) {
        return q.pow(-n_stat(la.conjugate())) * t.pow(n_stat(la));
      },
      g);
}

SymFunc MacdonaldTable::E_hat_eigen(int r, const SymFunc& g) {
  if (r < 1) throw MathError("E_hat needs r >= 1");
  return diagonal_in_J(
      [&](const Partition& la) { return e_r_s_alphabet(la, r); }, g);
}

Coeff MacdonaldTable::h_r_of_B_via_s(const Partition& la, int r) {
  if (r < 0) throw MathError("h_r needs r >= 0");
  Coeff t = Coeff::t();
  Coeff acc;
  for (int k = 0; k <= r; ++k) {
    Coeff term = theta(r - k) * e_k_s_alphabet_geometric(la, k);
    if (k % 2) term = -term;
    acc += term * t.pow(k);
  }
  return acc;
}

SymFunc MacdonaldTable::delta_h_via_Ehat(int r, const SymFunc& g) {
  if (r < 0) return SymFunc::zero();
  if (r == 0) return g;
  Coeff q = Coeff::q(), t = Coeff::t();
  SymFunc out = g.scale(theta(r));  // empty-composition term
  for (int k = 1; k <= r; ++k) {
    Coeff sign_t = t.pow(k);
    if (k % 2) sign_t = -sign_t;
    for (const Partition& la : partitions_of(k)) {
      // weight: sum over distinct orderings (r_1, r_2, ...) of la of
      //   q^{sum (a-1) r_a} / prod_a (1 - q^{r_a + r_{a+1} + ... })
      Coeff weight;
      for (const auto& order : part_permutations(la)) {
        Coeff num = one(), den = one();
        long shift = 0, tail = 0;
        for (std::size_t aa = 0; aa < order.size(); ++aa)
          shift += static_cast<long>(aa) * order[aa];
        num = q.pow(shift);
        for (std::size_t aa = 0; aa < order.size(); ++aa) {
          tail = 0;
          for (std::size_t bb = aa; bb < order.size(); ++bb) tail += order[bb];
          den *= one() - q.pow(tail);
        }
        weight += num / den;
      }
      SymFunc applied = g;
      for (auto it = la.parts().rbegin(); it != la.parts().rend(); ++it)
        applied = E_hat_eigen(*it, applied);
      out += applied.scale(sign_t * theta(r - k) * weight);
    }
  }
  return out;
}

SymFunc MacdonaldTable::modified_H(const Partition& la) {
  Coeff t = Coeff::t();
  std::map<Var, Coeff> tinv{{Var::t, t.inverse()}};
  SymFunc j = J(la).map_coeffs([&](const Coeff& c) { return c.substitute(tinv); });
  SymFunc scaled = j.pleth_diag(
      [&](int n) { return (one() - t.pow(-n)).inverse(); });
  return scaled.scale(t.pow(n_stat(la)));
}

// ---------------------------------------------------------------------------
// Pieri sum identities

Report MacdonaldTable::verify_pieri_sums(const Partition& mu, int rmax,
                                         int series_order) {
  Report rep;
  Coeff q = Coeff::q(), t = Coeff::t();
  const std::string suite = "macdonald";
  auto pstr = [&](int extra_r) {
    std::map<std::string, std::string> m{{"mu", mu.to_string()}};
    if (extra_r >= 0) m["r"] = std::to_string(extra_r);
    return m;
  };

  // (1-t) sum over added boxes of q^(j-1) d_{la/mu} B_s^r
  //   = (-1)^r e_r[(1-q)(1-1/t) B_mu - 1].
  std::vector<Coeff> Bmu = B_alphabet(mu);
  std::vector<Coeff> plus = Bmu, minus;
  for (const Coeff& b : Bmu) plus.push_back(b * q / t);
  for (const Coeff& b : Bmu) {
    minus.push_back(b * q);
    minus.push_back(b / t);
  }
  minus.push_back(one());
  for (int r = 0; r <= rmax; ++r) {
    rep.add(run_check(suite, "pieri-box-sum-d", pstr(r), [&](std::string& witness) {
      Coeff lhs;
      for (const auto& [la, s] : add_boxes(mu))
        lhs += q.pow(s.j - 1) * pieri_d(la, mu) * B_box(s).pow(r);
      lhs *= one() - t;
      Coeff rhs = eval_e_on_difference(r, plus, minus);
      if (r % 2) rhs = -rhs;
      if (lhs == rhs) return true;
      witness = "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
      return false;
    }));
  }

  // For the fixed partition mu (when nonempty):
  //   (1-q) sum over removable boxes of t^(1-i) c_{mu/nu} B_s^k
  //     = -t^(k+1) q^-k h_{k+1}[(1-q)(1-1/t) B_mu - 1]   (k >= 1)
  //   sum t^(1-i) c_{mu/nu} B_s^{+-1} = (1-t) e_{+-1}[B_mu].
  if (!mu.empty()) {
    for (int k = 1; k <= rmax; ++k) {
      rep.add(run_check(suite, "pieri-box-sum-c", pstr(k), [&](std::string& witness) {
        Coeff lhs;
        for (const auto& [nu, s] : remove_boxes(mu))
          lhs += t.pow(1 - s.i) * pieri_c(mu, nu) * B_box(s).pow(k);
        lhs *= one() - q;
        Coeff rhs = eval_h_on_difference(k + 1, plus, minus);
        rhs *= -t.pow(k + 1) * q.pow(-k);
        if (lhs == rhs) return true;
        witness = "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
        return false;
      }));
    }
    // k = -1: the inverse-alphabet sum closes as (1-t) e_{-1}[B_mu]. No
    // matching e_1 form exists for k = +1; that case is the k = 1 instance
    // of the h_{k+1} law above.
    rep.add(run_check(suite, "pieri-box-sum-c-unit", pstr(-1),
                      [&](std::string& witness) {
      Coeff lhs;
      for (const auto& [nu, s] : remove_boxes(mu))
        lhs += t.pow(1 - s.i) * pieri_c(mu, nu) * B_box(s).inverse();
      Coeff rhs;
      for (const Coeff& b : Bmu) rhs += b.inverse();
      rhs *= one() - t;
      if (lhs == rhs) return true;
      witness = "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
      return false;
    }));
  }

  // Vertical-strip generating identity, as a power series in u.
  int order = series_order >= 0 ? series_order : 2 * mu.size() + 4;
  for (int d = 1; d <= std::max(1, std::min(rmax, 3)); ++d) {
    rep.add(run_check(suite, "pieri-strip-generating",
                      {{"mu", mu.to_string()}, {"d", std::to_string(d)},
                       {"order", std::to_string(order)}},
                      [&](std::string& witness) {
      // lhs: sum over vertical strips of size d
      std::vector<Coeff> lhs(order + 1);
      for (const auto& [la, strip] : add_vertical_strips(mu, d)) {
        Coeff base = q.pow(n_stat(la.conjugate()) - n_stat(mu.conjugate())) *
                     psi_prime(la, mu) * c_factor(mu) / c_factor(la);
        // expand prod_i 1/(1 - u B_i) as a series
        std::vector<Coeff> ser(order + 1);
        ser[0] = one();
        for (const Box& s : strip) {
          Coeff b = B_box(s);
          for (int n = 1; n <= order; ++n) {
            // multiply by 1/(1-ub): ser_new[n] = ser[n] + b*ser_new[n-1]
            ser[n] += b * ser[n - 1];
          }
        }
        for (int n = 0; n <= order; ++n) lhs[n] += base * ser[n];
      }
      // rhs A: prod_{k=0}^{d-1} Etilde_mu[u/t^k] / (1 - t^{k+1})
      std::vector<Coeff> etilde(order + 1);
      for (int r = 0; r <= order; ++r) {
        Coeff e = eval_e_on_difference(r, plus, minus);
        etilde[r] = r % 2 ? -e : e;
      }
      std::vector<Coeff> rhs(order + 1);
      rhs[0] = one();
      for (int k = 0; k < d; ++k) {
        std::vector<Coeff> factor(order + 1);
        Coeff scale = (one() - t.pow(k + 1)).inverse();
        for (int r = 0; r <= order; ++r)
          factor[r] = etilde[r] * t.pow(-static_cast<long>(k) * r) * scale;
        std::vector<Coeff> next(order + 1);
        for (int a = 0; a <= order; ++a) {
          if (rhs[a].is_zero()) continue;
          for (int b = 0; a + b <= order; ++b) next[a + b] += rhs[a] * factor[b];
        }
        rhs = std::move(next);
      }
      // rhs B: corner-variable form prod(1-uY)/prod(1-uX) / prod(1-t^k)
      std::vector<Coeff> X, Y;
      {
        int l = mu.length();
        std::vector<Box> boxes;
        for (int i = l + d; i >= 1; --i) boxes.push_back({i, mu.part(i) + 1});
        for (std::size_t kk = 0; kk < boxes.size(); ++kk) {
          X.push_back(B_box(boxes[kk]));
          if (kk + d < boxes.size())
            Y.push_back(q.pow(boxes[kk + d].j - 1) * t.pow(1 - boxes[kk].i));
        }
      }
      std::vector<Coeff> rhs2(order + 1);
      for (int r = 0; r <= order; ++r) {
        // [u^r] prod(1-uY)/prod(1-uX) = (-1)^r e_r[Y - X] with e on difference
        Coeff e = eval_e_on_difference(r, Y, X);
        rhs2[r] = r % 2 ? -e : e;
      }
      Coeff denom = one();
      for (int k = 1; k <= d; ++k) denom *= one() - t.pow(k);
      for (int r = 0; r <= order; ++r) rhs2[r] /= denom;
      for (int n = 0; n <= order; ++n) {
        if (lhs[n] != rhs[n] || lhs[n] != rhs2[n]) {
          witness = "u^" + std::to_string(n) + ": lhs=" + lhs[n].to_string() +
                    " etilde=" + rhs[n].to_string() +
                    " corners=" + rhs2[n].to_string();
          return false;
        }
      }
      return true;
    }));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Core identity suite

Report verify_macdonald_core(int nmax, int rmax) {
  Report rep;
  const std::string suite = "macdonald";
  Coeff q = Coeff::q(), t = Coeff::t();
  MacdonaldTable& mac = macdonald();
  mac.warm_up(nmax);

  for (int n = 0; n <= nmax; ++n) {
    std::vector<Partition> parts = partitions_of(n);

    rep.add(run_check(suite, "PQ-orthogonality", {{"n", std::to_string(n)}},
                      [&](std::string& witness) {
      for (const Partition& la : parts) {
        for (const Partition& mu : parts) {
          Coeff ip = inner_product_qt(mac.P(la), mac.Q(mu));
          Coeff expect = la == mu ? one() : Coeff();
          if (ip != expect) {
            witness = la.to_string() + "," + mu.to_string() + ": " + ip.to_string();
            return false;
          }
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "P-unitriangular", {{"n", std::to_string(n)}},
                      [&](std::string& witness) {
      const BasisTables& tab = basis_tables(n);
      for (const Partition& la : parts) {
        const SymFunc& P = mac.P(la);
        for (std::size_t mcol = 0; mcol < tab.partitions.size(); ++mcol) {
          Coeff c;
          for (std::size_t prow = 0; prow < tab.partitions.size(); ++prow) {
            Coeff pc = P.coeff(tab.partitions[prow]);
            if (!pc.is_zero()) c += tab.p_to_m[prow][mcol] * pc;
          }
          const Partition& mu = tab.partitions[mcol];
          bool expect_one = mu == la;
          bool expect_zero = !expect_one && !dominance_less(mu, la);
          if ((expect_one && !c.is_one()) || (expect_zero && !c.is_zero())) {
            witness = "P" + la.to_string() + " at m" + mu.to_string();
            return false;
          }
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "JJ-norm", {{"n", std::to_string(n)}},
                      [&](std::string& witness) {
      for (const Partition& la : parts) {
        Coeff ip = inner_product_qt(mac.J(la), mac.J(la));
        if (ip != mac.jj_norm(la)) {
          witness = la.to_string();
          return false;
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "eta0-eigenvalue", {{"n", std::to_string(n)}},
                      [&](std::string& witness) {
      for (const Partition& la : parts) {
        SymFunc lhs = apply_mode({Current::Eta, 0}, mac.P(la));
        Coeff e1;
        for (const Coeff& b : B_alphabet(la)) e1 += b;
        Coeff eigen = one() - (one() - q) * (one() - t.inverse()) * e1;
        if (lhs != mac.P(la).scale(eigen)) {
          witness = la.to_string();
          return false;
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "eta0-delta-e1", {{"n", std::to_string(n)}},
                      [&](std::string& witness) {
      for (const Partition& la : parts) {
        const SymFunc& J = mac.J(la);
        SymFunc lhs = J - apply_mode({Current::Eta, 0}, J);
        SymFunc rhs =
            mac.delta_e1(J).scale((one() - q) * (one() - t.inverse()));
        if (lhs != rhs) {
          witness = la.to_string();
          return false;
        }
      }
      return true;
    }));

    if (n >= 1) {
      rep.add(run_check(suite, "pieri-p1-J", {{"n", std::to_string(n)}},
                        [&](std::string& witness) {
        for (const Partition& mu : partitions_of(n - 1)) {
          SymFunc lhs = SymFunc::p(1) * mac.J(mu);
          SymFunc rhs;
          for (const auto& [la, s] : add_boxes(mu))
            rhs += mac.J(la).scale(pieri_d(la, mu));
          if (lhs != rhs) {
            witness = mu.to_string();
            return false;
          }
        }
        return true;
      }));

      rep.add(run_check(suite, "pieri-dp1-J", {{"n", std::to_string(n)}},
                        [&](std::string& witness) {
        for (const Partition& la : parts) {
          SymFunc lhs = mac.J(la).d_dp(1);
          SymFunc rhs;
          for (const auto& [mu, s] : remove_boxes(la))
            rhs += mac.J(mu).scale(pieri_c(la, mu));
          if (lhs != rhs) {
            witness = la.to_string();
            return false;
          }
        }
        return true;
      }));

      rep.add(run_check(suite, "eta1-skew-expansion", {{"n", std::to_string(n)}},
                        [&](std::string& witness) {
        for (const Partition& la : parts) {
          SymFunc lhs = apply_mode({Current::Eta, 1}, mac.J(la));
          SymFunc rhs;
          for (const auto& [mu, s] : remove_boxes(la))
            rhs += mac.J(mu).scale(pieri_c(la, mu) * B_box(s));
          rhs = rhs.scale(-(one() - q));
          if (lhs != rhs) {
            witness = la.to_string();
            return false;
          }
        }
        return true;
      }));

      rep.add(run_check(suite, "eta1-nabla-conjugate", {{"n", std::to_string(n)}},
                        [&](std::string& witness) {
        for (const Partition& la : parts) {
          const SymFunc& J = mac.J(la);
          SymFunc lhs = apply_mode({Current::Eta, 1}, J);
          SymFunc rhs = mac.nabla_inv(mac.nabla(J).d_dp(1)).scale(-(one() - q));
          if (lhs != rhs) {
            witness = la.to_string();
            return false;
          }
        }
        return true;
      }));
    }

    rep.add(run_check(suite, "nabla-inverse", {{"n", std::to_string(n)}},
                      [&](std::string& witness) {
      for (const Partition& la : parts) {
        SymFunc f = mac.P(la);
        if (mac.nabla_inv(mac.nabla(f)) != f) {
          witness = la.to_string();
          return false;
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "Bs-translation", {{"n", std::to_string(n)}, {"rmax", std::to_string(rmax)}},
                      [&](std::string& witness) {
      for (const Partition& la : parts) {
        for (int r = 0; r <= rmax; ++r) {
          Coeff direct = eval_on_alphabet(complete(r), B_alphabet(la));
          Coeff translated = mac.h_r_of_B_via_s(la, r);
          if (direct != translated) {
            witness = la.to_string() + " r=" + std::to_string(r);
            return false;
          }
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "delta-h-two-routes", {{"n", std::to_string(n)}, {"rmax", std::to_string(rmax)}},
                      [&](std::string& witness) {
      for (const Partition& la : parts) {
        const SymFunc& J = mac.J(la);
        for (int r = 0; r <= rmax; ++r) {
          if (mac.delta_h(r, J) != mac.delta_h_via_Ehat(r, J)) {
            witness = la.to_string() + " r=" + std::to_string(r);
            return false;
          }
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "Ehat-family-commutes", {{"n", std::to_string(n)}},
                      [&](std::string& witness) {
      SymFunc g;
      for (const Partition& la : parts) g += mac.J(la).scale(one());
      for (int r1 = 1; r1 <= 2; ++r1) {
        for (int r2 = r1 + 1; r2 <= 3; ++r2) {
          SymFunc ab = mac.E_hat_eigen(r1, mac.E_hat_eigen(r2, g));
          SymFunc ba = mac.E_hat_eigen(r2, mac.E_hat_eigen(r1, g));
          if (ab != ba) {
            witness = std::to_string(r1) + "," + std::to_string(r2);
            return false;
          }
        }
      }
      return true;
    }));

    rep.add(run_check(suite, "modified-H-cauchy-sum", {{"n", std::to_string(n)}},
                      [&](std::string& witness) {
      SymFunc lhs;
      for (const Partition& la : parts) {
        Coeff denom = c_factor_at(la, q.inverse(), t) *
                      cprime_factor_at(la, q, t.inverse());
        lhs += mac.modified_H(la).scale(denom.inverse());
      }
      SymFunc rhs = exp_p_series_term(
          [&](int m) {
            return ((one() - q.pow(m)) * (one() - t.pow(m))).inverse();
          },
          n);
      if (lhs == rhs) return true;
      witness = (lhs - rhs).to_string();
      return false;
    }));
  }

  for (int n = 0; n + 1 <= nmax; ++n)
    for (const Partition& mu : partitions_of(n))
      rep.merge(mac.verify_pieri_sums(mu, rmax));

  return rep;
}

}  // namespace qvir
