#include "qvir/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qvir/linalg.hpp"

namespace qvir {

SymFunc SymFunc::p(const Partition& la, Coeff c) {
  SymFunc f;
  if (!c.is_zero()) f.terms_[la] = std::move(c);
  return f;
}

Coeff SymFunc::coeff(const Partition& la) const {
  auto it = terms_.find(la);
  return it == terms_.end() ? Coeff() : it->second;
}

int SymFunc::max_degree() const {
  int d = 0;
  for (const auto& [la, c] : terms_) d = std::max(d, la.size());
  return d;
}

bool SymFunc::is_homogeneous(int* degree_out) const {
  int d = -1;
  for (const auto& [la, c] : terms_) {
    if (d < 0)
      d = la.size();
    else if (d != la.size())
      return false;
  }
  if (degree_out) *degree_out = std::max(d, 0);
  return true;
}

SymFunc SymFunc::degree_component(int d) const {
  SymFunc r;
  for (const auto& [la, c] : terms_)
    if (la.size() == d) r.terms_[la] = c;
  return r;
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [la, c] : r.terms_) c = -c;
  return r;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc r = *this;
  for (const auto& [la, c] : o.terms_) {
    auto it = r.terms_.find(la);
    if (it == r.terms_.end()) {
      r.terms_[la] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator*(const SymFunc& o) const {
  SymFunc r;
  for (const auto& [la, c] : terms_) {
    for (const auto& [mu, d] : o.terms_) {
      std::vector<int> parts = la.parts();
      parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      Partition prod(std::move(parts));
      Coeff v = c * d;
      auto it = r.terms_.find(prod);
      if (it == r.terms_.end()) {
        if (!v.is_zero()) r.terms_[prod] = std::move(v);
      } else {
        it->second += v;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

SymFunc SymFunc::scale(const Coeff& c) const {
  if (c.is_zero()) return SymFunc();
  SymFunc r = *this;
  for (auto& [la, v] : r.terms_) v *= c;
  return r;
}

SymFunc SymFunc::d_dp(int n) const {
  SymFunc r;
  for (const auto& [la, c] : terms_) {
    int mult = 0;
    for (int p : la.parts())
      if (p == n) ++mult;
    if (mult == 0) continue;
    std::vector<int> parts = la.parts();
    parts.erase(std::find(parts.begin(), parts.end(), n));
    r += SymFunc::p(Partition(std::move(parts)), c * Coeff(mult));
  }
  return r;
}

SymFunc SymFunc::map_coeffs(const std::function<Coeff(const Coeff&)>& f) const {
  SymFunc r;
  for (const auto& [la, c] : terms_) {
    Coeff v = f(c);
    if (!v.is_zero()) r.terms_[la] = std::move(v);
  }
  return r;
}

SymFunc SymFunc::pleth_diag(const std::function<Coeff(int)>& phi) const {
  SymFunc r;
  for (const auto& [la, c] : terms_) {
    Coeff v = c;
    for (int p : la.parts()) v *= phi(p);
    if (!v.is_zero()) r.terms_[la] = std::move(v);
  }
  return r;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [la, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*p" << la.to_string();
  }
  return out.str();
}

std::string SymFunc::to_json_string() const {
  nlohmann::json j;
  j["basis"] = "p";
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [la, c] : terms_) {
    nlohmann::json term;
    term["partition"] = la.parts();
    term["coeff"] = nlohmann::json::parse(c.to_json_string());
    arr.push_back(std::move(term));
  }
  j["terms"] = std::move(arr);
  return j.dump();
}

SymFunc SymFunc::from_json_string(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  if (j.at("basis").get<std::string>() != "p")
    throw MathError("unsupported basis in symmetric function record");
  SymFunc f;
  for (const auto& term : j.at("terms")) {
    Partition la(term.at("partition").get<std::vector<int>>());
    Coeff c = Coeff::from_json_string(term.at("coeff").dump());
    f += SymFunc::p(la, c);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Classical bases

namespace {

std::vector<SymFunc>& newton_cache(bool elem) {
  static std::vector<SymFunc> e{SymFunc::one()};
  static std::vector<SymFunc> h{SymFunc::one()};
  return elem ? e : h;
}

std::mutex& newton_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

SymFunc elementary(int r) {
  if (r < 0) throw MathError("negative degree");
  std::lock_guard<std::mutex> lock(newton_mutex());
  auto& cache = newton_cache(true);
  while (static_cast<int>(cache.size()) <= r) {
    int n = static_cast<int>(cache.size());
    SymFunc acc;
    for (int i = 1; i <= n; ++i) {
      SymFunc term = (SymFunc::p(i) * cache[n - i]).scale(Coeff(i % 2 ? 1 : -1));
      acc += term;
    }
    cache.push_back(acc.scale(Coeff(1, n)));
  }
  return cache[r];
}

SymFunc complete(int r) {
  if (r < 0) throw MathError("negative degree");
  std::lock_guard<std::mutex> lock(newton_mutex());
  auto& cache = newton_cache(false);
  while (static_cast<int>(cache.size()) <= r) {
    int n = static_cast<int>(cache.size());
    SymFunc acc;
    for (int i = 1; i <= n; ++i) acc += SymFunc::p(i) * cache[n - i];
    cache.push_back(acc.scale(Coeff(1, n)));
  }
  return cache[r];
}

SymFunc schur(const Partition& la) {
  int l = la.length();
  if (l == 0) return SymFunc::one();
  // Jacobi-Trudi: det(h_{la_i - i + j})
  std::vector<std::vector<SymFunc>> m(l, std::vector<SymFunc>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      int d = la.part(i + 1) - (i + 1) + (j + 1);
      m[i][j] = d < 0 ? SymFunc::zero() : complete(d);
    }
  }
  // cofactor expansion; matrices stay small
  std::function<SymFunc(std::vector<int>)> det = [&](std::vector<int> cols) -> SymFunc {
    int row = l - static_cast<int>(cols.size());
    if (cols.empty()) return SymFunc::one();
    SymFunc acc;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
      if (m[row][cols[idx]].is_zero()) continue;
      std::vector<int> rest;
      for (std::size_t jj = 0; jj < cols.size(); ++jj)
        if (jj != idx) rest.push_back(cols[jj]);
      SymFunc sub = det(std::move(rest));
      SymFunc term = m[row][cols[idx]] * sub;
      acc += idx % 2 ? -term : term;
    }
    return acc;
  };
  std::vector<int> all(l);
  for (int i = 0; i < l; ++i) all[i] = i;
  return det(std::move(all));
}

// ---------------------------------------------------------------------------
// Inner product and plethystic transforms

Coeff inner_product_qt(const SymFunc& f, const SymFunc& g) {
  Coeff acc;
  Coeff q = Coeff::q(), t = Coeff::t();
  for (const auto& [la, c] : f.terms()) {
    Coeff d = g.coeff(la);
    if (d.is_zero()) continue;
    Coeff norm = Coeff(z_stat(la));
    for (int p : la.parts()) norm *= (Coeff(1) - q.pow(p)) / (Coeff(1) - t.pow(p));
    acc += c * d * norm;
  }
  return acc;
}

SymFunc omega_qt(const SymFunc& f) {
  Coeff q = Coeff::q(), t = Coeff::t();
  return f.pleth_diag([&](int n) {
    Coeff r = (Coeff(1) - q.pow(n)) / (Coeff(1) - t.pow(n));
    return n % 2 ? r : -r;
  });
}

SymFunc omega_tq(const SymFunc& f) {
  Coeff q = Coeff::q(), t = Coeff::t();
  return f.pleth_diag([&](int n) {
    Coeff r = (Coeff(1) - t.pow(n)) / (Coeff(1) - q.pow(n));
    return n % 2 ? r : -r;
  });
}

SymFunc iota_swap(const SymFunc& f) {
  std::map<Var, Coeff> sub{{Var::q, Coeff::t().inverse()},
                           {Var::t, Coeff::q().inverse()}};
  return f.map_coeffs([&](const Coeff& c) { return c.substitute(sub); });
}

Coeff power_substitute(const Coeff& c, int n) {
  std::map<Var, Coeff> sub;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    sub[v] = Coeff::var(v).pow(n);
  }
  return c.substitute(sub);
}

SymFunc scale_alphabet(const SymFunc& f, const Coeff& c) {
  return f.pleth_diag([&](int n) { return power_substitute(c, n); });
}

Coeff specialize_eps(const SymFunc& f, const Coeff& uval) {
  Coeff t = Coeff::t();
  Coeff acc;
  for (const auto& [la, c] : f.terms()) {
    Coeff v = c;
    for (int p : la.parts())
      v *= (Coeff(1) - uval.pow(p)) / (Coeff(1) - t.pow(p));
    acc += v;
  }
  return acc;
}

Coeff eval_on_alphabet(const SymFunc& f, const std::vector<Coeff>& alphabet) {
  Coeff acc;
  for (const auto& [la, c] : f.terms()) {
    Coeff v = c;
    for (int p : la.parts()) {
      Coeff pn;
      for (const Coeff& a : alphabet) pn += a.pow(p);
      v *= pn;
    }
    acc += v;
  }
  return acc;
}

namespace {

// Coefficients of prod (1 + u a_i) up to u^r.
std::vector<Coeff> elem_series(const std::vector<Coeff>& alphabet, int r) {
  std::vector<Coeff> e(r + 1);
  e[0] = Coeff(1);
  int used = 0;
  for (const Coeff& a : alphabet) {
    used = std::min(used + 1, r);
    for (int m = used; m >= 1; --m) e[m] += e[m - 1] * a;
  }
  return e;
}

// Series inverse of a polynomial with constant term 1, up to u^r.
std::vector<Coeff> series_inverse(const std::vector<Coeff>& a, int r) {
  std::vector<Coeff> inv(r + 1);
  inv[0] = Coeff(1);
  for (int n = 1; n <= r; ++n) {
    Coeff s;
    for (int i = 1; i <= n && i < static_cast<int>(a.size()); ++i)
      s += a[i] * inv[n - i];
    inv[n] = -s;
  }
  return inv;
}

}  // namespace

Coeff eval_e_on_difference(int r, const std::vector<Coeff>& plus,
                           const std::vector<Coeff>& minus) {
  if (r < 0) return Coeff();
  // [u^r] prod(1+uY) / prod(1+uX)
  std::vector<Coeff> num = elem_series(plus, r);
  std::vector<Coeff> den = elem_series(minus, r);
  std::vector<Coeff> inv = series_inverse(den, r);
  Coeff acc;
  for (int i = 0; i <= r; ++i) acc += num[i] * inv[r - i];
  return acc;
}

Coeff eval_h_on_difference(int r, const std::vector<Coeff>& plus,
                           const std::vector<Coeff>& minus) {
  if (r < 0) return Coeff();
  // [u^r] prod(1-uX) / prod(1-uY); substitute u -> -u in the e-expansion
  Coeff v = eval_e_on_difference(r, minus, plus);
  return r % 2 ? -v : v;
}

// ---------------------------------------------------------------------------
// p <-> m change of basis

namespace {

// Multiplication by p_r in the monomial basis (integer coefficients):
// [m_nu](p_r m_mu) = multiplicity in nu of the part that grew.
std::map<Partition, BigInt> multiply_p_in_m(const std::map<Partition, BigInt>& f,
                                            int r) {
  std::map<Partition, BigInt> out;
  for (const auto& [mu, c] : f) {
    // add r to one existing part value or open a new part
    std::vector<int> values = mu.parts();
    values.push_back(0);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int v : values) {
      std::vector<int> parts = mu.parts();
      if (v > 0) parts.erase(std::find(parts.begin(), parts.end(), v));
      parts.push_back(v + r);
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      Partition nu(std::move(parts));
      int mult = 0;
      for (int p : nu.parts())
        if (p == v + r) ++mult;
      out[nu] += c * mult;
    }
  }
  return out;
}

std::mutex basis_mutex;
std::map<int, BasisTables> basis_cache;

}  // namespace

const BasisTables& basis_tables(int degree) {
  std::lock_guard<std::mutex> lock(basis_mutex);
  auto it = basis_cache.find(degree);
  if (it != basis_cache.end()) return it->second;

  BasisTables tab;
  tab.degree = degree;
  tab.partitions = partitions_of(degree);
  int n = static_cast<int>(tab.partitions.size());
  std::map<Partition, int> index;
  for (int i = 0; i < n; ++i) index[tab.partitions[i]] = i;

  tab.p_to_m.assign(n, std::vector<Coeff>(n));
  for (int i = 0; i < n; ++i) {
    std::map<Partition, BigInt> expansion{{Partition(), BigInt(1)}};
    for (int part : tab.partitions[i].parts())
      expansion = multiply_p_in_m(expansion, part);
    for (const auto& [mu, c] : expansion) tab.p_to_m[i][index.at(mu)] = Coeff(c);
  }
  tab.m_to_p = invert_matrix(tab.p_to_m);
  return basis_cache.emplace(degree, std::move(tab)).first->second;
}

SymFunc monomial_in_p(const Partition& mu) {
  const BasisTables& tab = basis_tables(mu.size());
  int idx = -1;
  for (std::size_t i = 0; i < tab.partitions.size(); ++i)
    if (tab.partitions[i] == mu) idx = static_cast<int>(i);
  if (idx < 0) throw MathError("partition not found in basis table");
  SymFunc f;
  for (std::size_t j = 0; j < tab.partitions.size(); ++j)
    f += SymFunc::p(tab.partitions[j], tab.m_to_p[idx][j]);
  return f;
}

}  // namespace qvir
