#include "qvir/partition.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qvir {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw MathError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw MathError("partition parts must be weakly decreasing");
  }
}

Partition Partition::single_row(int n) {
  if (n < 0) throw MathError("negative partition size");
  return n == 0 ? Partition() : Partition({n});
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

bool Partition::contains(Box s) const {
  return s.i >= 1 && s.i <= length() && s.j >= 1 && s.j <= parts_[s.i - 1];
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> r;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) r.push_back({i, j});
  return r;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> c(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::operator<(const Partition& o) const {
  int a = size(), b = o.size();
  if (a != b) return a < b;
  return parts_ > o.parts_;  // descending lex: (n) before (n-1,1) before ...
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

int arm(const Partition& la, Box s) {
  if (!la.contains(s)) throw MathError("box outside diagram");
  return la.part(s.i) - s.j;
}

int leg(const Partition& la, Box s) {
  if (!la.contains(s)) throw MathError("box outside diagram");
  return la.conjugate().part(s.j) - s.i;
}

long n_stat(const Partition& la) {
  long n = 0;
  for (int i = 1; i <= la.length(); ++i) n += static_cast<long>(i - 1) * la.part(i);
  return n;
}

BigInt z_stat(const Partition& la) {
  BigInt z = 1;
  int run = 0, prev = -1;
  for (int i = 1; i <= la.length() + 1; ++i) {
    int p = la.part(i);
    if (p == prev) {
      ++run;
    } else {
      // close the previous run
      for (int m = 2; m <= run; ++m) z *= m;
      run = 1;
      prev = p;
    }
    if (p > 0) z *= p;
  }
  return z;
}

Coeff B_box(Box s) {
  Coeff r = Coeff::q().pow(s.j - 1);
  return r * Coeff::t().pow(1 - s.i);
}

std::vector<Coeff> B_alphabet(const Partition& la) {
  std::vector<Coeff> r;
  for (Box s : la.boxes()) r.push_back(B_box(s));
  return r;
}

std::vector<std::pair<Partition, Box>> add_boxes(const Partition& mu) {
  std::vector<std::pair<Partition, Box>> r;
  for (int i = 1; i <= mu.length() + 1; ++i) {
    if (i > 1 && mu.part(i) == mu.part(i - 1)) continue;  // not attachable
    std::vector<int> parts = mu.parts();
    if (i <= mu.length())
      ++parts[i - 1];
    else
      parts.push_back(1);
    r.push_back({Partition(std::move(parts)), Box{i, mu.part(i) + 1}});
  }
  return r;
}

std::vector<std::pair<Partition, Box>> remove_boxes(const Partition& la) {
  std::vector<std::pair<Partition, Box>> r;
  for (int i = 1; i <= la.length(); ++i) {
    if (i < la.length() && la.part(i) == la.part(i + 1)) continue;  // not a corner
    std::vector<int> parts = la.parts();
    --parts[i - 1];
    if (parts[i - 1] == 0) parts.pop_back();
    r.push_back({Partition(std::move(parts)), Box{i, la.part(i)}});
  }
  return r;
}

std::vector<std::pair<Partition, std::vector<Box>>> add_vertical_strips(
    const Partition& mu, int d) {
  std::vector<std::pair<Partition, std::vector<Box>>> out;
  int rows = mu.length() + d;
  // Choose for each row whether it gains a box (at most one per row).
  std::vector<int> grown;
  auto recurse = [&](auto&& self, int row, int remaining) -> void {
    if (remaining == 0) {
      std::vector<int> parts;
      std::vector<Box> strip;
      bool seen_zero = false;
      for (int i = 1; i <= rows; ++i) {
        int p = mu.part(i);
        if (std::find(grown.begin(), grown.end(), i) != grown.end()) {
          ++p;
          strip.push_back({i, p});
        }
        if (p == 0) {
          seen_zero = true;
        } else {
          if (seen_zero) return;  // a grown row below an empty row: not a shape
          if (!parts.empty() && p > parts.back()) return;  // not weakly decreasing
          parts.push_back(p);
        }
      }
      out.push_back({Partition(std::move(parts)), std::move(strip)});
      return;
    }
    if (row > rows) return;
    // skip this row
    self(self, row + 1, remaining);
    // grow this row
    grown.push_back(row);
    self(self, row + 1, remaining - 1);
    grown.pop_back();
  };
  recurse(recurse, 1, d);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::pair<std::vector<Coeff>, std::vector<Coeff>> garsia_tesler_vars(
    const Partition& mu) {
  // Attachable boxes right to left = increasing row index.
  auto attach = add_boxes(mu);
  std::vector<Box> s;
  for (const auto& [la, box] : attach) s.push_back(box);
  std::sort(s.begin(), s.end(), [](Box a, Box b) { return a.i < b.i; });
  std::vector<Coeff> X, Y;
  for (std::size_t kk = 0; kk < s.size(); ++kk) {
    X.push_back(B_box(s[kk]));
    if (kk + 1 < s.size())
      Y.push_back(Coeff::q().pow(s[kk].j - 1) * Coeff::t().pow(-(s[kk + 1].i - 1)));
  }
  return {std::move(X), std::move(Y)};
}

Coeff p_n_s_alphabet(const Partition& la, int n) {
  if (n <= 0) throw MathError("p_n needs n >= 1");
  Coeff q = Coeff::q(), t = Coeff::t();
  Coeff head;
  int l = la.length();
  for (int i = 1; i <= l; ++i)
    head += q.pow(static_cast<long>(n) * la.part(i)) * t.pow(-static_cast<long>(n) * i);
  // tail: sum_{i > l} t^(-n i) = t^(-n(l+1)) / (1 - t^-n)
  Coeff tn = t.pow(-n);
  Coeff tail = t.pow(-static_cast<long>(n) * (l + 1)) / (Coeff(1) - tn);
  return head + tail;
}

Coeff e_r_s_alphabet(const Partition& la, int r) {
  if (r < 0) throw MathError("e_r needs r >= 0");
  if (r == 0) return Coeff(1);
  Coeff t = Coeff::t(), q = Coeff::q();
  int l = la.length();
  // elementary symmetric functions of the finite head
  std::vector<Coeff> e_head(r + 1);
  e_head[0] = Coeff(1);
  int used = 0;
  for (int i = 1; i <= l; ++i) {
    Coeff x = q.pow(la.part(i)) * t.pow(-i);
    used = std::min(used + 1, r);
    for (int m = used; m >= 1; --m) e_head[m] += e_head[m - 1] * x;
  }
  // e_m of the geometric tail {t^-(l+1), t^-(l+2), ...}:
  //   e_m = t^(-l m) x^(m(m+1)/2) / prod_{k=1..m} (1 - x^k) with x = t^-1.
  Coeff x = t.pow(-1);
  std::vector<Coeff> e_tail(r + 1);
  e_tail[0] = Coeff(1);
  Coeff denom(1);
  for (int m = 1; m <= r; ++m) {
    denom *= Coeff(1) - x.pow(m);
    e_tail[m] = t.pow(-static_cast<long>(l) * m) * x.pow(static_cast<long>(m) * (m + 1) / 2) / denom;
  }
  Coeff total;
  for (int m = 0; m <= r; ++m) total += e_head[r - m] * e_tail[m];
  return total;
}

bool dominance_less(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size()) throw MathError("dominance needs equal sizes");
  if (la == mu) return false;
  long a = 0, b = 0;
  int n = std::max(la.length(), mu.length());
  bool strictly_below = false;
  for (int i = 1; i <= n; ++i) {
    a += la.part(i);
    b += mu.part(i);
    if (a > b) return false;
    if (a < b) strictly_below = true;
  }
  return strictly_below;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw MathError("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto recurse = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

std::vector<std::vector<int>> part_permutations(const Partition& la) {
  std::vector<int> v = la.parts();
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string to_json_string(const Partition& la) {
  nlohmann::json j = la.parts();
  return j.dump();
}

Partition partition_from_json_string(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  return Partition(j.get<std::vector<int>>());
}

}  // namespace qvir
