#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qvir/coeff.hpp"

namespace qvir {

// A box of a Young diagram; row i and column j are 1-based.
struct Box {
  int i = 0, j = 0;
  friend bool operator==(const Box&, const Box&) = default;
};

// A partition: weakly decreasing positive parts, the empty partition allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition single_row(int n);

  int size() const;              // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;         // 1-based; 0 beyond the length
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool contains(Box s) const;
  std::vector<Box> boxes() const;  // row-major: row 1 first, left to right

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Total order: by size, then descending-lexicographic parts. This is the
  // enumeration and serialization order used everywhere.
  bool operator<(const Partition& o) const;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

int arm(const Partition& la, Box s);   // lambda_i - j; throws if s outside
int leg(const Partition& la, Box s);   // lambda'_j - i; throws if s outside

// n(lambda) = sum_i (i-1) lambda_i.
long n_stat(const Partition& la);
// z_lambda = prod_i m_i! i^m_i over part multiplicities.
BigInt z_stat(const Partition& la);

// The box alphabet {q^(j-1) t^(1-i)}, row-major order.
std::vector<Coeff> B_alphabet(const Partition& la);
// q^(j-1) t^(1-i) for a single box.
Coeff B_box(Box s);

// All partitions obtained from mu by adding one box, with the added box,
// listed with boxes from right to left (row 1 first).
std::vector<std::pair<Partition, Box>> add_boxes(const Partition& mu);
// All partitions obtained from la by removing one box, with the removed box.
std::vector<std::pair<Partition, Box>> remove_boxes(const Partition& la);

// All partitions la >= mu with |la| = |mu| + d such that la/mu is a vertical
// strip (at most one box per row), with the strip boxes in row order.
std::vector<std::pair<Partition, std::vector<Box>>> add_vertical_strips(
    const Partition& mu, int d);

// Garsia-Tesler corner variables: the attachable boxes s_1..s_{m+1} labeled
// right to left give X_k = B_{s_k} (length m+1) and Y_k = q^{j(s_k)-1}
// t^{-(i(s_{k+1})-1)} (length m).
std::pair<std::vector<Coeff>, std::vector<Coeff>> garsia_tesler_vars(
    const Partition& mu);

// p_n of the eigenvalue alphabet (t^-1 q^(la_1), t^-2 q^(la_2), ...,
// t^-l q^(la_l), t^-(l+1), t^-(l+2), ...): finite head plus geometric tail.
Coeff p_n_s_alphabet(const Partition& la, int n);
// e_r of the same alphabet, as an exact rational function.
Coeff e_r_s_alphabet(const Partition& la, int r);

// Strict dominance comparison; both partitions must have equal size.
bool dominance_less(const Partition& la, const Partition& mu);

// Partitions of n in descending-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// Distinct permutations of the parts of la (each a composition).
std::vector<std::vector<int>> part_permutations(const Partition& la);

std::string to_json_string(const Partition& la);
Partition partition_from_json_string(const std::string& s);

}  // namespace qvir
