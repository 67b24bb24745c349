#pragma once

#include <map>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "adjeq/root_system.hpp"
#include "adjeq/signs.hpp"

namespace adjeq {

/// Unordered pairs are stored with first < second; ordered pairs as given.
using RootPair = std::pair<RootIndex, RootIndex>;

inline RootPair unordered(RootIndex a, RootIndex b) { return a < b ? RootPair{a, b} : RootPair{b, a}; }

/// 2k roots beta_1..beta_k, beta_{-k}..beta_{-1} with beta_i + beta_{-i} = sigma,
/// beta_i orthogonal to beta_{-i}, and angle pi/3 between all other members.
///
/// Labels i run over +-1..+-k. The class stores whatever labelling it was built
/// with; square_of_pair() and enumerate_squares() produce the canonical one
/// (pairs sorted by their lexicographically smaller member, which is beta_i).
class MaximalSquare {
 public:
  MaximalSquare() = default;
  MaximalSquare(Coeffs sigma, std::vector<RootIndex> by_position);

  int k() const { return static_cast<int>(members_.size()) / 2; }
  const Coeffs& sigma() const { return sigma_; }
  /// beta_i for i in +-1..+-k. Throws IndexOutOfRange.
  RootIndex member(int i) const;
  /// Members in storage order beta_1..beta_k, beta_{-k}..beta_{-1}.
  const std::vector<RootIndex>& members() const { return members_; }
  /// Label of r in this square, or 0.
  int label_of(RootIndex r) const;
  /// 1, 2, ..., k, -k, ..., -1.
  std::vector<int> labels() const;
  bool valid_label(int i) const { return i != 0 && i >= -k() && i <= k(); }

  friend bool operator==(const MaximalSquare&, const MaximalSquare&) = default;

 private:
  int position(int i) const { return i > 0 ? i - 1 : 2 * k() + i; }

  Coeffs sigma_;
  std::vector<RootIndex> members_;
};

/// Numbers of orthogonal pairs the maximal squares of a system carry: k for
/// E_l. In D_l the pair sums are either +-2e_i, carrying l-1 pairs, or
/// +-e_i+-e_j+-e_m+-e_n, carrying 3; no D_l square has l pairs.
std::vector<int> square_sizes(const SystemId& id);
bool square_size_occurs(const SystemId& id, int pairs);

/// 2(r, v) for a root r and an arbitrary lattice vector v.
int inner_with(const RootSystem& rs, RootIndex r, std::span<const int> v);

/// Checks the angle conditions and the constant pair sum.
bool is_maximal_square(const RootSystem& rs, const MaximalSquare& sq);

/// The unique maximal square containing the orthogonal pair {a, b}, canonical
/// labelling. Throws InvalidPair if a, b are not orthogonal.
MaximalSquare square_of_pair(const RootSystem& rs, RootIndex a, RootIndex b);

/// Same square relabelled so that beta_1 = a, beta_{-1} = b; the remaining
/// pairs keep their canonical order and orientation.
MaximalSquare rooted_square(const RootSystem& rs, RootIndex a, RootIndex b);
/// Relabels an already known square the same way; {a,b} must be one of its pairs.
MaximalSquare reroot(const MaximalSquare& sq, RootIndex a, RootIndex b);

/// Every maximal square once, sorted by sigma.
std::vector<MaximalSquare> enumerate_squares(const RootSystem& rs);

/// Lookup of squares by sigma.
class SquareCatalog {
 public:
  explicit SquareCatalog(const RootSystem& rs);
  const std::vector<MaximalSquare>& squares() const { return squares_; }
  std::size_t size() const { return squares_.size(); }
  /// Index of the square with sum sigma, or -1.
  int find(std::span<const int> sigma) const;
  const MaximalSquare& of_pair(const RootSystem& rs, RootIndex a, RootIndex b) const;

 private:
  std::vector<MaximalSquare> squares_;
  std::map<Coeffs, int> by_sigma_;
};

/// Relative position of a root and a square. The angle between r and the
/// square is 0, pi, pi/2, pi/3, 2pi/3 respectively.
enum class AngleCase { InSquare, OppositeSquare, Perp, Third, TwoThirds };

std::string_view to_string(AngleCase c);

struct AngleClass {
  AngleCase kind;
  /// i with r = beta_i (InSquare) or r = -beta_i (OppositeSquare); 0 otherwise.
  int index = 0;
  friend bool operator==(const AngleClass&, const AngleClass&) = default;
};

/// The doubled inner product 2(r, sigma) every member of the class has.
int expected_sigma_inner(AngleCase c);

/// Bit c set iff condition c of the classification holds for (r, sq),
/// each condition tested literally and independently of the others.
unsigned angle_case_mask(const RootSystem& rs, RootIndex r, const MaximalSquare& sq);

/// The unique class. Failing to classify is a program error (std::logic_error).
AngleClass classify_root_vs_square(const RootSystem& rs, RootIndex r, const MaximalSquare& sq);

/// gamma_i = beta_j - beta_i (i != +-j), gamma_j = beta_j, gamma_{-j} = -beta_{-j}.
MaximalSquare modified_square(const RootSystem& rs, const MaximalSquare& sq, int j);

struct PairSets {
  std::vector<RootPair> pi2;       // unordered, excludes {a,b}
  std::vector<RootPair> two_pi3;   // unordered {g,d}, g+d = a, (g,b) != 0
  std::vector<RootPair> pi;        // ordered (g,-g), angle(g,a) = angle(g,b) = 2pi/3
  std::vector<RootPair> pi_prime;  // ordered (g,-g), angle(g,a) = angle(-g,b) = 2pi/3
  friend bool operator==(const PairSets&, const PairSets&) = default;
};

/// Straight from the definitions, by scanning the root set.
PairSets pair_sets_direct(const RootSystem& rs, RootIndex a, RootIndex b);
/// Via the square rooted at (a,b): {beta_1-beta_i, beta_i}, (-beta_i, beta_i),
/// (beta_i-beta_1, beta_1-beta_i) for i != +-1.
PairSets pair_sets_from_square(const RootSystem& rs, RootIndex a, RootIndex b);
/// Both constructions, checked equal (std::logic_error otherwise).
PairSets pair_sets(const RootSystem& rs, RootIndex a, RootIndex b);

/// For {g,d} in S_{2pi/3}(a,b) returns the other pair {d+b, g-b} of the same
/// A_3, where g is the member with 2(g,b) = 1. Throws InvalidPair otherwise.
RootPair conjugate_pair(const RootSystem& rs, RootIndex a, RootIndex b, RootPair gd);

/// c(j)_i = 1 for i = +-j, else -N_{beta_j,-beta_i} N_{beta_{-j},-beta_{-i}}.
struct SignColumn {
  int base = 1;
  std::vector<int> entries;  // storage order of the square
  int at(int i) const { return entries[i > 0 ? i - 1 : static_cast<int>(entries.size()) + i]; }
};

SignColumn sign_column(const RootSystem& rs, const SignTable& signs, const MaximalSquare& sq, int j);

/// d with d orthogonal to a and c and 2(d,b) = -1, for an A_3 chain a - b - c.
/// Throws NotAnA3Triple unless 2(a,b) = 2(b,c) = -1 and a is orthogonal to c.
RootIndex extend_a3_to_d4(const RootSystem& rs, RootIndex a, RootIndex b, RootIndex c);
bool is_d4_extension(const RootSystem& rs, RootIndex a, RootIndex b, RootIndex c, RootIndex d);

}  // namespace adjeq
