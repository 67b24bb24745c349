#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adjeq {

enum class Family { D, E };

/// A simply-laced system D_l (l >= 5) or E_6, E_7, E_8.
struct SystemId {
  Family family = Family::E;
  int rank = 8;

  /// Parses "D5", "D12", "E6", ... (case-insensitive family letter).
  static SystemId parse(std::string_view name);

  bool valid() const;
  std::string name() const;
  /// Rank of the adjoint module: l(2l-1), 78, 133, 248.
  int dimension() const;
  /// The nominal square constant k = l, 4, 5, 7. Exact for E_l; see
  /// square_sizes() for the squares D_l actually has.
  int square_half_size() const;

  friend bool operator==(const SystemId&, const SystemId&) = default;
};

/// Coefficients m_s(alpha) in the basis of fundamental roots, s = 1..l.
using Coeffs = std::vector<int>;

/// Position of a root in the canonical root order of its RootSystem.
using RootIndex = int;
inline constexpr RootIndex kNoRoot = -1;

enum class PairRelation { Equal, Opposite, Orthogonal, SumIsRoot, DifferenceIsRoot };

std::string_view to_string(PairRelation r);

/// Position in the canonical weight order: all roots (RootSystem order), then
/// the zero weights 0_1, ..., 0_l.
struct Weight {
  int pos = 0;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Root datum for one system. Immutable after construction; all tables are
/// dense and precomputed, so every query below is O(1) except find().
class RootSystem {
 public:
  /// Generates the closed root set from the fundamental roots.
  /// Throws UnsupportedSystem for D_4 and anything outside D_l (l>=5), E_6..E_8.
  explicit RootSystem(SystemId id);

  const SystemId& id() const { return id_; }
  int rank() const { return rank_; }
  int k() const { return id_.square_half_size(); }
  int size() const { return static_cast<int>(roots_.size()); }
  int dimension() const { return size() + rank_; }

  /// Symmetric Cartan matrix in Bourbaki numbering (0-based storage).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  const Coeffs& coeffs(RootIndex r) const { return roots_[r]; }
  /// m_s(r) for s = 1..l.
  int coeff(RootIndex r, int s) const { return roots_[r][s - 1]; }
  int height(RootIndex r) const { return height_[r]; }
  bool is_positive(RootIndex r) const { return height_[r] > 0; }

  std::optional<RootIndex> find(std::span<const int> coeffs) const;
  /// Throws InvalidRoot when coeffs is not a root of this system.
  RootIndex index_of(std::span<const int> coeffs) const;
  /// The fundamental root alpha_s, s = 1..l.
  RootIndex simple(int s) const;

  RootIndex negate(RootIndex r) const { return neg_[r]; }
  /// 2(a,b) with unit-length roots, i.e. the Cartan number <a,b>.
  int inner(RootIndex a, RootIndex b) const { return inner_[flat(a, b)]; }
  /// <r, alpha_s> for s = 1..l.
  int pairing(RootIndex r, int s) const { return pairing_[r * rank_ + (s - 1)]; }
  /// Index of a+b, or kNoRoot.
  RootIndex sum(RootIndex a, RootIndex b) const { return sum_[flat(a, b)]; }
  /// Index of a-b, or kNoRoot.
  RootIndex difference(RootIndex a, RootIndex b) const { return sum(a, neg_[b]); }
  PairRelation classify(RootIndex a, RootIndex b) const;

  // Coefficient-level API. These validate their input and throw InvalidRoot.
  int doubled_inner(std::span<const int> a, std::span<const int> b) const;
  PairRelation classify_pair(std::span<const int> a, std::span<const int> b) const;
  std::optional<Coeffs> add_if_root(std::span<const int> a, std::span<const int> b) const;

  // Weights.
  Weight root_weight(RootIndex r) const { return Weight{r}; }
  /// The zero weight 0_s, s = 1..l.
  Weight zero_weight(int s) const;
  bool is_zero_weight(Weight w) const { return w.pos >= size(); }
  /// s for a zero weight 0_s.
  int zero_slot(Weight w) const { return w.pos - size() + 1; }
  RootIndex weight_root(Weight w) const { return w.pos; }

 private:
  std::size_t flat(RootIndex a, RootIndex b) const {
    return static_cast<std::size_t>(a) * roots_.size() + static_cast<std::size_t>(b);
  }

  SystemId id_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Coeffs> roots_;
  std::map<Coeffs, RootIndex> index_;
  std::vector<int> height_;
  std::vector<RootIndex> neg_;
  std::vector<int> pairing_;
  std::vector<std::int8_t> inner_;
  std::vector<std::int32_t> sum_;
  std::vector<RootIndex> simple_;
};

/// Bourbaki Cartan matrix for a supported system.
std::vector<std::vector<int>> cartan_matrix(const SystemId& id);

std::string format_coeffs(std::span<const int> c);

}  // namespace adjeq
