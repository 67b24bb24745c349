#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "adjeq/root_system.hpp"
#include "adjeq/signs.hpp"

namespace testing_support {

using adjeq::RootIndex;
using adjeq::RootSystem;
using adjeq::SignTable;
using adjeq::SystemId;

inline const std::vector<SystemId>& all_systems() {
  static const std::vector<SystemId> ids = {SystemId::parse("D5"), SystemId::parse("D6"), SystemId::parse("E6"),
                                            SystemId::parse("E7"), SystemId::parse("E8")};
  return ids;
}

inline const RootSystem& rsys(const char* name) {
  static std::map<std::string, RootSystem> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, RootSystem(SystemId::parse(name))).first;
  return it->second;
}

inline const SignTable& signs(const char* name) {
  static std::map<std::string, SignTable> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, SignTable(rsys(name))).first;
  return it->second;
}

struct Gen {
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  int below(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  RootIndex root(const RootSystem& rs) { return below(rs.size()); }
  std::mt19937_64 rng;
};

/// Doubled inner product straight from the Cartan matrix, no tables.
inline int cartan_inner(const RootSystem& rs, const adjeq::Coeffs& a, const adjeq::Coeffs& b) {
  const auto& c = rs.cartan();
  int acc = 0;
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = 0; t < b.size(); ++t) acc += a[s] * c[s][t] * b[t];
  return acc;
}

/// The Lie algebra on basis e_a (a a root, position = root index) and h_s
/// (position |Phi| + s - 1), bracket built from the sign table:
///   [e_a, e_b] = N_{a,b} e_{a+b}, [e_a, e_{-a}] = sum_s m_s(a) h_s,
///   [h_s, e_a] = <a, alpha_s> e_a, [h_s, h_t] = 0.
/// Returned as sparse columns: bracket(x, y) = list of (position, coefficient).
class LieAlgebra {
 public:
  using Sparse = std::vector<std::pair<int, long long>>;

  LieAlgebra(const RootSystem& rs, const SignTable& n) : rs_(rs), n_(n), dim_(rs.dimension()) {}

  int dim() const { return dim_; }

  Sparse bracket(int x, int y) const {
    const int roots = rs_.size();
    Sparse out;
    if (x < roots && y < roots) {
      if (rs_.negate(x) == y) {
        for (int s = 1; s <= rs_.rank(); ++s)
          if (rs_.coeff(x, s) != 0) out.push_back({roots + s - 1, rs_.coeff(x, s)});
      } else if (const RootIndex z = rs_.sum(x, y); z != adjeq::kNoRoot) {
        out.push_back({z, n_(x, y)});
      }
    } else if (x >= roots && y < roots) {
      const int p = rs_.pairing(y, x - roots + 1);
      if (p != 0) out.push_back({y, p});
    } else if (x < roots && y >= roots) {
      const int p = rs_.pairing(x, y - roots + 1);
      if (p != 0) out.push_back({x, -p});
    }
    return out;
  }

  /// Dense matrix of ad(e_r): column y holds [e_r, basis_y].
  std::vector<std::vector<long long>> ad(int r) const {
    std::vector<std::vector<long long>> m(dim_, std::vector<long long>(dim_, 0));
    for (int y = 0; y < dim_; ++y)
      for (auto [p, c] : bracket(r, y)) m[p][y] += c;
    return m;
  }

  /// [x, [y, z]] + [y, [z, x]] + [z, [x, y]] as a dense vector.
  std::vector<long long> jacobiator(int x, int y, int z) const {
    std::vector<long long> acc(dim_, 0);
    auto nest = [&](int a, int b, int c) {
      for (auto [p, k] : bracket(b, c))
        for (auto [q, l] : bracket(a, p)) acc[q] += k * l;
    };
    nest(x, y, z);
    nest(y, z, x);
    nest(z, x, y);
    return acc;
  }

 private:
  const RootSystem& rs_;
  const SignTable& n_;
  int dim_;
};

}  // namespace testing_support
