#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "adjeq/root_system.hpp"

namespace adjeq {

/// Structure constants N_{a,b} in {-1,0,1} of a Chevalley basis:
/// [e_a, e_b] = N_{a,b} e_{a+b} when a+b is a root, and N_{a,b} = 0 otherwise
/// (including b = -a; the Cartan part of that bracket is h_a).
///
/// Signs come from the bimultiplicative cocycle (-1)^{B(a,b)}, where B is the
/// bilinear form on the root lattice with B(a_i,a_i) = 1, B(a_i,a_j) = <a_i,a_j>
/// for i < j and 0 for i > j, rescaled by the sign of each root so that
/// [e_a, e_{-a}] = h_a.
class SignTable {
 public:
  explicit SignTable(const RootSystem& rs);

  const SystemId& system() const { return system_; }
  int operator()(RootIndex a, RootIndex b) const { return table_[flat(a, b)]; }
  /// Coefficient-level lookup; throws InvalidRoot.
  int structure_constant(const RootSystem& rs, std::span<const int> a, std::span<const int> b) const;

  /// Rows "a-coeffs;b-coeffs;N" for every pair with N != 0.
  void write_csv(const RootSystem& rs, std::ostream& os) const;

 private:
  std::size_t flat(RootIndex a, RootIndex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  SystemId system_;
  int n_;
  std::vector<std::int8_t> table_;
};

}  // namespace adjeq
