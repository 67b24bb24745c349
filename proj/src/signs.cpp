#include "adjeq/signs.hpp"

#include <ostream>

namespace adjeq {

SignTable::SignTable(const RootSystem& rs) : system_(rs.id()), n_(rs.size()) {
  const int l = rs.rank();
  const auto& a = rs.cartan();
  auto bform = [&](RootIndex x, RootIndex y) {
    int r = 0;
    for (int s = 0; s < l; ++s) {
      const int xs = rs.coeff(x, s + 1);
      if (xs == 0) continue;
      r += xs * rs.coeff(y, s + 1);
      for (int t = s + 1; t < l; ++t) r += xs * a[s][t] * rs.coeff(y, t + 1);
    }
    return r;
  };
  auto sgn = [&](RootIndex x) { return rs.is_positive(x) ? 1 : -1; };

  table_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (RootIndex x = 0; x < n_; ++x) {
    for (RootIndex y = 0; y < n_; ++y) {
      const RootIndex z = rs.sum(x, y);
      if (z == kNoRoot) continue;
      const int eps = (bform(x, y) & 1) ? -1 : 1;
      table_[flat(x, y)] = static_cast<std::int8_t>(eps * sgn(x) * sgn(y) * sgn(z));
    }
  }
}

int SignTable::structure_constant(const RootSystem& rs, std::span<const int> a,
                                  std::span<const int> b) const {
  return (*this)(rs.index_of(a), rs.index_of(b));
}

void SignTable::write_csv(const RootSystem& rs, std::ostream& os) const {
  os << "alpha;beta;N\n";
  for (RootIndex x = 0; x < n_; ++x)
    for (RootIndex y = 0; y < n_; ++y)
      if (int v = (*this)(x, y); v != 0)
        os << format_coeffs(rs.coeffs(x)) << ';' << format_coeffs(rs.coeffs(y)) << ';' << v << '\n';
}

}  // namespace adjeq
