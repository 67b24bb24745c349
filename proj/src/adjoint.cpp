#include "adjeq/adjoint.hpp"

namespace adjeq {

AdjointVector<PolynomialRing> generic_vector(const RootSystem& rs) {
  AdjointVector<PolynomialRing> v{rs.id(), {}};
  v.coords.reserve(rs.dimension());
  for (int p = 0; p < rs.dimension(); ++p) v.coords.push_back(Polynomial::variable(static_cast<VarId>(p)));
  return v;
}

}  // namespace adjeq
