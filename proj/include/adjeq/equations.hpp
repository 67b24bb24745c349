#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "adjeq/adjoint.hpp"
#include "adjeq/ring.hpp"
#include "adjeq/root_system.hpp"
#include "adjeq/signs.hpp"
#include "adjeq/squares.hpp"

namespace adjeq {

enum class FormKind { Pi2, TwoPi3, Pi };

std::string_view to_string(FormKind k);
/// "pi/2", "2pi/3", "pi".
FormKind parse_form_kind(std::string_view text);

/// c * v_a * v_b with a <= b.
struct FormMonomial {
  Weight a;
  Weight b;
  int coeff;
  friend bool operator==(const FormMonomial&, const FormMonomial&) = default;
};

/// Sparse integer quadratic form in the weight coordinates.
///
/// Key: sigma for Pi2; the ordered pair (alpha, beta) for TwoPi3; the
/// unordered pair alpha < beta for Pi.
struct QuadraticForm {
  SystemId system;
  FormKind kind = FormKind::Pi2;
  Coeffs sigma;
  RootIndex alpha = kNoRoot;
  RootIndex beta = kNoRoot;
  std::vector<FormMonomial> monomials;  // sorted by (a, b), nonzero coefficients

  int coefficient(Weight a, Weight b) const;
  /// Same monomials and coefficients; keys are ignored.
  bool same_polynomial(const QuadraticForm& o) const { return monomials == o.monomials; }
  QuadraticForm scaled(int factor) const;
};

/// Accumulates c * v_a * v_b terms, merging unordered weight pairs.
class FormBuilder {
 public:
  void add(Weight a, Weight b, int coeff);
  std::vector<FormMonomial> build() const;

 private:
  std::map<std::pair<int, int>, int> acc_;
};

/// The pi/2 form of a square, rooted at its pair 1:
///   v_{b1} v_{b-1} - sum_{i>=2} N_{b1,-bi} N_{b-1,-b-i} v_{bi} v_{b-i},
/// i.e. sum_i c(1)_i v_{bi} v_{b-i}. Leading coefficient +1.
QuadraticForm eq_pi2(const RootSystem& rs, const SignTable& signs, const MaximalSquare& sq);
/// f^{pi/2}_{a,b}: the pi/2 form of the square of {a,b}, scaled so the
/// coefficient of v_a v_b is +1.
QuadraticForm pi2_for_pair(const RootSystem& rs, const SignTable& signs, RootIndex a, RootIndex b);
/// f^{pi/2}_{a,b} straight from its definition over S_{pi/2}(a,b).
QuadraticForm pi2_direct(const RootSystem& rs, const SignTable& signs, RootIndex a, RootIndex b);

/// f^{2pi/3}_{a,b} from the square rooted at (a,b):
///   sum_{i != +-1} N_{b1,-bi} v_{b1-bi} v_{bi} - v_{b1} sum_s <b-1,alpha_s> vh_s.
QuadraticForm eq_2pi3_square(const RootSystem& rs, const SignTable& signs, const MaximalSquare& rooted);
/// The same form from the defining sum over S_{2pi/3}(a,b).
QuadraticForm eq_2pi3_direct(const RootSystem& rs, const SignTable& signs, RootIndex a, RootIndex b);
/// Both constructions, checked equal (std::logic_error otherwise).
QuadraticForm eq_2pi3(const RootSystem& rs, const SignTable& signs, RootIndex a, RootIndex b);

/// f^{pi}_{a,b} from the square rooted at (a,b):
///   sum_{i != +-1} (v_{b1-bi} v_{bi-b1} - v_{-bi} v_{bi})
///   - (sum_s <b1,alpha_s> vh_s)(sum_s <b-1,alpha_s> vh_s).
QuadraticForm eq_pi_square(const RootSystem& rs, const MaximalSquare& rooted);
/// The same form from S_pi(a,b) and S'_pi(a,b).
QuadraticForm eq_pi_direct(const RootSystem& rs, RootIndex a, RootIndex b);
/// Both constructions, checked equal; the key is stored unordered.
QuadraticForm eq_pi(const RootSystem& rs, RootIndex a, RootIndex b);

struct EquationCounts {
  std::size_t pi2 = 0;
  std::size_t two_pi3 = 0;
  std::size_t pi = 0;
  std::size_t total() const { return pi2 + two_pi3 + pi; }
};

class EquationSet {
 public:
  EquationSet() = default;
  EquationSet(SystemId system, std::vector<QuadraticForm> forms);

  const SystemId& system() const { return system_; }
  const std::vector<QuadraticForm>& forms() const { return forms_; }
  EquationCounts counts() const;

  const QuadraticForm* find_pi2(std::span<const int> sigma) const;
  const QuadraticForm* find_2pi3(RootIndex a, RootIndex b) const;
  const QuadraticForm* find_pi(RootIndex a, RootIndex b) const;

 private:
  SystemId system_;
  std::vector<QuadraticForm> forms_;
  std::map<Coeffs, std::size_t> pi2_;
  std::map<RootPair, std::size_t> two_pi3_;
  std::map<RootPair, std::size_t> pi_;
};

struct KindSelection {
  bool pi2 = true;
  bool two_pi3 = true;
  bool pi = true;
};

/// One pi/2 form per square (sorted by sigma), one 2pi/3 form per ordered
/// orthogonal pair and one pi form per unordered orthogonal pair (both sorted
/// by root index).
EquationSet generate_all_equations(const RootSystem& rs, const SignTable& signs, const SquareCatalog& squares,
                                   KindSelection kinds = {});
EquationSet generate_all_equations(const RootSystem& rs, const SignTable& signs, KindSelection kinds = {});

template <CommutativeRing R>
typename R::Element evaluate_form(const QuadraticForm& f, const R& ring, const AdjointVector<R>& v) {
  if (f.system != v.system) throw Mismatch("form and vector belong to different systems");
  typename R::Element acc = ring.zero();
  for (const auto& m : f.monomials) {
    if (m.b.pos >= static_cast<int>(v.coords.size())) throw Mismatch("vector too short for form");
    const auto& x = v[m.a];
    const auto& y = v[m.b];
    if (ring.is_zero(x) || ring.is_zero(y)) continue;
    ring.add_assign(acc, times(ring, ring.mul(x, y), m.coeff));
  }
  return acc;
}

}  // namespace adjeq
