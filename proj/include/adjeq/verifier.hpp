#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "adjeq/adjoint.hpp"
#include "adjeq/equations.hpp"
#include "adjeq/ring.hpp"
#include "adjeq/root_system.hpp"
#include "adjeq/signs.hpp"
#include "adjeq/squares.hpp"

namespace adjeq {

/// Sub-case of a ledger entry: which member of the square rho is, or the
/// doubled product (beta_1, rho) for the 2pi/3 class.
enum class SubCase { Any, JOther, JPlus, JMinus, InnerMinusOne, InnerZero };

std::string_view to_string(SubCase s);

/// One difference identity f(x_rho(xi) v) - f(v) = target(v), f the form of
/// the given kind at the pair (beta_1, beta_{-1}) of a rooted square.
struct LedgerEntry {
  AngleCase angle;
  FormKind kind;
  SubCase sub;
  std::string target;  // human-readable right-hand side
};

/// The 19 identities, in a fixed order.
const std::vector<LedgerEntry>& case_ledger();

/// The entry that covers (rho, rooted square, kind), or nullptr for the
/// classes pi/2 and pi/3.
const LedgerEntry* ledger_entry_for(const RootSystem& rs, const MaximalSquare& rooted, FormKind kind, RootIndex rho);

struct CaseCheck {
  const LedgerEntry* entry = nullptr;
  int j = 0;            // label of +-rho in the square, 0 for the 2pi/3 class
  Polynomial residual;  // f(w) - f(v) - target(v); zero on success
  bool ok() const { return residual.is_zero(); }
};

/// Shared symbolic data: the generic vector v and the form cache.
class SymbolicContext {
 public:
  SymbolicContext(const RootSystem& rs, const SignTable& signs);
  const RootSystem& roots() const { return rs_; }
  const SignTable& signs() const { return signs_; }
  const AdjointVector<PolynomialRing>& generic() const { return v_; }
  const Polynomial& xi() const { return xi_; }
  /// x_rho(xi1) applied to the generic vector.
  AdjointVector<PolynomialRing> moved(RootIndex rho) const;

 private:
  const RootSystem& rs_;
  const SignTable& signs_;
  AdjointVector<PolynomialRing> v_;
  Polynomial xi_;
};

/// Checks the ledger identity for (rooted square, kind, rho) over Z[xi, v].
/// Throws std::invalid_argument for the classes pi/2 and pi/3, and
/// std::logic_error when a target subscript pair is not orthogonal.
CaseCheck verify_case_identity(const SymbolicContext& ctx, const MaximalSquare& rooted, FormKind kind, RootIndex rho);

struct CommutatorCheck {
  AngleCase angle;
  RootIndex a = kNoRoot;  // x_rho(xi) = [x_a(xi), x_b(eps)]
  RootIndex b = kNoRoot;
  int eps = 0;            // 0 when neither sign works
  AngleClass class_a{AngleCase::Perp};
  AngleClass class_b{AngleCase::Perp};
  bool classes_expected = false;
  bool through_third = false;  // rho orthogonal to every root of the square
  bool ok() const { return eps != 0 && classes_expected; }
};

/// For rho at angle pi/2 or pi/3 to the square: splits x_rho(xi) into a
/// commutator of factors whose classes have direct identities and checks the
/// operator identity on the generic vector (hence on every basis vector).
/// A pi/2 root orthogonal to the whole square (D_l only) is split as
/// a + b with a at angle pi/3 and b at angle 2pi/3.
CommutatorCheck verify_commutator_reduction(const SymbolicContext& ctx, const MaximalSquare& sq, RootIndex rho);

struct OrbitCheck {
  bool ok = true;
  std::size_t evaluated = 0;
  std::size_t nonzero = 0;
  std::optional<std::size_t> first_nonzero;  // index into the equation set
  std::string first_value;
};

template <CommutativeRing R>
OrbitCheck check_vector(const EquationSet& eqs, const R& ring, const AdjointVector<R>& v) {
  OrbitCheck out;
  for (std::size_t i = 0; i < eqs.forms().size(); ++i) {
    const auto value = evaluate_form(eqs.forms()[i], ring, v);
    ++out.evaluated;
    if (!ring.is_zero(value)) {
      if (!out.first_nonzero) {
        out.first_nonzero = i;
        out.first_value = ring.to_string(value);
      }
      ++out.nonzero;
      out.ok = false;
    }
  }
  return out;
}

/// v = word * e^rho, then every form of eqs evaluated on v.
template <CommutativeRing R>
OrbitCheck verify_orbit_membership(const RootSystem& rs, const SignTable& signs, const EquationSet& eqs,
                                   const Word<R>& word, RootIndex rho, const R& ring) {
  const auto v = apply_word(rs, signs, ring, word, basis_vector(rs, rs.root_weight(rho), ring));
  return check_vector(eqs, ring, v);
}

/// Seeded source of random configurations. mt19937_64, values taken modulo n.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t next() { return rng_(); }
  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  template <CommutativeRing R>
  typename R::Element scalar(const R& ring);

 private:
  std::mt19937_64 rng_;
};

template <CommutativeRing R>
typename R::Element Sampler::scalar(const R& ring) {
  if constexpr (std::is_same_v<R, ModularRing>) return ring.reduce(next());
  else return embed_integer(ring, between(-2, 2));
}

/// Up to max_length factors, roots uniform, scalars from Sampler::scalar.
template <CommutativeRing R>
Word<R> random_word(const RootSystem& rs, const R& ring, Sampler& s, int max_length = 12) {
  Word<R> w;
  const int n = s.between(1, max_length);
  for (int i = 0; i < n; ++i) {
    const RootIndex rho = s.below(rs.size());
    w.push_back({rho, s.scalar(ring)});
  }
  return w;
}

struct SuiteConfig {
  SystemId system;
  std::string suite = "all";  // jacobi, combinatorics, cases, commutator, words, all
  std::uint64_t seed = 1;
  int samples = 100;
  std::vector<std::string> rings = {"int", "zmod:4", "zmod:7"};
};

/// One named group of checks inside a suite run.
struct CheckGroup {
  CheckGroup() = default;
  CheckGroup(std::string n) : name(std::move(n)) {}

  std::string name;
  long long attempted = 0;
  long long passed = 0;
  std::vector<std::string> failures;  // at most kMaxWitnesses kept

  static constexpr std::size_t kMaxWitnesses = 10;
  void record(bool ok, const std::string& witness = {});
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<CheckGroup> groups;
  bool ok() const;
  long long attempted() const;
  long long passed() const;
};

/// Throws std::invalid_argument on an unknown suite or ring.
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace adjeq
