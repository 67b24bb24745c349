#pragma once

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace adjeq {

using BigInt = boost::multiprecision::cpp_int;

/// Commutative unital ring with decidable equality. No division, no order.
template <class R>
concept CommutativeRing = requires(const R& r, const typename R::Element& a, typename R::Element& m,
                                   std::string_view text) {
  { r.zero() } -> std::same_as<typename R::Element>;
  { r.one() } -> std::same_as<typename R::Element>;
  { r.add(a, a) } -> std::same_as<typename R::Element>;
  { r.neg(a) } -> std::same_as<typename R::Element>;
  { r.mul(a, a) } -> std::same_as<typename R::Element>;
  r.add_assign(m, a);
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.equal(a, a) } -> std::convertible_to<bool>;
  { r.to_string(a) } -> std::convertible_to<std::string>;
  { r.parse(text) } -> std::same_as<typename R::Element>;
  { r.name() } -> std::convertible_to<std::string>;
};

/// n * x through doubling and repeated addition only, so it is the image of
/// the integer n under the canonical map Z -> R whatever the characteristic.
template <CommutativeRing R>
typename R::Element times(const R& ring, typename R::Element x, long long n) {
  const bool negative = n < 0;
  unsigned long long m = negative ? 0ull - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  typename R::Element acc = ring.zero();
  while (m) {
    if (m & 1u) ring.add_assign(acc, x);
    m >>= 1;
    if (m) x = ring.add(x, x);
  }
  return negative ? ring.neg(acc) : acc;
}

template <CommutativeRing R>
typename R::Element embed_integer(const R& ring, long long n) {
  return times(ring, ring.one(), n);
}

template <CommutativeRing R>
typename R::Element sub(const R& ring, const typename R::Element& a, const typename R::Element& b) {
  return ring.add(a, ring.neg(b));
}

/// The integers, arbitrary precision.
class IntegerRing {
 public:
  using Element = BigInt;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  void add_assign(Element& a, const Element& b) const { a += b; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string to_string(const Element& a) const { return a.str(); }
  Element parse(std::string_view text) const;
  std::string name() const { return "int"; }
};

/// Z/mZ for any m >= 2 (composite moduli allowed). Residues are kept in [0, m).
class ModularRing {
 public:
  using Element = std::uint64_t;
  explicit ModularRing(std::uint64_t modulus);
  std::uint64_t modulus() const { return m_; }
  Element zero() const { return 0; }
  Element one() const { return 1 % m_; }
  Element add(Element a, Element b) const {
    const Element s = a + b;
    return (s >= m_ || s < a) ? s - m_ : s;
  }
  Element neg(Element a) const { return a == 0 ? 0 : m_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % m_);
  }
  void add_assign(Element& a, Element b) const { a = add(a, b); }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  Element reduce(const BigInt& n) const;
  std::string to_string(Element a) const { return std::to_string(a); }
  Element parse(std::string_view text) const;
  std::string name() const { return "zmod:" + std::to_string(m_); }

 private:
  std::uint64_t m_;
};

/// Variable identifiers of the polynomial ring. Ids below kXiBase are the
/// coordinate variables v<id>; kXiBase + n - 1 is the parameter xi<n>.
using VarId = std::uint16_t;
inline constexpr VarId kXiBase = 32768;

inline VarId xi_variable(int n) { return static_cast<VarId>(kXiBase + n - 1); }
std::string variable_name(VarId v);

/// Commutative monomial: sorted multiset of at most kCapacity variables.
class Monomial {
 public:
  static constexpr int kCapacity = 12;

  Monomial() = default;
  static Monomial variable(VarId v);

  int degree() const { return degree_; }
  int exponent(VarId v) const;
  std::span<const VarId> variables() const { return {vars_.data(), static_cast<std::size_t>(degree_)}; }
  /// Throws std::overflow_error past kCapacity.
  Monomial operator*(const Monomial& other) const;

  /// Degree first, then lexicographic on the sorted variable list.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return (a <=> b) == 0; }

 private:
  std::array<VarId, kCapacity> vars_{};
  std::uint8_t degree_ = 0;
};

/// Sparse polynomial with BigInt coefficients; terms kept sorted ascending in
/// degree-lexicographic order with no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    BigInt coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  static Polynomial constant(const BigInt& c);
  static Polynomial variable(VarId v);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : terms_.back().mono.degree(); }
  BigInt coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);

  /// Terms from highest to lowest, e.g. "-2*v3*xi1^2 + v7 - 1".
  std::string to_string() const;
  /// Inverse of to_string(); accepts any sum of integer multiples of products
  /// of variables with optional ^exponents. Throws ParseError.
  static Polynomial parse(std::string_view text);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

class PolynomialRing {
 public:
  using Element = Polynomial;
  Element zero() const { return {}; }
  Element one() const { return Polynomial::constant(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  void add_assign(Element& a, const Element& b) const { a += b; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string to_string(const Element& a) const { return a.to_string(); }
  Element parse(std::string_view text) const { return Polynomial::parse(text); }
  std::string name() const { return "poly"; }
};

static_assert(CommutativeRing<IntegerRing>);
static_assert(CommutativeRing<ModularRing>);
static_assert(CommutativeRing<PolynomialRing>);

/// Ring selected at run time: "int", "zmod:<m>" or "poly".
using RingSpec = std::variant<IntegerRing, ModularRing, PolynomialRing>;

RingSpec parse_ring(std::string_view text);
std::string ring_name(const RingSpec& ring);

}  // namespace adjeq
