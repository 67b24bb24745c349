#include "adjeq/squares.hpp"

#include <algorithm>
#include <bit>

#include "adjeq/errors.hpp"

namespace adjeq {

namespace {

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) r[s] = a[s] + b[s];
  return r;
}

Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) r[s] = a[s] - b[s];
  return r;
}

void require_orthogonal(const RootSystem& rs, RootIndex a, RootIndex b) {
  if (rs.inner(a, b) != 0)
    throw InvalidPair(format_coeffs(rs.coeffs(a)) + ", " + format_coeffs(rs.coeffs(b)) +
                      " are not orthogonal");
}

// Orients each pair lexicographically and sorts pairs by their smaller member.
MaximalSquare canonical_square(const RootSystem& rs, Coeffs sigma, std::vector<RootPair> pairs) {
  for (auto& [x, y] : pairs)
    if (rs.coeffs(y) < rs.coeffs(x)) std::swap(x, y);
  std::sort(pairs.begin(), pairs.end(),
            [&](const RootPair& p, const RootPair& q) { return rs.coeffs(p.first) < rs.coeffs(q.first); });
  const int k = static_cast<int>(pairs.size());
  std::vector<RootIndex> members(2 * k);
  for (int i = 1; i <= k; ++i) {
    members[i - 1] = pairs[i - 1].first;
    members[2 * k - i] = pairs[i - 1].second;
  }
  return MaximalSquare(std::move(sigma), std::move(members));
}

}  // namespace

MaximalSquare::MaximalSquare(Coeffs sigma, std::vector<RootIndex> by_position)
    : sigma_(std::move(sigma)), members_(std::move(by_position)) {}

RootIndex MaximalSquare::member(int i) const {
  if (!valid_label(i)) throw IndexOutOfRange("square label " + std::to_string(i) + " out of range");
  return members_[position(i)];
}

int MaximalSquare::label_of(RootIndex r) const {
  for (int p = 0; p < static_cast<int>(members_.size()); ++p)
    if (members_[p] == r) return p < k() ? p + 1 : p - 2 * k();
  return 0;
}

std::vector<int> MaximalSquare::labels() const {
  std::vector<int> out;
  for (int i = 1; i <= k(); ++i) out.push_back(i);
  for (int i = k(); i >= 1; --i) out.push_back(-i);
  return out;
}

int inner_with(const RootSystem& rs, RootIndex r, std::span<const int> v) {
  int p = 0;
  for (int s = 1; s <= rs.rank(); ++s) p += rs.pairing(r, s) * v[s - 1];
  return p;
}

bool is_maximal_square(const RootSystem& rs, const MaximalSquare& sq) {
  if (!square_size_occurs(rs.id(), sq.k())) return false;
  int with_partner = 0;
  for (RootIndex g = 0; g < rs.size(); ++g) with_partner += rs.find(sub(sq.sigma(), rs.coeffs(g))).has_value();
  if (with_partner != 2 * sq.k()) return false;
  for (int i : sq.labels()) {
    const RootIndex bi = sq.member(i);
    if (add(rs.coeffs(bi), rs.coeffs(sq.member(-i))) != sq.sigma()) return false;
    for (int j : sq.labels()) {
      const int want = (j == i) ? 2 : (j == -i) ? 0 : 1;
      if (rs.inner(bi, sq.member(j)) != want) return false;
    }
  }
  return true;
}

std::vector<int> square_sizes(const SystemId& id) {
  if (id.family == Family::D) return {3, id.rank - 1};
  return {id.square_half_size()};
}

bool square_size_occurs(const SystemId& id, int pairs) {
  const auto sizes = square_sizes(id);
  return std::find(sizes.begin(), sizes.end(), pairs) != sizes.end();
}

MaximalSquare square_of_pair(const RootSystem& rs, RootIndex a, RootIndex b) {
  require_orthogonal(rs, a, b);
  Coeffs sigma = add(rs.coeffs(a), rs.coeffs(b));
  std::vector<RootPair> pairs;
  for (RootIndex g = 0; g < rs.size(); ++g) {
    auto d = rs.find(sub(sigma, rs.coeffs(g)));
    if (d && g < *d) pairs.emplace_back(g, *d);
  }
  if (!square_size_occurs(rs.id(), static_cast<int>(pairs.size())))
    throw std::logic_error("square of " + format_coeffs(sigma) + " has " + std::to_string(pairs.size()) +
                           " pairs");
  return canonical_square(rs, std::move(sigma), std::move(pairs));
}

MaximalSquare rooted_square(const RootSystem& rs, RootIndex a, RootIndex b) {
  return reroot(square_of_pair(rs, a, b), a, b);
}

MaximalSquare reroot(const MaximalSquare& sq, RootIndex a, RootIndex b) {
  const int k = sq.k();
  const int ja = sq.label_of(a);
  if (ja == 0 || sq.member(-ja) != b) throw InvalidPair("pair is not an orthogonal pair of the square");
  std::vector<RootIndex> members(2 * k);
  members[0] = a;
  members[2 * k - 1] = b;
  int next = 2;
  for (int i = 1; i <= k; ++i) {
    if (i == std::abs(ja)) continue;
    members[next - 1] = sq.member(i);
    members[2 * k - next] = sq.member(-i);
    ++next;
  }
  return MaximalSquare(sq.sigma(), std::move(members));
}

std::vector<MaximalSquare> enumerate_squares(const RootSystem& rs) {
  std::map<Coeffs, std::vector<RootPair>> groups;
  for (RootIndex a = 0; a < rs.size(); ++a)
    for (RootIndex b = a + 1; b < rs.size(); ++b)
      if (rs.inner(a, b) == 0) groups[add(rs.coeffs(a), rs.coeffs(b))].emplace_back(a, b);
  std::vector<MaximalSquare> out;
  out.reserve(groups.size());
  for (auto& [sigma, pairs] : groups) {
    if (!square_size_occurs(rs.id(), static_cast<int>(pairs.size())))
      throw std::logic_error("sum " + format_coeffs(sigma) + " carries " + std::to_string(pairs.size()) +
                             " orthogonal pairs");
    out.push_back(canonical_square(rs, sigma, std::move(pairs)));
  }
  return out;
}

SquareCatalog::SquareCatalog(const RootSystem& rs) : squares_(enumerate_squares(rs)) {
  for (int i = 0; i < static_cast<int>(squares_.size()); ++i) by_sigma_.emplace(squares_[i].sigma(), i);
}

int SquareCatalog::find(std::span<const int> sigma) const {
  auto it = by_sigma_.find(Coeffs(sigma.begin(), sigma.end()));
  return it == by_sigma_.end() ? -1 : it->second;
}

const MaximalSquare& SquareCatalog::of_pair(const RootSystem& rs, RootIndex a, RootIndex b) const {
  require_orthogonal(rs, a, b);
  const int i = find(add(rs.coeffs(a), rs.coeffs(b)));
  if (i < 0) throw std::logic_error("orthogonal pair missing from the square catalog");
  return squares_[i];
}

std::string_view to_string(AngleCase c) {
  switch (c) {
    case AngleCase::InSquare: return "0";
    case AngleCase::OppositeSquare: return "pi";
    case AngleCase::Perp: return "pi/2";
    case AngleCase::Third: return "pi/3";
    case AngleCase::TwoThirds: return "2pi/3";
  }
  return "?";
}

int expected_sigma_inner(AngleCase c) {
  switch (c) {
    case AngleCase::InSquare: return 2;
    case AngleCase::OppositeSquare: return -2;
    case AngleCase::Perp: return 0;
    case AngleCase::Third: return 1;
    case AngleCase::TwoThirds: return -1;
  }
  return 0;
}

unsigned angle_case_mask(const RootSystem& rs, RootIndex r, const MaximalSquare& sq) {
  const int k = sq.k();
  auto ip = [&](int i) { return rs.inner(r, sq.member(i)); };
  unsigned mask = 0;

  // (1), (2): r = +-beta_i with the prescribed angles to the rest.
  for (int i : sq.labels()) {
    for (int sign : {1, -1}) {
      const RootIndex target = sign > 0 ? sq.member(i) : rs.negate(sq.member(i));
      if (r != target || ip(-i) != 0) continue;
      bool ok = true;
      for (int j = 1; j <= k && ok; ++j) {
        if (j == std::abs(i)) continue;
        ok = ip(j) == sign && ip(-j) == sign;
      }
      if (ok) mask |= 1u << static_cast<unsigned>(sign > 0 ? AngleCase::InSquare : AngleCase::OppositeSquare);
    }
  }

  // (3): some pair entirely orthogonal to r, every pair either orthogonal or {1,-1}.
  bool some_perp_pair = false, pairs_balanced = true;
  for (int j = 1; j <= k; ++j) {
    const int x = ip(j), y = ip(-j);
    if (x == 0 && y == 0) some_perp_pair = true;
    else if (!((x == 1 && y == -1) || (x == -1 && y == 1))) pairs_balanced = false;
  }
  if (some_perp_pair && pairs_balanced) mask |= 1u << static_cast<unsigned>(AngleCase::Perp);

  // (4), (5): every pair is {0, +1} resp. {0, -1}.
  for (int sign : {1, -1}) {
    bool ok = true;
    for (int j = 1; j <= k && ok; ++j) {
      const int x = ip(j), y = ip(-j);
      ok = (x == 0 && y == sign) || (x == sign && y == 0);
    }
    if (ok) mask |= 1u << static_cast<unsigned>(sign > 0 ? AngleCase::Third : AngleCase::TwoThirds);
  }
  return mask;
}

AngleClass classify_root_vs_square(const RootSystem& rs, RootIndex r, const MaximalSquare& sq) {
  const unsigned mask = angle_case_mask(rs, r, sq);
  if (std::popcount(mask) != 1)
    throw std::logic_error("root " + format_coeffs(rs.coeffs(r)) + " matches " +
                           std::to_string(std::popcount(mask)) + " cases against square " +
                           format_coeffs(sq.sigma()));
  AngleClass out{static_cast<AngleCase>(std::countr_zero(mask)), 0};
  if (out.kind == AngleCase::InSquare) out.index = sq.label_of(r);
  if (out.kind == AngleCase::OppositeSquare) out.index = sq.label_of(rs.negate(r));
  if (inner_with(rs, r, sq.sigma()) != expected_sigma_inner(out.kind))
    throw std::logic_error("inner product with sigma disagrees with the angle class");
  return out;
}

MaximalSquare modified_square(const RootSystem& rs, const MaximalSquare& sq, int j) {
  if (!sq.valid_label(j)) throw IndexOutOfRange("square label " + std::to_string(j) + " out of range");
  const int k = sq.k();
  std::vector<RootIndex> members(2 * k);
  const RootIndex bj = sq.member(j);
  for (int i : sq.labels()) {
    RootIndex g;
    if (i == j) g = bj;
    else if (i == -j) g = rs.negate(sq.member(-j));
    else g = rs.difference(bj, sq.member(i));
    if (g == kNoRoot) throw std::logic_error("modified square member is not a root");
    members[i > 0 ? i - 1 : 2 * k + i] = g;
  }
  return MaximalSquare(sub(rs.coeffs(bj), rs.coeffs(sq.member(-j))), std::move(members));
}

PairSets pair_sets_direct(const RootSystem& rs, RootIndex a, RootIndex b) {
  require_orthogonal(rs, a, b);
  PairSets out;
  const Coeffs sigma = add(rs.coeffs(a), rs.coeffs(b));
  const RootPair ab = unordered(a, b);
  for (RootIndex g = 0; g < rs.size(); ++g) {
    if (auto d = rs.find(sub(sigma, rs.coeffs(g))); d && g < *d && RootPair{g, *d} != ab)
      out.pi2.emplace_back(g, *d);
    if (auto d = rs.find(sub(rs.coeffs(a), rs.coeffs(g))); d && g < *d && rs.inner(g, b) != 0)
      out.two_pi3.emplace_back(g, *d);
    const RootIndex ng = rs.negate(g);
    if (rs.inner(g, a) == -1 && rs.inner(g, b) == -1) out.pi.emplace_back(g, ng);
    if (rs.inner(g, a) == -1 && rs.inner(ng, b) == -1) out.pi_prime.emplace_back(g, ng);
  }
  std::sort(out.pi2.begin(), out.pi2.end());
  std::sort(out.two_pi3.begin(), out.two_pi3.end());
  std::sort(out.pi.begin(), out.pi.end());
  std::sort(out.pi_prime.begin(), out.pi_prime.end());
  return out;
}

PairSets pair_sets_from_square(const RootSystem& rs, RootIndex a, RootIndex b) {
  const MaximalSquare sq = rooted_square(rs, a, b);
  const RootIndex b1 = sq.member(1);
  PairSets out;
  for (int i : sq.labels()) {
    if (std::abs(i) == 1) continue;
    const RootIndex bi = sq.member(i);
    if (i > 0) out.pi2.push_back(unordered(bi, sq.member(-i)));
    out.two_pi3.push_back(unordered(rs.difference(b1, bi), bi));
    out.pi.emplace_back(rs.negate(bi), bi);
    out.pi_prime.emplace_back(rs.difference(bi, b1), rs.difference(b1, bi));
  }
  std::sort(out.pi2.begin(), out.pi2.end());
  std::sort(out.two_pi3.begin(), out.two_pi3.end());
  std::sort(out.pi.begin(), out.pi.end());
  std::sort(out.pi_prime.begin(), out.pi_prime.end());
  return out;
}

PairSets pair_sets(const RootSystem& rs, RootIndex a, RootIndex b) {
  PairSets direct = pair_sets_direct(rs, a, b);
  if (direct != pair_sets_from_square(rs, a, b))
    throw std::logic_error("pair sets of " + format_coeffs(rs.coeffs(a)) + ", " + format_coeffs(rs.coeffs(b)) +
                           " disagree between scan and square construction");
  return direct;
}

RootPair conjugate_pair(const RootSystem& rs, RootIndex a, RootIndex b, RootPair gd) {
  require_orthogonal(rs, a, b);
  auto [g, d] = gd;
  if (rs.sum(g, d) != a || rs.inner(g, b) == 0) throw InvalidPair("pair is not in S_2pi/3");
  if (rs.inner(g, b) != 1) std::swap(g, d);
  const RootIndex g2 = rs.sum(d, b), d2 = rs.difference(g, b);
  if (g2 == kNoRoot || d2 == kNoRoot) throw std::logic_error("conjugate pair is not made of roots");
  return unordered(g2, d2);
}

SignColumn sign_column(const RootSystem& rs, const SignTable& signs, const MaximalSquare& sq, int j) {
  if (!sq.valid_label(j)) throw IndexOutOfRange("square label " + std::to_string(j) + " out of range");
  SignColumn c;
  c.base = j;
  for (int i : sq.labels()) {
    if (i == j || i == -j) {
      c.entries.push_back(1);
    } else {
      c.entries.push_back(-signs(sq.member(j), rs.negate(sq.member(i))) *
                          signs(sq.member(-j), rs.negate(sq.member(-i))));
    }
  }
  return c;
}

bool is_d4_extension(const RootSystem& rs, RootIndex a, RootIndex b, RootIndex c, RootIndex d) {
  return rs.inner(d, a) == 0 && rs.inner(d, c) == 0 && rs.inner(d, b) == -1;
}

RootIndex extend_a3_to_d4(const RootSystem& rs, RootIndex a, RootIndex b, RootIndex c) {
  if (rs.inner(a, b) != -1 || rs.inner(b, c) != -1 || rs.inner(a, c) != 0)
    throw NotAnA3Triple("roots do not form an A3 chain");
  for (RootIndex d = 0; d < rs.size(); ++d)
    if (is_d4_extension(rs, a, b, c, d)) return d;
  throw std::logic_error("A3 chain has no D4 extension");
}

}  // namespace adjeq
