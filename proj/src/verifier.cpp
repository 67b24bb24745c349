#include "adjeq/verifier.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "adjeq/errors.hpp"

namespace adjeq {

namespace {

using Poly = Polynomial;

const PolynomialRing kPoly;

Poly constant(long long c) { return Poly::constant(c); }

std::string root_text(const RootSystem& rs, RootIndex r) { return format_coeffs(rs.coeffs(r)); }

std::string square_text(const RootSystem& rs, const MaximalSquare& sq) {
  return "sigma=" + format_coeffs(sq.sigma()) + " b1=" + root_text(rs, sq.member(1)) +
         " b-1=" + root_text(rs, sq.member(-1));
}

void require_orthogonal_target(const RootSystem& rs, RootIndex a, RootIndex b) {
  if (a == kNoRoot || b == kNoRoot) throw std::logic_error("ledger target subscript is not a root");
  if (rs.inner(a, b) != 0) throw std::logic_error("ledger target subscripts are not orthogonal");
}

SubCase sub_case(const RootSystem& rs, const MaximalSquare& rooted, AngleClass cls, FormKind kind, RootIndex rho) {
  if (kind == FormKind::Pi2) return SubCase::Any;
  if (cls.kind == AngleCase::TwoThirds)
    return rs.inner(rooted.member(1), rho) == 0 ? SubCase::InnerZero : SubCase::InnerMinusOne;
  if (cls.index == 1) return SubCase::JPlus;
  if (cls.index == -1) return SubCase::JMinus;
  return SubCase::JOther;
}

}  // namespace

std::string_view to_string(SubCase s) {
  switch (s) {
    case SubCase::Any: return "any";
    case SubCase::JOther: return "j!=+-1";
    case SubCase::JPlus: return "j=1";
    case SubCase::JMinus: return "j=-1";
    case SubCase::InnerMinusOne: return "(b1,rho)=-1/2";
    case SubCase::InnerZero: return "(b1,rho)=0";
  }
  return "?";
}

const std::vector<LedgerEntry>& case_ledger() {
  using A = AngleCase;
  using K = FormKind;
  using S = SubCase;
  static const std::vector<LedgerEntry> entries = {
      {A::InSquare, K::Pi2, S::Any, "-xi f2pi3(b-1,-b1) - xi^2 fpi2(b-1,-b1), square re-rooted at rho"},
      {A::InSquare, K::TwoPi3, S::JOther, "xi N(b1,-bj) f2pi3(b1-bj, b1-b-j)"},
      {A::InSquare, K::TwoPi3, S::JPlus, "-xi fpi(b1,b-1) + xi^2 f2pi3(-b1,-b-1)"},
      {A::InSquare, K::TwoPi3, S::JMinus, "-2 xi fpi2(b1,-b-1)"},
      {A::InSquare, K::Pi, S::JOther, "xi f2pi3(-bj, b-j)"},
      {A::InSquare, K::Pi, S::JPlus, "-2 xi f2pi3(-b1,-b-1)"},
      {A::InSquare, K::Pi, S::JMinus, "-2 xi f2pi3(-b-1,-b1)"},
      {A::OppositeSquare, K::Pi2, S::Any, "0"},
      {A::OppositeSquare, K::TwoPi3, S::JOther, "0"},
      {A::OppositeSquare, K::TwoPi3, S::JPlus, "0"},
      {A::OppositeSquare, K::TwoPi3, S::JMinus, "2 xi fpi2(b1,b-1)"},
      {A::OppositeSquare, K::Pi, S::JOther, "xi f2pi3(bj,-b-j)"},
      {A::OppositeSquare, K::Pi, S::JPlus, "2 xi f2pi3(b1,-b-1)"},
      {A::OppositeSquare, K::Pi, S::JMinus, "-2 xi f2pi3(b-1,b1)"},
      {A::TwoThirds, K::Pi2, S::Any, "0"},
      {A::TwoThirds, K::TwoPi3, S::InnerMinusOne, "0"},
      {A::TwoThirds, K::TwoPi3, S::InnerZero, "xi fpi2(b1,-rho)"},
      {A::TwoThirds, K::Pi, S::InnerMinusOne, "-xi f2pi3(-rho,b-1)"},
      {A::TwoThirds, K::Pi, S::InnerZero, "-xi f2pi3(-rho,b1)"},
  };
  return entries;
}

const LedgerEntry* ledger_entry_for(const RootSystem& rs, const MaximalSquare& rooted, FormKind kind, RootIndex rho) {
  const AngleClass cls = classify_root_vs_square(rs, rho, rooted);
  if (cls.kind == AngleCase::Perp || cls.kind == AngleCase::Third) return nullptr;
  const SubCase sub = sub_case(rs, rooted, cls, kind, rho);
  for (const auto& e : case_ledger())
    if (e.angle == cls.kind && e.kind == kind && e.sub == sub) return &e;
  throw std::logic_error("ledger has no entry for this configuration");
}

SymbolicContext::SymbolicContext(const RootSystem& rs, const SignTable& signs)
    : rs_(rs), signs_(signs), v_(generic_vector(rs)), xi_(Poly::variable(xi_variable(1))) {}

AdjointVector<PolynomialRing> SymbolicContext::moved(RootIndex rho) const {
  return apply_elementary(rs_, signs_, kPoly, Elementary<PolynomialRing>{rho, xi_}, v_);
}

CaseCheck verify_case_identity(const SymbolicContext& ctx, const MaximalSquare& rooted, FormKind kind, RootIndex rho) {
  const RootSystem& rs = ctx.roots();
  const SignTable& n = ctx.signs();
  const auto& v = ctx.generic();
  const Poly& xi = ctx.xi();

  CaseCheck out;
  out.entry = ledger_entry_for(rs, rooted, kind, rho);
  if (!out.entry) throw std::invalid_argument("angle pi/2 and pi/3 go through the commutator reduction");
  const AngleClass cls = classify_root_vs_square(rs, rho, rooted);
  out.j = cls.index;

  // The pi/2 identity is stated with rho = beta_1; re-root the square there.
  MaximalSquare sq = rooted;
  if (kind == FormKind::Pi2 && cls.kind == AngleCase::InSquare)
    sq = reroot(rooted, rho, rooted.member(-cls.index));
  const RootIndex b1 = sq.member(1), bm1 = sq.member(-1);
  auto beta = [&](int i) { return sq.member(i); };
  auto neg = [&](RootIndex r) { return rs.negate(r); };

  auto at = [&](const QuadraticForm& f) { return evaluate_form(f, kPoly, v); };
  auto f2pi3 = [&](RootIndex a, RootIndex b) {
    require_orthogonal_target(rs, a, b);
    return at(eq_2pi3(rs, n, a, b));
  };
  auto fpi = [&](RootIndex a, RootIndex b) {
    require_orthogonal_target(rs, a, b);
    return at(eq_pi(rs, a, b));
  };
  auto fpi2 = [&](RootIndex a, RootIndex b) {
    require_orthogonal_target(rs, a, b);
    return at(pi2_for_pair(rs, n, a, b));
  };

  QuadraticForm f;
  switch (kind) {
    case FormKind::Pi2: f = eq_pi2(rs, n, sq); break;
    case FormKind::TwoPi3: f = eq_2pi3_square(rs, n, sq); break;
    case FormKind::Pi: f = eq_pi_square(rs, sq); break;
  }
  const auto w = ctx.moved(rho);
  const Poly delta = evaluate_form(f, kPoly, w) - at(f);

  const int j = out.j;
  Poly target;
  using A = AngleCase;
  using K = FormKind;
  using S = SubCase;
  const LedgerEntry& e = *out.entry;
  if (e.angle == A::InSquare) {
    if (e.kind == K::Pi2) {
      target = -(xi * f2pi3(bm1, neg(b1))) - xi * xi * fpi2(bm1, neg(b1));
    } else if (e.kind == K::TwoPi3) {
      if (e.sub == S::JOther)
        target = constant(n(b1, neg(beta(j)))) * xi * f2pi3(rs.difference(b1, beta(j)), rs.difference(b1, beta(-j)));
      else if (e.sub == S::JPlus)
        target = -(xi * fpi(b1, bm1)) + xi * xi * f2pi3(neg(b1), neg(bm1));
      else
        target = constant(-2) * xi * fpi2(b1, neg(bm1));
    } else {
      if (e.sub == S::JOther) target = xi * f2pi3(neg(beta(j)), beta(-j));
      else if (e.sub == S::JPlus) target = constant(-2) * xi * f2pi3(neg(b1), neg(bm1));
      else target = constant(-2) * xi * f2pi3(neg(bm1), neg(b1));
    }
  } else if (e.angle == A::OppositeSquare) {
    if (e.kind == K::TwoPi3 && e.sub == S::JMinus) {
      target = constant(2) * xi * fpi2(b1, bm1);
    } else if (e.kind == K::Pi) {
      if (e.sub == S::JOther) target = xi * f2pi3(beta(j), neg(beta(-j)));
      else if (e.sub == S::JPlus) target = constant(2) * xi * f2pi3(b1, neg(bm1));
      else target = constant(-2) * xi * f2pi3(bm1, b1);
    }
  } else {
    if (e.kind == K::TwoPi3 && e.sub == S::InnerZero) {
      target = xi * fpi2(b1, neg(rho));
    } else if (e.kind == K::Pi) {
      if (e.sub == S::InnerMinusOne) target = -(xi * f2pi3(neg(rho), bm1));
      else target = -(xi * f2pi3(neg(rho), b1));
    }
  }
  out.residual = delta - target;
  return out;
}

CommutatorCheck verify_commutator_reduction(const SymbolicContext& ctx, const MaximalSquare& sq, RootIndex rho) {
  const RootSystem& rs = ctx.roots();
  const AngleClass cls = classify_root_vs_square(rs, rho, sq);
  CommutatorCheck out;
  out.angle = cls.kind;
  AngleCase want_a, want_b;
  if (cls.kind == AngleCase::Perp) {
    // (rho, beta_j) = 1/2 forces (rho, beta_{-j}) = -1/2.
    for (int j : sq.labels()) {
      if (rs.inner(rho, sq.member(j)) == 1 && rs.inner(rho, sq.member(-j)) == -1) {
        out.a = rs.sum(sq.member(-j), rho);
        out.b = rs.negate(sq.member(-j));
        break;
      }
    }
    want_a = AngleCase::InSquare;
    want_b = AngleCase::OppositeSquare;
    // In D_l a square with three pairs can be orthogonal to rho outright; then
    // split rho through the pi/3 class instead, whose own reduction avoids pi/2.
    if (out.a == kNoRoot) {
      for (RootIndex a = 0; a < rs.size(); ++a) {
        const RootIndex b = rs.difference(rho, a);
        if (b == kNoRoot || classify_root_vs_square(rs, a, sq).kind != AngleCase::Third) continue;
        if (classify_root_vs_square(rs, b, sq).kind != AngleCase::TwoThirds) continue;
        out.a = a;
        out.b = b;
        out.through_third = true;
        want_a = AngleCase::Third;
        want_b = AngleCase::TwoThirds;
        break;
      }
    }
  } else if (cls.kind == AngleCase::Third) {
    for (int i : sq.labels()) {
      if (rs.inner(rho, sq.member(i)) == 1) {
        out.a = rs.difference(rho, sq.member(i));
        out.b = sq.member(i);
        break;
      }
    }
    want_a = AngleCase::TwoThirds;
    want_b = AngleCase::InSquare;
  } else {
    throw std::invalid_argument("commutator reduction applies to angles pi/2 and pi/3 only");
  }
  if (out.a == kNoRoot || out.b == kNoRoot) return out;
  out.class_a = classify_root_vs_square(rs, out.a, sq);
  out.class_b = classify_root_vs_square(rs, out.b, sq);
  out.classes_expected = out.class_a.kind == want_a && out.class_b.kind == want_b;

  const auto expect = ctx.moved(rho);
  for (int eps : {1, -1}) {
    const auto word = commutator_word(kPoly, out.a, ctx.xi(), out.b, constant(eps));
    const auto got = apply_word(rs, ctx.signs(), kPoly, word, ctx.generic());
    if (got.coords == expect.coords) {
      out.eps = eps;
      break;
    }
  }
  return out;
}

void CheckGroup::record(bool ok, const std::string& witness) {
  ++attempted;
  if (ok) ++passed;
  else if (failures.size() < kMaxWitnesses) failures.push_back(witness);
}

bool VerificationReport::ok() const {
  return std::all_of(groups.begin(), groups.end(), [](const CheckGroup& g) { return g.passed == g.attempted; });
}

long long VerificationReport::attempted() const {
  long long n = 0;
  for (const auto& g : groups) n += g.attempted;
  return n;
}

long long VerificationReport::passed() const {
  long long n = 0;
  for (const auto& g : groups) n += g.passed;
  return n;
}

namespace {

constexpr int kExhaustiveRoots = 72;   // D5, D6, E6 are scanned in full
constexpr int kSampledTriples = 100000;
constexpr int kSampledPairs = 10000;
constexpr int kRedraws = 1000;

bool exhaustive(const RootSystem& rs) { return rs.size() <= kExhaustiveRoots; }

std::pair<RootIndex, RootIndex> random_orthogonal(const RootSystem& rs, Sampler& s) {
  while (true) {
    const RootIndex a = s.below(rs.size()), b = s.below(rs.size());
    if (rs.inner(a, b) == 0) return {a, b};
  }
}

/// Calls f(a, b) on every ordered orthogonal pair, or on `count` random ones.
template <class F>
void each_orthogonal(const RootSystem& rs, Sampler& s, int count, F f) {
  if (exhaustive(rs)) {
    for (RootIndex a = 0; a < rs.size(); ++a)
      for (RootIndex b = 0; b < rs.size(); ++b)
        if (rs.inner(a, b) == 0) f(a, b);
  } else {
    for (int t = 0; t < count; ++t) {
      const auto [a, b] = random_orthogonal(rs, s);
      f(a, b);
    }
  }
}

/// Lie bracket on e_a (root positions) and h_s (positions |Phi| + s - 1).
std::vector<std::pair<int, int>> bracket(const RootSystem& rs, const SignTable& n, int x, int y) {
  const int roots = rs.size();
  std::vector<std::pair<int, int>> out;
  if (x < roots && y < roots) {
    if (rs.negate(x) == y) {
      for (int s = 1; s <= rs.rank(); ++s)
        if (rs.coeff(x, s) != 0) out.push_back({roots + s - 1, rs.coeff(x, s)});
    } else if (const RootIndex z = rs.sum(x, y); z != kNoRoot) {
      out.push_back({z, n(x, y)});
    }
  } else if (x >= roots && y < roots) {
    if (const int p = rs.pairing(y, x - roots + 1); p != 0) out.push_back({y, p});
  } else if (x < roots && y >= roots) {
    if (const int p = rs.pairing(x, y - roots + 1); p != 0) out.push_back({x, -p});
  }
  return out;
}

bool jacobi_holds(const RootSystem& rs, const SignTable& n, int x, int y, int z) {
  std::map<int, long long> acc;
  auto nest = [&](int a, int b, int c) {
    for (auto [p, k] : bracket(rs, n, b, c))
      for (auto [q, l] : bracket(rs, n, a, p)) acc[q] += static_cast<long long>(k) * l;
  };
  nest(x, y, z);
  nest(y, z, x);
  nest(z, x, y);
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

void suite_jacobi(const RootSystem& rs, const SignTable& n, Sampler& s, VerificationReport& rep) {
  CheckGroup anti{"antisymmetry"}, negation{"negation"}, support{"support"}, triangle{"triangle"},
      quad{"quadruple"}, cocycle{"cocycle"}, jacobi{"jacobi"};
  for (RootIndex a = 0; a < rs.size(); ++a)
    for (RootIndex b = 0; b < rs.size(); ++b) {
      const std::string w = root_text(rs, a) + " " + root_text(rs, b);
      support.record((n(a, b) != 0) == (rs.sum(a, b) != kNoRoot), w);
      anti.record(n(a, b) == -n(b, a), w);
      negation.record(n(rs.negate(a), rs.negate(b)) == -n(a, b), w);
      if (const RootIndex ab = rs.sum(a, b); ab != kNoRoot) {
        const RootIndex c = rs.negate(ab);
        triangle.record(n(a, b) == n(b, c) && n(b, c) == n(c, a), w);
      }
    }

  auto quadruple_and_cocycle = [&](RootIndex a, RootIndex b, RootIndex c) {
    const std::string w = root_text(rs, a) + " " + root_text(rs, b) + " " + root_text(rs, c);
    const RootIndex ab = rs.sum(a, b);
    if (ab == kNoRoot) return;
    if (const RootIndex abc = rs.sum(ab, c); abc != kNoRoot) {
      const RootIndex d = rs.negate(abc);
      bool opposite = false;
      const RootIndex all[] = {a, b, c, d};
      for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k) opposite |= rs.negate(all[i]) == all[k];
      if (!opposite) quad.record(n(a, b) * n(c, d) + n(b, c) * n(a, d) + n(c, a) * n(b, d) == 0, w);
      const RootIndex ca = rs.sum(c, a);
      if (ca != kNoRoot && rs.sum(b, c) == kNoRoot && rs.negate(b) != c)
        cocycle.record(n(a, b) * n(c, ab) == n(c, a) * n(ca, b), w);
    }
  };
  const int dim = rs.dimension();
  if (exhaustive(rs)) {
    for (RootIndex a = 0; a < rs.size(); ++a)
      for (RootIndex b = 0; b < rs.size(); ++b)
        for (RootIndex c = 0; c < rs.size(); ++c) quadruple_and_cocycle(a, b, c);
    for (int x = 0; x < dim; ++x)
      for (int y = x + 1; y < dim; ++y)
        for (int z = y + 1; z < dim; ++z) jacobi.record(jacobi_holds(rs, n, x, y, z), std::to_string(x) + "," +
                                                                                         std::to_string(y) + "," +
                                                                                         std::to_string(z));
  } else {
    // Sample a, b with a + b a root, then c with a + b + c a root, so that most
    // draws land inside the identities' hypotheses.
    for (int t = 0; t < kSampledTriples; ++t) {
      RootIndex a, b, c;
      do {
        a = s.below(rs.size());
        b = s.below(rs.size());
      } while (rs.sum(a, b) == kNoRoot);
      do c = s.below(rs.size());
      while (rs.sum(rs.sum(a, b), c) == kNoRoot);
      quadruple_and_cocycle(a, b, c);
    }
    for (int t = 0; t < kSampledTriples; ++t) {
      const int x = s.below(dim), y = s.below(dim), z = s.below(dim);
      jacobi.record(jacobi_holds(rs, n, x, y, z),
                    std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
    }
  }
  for (auto* g : {&support, &anti, &negation, &triangle, &quad, &cocycle, &jacobi}) rep.groups.push_back(*g);
}

void suite_combinatorics(const RootSystem& rs, const SignTable& n, const SquareCatalog& cat, Sampler& s,
                         VerificationReport& rep) {
  CheckGroup roots{"root_count"}, census{"square_census"}, definition{"square_definition"},
      sizes{"pair_set_sizes"}, agree{"pair_sets_agree"}, classes{"classification"}, columns{"sign_columns"},
      a3{"a3_in_d4"}, conj{"conjugate_pairs"};

  roots.record(rs.size() == rs.id().dimension() - rs.rank(), rs.id().name());
  long long pairs = 0;
  for (RootIndex a = 0; a < rs.size(); ++a)
    for (RootIndex b = a + 1; b < rs.size(); ++b) pairs += rs.inner(a, b) == 0;
  long long covered = 0;
  for (const auto& sq : cat.squares()) {
    covered += sq.k();
    definition.record(is_maximal_square(rs, sq), format_coeffs(sq.sigma()));
  }
  census.record(covered == pairs, std::to_string(cat.size()) + " squares cover " + std::to_string(covered) +
                                      " of " + std::to_string(pairs) + " orthogonal pairs");

  each_orthogonal(rs, s, kSampledPairs, [&](RootIndex a, RootIndex b) {
    const std::string w = root_text(rs, a) + " " + root_text(rs, b);
    const PairSets direct = pair_sets_direct(rs, a, b);
    agree.record(direct == pair_sets_from_square(rs, a, b), w);
    const std::size_t k = static_cast<std::size_t>(cat.of_pair(rs, a, b).k());
    const std::size_t want = 2 * (k - 1);
    sizes.record(direct.pi2.size() == k - 1 && direct.two_pi3.size() == want && direct.pi.size() == want &&
                     direct.pi_prime.size() == want,
                 w);
    std::set<std::set<RootPair>> blocks;
    bool involutive = true;
    for (RootPair p : direct.two_pi3) {
      const RootPair q = conjugate_pair(rs, a, b, p);
      involutive &= conjugate_pair(rs, a, b, q) == p && q != p &&
                    std::find(direct.two_pi3.begin(), direct.two_pi3.end(), q) != direct.two_pi3.end();
      blocks.insert({p, q});
    }
    conj.record(involutive && blocks.size() == k - 1, w);
  });

  auto classify_one = [&](RootIndex r, const MaximalSquare& sq) {
    const unsigned mask = angle_case_mask(rs, r, sq);
    bool ok = std::popcount(mask) == 1;
    if (ok) {
      const AngleClass c = classify_root_vs_square(rs, r, sq);
      ok = inner_with(rs, r, sq.sigma()) == expected_sigma_inner(c.kind);
    }
    classes.record(ok, root_text(rs, r) + " vs " + format_coeffs(sq.sigma()));
  };
  auto columns_one = [&](const MaximalSquare& sq) {
    bool ok = true;
    for (int j : sq.labels()) {
      const SignColumn cj = sign_column(rs, n, sq, j);
      for (int h : sq.labels()) {
        const SignColumn ch = sign_column(rs, n, sq, h);
        for (int i : sq.labels()) ok &= ch.at(i) == ch.at(j) * cj.at(i);
      }
    }
    columns.record(ok, format_coeffs(sq.sigma()));
  };
  if (exhaustive(rs)) {
    for (const auto& sq : cat.squares()) {
      for (RootIndex r = 0; r < rs.size(); ++r) classify_one(r, sq);
      columns_one(sq);
    }
  } else {
    for (int t = 0; t < kSampledPairs; ++t)
      classify_one(s.below(rs.size()), cat.squares()[s.below(static_cast<int>(cat.size()))]);
    for (int t = 0; t < 1000; ++t) columns_one(cat.squares()[s.below(static_cast<int>(cat.size()))]);
  }

  auto a3_one = [&](RootIndex a, RootIndex b, RootIndex c) {
    const RootIndex d = extend_a3_to_d4(rs, a, b, c);
    a3.record(is_d4_extension(rs, a, b, c, d), root_text(rs, a) + " " + root_text(rs, b) + " " + root_text(rs, c));
  };
  if (exhaustive(rs)) {
    for (RootIndex a = 0; a < rs.size(); ++a)
      for (RootIndex b = 0; b < rs.size(); ++b) {
        if (rs.inner(a, b) != -1) continue;
        for (RootIndex c = 0; c < rs.size(); ++c)
          if (rs.inner(b, c) == -1 && rs.inner(a, c) == 0) a3_one(a, b, c);
      }
  } else {
    for (int t = 0; t < kSampledPairs; ++t) {
      RootIndex a, b, c;
      do {
        a = s.below(rs.size());
        b = s.below(rs.size());
      } while (rs.inner(a, b) != -1);
      do c = s.below(rs.size());
      while (rs.inner(b, c) != -1 || rs.inner(a, c) != 0);
      a3_one(a, b, c);
    }
  }
  for (auto* g : {&roots, &census, &definition, &sizes, &agree, &conj, &classes, &columns, &a3})
    rep.groups.push_back(*g);
}

/// Random square of the catalog, rooted at a random orientation of a random pair.
MaximalSquare random_rooted(const SquareCatalog& cat, Sampler& s) {
  const MaximalSquare& sq = cat.squares()[s.below(static_cast<int>(cat.size()))];
  int i = 1 + s.below(sq.k());
  if (s.below(2)) i = -i;
  return reroot(sq, sq.member(i), sq.member(-i));
}

std::optional<RootIndex> pick_rho(const RootSystem& rs, const MaximalSquare& sq, const LedgerEntry& e, Sampler& s) {
  auto label = [&]() -> std::optional<int> {
    switch (e.sub) {
      case SubCase::JPlus: return 1;
      case SubCase::JMinus: return -1;
      case SubCase::JOther: {
        int i = 2 + s.below(sq.k() - 1);
        return s.below(2) ? -i : i;
      }
      default: {
        int i = 1 + s.below(sq.k());
        return s.below(2) ? -i : i;
      }
    }
  };
  if (e.angle == AngleCase::InSquare) return sq.member(*label());
  if (e.angle == AngleCase::OppositeSquare) return rs.negate(sq.member(*label()));
  std::vector<RootIndex> pool;
  for (RootIndex r = 0; r < rs.size(); ++r) {
    if (classify_root_vs_square(rs, r, sq).kind != AngleCase::TwoThirds) continue;
    const int b1 = rs.inner(sq.member(1), r);
    if (e.sub == SubCase::InnerZero && b1 != 0) continue;
    if (e.sub == SubCase::InnerMinusOne && b1 != -1) continue;
    pool.push_back(r);
  }
  if (pool.empty()) return std::nullopt;
  return pool[s.below(static_cast<int>(pool.size()))];
}

std::string entry_name(const LedgerEntry& e) {
  return "case " + std::string(to_string(e.angle)) + " / " + std::string(to_string(e.kind)) + " / " +
         std::string(to_string(e.sub));
}

void suite_cases(const RootSystem& rs, const SignTable& n, const SquareCatalog& cat, Sampler& s, int samples,
                 VerificationReport& rep) {
  const SymbolicContext ctx(rs, n);
  for (const auto& e : case_ledger()) {
    CheckGroup g{entry_name(e)};
    for (int t = 0; t < samples; ++t) {
      // Some squares of D_l have no root in a given 2pi/3 sub-case; redraw.
      MaximalSquare sq;
      std::optional<RootIndex> rho;
      for (int tries = 0; tries < kRedraws && !rho; ++tries) {
        sq = random_rooted(cat, s);
        rho = pick_rho(rs, sq, e, s);
      }
      if (!rho) {
        g.record(false, "no configuration of this sub-case found");
        continue;
      }
      const std::string w = square_text(rs, sq) + " rho=" + root_text(rs, *rho);
      try {
        const CaseCheck c = verify_case_identity(ctx, sq, e.kind, *rho);
        if (c.entry != &e) g.record(false, w + ": dispatched to " + entry_name(*c.entry));
        else g.record(c.ok(), w + " residual " + c.residual.to_string());
      } catch (const std::logic_error& ex) {
        g.record(false, w + ": " + ex.what());
      }
    }
    rep.groups.push_back(std::move(g));
  }
}

void suite_commutator(const RootSystem& rs, const SignTable& n, const SquareCatalog& cat, Sampler& s, int samples,
                      VerificationReport& rep) {
  const SymbolicContext ctx(rs, n);
  for (AngleCase want : {AngleCase::Perp, AngleCase::Third}) {
    CheckGroup g{"commutator " + std::string(to_string(want))};
    CheckGroup via{"commutator pi/2 split through pi/3"};
    for (int t = 0; t < samples; ++t) {
      MaximalSquare sq;
      std::vector<RootIndex> pool;
      for (int tries = 0; tries < kRedraws && pool.empty(); ++tries) {
        sq = random_rooted(cat, s);
        for (RootIndex r = 0; r < rs.size(); ++r)
          if (classify_root_vs_square(rs, r, sq).kind == want) pool.push_back(r);
      }
      if (pool.empty()) {
        g.record(false, "no root at this angle to any sampled square");
        continue;
      }
      const RootIndex rho = pool[s.below(static_cast<int>(pool.size()))];
      const CommutatorCheck c = verify_commutator_reduction(ctx, sq, rho);
      const std::string witness = square_text(rs, sq) + " rho=" + root_text(rs, rho);
      g.record(c.ok(), witness);
      if (c.through_third) via.record(c.ok(), witness);
    }
    rep.groups.push_back(std::move(g));
    if (via.attempted > 0) rep.groups.push_back(std::move(via));
  }
}

template <CommutativeRing R>
void words_over(const RootSystem& rs, const SignTable& n, const EquationSet& eqs, const R& ring, Sampler& s,
                int samples, VerificationReport& rep) {
  CheckGroup g{"words " + ring.name()};
  for (int t = 0; t < samples; ++t) {
    const RootIndex rho = s.below(rs.size());
    const Word<R> word = random_word(rs, ring, s);
    const OrbitCheck c = verify_orbit_membership(rs, n, eqs, word, rho, ring);
    std::string w;
    if (!c.ok) {
      w = "rho=" + root_text(rs, rho) + " word=";
      for (const auto& x : word) w += "x" + root_text(rs, x.rho) + "(" + ring.to_string(x.xi) + ")";
      w += " form #" + std::to_string(*c.first_nonzero) + " = " + c.first_value;
    }
    g.record(c.ok, w);
  }
  rep.groups.push_back(std::move(g));
}

void suite_words(const RootSystem& rs, const SignTable& n, const SquareCatalog& cat, Sampler& s,
                 const SuiteConfig& config, VerificationReport& rep) {
  const EquationSet eqs = generate_all_equations(rs, n, cat);
  CheckGroup base{"root vectors"};
  const IntegerRing z;
  for (RootIndex r = 0; r < rs.size(); ++r)
    base.record(check_vector(eqs, z, basis_vector(rs, rs.root_weight(r), z)).ok, root_text(rs, r));
  rep.groups.push_back(std::move(base));

  CheckGroup control{"negative control e^0_1"};
  const OrbitCheck c = check_vector(eqs, z, basis_vector(rs, rs.zero_weight(1), z));
  control.record(!c.ok, "every form vanishes on the zero-weight vector");
  rep.groups.push_back(std::move(control));

  for (const auto& name : config.rings)
    std::visit([&](const auto& ring) { words_over(rs, n, eqs, ring, s, config.samples, rep); }, parse_ring(name));
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& config) {
  static const std::vector<std::string> suites = {"jacobi", "combinatorics", "cases", "commutator", "words", "all"};
  if (std::find(suites.begin(), suites.end(), config.suite) == suites.end())
    throw std::invalid_argument("unknown suite '" + config.suite + "'");
  if (config.samples < 0) throw std::invalid_argument("samples must be non-negative");
  for (const auto& r : config.rings) (void)parse_ring(r);

  const RootSystem rs(config.system);
  const SignTable n(rs);
  const SquareCatalog cat(rs);
  Sampler s(config.seed);
  VerificationReport rep;
  rep.config = config;
  const bool all = config.suite == "all";
  if (all || config.suite == "jacobi") suite_jacobi(rs, n, s, rep);
  if (all || config.suite == "combinatorics") suite_combinatorics(rs, n, cat, s, rep);
  if (all || config.suite == "cases") suite_cases(rs, n, cat, s, config.samples, rep);
  if (all || config.suite == "commutator") suite_commutator(rs, n, cat, s, config.samples, rep);
  if (all || config.suite == "words") suite_words(rs, n, cat, s, config, rep);
  return rep;
}

}  // namespace adjeq
