#include "adjeq/equations.hpp"

#include <algorithm>

#include "adjeq/errors.hpp"

namespace adjeq {

namespace {

void require_orthogonal(const RootSystem& rs, RootIndex a, RootIndex b) {
  if (a < 0 || b < 0 || a >= rs.size() || b >= rs.size()) throw InvalidRoot("root index out of range");
  if (rs.inner(a, b) != 0) throw InvalidPair("roots are not orthogonal");
}

// -(sum_s <x,alpha_s> vh_s)(sum_t <y,alpha_t> vh_t), expanded.
void add_zero_block(const RootSystem& rs, FormBuilder& fb, RootIndex x, RootIndex y) {
  for (int s = 1; s <= rs.rank(); ++s) {
    const int ps = rs.pairing(x, s);
    if (ps == 0) continue;
    for (int t = 1; t <= rs.rank(); ++t)
      if (const int pt = rs.pairing(y, t); pt != 0) fb.add(rs.zero_weight(s), rs.zero_weight(t), -ps * pt);
  }
}

// -v_x * sum_s <y,alpha_s> vh_s.
void add_root_times_zero(const RootSystem& rs, FormBuilder& fb, RootIndex x, RootIndex y) {
  for (int s = 1; s <= rs.rank(); ++s)
    if (const int p = rs.pairing(y, s); p != 0) fb.add(rs.root_weight(x), rs.zero_weight(s), -p);
}

QuadraticForm make_form(const RootSystem& rs, FormKind kind, RootIndex a, RootIndex b, const FormBuilder& fb) {
  QuadraticForm f;
  f.system = rs.id();
  f.kind = kind;
  f.alpha = a;
  f.beta = b;
  f.monomials = fb.build();
  return f;
}

QuadraticForm checked_2pi3(const RootSystem& rs, const SignTable& signs, const MaximalSquare& rooted) {
  QuadraticForm sq = eq_2pi3_square(rs, signs, rooted);
  if (!sq.same_polynomial(eq_2pi3_direct(rs, signs, rooted.member(1), rooted.member(-1))))
    throw std::logic_error("2pi/3 form disagrees between its two constructions");
  return sq;
}

QuadraticForm checked_pi(const RootSystem& rs, const MaximalSquare& rooted) {
  QuadraticForm sq = eq_pi_square(rs, rooted);
  const QuadraticForm direct = eq_pi_direct(rs, rooted.member(1), rooted.member(-1));
  if (!sq.same_polynomial(direct)) throw std::logic_error("pi form disagrees between its two constructions");
  if (sq.beta < sq.alpha) std::swap(sq.alpha, sq.beta);
  return sq;
}

}  // namespace

std::string_view to_string(FormKind k) {
  switch (k) {
    case FormKind::Pi2: return "pi/2";
    case FormKind::TwoPi3: return "2pi/3";
    case FormKind::Pi: return "pi";
  }
  return "?";
}

FormKind parse_form_kind(std::string_view text) {
  if (text == "pi/2" || text == "pi2") return FormKind::Pi2;
  if (text == "2pi/3" || text == "2pi3") return FormKind::TwoPi3;
  if (text == "pi") return FormKind::Pi;
  throw ParseError("unknown form kind '" + std::string(text) + "'");
}

int QuadraticForm::coefficient(Weight a, Weight b) const {
  if (b < a) std::swap(a, b);
  for (const auto& m : monomials)
    if (m.a == a && m.b == b) return m.coeff;
  return 0;
}

QuadraticForm QuadraticForm::scaled(int factor) const {
  QuadraticForm out = *this;
  if (factor == 0) out.monomials.clear();
  for (auto& m : out.monomials) m.coeff *= factor;
  return out;
}

void FormBuilder::add(Weight a, Weight b, int coeff) {
  if (b < a) std::swap(a, b);
  acc_[{a.pos, b.pos}] += coeff;
}

std::vector<FormMonomial> FormBuilder::build() const {
  std::vector<FormMonomial> out;
  for (const auto& [key, c] : acc_)
    if (c != 0) out.push_back({Weight{key.first}, Weight{key.second}, c});
  return out;
}

QuadraticForm eq_pi2(const RootSystem& rs, const SignTable& signs, const MaximalSquare& sq) {
  FormBuilder fb;
  const RootIndex b1 = sq.member(1), bm1 = sq.member(-1);
  fb.add(rs.root_weight(b1), rs.root_weight(bm1), 1);
  for (int i = 2; i <= sq.k(); ++i) {
    const RootIndex bi = sq.member(i), bmi = sq.member(-i);
    const int c = -signs(b1, rs.negate(bi)) * signs(bm1, rs.negate(bmi));
    fb.add(rs.root_weight(bi), rs.root_weight(bmi), c);
  }
  QuadraticForm f = make_form(rs, FormKind::Pi2, kNoRoot, kNoRoot, fb);
  f.sigma = sq.sigma();
  return f;
}

QuadraticForm pi2_for_pair(const RootSystem& rs, const SignTable& signs, RootIndex a, RootIndex b) {
  require_orthogonal(rs, a, b);
  const QuadraticForm f = eq_pi2(rs, signs, square_of_pair(rs, a, b));
  return f.scaled(f.coefficient(rs.root_weight(a), rs.root_weight(b)));
}

QuadraticForm pi2_direct(const RootSystem& rs, const SignTable& signs, RootIndex a, RootIndex b) {
  require_orthogonal(rs, a, b);
  FormBuilder fb;
  fb.add(rs.root_weight(a), rs.root_weight(b), 1);
  for (RootIndex g = 0; g < rs.size(); ++g) {
    if (g == a || g == b) continue;
    // d = a + b - g; for g != a, b this requires 2(g,a) = 1.
    const RootIndex t = rs.difference(a, g);
    if (t == kNoRoot) continue;
    const RootIndex d = rs.sum(t, b);
    if (d == kNoRoot || d < g) continue;
    fb.add(rs.root_weight(g), rs.root_weight(d), -signs(a, rs.negate(g)) * signs(b, rs.negate(d)));
  }
  QuadraticForm f = make_form(rs, FormKind::Pi2, a, b, fb);
  f.sigma = square_of_pair(rs, a, b).sigma();
  return f;
}

QuadraticForm eq_2pi3_square(const RootSystem& rs, const SignTable& signs, const MaximalSquare& rooted) {
  const RootIndex b1 = rooted.member(1), bm1 = rooted.member(-1);
  FormBuilder fb;
  for (int i : rooted.labels()) {
    if (std::abs(i) == 1) continue;
    const RootIndex bi = rooted.member(i);
    fb.add(rs.root_weight(rs.difference(b1, bi)), rs.root_weight(bi), signs(b1, rs.negate(bi)));
  }
  add_root_times_zero(rs, fb, b1, bm1);
  return make_form(rs, FormKind::TwoPi3, b1, bm1, fb);
}

QuadraticForm eq_2pi3_direct(const RootSystem& rs, const SignTable& signs, RootIndex a, RootIndex b) {
  require_orthogonal(rs, a, b);
  FormBuilder fb;
  for (RootIndex g = 0; g < rs.size(); ++g) {
    if (rs.inner(g, b) != 1) continue;
    const RootIndex d = rs.difference(a, g);
    if (d == kNoRoot) continue;
    fb.add(rs.root_weight(g), rs.root_weight(d), -signs(g, d));
  }
  add_root_times_zero(rs, fb, a, b);
  return make_form(rs, FormKind::TwoPi3, a, b, fb);
}

QuadraticForm eq_2pi3(const RootSystem& rs, const SignTable& signs, RootIndex a, RootIndex b) {
  require_orthogonal(rs, a, b);
  return checked_2pi3(rs, signs, rooted_square(rs, a, b));
}

QuadraticForm eq_pi_square(const RootSystem& rs, const MaximalSquare& rooted) {
  const RootIndex b1 = rooted.member(1), bm1 = rooted.member(-1);
  FormBuilder fb;
  for (int i : rooted.labels()) {
    if (std::abs(i) == 1) continue;
    const RootIndex bi = rooted.member(i);
    fb.add(rs.root_weight(rs.difference(b1, bi)), rs.root_weight(rs.difference(bi, b1)), 1);
    fb.add(rs.root_weight(rs.negate(bi)), rs.root_weight(bi), -1);
  }
  add_zero_block(rs, fb, b1, bm1);
  return make_form(rs, FormKind::Pi, b1, bm1, fb);
}

QuadraticForm eq_pi_direct(const RootSystem& rs, RootIndex a, RootIndex b) {
  require_orthogonal(rs, a, b);
  FormBuilder fb;
  for (RootIndex g = 0; g < rs.size(); ++g) {
    const RootIndex ng = rs.negate(g);
    if (rs.inner(g, a) != -1) continue;
    if (rs.inner(g, b) == -1) fb.add(rs.root_weight(g), rs.root_weight(ng), -1);   // S_pi
    if (rs.inner(ng, b) == -1) fb.add(rs.root_weight(g), rs.root_weight(ng), 1);   // S'_pi
  }
  add_zero_block(rs, fb, a, b);
  return make_form(rs, FormKind::Pi, a, b, fb);
}

QuadraticForm eq_pi(const RootSystem& rs, RootIndex a, RootIndex b) {
  require_orthogonal(rs, a, b);
  return checked_pi(rs, rooted_square(rs, a, b));
}

EquationSet::EquationSet(SystemId system, std::vector<QuadraticForm> forms)
    : system_(system), forms_(std::move(forms)) {
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    const auto& f = forms_[i];
    if (f.system != system_) throw Mismatch("form of another system in equation set");
    switch (f.kind) {
      case FormKind::Pi2: pi2_.emplace(f.sigma, i); break;
      case FormKind::TwoPi3: two_pi3_.emplace(RootPair{f.alpha, f.beta}, i); break;
      case FormKind::Pi: pi_.emplace(unordered(f.alpha, f.beta), i); break;
    }
  }
}

EquationCounts EquationSet::counts() const { return {pi2_.size(), two_pi3_.size(), pi_.size()}; }

const QuadraticForm* EquationSet::find_pi2(std::span<const int> sigma) const {
  auto it = pi2_.find(Coeffs(sigma.begin(), sigma.end()));
  return it == pi2_.end() ? nullptr : &forms_[it->second];
}

const QuadraticForm* EquationSet::find_2pi3(RootIndex a, RootIndex b) const {
  auto it = two_pi3_.find({a, b});
  return it == two_pi3_.end() ? nullptr : &forms_[it->second];
}

const QuadraticForm* EquationSet::find_pi(RootIndex a, RootIndex b) const {
  auto it = pi_.find(unordered(a, b));
  return it == pi_.end() ? nullptr : &forms_[it->second];
}

EquationSet generate_all_equations(const RootSystem& rs, const SignTable& signs, const SquareCatalog& squares,
                                   KindSelection kinds) {
  std::vector<QuadraticForm> forms;
  if (kinds.pi2)
    for (const auto& sq : squares.squares()) forms.push_back(eq_pi2(rs, signs, sq));
  if (kinds.two_pi3) {
    for (RootIndex a = 0; a < rs.size(); ++a)
      for (RootIndex b = 0; b < rs.size(); ++b)
        if (rs.inner(a, b) == 0) forms.push_back(checked_2pi3(rs, signs, reroot(squares.of_pair(rs, a, b), a, b)));
  }
  if (kinds.pi) {
    for (RootIndex a = 0; a < rs.size(); ++a)
      for (RootIndex b = a + 1; b < rs.size(); ++b)
        if (rs.inner(a, b) == 0) forms.push_back(checked_pi(rs, reroot(squares.of_pair(rs, a, b), a, b)));
  }
  return EquationSet(rs.id(), std::move(forms));
}

EquationSet generate_all_equations(const RootSystem& rs, const SignTable& signs, KindSelection kinds) {
  return generate_all_equations(rs, signs, SquareCatalog(rs), kinds);
}

}  // namespace adjeq
