#include "adjeq/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "adjeq/errors.hpp"

namespace adjeq {

namespace {

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  std::string_view body = text.substr(i, j - i);
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("not an integer: '" + std::string(text) + "'");
  BigInt v{std::string(body)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

IntegerRing::Element IntegerRing::parse(std::string_view text) const { return parse_bigint(text); }

ModularRing::ModularRing(std::uint64_t modulus) : m_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
}

ModularRing::Element ModularRing::reduce(const BigInt& n) const {
  BigInt r = n % m_;
  if (r < 0) r += m_;
  return static_cast<Element>(r);
}

ModularRing::Element ModularRing::parse(std::string_view text) const { return reduce(parse_bigint(text)); }

std::string variable_name(VarId v) {
  if (v >= kXiBase) return "xi" + std::to_string(v - kXiBase + 1);
  return "v" + std::to_string(v);
}

Monomial Monomial::variable(VarId v) {
  Monomial m;
  m.vars_[0] = v;
  m.degree_ = 1;
  return m;
}

int Monomial::exponent(VarId v) const {
  auto vs = variables();
  return static_cast<int>(std::count(vs.begin(), vs.end(), v));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (degree_ + other.degree_ > kCapacity) throw std::overflow_error("monomial degree exceeds capacity");
  Monomial out;
  std::merge(vars_.begin(), vars_.begin() + degree_, other.vars_.begin(), other.vars_.begin() + other.degree_,
             out.vars_.begin());
  out.degree_ = static_cast<std::uint8_t>(degree_ + other.degree_);
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (int i = 0; i < a.degree_; ++i)
    if (a.vars_[i] != b.vars_[i]) return a.vars_[i] <=> b.vars_[i];
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(const BigInt& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(VarId v) {
  Polynomial p;
  p.terms_.push_back({Monomial::variable(v), 1});
  return p;
}

BigInt Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono < x; });
  return (it != terms_.end() && it->mono == m) ? it->coeff : BigInt(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->mono < j->mono)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->mono < i->mono) {
      out.push_back(*j++);
    } else {
      BigInt c = i->coeff + j->coeff;
      if (!c.is_zero()) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (terms_.empty() || o.terms_.empty()) return {};
  std::map<Monomial, BigInt> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  Polynomial r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigInt c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (it == terms_.rbegin()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    auto vars = it->mono.variables();
    std::string body;
    if (c != 1 || vars.empty()) body = c.str();
    for (std::size_t i = 0; i < vars.size();) {
      std::size_t j = i;
      while (j < vars.size() && vars[j] == vars[i]) ++j;
      if (!body.empty()) body += '*';
      body += variable_name(vars[i]);
      if (j - i > 1) body += '^' + std::to_string(j - i);
      i = j;
    }
    out += body;
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad polynomial '" + std::string(text) + "': " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&] {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };

  Polynomial result;
  bool first = true;
  skip();
  if (pos == text.size()) throw fail("empty");
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    BigInt coeff = sign;
    Monomial mono;
    while (true) {
      skip();
      if (pos >= text.size()) throw fail("unexpected end");
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff *= BigInt(std::string(digits()));
      } else if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string_view name = text.substr(start, pos - start);
        const std::string_view num = digits();
        if (num.empty() || num.size() > 5) throw fail("bad variable");
        const unsigned long idx = std::stoul(std::string(num));
        VarId v;
        if (name == "v" && idx < kXiBase) v = static_cast<VarId>(idx);
        else if (name == "xi" && idx >= 1 && idx <= 65536ul - kXiBase) v = xi_variable(static_cast<int>(idx));
        else throw fail("unknown variable '" + std::string(text.substr(start, pos - start)) + "'");
        int exp = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          const std::string_view e = digits();
          if (e.empty() || e.size() > 2) throw fail("bad exponent");
          exp = std::stoi(std::string(e));
        }
        for (int i = 0; i < exp; ++i) mono = mono * Monomial::variable(v);
      } else {
        throw fail("unexpected character");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    Polynomial term;
    if (!coeff.is_zero()) term.terms_.push_back({mono, coeff});
    result += term;
    first = false;
    skip();
  }
  return result;
}

RingSpec parse_ring(std::string_view text) {
  if (text == "int") return IntegerRing{};
  if (text == "poly") return PolynomialRing{};
  if (text.substr(0, 5) == "zmod:") {
    const BigInt m = parse_bigint(text.substr(5));
    if (m < 2 || m > BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw ParseError("modulus out of range in '" + std::string(text) + "'");
    return ModularRing(static_cast<std::uint64_t>(m));
  }
  throw ParseError("unknown ring '" + std::string(text) + "' (expected int, zmod:<m> or poly)");
}

std::string ring_name(const RingSpec& ring) {
  return std::visit([](const auto& r) { return r.name(); }, ring);
}

}  // namespace adjeq
