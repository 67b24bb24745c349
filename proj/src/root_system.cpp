#include "adjeq/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "adjeq/errors.hpp"

namespace adjeq {

namespace {

constexpr int kMaxDRank = 32;

}  // namespace

SystemId SystemId::parse(std::string_view name) {
  if (name.size() < 2) throw UnsupportedSystem("unsupported system '" + std::string(name) + "'");
  SystemId id;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'D': id.family = Family::D; break;
    case 'E': id.family = Family::E; break;
    default: throw UnsupportedSystem("unsupported system '" + std::string(name) + "'");
  }
  auto digits = name.substr(1);
  if (!digits.empty() && digits[0] == '_') digits.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || !id.valid())
    throw UnsupportedSystem("unsupported system '" + std::string(name) + "'");
  return id;
}

bool SystemId::valid() const {
  if (family == Family::D) return rank >= 5 && rank <= kMaxDRank;
  return rank >= 6 && rank <= 8;
}

std::string SystemId::name() const {
  return (family == Family::D ? "D" : "E") + std::to_string(rank);
}

int SystemId::dimension() const {
  if (family == Family::D) return rank * (2 * rank - 1);
  switch (rank) {
    case 6: return 78;
    case 7: return 133;
    default: return 248;
  }
}

int SystemId::square_half_size() const {
  if (family == Family::D) return rank;
  switch (rank) {
    case 6: return 4;
    case 7: return 5;
    default: return 7;
  }
}

std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::Equal: return "equal";
    case PairRelation::Opposite: return "opposite";
    case PairRelation::Orthogonal: return "orthogonal";
    case PairRelation::SumIsRoot: return "sum-is-root";
    case PairRelation::DifferenceIsRoot: return "difference-is-root";
  }
  return "?";
}

std::vector<std::vector<int>> cartan_matrix(const SystemId& id) {
  if (!id.valid()) throw UnsupportedSystem("unsupported system " + id.name());
  const int l = id.rank;
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  auto link = [&](int s, int t) {  // 1-based Bourbaki labels
    a[s - 1][t - 1] = -1;
    a[t - 1][s - 1] = -1;
  };
  for (int s = 0; s < l; ++s) a[s][s] = 2;
  if (id.family == Family::D) {
    // 1 - 2 - ... - (l-1), with l attached to l-2.
    for (int s = 1; s <= l - 2; ++s) link(s, s + 1);
    link(l - 2, l);
  } else {
    // 1 - 3 - 4 - 5 - ... - l, with 2 attached to 4.
    link(1, 3);
    for (int s = 3; s < l; ++s) link(s, s + 1);
    link(2, 4);
  }
  return a;
}

std::string format_coeffs(std::span<const int> c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

RootSystem::RootSystem(SystemId id) : id_(id), rank_(id.rank) {
  if (!id.valid()) throw UnsupportedSystem("unsupported system " + id.name());
  cartan_ = cartan_matrix(id);
  const int l = rank_;

  auto form = [&](const Coeffs& a, const Coeffs& b) {
    int r = 0;
    for (int s = 0; s < l; ++s)
      for (int t = 0; t < l; ++t) r += a[s] * cartan_[s][t] * b[t];
    return r;
  };

  // Positive roots by height. In a simply-laced system every alpha-string has
  // length at most one, so r + alpha_s is a root exactly when <r,alpha_s> = -1.
  std::set<Coeffs> positive;
  std::vector<Coeffs> layer;
  for (int s = 0; s < l; ++s) {
    Coeffs e(l, 0);
    e[s] = 1;
    layer.push_back(e);
    positive.insert(e);
  }
  while (!layer.empty()) {
    std::vector<Coeffs> next;
    for (const auto& r : layer) {
      for (int s = 0; s < l; ++s) {
        int p = 0;
        for (int t = 0; t < l; ++t) p += r[t] * cartan_[t][s];
        if (p != -1) continue;
        Coeffs up = r;
        ++up[s];
        if (positive.insert(up).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }

  std::vector<Coeffs> all(positive.begin(), positive.end());
  for (const auto& r : positive) {
    Coeffs n = r;
    for (auto& x : n) x = -x;
    all.push_back(n);
  }
  auto height_of = [](const Coeffs& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::sort(all.begin(), all.end(), [&](const Coeffs& a, const Coeffs& b) {
    const int ha = height_of(a), hb = height_of(b);
    return ha != hb ? ha < hb : a < b;
  });
  roots_ = std::move(all);

  const int n = size();
  if (n + l != id.dimension())
    throw std::logic_error("root closure produced " + std::to_string(n) + " roots for " + id.name());

  for (int i = 0; i < n; ++i) {
    index_.emplace(roots_[i], i);
    height_.push_back(height_of(roots_[i]));
  }

  neg_.resize(n);
  pairing_.assign(static_cast<std::size_t>(n) * l, 0);
  for (int i = 0; i < n; ++i) {
    Coeffs c = roots_[i];
    for (auto& x : c) x = -x;
    neg_[i] = index_.at(c);
    for (int s = 0; s < l; ++s) {
      int p = 0;
      for (int t = 0; t < l; ++t) p += roots_[i][t] * cartan_[t][s];
      pairing_[i * l + s] = p;
    }
    if (form(roots_[i], roots_[i]) != 2) throw std::logic_error("root of non-unit length");
  }

  // Reflection cross-check: s_t(r) = r - <r,alpha_t> alpha_t stays in the set.
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < l; ++t) {
      Coeffs img = roots_[i];
      img[t] -= pairing_[i * l + t];
      if (!index_.contains(img)) throw std::logic_error("root set not closed under reflections");
    }
  }

  inner_.resize(static_cast<std::size_t>(n) * n);
  sum_.resize(static_cast<std::size_t>(n) * n);
  Coeffs tmp(l);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int p = 0;
      for (int s = 0; s < l; ++s) p += pairing_[a * l + s] * roots_[b][s];
      inner_[flat(a, b)] = static_cast<std::int8_t>(p);
      RootIndex r = kNoRoot;
      if (p == -1) {
        for (int s = 0; s < l; ++s) tmp[s] = roots_[a][s] + roots_[b][s];
        r = index_.at(tmp);
      }
      sum_[flat(a, b)] = r;
    }
  }

  for (int s = 1; s <= l; ++s) {
    Coeffs e(l, 0);
    e[s - 1] = 1;
    simple_.push_back(index_.at(e));
  }
}

std::optional<RootIndex> RootSystem::find(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_) return std::nullopt;
  auto it = index_.find(Coeffs(coeffs.begin(), coeffs.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootIndex RootSystem::index_of(std::span<const int> coeffs) const {
  if (auto r = find(coeffs)) return *r;
  throw InvalidRoot(format_coeffs(coeffs) + " is not a root of " + id_.name());
}

RootIndex RootSystem::simple(int s) const {
  if (s < 1 || s > rank_) throw IndexOutOfRange("fundamental root index out of range");
  return simple_[s - 1];
}

PairRelation RootSystem::classify(RootIndex a, RootIndex b) const {
  switch (inner(a, b)) {
    case 2: return PairRelation::Equal;
    case -2: return PairRelation::Opposite;
    case 0: return PairRelation::Orthogonal;
    case -1: return PairRelation::SumIsRoot;
    default: return PairRelation::DifferenceIsRoot;
  }
}

int RootSystem::doubled_inner(std::span<const int> a, std::span<const int> b) const {
  return inner(index_of(a), index_of(b));
}

PairRelation RootSystem::classify_pair(std::span<const int> a, std::span<const int> b) const {
  return classify(index_of(a), index_of(b));
}

std::optional<Coeffs> RootSystem::add_if_root(std::span<const int> a, std::span<const int> b) const {
  const RootIndex r = sum(index_of(a), index_of(b));
  if (r == kNoRoot) return std::nullopt;
  return roots_[r];
}

Weight RootSystem::zero_weight(int s) const {
  if (s < 1 || s > rank_) throw IndexOutOfRange("zero weight index out of range");
  return Weight{size() + s - 1};
}

}  // namespace adjeq
