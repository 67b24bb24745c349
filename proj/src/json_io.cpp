#include "adjeq/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace adjeq {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad ") + what + ": " + e.what());
  }
}

Coeffs coeffs_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != rs.rank())
    throw ParseError("expected an array of " + std::to_string(rs.rank()) + " integers");
  Coeffs c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("root coefficients must be integers");
    c.push_back(x.get<int>());
  }
  return c;
}

}  // namespace

Json root_to_json(const RootSystem& rs, RootIndex r) {
  if (r < 0 || r >= rs.size()) throw InvalidRoot("root index out of range");
  return Json(rs.coeffs(r));
}

RootIndex root_from_json(const RootSystem& rs, const Json& j) {
  const Coeffs c = coeffs_from_json(rs, j);
  const auto r = rs.find(c);
  if (!r) throw InvalidRoot(format_coeffs(c) + " is not a root of " + rs.id().name());
  return *r;
}

Json weight_to_json(const RootSystem& rs, Weight w) {
  if (w.pos < 0 || w.pos >= rs.dimension()) throw IndexOutOfRange("weight out of range");
  if (rs.is_zero_weight(w)) return Json{{"zero", rs.zero_slot(w)}};
  return Json{{"root", root_to_json(rs, rs.weight_root(w))}};
}

Weight weight_from_json(const RootSystem& rs, const Json& j) {
  return guarded("weight", [&] {
    if (j.contains("zero")) return rs.zero_weight(j.at("zero").get<int>());
    return rs.root_weight(root_from_json(rs, j.at("root")));
  });
}

Json square_to_json(const RootSystem& rs, const MaximalSquare& sq) {
  Json pairs = Json::array();
  for (int i = 1; i <= sq.k(); ++i)
    pairs.push_back(Json::array({root_to_json(rs, sq.member(i)), root_to_json(rs, sq.member(-i))}));
  return Json{{"sigma", sq.sigma()}, {"pairs", pairs}};
}

Json form_to_json(const RootSystem& rs, const QuadraticForm& f) {
  Json key;
  if (f.kind == FormKind::Pi2) key = Json{{"sigma", f.sigma}};
  else key = Json{{"alpha", root_to_json(rs, f.alpha)}, {"beta", root_to_json(rs, f.beta)}};
  Json monos = Json::array();
  for (const auto& m : f.monomials)
    monos.push_back(Json{{"a", weight_to_json(rs, m.a)}, {"b", weight_to_json(rs, m.b)}, {"c", m.coeff}});
  return Json{{"kind", std::string(to_string(f.kind))}, {"key", key}, {"monomials", monos}};
}

QuadraticForm form_from_json(const RootSystem& rs, const Json& j) {
  return guarded("form", [&] {
    QuadraticForm f;
    f.system = rs.id();
    f.kind = parse_form_kind(j.at("kind").get<std::string>());
    const Json& key = j.at("key");
    if (f.kind == FormKind::Pi2) {
      f.sigma = key.at("sigma").get<Coeffs>();
    } else {
      f.alpha = root_from_json(rs, key.at("alpha"));
      f.beta = root_from_json(rs, key.at("beta"));
      if (rs.inner(f.alpha, f.beta) != 0) throw InvalidPair("form key roots are not orthogonal");
      if (f.kind == FormKind::Pi && f.beta < f.alpha) std::swap(f.alpha, f.beta);
    }
    FormBuilder fb;
    for (const auto& m : j.at("monomials"))
      fb.add(weight_from_json(rs, m.at("a")), weight_from_json(rs, m.at("b")), m.at("c").get<int>());
    f.monomials = fb.build();
    return f;
  });
}

Json equations_to_json(const RootSystem& rs, const EquationSet& eqs) {
  if (eqs.system() != rs.id()) throw Mismatch("equation set belongs to another system");
  const EquationCounts c = eqs.counts();
  Json forms = Json::array();
  for (const auto& f : eqs.forms()) forms.push_back(form_to_json(rs, f));
  return Json{{"system", rs.id().name()},
              {"counts", {{"pi/2", c.pi2}, {"2pi/3", c.two_pi3}, {"pi", c.pi}, {"total", c.total()}}},
              {"two_pi3_pairs", "ordered"},
              {"forms", forms}};
}

EquationSet equations_from_json(const RootSystem& rs, const Json& j) {
  return guarded("equation set", [&] {
    if (SystemId::parse(j.at("system").get<std::string>()) != rs.id())
      throw Mismatch("equation file is for " + j.at("system").get<std::string>());
    std::vector<QuadraticForm> forms;
    for (const auto& f : j.at("forms")) forms.push_back(form_from_json(rs, f));
    EquationSet eqs(rs.id(), std::move(forms));
    if (j.contains("counts") && j.at("counts").at("total").get<std::size_t>() != eqs.forms().size())
      throw ParseError("equation file header count disagrees with its forms");
    return eqs;
  });
}

Json report_to_json(const VerificationReport& rep, std::optional<double> wall_seconds) {
  Json groups = Json::array();
  for (const auto& g : rep.groups)
    groups.push_back(Json{{"name", g.name},
                          {"attempted", g.attempted},
                          {"passed", g.passed},
                          {"failures", g.failures}});
  Json out{{"system", rep.config.system.name()},
           {"suite", rep.config.suite},
           {"seed", rep.config.seed},
           {"samples", rep.config.samples},
           {"rings", rep.config.rings},
           {"prng", "mt19937_64, value mod n"},
           {"ok", rep.ok()},
           {"attempted", rep.attempted()},
           {"passed", rep.passed()},
           {"groups", groups}};
  if (wall_seconds) out["wall_seconds"] = std::round(*wall_seconds * 1000.0) / 1000.0;
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

}  // namespace adjeq
