#include "trivex/toeplitz/generator_data.hpp"

#include <json.hpp>

#include "trivex/error.hpp"

namespace trivex::toeplitz {

namespace {

using nlohmann::json;

GeneratorData one(const json& j) {
  GeneratorData g;
  g.generator = j.at("generator").get<std::string>();
  if (g.generator != "x0" && g.generator != "x1" && g.generator != "x3") {
    throw InvalidArgument("generator must be x0, x1 or x3, got '" + g.generator + "'");
  }
  for (const auto& d : j.at("diagonals")) {
    // Either a bare hex string or a one-element array holding it.
    const auto& h = d.is_array() ? d.at(0) : d;
    g.diagonals.push_back(BlockTriple::from_hex(h.get<std::string>()));
  }
  return g;
}

BlockTriple expected_leading(const std::string& gen, int l) {
  const auto ab = alpha_beta();
  const bool even = l % 2 == 0;
  if (gen == "x0") return even ? ab.alpha0 : ab.beta0;
  if (gen == "x1") return even ? ab.alpha1 : ab.beta1;
  return even ? ab.alpha3 : ab.beta3;
}

}  // namespace

std::vector<GeneratorData> parse_generator_data(std::string_view json_text) {
  try {
    const json doc = json::parse(json_text);
    std::vector<GeneratorData> out;
    if (doc.is_array()) {
      for (const auto& j : doc) out.push_back(one(j));
    } else {
      out.push_back(one(doc));
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("generator data: ") + e.what());
  }
}

std::string generator_data_json(const std::vector<GeneratorData>& data) {
  json arr = json::array();
  for (const auto& g : data) {
    json d = json::array();
    for (const auto& t : g.diagonals) d.push_back(t.to_hex());
    arr.push_back({{"generator", g.generator}, {"diagonals", d}});
  }
  return arr.dump(2);
}

std::vector<GeneratorData> alpha_only_data() {
  const auto ab = alpha_beta();
  return {{"x0", {ab.alpha0}}, {"x1", {ab.alpha1}}, {"x3", {ab.alpha3}}};
}

PowerPattern power_pattern(const GeneratorData& x, int k) {
  if (k < 1) throw InvalidArgument("power_pattern needs k >= 1");
  PowerPattern out;
  out.generator = x.generator;
  out.k = k;
  PeriodicMatrix p = x.matrix(k);
  std::uint64_t e = 1;
  for (int l = 0;; ++l, e *= 2) {
    if (l > 0) p = ptm_multiply(p, p);
    const int d = ptm_depth(p);
    if (d >= k) {
      out.order = e;
      break;
    }
    const auto lead_index = static_cast<int>(e);
    PowerStep s;
    s.l = l;
    s.depth = d;
    s.expected_depth = lead_index - 1;
    if (lead_index <= k) s.leading = p.diagonal(lead_index);
    s.expected = expected_leading(x.generator, l);
    out.steps.push_back(s);
  }
  return out;
}

}  // namespace trivex::toeplitz
