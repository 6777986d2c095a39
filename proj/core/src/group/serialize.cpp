#include "trivex/group/serialize.hpp"

#include <json.hpp>

#include "trivex/error.hpp"

namespace trivex::group {

namespace {

using nlohmann::json;

const char* kind_name(Definition::Kind k) {
  switch (k) {
    case Definition::Kind::Image: return "image";
    case Definition::Kind::Power: return "power";
    case Definition::Kind::Commutator: return "commutator";
  }
  return "?";
}

Definition::Kind kind_from(const std::string& s) {
  if (s == "image") return Definition::Kind::Image;
  if (s == "power") return Definition::Kind::Power;
  if (s == "commutator") return Definition::Kind::Commutator;
  throw InvalidArgument("unknown definition kind '" + s + "'");
}

json word_json(const Word& w) {
  json a = json::array();
  for (const auto& l : w.letters()) a.push_back(json::array({l.generator, l.exponent}));
  return a;
}

Word word_from(const json& a) {
  std::vector<Letter> letters;
  for (const auto& l : a) letters.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
  return Word(std::move(letters));
}

Exponents hex_in(const json& j, std::size_t n) {
  Exponents e;
  if (!Exponents::from_hex(j.get<std::string>(), n, e)) throw InvalidArgument("bad exponent hex '" + j.dump() + "'");
  return e;
}

}  // namespace

std::string to_json(const PcPresentation& pcp, int indent) {
  const auto n = static_cast<std::size_t>(pcp.size());
  const auto& t = pcp.tables();
  json doc;
  doc["format"] = "trivex.pcp";
  doc["version"] = kPcpFormatVersion;
  doc["prime"] = 2;
  doc["class"] = pcp.pclass();
  doc["generators"] = n;
  doc["weights"] = t.weights;
  json defs = json::array();
  for (const auto& d : t.definitions) defs.push_back(json::array({kind_name(d.kind), d.first, d.second}));
  doc["definitions"] = defs;
  json pw = json::array();
  for (const auto& e : t.power) pw.push_back(e.to_hex(n));
  doc["power"] = pw;
  json cm = json::array();
  for (const auto& e : t.commutator) cm.push_back(e.to_hex(n));
  doc["commutator"] = cm;
  json im = json::array();
  for (const auto& e : t.images) im.push_back(e.to_hex(n));
  doc["images"] = im;
  json rel = json::array();
  for (const auto& r : pcp.source().relators) rel.push_back(word_json(r));
  doc["presentation"] = {{"generators", pcp.source().generators}, {"relators", rel}};
  return doc.dump(indent);
}

PcPresentation pcp_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format") != "trivex.pcp") throw InvalidArgument("not a trivex.pcp document");
    if (doc.at("version").get<int>() != kPcpFormatVersion) throw InvalidArgument("unsupported pcp format version");
    if (doc.at("prime").get<int>() != 2) throw InvalidArgument("only p = 2 is supported");
    const auto n = doc.at("generators").get<std::size_t>();
    if (n > kMaxPcGenerators) throw InvalidArgument("too many generators");
    Presentation pres;
    pres.generators = doc.at("presentation").at("generators").get<int>();
    for (const auto& r : doc.at("presentation").at("relators")) pres.relators.push_back(word_from(r));
    PcTables t;
    t.weights = doc.at("weights").get<std::vector<int>>();
    for (const auto& d : doc.at("definitions")) {
      t.definitions.push_back({kind_from(d.at(0).get<std::string>()), d.at(1).get<int>(), d.at(2).get<int>()});
    }
    for (const auto& e : doc.at("power")) t.power.push_back(hex_in(e, n));
    for (const auto& e : doc.at("commutator")) t.commutator.push_back(hex_in(e, n));
    for (const auto& e : doc.at("images")) t.images.push_back(hex_in(e, n));
    if (t.weights.size() != n) throw InvalidArgument("weights length does not match generators");
    try {
      return PcPresentation(std::move(pres), doc.at("class").get<int>(), std::move(t));
    } catch (const InternalError& e) {
      throw InvalidArgument(std::string("pcp document is malformed: ") + e.what());
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("pcp JSON parse error: ") + e.what());
  }
}

}  // namespace trivex::group
