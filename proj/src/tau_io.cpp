#include <json.hpp>

#include "rtau/errors.hpp"
#include "rtau/tau.hpp"

namespace rtau {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "1";

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const Integer& n : v) out.push_back(n.get_str());
  return out;
}

std::vector<Integer> read_integers(const Json& j) {
  std::vector<Integer> out;
  for (const Json& item : j) out.push_back(parse_integer(item.get<std::string>()));
  return out;
}

Json coeffs_of(const IntPoly& g) {
  return integers(std::vector<Integer>(g.coeffs().begin(), g.coeffs().end()));
}

Json component_json(const PadicComponent& c) {
  Json j;
  j["p"] = c.prime().get_str();
  if (c.is_exact()) {
    j["mode"] = "exact";
    j["value"] = c.as_exact().value.get_str();
  } else {
    j["mode"] = "approx";
    j["precision"] = c.as_approx().precision;
    j["residue"] = c.as_approx().residue.get_str();
  }
  return j;
}

PadicComponent read_component(const Json& j) {
  Integer p = parse_integer(j.at("p").get<std::string>());
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "exact") return PadicComponent::exact(p, parse_integer(j.at("value").get<std::string>()));
  if (mode == "approx") {
    return PadicComponent::approx(p, j.at("precision").get<int>(), parse_integer(j.at("residue").get<std::string>()));
  }
  throw Error(Errc::parse_error, "unknown component mode '" + mode + "'");
}

Json ledger_json(const LedgerEntry& e) {
  Json j;
  j["coeffs"] = coeffs_of(e.f);
  j["n"] = e.n.get_str();
  j["stage"] = e.stage;
  if (e.progression) {
    const ProgressionTag& t = *e.progression;
    Json pj;
    pj["group"] = t.group;
    pj["diffs"] = integers(t.diffs);
    pj["offset"] = t.offset.get_str();
    pj["degree"] = t.degree;
    pj["r"] = t.r.get_str();
    pj["a"] = t.a.get_str();
    pj["k"] = t.k.get_str();
    pj["witness_primes"] = integers(t.witness_primes);
    j["progression"] = std::move(pj);
  }
  return j;
}

LedgerEntry read_ledger(const Json& j) {
  LedgerEntry e;
  e.f = IntPoly(read_integers(j.at("coeffs")));
  e.n = parse_integer(j.at("n").get<std::string>());
  e.stage = j.at("stage").get<std::int64_t>();
  if (j.contains("progression")) {
    const Json& pj = j.at("progression");
    ProgressionTag t;
    t.group = pj.at("group").get<std::int64_t>();
    t.diffs = read_integers(pj.at("diffs"));
    t.offset = parse_integer(pj.at("offset").get<std::string>());
    t.degree = pj.at("degree").get<unsigned long>();
    t.r = parse_integer(pj.at("r").get<std::string>());
    t.a = parse_integer(pj.at("a").get<std::string>());
    t.k = parse_integer(pj.at("k").get<std::string>());
    t.witness_primes = read_integers(pj.at("witness_primes"));
    e.progression = std::move(t);
  }
  return e;
}

}  // namespace

std::string serialize(const TauState& tau) {
  Json j;
  j["version"] = kVersion;
  j["builder_kind"] = std::string(to_string(tau.kind));
  j["seed"] = tau.seed;
  j["stage"] = tau.stage;
  j["s_m"] = tau.s.get_str();
  Json iota;
  iota["pairing"] = tau.pairing;
  Json diffs = Json::array();
  for (const auto& d : tau.pairing_diffs) diffs.push_back(integers(d));
  iota["diffs"] = std::move(diffs);
  j["iota"] = std::move(iota);
  j["default_component"] = tau.default_exact ? Json(tau.default_exact->get_str()) : Json(nullptr);
  Json comps = Json::array();
  for (const auto& [p, c] : tau.components) comps.push_back(component_json(c));
  j["components"] = std::move(comps);
  Json ledger = Json::array();
  for (const LedgerEntry& e : tau.ledger) ledger.push_back(ledger_json(e));
  j["ledger"] = std::move(ledger);
  return j.dump(2) + "\n";
}

TauState deserialize(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("state document: ") + e.what());
  }
  try {
    if (j.at("version").get<std::string>() != kVersion) {
      throw Error(Errc::parse_error, "unsupported state version " + j.at("version").dump());
    }
    TauState tau;
    tau.kind = parse_builder_kind(j.at("builder_kind").get<std::string>());
    tau.seed = j.at("seed").get<std::uint64_t>();
    tau.stage = j.at("stage").get<std::int64_t>();
    tau.s = parse_integer(j.at("s_m").get<std::string>());
    tau.pairing = j.at("iota").at("pairing").get<std::string>();
    for (const Json& d : j.at("iota").at("diffs")) tau.pairing_diffs.push_back(read_integers(d));
    if (!j.at("default_component").is_null()) {
      tau.default_exact = parse_integer(j.at("default_component").get<std::string>());
    }
    for (const Json& c : j.at("components")) {
      PadicComponent comp = read_component(c);
      Integer p = comp.prime();
      tau.components.emplace(std::move(p), std::move(comp));
    }
    for (const Json& e : j.at("ledger")) tau.ledger.push_back(read_ledger(e));
    return tau;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("state document: ") + e.what());
  }
}

}  // namespace rtau
