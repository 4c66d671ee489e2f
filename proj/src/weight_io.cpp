#include "bergkern/weight_io.hpp"

#include <set>

#include "bergkern/textio.hpp"

namespace bergkern {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ValidationError("unknown field \"" + it.key() + "\" in " + where);
}

double need_number(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ValidationError("missing field \"" + key + "\" in " + where);
  if (!j.at(key).is_number()) throw ValidationError("field \"" + key + "\" in " + where + " must be a number");
  return j.at(key).get<double>();
}

DomainSpec domain_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("domain must be an object");
  if (!j.contains("kind")) throw ValidationError("domain needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "plane") {
    reject_unknown_keys(j, {"kind"}, "domain");
    return DomainSpec::plane();
  }
  if (kind == "disk") {
    reject_unknown_keys(j, {"kind", "radius"}, "domain");
    return DomainSpec::disk(need_number(j, "radius", "domain"));
  }
  throw ValidationError("domain kind must be \"disk\" or \"plane\"");
}

}  // namespace

RadialWeightSpec weight_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("weight spec must be a JSON object");
  if (!j.contains("family")) throw ValidationError("weight spec needs a \"family\"");
  const std::string family = j.at("family").get<std::string>();

  RadialWeightSpec spec;
  if (family == "mittag_leffler") {
    reject_unknown_keys(j, {"family", "n", "alpha", "m", "domain"}, "weight spec");
    spec = RadialWeightSpec::mittag_leffler(need_number(j, "n", "mittag_leffler"),
                                            need_number(j, "alpha", "mittag_leffler"),
                                            need_number(j, "m", "mittag_leffler"));
  } else if (family == "truncated_disk") {
    reject_unknown_keys(j, {"family", "q", "domain"}, "weight spec");
    spec = RadialWeightSpec::truncated_disk(need_number(j, "q", "truncated_disk"));
  } else if (family == "tabulated") {
    reject_unknown_keys(j, {"family", "samples", "domain"}, "weight spec");
    if (!j.contains("samples") || !j.at("samples").is_array())
      throw ValidationError("tabulated weight needs a \"samples\" array of [r,w] pairs");
    std::vector<double> radii, densities;
    for (const auto& pair : j.at("samples")) {
      if (!pair.is_array() || pair.size() != 2)
        throw ValidationError("tabulated samples must be [radius, density] pairs");
      radii.push_back(pair.at(0).get<double>());
      densities.push_back(pair.at(1).get<double>());
    }
    spec = RadialWeightSpec::tabulated(std::move(radii), std::move(densities),
                                       DomainSpec::disk(1.0));
  } else {
    throw ValidationError("unknown weight family \"" + family + "\"");
  }

  if (j.contains("domain")) spec.domain = domain_from_json(j.at("domain"));
  return spec;
}

RadialWeightSpec weight_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("weight spec is not valid JSON: ") + e.what());
  }
  return weight_from_json(j);
}

nlohmann::json weight_to_json(const RadialWeightSpec& spec) {
  return nlohmann::json::parse(weight_to_json_text(spec));
}

std::string weight_to_json_text(const RadialWeightSpec& spec) {
  JsonOut root = JsonOut::object();
  root.set("family", JsonOut::str(spec.family_name()));
  if (const auto* ml = spec.as_ml()) {
    root.set("n", JsonOut::num(ml->n));
    root.set("alpha", JsonOut::num(ml->alpha));
    root.set("m", JsonOut::num(ml->m));
  } else if (const auto* td = spec.as_truncated()) {
    root.set("q", JsonOut::num(td->q));
  } else {
    const auto* tab = spec.as_tabulated();
    JsonOut samples = JsonOut::array();
    for (size_t i = 0; i < tab->radii.size(); ++i) {
      JsonOut pair = JsonOut::array();
      pair.push(JsonOut::num(tab->radii[i]));
      pair.push(JsonOut::num(tab->densities[i]));
      samples.push(std::move(pair));
    }
    root.set("samples", std::move(samples));
  }
  JsonOut domain = JsonOut::object();
  if (spec.domain.kind == DomainKind::Disk) {
    domain.set("kind", JsonOut::str("disk"));
    domain.set("radius", JsonOut::num(spec.domain.radius));
  } else {
    domain.set("kind", JsonOut::str("plane"));
  }
  root.set("domain", std::move(domain));
  return root.dump();
}

}  // namespace bergkern
