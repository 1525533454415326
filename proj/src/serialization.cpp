#include "qlhp/serialization.hpp"

#include <stdexcept>

namespace qlhp {

using nlohmann::json;

json ring_to_json(const RingDescriptor& ring) {
  json generators = json::array();
  for (const auto& g : ring.generators()) {
    generators.push_back({{"name", g.name}, {"degree", g.degree}, {"nilpotency", g.nilpotency}});
  }
  return {{"generators", generators}, {"integration_normalization", to_string(ring.integration_normalization())}};
}

RingPtr ring_from_json(const json& j) {
  std::vector<Generator> generators;
  for (const auto& g : j.at("generators")) {
    generators.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>(), g.at("nilpotency").get<int>()});
  }
  return make_ring(std::move(generators), parse_rational(j.at("integration_normalization").get<std::string>()));
}

json class_to_json(const GradedClass& a) {
  json terms = json::array();
  for (const auto& [e, c] : a.sorted_terms()) {
    terms.push_back({{"exponents", e}, {"num", numerator_string(c)}, {"den", denominator_string(c)}});
  }
  return terms;
}

GradedClass class_from_json(const json& j, const RingPtr& ring) {
  if (!j.is_array()) throw std::invalid_argument("class JSON must be an array of terms");
  GradedClass::Terms terms;
  for (const auto& t : j) {
    auto exponents = t.at("exponents").get<Exponents>();
    if (!ring->is_valid_monomial(exponents)) throw std::invalid_argument("class JSON has an invalid monomial");
    const Rational coefficient =
        parse_rational(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
    terms[std::move(exponents)] += coefficient;
  }
  return GradedClass(ring, std::move(terms));
}

json report_to_json(const CheckReport& report) {
  return {{"example", report.example},
          {"ring", ring_to_json(*report.class_x_vir.ring())},
          {"vdim_x", report.vdim_x},
          {"vdim_y", report.vdim_y},
          {"class_x_vir", class_to_json(report.class_x_vir)},
          {"pushforward_y_vir", class_to_json(report.pushforward_y_vir)},
          {"star_satisfied", report.star_satisfied},
          {"convex", report.convex},
          {"verdict", std::string(to_string(report.verdict))},
          {"witness", report.witness ? class_to_json(*report.witness) : json(nullptr)},
          {"obstruction_note", report.obstruction_note}};
}

CheckReport report_from_json(const json& j) {
  const auto ring = ring_from_json(j.at("ring"));
  CheckReport report{.example = j.at("example").get<std::string>(),
                     .vdim_x = j.at("vdim_x").get<int>(),
                     .vdim_y = j.at("vdim_y").get<int>(),
                     .class_x_vir = class_from_json(j.at("class_x_vir"), ring),
                     .pushforward_y_vir = class_from_json(j.at("pushforward_y_vir"), ring),
                     .star_satisfied = j.at("star_satisfied").get<bool>(),
                     .convex = j.at("convex").get<bool>(),
                     .verdict = parse_verdict(j.at("verdict").get<std::string>()),
                     .obstruction_note = j.at("obstruction_note").get<std::string>()};
  if (!j.at("witness").is_null()) report.witness = class_from_json(j.at("witness"), ring);
  return report;
}

}  // namespace qlhp
