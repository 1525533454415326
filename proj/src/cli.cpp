#include "qlhp/cli.hpp"

#include "qlhp/expression.hpp"
#include "qlhp/moduli_models.hpp"
#include "qlhp/orbifold_geometry.hpp"
#include "qlhp/qlhp_checker.hpp"
#include "qlhp/serialization.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace qlhp::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto at = text.find(sep);
    parts.push_back(text.substr(0, at));
    if (at == std::string_view::npos) return parts;
    text.remove_prefix(at + 1);
  }
}

WeightedProjectiveStack parse_weights(std::string_view text) {
  std::vector<int> weights;
  for (auto part : split(text, ',')) weights.push_back(parse_int(part, "weight"));
  try {
    return WeightedProjectiveStack(std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// "mu2:4,mu3:1" -> four mu_2 sectors and one mu_3 sector.
std::vector<InertiaSector> parse_markings(std::string_view text, const WeightedProjectiveStack& space) {
  std::vector<InertiaSector> markings;
  if (text.empty()) return markings;
  for (auto part : split(text, ',')) {
    const auto colon = part.find(':');
    if (part.substr(0, 2) != "mu" || colon == std::string_view::npos)
      throw UsageError("marking spec must look like muM:N, got '" + std::string(part) + "'");
    const int order = parse_int(part.substr(2, colon - 2), "marking order");
    const int count = parse_int(part.substr(colon + 1), "marking count");
    if (order < 1) throw UsageError("marking order must be at least 1");
    if (count < 0) throw UsageError("marking count must be nonnegative");
    if (count == 0) continue;
    const auto sector = mu_sector(space, order);
    markings.insert(markings.end(), static_cast<std::size_t>(count), sector);
  }
  return markings;
}

void print_report_text(const CheckReport& report, std::ostream& out) {
  out << "example: " << report.example << "\n"
      << "vdim_x: " << report.vdim_x << "\n"
      << "vdim_y: " << report.vdim_y << "\n"
      << "class_x_vir: " << to_string(report.class_x_vir) << "\n"
      << "pushforward_y_vir: " << to_string(report.pushforward_y_vir) << "\n"
      << "star_satisfied: " << (report.star_satisfied ? "true" : "false") << "\n"
      << "convex: " << (report.convex ? "true" : "false") << "\n"
      << "verdict: " << to_string(report.verdict);
  if (report.witness) out << ", witness e = " << to_string(*report.witness);
  out << "\n"
      << "note: " << report.obstruction_note << "\n";
}

int cmd_check(const std::string& name, const std::string& format, std::ostream& out) {
  const auto& ids = named_model_ids();
  if (std::find(ids.begin(), ids.end(), name) == ids.end())
    throw UsageError("unknown example '" + name + "' (see 'qlhp list')");
  const CheckReport report = check(name);
  if (format == "json") {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    print_report_text(report, out);
  }
  return report.verdict == expected_verdict(name) ? kExitOk : kExitVerdictMismatch;
}

int cmd_list(std::ostream& out) {
  for (const auto& id : named_model_ids()) {
    out << id << "  " << build_named_model(id).citation << "\n";
  }
  return kExitOk;
}

int cmd_vdim(const std::string& weights, int genus, const std::string& markings_spec, const std::string& format,
             std::ostream& out) {
  const auto space = parse_weights(weights);
  std::vector<InertiaSector> markings;
  int vdim = 0;
  try {
    markings = parse_markings(markings_spec, space);
    vdim = vdim_degree_zero(space, genus, markings);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    out << json{{"space", to_string(space)}, {"genus", genus}, {"markings", markings.size()}, {"vdim", vdim}}.dump()
        << "\n";
  } else {
    out << vdim << "\n";
  }
  return kExitOk;
}

int cmd_convexity(const std::string& weights, int degree, const std::string& format, std::ostream& out) {
  const LineBundleOnWPS bundle{parse_weights(weights), degree};
  const bool star = satisfies_star(bundle);
  const bool pullback = is_pullback_from_coarse(bundle);
  // The criterion is only established under the positivity condition.
  const std::string convex = star ? (is_convex(bundle) ? "true" : "false") : "n/a";
  if (format == "json") {
    json j{{"space", to_string(bundle.space)}, {"degree", degree}, {"star", star}, {"pullback", pullback}};
    j["convex"] = star ? json(convex == "true") : json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << "star:" << (star ? "true" : "false") << " pullback:" << (pullback ? "true" : "false")
        << " convex:" << convex << "\n";
  }
  return kExitOk;
}

int cmd_ring_eval(const std::string& relations, const std::string& expr, const std::string& format,
                  std::ostream& out) {
  GradedClass value = [&] {
    try {
      return evaluate_expression(expr, parse_relations(relations));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (format == "json") {
    out << class_to_json(value).dump() << "\n";
  } else {
    out << to_string(value) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of the quantum Lefschetz cap identity on degree-zero moduli", "qlhp"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  std::string example;
  std::string format = "text";
  auto* check_cmd = app.add_subcommand("check", "Run a built-in example and print its report");
  check_cmd->add_option("name", example, "Example identifier (see list)")->required();
  check_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* list_cmd = app.add_subcommand("list", "List the built-in examples");

  std::string weights;
  int genus = 0;
  std::string markings;
  auto* vdim_cmd = app.add_subcommand("vdim", "Virtual dimension of degree-zero maps to P(w)");
  vdim_cmd->add_option("--weights", weights, "Comma-separated weights")->required();
  vdim_cmd->add_option("--genus", genus)->required();
  vdim_cmd->add_option("--markings", markings, "muM:N[,muM:N...]")->required();
  vdim_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  int degree = 0;
  auto* convexity_cmd = app.add_subcommand("convexity", "Positivity and convexity of O(k) on P(w)");
  convexity_cmd->add_option("--weights", weights, "Comma-separated weights")->required();
  convexity_cmd->add_option("--degree", degree, "k in O(k)")->required();
  convexity_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  std::string relations;
  std::string expr;
  auto* ring_cmd = app.add_subcommand("ring-eval", "Evaluate an expression in a truncated ring");
  ring_cmd->add_option("--relations", relations, "e.g. h^4,psi^2")->required();
  ring_cmd->add_option("--expr", expr, "e.g. (1/2*(h-psi))^3")->required();
  ring_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(example, format, out);
    if (list_cmd->parsed()) return cmd_list(out);
    if (vdim_cmd->parsed()) return cmd_vdim(weights, genus, markings, format, out);
    if (convexity_cmd->parsed()) return cmd_convexity(weights, degree, format, out);
    if (ring_cmd->parsed()) return cmd_ring_eval(relations, expr, format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qlhp::cli
