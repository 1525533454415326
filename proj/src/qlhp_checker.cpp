#include "qlhp/qlhp_checker.hpp"

#include "qlhp/orbifold_geometry.hpp"

#include <sstream>
#include <stdexcept>

namespace qlhp {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds:
      return "HOLDS";
    case Verdict::FailsDimension:
      return "FAILS_DIMENSION";
    case Verdict::FailsProportionality:
      return "FAILS_PROPORTIONALITY";
  }
  throw std::logic_error("bad verdict");
}

Verdict parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::Holds, Verdict::FailsDimension, Verdict::FailsProportionality}) {
    if (to_string(v) == text) return v;
  }
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

bool CheckReport::operator==(const CheckReport& other) const {
  return example == other.example && vdim_x == other.vdim_x && vdim_y == other.vdim_y &&
         class_x_vir == other.class_x_vir && pushforward_y_vir == other.pushforward_y_vir &&
         star_satisfied == other.star_satisfied && convex == other.convex && verdict == other.verdict &&
         witness == other.witness && obstruction_note == other.obstruction_note;
}

std::pair<bool, bool> star_and_convexity_summary(const NamedExample& example) {
  bool star = true;
  bool convex = true;
  for (int k : example.bundle_degrees) {
    const LineBundleOnWPS bundle{example.ambient, k};
    if (!satisfies_star(bundle)) {
      star = false;
      convex = false;
      continue;
    }
    convex = convex && is_convex(bundle);
  }
  return {star, convex};
}

std::pair<bool, bool> star_and_convexity_summary(std::string_view name) {
  return star_and_convexity_summary(build_named_model(name));
}

Verdict expected_verdict(std::string_view name) {
  if (name == "quintic-genus1") return Verdict::FailsProportionality;
  if (name == "p1122-trivial") return Verdict::FailsDimension;
  if (name == "p1112222-nontrivial") return Verdict::FailsProportionality;
  if (name == "convex-control") return Verdict::Holds;
  throw std::invalid_argument("unknown example '" + std::string(name) + "'");
}

std::optional<Rational> coefficient_determinant(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a, b);
  const auto da = a.homogeneous_degree();
  if (!da || da != b.homogeneous_degree()) return std::nullopt;
  const auto basis = a.ring()->basis(*da);
  if (basis.size() != 2) return std::nullopt;
  return Rational(a.coefficient(basis[0]) * b.coefficient(basis[1]) - a.coefficient(basis[1]) * b.coefficient(basis[0]));
}

CheckReport check(const NamedExample& example) {
  const GradedClass class_x = virtual_class(example.x);
  const GradedClass class_y = virtual_class(example.y);
  const GradedClass pushed = pushforward(example.inclusion, class_y);
  const auto [star, convex] = star_and_convexity_summary(example);

  CheckReport report{.example = example.name,
                     .vdim_x = example.x.vdim,
                     .vdim_y = example.y.vdim,
                     .class_x_vir = class_x,
                     .pushforward_y_vir = pushed,
                     .star_satisfied = star,
                     .convex = convex};

  // e has cohomological degree vdim_x - vdim_y.
  const int required_degree = example.x.vdim - example.y.vdim;
  std::ostringstream note;
  if (example.x.genus == 1) note << "genus-one example: failure is genus-one, not convexity. ";

  const auto witness = solve_cap_equation(pushed, class_x);
  if (witness) {
    if (!(class_x * *witness == pushed)) throw std::logic_error("cap equation witness fails the product check");
    report.verdict = Verdict::Holds;
    report.witness = witness;
    note << "iota_*[Y]^vir = [X]^vir cap e with e = " << to_string(*witness) << ".";
  } else if (required_degree < 0 || example.x.ring->basis(required_degree).empty()) {
    report.verdict = Verdict::FailsDimension;
    note << "vdim X = " << example.x.vdim << ", vdim Y = " << example.y.vdim << ": e would need degree "
         << required_degree << ", so no class e exists.";
  } else {
    report.verdict = Verdict::FailsProportionality;
    if (required_degree == 0) {
      note << "equal dimensions: e must be a scalar, but the classes are not proportional";
      if (const auto det = coefficient_determinant(class_x, pushed)) note << " (determinant " << to_string(*det) << ")";
      note << ".";
    } else {
      note << "no class e of degree " << required_degree << " solves the cap equation.";
    }
  }
  if (example.inclusion.informational) note << " Class-level inclusion model is informational.";
  report.obstruction_note = note.str();
  return report;
}

CheckReport check(std::string_view name) { return check(build_named_model(name)); }

}  // namespace qlhp
