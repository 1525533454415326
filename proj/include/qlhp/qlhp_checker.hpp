#pragma once

#include "qlhp/graded_algebra.hpp"
#include "qlhp/moduli_models.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace qlhp {

enum class Verdict { Holds, FailsDimension, FailsProportionality };

std::string_view to_string(Verdict verdict);
/// Inverse of to_string; throws std::invalid_argument on unknown text.
Verdict parse_verdict(std::string_view text);

/// Both sides of iota_*[Y]^vir = [X]^vir cap e for one example, and whether
/// some class e makes them equal.
struct CheckReport {
  std::string example;
  int vdim_x = 0;
  int vdim_y = 0;
  GradedClass class_x_vir;
  GradedClass pushforward_y_vir;
  bool star_satisfied = false;
  bool convex = false;
  Verdict verdict = Verdict::FailsDimension;
  std::optional<GradedClass> witness{};
  std::string obstruction_note{};

  bool operator==(const CheckReport& other) const;
};

CheckReport check(const NamedExample& example);
CheckReport check(std::string_view name);

/// (positivity holds for every summand of E, E convex).
std::pair<bool, bool> star_and_convexity_summary(const NamedExample& example);
std::pair<bool, bool> star_and_convexity_summary(std::string_view name);

/// Verdict each built-in example is known to produce.
Verdict expected_verdict(std::string_view name);

/// det of the 2x2 coefficient matrix of two homogeneous classes of equal
/// degree whose graded piece is two-dimensional; nullopt otherwise.
std::optional<Rational> coefficient_determinant(const GradedClass& a, const GradedClass& b);

}  // namespace qlhp
