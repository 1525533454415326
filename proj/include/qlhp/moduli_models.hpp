#pragma once

// Degree-zero moduli of stable maps, modeled by the cohomology ring of their
// coarse space together with obstruction data. The gerbe structure of the
// orbifold examples enters only through stored constants: gerbe order, gerbe
// class in mu_2 x mu_2, and the restriction of the obstruction line bundle to
// the two kinds of fiber.

#include "qlhp/chern_calculus.hpp"
#include "qlhp/graded_algebra.hpp"
#include "qlhp/orbifold_geometry.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlhp {

/// Data for X_{1,1,0} = X x M_{1,1}, whose virtual class is
/// c_D(TX) - c_{D-1}(TX) psi.
struct GenusOneData {
  int target_dimension = 0;
  GradedClass c_total_tangent;
};

struct ModuliModel {
  std::string label;
  RingPtr ring;
  int stack_dimension = 0;
  int vdim = 0;
  int genus = 0;
  int gerbe_order = 1;
  std::pair<int, int> gerbe_class{1, 1};
  int obstruction_rank = 0;
  /// c_1 of one obstruction summand; the obstruction bundle is its
  /// obstruction_rank-fold direct sum.
  std::optional<GradedClass> obstruction_euler_c1{};
  std::optional<GenusOneData> genus_one{};
  /// Target and marking sectors when the target is a weighted projective stack.
  std::optional<WeightedProjectiveStack> target{};
  std::vector<InertiaSector> markings{};
};

/// Throws std::invalid_argument when the model's invariants fail.
void validate(const ModuliModel& model);

struct InclusionModel {
  ModuliModel source;
  ModuliModel target;
  int codimension = 0;
  GradedClass pushforward_of_one;
  /// Source generator name -> target generator name.
  std::map<std::string, std::string> pullback_dictionary;
  /// Set when the class-level model is a reading rather than a derivation.
  bool informational = false;
};

void validate(const InclusionModel& inclusion);

/// Restriction data pinning the Euler class of the obstruction line bundle.
struct HodgeCalibration {
  GradedClass fiber_restriction_c1;  ///< restriction to the projective-stack fiber, e.g. 1/2 h
  Rational hodge_integral;           ///< integral of c_1 of the Hodge bundle over the gerby M_{0,4} fiber
  Rational psi_integral_coarse;      ///< integral of psi_1 over coarse M_{0,4}
};

/// c_D(TX) - c_{D-1}(TX) * psi. The ring must contain h and psi.
GradedClass genus1_degree0_vfc(int target_dimension, const GradedClass& c_total_tangent);

/// fiber_restriction_c1 + alpha psi with alpha = -hodge / (psi_coarse / gerbe_order).
GradedClass calibrate_euler_V(const HodgeCalibration& calibration, int gerbe_order);

/// (c_1)^rank of the split obstruction bundle; 1 when unobstructed.
GradedClass degree_zero_vfc(const ModuliModel& model);

/// Virtual class of any model: the genus-one formula or degree_zero_vfc.
GradedClass virtual_class(const ModuliModel& model);

/// Lifts `a` along the pullback dictionary and multiplies by iota_* 1.
GradedClass pushforward(const InclusionModel& inclusion, const GradedClass& a);

/// A built-in example: ambient space, bundle E = sum O(k_j), both moduli
/// models and the induced inclusion.
struct NamedExample {
  std::string name;
  std::string citation;
  WeightedProjectiveStack ambient;
  std::vector<int> bundle_degrees;
  ModuliModel x;
  ModuliModel y;
  InclusionModel inclusion;
  /// Euler class of E_{0,n,d} when E is convex and the bundle is modeled.
  std::optional<GradedClass> bundle_euler_class;
};

const std::vector<std::string>& named_model_ids();

/// Throws std::invalid_argument for unknown names.
NamedExample build_named_model(std::string_view name);

}  // namespace qlhp
