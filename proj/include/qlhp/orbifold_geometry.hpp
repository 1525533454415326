#pragma once

// Weighted projective stacks P(w_0, ..., w_n): twisted sectors and their ages,
// the positivity predicate for O(k), the coarse-pullback convexity criterion
// and Riemann-Roch on genus-zero orbicurves.

#include "qlhp/rational.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qlhp {

class WeightedProjectiveStack {
 public:
  explicit WeightedProjectiveStack(std::vector<int> weights);

  const std::vector<int>& weights() const { return weights_; }
  int dimension() const { return static_cast<int>(weights_.size()) - 1; }
  bool is_smooth_variety() const;

  bool operator==(const WeightedProjectiveStack&) const = default;

 private:
  std::vector<int> weights_;
};

std::string to_string(const WeightedProjectiveStack& space);

/// The line bundle O(k).
struct LineBundleOnWPS {
  WeightedProjectiveStack space;
  int k = 0;
};

/// Twisted sector of P(w) indexed by the group element exp(2 pi i f).
class InertiaSector {
 public:
  /// Throws if f is outside [0, 1) or no coordinate is fixed by the element.
  InertiaSector(WeightedProjectiveStack space, Rational f);

  const WeightedProjectiveStack& space() const { return space_; }
  const Rational& f() const { return f_; }
  /// Exact order of exp(2 pi i f).
  long order() const;
  /// Coordinates i with f * w_i integral.
  const std::set<std::size_t>& support() const { return support_; }

 private:
  WeightedProjectiveStack space_;
  Rational f_;
  std::set<std::size_t> support_;
};

/// Every sector of the space (f = j / w_i), untwisted sector first.
std::vector<InertiaSector> all_sectors(const WeightedProjectiveStack& space);

/// The mu_m sector exp(2 pi i / m).
InertiaSector mu_sector(const WeightedProjectiveStack& space, int m);

/// Sum over coordinates outside the support of frac(f * w_i).
Rational age(const InertiaSector& sector);

/// (1 - g)(dim - 3) + n - sum of ages, for degree-zero maps.
int vdim_degree_zero(const WeightedProjectiveStack& target, int genus, const std::vector<InertiaSector>& markings);

/// c_1(O(k)) . d >= 0 for every effective genus-zero degree, i.e. k >= 0.
bool satisfies_star(const LineBundleOnWPS& bundle);

/// O(k) descends to the coarse space iff every weight divides k.
bool is_pullback_from_coarse(const LineBundleOnWPS& bundle);

/// Convexity for bundles satisfying the positivity predicate; throws
/// std::invalid_argument otherwise.
bool is_convex(const LineBundleOnWPS& bundle);

/// A line bundle on a genus-g orbicurve, described by its orbifold degree and
/// the ages of its character at the orbifold points.
class OrbiCurveCharacterBundle {
 public:
  OrbiCurveCharacterBundle(int genus, Rational degree, std::vector<Rational> point_ages);

  int genus() const { return genus_; }
  const Rational& degree() const { return degree_; }
  const std::vector<Rational>& point_ages() const { return point_ages_; }
  /// Degree of the underlying coarse bundle, degree - sum of ages.
  long coarse_degree() const;

 private:
  int genus_;
  Rational degree_;
  std::vector<Rational> point_ages_;
};

/// Pulled-back bundle f^*O(k) for a degree-zero map into the given sector,
/// with `points` orbifold marked points.
OrbiCurveCharacterBundle degree_zero_pullback(const LineBundleOnWPS& bundle, const Rational& f, int points);

/// degree + (1 - genus) - sum of ages.
int orbicurve_chi(const OrbiCurveCharacterBundle& bundle);

/// (h^0, h^1) for a degree-zero bundle on an irreducible genus-zero orbicurve.
std::pair<int, int> h0_h1_degree_zero(const OrbiCurveCharacterBundle& bundle);

}  // namespace qlhp
