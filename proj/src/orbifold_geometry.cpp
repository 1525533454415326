#include "qlhp/orbifold_geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlhp {

WeightedProjectiveStack::WeightedProjectiveStack(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weighted projective stack needs at least one weight");
  for (int w : weights_) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  }
}

bool WeightedProjectiveStack::is_smooth_variety() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::string to_string(const WeightedProjectiveStack& space) {
  std::string out = "P(";
  for (std::size_t i = 0; i < space.weights().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(space.weights()[i]);
  }
  return out + ")";
}

InertiaSector::InertiaSector(WeightedProjectiveStack space, Rational f) : space_(std::move(space)), f_(std::move(f)) {
  f_.canonicalize();
  if (f_ < 0 || f_ >= 1) throw std::invalid_argument("sector parameter must lie in [0,1), got " + to_string(f_));
  for (std::size_t i = 0; i < space_.weights().size(); ++i) {
    if (is_integer(f_ * space_.weights()[i])) support_.insert(i);
  }
  if (support_.empty())
    throw std::invalid_argument("no sector " + to_string(f_) + " on " + to_string(space_) + ": fixed locus is empty");
}

long InertiaSector::order() const { return f_.get_den().get_si(); }

std::vector<InertiaSector> all_sectors(const WeightedProjectiveStack& space) {
  std::set<Rational> parameters;
  for (int w : space.weights()) {
    for (int j = 0; j < w; ++j) parameters.insert(make_rational(j, w));
  }
  std::vector<InertiaSector> out;
  out.reserve(parameters.size());
  for (const auto& f : parameters) out.emplace_back(space, f);
  return out;
}

InertiaSector mu_sector(const WeightedProjectiveStack& space, int m) {
  if (m <= 0) throw std::invalid_argument("mu_m needs m >= 1");
  return InertiaSector(space, m == 1 ? Rational(0) : make_rational(1, m));
}

Rational age(const InertiaSector& sector) {
  Rational total = 0;
  const auto& weights = sector.space().weights();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!sector.support().contains(i)) total += frac(sector.f() * weights[i]);
  }
  return total;
}

int vdim_degree_zero(const WeightedProjectiveStack& target, int genus, const std::vector<InertiaSector>& markings) {
  if (genus != 0 && genus != 1) throw std::invalid_argument("only genus 0 and 1 are supported");
  Rational vdim = (1 - genus) * (target.dimension() - 3) + static_cast<long>(markings.size());
  for (const auto& s : markings) {
    if (!(s.space() == target)) throw std::invalid_argument("marking sector belongs to another space");
    vdim -= age(s);
  }
  vdim.canonicalize();
  if (!is_integer(vdim))
    throw std::domain_error("non-integer virtual dimension " + to_string(vdim) + ": inconsistent sector data");
  return static_cast<int>(to_long(vdim));
}

bool satisfies_star(const LineBundleOnWPS& bundle) { return bundle.k >= 0; }

bool is_pullback_from_coarse(const LineBundleOnWPS& bundle) {
  const auto& weights = bundle.space.weights();
  return std::all_of(weights.begin(), weights.end(), [&](int w) { return bundle.k % w == 0; });
}

bool is_convex(const LineBundleOnWPS& bundle) {
  if (!satisfies_star(bundle))
    throw std::invalid_argument("convexity criterion assumes the positivity condition; O(" +
                                std::to_string(bundle.k) + ") fails it");
  return is_pullback_from_coarse(bundle);
}

OrbiCurveCharacterBundle::OrbiCurveCharacterBundle(int genus, Rational degree, std::vector<Rational> point_ages)
    : genus_(genus), degree_(std::move(degree)), point_ages_(std::move(point_ages)) {
  if (genus_ < 0) throw std::invalid_argument("negative genus");
  degree_.canonicalize();
  Rational coarse = degree_;
  for (auto& a : point_ages_) {
    a.canonicalize();
    if (a < 0 || a >= 1) throw std::invalid_argument("point age must lie in [0,1), got " + to_string(a));
    coarse -= a;
  }
  if (!is_integer(coarse))
    throw std::invalid_argument("degree minus total age must be an integer, got " + to_string(coarse));
}

long OrbiCurveCharacterBundle::coarse_degree() const {
  Rational coarse = degree_;
  for (const auto& a : point_ages_) coarse -= a;
  return to_long(coarse);
}

OrbiCurveCharacterBundle degree_zero_pullback(const LineBundleOnWPS& bundle, const Rational& f, int points) {
  if (points < 0) throw std::invalid_argument("negative number of marked points");
  const Rational point_age = frac(f * bundle.k);
  return OrbiCurveCharacterBundle(0, 0, std::vector<Rational>(static_cast<std::size_t>(points), point_age));
}

int orbicurve_chi(const OrbiCurveCharacterBundle& bundle) {
  return static_cast<int>(bundle.coarse_degree() + (1 - bundle.genus()));
}

std::pair<int, int> h0_h1_degree_zero(const OrbiCurveCharacterBundle& bundle) {
  if (bundle.genus() != 0) throw std::invalid_argument("h0_h1_degree_zero needs a genus-zero orbicurve");
  if (bundle.degree() != 0) throw std::invalid_argument("h0_h1_degree_zero needs a degree-zero bundle");
  const auto& ages = bundle.point_ages();
  const int h0 = std::all_of(ages.begin(), ages.end(), [](const Rational& a) { return a == 0; }) ? 1 : 0;
  return {h0, h0 - orbicurve_chi(bundle)};
}

}  // namespace qlhp
