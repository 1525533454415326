#include "qlhp/moduli_models.hpp"

#include <stdexcept>

namespace qlhp {

void validate(const ModuliModel& model) {
  if (!model.ring) throw std::invalid_argument(model.label + ": missing ring");
  if (model.vdim != model.stack_dimension - model.obstruction_rank)
    throw std::invalid_argument(model.label + ": vdim must equal stack dimension minus obstruction rank");
  if (model.gerbe_order < 1) throw std::invalid_argument(model.label + ": gerbe order must be positive");
  for (int s : {model.gerbe_class.first, model.gerbe_class.second}) {
    if (s != 1 && s != -1) throw std::invalid_argument(model.label + ": gerbe class entries must be +1 or -1");
  }
  if (model.obstruction_rank < 0) throw std::invalid_argument(model.label + ": negative obstruction rank");
  if (model.obstruction_euler_c1) {
    const auto& c1 = *model.obstruction_euler_c1;
    if (!(*c1.ring() == *model.ring)) throw std::invalid_argument(model.label + ": obstruction class in wrong ring");
    if (!c1.is_zero() && c1.homogeneous_degree() != 1)
      throw std::invalid_argument(model.label + ": obstruction class must be homogeneous of degree 1");
  }
}

void validate(const InclusionModel& inclusion) {
  validate(inclusion.source);
  validate(inclusion.target);
  const auto& one = inclusion.pushforward_of_one;
  if (!(*one.ring() == *inclusion.target.ring))
    throw std::invalid_argument("iota_* 1 must live in the target ring");
  if (one.is_zero() || one.homogeneous_degree() != inclusion.codimension)
    throw std::invalid_argument("iota_* 1 must be homogeneous of degree equal to the codimension");
  const auto& src = *inclusion.source.ring;
  const auto& dst = *inclusion.target.ring;
  for (const auto& g : src.generators()) {
    const auto it = inclusion.pullback_dictionary.find(g.name);
    if (it == inclusion.pullback_dictionary.end())
      throw std::invalid_argument("generator '" + g.name + "' missing from pullback dictionary");
    const auto index = dst.index_of(it->second);
    if (!index || dst.generators()[*index].degree != g.degree)
      throw std::invalid_argument("dictionary sends '" + g.name + "' to an incompatible generator");
  }
}

GradedClass genus1_degree0_vfc(int target_dimension, const GradedClass& c_total_tangent) {
  const auto& ring = c_total_tangent.ring();
  const auto h = ring->index_of("h");
  if (!h || !ring->index_of("psi")) throw std::invalid_argument("genus-one formula needs generators h and psi");
  if (c_total_tangent.constant_term() != 1) throw std::invalid_argument("total Chern class must start with 1");
  if (target_dimension < 1 || target_dimension >= ring->generators()[*h].nilpotency)
    throw std::invalid_argument("target dimension " + std::to_string(target_dimension) +
                                " exceeds the truncation of h");
  const auto psi = GradedClass::generator(ring, "psi");
  return degree_part(c_total_tangent, target_dimension) - degree_part(c_total_tangent, target_dimension - 1) * psi;
}

GradedClass calibrate_euler_V(const HodgeCalibration& calibration, int gerbe_order) {
  if (gerbe_order < 1) throw std::invalid_argument("gerbe order must be at least 1");
  if (calibration.psi_integral_coarse == 0) throw std::invalid_argument("psi integral must be nonzero");
  const auto& ring = calibration.fiber_restriction_c1.ring();
  const Rational psi_integral_on_gerbe = calibration.psi_integral_coarse / gerbe_order;
  const Rational alpha = -calibration.hodge_integral / psi_integral_on_gerbe;
  return calibration.fiber_restriction_c1 + alpha * GradedClass::generator(ring, "psi");
}

GradedClass degree_zero_vfc(const ModuliModel& model) {
  if (model.obstruction_rank == 0) return GradedClass::one(model.ring);
  if (!model.obstruction_euler_c1) throw std::invalid_argument(model.label + ": no split obstruction data");
  return power(*model.obstruction_euler_c1, model.obstruction_rank);
}

GradedClass virtual_class(const ModuliModel& model) {
  if (model.genus_one) return genus1_degree0_vfc(model.genus_one->target_dimension, model.genus_one->c_total_tangent);
  return degree_zero_vfc(model);
}

GradedClass pushforward(const InclusionModel& inclusion, const GradedClass& a) {
  if (!(*a.ring() == *inclusion.source.ring)) throw std::invalid_argument("pushforward of a class from another ring");
  const auto& src = a.ring()->generators();
  const auto& dst = *inclusion.target.ring;
  GradedClass::Terms lifted;
  for (const auto& [e, c] : a.terms()) {
    Exponents mapped(dst.generator_count(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto it = inclusion.pullback_dictionary.find(src[i].name);
      if (it == inclusion.pullback_dictionary.end())
        throw std::invalid_argument("class not in dictionary image: generator '" + src[i].name + "' unmapped");
      mapped[*dst.index_of(it->second)] += e[i];
    }
    if (!dst.is_valid_monomial(mapped)) throw std::invalid_argument("class not in dictionary image: " + to_string(a));
    lifted[mapped] += c;
  }
  return GradedClass(inclusion.target.ring, std::move(lifted)) * inclusion.pushforward_of_one;
}

// ---------------------------------------------------------------- named examples

namespace {

const Rational kHalf = make_rational(1, 2);

std::vector<InertiaSector> mu2_markings(const WeightedProjectiveStack& space, int count) {
  return std::vector<InertiaSector>(static_cast<std::size_t>(count), mu_sector(space, 2));
}

std::vector<InertiaSector> untwisted_markings(const WeightedProjectiveStack& space, int count) {
  return std::vector<InertiaSector>(static_cast<std::size_t>(count), mu_sector(space, 1));
}

RingPtr product_with_m04(int projective_dimension, const Rational& normalization) {
  return make_ring({{"h", 1, projective_dimension + 1}, {"psi", 1, 2}}, normalization);
}

// Obstruction line bundle on P(2,...,2) x M_{0,4}: restricts to O(1), with
// c_1 = 1/2 h, on the projective fiber and to the dual Hodge bundle on the
// (B mu_2)_{0,4} fiber.
GradedClass calibrated_obstruction_class(const RingPtr& ring, int gerbe_order) {
  const HodgeCalibration calibration{kHalf * GradedClass::generator(ring, "h"), make_rational(1, 4), Rational(1)};
  return calibrate_euler_V(calibration, gerbe_order);
}

const std::map<std::string, std::string> kIdentityHPsi{{"h", "h"}, {"psi", "psi"}};

NamedExample quintic_genus1() {
  const WeightedProjectiveStack p4({1, 1, 1, 1, 1});
  // Integral of psi over M_{1,1} is 1/24; the quintic has degree 5.
  const auto x_ring = make_ring({{"h", 1, 5}, {"psi", 1, 2}}, make_rational(1, 24));
  const auto y_ring = make_ring({{"h", 1, 4}, {"psi", 1, 2}}, make_rational(5, 24));

  const auto h_x = GradedClass::generator(x_ring, "h");
  const GradedClass c_tx = total_chern(SplitBundle(x_ring, std::vector<GradedClass>(5, h_x)));
  const auto h_y = GradedClass::generator(y_ring, "h");
  const GradedClass c_ty = chern_quotient(restrict_to_ring(c_tx, y_ring), GradedClass::one(y_ring) + 5 * h_y);

  ModuliModel x{.label = "X_{1,1,0} = P^4 x M_{1,1}",
                .ring = x_ring,
                .stack_dimension = 5,
                .vdim = 1,
                .genus = 1,
                .obstruction_rank = 4,
                .genus_one = GenusOneData{4, c_tx},
                .target = p4,
                .markings = untwisted_markings(p4, 1)};
  ModuliModel y{.label = "Y_{1,1,0} = Q x M_{1,1}",
                .ring = y_ring,
                .stack_dimension = 4,
                .vdim = 1,
                .genus = 1,
                .obstruction_rank = 3,
                .genus_one = GenusOneData{3, c_ty}};
  InclusionModel inclusion{y, x, 1, 5 * h_x, kIdentityHPsi};
  return NamedExample{.name = "quintic-genus1",
                      .citation = "quintic threefold in P^4, genus one, degree zero: classes not proportional",
                      .ambient = p4,
                      .bundle_degrees = {5},
                      .x = x,
                      .y = y,
                      .inclusion = inclusion,
                      .bundle_euler_class = std::nullopt};
}

NamedExample p1122_trivial() {
  const WeightedProjectiveStack px({1, 1, 2, 2});
  const WeightedProjectiveStack py({1, 2, 2});
  // Degree-zero mu_2 maps land in the fixed locus P(2,2), coarse P^1.
  const auto x_ring = product_with_m04(1, kHalf);
  const auto y_ring = product_with_m04(1, kHalf);
  const auto c1_x = calibrated_obstruction_class(x_ring, 2);

  ModuliModel x{.label = "X_{0,4,0} over P^1 x M_{0,4}",
                .ring = x_ring,
                .stack_dimension = 2,
                .vdim = 0,
                .gerbe_order = 2,
                .gerbe_class = {-1, 1},
                .obstruction_rank = 2,
                .obstruction_euler_c1 = c1_x,
                .target = px,
                .markings = mu2_markings(px, 4)};
  ModuliModel y{.label = "Y_{0,4,0} over P^1 x M_{0,4}",
                .ring = y_ring,
                .stack_dimension = 2,
                .vdim = 1,
                .gerbe_order = 2,
                .gerbe_class = {-1, 1},
                .obstruction_rank = 1,
                .obstruction_euler_c1 = restrict_to_ring(c1_x, y_ring),
                .target = py,
                .markings = mu2_markings(py, 4)};
  InclusionModel inclusion{y, x, 0, GradedClass::one(x_ring), kIdentityHPsi, true};
  return NamedExample{.name = "p1122-trivial",
                      .citation = "P(1,2,2) in P(1,1,2,2), four mu_2 points: vdims 0 and 1",
                      .ambient = px,
                      .bundle_degrees = {1},
                      .x = x,
                      .y = y,
                      .inclusion = inclusion,
                      .bundle_euler_class = std::nullopt};
}

NamedExample p1112222_nontrivial() {
  const WeightedProjectiveStack px({1, 1, 1, 2, 2, 2, 2});
  const WeightedProjectiveStack py({1, 1, 2, 2, 2});
  const auto x_ring = product_with_m04(3, kHalf);
  const auto y_ring = product_with_m04(2, kHalf);
  const auto c1_x = calibrated_obstruction_class(x_ring, 2);

  ModuliModel x{.label = "X_{0,4,0} = P(2,2,2,2) x M_{0,4}",
                .ring = x_ring,
                .stack_dimension = 4,
                .vdim = 1,
                .gerbe_order = 2,
                .gerbe_class = {-1, 1},
                .obstruction_rank = 3,
                .obstruction_euler_c1 = c1_x,
                .target = px,
                .markings = mu2_markings(px, 4)};
  ModuliModel y{.label = "Y_{0,4,0} = P(2,2,2) x M_{0,4}",
                .ring = y_ring,
                .stack_dimension = 3,
                .vdim = 1,
                .gerbe_order = 2,
                .gerbe_class = {-1, 1},
                .obstruction_rank = 2,
                .obstruction_euler_c1 = restrict_to_ring(c1_x, y_ring),
                .target = py,
                .markings = mu2_markings(py, 4)};
  InclusionModel inclusion{y, x, 1, GradedClass::generator(x_ring, "h"), kIdentityHPsi};
  return NamedExample{.name = "p1112222-nontrivial",
                      .citation = "P(1,1,2,2,2) in P(1,1,1,2,2,2,2) cut by O(1)+O(2): classes not proportional",
                      .ambient = px,
                      .bundle_degrees = {1, 2},
                      .x = x,
                      .y = y,
                      .inclusion = inclusion,
                      .bundle_euler_class = std::nullopt};
}

NamedExample convex_control() {
  const WeightedProjectiveStack p3({1, 1, 1, 1});
  const WeightedProjectiveStack p2({1, 1, 1});
  // M_{0,3} is a point, so the moduli spaces are P^3 and P^2.
  const auto x_ring = make_ring({{"h", 1, 4}});
  const auto y_ring = make_ring({{"h", 1, 3}});
  const auto h = GradedClass::generator(x_ring, "h");

  ModuliModel x{.label = "X_{0,3,0} = P^3",
                .ring = x_ring,
                .stack_dimension = 3,
                .vdim = 3,
                .target = p3,
                .markings = untwisted_markings(p3, 3)};
  ModuliModel y{.label = "Y_{0,3,0} = P^2",
                .ring = y_ring,
                .stack_dimension = 2,
                .vdim = 2,
                .target = p2,
                .markings = untwisted_markings(p2, 3)};
  InclusionModel inclusion{y, x, 1, h, {{"h", "h"}}};
  return NamedExample{.name = "convex-control",
                      .citation = "hyperplane P^2 in P^3 cut by O(1), genus zero, degree zero: convex control",
                      .ambient = p3,
                      .bundle_degrees = {1},
                      .x = x,
                      .y = y,
                      .inclusion = inclusion,
                      .bundle_euler_class = euler_class(SplitBundle(x_ring, {h}))};
}

}  // namespace

const std::vector<std::string>& named_model_ids() {
  static const std::vector<std::string> ids{"quintic-genus1", "p1122-trivial", "p1112222-nontrivial",
                                            "convex-control"};
  return ids;
}

NamedExample build_named_model(std::string_view name) {
  NamedExample example = [&] {
    if (name == "quintic-genus1") return quintic_genus1();
    if (name == "p1122-trivial") return p1122_trivial();
    if (name == "p1112222-nontrivial") return p1112222_nontrivial();
    if (name == "convex-control") return convex_control();
    throw std::invalid_argument("unknown example '" + std::string(name) + "'");
  }();
  validate(example.inclusion);
  return example;
}

}  // namespace qlhp
