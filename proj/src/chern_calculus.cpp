#include "qlhp/chern_calculus.hpp"

#include <stdexcept>

namespace qlhp {

SplitBundle::SplitBundle(RingPtr ring, std::vector<GradedClass> first_chern_classes)
    : ring_(std::move(ring)), summands_(std::move(first_chern_classes)) {
  for (const auto& c1 : summands_) {
    if (!(*c1.ring() == *ring_)) throw std::invalid_argument("split bundle summand lives in another ring");
    if (!c1.is_zero() && c1.homogeneous_degree() != 1)
      throw std::invalid_argument("first Chern class must be homogeneous of degree 1: " + to_string(c1));
  }
}

SplitBundle SplitBundle::direct_sum(const SplitBundle& other) const {
  if (!(*ring_ == *other.ring_)) throw std::invalid_argument("direct sum of bundles in different rings");
  auto summands = summands_;
  summands.insert(summands.end(), other.summands_.begin(), other.summands_.end());
  return SplitBundle(ring_, std::move(summands));
}

GradedClass total_chern(const SplitBundle& bundle) {
  const auto one = GradedClass::one(bundle.ring());
  GradedClass c = one;
  for (const auto& c1 : bundle.summand_first_chern_classes()) c = c * (one + c1);
  return c;
}

GradedClass euler_class(const SplitBundle& bundle) {
  GradedClass e = GradedClass::one(bundle.ring());
  for (const auto& c1 : bundle.summand_first_chern_classes()) e = e * c1;
  return e;
}

GradedClass chern_quotient(const GradedClass& c_total_ambient, const GradedClass& c_total_sub) {
  if (c_total_ambient.constant_term() != 1 || c_total_sub.constant_term() != 1)
    throw std::invalid_argument("total Chern classes must have constant term 1");
  return c_total_ambient * truncated_inverse(c_total_sub);
}

GradedClass chern_quotient(const GradedClass& c_total_ambient, const GradedClass& c_total_sub, int max_degree) {
  return truncate_above(chern_quotient(c_total_ambient, c_total_sub), max_degree);
}

GradedClass restrict_to_ring(const GradedClass& a, const RingPtr& target,
                             const std::map<std::string, std::string>& dictionary) {
  const auto& source_gens = a.ring()->generators();
  std::vector<std::size_t> image(source_gens.size());
  for (std::size_t i = 0; i < source_gens.size(); ++i) {
    const auto it = dictionary.find(source_gens[i].name);
    const std::string& name = it == dictionary.end() ? source_gens[i].name : it->second;
    const auto index = target->index_of(name);
    if (!index) throw std::invalid_argument("generator '" + name + "' missing from target ring");
    if (target->generators()[*index].degree != source_gens[i].degree)
      throw std::invalid_argument("generator '" + name + "' changes degree under the dictionary");
    image[i] = *index;
  }
  GradedClass::Terms terms;
  for (const auto& [e, c] : a.terms()) {
    Exponents mapped(target->generator_count(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) mapped[image[i]] += e[i];
    // Out-of-range exponents are dropped by the GradedClass constructor.
    terms[mapped] += c;
  }
  return GradedClass(target, std::move(terms));
}

}  // namespace qlhp
