#pragma once

#include "qlhp/graded_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace qlhp {

/// A direct sum of line bundles, recorded by the first Chern class of each
/// summand. The empty sum is the rank-0 bundle.
class SplitBundle {
 public:
  SplitBundle(RingPtr ring, std::vector<GradedClass> first_chern_classes = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<GradedClass>& summand_first_chern_classes() const { return summands_; }
  std::size_t rank() const { return summands_.size(); }

  SplitBundle direct_sum(const SplitBundle& other) const;

 private:
  RingPtr ring_;
  std::vector<GradedClass> summands_;
};

/// prod_j (1 + c1_j).
GradedClass total_chern(const SplitBundle& bundle);

/// Product of the summands' first Chern classes.
GradedClass euler_class(const SplitBundle& bundle);

/// c(ambient) / c(sub) in the ring the arguments live in; pass classes already
/// restricted to the subvariety's ring to get the subvariety's truncation.
GradedClass chern_quotient(const GradedClass& c_total_ambient, const GradedClass& c_total_sub);

/// As above, additionally dropping terms above `max_degree`.
GradedClass chern_quotient(const GradedClass& c_total_ambient, const GradedClass& c_total_sub, int max_degree);

/// Component of complex degree k of a total Chern class.
inline GradedClass chern_component(const GradedClass& c_total, int k) { return degree_part(c_total, k); }

/// Rewrites `a` into `target`, sending each source generator to the target
/// generator named by `dictionary` (identity on names when absent). Monomials
/// that hit a target nilpotency order vanish, which is the restriction i^* for
/// rings of the form Q[h]/(h^n) -> Q[h]/(h^m), m <= n.
GradedClass restrict_to_ring(const GradedClass& a, const RingPtr& target,
                             const std::map<std::string, std::string>& dictionary = {});

}  // namespace qlhp
