#pragma once

// Exact arithmetic in truncated graded-commutative rings
//
//     Q[g_1, ..., g_k] / (g_1^{n_1}, ..., g_k^{n_k})
//
// where each generator g_i has a positive complex degree. These rings model
// the rational cohomology of the coarse moduli spaces handled by the checker
// (products of projective spaces with moduli of curves). A class is a sparse
// map from exponent vectors to exact rationals; inhomogeneous classes such as
// total Chern classes are ordinary values.

#include "qlhp/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlhp {

using Exponents = std::vector<int>;

struct Generator {
  std::string name;
  int degree = 1;      ///< complex degree
  int nilpotency = 1;  ///< g^nilpotency = 0

  bool operator==(const Generator&) const = default;
};

/// Generators, nilpotency orders and the value of the integral of the top
/// monomial (coarse integral times any gerbe factor).
class RingDescriptor {
 public:
  explicit RingDescriptor(std::vector<Generator> generators, Rational integration_normalization = 1);

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  const Rational& integration_normalization() const { return normalization_; }

  /// Sum over generators of degree * (nilpotency - 1).
  int top_degree() const { return top_degree_; }
  Exponents top_monomial() const;

  std::optional<std::size_t> index_of(std::string_view name) const;
  int degree_of(const Exponents& exponents) const;
  bool is_valid_monomial(const Exponents& exponents) const;

  /// Monomials of total degree exactly `degree`, in canonical order.
  std::vector<Exponents> basis(int degree) const;
  /// Dimension of the ring as a Q-vector space.
  std::size_t dimension() const;

  bool operator==(const RingDescriptor& other) const;

 private:
  std::vector<Generator> generators_;
  Rational normalization_;
  int top_degree_ = 0;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

RingPtr make_ring(std::vector<Generator> generators, Rational integration_normalization = 1);

/// Canonical term order: total degree ascending, then exponent vectors
/// lexicographically descending in generator order (h^3 before h^2*psi).
struct CanonicalOrder {
  const RingDescriptor* ring;
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class GradedClass {
 public:
  using Terms = std::map<Exponents, Rational>;

  /// The zero class.
  explicit GradedClass(RingPtr ring);
  GradedClass(RingPtr ring, Terms terms);

  static GradedClass constant(RingPtr ring, const Rational& value);
  static GradedClass one(RingPtr ring) { return constant(std::move(ring), 1); }
  static GradedClass generator(RingPtr ring, std::string_view name);
  static GradedClass monomial(RingPtr ring, Exponents exponents, const Rational& coefficient = 1);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& exponents) const;
  Rational constant_term() const;

  /// True for zero and for classes whose terms share one total degree.
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous class; nullopt otherwise.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  /// Terms in canonical order.
  std::vector<std::pair<Exponents, Rational>> sorted_terms() const;

  GradedClass operator-() const;
  friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const Rational& s, const GradedClass& a);

  bool operator==(const GradedClass& other) const;

 private:
  RingPtr ring_;
  Terms terms_;
};

/// Throws std::invalid_argument when the rings differ.
void require_same_ring(const GradedClass& a, const GradedClass& b);

GradedClass add(const GradedClass& a, const GradedClass& b);
GradedClass mul(const GradedClass& a, const GradedClass& b);
GradedClass power(const GradedClass& a, int exponent);

/// Terms of total degree exactly `degree`.
GradedClass degree_part(const GradedClass& a, int degree);
/// Terms of total degree at most `degree`.
GradedClass truncate_above(const GradedClass& a, int degree);

/// b with a * b = 1. Requires constant term 1.
GradedClass truncated_inverse(const GradedClass& a);

/// Coefficient of the top monomial times the ring's integration normalization.
Rational integrate(const GradedClass& a);

/// lambda with a = lambda * b. (0, 0) gives 0.
std::optional<Rational> is_scalar_multiple(const GradedClass& a, const GradedClass& b);

/// Some e with b * e = a, by exact elimination over the monomial basis in
/// degree deg(a) - deg(b). Both inputs must be homogeneous.
std::optional<GradedClass> solve_cap_equation(const GradedClass& a, const GradedClass& b);

/// Canonical text form, e.g. "1/8*h^3 - 3/8*h^2*psi"; zero prints as "0".
std::string to_string(const GradedClass& a);

}  // namespace qlhp
