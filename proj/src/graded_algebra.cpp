#include "qlhp/graded_algebra.hpp"

#include "qlhp/linear_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qlhp {

// ---------------------------------------------------------------- ring

RingDescriptor::RingDescriptor(std::vector<Generator> generators, Rational integration_normalization)
    : generators_(std::move(generators)), normalization_(std::move(integration_normalization)) {
  normalization_.canonicalize();
  if (normalization_ == 0) throw std::invalid_argument("integration normalization must be nonzero");
  std::set<std::string> names;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw std::invalid_argument("generator with empty name");
    if (g.degree <= 0) throw std::invalid_argument("generator '" + g.name + "' must have positive degree");
    if (g.nilpotency <= 0) throw std::invalid_argument("generator '" + g.name + "' must have positive nilpotency");
    if (!names.insert(g.name).second) throw std::invalid_argument("duplicate generator '" + g.name + "'");
    top_degree_ += g.degree * (g.nilpotency - 1);
  }
}

Exponents RingDescriptor::top_monomial() const {
  Exponents e;
  e.reserve(generators_.size());
  for (const auto& g : generators_) e.push_back(g.nilpotency - 1);
  return e;
}

std::optional<std::size_t> RingDescriptor::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

int RingDescriptor::degree_of(const Exponents& exponents) const {
  int d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) d += exponents[i] * generators_[i].degree;
  return d;
}

bool RingDescriptor::is_valid_monomial(const Exponents& exponents) const {
  if (exponents.size() != generators_.size()) return false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] >= generators_[i].nilpotency) return false;
  }
  return true;
}

std::vector<Exponents> RingDescriptor::basis(int degree) const {
  std::vector<Exponents> out;
  if (degree < 0 || degree > top_degree_) return out;
  Exponents e(generators_.size(), 0);
  // Odometer over all exponent vectors.
  while (true) {
    if (degree_of(e) == degree) out.push_back(e);
    std::size_t i = 0;
    for (; i < e.size(); ++i) {
      if (++e[i] < generators_[i].nilpotency) break;
      e[i] = 0;
    }
    if (i == e.size()) break;
  }
  std::sort(out.begin(), out.end(), CanonicalOrder{this});
  return out;
}

std::size_t RingDescriptor::dimension() const {
  std::size_t dim = 1;
  for (const auto& g : generators_) dim *= static_cast<std::size_t>(g.nilpotency);
  return dim;
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
  return generators_ == other.generators_ && normalization_ == other.normalization_;
}

RingPtr make_ring(std::vector<Generator> generators, Rational integration_normalization) {
  return std::make_shared<const RingDescriptor>(std::move(generators), std::move(integration_normalization));
}

bool CanonicalOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = ring->degree_of(a);
  const int db = ring->degree_of(b);
  if (da != db) return da < db;
  return b < a;
}

// ---------------------------------------------------------------- class

GradedClass::GradedClass(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("class without a ring");
}

GradedClass::GradedClass(RingPtr ring, Terms terms) : GradedClass(std::move(ring)) {
  for (auto& [exponents, coefficient] : terms) {
    if (!ring_->is_valid_monomial(exponents)) {
      // Monomials at or above a nilpotency order are zero; negative or
      // wrongly sized exponent vectors are errors.
      if (exponents.size() != ring_->generator_count())
        throw std::invalid_argument("exponent vector has wrong length");
      for (int x : exponents) {
        if (x < 0) throw std::invalid_argument("negative exponent");
      }
      continue;
    }
    coefficient.canonicalize();
    if (coefficient != 0) terms_[exponents] += coefficient;
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

GradedClass GradedClass::constant(RingPtr ring, const Rational& value) {
  const Exponents zero(ring->generator_count(), 0);
  return GradedClass(std::move(ring), Terms{{zero, value}});
}

GradedClass GradedClass::generator(RingPtr ring, std::string_view name) {
  const auto index = ring->index_of(name);
  if (!index) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  Exponents e(ring->generator_count(), 0);
  e[*index] = 1;
  return GradedClass(std::move(ring), Terms{{e, Rational(1)}});
}

GradedClass GradedClass::monomial(RingPtr ring, Exponents exponents, const Rational& coefficient) {
  return GradedClass(std::move(ring), Terms{{std::move(exponents), coefficient}});
}

Rational GradedClass::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedClass::constant_term() const { return coefficient(Exponents(ring_->generator_count(), 0)); }

bool GradedClass::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = ring_->degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return ring_->degree_of(kv.first) == d; });
}

std::optional<int> GradedClass::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return ring_->degree_of(terms_.begin()->first);
}

int GradedClass::max_degree() const {
  int d = -1;
  for (const auto& kv : terms_) d = std::max(d, ring_->degree_of(kv.first));
  return d;
}

std::vector<std::pair<Exponents, Rational>> GradedClass::sorted_terms() const {
  std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [order = CanonicalOrder{ring_.get()}](const auto& a, const auto& b) { return order(a.first, b.first); });
  return out;
}

GradedClass GradedClass::operator-() const {
  GradedClass out(ring_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a, b);
  GradedClass out = a;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = out.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

GradedClass operator-(const GradedClass& a, const GradedClass& b) { return a + (-b); }

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a, b);
  const auto& ring = *a.ring_;
  GradedClass out(a.ring_);
  Exponents e(ring.generator_count());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool vanishes = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] >= ring.generators()[i].nilpotency) {
          vanishes = true;
          break;
        }
      }
      if (vanishes) continue;
      out.terms_[e] += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GradedClass operator*(const Rational& s, const GradedClass& a) {
  GradedClass out(a.ring_);
  if (s == 0) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, s * c);
  return out;
}

bool GradedClass::operator==(const GradedClass& other) const {
  return *ring_ == *other.ring_ && terms_ == other.terms_;
}

// ---------------------------------------------------------------- operations

void require_same_ring(const GradedClass& a, const GradedClass& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring()))
    throw std::invalid_argument("classes live in different rings");
}

GradedClass add(const GradedClass& a, const GradedClass& b) { return a + b; }

GradedClass mul(const GradedClass& a, const GradedClass& b) { return a * b; }

GradedClass power(const GradedClass& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative power");
  GradedClass out = GradedClass::one(a.ring());
  GradedClass base = a;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) out = out * base;
    if (e > 1) base = base * base;
  }
  return out;
}

GradedClass degree_part(const GradedClass& a, int degree) {
  GradedClass::Terms kept;
  for (const auto& [e, c] : a.terms()) {
    if (a.ring()->degree_of(e) == degree) kept.emplace(e, c);
  }
  return GradedClass(a.ring(), std::move(kept));
}

GradedClass truncate_above(const GradedClass& a, int degree) {
  GradedClass::Terms kept;
  for (const auto& [e, c] : a.terms()) {
    if (a.ring()->degree_of(e) <= degree) kept.emplace(e, c);
  }
  return GradedClass(a.ring(), std::move(kept));
}

GradedClass truncated_inverse(const GradedClass& a) {
  if (a.constant_term() != 1)
    throw std::invalid_argument("truncated_inverse needs constant term 1, got " + to_string(a.constant_term()));
  // a = 1 + n with n nilpotent: a^{-1} = sum_k (-n)^k.
  const GradedClass minus_n = GradedClass::one(a.ring()) - a;
  GradedClass result = GradedClass::one(a.ring());
  GradedClass term = result;
  while (true) {
    term = term * minus_n;
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

Rational integrate(const GradedClass& a) {
  return a.coefficient(a.ring()->top_monomial()) * a.ring()->integration_normalization();
}

std::optional<Rational> is_scalar_multiple(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a, b);
  if (b.is_zero()) {
    if (a.is_zero()) return Rational(0);
    return std::nullopt;
  }
  const auto& [e, c] = *b.terms().begin();
  const Rational lambda = a.coefficient(e) / c;
  if (a == lambda * b) return lambda;
  return std::nullopt;
}

std::optional<GradedClass> solve_cap_equation(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a, b);
  if (!a.is_homogeneous() || !b.is_homogeneous())
    throw std::invalid_argument("solve_cap_equation needs homogeneous inputs");
  const auto& ring = a.ring();
  if (a.is_zero()) return GradedClass(ring);
  if (b.is_zero()) return std::nullopt;
  const int required = *a.homogeneous_degree() - *b.homogeneous_degree();
  if (required < 0) return std::nullopt;

  const auto unknowns = ring->basis(required);
  const auto rows = ring->basis(*a.homogeneous_degree());
  if (unknowns.empty()) return std::nullopt;

  RationalMatrix matrix(rows.size(), std::vector<Rational>(unknowns.size(), Rational(0)));
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const GradedClass product = b * GradedClass::monomial(ring, unknowns[col]);
    for (std::size_t row = 0; row < rows.size(); ++row) matrix[row][col] = product.coefficient(rows[row]);
  }
  std::vector<Rational> rhs;
  rhs.reserve(rows.size());
  for (const auto& m : rows) rhs.push_back(a.coefficient(m));

  const auto x = solve_linear_system(std::move(matrix), std::move(rhs), unknowns.size());
  if (!x) return std::nullopt;
  GradedClass::Terms terms;
  for (std::size_t i = 0; i < unknowns.size(); ++i) terms.emplace(unknowns[i], (*x)[i]);
  return GradedClass(ring, std::move(terms));
}

std::string to_string(const GradedClass& a) {
  if (a.is_zero()) return "0";
  const auto& gens = a.ring()->generators();
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : a.sorted_terms()) {
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += gens[i].name;
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    const Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (monomial.empty()) {
      out << to_string(magnitude);
    } else if (magnitude == 1) {
      out << monomial;
    } else {
      out << to_string(magnitude) << "*" << monomial;
    }
    first = false;
  }
  return out.str();
}

}  // namespace qlhp
