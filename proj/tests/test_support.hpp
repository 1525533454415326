#pragma once

// Shared fixtures and independent oracles for the test suites.

#include "qlhp/graded_algebra.hpp"
#include "qlhp/orbifold_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace qlhp::testing {

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

/// Q[h, psi]/(h^h_nil, psi^psi_nil) with the given normalization.
inline RingPtr h_psi_ring(int h_nil, int psi_nil = 2, Rational normalization = 1) {
  return make_ring({{"h", 1, h_nil}, {"psi", 1, psi_nil}}, std::move(normalization));
}

inline RingPtr h_ring(int h_nil) { return make_ring({{"h", 1, h_nil}}); }

/// Random class with small integer-over-small-denominator coefficients on a
/// random subset of the monomial basis.
inline GradedClass random_class(const RingPtr& ring, std::mt19937& rng, int max_terms = 4) {
  std::vector<Exponents> all;
  for (int d = 0; d <= ring->top_degree(); ++d) {
    for (auto& m : ring->basis(d)) all.push_back(m);
  }
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  GradedClass::Terms terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms[all[pick(rng)]] += q(num(rng), den(rng));
  return GradedClass(ring, std::move(terms));
}

/// Random homogeneous class of the given degree.
inline GradedClass random_homogeneous(const RingPtr& ring, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  GradedClass::Terms terms;
  for (auto& m : ring->basis(degree)) terms[m] = q(num(rng));
  return GradedClass(ring, std::move(terms));
}

// ---------------------------------------------------------------- rank oracle
//
// Rank by brute force over minors, each determinant expanded by the Leibniz
// permutation formula. Shares no code with the elimination in the library.

inline Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational product = 1;
    for (std::size_t i = 0; i < n; ++i) product *= m[i][perm[i]];
    total += (inversions % 2 ? -1 : 1) * product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::size_t minor_rank(const std::vector<std::vector<Rational>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, row_sets);
    subsets(cols, k, 0, cur, col_sets);
    for (const auto& rs : row_sets) {
      for (const auto& cs : col_sets) {
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
        if (leibniz_det(sub) != 0) return k;
      }
    }
  }
  return 0;
}

/// Whether b * e = a has a solution, by Rouche-Capelli over the basis of the
/// needed degree with ranks from minors.
inline bool cap_equation_solvable_oracle(const GradedClass& a, const GradedClass& b) {
  const auto& ring = a.ring();
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  const int required = *a.homogeneous_degree() - *b.homogeneous_degree();
  const auto unknowns = ring->basis(required);
  if (unknowns.empty()) return false;
  const auto rows = ring->basis(*a.homogeneous_degree());
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(unknowns.size()));
  std::vector<std::vector<Rational>> augmented(rows.size(), std::vector<Rational>(unknowns.size() + 1));
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    // b * monomial computed by hand from b's terms.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational entry = 0;
      for (const auto& [e, coeff] : b.terms()) {
        bool match = true;
        for (std::size_t i = 0; i < e.size(); ++i) match = match && e[i] + unknowns[c][i] == rows[r][i];
        if (match) entry += coeff;
      }
      m[r][c] = entry;
      augmented[r][c] = entry;
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) augmented[r][unknowns.size()] = a.coefficient(rows[r]);
  return minor_rank(m) == minor_rank(augmented);
}

// ---------------------------------------------------------------- convexity oracle

/// h^1 of f^*O(k) on degree-zero genus-zero test curves: for every nontrivial
/// sector of the space, 2m orbifold points of order m. Convex iff all vanish.
inline bool convex_by_h1_oracle(const LineBundleOnWPS& bundle) {
  for (const auto& sector : all_sectors(bundle.space)) {
    if (sector.f() == 0) continue;
    const int points = static_cast<int>(2 * sector.order());
    const auto pulled = degree_zero_pullback(bundle, sector.f(), points);
    if (h0_h1_degree_zero(pulled).second != 0) return false;
  }
  return true;
}

}  // namespace qlhp::testing
