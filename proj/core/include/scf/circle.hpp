#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scf/torus.hpp"
#include "scf/verdict.hpp"

namespace scf {

/// Exponent sequence of a circle subgroup of U(n): the subgroup whose
/// element at parameter z is diag(z^a_1, ..., z^a_n). Non-decreasing,
/// nonnegative, unit gcd over the nonzero entries.
struct WeightSequence {
  std::vector<std::int64_t> weights;

  explicit WeightSequence(std::vector<std::int64_t> w);

  size_t size() const { return weights.size(); }
  std::int64_t max_weight() const { return weights.empty() ? 0 : weights.back(); }
  std::string str() const;

  friend bool operator==(const WeightSequence& a, const WeightSequence& b) {
    return a.weights == b.weights;
  }
};

/// Sorts and divides out the gcd of the nonzero entries. Rejects empty,
/// negative, and all-zero input.
WeightSequence normalize_weights(std::vector<std::int64_t> raw);

/// The pair (m, k), 1 < k < m, with k*a == a (mod m) as residue multisets;
/// permutation[i] = j realizes k*a_i == a_j (mod m).
struct CongruenceWitness {
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::vector<size_t> permutation;

  friend bool operator==(const CongruenceWitness&, const CongruenceWitness&) = default;
};

using CircleVerdict = ScfVerdict<CongruenceWitness>;

/// Scans m = 3..m_max, k = 2..m-1 in lexicographic order and returns the
/// first congruence witness, or Holds(m_max) when none exists below the
/// bound. A Fails verdict certifies a genuine SCF failure; Holds only says
/// no failure occurs at modulus <= m_max.
CircleVerdict decide_scf_circle(const WeightSequence& a, std::int64_t m_max, int workers = 1);

/// Re-checks a witness from scratch: residue multisets match, the realized
/// torus elements h(z), h(w) are conjugate in U(n), and h(z) != h(w)
/// componentwise.
bool verify_witness_circle(const WeightSequence& a, const CongruenceWitness& w);

/// The elements h(e^{2 pi i/m}) and h(e^{2 pi i k/m}) as U(n) torus elements.
std::pair<TorusElement, TorusElement> realized_pair(const WeightSequence& a, std::int64_t m,
                                                    std::int64_t k);

/// The constant c with {c - a_i} = {a_i} as multisets, when one exists
/// (necessarily c = 2*mean(a)). Every m >= 3 dividing c then yields the
/// witness (m, m-1).
std::optional<std::int64_t> reflection_constant(const WeightSequence& a);

/// True iff the weight multiset is symmetric under a |-> c - a for some c.
bool negation_symmetric(const WeightSequence& a);

/// Default search bound for the CLI: n * max(a)^2, floored at 3.
std::int64_t default_modulus_bound(const WeightSequence& a);

}  // namespace scf
