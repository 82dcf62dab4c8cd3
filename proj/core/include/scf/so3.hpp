#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scf/torus.hpp"
#include "scf/verdict.hpp"

namespace scf {

/// Multiplicity-free description of a direct sum of irreducible real
/// representations of the rotation group of 3-space: spins a_1 <= ... <= a_s,
/// each summand of dimension 2*a_j + 1.
struct SpinSequence {
  std::vector<int> spins;

  explicit SpinSequence(std::vector<int> s);

  int spin_sum() const;
  std::string str() const;

  friend bool operator==(const SpinSequence&, const SpinSequence&) = default;
};

/// How a rotation by theta acts on the ambient space: one rotation plane
/// with angle c*theta per coefficient, plus fixed_count fixed vectors.
/// coefficients = the multiset union of {1..a_j} over the summands.
struct AngleProfile {
  std::vector<int> coefficients;  // ascending
  int fixed_count = 0;
  int ambient_dim = 0;
  GroupTag ambient;
};

AngleProfile expand_profile(const SpinSequence& a);

/// The image of the rotation by `theta` in the ambient orthogonal group's
/// torus: turns c*theta per coefficient (ascending), zero-padded for the
/// paired fixed vectors.
TorusElement image_element(const SpinSequence& a, const Turn& theta);

/// Distinct angle classes theta = p/q, phi = p'/q whose images become
/// conjugate in the ambient group: p' != +-p (mod q) yet the folded
/// coefficient-angle multisets coincide.
struct So3Witness {
  std::int64_t q = 0;
  std::int64_t p = 0;
  std::int64_t p_prime = 0;

  friend bool operator==(const So3Witness&, const So3Witness&) = default;
};

using So3Verdict = ScfVerdict<So3Witness>;

/// Scans q = 3..q_max and all pairs p, p' in (0, q) with p' != +-p (mod q),
/// returning the first witness in lexicographic (q, p, p') order or
/// Holds(q_max). Folded-multiset equality is exactly ambient conjugacy here:
/// every profile keeps at least one +1 eigenvalue, so the even-orthogonal
/// chirality bit never binds, and odd ambient groups have none.
So3Verdict decide_scf_so3(const SpinSequence& a, std::int64_t q_max, int workers = 1);

/// Re-checks a witness through the torus core: images conjugate in the
/// ambient group while p' != +-p (mod q) (not conjugate as rotations).
bool verify_witness_so3(const SpinSequence& a, const So3Witness& w);

/// All nondecreasing positive sequences with sum <= sum_max, ordered by sum
/// then lexicographically.
std::vector<SpinSequence> spin_sequences_up_to(int sum_max);

struct So3SearchEntry {
  SpinSequence spins;
  So3Verdict verdict;
};

/// Classifies every spin sequence with sum <= sum_max by decide_scf_so3 at
/// the given bound.
std::vector<So3SearchEntry> search_open_question(int sum_max, std::int64_t q_max,
                                                 int workers = 1);

}  // namespace scf
