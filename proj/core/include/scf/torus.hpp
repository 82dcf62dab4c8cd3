#pragma once

#include <optional>
#include <vector>

#include "scf/group.hpp"
#include "scf/turn.hpp"

namespace scf {

/// An element of the standard maximal torus of a classical group, as the
/// ordered list of its rotation turns. Immutable value; the constructor
/// enforces the type invariants (length == rank, SU sum-zero).
struct TorusElement {
  std::vector<Turn> turns;
  GroupTag group;

  TorusElement(std::vector<Turn> t, GroupTag g);

  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.group == b.group && a.turns == b.turns;
  }
  friend bool operator<(const TorusElement& a, const TorusElement& b) {
    return a.group == b.group ? a.turns < b.turns : a.group < b.group;
  }

  std::string str() const;
};

enum class Parity { Even, Odd };

/// The unique Weyl-orbit representative of a torus element.
///
/// A-types sort the turns; B/C/O fold every turn into [0, 1/2] and sort.
/// D-type folds and sorts, and when no coordinate is self-symmetric (0 or
/// 1/2) the orbit splits in two: the turn list is shared and the fold
/// parity is recorded as `chirality`. Equality compares both.
struct CanonicalForm {
  std::vector<Turn> turns;
  GroupTag group;
  std::optional<Parity> chirality;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.group == b.group && a.turns == b.turns && a.chirality == b.chirality;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b);

  std::string str() const;
};

CanonicalForm canonical_form(const TorusElement& x);

/// An element of the orbit a canonical form denotes: the turn list itself,
/// with one non-self-symmetric coordinate unfolded when chirality is odd.
TorusElement representative(const CanonicalForm& cf);

/// True iff x and y are conjugate in the ambient group. Both tags must
/// equal `group`; mismatches throw invalid_input.
bool conjugate_in(const TorusElement& x, const TorusElement& y, const GroupTag& group);

inline constexpr int kDefaultOrbitRankLimit = 6;

/// The full Weyl orbit, enumerated explicitly (sorted, deduplicated).
/// Refuses ranks above `rank_limit`; the orbit is the small-rank oracle the
/// canonical forms are validated against.
std::vector<TorusElement> weyl_orbit(const TorusElement& x,
                                     int rank_limit = kDefaultOrbitRankLimit);

/// All q-torsion torus elements (every turn a multiple of 1/q), in
/// lexicographic numerator order. SU filters to sum-zero tuples.
std::vector<TorusElement> torsion_elements(const GroupTag& tag, std::int64_t q);

/// Torus inclusions supported by the fusion scan.
enum class EmbeddingRule {
  Identity,        // H = G
  AppendZeroTurn,  // SO(2n-1) inside SO(2n): (t_1..t_{n-1}) -> (t_1..t_{n-1}, 0)
};

TorusElement embed_element(const TorusElement& x, EmbeddingRule rule, const GroupTag& ambient);

/// Exhaustive elementwise fusion test at torsion level q: true iff every
/// pair of q-torsion subgroup elements conjugate in the ambient group is
/// already conjugate in the subgroup. The scan buckets elements by ambient
/// canonical form, so it is linear in the number of elements.
bool fusion_elementwise(const GroupTag& sub, const GroupTag& ambient, EmbeddingRule rule,
                        std::int64_t q, int workers = 1);

}  // namespace scf
