#pragma once

#include <cstdint>
#include <string>
#include <tuple>

#include "scf/errors.hpp"

namespace scf {

/// The classical families whose maximal-torus conjugacy the library models.
enum class GroupFamily {
  UnitaryA,        // U(n), torus = n independent turns
  SpecialUnitaryA, // SU(n), n turns summing to 0 mod 1
  OddOrthogonalB,  // SO(2r+1)
  SymplecticC,     // Sp(r)
  EvenOrthogonalD, // SO(2r)
  FullOrthogonal,  // O(n), disconnected; torus rank floor(n/2)
};

/// A compact classical group identified by family and torus parametrization.
/// `rank` is the number of turn coordinates of the standard maximal torus
/// (for SU(n) this is n with the sum-zero constraint). FullOrthogonal also
/// carries the ambient matrix size, since O(2r) and O(2r+1) share a rank.
struct GroupTag {
  GroupFamily family = GroupFamily::UnitaryA;
  int rank = 1;
  int size = 0;  // matrix size; only meaningful for FullOrthogonal

  static GroupTag unitary(int n) { return checked({GroupFamily::UnitaryA, n, n}); }
  static GroupTag special_unitary(int n) { return checked({GroupFamily::SpecialUnitaryA, n, n}); }
  static GroupTag so_odd(int r) { return checked({GroupFamily::OddOrthogonalB, r, 2 * r + 1}); }
  static GroupTag symplectic(int r) { return checked({GroupFamily::SymplecticC, r, 2 * r}); }
  static GroupTag so_even(int r) { return checked({GroupFamily::EvenOrthogonalD, r, 2 * r}); }
  static GroupTag orthogonal(int n) { return checked({GroupFamily::FullOrthogonal, n / 2, n}); }

  /// SO(n) by matrix size.
  static GroupTag special_orthogonal(int n) {
    if (n < 2) throw invalid_input("SO(n) needs n >= 2");
    return n % 2 ? so_odd(n / 2) : so_even(n / 2);
  }

  static GroupTag checked(GroupTag t) {
    if (t.rank < 1) throw invalid_input("group rank must be >= 1");
    if (t.family == GroupFamily::FullOrthogonal && t.size / 2 != t.rank)
      throw invalid_input("O(n) torus rank must be floor(n/2)");
    return t;
  }

  friend bool operator==(const GroupTag& a, const GroupTag& b) {
    if (a.family != b.family || a.rank != b.rank) return false;
    return a.family != GroupFamily::FullOrthogonal || a.size == b.size;
  }
  friend bool operator<(const GroupTag& a, const GroupTag& b) {
    return std::tie(a.family, a.rank, a.size) < std::tie(b.family, b.rank, b.size);
  }
};

/// |W(G)| for the torus action: n! for A-types, 2^r r! for B/C/O, 2^(r-1) r! for D.
std::uint64_t weyl_order(const GroupTag& tag);

std::string family_name(GroupFamily f);
GroupFamily family_from_name(const std::string& name);
std::string group_name(const GroupTag& tag);

}  // namespace scf
