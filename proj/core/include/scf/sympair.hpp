#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scf/signed_perm.hpp"
#include "scf/torus.hpp"

namespace scf {

/// The simple compact symmetric-pair families the classification covers.
enum class PairFamily {
  DiagonalKK,  // (k + k, diagonal k), k compact simple
  SuSoOdd,     // (su(2n+1), so(2n+1))
  SuSoEven,    // (su(2n), so(2n))
  SuSp,        // (su(2n), sp(n))
  SoSoOdd,     // (so(2n), so(2n-1))
  E6F4,        // (e6, f4)
  SuO,         // (su(n) with det +-1 group, o(n)); same algebra pair as su/so
  EqualRank,   // subgroup of full rank, e.g. so(2p)+so(2q) in so(2p+2q)
  SoSumOdd,    // (so(2p+2q+2), so(2p+1)+so(2q+1))
  E6Sp4,       // (e6, sp(4))
};

enum class EqualRankKind { SoEvenProduct, SpProduct, UnitaryProduct };

struct PairParams {
  int n = 0;
  int p = 0;
  int q = 0;
  EqualRankKind kind = EqualRankKind::SoEvenProduct;
};

enum class ScfStatus { Realizable, NotScf };

enum class NotScfReason {
  EqualRank,          // full-rank subgroup: a regular torus element escapes
  OddSumWitness,      // explicit block-rotation pair separates ambient/subgroup conjugacy
  InvolutionCount,    // involution class counts differ (e6 / sp(4))
  OuterAutomorphism,  // conjugation induces an outer automorphism of connected H
};

/// Classification record for one pair. For SuSoEven the negative verdict
/// applies only when H is required connected; with the disconnected
/// realization (det +-1 / full orthogonal) the pair is realizable, and
/// `connected_only` records that split.
struct SymPairCase {
  PairFamily family = PairFamily::DiagonalKK;
  PairParams params;
  ScfStatus status = ScfStatus::Realizable;
  std::optional<NotScfReason> reason;
  bool connected_only = false;
  std::string description;
};

/// Status per the classification, with family-specific parameter checks.
SymPairCase classify_pair(PairFamily family, PairParams params = {});

/// One representative row per family, parameters symbolic.
std::vector<SymPairCase> catalog();

/// A factor of a block subgroup, occupying `tag.rank` consecutive torus
/// coordinates starting at `offset`.
struct SubBlock {
  GroupTag tag;
  size_t offset = 0;
};

/// A pair of subgroup torus elements proposed as an SCF failure witness:
/// conjugate in the ambient group but not in the subgroup. Coordinates not
/// covered by any block are fixed axes and must carry turn 0.
struct PairWitness {
  TorusElement x;
  TorusElement y;
  std::vector<SubBlock> blocks;
};

struct PairVerification {
  bool ambient_conjugate = false;
  bool subgroup_conjugate = false;
};

/// The explicit block-rotation witness for (so(2p+2q+2), so(2p+1)+so(2q+1)):
/// x carries one theta-rotation in each odd block, y carries both in the
/// second. Requires 1 <= p <= q, p+q >= 3 and 0 < theta < 1/2 (the endpoints
/// degenerate: x = y or the subgroup conjugacy is no longer excluded).
PairWitness build_witness_so_sum(int p, int q, const Turn& theta);

/// Ambient conjugacy of the full turn vectors, and subgroup conjugacy as
/// the conjunction of per-block conjugacy. A valid negative witness returns
/// (true, false).
PairVerification verify_pair_witness(const PairWitness& w);

/// A subgroup of a classical Weyl group given by signed-permutation
/// generators, plus the block decomposition its torus factors induce.
struct SignedPermGroupSpec {
  int rank = 0;
  std::vector<SignedPerm> generators;
  std::vector<SubBlock> blocks;

  /// W(SO(2p) x SO(2q)) inside W(SO(2p+2q)).
  static SignedPermGroupSpec so_even_product(int p, int q);
  /// W(Sp(p) x Sp(q)) inside W(Sp(p+q)).
  static SignedPermGroupSpec sp_product(int p, int q);
  /// W(U(p) x U(q)) inside W(U(p+q)).
  static SignedPermGroupSpec unitary_product(int p, int q);
};

/// Builds a witness for an equal-rank pair: a torsion element x regular for
/// the ambient Weyl group (free orbit) and y = w(x) for the first Weyl
/// element w outside the subgroup. Throws refusal when the generators span
/// the full Weyl group (no witness exists).
PairWitness equal_rank_witness(const GroupTag& ambient, const SignedPermGroupSpec& sub_weyl);

std::string family_token(PairFamily f);
PairFamily family_from_token(const std::string& token);
std::string reason_token(NotScfReason r);

}  // namespace scf
