#include "scf/sympair.hpp"

#include <algorithm>
#include <deque>

namespace scf {

namespace {

SymPairCase realizable(PairFamily f, PairParams params, std::string desc) {
  return {f, params, ScfStatus::Realizable, std::nullopt, false, std::move(desc)};
}

SymPairCase not_scf(PairFamily f, PairParams params, NotScfReason r, std::string desc,
                    bool connected_only = false) {
  return {f, params, ScfStatus::NotScf, r, connected_only, std::move(desc)};
}

}  // namespace

SymPairCase classify_pair(PairFamily family, PairParams params) {
  switch (family) {
    case PairFamily::DiagonalKK:
      return realizable(family, params, "(k + k, diagonal k), k compact simple");
    case PairFamily::SuSoOdd:
      if (params.n < 1) throw invalid_input("su/so odd pair needs n >= 1");
      return realizable(family, params,
                        "(su(" + std::to_string(2 * params.n + 1) + "), so(" +
                            std::to_string(2 * params.n + 1) + "))");
    case PairFamily::SuSoEven:
      if (params.n < 1) throw invalid_input("su/so even pair needs n >= 1");
      // Realizable with the determinant +-1 unitary group over the full
      // orthogonal group; conjugation by the witness element induces an
      // outer automorphism of the connected subgroup, so connected H fails.
      return not_scf(family, params, NotScfReason::OuterAutomorphism,
                     "(su(" + std::to_string(2 * params.n) + "), so(" +
                         std::to_string(2 * params.n) + ")), H connected",
                     /*connected_only=*/true);
    case PairFamily::SuSp:
      if (params.n < 1) throw invalid_input("su/sp pair needs n >= 1");
      return realizable(family, params,
                        "(su(" + std::to_string(2 * params.n) + "), sp(" +
                            std::to_string(params.n) + "))");
    case PairFamily::SoSoOdd:
      if (params.n < 2) throw invalid_input("so(2n)/so(2n-1) pair needs n >= 2");
      return realizable(family, params,
                        "(so(" + std::to_string(2 * params.n) + "), so(" +
                            std::to_string(2 * params.n - 1) + "))");
    case PairFamily::E6F4:
      return realizable(family, params, "(e6, f4)");
    case PairFamily::SuO:
      if (params.n < 1) throw invalid_input("su/o pair needs n >= 1");
      return realizable(family, params,
                        "(su(" + std::to_string(params.n) + ") det +-1, o(" +
                            std::to_string(params.n) + "))");
    case PairFamily::EqualRank: {
      if (params.p < 1 || params.q < 1) throw invalid_input("equal-rank pair needs p, q >= 1");
      std::string desc;
      switch (params.kind) {
        case EqualRankKind::SoEvenProduct:
          desc = "(so(" + std::to_string(2 * (params.p + params.q)) + "), so(" +
                 std::to_string(2 * params.p) + ") + so(" + std::to_string(2 * params.q) + "))";
          break;
        case EqualRankKind::SpProduct:
          desc = "(sp(" + std::to_string(params.p + params.q) + "), sp(" +
                 std::to_string(params.p) + ") + sp(" + std::to_string(params.q) + "))";
          break;
        case EqualRankKind::UnitaryProduct:
          desc = "(su(" + std::to_string(params.p + params.q) + "), s(u(" +
                 std::to_string(params.p) + ") + u(" + std::to_string(params.q) + ")))";
          break;
      }
      return not_scf(family, params, NotScfReason::EqualRank, desc);
    }
    case PairFamily::SoSumOdd:
      if (params.p < 1 || params.p > params.q || params.p + params.q < 3)
        throw invalid_input("odd-sum orthogonal pair needs 1 <= p <= q, p + q >= 3");
      return not_scf(family, params, NotScfReason::OddSumWitness,
                     "(so(" + std::to_string(2 * (params.p + params.q) + 2) + "), so(" +
                         std::to_string(2 * params.p + 1) + ") + so(" +
                         std::to_string(2 * params.q + 1) + "))");
    case PairFamily::E6Sp4:
      return not_scf(family, params, NotScfReason::InvolutionCount, "(e6, sp(4))");
  }
  throw invalid_input("unknown pair family");
}

std::vector<SymPairCase> catalog() {
  std::vector<SymPairCase> rows;
  rows.push_back(classify_pair(PairFamily::DiagonalKK));
  rows.push_back(classify_pair(PairFamily::SuSoOdd, {.n = 2}));
  rows.back().description = "(su(2n+1), so(2n+1))";
  rows.push_back(classify_pair(PairFamily::SuO, {.n = 4}));
  rows.back().description = "(su(n) det +-1, o(n))";
  rows.push_back(classify_pair(PairFamily::SuSoEven, {.n = 2}));
  rows.back().description = "(su(2n), so(2n)), H connected";
  rows.push_back(classify_pair(PairFamily::SuSp, {.n = 2}));
  rows.back().description = "(su(2n), sp(n))";
  rows.push_back(classify_pair(PairFamily::SoSoOdd, {.n = 2}));
  rows.back().description = "(so(2n), so(2n-1))";
  rows.push_back(classify_pair(PairFamily::E6F4));
  rows.push_back(classify_pair(PairFamily::EqualRank,
                               {.p = 1, .q = 1, .kind = EqualRankKind::SoEvenProduct}));
  rows.back().description = "(so(2p+2q), so(2p) + so(2q)) and other full-rank subgroups";
  rows.push_back(
      classify_pair(PairFamily::EqualRank, {.p = 1, .q = 1, .kind = EqualRankKind::SpProduct}));
  rows.back().description = "(sp(p+q), sp(p) + sp(q))";
  rows.push_back(classify_pair(PairFamily::EqualRank,
                               {.p = 1, .q = 1, .kind = EqualRankKind::UnitaryProduct}));
  rows.back().description = "(su(p+q), s(u(p) + u(q)))";
  rows.push_back(classify_pair(PairFamily::SoSumOdd, {.p = 1, .q = 2}));
  rows.back().description = "(so(2p+2q+2), so(2p+1) + so(2q+1)), 1 <= p <= q, p+q >= 3";
  rows.push_back(classify_pair(PairFamily::E6Sp4));
  return rows;
}

PairWitness build_witness_so_sum(int p, int q, const Turn& theta) {
  if (p < 1 || p > q || p + q < 3)
    throw invalid_input("odd-sum orthogonal witness needs 1 <= p <= q, p + q >= 3");
  if (theta.is_self_symmetric())
    throw invalid_input("degenerate witness: theta must avoid 0 and 1/2");
  if (Turn(1, 2) < theta) throw invalid_input("theta must lie strictly between 0 and 1/2");

  const int rank = p + q + 1;  // ambient SO(2p+2q+2)
  const GroupTag ambient = GroupTag::so_even(rank);
  std::vector<Turn> x(static_cast<size_t>(rank)), y(static_cast<size_t>(rank));
  x[0] = theta;                         // one rotation in the first odd block
  x[static_cast<size_t>(p)] = theta;    // one rotation in the second
  y[static_cast<size_t>(p)] = theta;    // both rotations in the second block
  y[static_cast<size_t>(p) + 1] = theta;

  PairWitness w{TorusElement(std::move(x), ambient), TorusElement(std::move(y), ambient), {}};
  w.blocks.push_back({GroupTag::so_odd(p), 0});
  w.blocks.push_back({GroupTag::so_odd(q), static_cast<size_t>(p)});
  return w;
}

PairVerification verify_pair_witness(const PairWitness& w) {
  if (!(w.x.group == w.y.group)) throw invalid_input("witness elements must share a group");

  std::vector<bool> covered(w.x.turns.size(), false);
  for (const SubBlock& b : w.blocks) {
    const size_t end = b.offset + static_cast<size_t>(b.tag.rank);
    if (end > w.x.turns.size()) throw invalid_input("witness block exceeds ambient rank");
    for (size_t i = b.offset; i < end; ++i) covered[i] = true;
  }
  for (size_t i = 0; i < covered.size(); ++i)
    if (!covered[i] && (!w.x.turns[i].is_zero() || !w.y.turns[i].is_zero()))
      throw invalid_input("witness coordinates outside the subgroup blocks must be zero");

  PairVerification result;
  result.ambient_conjugate = conjugate_in(w.x, w.y, w.x.group);
  result.subgroup_conjugate = true;
  for (const SubBlock& b : w.blocks) {
    auto slice = [&](const TorusElement& e) {
      std::vector<Turn> t(e.turns.begin() + static_cast<std::ptrdiff_t>(b.offset),
                          e.turns.begin() + static_cast<std::ptrdiff_t>(b.offset) + b.tag.rank);
      return TorusElement(std::move(t), b.tag);
    };
    if (!conjugate_in(slice(w.x), slice(w.y), b.tag)) {
      result.subgroup_conjugate = false;
      break;
    }
  }
  return result;
}

std::set<SignedPerm> generate_subgroup(const std::vector<SignedPerm>& generators) {
  if (generators.empty()) throw invalid_input("subgroup needs at least one generator");
  const size_t n = generators.front().perm.size();
  for (const auto& g : generators)
    if (g.perm.size() != n) throw invalid_input("generators must share a rank");

  std::set<SignedPerm> group{SignedPerm::identity(static_cast<int>(n))};
  std::deque<SignedPerm> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    const SignedPerm w = frontier.front();
    frontier.pop_front();
    for (const SignedPerm& g : generators) {
      SignedPerm next = g * w;
      if (group.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return group;
}

namespace {

void add_block_generators(SignedPermGroupSpec& spec, GroupFamily fam, int offset, int r) {
  const int n = spec.rank;
  for (int i = 0; i + 1 < r; ++i)
    spec.generators.push_back(SignedPerm::transposition(n, offset + i, offset + i + 1));
  switch (fam) {
    case GroupFamily::OddOrthogonalB:
    case GroupFamily::SymplecticC:
    case GroupFamily::FullOrthogonal:
      spec.generators.push_back(SignedPerm::flip(n, offset));
      break;
    case GroupFamily::EvenOrthogonalD:
      if (r >= 2) spec.generators.push_back(SignedPerm::double_flip(n, offset, offset + 1));
      break;
    default:
      break;
  }
}

SignedPermGroupSpec block_product(GroupFamily fam, int p, int q,
                                  GroupTag (*make_tag)(int)) {
  if (p < 1 || q < 1) throw invalid_input("block product needs p, q >= 1");
  SignedPermGroupSpec spec;
  spec.rank = p + q;
  add_block_generators(spec, fam, 0, p);
  add_block_generators(spec, fam, p, q);
  if (spec.generators.empty())  // rank-1 factors of trivial Weyl groups
    spec.generators.push_back(SignedPerm::identity(spec.rank));
  spec.blocks.push_back({make_tag(p), 0});
  spec.blocks.push_back({make_tag(q), static_cast<size_t>(p)});
  return spec;
}

}  // namespace

SignedPermGroupSpec SignedPermGroupSpec::so_even_product(int p, int q) {
  return block_product(GroupFamily::EvenOrthogonalD, p, q, &GroupTag::so_even);
}

SignedPermGroupSpec SignedPermGroupSpec::sp_product(int p, int q) {
  return block_product(GroupFamily::SymplecticC, p, q, &GroupTag::symplectic);
}

SignedPermGroupSpec SignedPermGroupSpec::unitary_product(int p, int q) {
  return block_product(GroupFamily::UnitaryA, p, q, &GroupTag::unitary);
}

PairWitness equal_rank_witness(const GroupTag& ambient, const SignedPermGroupSpec& sub_weyl) {
  const int n = ambient.rank;
  if (sub_weyl.rank != n) throw invalid_input("subgroup Weyl rank must match the ambient rank");

  const std::set<SignedPerm> sub_group = generate_subgroup(sub_weyl.generators);
  if (sub_group.size() == weyl_order(ambient))
    throw refusal("subgroup Weyl group is the full Weyl group: no witness exists");

  // Regular base point: turns i/(2n+1) are distinct, stay strictly inside
  // (0, 1/2), and remain distinct after folding, so the full Weyl group acts
  // freely whatever the family.
  std::vector<Turn> base;
  base.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) base.emplace_back(i, 2 * n + 1);
  TorusElement x(base, ambient);

  // First Weyl element outside the subgroup, in (permutation, sign mask)
  // order. It moves x off its subgroup orbit because the orbit is free.
  const bool signs_all = ambient.family == GroupFamily::OddOrthogonalB ||
                         ambient.family == GroupFamily::SymplecticC ||
                         ambient.family == GroupFamily::FullOrthogonal;
  const bool signs_even = ambient.family == GroupFamily::EvenOrthogonalD;
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  do {
    const std::uint32_t mask_end = (signs_all || signs_even) ? (1u << n) : 1u;
    for (std::uint32_t mask = 0; mask < mask_end; ++mask) {
      if (signs_even && (__builtin_popcount(mask) % 2)) continue;
      SignedPerm w;
      w.perm = idx;
      w.sign.resize(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) w.sign[static_cast<size_t>(i)] = (mask >> i) & 1u;
      if (sub_group.count(w)) continue;
      return PairWitness{x, TorusElement(w.apply(x.turns), ambient), sub_weyl.blocks};
    }
  } while (std::next_permutation(idx.begin(), idx.end()));

  throw refusal("no Weyl element found outside the subgroup");
}

std::string family_token(PairFamily f) {
  switch (f) {
    case PairFamily::DiagonalKK: return "diagonal";
    case PairFamily::SuSoOdd: return "su-so-odd";
    case PairFamily::SuSoEven: return "su-so-even";
    case PairFamily::SuSp: return "su-sp";
    case PairFamily::SoSoOdd: return "so-so-odd";
    case PairFamily::E6F4: return "e6-f4";
    case PairFamily::SuO: return "su-o";
    case PairFamily::EqualRank: return "equal-rank";
    case PairFamily::SoSumOdd: return "so-sum-odd";
    case PairFamily::E6Sp4: return "e6-sp4";
  }
  throw invalid_input("unknown pair family");
}

PairFamily family_from_token(const std::string& token) {
  for (PairFamily f :
       {PairFamily::DiagonalKK, PairFamily::SuSoOdd, PairFamily::SuSoEven, PairFamily::SuSp,
        PairFamily::SoSoOdd, PairFamily::E6F4, PairFamily::SuO, PairFamily::EqualRank,
        PairFamily::SoSumOdd, PairFamily::E6Sp4})
    if (family_token(f) == token) return f;
  throw invalid_input("unknown symmetric-pair family '" + token + "'");
}

std::string reason_token(NotScfReason r) {
  switch (r) {
    case NotScfReason::EqualRank: return "equal-rank";
    case NotScfReason::OddSumWitness: return "odd-sum-witness";
    case NotScfReason::InvolutionCount: return "involution-count";
    case NotScfReason::OuterAutomorphism: return "outer-automorphism";
  }
  throw invalid_input("unknown reason");
}

}  // namespace scf
