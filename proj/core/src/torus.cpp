#include "scf/torus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "scf/parallel.hpp"

namespace scf {

namespace {

bool folds_all_signs(GroupFamily f) {
  return f == GroupFamily::OddOrthogonalB || f == GroupFamily::SymplecticC ||
         f == GroupFamily::FullOrthogonal;
}

Turn sum_mod_one(const std::vector<Turn>& turns) {
  Turn s;
  for (const Turn& t : turns) s = s + t;
  return s;
}

}  // namespace

TorusElement::TorusElement(std::vector<Turn> t, GroupTag g)
    : turns(std::move(t)), group(GroupTag::checked(g)) {
  if (turns.size() != static_cast<size_t>(group.rank))
    throw invalid_input("torus element needs exactly " + std::to_string(group.rank) +
                        " turns, got " + std::to_string(turns.size()));
  if (group.family == GroupFamily::SpecialUnitaryA && !sum_mod_one(turns).is_zero())
    throw invalid_input("SU torus element must have turns summing to 0 mod 1");
}

std::string TorusElement::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < turns.size(); ++i) os << (i ? ", " : "") << turns[i].str();
  os << "] in " << group_name(group);
  return os.str();
}

bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
  if (!(a.group == b.group)) return a.group < b.group;
  if (a.turns != b.turns) return a.turns < b.turns;
  return a.chirality < b.chirality;
}

std::string CanonicalForm::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < turns.size(); ++i) os << (i ? ", " : "") << turns[i].str();
  os << "]";
  if (chirality) os << (*chirality == Parity::Odd ? " (odd)" : " (even)");
  return os.str();
}

CanonicalForm canonical_form(const TorusElement& x) {
  CanonicalForm cf;
  cf.group = x.group;
  cf.turns = x.turns;

  switch (x.group.family) {
    case GroupFamily::UnitaryA:
    case GroupFamily::SpecialUnitaryA:
      std::sort(cf.turns.begin(), cf.turns.end(), std::greater<Turn>());
      return cf;
    case GroupFamily::OddOrthogonalB:
    case GroupFamily::SymplecticC:
    case GroupFamily::FullOrthogonal:
      for (Turn& t : cf.turns) t = t.folded();
      std::sort(cf.turns.begin(), cf.turns.end(), std::greater<Turn>());
      return cf;
    case GroupFamily::EvenOrthogonalD: {
      int flips = 0;
      bool has_self_symmetric = false;
      for (Turn& t : cf.turns) {
        if (t.is_self_symmetric()) has_self_symmetric = true;
        const Turn f = t.folded();
        if (!(f == t)) ++flips;
        t = f;
      }
      std::sort(cf.turns.begin(), cf.turns.end(), std::greater<Turn>());
      // A self-symmetric coordinate absorbs the fold parity: the two
      // candidate orbits merge and no chirality is recorded.
      if (!has_self_symmetric)
        cf.chirality = (flips % 2) ? Parity::Odd : Parity::Even;
      return cf;
    }
  }
  throw invalid_input("unknown group family");
}

TorusElement representative(const CanonicalForm& cf) {
  std::vector<Turn> turns = cf.turns;
  if (cf.chirality && *cf.chirality == Parity::Odd) {
    // No coordinate is self-symmetric here, so unfolding the last (smallest)
    // one lands in the odd-parity orbit.
    turns.back() = turns.back().negated();
  }
  return TorusElement(turns, cf.group);
}

bool conjugate_in(const TorusElement& x, const TorusElement& y, const GroupTag& group) {
  if (!(x.group == group) || !(y.group == group))
    throw invalid_input("conjugacy query requires matching group tags");
  return canonical_form(x) == canonical_form(y);
}

std::vector<TorusElement> weyl_orbit(const TorusElement& x, int rank_limit) {
  const int n = x.group.rank;
  if (n > rank_limit)
    throw refusal("weyl_orbit enumeration refused at rank " + std::to_string(n) +
                  " (limit " + std::to_string(rank_limit) + ")");

  const GroupFamily fam = x.group.family;
  const bool signs_all = folds_all_signs(fam);
  const bool signs_even = fam == GroupFamily::EvenOrthogonalD;

  std::set<std::vector<Turn>> seen;
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;

  std::sort(idx.begin(), idx.end());
  do {
    const std::uint32_t mask_end = (signs_all || signs_even) ? (1u << n) : 1u;
    for (std::uint32_t mask = 0; mask < mask_end; ++mask) {
      if (signs_even && (__builtin_popcount(mask) % 2)) continue;
      std::vector<Turn> y(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        const Turn& t = x.turns[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        y[static_cast<size_t>(i)] = (mask >> i & 1u) ? t.negated() : t;
      }
      seen.insert(std::move(y));
    }
  } while (std::next_permutation(idx.begin(), idx.end()));

  std::vector<TorusElement> orbit;
  orbit.reserve(seen.size());
  for (const auto& turns : seen) orbit.emplace_back(turns, x.group);
  return orbit;
}

std::vector<TorusElement> torsion_elements(const GroupTag& tag, std::int64_t q) {
  if (q < 1) throw invalid_input("torsion order must be >= 1");
  const int n = tag.rank;
  std::vector<TorusElement> out;
  std::vector<std::int64_t> num(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<Turn> turns(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) turns[static_cast<size_t>(i)] = Turn(num[static_cast<size_t>(i)], q);
    if (tag.family != GroupFamily::SpecialUnitaryA || sum_mod_one(turns).is_zero())
      out.emplace_back(std::move(turns), tag);
    int i = n - 1;
    while (i >= 0 && num[static_cast<size_t>(i)] == q - 1) num[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++num[static_cast<size_t>(i)];
  }
  return out;
}

TorusElement embed_element(const TorusElement& x, EmbeddingRule rule, const GroupTag& ambient) {
  switch (rule) {
    case EmbeddingRule::Identity:
      if (!(x.group == ambient)) throw refusal("identity embedding requires equal groups");
      return x;
    case EmbeddingRule::AppendZeroTurn: {
      const bool shape_ok = x.group.family == GroupFamily::OddOrthogonalB &&
                            ambient.family == GroupFamily::EvenOrthogonalD &&
                            ambient.rank == x.group.rank + 1;
      if (!shape_ok)
        throw refusal("append-zero embedding supports only SO(2n-1) inside SO(2n)");
      std::vector<Turn> turns = x.turns;
      turns.emplace_back();
      return TorusElement(std::move(turns), ambient);
    }
  }
  throw refusal("unsupported embedding rule");
}

bool fusion_elementwise(const GroupTag& sub, const GroupTag& ambient, EmbeddingRule rule,
                        std::int64_t q, int workers) {
  if (q < 1) throw invalid_input("torsion bound q must be >= 1");
  const std::vector<TorusElement> elements = torsion_elements(sub, q);

  // Bucket by ambient canonical form; fusion is controlled iff each bucket
  // carries a single subgroup class. Equivalent to the full pairwise scan.
  std::map<CanonicalForm, CanonicalForm> bucket_class;
  std::mutex merge_mutex;
  std::atomic<bool> violated{false};

  const std::int64_t chunk_size = 1024;
  const std::int64_t n_chunks =
      (static_cast<std::int64_t>(elements.size()) + chunk_size - 1) / chunk_size;

  auto scan_chunk = [&](std::int64_t c) -> std::optional<bool> {
    if (violated.load()) return std::nullopt;
    std::vector<std::pair<CanonicalForm, CanonicalForm>> local;
    const size_t lo = static_cast<size_t>(c * chunk_size);
    const size_t hi = std::min(elements.size(), static_cast<size_t>((c + 1) * chunk_size));
    for (size_t i = lo; i < hi; ++i) {
      const TorusElement& x = elements[i];
      local.emplace_back(canonical_form(embed_element(x, rule, ambient)), canonical_form(x));
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (auto& [amb_key, sub_key] : local) {
      auto [it, inserted] = bucket_class.emplace(amb_key, sub_key);
      if (!inserted && !(it->second == sub_key)) {
        violated.store(true);
        return true;
      }
    }
    return std::nullopt;
  };

  first_hit_scan<bool>(0, n_chunks, workers, scan_chunk);
  return !violated.load();
}

}  // namespace scf
