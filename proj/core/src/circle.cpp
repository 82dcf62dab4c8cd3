#include "scf/circle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "scf/parallel.hpp"

namespace scf {

namespace {

std::vector<std::int64_t> sorted_residues(const std::vector<std::int64_t>& a, std::int64_t m,
                                          std::int64_t k) {
  std::vector<std::int64_t> r;
  r.reserve(a.size());
  for (std::int64_t w : a) r.push_back(k * (w % m) % m);
  std::sort(r.begin(), r.end());
  return r;
}

/// Stable matching realizing k*a_i == a_sigma(i) (mod m); empty when the
/// residue multisets differ.
std::vector<size_t> residue_matching(const std::vector<std::int64_t>& a, std::int64_t m,
                                     std::int64_t k) {
  std::vector<size_t> sigma(a.size());
  std::vector<bool> used(a.size(), false);
  for (size_t i = 0; i < a.size(); ++i) {
    const std::int64_t want = k * (a[i] % m) % m;
    size_t j = 0;
    for (; j < a.size(); ++j)
      if (!used[j] && a[j] % m == want) break;
    if (j == a.size()) return {};
    used[j] = true;
    sigma[i] = j;
  }
  return sigma;
}

}  // namespace

WeightSequence::WeightSequence(std::vector<std::int64_t> w) : weights(std::move(w)) {
  if (weights.empty()) throw invalid_input("weight sequence must be nonempty");
  std::int64_t g = 0;
  bool any_nonzero = false;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw invalid_input("weights must be nonnegative");
    if (i && weights[i] < weights[i - 1]) throw invalid_input("weights must be nondecreasing");
    if (weights[i]) {
      any_nonzero = true;
      g = std::gcd(g, weights[i]);
    }
  }
  if (!any_nonzero) throw invalid_input("weight sequence must have a nonzero entry");
  if (g != 1) throw invalid_input("nonzero weights must have gcd 1 (normalize first)");
}

std::string WeightSequence::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  os << ")";
  return os.str();
}

WeightSequence normalize_weights(std::vector<std::int64_t> raw) {
  if (raw.empty()) throw invalid_input("weight sequence must be nonempty");
  std::int64_t g = 0;
  for (std::int64_t w : raw) {
    if (w < 0) throw invalid_input("weights must be nonnegative");
    g = std::gcd(g, w);
  }
  if (g == 0) throw invalid_input("weight sequence must have a nonzero entry");
  for (std::int64_t& w : raw) w /= g;
  std::sort(raw.begin(), raw.end());
  return WeightSequence(std::move(raw));
}

CircleVerdict decide_scf_circle(const WeightSequence& a, std::int64_t m_max, int workers) {
  if (m_max < 3) throw invalid_input("m_max must be >= 3");

  auto scan_modulus = [&](std::int64_t m) -> std::optional<CongruenceWitness> {
    const std::vector<std::int64_t> base = sorted_residues(a.weights, m, 1);
    for (std::int64_t k = 2; k < m; ++k) {
      if (sorted_residues(a.weights, m, k) != base) continue;
      CongruenceWitness w{m, k, residue_matching(a.weights, m, k)};
      return w;
    }
    return std::nullopt;
  };

  auto hit = first_hit_scan<CongruenceWitness>(3, m_max + 1, workers, scan_modulus);
  if (hit) return CircleVerdict::fails(*hit, hit->m);
  return CircleVerdict::holds_up_to(m_max);
}

std::pair<TorusElement, TorusElement> realized_pair(const WeightSequence& a, std::int64_t m,
                                                    std::int64_t k) {
  const GroupTag u = GroupTag::unitary(static_cast<int>(a.size()));
  std::vector<Turn> z, w;
  z.reserve(a.size());
  w.reserve(a.size());
  for (std::int64_t ai : a.weights) {
    z.emplace_back(ai, m);
    w.emplace_back(k * (ai % m), m);
  }
  return {TorusElement(std::move(z), u), TorusElement(std::move(w), u)};
}

bool verify_witness_circle(const WeightSequence& a, const CongruenceWitness& w) {
  if (w.m <= 2 || w.k <= 1 || w.k >= w.m) return false;
  if (sorted_residues(a.weights, w.m, w.k) != sorted_residues(a.weights, w.m, 1)) return false;

  // The permutation must actually realize the congruence.
  if (w.permutation.size() != a.size()) return false;
  std::vector<bool> used(a.size(), false);
  for (size_t i = 0; i < a.size(); ++i) {
    const size_t j = w.permutation[i];
    if (j >= a.size() || used[j]) return false;
    used[j] = true;
    if ((w.k * (a.weights[i] % w.m) - a.weights[j]) % w.m != 0) return false;
  }

  const auto [hz, hw] = realized_pair(a, w.m, w.k);
  if (hz.turns == hw.turns) return false;
  return conjugate_in(hz, hw, hz.group);
}

std::optional<std::int64_t> reflection_constant(const WeightSequence& a) {
  const std::int64_t c = a.weights.front() + a.weights.back();
  for (size_t i = 0, j = a.size(); i < j--; ++i)
    if (a.weights[i] + a.weights[j] != c) return std::nullopt;
  return c;
}

bool negation_symmetric(const WeightSequence& a) { return reflection_constant(a).has_value(); }

std::int64_t default_modulus_bound(const WeightSequence& a) {
  const std::int64_t bound = static_cast<std::int64_t>(a.size()) * a.max_weight() * a.max_weight();
  return std::max<std::int64_t>(3, bound);
}

}  // namespace scf
