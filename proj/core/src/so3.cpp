#include "scf/so3.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "scf/parallel.hpp"

namespace scf {

namespace {

/// Folded residues { min(c*p mod q, q - c*p mod q) } sorted; two parameters
/// share this key iff their images are conjugate in the ambient group.
std::vector<std::int64_t> folded_key(const std::vector<int>& coeffs, std::int64_t p,
                                     std::int64_t q) {
  std::vector<std::int64_t> key;
  key.reserve(coeffs.size());
  for (int c : coeffs) {
    const std::int64_t r = static_cast<std::int64_t>(c) % q * (p % q) % q;
    key.push_back(r == 0 ? 0 : std::min(r, q - r));
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

SpinSequence::SpinSequence(std::vector<int> s) : spins(std::move(s)) {
  if (spins.empty()) throw invalid_input("spin sequence must be nonempty");
  for (int a : spins)
    if (a < 1) throw invalid_input("spins must be positive");
  std::sort(spins.begin(), spins.end());
}

int SpinSequence::spin_sum() const { return std::accumulate(spins.begin(), spins.end(), 0); }

std::string SpinSequence::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < spins.size(); ++i) os << (i ? "," : "") << spins[i];
  os << ")";
  return os.str();
}

AngleProfile expand_profile(const SpinSequence& a) {
  AngleProfile profile;
  for (int aj : a.spins)
    for (int c = 1; c <= aj; ++c) profile.coefficients.push_back(c);
  std::sort(profile.coefficients.begin(), profile.coefficients.end());
  profile.fixed_count = static_cast<int>(a.spins.size());
  profile.ambient_dim = 2 * static_cast<int>(profile.coefficients.size()) + profile.fixed_count;
  profile.ambient = GroupTag::special_orthogonal(profile.ambient_dim);
  return profile;
}

TorusElement image_element(const SpinSequence& a, const Turn& theta) {
  const AngleProfile profile = expand_profile(a);
  std::vector<Turn> turns;
  turns.reserve(static_cast<size_t>(profile.ambient.rank));
  for (int c : profile.coefficients) turns.push_back(theta.scaled(c));
  // Fixed vectors pair up into zero-turn rotation planes.
  while (turns.size() < static_cast<size_t>(profile.ambient.rank)) turns.emplace_back();
  return TorusElement(std::move(turns), profile.ambient);
}

So3Verdict decide_scf_so3(const SpinSequence& a, std::int64_t q_max, int workers) {
  if (q_max < 3) throw invalid_input("q_max must be >= 3");
  const AngleProfile profile = expand_profile(a);

  auto scan_q = [&](std::int64_t q) -> std::optional<So3Witness> {
    std::vector<std::vector<std::int64_t>> keys;
    keys.reserve(static_cast<size_t>(q));
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> buckets;
    for (std::int64_t p = 1; p < q; ++p) {
      keys.push_back(folded_key(profile.coefficients, p, q));
      buckets[keys.back()].push_back(p);
    }
    for (std::int64_t p = 1; p < q; ++p)
      for (std::int64_t pp : buckets[keys[static_cast<size_t>(p - 1)]]) {
        if (pp == p || pp == q - p) continue;  // conjugate already as rotations
        return So3Witness{q, p, pp};  // mates ascend, so this p' is minimal
      }
    return std::nullopt;
  };

  auto hit = first_hit_scan<So3Witness>(3, q_max + 1, workers, scan_q);
  if (hit) return So3Verdict::fails(*hit, hit->q);
  return So3Verdict::holds_up_to(q_max);
}

bool verify_witness_so3(const SpinSequence& a, const So3Witness& w) {
  if (w.q < 3 || w.p <= 0 || w.p >= w.q || w.p_prime <= 0 || w.p_prime >= w.q) return false;
  if (w.p_prime == w.p || w.p_prime == w.q - w.p) return false;
  const TorusElement x = image_element(a, Turn(w.p, w.q));
  const TorusElement y = image_element(a, Turn(w.p_prime, w.q));
  return conjugate_in(x, y, x.group);
}

std::vector<SpinSequence> spin_sequences_up_to(int sum_max) {
  if (sum_max < 1) throw invalid_input("sum_max must be >= 1");
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  auto grow = [&](auto&& self, int sum) -> void {
    if (!cur.empty()) raw.push_back(cur);
    for (int next = cur.empty() ? 1 : cur.back(); sum + next <= sum_max; ++next) {
      cur.push_back(next);
      self(self, sum + next);
      cur.pop_back();
    }
  };
  grow(grow, 0);
  std::sort(raw.begin(), raw.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
    const int sx = std::accumulate(x.begin(), x.end(), 0);
    const int sy = std::accumulate(y.begin(), y.end(), 0);
    return sx != sy ? sx < sy : x < y;
  });
  std::vector<SpinSequence> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

std::vector<So3SearchEntry> search_open_question(int sum_max, std::int64_t q_max, int workers) {
  std::vector<So3SearchEntry> report;
  for (const SpinSequence& a : spin_sequences_up_to(sum_max))
    report.push_back({a, decide_scf_so3(a, q_max, workers)});
  return report;
}

}  // namespace scf
