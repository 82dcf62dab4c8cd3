#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace scf {

/// Outcome of a bounded SCF search: Holds up to the scanned bound, or
/// Fails with a concrete witness. A Holds is always a bounded claim; the
/// bound travels with the verdict so no caller can drop it.
template <class Witness>
struct ScfVerdict {
  std::int64_t searched_bound = 0;
  std::optional<Witness> witness;

  bool holds() const { return !witness.has_value(); }

  static ScfVerdict holds_up_to(std::int64_t bound) { return {bound, std::nullopt}; }
  static ScfVerdict fails(Witness w, std::int64_t bound) {
    return {bound, std::optional<Witness>(std::move(w))};
  }
};

}  // namespace scf
