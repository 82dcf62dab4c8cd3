#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "scf/turn.hpp"

namespace scf {

/// A signed permutation w acting on turn vectors by (w.x)[i] = s_i * x[p_i],
/// where s_i = -1 negates the turn mod 1. Elements of the classical Weyl
/// groups and their block subgroups are represented this way.
struct SignedPerm {
  std::vector<int> perm;       // source index per output slot
  std::vector<std::uint8_t> sign;  // 1 = negate output slot

  static SignedPerm identity(int n) {
    SignedPerm w;
    w.perm.resize(static_cast<size_t>(n));
    w.sign.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) w.perm[static_cast<size_t>(i)] = i;
    return w;
  }

  static SignedPerm transposition(int n, int i, int j) {
    SignedPerm w = identity(n);
    std::swap(w.perm[static_cast<size_t>(i)], w.perm[static_cast<size_t>(j)]);
    return w;
  }

  static SignedPerm flip(int n, int i) {
    SignedPerm w = identity(n);
    w.sign[static_cast<size_t>(i)] = 1;
    return w;
  }

  static SignedPerm double_flip(int n, int i, int j) {
    SignedPerm w = identity(n);
    w.sign[static_cast<size_t>(i)] = 1;
    w.sign[static_cast<size_t>(j)] = 1;
    return w;
  }

  std::vector<Turn> apply(const std::vector<Turn>& x) const {
    std::vector<Turn> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
      const Turn& t = x[static_cast<size_t>(perm[i])];
      y[i] = sign[i] ? t.negated() : t;
    }
    return y;
  }

  /// (a * b).x == a.apply(b.apply(x)).
  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm c;
    const size_t n = a.perm.size();
    c.perm.resize(n);
    c.sign.resize(n);
    for (size_t i = 0; i < n; ++i) {
      c.perm[i] = b.perm[static_cast<size_t>(a.perm[i])];
      c.sign[i] = static_cast<std::uint8_t>(a.sign[i] ^ b.sign[static_cast<size_t>(a.perm[i])]);
    }
    return c;
  }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.perm == b.perm && a.sign == b.sign;
  }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    return a.perm != b.perm ? a.perm < b.perm : a.sign < b.sign;
  }
};

/// Closure of a generating set under composition (generators must share a
/// rank). Desk-scale subgroup enumeration.
std::set<SignedPerm> generate_subgroup(const std::vector<SignedPerm>& generators);

}  // namespace scf
