#pragma once

// Lattice operations on the flag weak order: closed-form meet and join,
// brute-force oracles, atoms, Moebius function and homotopy type of intervals.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagweak/core.hpp"
#include "flagweak/order.hpp"

namespace flagweak {

/// Meet in the right weak order on S_n, found by walking up from the identity
/// through permutations whose inverse inversion set stays inside
/// Inv(u^-1) n Inv(v^-1). Throws std::logic_error if the maximum is not unique.
std::vector<int> sn_weak_meet(std::span<const int> u, std::span<const int> v);
std::vector<int> sn_weak_join(std::span<const int> u, std::span<const int> v);

ColoredPermutation meet(const ColoredPermutation& g, const ColoredPermutation& h);
ColoredPermutation join(const ColoredPermutation& g, const ColoredPermutation& h);

// The empty meet is mu0 and the empty join is the identity.
ColoredPermutation meet_set(const GroupContext& ctx, std::span<const ColoredPermutation> elements);
ColoredPermutation join_set(const GroupContext& ctx, std::span<const ColoredPermutation> elements);

/// Greatest common lower bound found by reachability in `hasse`; nullopt when
/// the common lower bounds have no maximum.
std::optional<ColoredPermutation> meet_oracle(const ColoredPermutation& g, const ColoredPermutation& h,
                                              const HasseDiagram& hasse);
std::optional<ColoredPermutation> join_oracle(const ColoredPermutation& g, const ColoredPermutation& h,
                                              const HasseDiagram& hasse);

// Id-level oracles for exhaustive scans.
std::optional<int> meet_oracle(const Reachability& reach, int a, int b);
std::optional<int> join_oracle(const Reachability& reach, int a, int b);

/// Elements of the interval covering its bottom.
std::vector<ColoredPermutation> atoms(const Interval& interval);

/// mu(g, h) = (-1)^k when h is the join of k atoms of [g, mu0], 0 otherwise.
/// Throws NotComparable unless g <= h.
int mobius(const ColoredPermutation& g, const ColoredPermutation& h);

/// mu(g, h) from mu(g,g) = 1, mu(g,h) = -sum_{g <= x < h} mu(g,x) over `hasse`.
int mobius_oracle(const ColoredPermutation& g, const ColoredPermutation& h, const HasseDiagram& hasse);

/// Row of the recursive Moebius function: entry x is mu(from, x), 0 where
/// from is not below x.
std::vector<std::int64_t> mobius_row(const Reachability& reach, int from);

struct HomotopyClass {
  enum class Kind { Sphere, Contractible, NotApplicable };

  Kind kind = Kind::NotApplicable;
  int atoms = 0;  // k: number of atoms of [g, mu0] below h

  /// k - 2 for a sphere.
  int sphere_dimension() const { return atoms - 2; }
  std::string to_string() const;

  friend bool operator==(const HomotopyClass&, const HomotopyClass&) = default;
};

/// Order complex of the open interval (g, h): S^{k-2} when h is the join of the
/// k atoms of [g, mu0] lying below it, contractible otherwise; NotApplicable
/// when finv(h) - finv(g) < 2. Throws NotComparable unless g <= h.
HomotopyClass classify_homotopy(const ColoredPermutation& g, const ColoredPermutation& h);

/// Atoms of [g, mu0] that lie below h.
std::vector<ColoredPermutation> atoms_below(const ColoredPermutation& g, const ColoredPermutation& h);

}  // namespace flagweak
