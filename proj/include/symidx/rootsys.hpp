#pragma once

#include <string>
#include <vector>

// Exact combinatorics of the ten restricted root system families that occur
// for irreducible Riemannian symmetric spaces: the classical series A, B, C,
// D, the non-reduced series BC, and the exceptional systems E6, E7, E8, F4,
// G2.
//
// Counting conventions:
//   * a non-reduced pair (a, 2a) in BC counts once, as a short root, and its
//     multiplicity is the sum of the two root-space dimensions;
//   * if all roots have a single length, every root is reported as long and
//     the short count is zero.
//
// The public operations are closed forms. The test suite validates every one
// of them against brute-force generation of the root vectors in integer
// coordinates.

namespace symidx {

enum class RootFamily { A, B, C, D, BC, E6, E7, E8, F4, G2 };

std::string to_string(RootFamily f);

struct RootSystem {
  RootFamily family = RootFamily::A;
  int rank = 1;

  bool operator==(const RootSystem&) const = default;
};

// Rank constraints: A/B/C/BC need rank >= 1, D needs rank >= 2, and the
// exceptional families have their rank fixed (6/7/8/4/2).
bool is_valid(const RootSystem& rs) noexcept;
RootSystem make_root_system(RootFamily family, int rank);  // throws std::invalid_argument
RootSystem parse_root_system(const std::string& token);    // "A3", "BC2", "G2", ...
std::string to_string(const RootSystem& rs);

struct PositiveRootCounts {
  int long_roots = 0;   // l-bar
  int short_roots = 0;  // s-bar
  int total() const { return long_roots + short_roots; }
  bool operator==(const PositiveRootCounts&) const = default;
};

PositiveRootCounts positive_root_counts(const RootSystem& rs);

// Number of distinct hyperplanes fixed by reflections of the Weyl group.
// For BC this equals the count for B of the same rank: a and 2a share one.
int reflection_hyperplane_count(const RootSystem& rs);

// Coefficients of the highest root in the simple-root basis (for BC, the
// basis of the indivisible roots). All ones exactly in type A; throws for
// D2, which is reducible and has no unique highest root.
std::vector<int> highest_root_coefficients(const RootSystem& rs);
bool has_coefficient_exceeding_one(const RootSystem& rs);

// ---------------------------------------------------------------------------
// Root subsystems of type A.
//
// A nonempty proper subsystem of A_r is, up to relabelling, a disjoint union
// of "blocks": index intervals of size >= 2 inside {1, ..., r+1}, each block
// contributing the differences e_i - e_j as a smaller type A system. The
// canonical form stores the multiset of block sizes sorted descending.

struct TypeASubsystem {
  int ambient_rank = 0;          // r; the roots live in Z^(r+1)
  std::vector<int> block_sizes;  // each >= 2, descending, sum <= r+1

  std::vector<int> boundaries() const;  // 0 = d_0 < d_1 < ... < d_k, packed left
  int span_rank() const;                // sum of (size - 1)
  int hyperplane_count() const;         // sum of size*(size-1)/2
  std::string to_string() const;        // "{3,2}"

  bool operator==(const TypeASubsystem&) const = default;
};

TypeASubsystem make_type_a_subsystem(int ambient_rank, std::vector<int> block_sizes);

// All subsystems up to relabelling: multisets of block sizes >= 2 with total
// <= r+1, excluding the empty set and the full system. Deterministic order:
// by total size, then lexicographically descending block sizes.
std::vector<TypeASubsystem> enumerate_type_a_subsystems(int r);

using RootVec = std::vector<int>;

std::vector<RootVec> type_a_positive_roots(int r);
std::vector<RootVec> realize_positive_roots(const TypeASubsystem& sub);

// True iff the set (together with its negatives) is closed under the
// reflections it generates. Inputs are integer root vectors.
bool is_reflection_closed(const std::vector<RootVec>& positive_roots);
bool verify_subsystem_closed(const TypeASubsystem& sub);

}  // namespace symidx
