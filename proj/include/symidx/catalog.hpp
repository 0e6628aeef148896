#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symidx/rootsys.hpp"

// The catalog of irreducible Riemannian symmetric spaces, stored as one
// record per dual pair (noncompact form ~ compact form) with parameter
// ranges and small integer formulas. Records are parsed from a line-oriented
// text file (an embedded copy is the default, --catalog overrides); every
// derived number is recomputed from the formulas, never stored, and the
// dimension formula
//
//     dim = m1 * (# positive long roots) + m2 * (# positive short roots) + rank
//
// acts as a checksum on every instantiation. Parameter ranges exclude the
// low-rank isomorphic instantiations (e.g. SU*_4/Sp_2 = RH^5); an alias table
// maps those names to their canonical records so lookups still resolve.

namespace symidx {

enum class AlgebraType { su, so, sp, u1, e6, e7, e8, f4, g2 };

// A simple (or, for u1, abelian) factor of a compact isotropy group.
struct SimpleFactor {
  AlgebraType type = AlgebraType::u1;
  int n = 0;  // su_n, so_n, sp_n; unused for the fixed algebras

  int dim() const;
  int rank() const;
  std::string name() const;  // "su8", "so13", "f4", ...
  bool operator==(const SimpleFactor&) const = default;
};

struct GroupDescriptor {
  // Simple factors only; so_2 arrives as torus rank, so_4 split as sp1+sp1.
  std::vector<SimpleFactor> factors;
  int torus_rank = 0;

  int dim() const;
  int rank() const;
  std::string name() const;

  static GroupDescriptor sum(const GroupDescriptor& a, const GroupDescriptor& b);
};

// Appends a factor with the normalizations above (so2 -> torus, so4 -> sp1+sp1).
void add_factor(GroupDescriptor& g, AlgebraType type, int n);

struct Multiplicities {
  int m_long = 1;   // m1
  int m_short = 1;  // m2; equals m1 when there are no short roots
  int max() const { return m_long > m_short ? m_long : m_short; }
  bool operator==(const Multiplicities&) const = default;
};

struct SpaceFlags {
  bool inner = false;
  bool hermitian = false;
  bool group_manifold = false;
  bool constant_curvature = false;
  bool external_multiplicities = false;  // rank-1 BC labelling taken from the literature
};

struct SymmetricSpace {
  std::string family;  // record key, e.g. "CIIb"
  std::map<std::string, int> params;
  std::string noncompact_id;
  std::string compact_id;
  bool compact_form = false;  // which side of the dual pair this object denotes
  int dim = 0;
  int rank = 0;
  RootSystem roots;
  Multiplicities mult;
  GroupDescriptor isotropy;
  SpaceFlags flags;
  int isometry_rank = 0;  // rank of the compact isometry group

  const std::string& name() const { return compact_form ? compact_id : noncompact_id; }
  // Short display name: RH/CH/HH aliases for the rank-one hyperbolic families.
  std::string display_name() const;
  int isometry_dim() const { return isotropy.dim() + dim; }
};

// Duality: compact <-> noncompact form of the same record. An involution that
// preserves dim, rank, root system, multiplicities and isotropy.
SymmetricSpace dual(const SymmetricSpace& s);

bool validate_dimension_formula(const SymmetricSpace& s);

struct EnumFilter {
  int max_dim = 260;
  int min_dim = 1;
  std::optional<int> exact_rank;
  std::optional<std::pair<int, int>> rank_range;  // inclusive
  bool compact_form = true;
  bool require_simply_connected_cover = true;  // catalog entries are such covers already
  bool exclude_rank_one = false;
};

class Catalog {
 public:
  static const Catalog& builtin();
  static Catalog from_text(const std::string& text);
  static Catalog from_file(const std::string& path);
  static const std::string& builtin_text();

  int ceiling() const { return ceiling_; }

  // Throws std::invalid_argument on unknown family or out-of-range params.
  SymmetricSpace instantiate(const std::string& family_key,
                             const std::map<std::string, int>& params) const;

  // Resolves canonical ids and documented aliases, compact or noncompact.
  std::optional<SymmetricSpace> find(const std::string& id) const;

  // Every instantiation matching the filter, ordered by (dim, rank, name).
  // Throws if filter.max_dim exceeds the catalog ceiling.
  std::vector<SymmetricSpace> enumerate(const EnumFilter& filter) const;

  std::vector<std::string> family_keys() const;

  struct LintIssue {
    std::string record;
    std::string message;
  };
  std::vector<LintIssue> lint() const;

  Catalog(Catalog&&) noexcept;
  Catalog& operator=(Catalog&&) noexcept;
  ~Catalog();

 private:
  Catalog();
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int ceiling_ = 260;
};

// Canonical-grammar normalization applied to ids before lookup (documented in
// the README): strips braces/spaces, turns digit_ into ^, splits concatenated
// isotropy factors with 'x'.
std::string normalize_space_id(const std::string& raw);

}  // namespace symidx
