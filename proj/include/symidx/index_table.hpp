#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symidx/catalog.hpp"

// Index data: for every catalog family, the minimal codimension of a
// reflective submanifold (the reflective index) together with a witness
// achieving the minimal codimension of any proper totally geodesic
// submanifold. These are data with literature provenance, not computed from a
// reflective classification; the elimination, lagrangian and hermitian
// modules re-derive the index values the combinatorial arguments reach.
//
// Index and reflective index agree for every family except G2^2/SO4 and its
// compact dual, where the index is 3 and the reflective index is 4.

namespace symidx {

// A product of irreducible catalog spaces plus an optional flat factor.
struct ProductSpace {
  std::vector<SymmetricSpace> factors;
  int flat_dim = 0;  // Euclidean factor R^k

  int dim() const;
  int rank() const;
  GroupDescriptor isotropy() const;
  int isometry_dim() const;
  int isometry_rank() const;
  int hyperplane_count() const;
  bool irreducible() const { return flat_dim == 0 && factors.size() == 1; }
  std::string display(bool compact) const;  // factors joined " x ", flats as R / R^k
};

struct IndexRecord {
  std::string space;
  int index = 0;
  int reflective_index = 0;
  bool exceptional = false;             // exactly the G2/SO4 dual pair
  std::vector<ProductSpace> witnesses;  // first is primary
  int witness_codim = 0;                // = index
  std::string source;                   // literature tag for the datum
};

class IndexTable {
 public:
  explicit IndexTable(const Catalog& cat) : cat_(&cat) {}

  // nullopt = outside encoded coverage (never a guess).
  std::optional<IndexRecord> lookup(const SymmetricSpace& s) const;
  std::optional<int> reflective_index(const SymmetricSpace& s) const;
  std::optional<int> index(const SymmetricSpace& s) const;

  // Sum of factor indices for a semisimple product; a flat factor makes the
  // value unknown (nullopt).
  std::optional<int> product_index(const ProductSpace& p) const;

  // Witness spec: atoms joined by " x "; an atom is "R" or a space id. The
  // degenerate names SO(1,1)/SO1, SO(2,2)/SO2xSO2 and SO4(C)/SO4 resolve to
  // R, RH2 x RH2 and RH3 x RH3 respectively.
  ProductSpace resolve_witness(const std::string& spec) const;

  // Classification-table reproduction: one record per table row at the
  // smallest admissible parameters; `samples` > 0 adds that many larger
  // parameter choices per parametric row. Ordered by root-system blocks
  // (A, B, C, D, BC, E6, E7, E8, F4, G2).
  struct Row {
    std::string family;
    std::map<std::string, int> params;
    SymmetricSpace space;  // noncompact form
    IndexRecord record;
  };
  std::vector<Row> table_rows(int samples) const;

  const Catalog& catalog() const { return *cat_; }

 private:
  const Catalog* cat_;
};

enum class ObstructionStatus { pass, fail, indeterminate };

struct ObstructionResult {
  ObstructionStatus status = ObstructionStatus::pass;
  std::vector<std::string> violated;  // every violated condition, in checking order
  std::string missing;                // indeterminate: the datum that is unknown
};

// The necessary conditions for a totally geodesic embedding sub -> ambient:
// six dimension/rank comparisons plus the two index conditions
// i(Sigma) <= i(M) <= dim(M) - dim(Sigma).
ObstructionResult obstruction_check(const IndexTable& table, const ProductSpace& sub,
                                    const SymmetricSpace& ambient);
ObstructionResult obstruction_check(const IndexTable& table, const SymmetricSpace& sub,
                                    const SymmetricSpace& ambient);

}  // namespace symidx
