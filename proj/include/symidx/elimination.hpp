#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symidx/index_table.hpp"

// Mechanized case searches for the quaternionic Grassmannians
// Sp_2r/Sp_rSp_r: candidate enumeration over the catalog under the admissible
// structure for reducible submanifolds with rank-one factors, the isotropy
// bounds rk(H) <= r, dim(H) <= 2r^2-3r+4 (H not sp_r), rk(K') <= 2r,
// dim(K') < 2r(2r+1), and the induction that extends the base cases
// r = 3, 4, 5 to every r.

namespace symidx {

struct IsotropyBounds {
  int r = 0;
  int factor_rank_max = 0;   // rk(H) <= r
  int factor_dim_max = 0;    // dim(H) <= 2r^2 - 3r + 4, unless H = sp_r
  int total_rank_max = 0;    // rk(K') <= 2r
  int total_dim_limit = 0;   // dim(K') < 2r(2r+1)
};

IsotropyBounds isotropy_bounds(int r);  // r >= 3

// Smallest d >= 1 with d(d-1) >= 2(n - r - 1).
int bo16_gap_bound(int n, int r);

// Codimension bound for a totally geodesic submanifold of a product that
// contains neither factor: i(M1) + i(M2).
int product_codim_bound(int index1, int index2);

// A candidate submanifold: a product of compact simply connected catalog
// spaces. Admissible shapes: a single irreducible space (any rank), a product
// of exactly two spheres, or a product in which every factor has rank >= 2.
struct Candidate {
  std::vector<SymmetricSpace> factors;  // compact forms, sorted (dim desc, name asc)
  int dim = 0;
  int rank = 0;
  GroupDescriptor isotropy;
  bool two_sphere_product = false;
  std::string provenance;  // enumeration rule that admitted it

  std::string name() const;  // compact ids joined " x "
};

// All candidates with dim in [dim_lo, dim_hi] and rank <= max_rank,
// deterministically ordered by (rank, dim, name).
std::vector<Candidate> enumerate_candidates(const Catalog& cat, int max_rank, int dim_lo,
                                            int dim_hi);

// The same search phrased against a target space and a codimension window.
std::vector<Candidate> enumerate_candidates(const Catalog& cat, const SymmetricSpace& target,
                                            std::pair<int, int> codim_window);

struct CaseEntry {
  int rank_case = 0;
  Candidate candidate;
  bool killed = false;
  std::string constraint;   // exactly one violated bound, e.g. "rk(H)<=5"
  std::string bound_class;  // "rank" or "dimension"
  std::string detail;       // e.g. "rk(so21)=10"
};

struct Assumption {
  std::string key;
  std::string source;
  std::string statement;
};

struct EliminationReport {
  SymmetricSpace target;  // compact form Sp_2r/Sp_rSp_r
  int r = 0;
  int reflective_index = 0;
  std::pair<int, int> codim_window;  // inclusive
  std::pair<int, int> dim_window;    // inclusive, for candidate dimensions
  IsotropyBounds bounds;
  std::vector<Assumption> assumptions;
  std::vector<CaseEntry> cases;
  std::vector<Candidate> survivors;
  std::optional<int> conclusion;  // = index of target iff survivors empty

  std::string text() const;  // documented line-oriented schema
};

// r in {3, 4, 5}. With use_external_assumptions the codimension window is
// sharpened by the imported classification facts; without, it is
// [4r-4, 4r-1] (the widest window compatible with the centrosome bound).
EliminationReport run_elimination(const Catalog& cat, const IndexTable& table, int r,
                                  bool use_external_assumptions = true);

struct InductionStep {
  int r = 0;
  int value = 0;
  std::string rule;
};

struct InductionTrace {
  int r = 0;
  int value = 0;                     // 4r
  std::vector<InductionStep> steps;  // base first, then each +3 step
  std::string text() const;
};

// Index of Sp_2r/Sp_rSp_r for r >= 3: base cases from run_elimination, then
// the sandwich 4(s+3) = i_r >= i >= i(Sp_2s) + i(Sp_6/Sp_3Sp_3) = 4(s+3).
InductionTrace inductive_sp_index(const Catalog& cat, const IndexTable& table, int r);

// Index of Sp_{2r+k}/Sp_rSp_{r+k} for r >= 3, k >= 0, via the canonical
// totally geodesic Sp_2r/Sp_rSp_r and the reflective index.
int sp_family_index(const Catalog& cat, const IndexTable& table, int r, int k);

struct LagrangianReport {
  int r = 0;
  bool passed = false;
  std::vector<std::string> lines;
  std::string text() const;
};

// Exact integer verification of the codimension estimates for the Lagrangian
// Grassmannians SU*_{2r+2}/Sp_{r+1} (r >= 3): the small-multiplicity chain,
// the sphere cases, the E6/F4 cases, and the all-type-A case.
LagrangianReport lagrangian_checks(const Catalog& cat, int r);

}  // namespace symidx
