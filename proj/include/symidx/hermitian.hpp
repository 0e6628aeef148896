#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symidx/index_table.hpp"

// The Hermitian inequality engine. A maximal totally geodesic submanifold of
// an irreducible Hermitian symmetric space with codimension d below half the
// dimension is complex, so d is even; if additionally
//
//     d^2/4 + d < dim - rank
//
// the submanifold is reflective. Sweeping every even d below the reflective
// index therefore decides the index for a family, or returns the residual
// set of codimensions the inequality cannot exclude.

namespace symidx {

// Exact integers; d even makes d^2/4 integral, the comparison is done as
// d^2 + 4d < 4(n - r) so odd d needs no rational arithmetic.
bool estimate_inequality(long long d, long long n, long long r);

// Sharper form with the submanifold rank; exposed for completeness, the
// sweeps use the weaker ambient-rank form since rk(Sigma) is unknown.
bool estimate_inequality_sharp(long long d, long long n, long long sigma_rank);

struct HermitianCheck {
  SymmetricSpace space;
  int n = 0;   // dim
  int r = 0;   // rank
  int i_r = 0;
  bool half_dim_ok = false;    // every d < i_r also has d < n/2 (complexity applies)
  std::vector<int> tested;     // even d with 0 < d < i_r
  std::vector<int> failures;   // tested d where the inequality fails
  bool conclusive = false;     // failures empty: index = reflective index
  std::vector<int> residual;   // failures + {i_r} when inconclusive
  std::optional<int> recorded_index;  // index data consulted when inconclusive
  std::string source;
};

HermitianCheck hermitian_family_check(const IndexTable& table, const SymmetricSpace& space);

// SO(2,2+k)/SO2xSO(2+k): n = 2k+4, rank 2, reflective index 2. Any proper
// codimension below n/2 forces a complex submanifold, so the minimal even
// codimension 2 is attained and the check is conclusive immediately.
HermitianCheck so2_series_check(const Catalog& cat, const IndexTable& table, int k);

struct HermitianSweep {
  int max_rank = 0;
  std::vector<HermitianCheck> rows;
  bool all_classical_conclusive = false;
  std::string text() const;
};

// Sweeps the classical Hermitian families (Sp_r(R)/U_r, SU(p,q), SO*_{2n},
// SO(2,2+k)) through the given rank bound plus the two exceptional Hermitian
// spaces.
HermitianSweep hermitian_sweep(const Catalog& cat, const IndexTable& table, int max_rank);

}  // namespace symidx
