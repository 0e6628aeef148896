#include "symidx/hermitian.hpp"

#include <sstream>
#include <stdexcept>

namespace symidx {

bool estimate_inequality(long long d, long long n, long long r) {
  if (d < 0) throw std::invalid_argument("codimension must be >= 0");
  return d * d + 4 * d < 4 * (n - r);
}

bool estimate_inequality_sharp(long long d, long long n, long long sigma_rank) {
  if (d < 0) throw std::invalid_argument("codimension must be >= 0");
  return d * d + 4 * d + 4 * sigma_rank < 4 * n;
}

HermitianCheck hermitian_family_check(const IndexTable& table, const SymmetricSpace& space) {
  if (!space.flags.hermitian)
    throw std::invalid_argument("hermitian check needs a Hermitian space: " + space.name());
  if (space.rank < 2)
    throw std::invalid_argument("hermitian check needs rank >= 2: " + space.name());

  HermitianCheck chk;
  chk.space = space;
  chk.n = space.dim;
  chk.r = space.rank;
  auto rec = table.lookup(space);
  if (!rec) throw std::invalid_argument("no index data for " + space.name());
  chk.i_r = rec->reflective_index;
  chk.source = rec->source;

  // Every d < i_r must lie below n/2 for the complex-submanifold step; this
  // also rules out odd codimensions in the whole window.
  chk.half_dim_ok = 2 * (chk.i_r - 1) < chk.n;
  for (int d = 2; d < chk.i_r; d += 2) {
    chk.tested.push_back(d);
    bool settled = 2 * d < chk.n && estimate_inequality(d, chk.n, chk.r);
    if (!settled) chk.failures.push_back(d);
  }
  chk.conclusive = chk.half_dim_ok && chk.failures.empty();
  if (!chk.conclusive) {
    chk.residual = chk.failures;
    chk.residual.push_back(chk.i_r);
    chk.recorded_index = rec->index;
  }
  return chk;
}

HermitianCheck so2_series_check(const Catalog& cat, const IndexTable& table, int k) {
  if (k < 1) throw std::invalid_argument("SO(2,2+k) series needs k >= 1");
  auto space = cat.instantiate("BDIa", {{"p", 2}, {"q", 2 + k}});
  auto chk = hermitian_family_check(table, space);
  // n = 2k+4, i_r = 2: no even d below 2 exists and d = 1 is odd, so the
  // minimal possible codimension is the reflective one.
  if (chk.n != 2 * k + 4 || chk.i_r != 2 || !chk.tested.empty())
    throw std::logic_error("unexpected SO(2,2+k) data");
  return chk;
}

HermitianSweep hermitian_sweep(const Catalog& cat, const IndexTable& table, int max_rank) {
  if (max_rank < 2) throw std::invalid_argument("sweep needs max rank >= 2");
  HermitianSweep sw;
  sw.max_rank = max_rank;
  bool classical_ok = true;
  auto push = [&](const SymmetricSpace& s, bool classical) {
    auto chk = hermitian_family_check(table, s);
    if (classical) classical_ok = classical_ok && chk.conclusive;
    sw.rows.push_back(std::move(chk));
  };

  for (int r = 3; r <= max_rank; ++r) push(cat.instantiate("CI", {{"r", r}}), true);
  for (int p = 3; p <= max_rank; ++p) push(cat.instantiate("AIIIb", {{"p", p}}), true);
  for (int p = 2; p <= max_rank; ++p)
    for (int k = 1; k <= max_rank; ++k)
      push(cat.instantiate("AIIIa", {{"p", p}, {"q", p + k}}), true);
  for (int m = 3; m <= max_rank; ++m) push(cat.instantiate("DIIIa", {{"m", m}}), true);
  for (int m = 2; m <= max_rank; ++m) push(cat.instantiate("DIIIb", {{"m", m}}), true);
  for (int k = 1; k <= max_rank; ++k) {
    sw.rows.push_back(so2_series_check(cat, table, k));
    classical_ok = classical_ok && sw.rows.back().conclusive;
  }
  push(cat.instantiate("EIII", {}), false);
  push(cat.instantiate("EVII", {}), false);

  sw.all_classical_conclusive = classical_ok;
  return sw;
}

std::string HermitianSweep::text() const {
  std::ostringstream os;
  os << "hermitian max-rank=" << max_rank << "\n";
  for (const auto& c : rows) {
    os << "check space=" << c.space.name() << " dim=" << c.n << " rank=" << c.r
       << " reflective-index=" << c.i_r << " tested=";
    if (c.tested.empty())
      os << "-";
    else
      os << c.tested.front() << ".." << c.tested.back();
    if (c.conclusive) {
      os << " verdict=conclusive index=" << c.i_r;
    } else {
      os << " verdict=inconclusive residual={";
      for (size_t i = 0; i < c.residual.size(); ++i)
        os << (i ? "," : "") << c.residual[i];
      os << "}";
      if (c.recorded_index) os << " recorded-index=" << *c.recorded_index << " source=" << c.source;
    }
    os << "\n";
  }
  os << "classical verdict=" << (all_classical_conclusive ? "conclusive" : "INCONCLUSIVE")
     << "\n";
  return os.str();
}

}  // namespace symidx
