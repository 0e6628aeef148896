#include <doctest.h>

#include "symidx/hermitian.hpp"

using namespace symidx;

namespace {
const Catalog& cat() { return Catalog::builtin(); }
IndexTable table() { return IndexTable(cat()); }
}  // namespace

TEST_CASE("reflectivity inequality: stated values") {
  // Sp_r(R)/U_r: n = r^2 + r; at d = 2r-4: r^2 - 2r < r^2, at d = 2r-2: r^2 - 1 < r^2
  for (int r = 3; r <= 20; ++r) {
    long long n = r * (r + 1);
    CHECK(estimate_inequality(2 * r - 4, n, r));
    CHECK(estimate_inequality(2 * r - 2, n, r));
  }
  // E6^-14/Spin10 U1: n = 32, r = 2: fails exactly beyond d = 8
  for (int d : {2, 4, 6, 8}) CHECK(estimate_inequality(d, 32, 2));
  CHECK_FALSE(estimate_inequality(10, 32, 2));
  // d = 0 holds for any space
  EnumFilter f;
  f.max_dim = 100;
  for (const auto& s : cat().enumerate(f)) CHECK(estimate_inequality(0, s.dim, s.rank));
  CHECK_THROWS_AS(estimate_inequality(-2, 32, 2), std::invalid_argument);
  // the sharper form implies the weak form when rk(Sigma) <= rk(M)
  for (int d = 2; d <= 20; d += 2)
    for (int n = 20; n <= 60; n += 7)
      for (int rm = 2; rm <= 4; ++rm)
        for (int rs = 0; rs <= rm; ++rs)
          if (estimate_inequality(d, n, rm)) CHECK(estimate_inequality_sharp(d, n, rs));
}

TEST_CASE("inequality failure is monotone in the codimension") {
  for (int n = 10; n <= 140; n += 13)
    for (int r = 2; r <= 6; ++r) {
      bool failed = false;
      for (int d = 2; d <= n; d += 2) {
        bool ok = estimate_inequality(d, n, r);
        if (failed) CHECK_FALSE(ok);
        failed = failed || !ok;
      }
    }
}

TEST_CASE("family checks: stated examples") {
  auto t = table();
  // SO*_{4r+2}/U_{2r+1}: conclusive at every rank
  for (int m = 2; m <= 12; ++m) {
    auto chk = hermitian_family_check(t, cat().instantiate("DIIIb", {{"m", m}}));
    CAPTURE(m);
    CHECK(chk.conclusive);
    CHECK(chk.i_r == 4 * m);
    CHECK(chk.n == 4 * m * m + 2 * m);
  }
  auto eiii = hermitian_family_check(t, cat().instantiate("EIII", {}));
  CHECK_FALSE(eiii.conclusive);
  CHECK(eiii.residual == std::vector<int>{10, 12});
  CHECK(eiii.recorded_index == 12);
  auto evii = hermitian_family_check(t, cat().instantiate("EVII", {}));
  CHECK_FALSE(evii.conclusive);
  CHECK(evii.residual == std::vector<int>{14, 16, 18, 20, 22});
  CHECK(evii.recorded_index == 22);

  CHECK_THROWS_AS(hermitian_family_check(t, cat().instantiate("EIV", {})),
                  std::invalid_argument);  // not Hermitian
  CHECK_THROWS_AS(hermitian_family_check(t, *cat().find("CP5")),
                  std::invalid_argument);  // rank 1
}

TEST_CASE("SO(2,2+k) series: conclusive with index 2") {
  auto t = table();
  for (int k = 1; k <= 12; ++k) {
    auto chk = so2_series_check(cat(), t, k);
    CAPTURE(k);
    CHECK(chk.conclusive);
    CHECK(chk.i_r == 2);
    CHECK(chk.n == 2 * k + 4);
    CHECK(chk.tested.empty());  // no even d below 2; d = 1 is odd
  }
  CHECK_THROWS_AS(so2_series_check(cat(), table(), 0), std::invalid_argument);
}

TEST_CASE("sweep: classical families conclusive, exceptional residuals exact") {
  auto t = table();
  auto sw = hermitian_sweep(cat(), t, 12);
  CHECK(sw.all_classical_conclusive);
  int inconclusive = 0;
  for (const auto& row : sw.rows)
    if (!row.conclusive) {
      ++inconclusive;
      bool exceptional = row.space.family == "EIII" || row.space.family == "EVII";
      CHECK(exceptional);
    }
  CHECK(inconclusive == 2);
}
