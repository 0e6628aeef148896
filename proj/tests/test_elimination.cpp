#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "symidx/elimination.hpp"

using namespace symidx;

namespace {
const Catalog& cat() { return Catalog::builtin(); }
IndexTable table() { return IndexTable(cat()); }

std::set<std::string> candidate_names(const std::vector<Candidate>& cs, int rank) {
  std::set<std::string> out;
  for (const auto& c : cs)
    if (c.rank == rank) out.insert(c.name());
  return out;
}
}  // namespace

TEST_CASE("isotropy bounds: stated values") {
  auto b4 = isotropy_bounds(4);
  CHECK(b4.factor_dim_max == 24);
  auto b5 = isotropy_bounds(5);
  CHECK(b5.total_rank_max == 10);
  CHECK(b5.total_dim_limit == 110);
  CHECK(b5.factor_dim_max == 39);
  auto b3 = isotropy_bounds(3);
  CHECK(b3.factor_rank_max == 3);
  CHECK(b3.total_rank_max == 6);
  CHECK(b3.total_dim_limit == 42);
  CHECK_THROWS_AS(isotropy_bounds(2), std::invalid_argument);
  // the f4 factor of E6/F4 violates the rank bound at r = 3
  auto e6f4 = cat().instantiate("EIV", {});
  CHECK(e6f4.isotropy.factors.front().rank() == 4);
  CHECK(e6f4.isotropy.factors.front().rank() > b3.factor_rank_max);
}

TEST_CASE("codimension gap bound: stated values") {
  CHECK(bo16_gap_bound(36, 3) == 9);
  CHECK(bo16_gap_bound(4, 3) == 1);   // n = r + 1: bound 0
  CHECK(bo16_gap_bound(64, 4) == 12); // d(d-1) >= 118
}

TEST_CASE("product codimension bound") {
  CHECK(product_codim_bound(1, 1) == 2);
  CHECK(product_codim_bound(16, 12) == 28);
  CHECK(product_codim_bound(4 * 7, 12) == 40);
}

TEST_CASE("candidate enumeration: the three stated windows") {
  // target Sp6/Sp3Sp3, dims 25..27, rank 1
  auto c3 = enumerate_candidates(cat(), 3, 25, 27);
  CHECK(candidate_names(c3, 1) == std::set<std::string>{"S25", "S26", "S27", "CP13"});
  // target Sp10/Sp5Sp5, dims 81..84, rank 3
  auto c5 = enumerate_candidates(cat(), 5, 81, 84);
  CHECK(candidate_names(c5, 3) ==
        std::set<std::string>{"SO30/SO3xSO27", "SO31/SO3xSO28", "SU17/S(U3xU14)",
                              "Sp10/Sp3xSp7"});
  // target Sp8/Sp4Sp4, dims 49..52, rank 1 (the stated seven)
  auto c4 = enumerate_candidates(cat(), 4, 49, 52);
  CHECK(candidate_names(c4, 1) ==
        std::set<std::string>{"S49", "S50", "S51", "S52", "CP25", "CP26", "HP13"});
  // a window below every catalog dimension is empty
  CHECK(enumerate_candidates(cat(), 3, 1, 1).empty());
  // the codimension-window form agrees with the dimension-window form
  auto target = cat().instantiate("CIIb", {{"p", 4}});
  target.compact_form = true;
  auto via_codim = enumerate_candidates(cat(), target, {12, 15});
  REQUIRE(via_codim.size() == c4.size());
  for (size_t i = 0; i < c4.size(); ++i) CHECK(via_codim[i].name() == c4[i].name());
  CHECK_THROWS_AS(enumerate_candidates(cat(), target, {15, 12}), std::invalid_argument);
}

TEST_CASE("candidate enumeration: admissible shapes only, deterministic order") {
  auto cs = enumerate_candidates(cat(), 5, 81, 84);
  for (size_t i = 0; i < cs.size(); ++i) {
    const auto& c = cs[i];
    // shapes: single space, two spheres, or every factor of rank >= 2
    if (c.factors.size() > 1 && !c.two_sphere_product)
      for (const auto& f : c.factors) CHECK(f.rank >= 2);
    if (c.two_sphere_product) {
      CHECK(c.factors.size() == 2);
      CHECK(c.factors[0].flags.constant_curvature);
      CHECK(c.factors[1].flags.constant_curvature);
    }
    // sums recomputed from factors
    int dim = 0, rank = 0;
    for (const auto& f : c.factors) {
      dim += f.dim;
      rank += f.rank;
    }
    CHECK(c.dim == dim);
    CHECK(c.rank == rank);
    if (i) {
      bool ordered =
          cs[i - 1].rank < c.rank ||
          (cs[i - 1].rank == c.rank &&
           (cs[i - 1].dim < c.dim || (cs[i - 1].dim == c.dim && cs[i - 1].name() < c.name())));
      CHECK(ordered);
    }
  }
}

namespace {

// Kill classes the case analysis cites for its named candidates.
struct Expected {
  int r;
  const char* name;
  const char* cls;
};

const Expected kExpectedKills[] = {
    // r = 3
    {3, "S25", "rank"},
    {3, "S26", "rank"},
    {3, "S27", "rank"},
    {3, "CP13", "rank"},
    {3, "SO15/SO2xSO13", "rank"},
    {3, "E6/F4", "rank"},
    {3, "SO12/SO3xSO9", "rank"},
    // r = 4
    {4, "S49", "rank"},
    {4, "S50", "rank"},
    {4, "S51", "rank"},
    {4, "S52", "rank"},
    {4, "CP25", "rank"},
    {4, "CP26", "rank"},
    {4, "HP13", "rank"},
    {4, "SO27/SO2xSO25", "rank"},
    {4, "SO28/SO2xSO26", "rank"},
    {4, "SU15/S(U2xU13)", "rank"},
    {4, "SO20/SO3xSO17", "rank"},
    {4, "SO17/SO4xSO13", "rank"},
    {4, "E6/F4 x SO14/SO2xSO12", "dimension"},
    {4, "E6/F4 x SU8/S(U2xU6)", "dimension"},
    {4, "E6/F4 x Sp5/Sp2xSp3", "dimension"},
    {4, "E6/F4 x E6/F4", "dimension"},
    {4, "E6/Spin10xU1 x SO11/SO2xSO9", "rank"},
    {4, "E6/Spin10xU1 x SO12/SO2xSO10", "rank"},
    {4, "E6/Spin10xU1 x SU7/S(U2xU5)", "rank"},
    {4, "Sp6/Sp2xSp4 x SO11/SO2xSO9", "rank"},
    {4, "Sp6/Sp2xSp4 x SO12/SO2xSO10", "rank"},
    {4, "Sp6/Sp2xSp4 x SU7/S(U2xU5)", "rank"},
    // r = 5
    {5, "S81", "rank"},
    {5, "S82", "rank"},
    {5, "S83", "rank"},
    {5, "S84", "rank"},
    {5, "CP41", "rank"},
    {5, "CP42", "rank"},
    {5, "HP21", "rank"},
    {5, "SO43/SO2xSO41", "rank"},
    {5, "SO44/SO2xSO42", "rank"},
    {5, "SU23/S(U2xU21)", "rank"},
    {5, "SO30/SO3xSO27", "rank"},
    {5, "SO31/SO3xSO28", "rank"},
    {5, "SU17/S(U3xU14)", "rank"},
    {5, "Sp10/Sp3xSp7", "rank"},
    {5, "SO25/SO4xSO21", "rank"},
    {5, "Sp8/Sp3xSp5 x SO13/SO2xSO11", "rank"},
    {5, "Sp8/Sp3xSp5 x SO14/SO2xSO12", "rank"},
    {5, "Sp8/Sp3xSp5 x SU8/S(U2xU6)", "rank"},
    {5, "Sp8/Sp3xSp5 x Sp5/Sp2xSp3", "rank"},
    {5, "Sp7/Sp3xSp4 x SO19/SO2xSO17", "rank"},
    {5, "Sp7/Sp3xSp4 x SO20/SO2xSO18", "rank"},
    {5, "Sp7/Sp3xSp4 x SU11/S(U2xU9)", "rank"},
};

}  // namespace

TEST_CASE("elimination base cases: zero survivors, named candidates, cited classes") {
  auto t = table();
  for (int r : {3, 4, 5}) {
    auto rep = run_elimination(cat(), t, r);
    CAPTURE(r);
    CHECK(rep.survivors.empty());
    REQUIRE(rep.conclusion);
    CHECK(*rep.conclusion == 4 * r);
    CHECK(rep.reflective_index == 4 * r);

    std::map<std::string, const CaseEntry*> by_name;
    for (const auto& e : rep.cases) {
      CHECK(e.killed);
      CHECK_FALSE(e.constraint.empty());
      by_name[e.candidate.name()] = &e;
      // sphere pairs die by the dimension rule, as the case analysis computes
      if (e.candidate.two_sphere_product) CHECK(e.bound_class == "dimension");
    }
    for (const auto& exp : kExpectedKills) {
      if (exp.r != r) continue;
      CAPTURE(exp.name);
      auto it = by_name.find(exp.name);
      REQUIRE_MESSAGE(it != by_name.end(), "named candidate missing from report");
      CHECK(it->second->bound_class == exp.cls);
    }
    // representative sphere pairs appear
    if (r == 3) CHECK(by_name.count("S13 x S12"));
    if (r == 4) CHECK(by_name.count("S25 x S24"));
    if (r == 5) CHECK(by_name.count("S41 x S40"));
    // candidates beyond the cited case lists are enumerated and killed too:
    // SU8/Sp4 fits the rank-3 window of r=3, the group manifold F4 the
    // rank-4 window of r=4
    if (r == 3) {
      REQUIRE(by_name.count("SU8/Sp4"));
      CHECK(by_name.at("SU8/Sp4")->bound_class == "rank");
    }
    if (r == 4) {
      REQUIRE(by_name.count("F4"));
      CHECK(by_name.at("F4")->bound_class == "dimension");
      CHECK(by_name.at("F4")->candidate.factors.front().flags.group_manifold);
    }
  }
}

TEST_CASE("elimination window values") {
  auto t = table();
  auto r3 = run_elimination(cat(), t, 3);
  CHECK(r3.codim_window == std::pair<int, int>{9, 11});
  CHECK(r3.dim_window == std::pair<int, int>{25, 27});
  auto r4 = run_elimination(cat(), t, 4);
  CHECK(r4.codim_window == std::pair<int, int>{12, 15});
  CHECK(r4.dim_window == std::pair<int, int>{49, 52});
  auto r5 = run_elimination(cat(), t, 5);
  CHECK(r5.codim_window == std::pair<int, int>{16, 19});
  CHECK(r5.dim_window == std::pair<int, int>{81, 84});
  CHECK_THROWS_AS(run_elimination(cat(), t, 6), std::invalid_argument);
  CHECK_THROWS_AS(run_elimination(cat(), t, 2), std::invalid_argument);
}

TEST_CASE("elimination without external assumptions stays conclusive") {
  auto t = table();
  for (int r : {3, 4, 5}) {
    auto rep = run_elimination(cat(), t, r, false);
    CAPTURE(r);
    CHECK(rep.codim_window == std::pair<int, int>{4 * r - 4, 4 * r - 1});
    CHECK(rep.survivors.empty());
    CHECK(*rep.conclusion == 4 * r);
    bool has_gap = false;
    for (const auto& a : rep.assumptions) has_gap = has_gap || a.key == "codimension-gap";
    CHECK_FALSE(has_gap);
  }
}

TEST_CASE("induction: values and traces") {
  auto t = table();
  for (int r = 3; r <= 50; ++r) {
    auto tr = inductive_sp_index(cat(), t, r);
    CAPTURE(r);
    CHECK(tr.value == 4 * r);
  }
  CHECK_THROWS_AS(inductive_sp_index(cat(), t, 2), std::invalid_argument);
  auto t6 = inductive_sp_index(cat(), t, 6);
  REQUIRE(t6.steps.size() == 2);
  CHECK(t6.steps.front().r == 3);  // base
  auto t20 = inductive_sp_index(cat(), t, 20);
  CHECK(t20.steps.size() == 6);  // base 5, then 8, 11, 14, 17, 20
  CHECK(t20.steps.front().r == 5);
  CHECK(t20.value == 80);
}

TEST_CASE("index of the wider quaternionic family via the reduction") {
  auto t = table();
  for (int r = 3; r <= 10; ++r)
    for (int k = 0; k <= 5; ++k) {
      CAPTURE(r);
      CAPTURE(k);
      CHECK(sp_family_index(cat(), t, r, k) == 4 * r);
    }
}

TEST_CASE("lagrangian checks: boundary and stated instances") {
  for (int r : {3, 4, 5, 6, 7, 12}) {
    auto rep = lagrangian_checks(cat(), r);
    CAPTURE(r);
    CAPTURE(rep.text());
    CHECK(rep.passed);
  }
  auto r3 = lagrangian_checks(cat(), 3);
  bool boundary = false;
  for (const auto& l : r3.lines) boundary = boundary || l.find("r(r+1) = 12") != std::string::npos;
  CHECK(boundary);
  auto r5 = lagrangian_checks(cat(), 5);
  bool c31 = false;
  for (const auto& l : r5.lines) c31 = c31 || l.find("31 > 20") != std::string::npos;
  CHECK(c31);
  auto r6 = lagrangian_checks(cat(), 6);
  bool c49 = false;
  for (const auto& l : r6.lines) c49 = c49 || l.find("49 > 24") != std::string::npos;
  CHECK(c49);
  CHECK_THROWS_AS(lagrangian_checks(cat(), 2), std::invalid_argument);
}

TEST_CASE("candidate sums stay consistent under random factor lists") {
  std::mt19937 rng(20240817);
  EnumFilter f;
  f.max_dim = 90;
  f.compact_form = true;
  f.exclude_rank_one = true;
  auto pool = cat().enumerate(f);
  REQUIRE(pool.size() > 10);
  for (int trial = 0; trial < 200; ++trial) {
    int count = 1 + static_cast<int>(rng() % 3);
    std::vector<SymmetricSpace> fs;
    int dim = 0, rank = 0, iso_dim = 0, iso_rank = 0;
    for (int i = 0; i < count; ++i) {
      const auto& s = pool[rng() % pool.size()];
      fs.push_back(s);
      dim += s.dim;
      rank += s.rank;
      iso_dim += s.isotropy.dim();
      iso_rank += s.isotropy.rank();
    }
    ProductSpace p;
    p.factors = fs;
    CHECK(p.dim() == dim);
    CHECK(p.rank() == rank);
    CHECK(p.isotropy().dim() == iso_dim);
    CHECK(p.isotropy().rank() == iso_rank);
  }
}

TEST_CASE("sphere product isotropy dimension formula") {
  auto cands = enumerate_candidates(cat(), 2, 25, 27);
  int checked = 0;
  for (const auto& c : cands) {
    if (!c.two_sphere_product) continue;
    int k1 = c.factors[0].dim, k2 = c.factors[1].dim;
    CHECK(c.isotropy.dim() == (k1 * (k1 - 1) + k2 * (k2 - 1)) / 2);
    ++checked;
  }
  CHECK(checked > 30);
}
