#include <doctest.h>

#include <set>

#include "symidx/catalog.hpp"

using namespace symidx;

TEST_CASE("instantiate: stated examples") {
  const auto& cat = Catalog::builtin();

  // Lagrangian Grassmannian at rank 3
  auto lg = cat.instantiate("AII", {{"n", 4}});
  CHECK(lg.noncompact_id == "SU*8/Sp4");
  CHECK(lg.compact_id == "SU8/Sp4");
  CHECK(lg.dim == 27);
  CHECK(lg.rank == 3);
  CHECK(lg.roots == RootSystem{RootFamily::A, 3});
  CHECK(lg.mult == Multiplicities{4, 4});

  auto e6f4 = cat.instantiate("EIV", {});
  CHECK(e6f4.dim == 26);
  CHECK(e6f4.rank == 2);
  CHECK(e6f4.mult == Multiplicities{8, 8});

  // real Grassmannian SO(3,7): rank 3, multiplicities (1, 4)
  auto gr = cat.instantiate("BDIa", {{"p", 3}, {"q", 7}});
  CHECK(gr.rank == 3);
  CHECK(gr.mult == Multiplicities{1, 4});
  CHECK(gr.roots.family == RootFamily::B);

  CHECK_THROWS_AS(cat.instantiate("NoSuchFamily", {}), std::invalid_argument);
  CHECK_THROWS_AS(cat.instantiate("CIIb", {{"p", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(cat.instantiate("CIIb", {{"q", 3}}), std::invalid_argument);
}

TEST_CASE("duality is an involution preserving all data") {
  const auto& cat = Catalog::builtin();
  EnumFilter f;
  f.max_dim = 120;
  f.compact_form = false;
  for (const auto& s : cat.enumerate(f)) {
    auto d = dual(s);
    CHECK(d.compact_form);
    CHECK(d.name() == s.compact_id);
    CHECK(d.dim == s.dim);
    CHECK(d.rank == s.rank);
    CHECK(d.roots == s.roots);
    CHECK(d.mult == s.mult);
    CHECK(d.isotropy.dim() == s.isotropy.dim());
    auto dd = dual(d);
    CHECK(dd.name() == s.name());
    CHECK_FALSE(dd.compact_form);
  }
  // the dual pair of the quaternionic Grassmannian, by name
  auto nc = cat.find("Sp(3,3)/Sp3xSp3");
  REQUIRE(nc);
  CHECK_FALSE(nc->compact_form);
  CHECK(dual(*nc).name() == "Sp6/Sp3xSp3");
  auto c = cat.find("Sp6/Sp3xSp3");
  REQUIRE(c);
  CHECK(c->compact_form);
  auto sl = cat.find("SL4(R)/SO4");
  REQUIRE(sl);
  CHECK(dual(*sl).name() == "SU4/SO4");
}

TEST_CASE("dimension formula: stated examples and exhaustive sweep") {
  const auto& cat = Catalog::builtin();
  // SU*8/Sp4: 4*6 + 0 + 3 = 27
  auto lg = cat.instantiate("AII", {{"n", 4}});
  CHECK(validate_dimension_formula(lg));
  auto counts = positive_root_counts(lg.roots);
  CHECK(lg.mult.m_long * counts.long_roots + lg.mult.m_short * counts.short_roots + lg.rank ==
        27);
  // sphere: one positive root of multiplicity n-1
  auto sph = cat.find("S7");
  REQUIRE(sph);
  CHECK(sph->mult.m_long == 6);
  CHECK(validate_dimension_formula(*sph));
  // Sp6/Sp3Sp3: C3 with (3,4): 3*3 + 4*6 + 3 = 36
  auto qg = cat.instantiate("CIIb", {{"p", 3}});
  CHECK(qg.dim == 36);
  auto qc = positive_root_counts(qg.roots);
  CHECK(qc == PositiveRootCounts{3, 6});
  CHECK(qg.mult == Multiplicities{3, 4});
  CHECK(validate_dimension_formula(qg));

  EnumFilter all;
  all.max_dim = cat.ceiling();
  int n = 0;
  bool has_e8c = false;
  for (const auto& s : cat.enumerate(all)) {
    CHECK(validate_dimension_formula(s));
    if (s.noncompact_id == "E8(C)/E8") {
      has_e8c = true;
      CHECK(s.dim == 248);
    }
    ++n;
  }
  CHECK(has_e8c);
  CHECK(n > 1000);
}

TEST_CASE("enumerate: the three stated windows") {
  const auto& cat = Catalog::builtin();
  auto ids = [&](int rank, int lo, int hi) {
    EnumFilter f;
    f.exact_rank = rank;
    f.min_dim = lo;
    f.max_dim = hi;
    f.compact_form = true;
    std::set<std::string> out;
    for (const auto& s : cat.enumerate(f)) out.insert(s.name());
    return out;
  };
  CHECK(ids(2, 25, 27) == std::set<std::string>{"SO15/SO2xSO13", "E6/F4"});
  CHECK(ids(3, 25, 27) == std::set<std::string>{"SO12/SO3xSO9", "SU8/Sp4"});
  CHECK(ids(4, 81, 84) == std::set<std::string>{"SO25/SO4xSO21"});
}

TEST_CASE("enumerate: ceiling, ordering, uniqueness") {
  const auto& cat = Catalog::builtin();
  EnumFilter f;
  f.max_dim = cat.ceiling() + 1;
  CHECK_THROWS_AS(cat.enumerate(f), std::invalid_argument);
  f.max_dim = 100;
  auto v = cat.enumerate(f);
  std::set<std::string> names;
  for (size_t i = 0; i < v.size(); ++i) {
    names.insert(v[i].name());
    if (i) {
      bool ordered = v[i - 1].dim < v[i].dim ||
                     (v[i - 1].dim == v[i].dim &&
                      (v[i - 1].rank < v[i].rank ||
                       (v[i - 1].rank == v[i].rank && v[i - 1].name() < v[i].name())));
      CHECK(ordered);
    }
  }
  CHECK(names.size() == v.size());
}

TEST_CASE("id resolution: canonical forms and aliases") {
  const auto& cat = Catalog::builtin();
  auto canon = [&](const std::string& id) {
    auto s = cat.find(id);
    REQUIRE_MESSAGE(s, id);
    return s->name();
  };
  CHECK(canon("G2_2/SO4") == "G2^2/SO4");
  CHECK(canon("Sp(2,2)/Sp2Sp2") == "Sp(2,2)/Sp2xSp2");
  CHECK(canon("SO_15/SO_2SO_13") == "SO15/SO2xSO13");
  CHECK(canon("SU*4/Sp2") == "SO(1,5)/SO5");  // low-rank isomorphism
  CHECK(canon("SU4/Sp2") == "S5");            // its compact side
  CHECK(canon("Sp2(C)/Sp2") == "SO5(C)/SO5");
  CHECK(canon("Sp2") == "Spin5");
  CHECK(canon("SU(2,2)/S(U2xU2)") == "SO(2,4)/SO2xSO4");
  CHECK(canon("RH8") == "SO(1,8)/SO8");
  CHECK(canon("OH2") == "F4^-20/Spin9");
  CHECK(canon("OP2") == "OP2");
  CHECK(canon("E6^{-14}/Spin10xU1") == "E6^-14/Spin10xU1");
  CHECK_FALSE(cat.find("NoSuchSpace"));
  CHECK_FALSE(cat.find("SO(2,2)/SO2xSO2"));  // reducible, not in the catalog
}

TEST_CASE("flags: inner, hermitian, group manifold, constant curvature") {
  const auto& cat = Catalog::builtin();
  CHECK(cat.find("S6")->flags.inner);
  CHECK_FALSE(cat.find("S7")->flags.inner);
  CHECK(cat.find("S2")->flags.hermitian);
  CHECK_FALSE(cat.find("S4")->flags.hermitian);
  CHECK(cat.find("S9")->flags.constant_curvature);
  CHECK(cat.find("SO(2,7)/SO2xSO7")->flags.hermitian);
  CHECK_FALSE(cat.find("SO(3,8)/SO3xSO8")->flags.hermitian);
  CHECK_FALSE(cat.find("SO(5,5)/SO5xSO5")->flags.inner);  // both odd: outer
  CHECK(cat.find("SO(6,6)/SO6xSO6")->flags.inner);
  CHECK(cat.find("SU3")->flags.group_manifold);
  CHECK_FALSE(cat.find("E6/F4")->flags.external_multiplicities);
  CHECK(cat.find("CP4")->flags.external_multiplicities);  // rank-1 BC labelling
  EnumFilter f;
  f.max_dim = cat.ceiling();
  for (const auto& s : cat.enumerate(f))
    if (s.flags.hermitian) CHECK(s.dim % 2 == 0);
}

TEST_CASE("display names round-trip through the resolver") {
  const auto& cat = Catalog::builtin();
  EnumFilter f;
  f.max_dim = 80;
  f.compact_form = false;
  for (const auto& s : cat.enumerate(f)) {
    auto back = cat.find(s.display_name());
    CAPTURE(s.display_name());
    REQUIRE(back);
    CHECK(back->noncompact_id == s.noncompact_id);
  }
}

TEST_CASE("highest-root coefficients are all ones exactly for type A entries") {
  const auto& cat = Catalog::builtin();
  EnumFilter f;
  f.max_dim = cat.ceiling();
  for (const auto& s : cat.enumerate(f)) {
    CAPTURE(s.noncompact_id);
    bool all_ones = !has_coefficient_exceeding_one(s.roots);
    CHECK(all_ones == (s.roots.family == RootFamily::A));
    // and for type A the hyperplane count is the long-root count
    if (s.roots.family == RootFamily::A)
      CHECK(reflection_hyperplane_count(s.roots) ==
            positive_root_counts(s.roots).long_roots);
  }
}

TEST_CASE("builtin catalog lints clean; a broken catalog does not") {
  CHECK(Catalog::builtin().lint().empty());
  // corrupt one multiplicity: the dimension-formula checksum must catch it
  std::string text = Catalog::builtin_text();
  auto pos = text.find("| 15    | 15");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "| 15    | 14");
  auto broken = Catalog::from_text(text);
  bool found = false;
  for (const auto& i : broken.lint())
    found = found || i.message == "dimension formula violated";
  CHECK(found);
}

TEST_CASE("group descriptor arithmetic") {
  GroupDescriptor g;
  add_factor(g, AlgebraType::so, 4);  // splits into sp1 + sp1
  add_factor(g, AlgebraType::so, 2);  // torus
  add_factor(g, AlgebraType::su, 13);
  CHECK(g.factors.size() == 3);
  CHECK(g.torus_rank == 1);
  CHECK(g.dim() == 3 + 3 + 1 + 168);
  CHECK(g.rank() == 1 + 1 + 1 + 12);
  CHECK(g.name() == "sp1+sp1+su13+u1");
}
