#include "symidx/elimination.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace symidx {

namespace {
std::string num(long long v) { return std::to_string(v); }
}

IsotropyBounds isotropy_bounds(int r) {
  if (r < 3) throw std::invalid_argument("isotropy bounds need r >= 3");
  return {r, r, 2 * r * r - 3 * r + 4, 2 * r, 2 * r * (2 * r + 1)};
}

int bo16_gap_bound(int n, int r) {
  if (n <= r) throw std::invalid_argument("gap bound needs n > r");
  long long need = 2LL * (n - r - 1);
  int d = 1;
  while (static_cast<long long>(d) * (d - 1) < need) ++d;
  return d;
}

int product_codim_bound(int index1, int index2) { return index1 + index2; }

std::string Candidate::name() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " x ";
    s += f.compact_id;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Candidate enumeration

namespace {

Candidate make_candidate(std::vector<SymmetricSpace> fs, bool spheres, std::string prov) {
  std::sort(fs.begin(), fs.end(), [](const SymmetricSpace& a, const SymmetricSpace& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.compact_id < b.compact_id;
  });
  Candidate c;
  c.two_sphere_product = spheres;
  c.provenance = std::move(prov);
  for (auto& f : fs) {
    c.dim += f.dim;
    c.rank += f.rank;
    c.isotropy = GroupDescriptor::sum(c.isotropy, f.isotropy);
  }
  c.factors = std::move(fs);
  return c;
}

// Descending partitions of n into at least two parts, each >= 2.
void product_partitions(int n, int max_part, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (cur.size() >= 2) out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 2; --p) {
    if (n - p == 1) continue;
    cur.push_back(p);
    product_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Candidate> enumerate_candidates(const Catalog& cat, int max_rank, int dim_lo,
                                            int dim_hi) {
  if (dim_lo > dim_hi || dim_lo < 1) throw std::invalid_argument("empty dimension window");
  std::vector<Candidate> out;

  // Irreducible candidates of every rank, including rank 1.
  for (int rank = 1; rank <= max_rank; ++rank) {
    EnumFilter f;
    f.max_dim = dim_hi;
    f.min_dim = dim_lo;
    f.exact_rank = rank;
    f.compact_form = true;
    for (auto& s : cat.enumerate(f))
      out.push_back(make_candidate({s}, false,
                                   rank == 1 ? "rank-1" : "irreducible"));
  }

  // Products of exactly two spheres (the only admissible reducible shape with
  // rank-1 factors).
  if (max_rank >= 2) {
    for (int total = dim_lo; total <= dim_hi; ++total)
      for (int k2 = 2; 2 * k2 <= total; ++k2) {
        int k1 = total - k2;
        auto s1 = cat.find("S" + num(k1));
        auto s2 = cat.find("S" + num(k2));
        if (!s1 || !s2) continue;
        s1->compact_form = s2->compact_form = true;
        out.push_back(make_candidate({*s1, *s2}, true, "two-spheres"));
      }
  }

  // Products in which every factor has rank >= 2.
  auto min_dim_of_rank = [&](int rank) {
    EnumFilter f;
    f.max_dim = cat.ceiling();
    f.exact_rank = rank;
    f.compact_form = true;
    auto v = cat.enumerate(f);
    return v.empty() ? cat.ceiling() + 1 : v.front().dim;
  };

  for (int rank = 4; rank <= max_rank; ++rank) {
    std::vector<std::vector<int>> partitions;
    std::vector<int> cur;
    product_partitions(rank, rank - 2, cur, partitions);
    for (const auto& parts : partitions) {
      std::vector<int> min_rest(parts.size() + 1, 0);
      for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i)
        min_rest[i] = min_rest[i + 1] + min_dim_of_rank(parts[i]);
      std::vector<std::vector<SymmetricSpace>> pools(parts.size());
      for (size_t i = 0; i < parts.size(); ++i) {
        EnumFilter f;
        f.max_dim = dim_hi - (min_rest[0] - min_dim_of_rank(parts[i]));
        f.exact_rank = parts[i];
        f.compact_form = true;
        if (f.max_dim >= 1) pools[i] = cat.enumerate(f);
      }
      std::vector<size_t> choice(parts.size());
      std::vector<SymmetricSpace> fs;
      auto rec = [&](auto&& self, size_t i, int dim_so_far) -> void {
        if (i == parts.size()) {
          if (dim_so_far >= dim_lo && dim_so_far <= dim_hi) {
            std::string prov = "product-";
            for (size_t j = 0; j < parts.size(); ++j)
              prov += (j ? "+" : "") + num(parts[j]);
            out.push_back(make_candidate(fs, false, prov));
          }
          return;
        }
        size_t start = (i > 0 && parts[i] == parts[i - 1]) ? choice[i - 1] : 0;
        for (size_t j = start; j < pools[i].size(); ++j) {
          int d = dim_so_far + pools[i][j].dim;
          if (d + min_rest[i + 1] > dim_hi) continue;
          choice[i] = j;
          fs.push_back(pools[i][j]);
          self(self, i + 1, d);
          fs.pop_back();
        }
      };
      rec(rec, 0, 0);
    }
  }

  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.name() < b.name();
  });
  return out;
}

std::vector<Candidate> enumerate_candidates(const Catalog& cat, const SymmetricSpace& target,
                                            std::pair<int, int> codim_window) {
  if (codim_window.first > codim_window.second)
    throw std::invalid_argument("empty codimension window");
  return enumerate_candidates(cat, target.rank, target.dim - codim_window.second,
                              target.dim - codim_window.first);
}

// ---------------------------------------------------------------------------
// Bound evaluation. Scan order: the dedicated two-sphere rule, then the
// largest factor (rank then dimension per simple factor), then the joint rank
// bound, then the remaining factors, then the joint dimension bound. Each
// killed candidate names exactly one violated constraint.

namespace {

struct Kill {
  std::string constraint;
  std::string cls;
  std::string detail;
};

std::optional<Kill> scan_factor(const SymmetricSpace& f, const IsotropyBounds& b) {
  auto hs = f.isotropy.factors;
  std::sort(hs.begin(), hs.end(), [](const SimpleFactor& a, const SimpleFactor& c) {
    if (a.dim() != c.dim()) return a.dim() > c.dim();
    return a.name() < c.name();
  });
  for (const auto& h : hs) {
    if (h.rank() > b.factor_rank_max)
      return Kill{"rk(H)<=" + num(b.factor_rank_max), "rank",
                  "rk(" + h.name() + ")=" + num(h.rank())};
    bool exempt = h.type == AlgebraType::sp && h.n == b.r;
    if (!exempt && h.dim() > b.factor_dim_max)
      return Kill{"dim(H)<=" + num(b.factor_dim_max), "dimension",
                  "dim(" + h.name() + ")=" + num(h.dim())};
  }
  return std::nullopt;
}

std::optional<Kill> first_violation(const Candidate& c, const IsotropyBounds& b) {
  if (c.two_sphere_product) {
    int dk = c.isotropy.dim();
    if (dk >= b.total_dim_limit)
      return Kill{"dim(K')<" + num(b.total_dim_limit), "dimension",
                  "dim(" + c.isotropy.name() + ")=" + num(dk)};
  }
  if (!c.factors.empty())
    if (auto k = scan_factor(c.factors.front(), b)) return k;
  if (c.isotropy.rank() > b.total_rank_max)
    return Kill{"rk(K')<=" + num(b.total_rank_max), "rank",
                "rk(" + c.isotropy.name() + ")=" + num(c.isotropy.rank())};
  for (size_t i = 1; i < c.factors.size(); ++i)
    if (auto k = scan_factor(c.factors[i], b)) return k;
  if (c.isotropy.dim() >= b.total_dim_limit)
    return Kill{"dim(K')<" + num(b.total_dim_limit), "dimension",
                "dim(" + c.isotropy.name() + ")=" + num(c.isotropy.dim())};
  return std::nullopt;
}

}  // namespace

EliminationReport run_elimination(const Catalog& cat, const IndexTable& table, int r,
                                  bool use_external_assumptions) {
  if (r < 3 || r > 5)
    throw std::invalid_argument(
        "case elimination covers r = 3, 4, 5; larger r follows by induction");

  EliminationReport rep;
  rep.r = r;
  rep.target = cat.instantiate("CIIb", {{"p", r}});
  rep.target.compact_form = true;
  auto ir = table.reflective_index(rep.target);
  if (!ir) throw std::logic_error("no reflective index for the elimination target");
  rep.reflective_index = *ir;

  int lower = 4 * r - 4;
  if (use_external_assumptions)
    lower = std::max({lower, bo16_gap_bound(rep.target.dim, r), 7});
  int upper = 4 * r - 1;
  rep.codim_window = {lower, upper};
  rep.dim_window = {rep.target.dim - upper, rep.target.dim - lower};
  rep.bounds = isotropy_bounds(r);

  rep.assumptions.push_back(
      {"lower-bound", "BO17",
       "i(Sp_r) = 4(r-1); the centrosome Sp_r in Sp_2r/Sp_rSp_r gives i >= 4r-4"});
  rep.assumptions.push_back(
      {"reflective-index", "BO16 Table 4",
       "i_r(Sp_2r/Sp_rSp_r) = 4r, witness Sp_{2r-1}/Sp_{r-1}Sp_r of codimension 4r"});
  rep.assumptions.push_back(
      {"semisimple", "BO16 Thm 4.2",
       "a maximal totally geodesic submanifold of codimension < 4r is semisimple"});
  if (use_external_assumptions) {
    rep.assumptions.push_back(
        {"small-index-classification", "BO16",
         "spaces of index <= 6 are classified; the target is not among them, so codim >= 7"});
    rep.assumptions.push_back(
        {"codimension-gap", "BO16 Prop 7.4",
         "a maximal semisimple candidate of codimension d satisfies d(d-1) >= 2(dim - rank - 1)"});
  }
  rep.assumptions.push_back(
      {"rank-one-structure", "reducible rank-one factor theorem",
       "a reducible candidate whose cover has a rank-1 factor is a product of two spheres "
       "or has codimension >= the reflective index"});
  rep.assumptions.push_back(
      {"sphere-isotropy", "classical",
       "the isotropy algebra of S^k1 x S^k2 is so_k1 + so_k2 of dimension "
       "(k1(k1-1) + k2(k2-1))/2"});

  auto candidates = enumerate_candidates(cat, rep.target, rep.codim_window);
  for (auto& c : candidates) {
    CaseEntry e;
    e.rank_case = c.rank;
    e.candidate = c;
    if (auto kill = first_violation(c, rep.bounds)) {
      e.killed = true;
      e.constraint = kill->constraint;
      e.bound_class = kill->cls;
      e.detail = kill->detail;
    } else {
      rep.survivors.push_back(c);
    }
    rep.cases.push_back(std::move(e));
  }
  if (rep.survivors.empty()) rep.conclusion = rep.reflective_index;
  return rep;
}

std::string EliminationReport::text() const {
  std::ostringstream os;
  SymmetricSpace nc = target.compact_form ? dual(target) : target;
  os << "elimination target=" << target.name() << " dual=" << nc.name()
     << " dim=" << target.dim << " rank=" << target.rank
     << " reflective-index=" << reflective_index << "\n";
  os << "window codim=" << codim_window.first << ".." << codim_window.second
     << " dim=" << dim_window.first << ".." << dim_window.second << "\n";
  os << "bound rk(H)<=" << bounds.factor_rank_max << "\n";
  os << "bound dim(H)<=" << bounds.factor_dim_max << " (H not sp" << bounds.r << ")\n";
  os << "bound rk(K')<=" << bounds.total_rank_max << "\n";
  os << "bound dim(K')<" << bounds.total_dim_limit << "\n";
  for (const auto& a : assumptions)
    os << "assumption " << a.key << " | " << a.source << " | " << a.statement << "\n";
  for (const auto& e : cases) {
    os << "case rank=" << e.rank_case << " candidate=" << e.candidate.name()
       << " dim=" << e.candidate.dim << " shape=" << e.candidate.provenance;
    if (e.killed)
      os << " verdict=killed constraint=" << e.constraint << " class=" << e.bound_class
         << " detail=" << e.detail;
    else
      os << " verdict=survivor";
    os << "\n";
  }
  os << "survivors=" << survivors.size() << "\n";
  if (conclusion)
    os << "conclusion index=" << *conclusion << "\n";
  else
    os << "conclusion inconclusive\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Induction

namespace {

int elimination_conclusion(const Catalog& cat, const IndexTable& table, int r) {
  static std::mutex mu;
  static std::map<std::pair<const Catalog*, int>, int> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({&cat, r});
    if (it != memo.end()) return it->second;
  }
  auto rep = run_elimination(cat, table, r, true);
  if (!rep.conclusion)
    throw std::logic_error("base-case elimination left survivors for r=" + num(r));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(std::make_pair(&cat, r), *rep.conclusion);
  return *rep.conclusion;
}

}  // namespace

InductionTrace inductive_sp_index(const Catalog& cat, const IndexTable& table, int r) {
  if (r < 3)
    throw std::invalid_argument("the index of Sp_2r/Sp_rSp_r is 4r only for r >= 3");
  InductionTrace trace;
  trace.r = r;
  int base = 3 + (r - 3) % 3;
  int value = elimination_conclusion(cat, table, base);
  trace.steps.push_back({base, value, "case elimination, zero survivors"});
  int i_sp6 = base == 3 ? value : elimination_conclusion(cat, table, 3);
  for (int s = base + 3; s <= r; s += 3) {
    auto bigger = cat.instantiate("CIIb", {{"p", s}});
    auto ir = table.reflective_index(bigger);
    if (!ir) throw std::logic_error("missing reflective index in induction");
    int lower = product_codim_bound(value, i_sp6);
    if (*ir != lower)
      throw std::logic_error("induction sandwich failed at r=" + num(s) + ": i_r=" + num(*ir) +
                             " lower=" + num(lower));
    value = *ir;
    trace.steps.push_back({s, value,
                           "sandwich 4r = i_r >= i >= i(Sp_" + num(2 * (s - 3)) + "/Sp_" +
                               num(s - 3) + "Sp_" + num(s - 3) + ") + 12 = " + num(lower)});
  }
  trace.value = value;
  return trace;
}

std::string InductionTrace::text() const {
  std::ostringstream os;
  os << "induction r=" << r << " index=" << value << "\n";
  for (const auto& s : steps)
    os << "step r=" << s.r << " index=" << s.value << " rule=" << s.rule << "\n";
  return os.str();
}

int sp_family_index(const Catalog& cat, const IndexTable& table, int r, int k) {
  if (r < 3 || k < 0) throw std::invalid_argument("sp family index needs r >= 3, k >= 0");
  int core = inductive_sp_index(cat, table, r).value;  // i of the embedded Sp_2r/Sp_rSp_r
  SymmetricSpace m = k == 0 ? cat.instantiate("CIIb", {{"p", r}})
                            : cat.instantiate("CIIa", {{"p", r}, {"q", r + k}});
  auto ir = table.reflective_index(m);
  if (!ir) throw std::logic_error("missing reflective index for sp family");
  // canonical embedding: core <= i(M) <= i_r(M)
  if (core > *ir) throw std::logic_error("sp family sandwich failed");
  if (core != *ir)
    throw std::logic_error("sp family index not determined by the sandwich at r=" + num(r) +
                           " k=" + num(k));
  return core;
}

// ---------------------------------------------------------------------------
// Lagrangian Grassmannian estimates

namespace {

// Largest total dimension of a product of simply connected compact symmetric
// spaces with type A root systems (AI, group type A, AII factors of rank >= 2),
// subject to a total rank budget and a total isotropy-rank budget.
int best_type_a_dim(int rank_budget, int iso_budget) {
  if (rank_budget < 2) return 0;
  std::vector<std::vector<int>> best(rank_budget + 1, std::vector<int>(iso_budget + 1, 0));
  for (int rho = 2; rho <= rank_budget; ++rho) {
    for (int kappa = 0; kappa <= iso_budget; ++kappa) {
      int v = best[rho - 1][kappa];
      for (int s = 2; s <= rho; ++s) {
        struct F { int dim, iso; };
        const F fs[3] = {
            {s * (s + 3) / 2, (s + 1) / 2},  // SU_{s+1}/SO_{s+1}
            {s * (s + 2), s},                // group SU_{s+1}
            {s * (2 * s + 3), s + 1},        // SU_{2s+2}/Sp_{s+1}
        };
        for (const auto& f : fs)
          if (f.iso <= kappa) v = std::max(v, f.dim + best[rho - s][kappa - f.iso]);
      }
      best[rho][kappa] = v;
    }
  }
  return best[rank_budget][iso_budget];
}

// Largest span rank of a proper nonempty type A subsystem: total - #blocks
// over block-size partitions; r - 1, attained by one block of size r.
int max_proper_subsystem_span(int r) {
  int best = 0;
  for (const auto& sub : enumerate_type_a_subsystems(r)) best = std::max(best, sub.span_rank());
  return best;
}

}  // namespace

LagrangianReport lagrangian_checks(const Catalog& cat, int r) {
  if (r < 3) throw std::invalid_argument("lagrangian checks need r >= 3");
  LagrangianReport rep;
  rep.r = r;
  bool ok = true;
  auto line = [&](bool pass, const std::string& s) {
    ok = ok && pass;
    rep.lines.push_back(std::string(pass ? "ok   " : "FAIL ") + s);
  };

  auto M = cat.instantiate("AII", {{"n", r + 1}});
  const int n = M.dim;
  line(n == r * (2 * r + 3), "ambient dim = r(2r+3) = " + num(n));
  const int b = reflection_hyperplane_count(make_root_system(RootFamily::A, r));
  line(b == r * (r + 1) / 2, "ambient hyperplanes b = r(r+1)/2 = " + num(b));
  line(M.mult.m_long == 4 && M.mult.m_short == 4, "ambient multiplicities all 4");
  line(4 * b + r == n, "dimension formula 4b + r = dim");

  // (a) locally irreducible with max multiplicity <= 2:
  //     dim <= 2 l + rk <= 2b + r, codim >= r(r+1) >= 4r.
  line(2 * b + r == r * r + 2 * r, "bound dim <= 2b + r = " + num(2 * b + r));
  line(n - (r * r + 2 * r) == r * (r + 1), "codim >= r(r+1) = " + num(r * (r + 1)));
  line(r * (r + 1) >= 4 * r, "r(r+1) >= 4r at r = " + num(r));
  {
    EnumFilter f;
    f.max_dim = cat.ceiling();
    bool sweep = true;
    for (const auto& s : cat.enumerate(f)) {
      if (s.mult.max() > 2) continue;
      if (s.dim > 2 * reflection_hyperplane_count(s.roots) + s.rank) sweep = false;
    }
    line(sweep, "catalog sweep: max-mult<=2 spaces satisfy dim <= 2*hyperplanes + rank");
  }

  // (b) sphere factors: two spheres via rk(so_k1+so_k2) <= r+1, single sphere
  //     via rk(so_k1) <= r+1.
  line(n - (2 * r + 4) == 2 * r * r + r - 4, "two spheres: codim >= 2r^2+r-4 = " + num(2 * r * r + r - 4));
  line(2 * r * r + r - 4 > 4 * r, "2r^2+r-4 > 4r");
  line(n - (2 * r + 3) == 2 * r * r + r - 3, "single sphere: codim >= 2r^2+r-3 = " + num(2 * r * r + r - 3));
  line(2 * r * r + r - 3 > 4 * r, "2r^2+r-3 > 4r");

  // (c) an E6/F4 factor: multiplicity 8 > 4 rules out equal rank; the rest of
  //     the product is a type A space of rank <= r-3 with isotropy rank <= r-3.
  auto e6f4 = cat.instantiate("EIV", {});
  line(e6f4.mult.max() == 8, "E6/F4 multiplicities are 8");
  line(e6f4.mult.max() > M.mult.max(), "multiplicity comparison forces rank < r");
  if (r == 3) {
    line(n - e6f4.dim == 1, "codim 1 excluded: no totally geodesic hypersurface");
  } else if (r == 4) {
    line(n - e6f4.dim == 18 && 18 > 16, "codim = 18 > 16 = 4r");
  } else {
    int comp = best_type_a_dim(r - 3, r - 3);
    int expected = r == 5 ? 8 : (r == 6 ? 15 : (r - 4) * (2 * r - 5));
    line(comp == expected, "largest type A complement dim = " + num(comp));
    int codim = n - e6f4.dim - comp;
    if (r == 5) line(codim == 31 && 31 > 20, "codim >= 31 > 20 = 4r");
    else if (r == 6) line(codim == 49 && 49 > 24, "codim >= 49 > 24 = 4r");
    else {
      line(codim == 16 * r - 46, "exact codim bound 16r-46 = " + num(codim));
      line(codim >= 14 * r - 46, "printed chain codim >= 14r-46 = " + num(14 * r - 46));
      line(14 * r - 46 > 4 * r, "14r-46 > 4r");
    }
  }

  // (d) every factor of type A: at equal rank the subsystem has a fixed
  //     vector; below ambient rank the dimension maximum is (r-1)(2r+1).
  {
    int span = r <= 12 ? max_proper_subsystem_span(r) : -1;
    bool fixed_vector = true;
    if (r <= 12) fixed_vector = span == r - 1;
    // combinatorial identity: span = total - #blocks <= r - 1 for proper subsystems
    line(fixed_vector, "proper type A subsystems have span <= r-1 (fixed vector exists)");
    int best = best_type_a_dim(r - 1, 2 * r + 2);
    line(best == (r - 1) * (2 * r + 1),
         "largest type A space of rank <= r-1 has dim (r-1)(2r+1) = " + num(best));
    line(n - best == 4 * r + 1, "codim >= 4r+1 = " + num(4 * r + 1));
    line(4 * r + 1 > 4 * r, "4r+1 > 4r");
  }

  rep.passed = ok;
  return rep;
}

std::string LagrangianReport::text() const {
  std::ostringstream os;
  os << "lagrangian r=" << r << " verdict=" << (passed ? "pass" : "fail") << "\n";
  for (const auto& l : lines) os << l << "\n";
  return os.str();
}

}  // namespace symidx
