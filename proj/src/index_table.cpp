#include "symidx/index_table.hpp"

#include <sstream>
#include <stdexcept>

namespace symidx {

int ProductSpace::dim() const {
  int d = flat_dim;
  for (const auto& f : factors) d += f.dim;
  return d;
}

int ProductSpace::rank() const {
  int r = flat_dim;
  for (const auto& f : factors) r += f.rank;
  return r;
}

GroupDescriptor ProductSpace::isotropy() const {
  GroupDescriptor g;
  for (const auto& f : factors) g = GroupDescriptor::sum(g, f.isotropy);
  return g;
}

int ProductSpace::isometry_dim() const {
  int d = flat_dim;  // translations only
  for (const auto& f : factors) d += f.isometry_dim();
  return d;
}

int ProductSpace::isometry_rank() const {
  int r = flat_dim;
  for (const auto& f : factors) r += f.isometry_rank;
  return r;
}

int ProductSpace::hyperplane_count() const {
  int h = 0;
  for (const auto& f : factors) h += reflection_hyperplane_count(f.roots);
  return h;
}

std::string ProductSpace::display(bool compact) const {
  std::string out;
  auto add = [&](const std::string& piece) {
    if (!out.empty()) out += " x ";
    out += piece;
  };
  if (flat_dim == 1) add("R");
  else if (flat_dim > 1) add("R^" + std::to_string(flat_dim));
  for (const auto& f : factors) add(compact ? f.compact_id : f.display_name());
  return out;
}

// ---------------------------------------------------------------------------
// Reflective-index data per catalog family.

namespace {

struct IrInfo {
  int reflective = 0;
  int index = 0;
  std::vector<std::string> witnesses;
  std::string source;
  bool exceptional = false;
};

std::string num(long long v) { return std::to_string(v); }

std::optional<IrInfo> ir_info(const SymmetricSpace& s) {
  const std::string& k = s.family;
  auto P = [&](const char* name) { return s.params.at(name); };
  IrInfo out;
  auto plain = [&](int ir, std::vector<std::string> w, std::string src) {
    out.reflective = ir;
    out.index = ir;
    out.witnesses = std::move(w);
    out.source = std::move(src);
    return out;
  };

  if (k == "RH") {
    int n = P("n");
    return plain(1, {"SO(1," + num(n - 1) + ")/SO" + num(n - 1)}, "Wo63; L79");
  }
  if (k == "CH") {
    int n = P("n");
    return plain(2, {"SU(1," + num(n - 1) + ")/S(U1xU" + num(n - 1) + ")"}, "Wo63; L79");
  }
  if (k == "HH") {
    int n = P("n");
    return plain(4, {"Sp(1," + num(n - 1) + ")/Sp1xSp" + num(n - 1)}, "Wo63; L79");
  }
  if (k == "FII") return plain(8, {"SO(1,8)/SO8", "Sp(1,2)/Sp1xSp2"}, "Wo63; L79");
  if (k == "AI") {
    int n = P("n");
    return plain(n - 1, {"R x SL" + num(n - 1) + "(R)/SO" + num(n - 1)}, "BO16; L79");
  }
  if (k == "AII") {
    int n = P("n");
    if (n == 3) return plain(6, {"SL3(C)/SU3"}, "O80");
    if (n == 4) return plain(11, {"Sp(2,2)/Sp2xSp2"}, "L79; lagrangian sweep");
    return plain(4 * (n - 1), {"R x SU*" + num(2 * n - 2) + "/Sp" + num(n - 1)},
                 "L79; lagrangian sweep");
  }
  if (k == "AIIIa") {
    int p = P("p"), q = P("q");
    return plain(2 * p, {"SU(" + num(p) + "," + num(q - 1) + ")/S(U" + num(p) + "xU" +
                         num(q - 1) + ")"},
                 "BO16; L79");
  }
  if (k == "AIIIb") {
    int p = P("p");
    return plain(2 * p, {"SU(" + num(p - 1) + "," + num(p) + ")/S(U" + num(p - 1) + "xU" +
                         num(p) + ")"},
                 "BO16; L79");
  }
  if (k == "BDIa") {
    int p = P("p"), q = P("q");
    return plain(p, {"SO(" + num(p) + "," + num(q - 1) + ")/SO" + num(p) + "xSO" + num(q - 1)},
                 "BO16; L79");
  }
  if (k == "BDIb") {
    int p = P("p");
    return plain(p, {"SO(" + num(p - 1) + "," + num(p) + ")/SO" + num(p - 1) + "xSO" + num(p)},
                 "BO16; L79");
  }
  if (k == "CI") {
    int r = P("r");
    return plain(2 * r - 2, {"RH2 x Sp" + num(r - 1) + "(R)/U" + num(r - 1)}, "BO16; L79");
  }
  if (k == "CIIa") {
    int p = P("p"), q = P("q");
    return plain(4 * p, {"Sp(" + num(p) + "," + num(q - 1) + ")/Sp" + num(p) + "xSp" +
                         num(q - 1)},
                 "BO16; L79");
  }
  if (k == "CIIb") {
    int p = P("p");
    if (p == 2) return plain(6, {"Sp2(C)/Sp2"}, "O80");
    return plain(4 * p, {"Sp(" + num(p - 1) + "," + num(p) + ")/Sp" + num(p - 1) + "xSp" +
                         num(p)},
                 "BO16 Table 4; elimination/induction");
  }
  if (k == "DIIIa") {
    int m = P("m");
    return plain(4 * m - 2, {"SO*" + num(4 * m - 2) + "/U" + num(2 * m - 1)}, "BO16; L79");
  }
  if (k == "DIIIb") {
    int m = P("m");
    return plain(4 * m, {"SO*" + num(4 * m) + "/U" + num(2 * m)}, "L79; hermitian sweep");
  }
  if (k == "SLC") {
    int n = P("n");
    if (n == 3) return plain(3, {"SL3(R)/SO3"}, "O80");
    if (n == 4) return plain(5, {"Sp2(C)/Sp2"}, "O80");
    return plain(2 * (n - 1), {"R x SL" + num(n - 1) + "(C)/SU" + num(n - 1)}, "BO16; L79");
  }
  if (k == "SOCb") {
    int r = P("r");
    if (r == 2) return plain(4, {"SO4(C)/SO4"}, "O80");
    return plain(2 * r, {"SO" + num(2 * r) + "(C)/SO" + num(2 * r)}, "BO16; L79");
  }
  if (k == "SPC") {
    int r = P("r");
    return plain(4 * r - 4, {"RH3 x Sp" + num(r - 1) + "(C)/Sp" + num(r - 1)}, "BO16; L79");
  }
  if (k == "SOCd") {
    int r = P("r");
    return plain(2 * r - 1, {"SO" + num(2 * r - 1) + "(C)/SO" + num(2 * r - 1)}, "BO16; L79");
  }
  if (k == "G2C") return plain(6, {"G2^2/SO4", "SL3(C)/SU3"}, "BOR19");
  if (k == "F4C") return plain(16, {"SO9(C)/SO9"}, "BOR19");
  if (k == "E6C") return plain(26, {"F4(C)/F4"}, "BOR19");
  if (k == "E7C") return plain(54, {"R x E6(C)/E6"}, "BOR19");
  if (k == "E8C") return plain(112, {"RH3 x E7(C)/E7"}, "BOR19");
  if (k == "EI") return plain(14, {"F4^4/Sp3xSp1"}, "BOR19");
  if (k == "EII") return plain(12, {"F4^4/Sp3xSp1"}, "BOR19");
  if (k == "EIII") return plain(12, {"SO*10/U5"}, "BOR19");
  if (k == "EIV") return plain(10, {"F4^-20/Spin9"}, "BOR19");
  if (k == "EV") return plain(27, {"R x E6^6/Sp4"}, "BOR19");
  if (k == "EVI") return plain(24, {"E6^2/SU6xSp1"}, "BOR19");
  if (k == "EVII") return plain(22, {"E6^-14/Spin10xU1"}, "BOR19");
  if (k == "EVIII") return plain(56, {"RH2 x E7^7/SU8"}, "BOR19");
  if (k == "EIX") return plain(48, {"E7^-5/SO12xSp1"}, "BOR19");
  if (k == "FI") return plain(8, {"SO(4,5)/SO4xSO5"}, "BOR19");
  if (k == "G") {
    plain(4, {"SL3(R)/SO3"}, "O80 (index); N88 (reflective)");
    out.index = 3;
    out.exceptional = true;
    return out;
  }
  return std::nullopt;
}

}  // namespace

ProductSpace IndexTable::resolve_witness(const std::string& spec) const {
  ProductSpace p;
  std::string rest = spec;
  std::vector<std::string> atoms;
  size_t pos = 0;
  for (;;) {
    size_t x = rest.find(" x ", pos);
    if (x == std::string::npos) {
      atoms.push_back(rest.substr(pos));
      break;
    }
    atoms.push_back(rest.substr(pos, x - pos));
    pos = x + 3;
  }
  for (const auto& raw : atoms) {
    std::string atom = normalize_space_id(raw);
    if (atom == "R" || atom == "SO(1,1)/SO1") {
      p.flat_dim += 1;
      continue;
    }
    if (atom == "SO(2,2)/SO2xSO2") {
      p.factors.push_back(*cat_->find("RH2"));
      p.factors.push_back(*cat_->find("RH2"));
      continue;
    }
    if (atom == "SO4(C)/SO4") {
      p.factors.push_back(*cat_->find("RH3"));
      p.factors.push_back(*cat_->find("RH3"));
      continue;
    }
    auto f = cat_->find(atom);
    if (!f) throw std::invalid_argument("witness atom does not resolve: " + atom);
    p.factors.push_back(*f);
  }
  return p;
}

std::optional<IndexRecord> IndexTable::lookup(const SymmetricSpace& s) const {
  auto info = ir_info(s);
  if (!info) return std::nullopt;
  IndexRecord rec;
  rec.space = s.name();
  rec.index = info->index;
  rec.reflective_index = info->reflective;
  rec.exceptional = info->exceptional;
  rec.source = info->source;
  for (const auto& w : info->witnesses) rec.witnesses.push_back(resolve_witness(w));
  rec.witness_codim = s.dim - rec.witnesses.front().dim();
  return rec;
}

std::optional<int> IndexTable::reflective_index(const SymmetricSpace& s) const {
  auto rec = lookup(s);
  if (!rec) return std::nullopt;
  return rec->reflective_index;
}

std::optional<int> IndexTable::index(const SymmetricSpace& s) const {
  auto rec = lookup(s);
  if (!rec) return std::nullopt;
  return rec->index;
}

std::optional<int> IndexTable::product_index(const ProductSpace& p) const {
  if (p.flat_dim > 0) return std::nullopt;  // Euclidean factors are out of scope
  if (p.factors.empty()) return std::nullopt;
  int total = 0;
  for (const auto& f : p.factors) {
    auto i = index(f);
    if (!i) return std::nullopt;
    total += *i;
  }
  return total;
}

std::vector<IndexTable::Row> IndexTable::table_rows(int samples) const {
  using Env = std::map<std::string, int>;
  struct RowSpec {
    const char* family;
    Env base;
    std::vector<Env> larger;  // up to two larger parameter choices
  };
  // Ordered by root-system blocks as in the classification table.
  const std::vector<RowSpec> specs = {
      // A
      {"RH", {{"n", 2}}, {{{"n", 5}}, {{"n", 9}}}},
      {"AI", {{"n", 3}}, {{{"n", 5}}, {{"n", 8}}}},
      {"SLC", {{"n", 3}}, {}},
      {"SLC", {{"n", 4}}, {}},
      {"SLC", {{"n", 5}}, {{{"n", 7}}, {{"n", 10}}}},
      {"AII", {{"n", 3}}, {}},
      {"AII", {{"n", 4}}, {}},
      {"AII", {{"n", 5}}, {{{"n", 7}}, {{"n", 9}}}},
      {"EIV", {}, {}},
      // B
      {"BDIa", {{"p", 2}, {"q", 3}}, {{{"p", 3}, {"q", 7}}, {{"p", 5}, {"q", 8}}}},
      {"SOCb", {{"r", 2}}, {{{"r", 4}}, {{"r", 6}}}},
      // C
      {"CI", {{"r", 3}}, {{{"r", 5}}, {{"r", 8}}}},
      {"AIIIb", {{"p", 3}}, {{{"p", 5}}, {{"p", 8}}}},
      {"SPC", {{"r", 3}}, {{{"r", 5}}, {{"r", 7}}}},
      {"DIIIa", {{"m", 3}}, {{{"m", 4}}, {{"m", 6}}}},
      {"CIIb", {{"p", 2}}, {}},
      {"CIIb", {{"p", 3}}, {{{"p", 5}}, {{"p", 7}}}},
      {"EVII", {}, {}},
      // D
      {"BDIb", {{"p", 4}}, {{{"p", 6}}, {{"p", 9}}}},
      {"SOCd", {{"r", 4}}, {{{"r", 6}}, {{"r", 8}}}},
      // BC
      {"CH", {{"n", 2}}, {{{"n", 5}}, {{"n", 9}}}},
      {"AIIIa", {{"p", 2}, {"q", 3}}, {{{"p", 3}, {"q", 5}}, {{"p", 4}, {"q", 9}}}},
      {"HH", {{"n", 2}}, {{{"n", 5}}, {{"n", 9}}}},
      {"CIIa", {{"p", 2}, {"q", 3}}, {{{"p", 3}, {"q", 5}}, {{"p", 4}, {"q", 7}}}},
      {"DIIIb", {{"m", 2}}, {{{"m", 4}}, {{"m", 6}}}},
      {"FII", {}, {}},
      {"EIII", {}, {}},
      // E6
      {"EI", {}, {}},
      {"E6C", {}, {}},
      // E7
      {"EV", {}, {}},
      {"E7C", {}, {}},
      // E8
      {"EVIII", {}, {}},
      {"E8C", {}, {}},
      // F4
      {"FI", {}, {}},
      {"EII", {}, {}},
      {"F4C", {}, {}},
      {"EVI", {}, {}},
      {"EIX", {}, {}},
      // G2
      {"G", {}, {}},
      {"G2C", {}, {}},
  };

  std::vector<Row> rows;
  auto emit = [&](const char* family, const Env& env) {
    Row row;
    row.family = family;
    row.params = env;
    row.space = cat_->instantiate(family, env);
    auto rec = lookup(row.space);
    if (!rec) throw std::logic_error(std::string("no index data for family ") + family);
    row.record = *rec;
    rows.push_back(std::move(row));
  };
  for (const auto& spec : specs) {
    emit(spec.family, spec.base);
    for (int i = 0; i < samples && i < static_cast<int>(spec.larger.size()); ++i)
      emit(spec.family, spec.larger[i]);
  }
  return rows;
}

// ---------------------------------------------------------------------------

ObstructionResult obstruction_check(const IndexTable& table, const ProductSpace& sub,
                                    const SymmetricSpace& ambient) {
  ObstructionResult res;
  auto check = [&](bool ok, const char* name) {
    if (!ok) res.violated.push_back(name);
  };
  check(sub.dim() < ambient.dim, "dim(Sigma)<dim(M)");
  check(sub.isometry_dim() < ambient.isometry_dim(), "dim(G')<dim(G)");
  check(sub.isotropy().dim() < ambient.isotropy.dim(), "dim(K')<dim(K)");
  check(sub.rank() <= ambient.rank, "rk(Sigma)<=rk(M)");
  check(sub.isometry_rank() <= ambient.isometry_rank, "rk(G')<=rk(G)");
  check(sub.isotropy().rank() <= ambient.isotropy.rank(), "rk(K')<=rk(K)");

  // i(Sigma): the sum over the irreducible factors; a flat part contributes
  // nothing to the sum. A purely flat submanifold has totally geodesic
  // hyperplanes, so its index is 1.
  std::optional<int> i_sub;
  if (sub.factors.empty()) {
    if (sub.flat_dim >= 1) i_sub = 1;
  } else {
    int total = 0;
    bool known = true;
    for (const auto& f : sub.factors) {
      auto i = table.index(f);
      if (!i) known = false;
      else total += *i;
    }
    if (known) i_sub = total;
  }
  auto i_amb = table.index(ambient);
  if (!i_sub || !i_amb) {
    res.status = ObstructionStatus::indeterminate;
    res.missing = !i_sub ? "i(Sigma)" : "i(M)";
    return res;
  }
  check(*i_sub <= *i_amb, "i(Sigma)<=i(M)");
  check(*i_amb <= ambient.dim - sub.dim(), "i(M)<=dim(M)-dim(Sigma)");
  res.status = res.violated.empty() ? ObstructionStatus::pass : ObstructionStatus::fail;
  return res;
}

ObstructionResult obstruction_check(const IndexTable& table, const SymmetricSpace& sub,
                                    const SymmetricSpace& ambient) {
  ProductSpace p;
  p.factors.push_back(sub);
  return obstruction_check(table, p, ambient);
}

}  // namespace symidx
