#include "symidx/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "symidx/elimination.hpp"
#include "symidx/hermitian.hpp"
#include "symidx/index_table.hpp"

namespace symidx {

namespace {

struct Options {
  std::string catalog_path;
  std::string format = "human";
  bool tabular() const { return format == "tabular"; }
};

std::string flags_text(const SpaceFlags& f) {
  std::string s;
  auto add = [&](bool v, const char* name) {
    if (!v) return;
    if (!s.empty()) s += ",";
    s += name;
  };
  add(f.inner, "inner");
  add(f.hermitian, "hermitian");
  add(f.group_manifold, "group-manifold");
  add(f.constant_curvature, "constant-curvature");
  add(f.external_multiplicities, "external-mult");
  return s.empty() ? "-" : s;
}

int cmd_index(const Catalog& cat, const IndexTable& table, const Options& opt,
              const std::string& id, std::ostream& out, std::ostream& err) {
  auto space = cat.find(id);
  if (!space) {
    err << "unknown space id: " << id << "\n";
    return 2;
  }
  auto rec = table.lookup(*space);
  if (!rec) {
    err << "no index data for " << space->name() << "\n";
    return 2;
  }
  bool compact = space->compact_form;
  std::string witness_text;
  for (size_t i = 0; i < rec->witnesses.size(); ++i)
    witness_text += (i ? "; " : "") + rec->witnesses[i].display(compact);
  if (opt.tabular()) {
    out << "index|" << space->name() << "|" << dual(*space).name() << "|" << space->dim << "|"
        << space->rank << "|" << to_string(space->roots) << "|" << space->mult.m_long << "|"
        << space->mult.m_short << "|" << rec->index << "|" << rec->reflective_index << "|"
        << (rec->exceptional ? 1 : 0) << "|" << witness_text << "|" << rec->witness_codim
        << "|" << rec->source << "\n";
    return 0;
  }
  out << "space: " << space->name() << " (dual: " << dual(*space).name() << ")\n";
  out << "family: " << space->family;
  if (!space->params.empty()) {
    out << "  params:";
    for (const auto& [k, v] : space->params) out << " " << k << "=" << v;
  }
  out << "\n";
  out << "dim " << space->dim << "  rank " << space->rank << "  roots "
      << to_string(space->roots) << "  mult (" << space->mult.m_long << ","
      << space->mult.m_short << ")  flags: " << flags_text(space->flags) << "\n";
  out << "i = " << rec->index << ", i_r = " << rec->reflective_index
      << (rec->exceptional ? ", exceptional" : "") << "\n";
  out << "witness: " << rec->witnesses.front().display(compact)
      << " (codim " << rec->witness_codim << ")";
  for (size_t i = 1; i < rec->witnesses.size(); ++i)
    out << "; also " << rec->witnesses[i].display(compact);
  out << "\n";
  out << "source: " << rec->source << "\n";
  return 0;
}

int cmd_table(const IndexTable& table, const Options& opt, int samples, std::ostream& out) {
  auto rows = table.table_rows(samples);
  out << "# space|dual|dim|rank|index|reflective|witness|codim|exceptional|source\n";
  for (const auto& row : rows) {
    const auto& s = row.space;
    const auto& r = row.record;
    std::string witness_text;
    for (size_t i = 0; i < r.witnesses.size(); ++i)
      witness_text += (i ? "; " : "") + r.witnesses[i].display(false);
    out << s.noncompact_id << "|" << s.compact_id << "|" << s.dim << "|" << s.rank << "|"
        << r.index << "|" << r.reflective_index << "|" << witness_text << "|"
        << r.witness_codim << "|" << (r.exceptional ? 1 : 0) << "|" << r.source << "\n";
  }
  if (!opt.tabular()) out << "# rows: " << rows.size() << "\n";
  return 0;
}

int cmd_eliminate(const Catalog& cat, const IndexTable& table, int r, bool no_external,
                  std::ostream& out, std::ostream& err) {
  if (r < 3) {
    err << "the index of Sp_2r/Sp_rSp_r equals 4r only for r >= 3\n";
    return 2;
  }
  if (r <= 5) {
    auto rep = run_elimination(cat, table, r, !no_external);
    out << rep.text();
    return rep.survivors.empty() ? 0 : 1;
  }
  auto trace = inductive_sp_index(cat, table, r);
  out << trace.text();
  return 0;
}

int cmd_obstruct(const Catalog& cat, const IndexTable& table, const std::string& sub_id,
                 const std::string& amb_id, std::ostream& out, std::ostream& err) {
  auto sub = cat.find(sub_id);
  auto amb = cat.find(amb_id);
  if (!sub || !amb) {
    err << "unknown space id: " << (!sub ? sub_id : amb_id) << "\n";
    return 2;
  }
  auto res = obstruction_check(table, *sub, *amb);
  out << "obstruct sub=" << sub->name() << " ambient=" << amb->name() << "\n";
  for (const auto& v : res.violated) out << "violated " << v << "\n";
  switch (res.status) {
    case ObstructionStatus::pass:
      out << "verdict=pass\n";
      return 0;
    case ObstructionStatus::fail:
      out << "verdict=fail\n";
      return 1;
    case ObstructionStatus::indeterminate:
      out << "verdict=indeterminate missing=" << res.missing << "\n";
      return 1;
  }
  return 1;
}

int cmd_subsystems(int r, std::ostream& out, std::ostream& err) {
  if (r < 1) {
    err << "rank must be >= 1\n";
    return 2;
  }
  auto subs = enumerate_type_a_subsystems(r);
  out << "subsystems ambient=A" << r << " count=" << subs.size() << "\n";
  for (const auto& s : subs)
    out << "subsystem blocks=" << s.to_string() << " span=" << s.span_rank()
        << " hyperplanes=" << s.hyperplane_count()
        << " closed=" << (verify_subsystem_closed(s) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_lint(const Catalog& cat, std::ostream& out) {
  auto issues = cat.lint();
  if (issues.empty()) {
    EnumFilter f;
    f.max_dim = cat.ceiling();
    out << "lint ok: " << cat.family_keys().size() << " records, "
        << cat.enumerate(f).size() << " instantiations within ceiling " << cat.ceiling()
        << "\n";
    return 0;
  }
  for (const auto& i : issues) out << "lint issue [" << i.record << "] " << i.message << "\n";
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"symidx: index and reflective index of irreducible Riemannian symmetric "
               "spaces, with mechanized verification of the supporting case analyses"};
  app.require_subcommand(1);
  app.add_option("--catalog", opt.catalog_path, "catalog file overriding the embedded one");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"human", "tabular"}));

  std::string index_id;
  auto* c_index = app.add_subcommand("index", "index and reflective index of a space");
  c_index->add_option("space", index_id, "space id")->required();

  int table_samples = 2;
  auto* c_table = app.add_subcommand("table", "classification-table reproduction");
  c_table->add_option("--samples", table_samples, "larger parameter samples per row")
      ->check(CLI::Range(0, 2));

  std::string elim_family;
  int elim_r = 3;
  bool no_external = false;
  auto* c_elim = app.add_subcommand("eliminate", "case elimination for Sp_2r/Sp_rSp_r");
  c_elim->add_option("family", elim_family, "family (sp)")->required();
  c_elim->add_option("r", elim_r, "rank parameter")->required();
  c_elim->add_flag("--no-external-assumptions", no_external,
                   "drop imported classification facts; widen the window to [4r-4, 4r-1]");

  int lag_r = 3;
  auto* c_lag = app.add_subcommand("lagrangian", "codimension estimates for SU*_{2r+2}/Sp_{r+1}");
  c_lag->add_option("r", lag_r, "rank parameter")->required();

  int herm_max = 10;
  auto* c_herm = app.add_subcommand("hermitian", "Hermitian inequality sweep");
  c_herm->add_option("--max-rank", herm_max, "rank bound for the classical families");

  std::string obs_sub, obs_amb;
  auto* c_obs = app.add_subcommand("obstruct", "totally geodesic embedding obstructions");
  c_obs->add_option("sub", obs_sub, "submanifold id")->required();
  c_obs->add_option("ambient", obs_amb, "ambient id")->required();

  int subs_r = 2;
  auto* c_subs = app.add_subcommand("subsystems", "type A root subsystems up to relabelling");
  c_subs->add_option("r", subs_r, "ambient rank")->required();

  auto* c_cat = app.add_subcommand("catalog", "catalog maintenance");
  auto* c_lint = c_cat->add_subcommand("lint", "validate every catalog record");
  c_cat->require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("symidx");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    std::optional<Catalog> file_cat;
    if (!opt.catalog_path.empty()) file_cat = Catalog::from_file(opt.catalog_path);
    const Catalog& cat = file_cat ? *file_cat : Catalog::builtin();
    IndexTable table(cat);

    if (*c_index) return cmd_index(cat, table, opt, index_id, out, err);
    if (*c_table) return cmd_table(table, opt, table_samples, out);
    if (*c_elim) {
      if (elim_family != "sp") {
        err << "unsupported elimination family: " << elim_family << " (expected: sp)\n";
        return 2;
      }
      return cmd_eliminate(cat, table, elim_r, no_external, out, err);
    }
    if (*c_lag) {
      auto rep = lagrangian_checks(cat, lag_r);
      out << rep.text();
      return rep.passed ? 0 : 1;
    }
    if (*c_herm) {
      auto sw = hermitian_sweep(cat, table, herm_max);
      out << sw.text();
      return sw.all_classical_conclusive ? 0 : 1;
    }
    if (*c_obs) return cmd_obstruct(cat, table, obs_sub, obs_amb, out, err);
    if (*c_subs) return cmd_subsystems(subs_r, out, err);
    if (*c_lint) return cmd_lint(cat, out);
    err << "no command\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace symidx
