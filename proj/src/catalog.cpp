#include "symidx/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symidx {

namespace detail {
extern const char* const kBuiltinCatalog;
}

// ---------------------------------------------------------------------------
// Compact algebra bookkeeping

int SimpleFactor::dim() const {
  switch (type) {
    case AlgebraType::su: return n * n - 1;
    case AlgebraType::so: return n * (n - 1) / 2;
    case AlgebraType::sp: return n * (2 * n + 1);
    case AlgebraType::u1: return 1;
    case AlgebraType::e6: return 78;
    case AlgebraType::e7: return 133;
    case AlgebraType::e8: return 248;
    case AlgebraType::f4: return 52;
    case AlgebraType::g2: return 14;
  }
  return 0;
}

int SimpleFactor::rank() const {
  switch (type) {
    case AlgebraType::su: return n - 1;
    case AlgebraType::so: return n / 2;
    case AlgebraType::sp: return n;
    case AlgebraType::u1: return 1;
    case AlgebraType::e6: return 6;
    case AlgebraType::e7: return 7;
    case AlgebraType::e8: return 8;
    case AlgebraType::f4: return 4;
    case AlgebraType::g2: return 2;
  }
  return 0;
}

std::string SimpleFactor::name() const {
  switch (type) {
    case AlgebraType::su: return "su" + std::to_string(n);
    case AlgebraType::so: return "so" + std::to_string(n);
    case AlgebraType::sp: return "sp" + std::to_string(n);
    case AlgebraType::u1: return "u1";
    case AlgebraType::e6: return "e6";
    case AlgebraType::e7: return "e7";
    case AlgebraType::e8: return "e8";
    case AlgebraType::f4: return "f4";
    case AlgebraType::g2: return "g2";
  }
  return "?";
}

void add_factor(GroupDescriptor& g, AlgebraType type, int n) {
  if (type == AlgebraType::u1) {
    g.torus_rank += 1;
    return;
  }
  if (type == AlgebraType::su && n < 2) return;  // su1 is trivial
  if (type == AlgebraType::so) {
    if (n <= 1) return;
    if (n == 2) {  // so2 is a torus
      g.torus_rank += 1;
      return;
    }
    if (n == 4) {  // so4 = sp1 + sp1
      g.factors.push_back({AlgebraType::sp, 1});
      g.factors.push_back({AlgebraType::sp, 1});
      return;
    }
  }
  g.factors.push_back({type, n});
}

int GroupDescriptor::dim() const {
  int d = torus_rank;
  for (const auto& f : factors) d += f.dim();
  return d;
}

int GroupDescriptor::rank() const {
  int r = torus_rank;
  for (const auto& f : factors) r += f.rank();
  return r;
}

std::string GroupDescriptor::name() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "+";
    s += f.name();
  }
  for (int i = 0; i < torus_rank; ++i) {
    if (!s.empty()) s += "+";
    s += "u1";
  }
  return s.empty() ? "0" : s;
}

GroupDescriptor GroupDescriptor::sum(const GroupDescriptor& a, const GroupDescriptor& b) {
  GroupDescriptor g = a;
  g.factors.insert(g.factors.end(), b.factors.begin(), b.factors.end());
  g.torus_rank += b.torus_rank;
  return g;
}

std::string SymmetricSpace::display_name() const {
  if (family == "RH" && !compact_form) return "RH" + std::to_string(params.at("n"));
  if (family == "CH" && !compact_form) return "CH" + std::to_string(params.at("n"));
  if (family == "HH" && !compact_form) return "HH" + std::to_string(params.at("n"));
  return name();
}

SymmetricSpace dual(const SymmetricSpace& s) {
  SymmetricSpace d = s;
  d.compact_form = !s.compact_form;
  return d;
}

bool validate_dimension_formula(const SymmetricSpace& s) {
  auto counts = positive_root_counts(s.roots);
  return s.dim ==
         s.mult.m_long * counts.long_roots + s.mult.m_short * counts.short_roots + s.rank;
}

// ---------------------------------------------------------------------------
// Integer expression evaluator (parameters are nonnegative integers)

namespace {

using Env = std::map<std::string, int>;

class ExprParser {
 public:
  ExprParser(const std::string& s, const Env& env) : s_(s), env_(env) {}

  long long parse() {
    long long v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw std::invalid_argument("trailing input in expression: " + s_);
    return v;
  }

 private:
  long long expr() {
    long long v = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') { ++pos_; v += term(); }
      else if (peek() == '-') { ++pos_; v -= term(); }
      else return v;
    }
  }

  long long term() {
    long long v = atom();
    for (;;) {
      skip_ws();
      if (peek() == '*') { ++pos_; v *= atom(); }
      else if (peek() == '/') {
        ++pos_;
        long long d = atom();
        if (d == 0 || v % d != 0)
          throw std::invalid_argument("inexact division in expression: " + s_);
        v /= d;
      } else return v;
    }
  }

  long long atom() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      long long v = expr();
      skip_ws();
      if (peek() != ')') throw std::invalid_argument("missing ')' in expression: " + s_);
      ++pos_;
      return v;
    }
    if (peek() == '-') { ++pos_; return -atom(); }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long long v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek()))) name += s_[pos_++];
      auto it = env_.find(name);
      if (it == env_.end())
        throw std::invalid_argument("unknown parameter '" + name + "' in expression: " + s_);
      return it->second;
    }
    throw std::invalid_argument("cannot parse expression: " + s_);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  const Env& env_;
  size_t pos_ = 0;
};

long long eval_expr(const std::string& s, const Env& env) { return ExprParser(s, env).parse(); }

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) { out.push_back(cur); cur.clear(); }
    else cur += c;
  }
  out.push_back(cur);
  return out;
}

// Id templates: literal text with {expr} holes.
struct IdTemplate {
  std::vector<std::string> literals;  // exprs.size() + 1 pieces
  std::vector<std::string> exprs;
};

IdTemplate parse_template(const std::string& t) {
  IdTemplate tpl;
  std::string lit;
  for (size_t i = 0; i < t.size();) {
    if (t[i] == '{') {
      size_t j = t.find('}', i);
      if (j == std::string::npos) throw std::invalid_argument("unbalanced '{' in template " + t);
      tpl.literals.push_back(lit);
      lit.clear();
      tpl.exprs.push_back(t.substr(i + 1, j - i - 1));
      i = j + 1;
    } else {
      lit += t[i++];
    }
  }
  tpl.literals.push_back(lit);
  return tpl;
}

std::string substitute(const IdTemplate& tpl, const Env& env) {
  std::string out = tpl.literals[0];
  for (size_t i = 0; i < tpl.exprs.size(); ++i) {
    out += std::to_string(eval_expr(tpl.exprs[i], env));
    out += tpl.literals[i + 1];
  }
  return out;
}

// Matches id against the template; captures are maximal digit runs.
std::optional<std::vector<long long>> match_template(const IdTemplate& tpl, const std::string& id) {
  std::vector<long long> caps;
  size_t pos = 0;
  for (size_t i = 0; i < tpl.exprs.size() + 1; ++i) {
    const std::string& lit = tpl.literals[i];
    if (id.compare(pos, lit.size(), lit) != 0) return std::nullopt;
    pos += lit.size();
    if (i < tpl.exprs.size()) {
      size_t start = pos;
      while (pos < id.size() && std::isdigit(static_cast<unsigned char>(id[pos]))) ++pos;
      if (pos == start) return std::nullopt;
      caps.push_back(std::stoll(id.substr(start, pos - start)));
    }
  }
  if (pos != id.size()) return std::nullopt;
  return caps;
}

AlgebraType algebra_type_from(const std::string& tok) {
  if (tok == "su") return AlgebraType::su;
  if (tok == "so") return AlgebraType::so;
  if (tok == "sp") return AlgebraType::sp;
  if (tok == "u") return AlgebraType::u1;
  if (tok == "e6") return AlgebraType::e6;
  if (tok == "e7") return AlgebraType::e7;
  if (tok == "e8") return AlgebraType::e8;
  if (tok == "f4") return AlgebraType::f4;
  if (tok == "g2") return AlgebraType::g2;
  throw std::invalid_argument("unknown isotropy factor type: " + tok);
}

}  // namespace

// ---------------------------------------------------------------------------
// Catalog records

struct Record {
  std::string key;
  std::string nc_raw, c_raw;
  IdTemplate nc_tpl, c_tpl;
  std::vector<std::pair<std::string, std::string>> params;  // name, min expr
  std::string dim_expr, rank_expr;
  RootFamily root_family;
  std::string root_rank_expr;
  std::string m1_expr, m2_expr;
  // isotropy: list of (type, size expr; empty expr for fixed algebras)
  std::vector<std::pair<std::string, std::string>> iso;
  std::string flags;
};

struct Catalog::Impl {
  std::vector<Record> records;
  std::map<std::string, std::string> aliases;  // normalized nc id -> canonical nc id

  const Record& record(const std::string& key) const {
    for (const auto& r : records)
      if (r.key == key) return r;
    throw std::invalid_argument("unknown catalog family: " + key);
  }
};

Catalog::Catalog() : impl_(new Impl) {}
Catalog::Catalog(Catalog&&) noexcept = default;
Catalog& Catalog::operator=(Catalog&&) noexcept = default;
Catalog::~Catalog() = default;

const std::string& Catalog::builtin_text() {
  static const std::string text = detail::kBuiltinCatalog;
  return text;
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = from_text(builtin_text());
  return cat;
}

Catalog Catalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

Catalog Catalog::from_text(const std::string& text) {
  Catalog cat;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t[0] == '@') {
      std::istringstream ls(t);
      std::string directive;
      ls >> directive;
      if (directive == "@ceiling") {
        ls >> cat.ceiling_;
      } else if (directive == "@alias") {
        std::string rest = trim(t.substr(6));
        auto eq = rest.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad @alias line: " + t);
        std::string from = normalize_space_id(trim(rest.substr(0, eq)));
        std::string to = normalize_space_id(trim(rest.substr(eq + 1)));
        cat.impl_->aliases[from] = to;
      } else {
        throw std::invalid_argument("unknown directive: " + directive);
      }
      continue;
    }
    auto cols = split(t, '|');
    if (cols.size() != 9) throw std::invalid_argument("record needs 9 columns: " + t);
    Record rec;
    {
      std::string head = trim(cols[0]);
      auto colon = head.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("record head needs 'key:': " + t);
      rec.key = trim(head.substr(0, colon));
      std::string ids = trim(head.substr(colon + 1));
      auto tilde = ids.find('~');
      if (tilde == std::string::npos) throw std::invalid_argument("record head needs 'nc ~ c': " + t);
      rec.nc_raw = trim(ids.substr(0, tilde));
      rec.c_raw = trim(ids.substr(tilde + 1));
      rec.nc_tpl = parse_template(rec.nc_raw);
      rec.c_tpl = parse_template(rec.c_raw);
    }
    {
      std::string ps = trim(cols[1]);
      if (ps != "-") {
        for (auto& piece : split(ps, ',')) {
          std::string p = trim(piece);
          auto ge = p.find(">=");
          if (ge == std::string::npos)
            throw std::invalid_argument("param needs 'name>=expr': " + p);
          rec.params.emplace_back(trim(p.substr(0, ge)), trim(p.substr(ge + 2)));
        }
      }
    }
    rec.dim_expr = trim(cols[2]);
    rec.rank_expr = trim(cols[3]);
    {
      std::string rs = trim(cols[4]);
      size_t i = 0;
      // "BC" must be tried before "B"
      if (rs.rfind("BC", 0) == 0) { rec.root_family = RootFamily::BC; i = 2; }
      else if (rs.rfind("E6", 0) == 0) { rec.root_family = RootFamily::E6; i = 2; }
      else if (rs.rfind("E7", 0) == 0) { rec.root_family = RootFamily::E7; i = 2; }
      else if (rs.rfind("E8", 0) == 0) { rec.root_family = RootFamily::E8; i = 2; }
      else if (rs.rfind("F4", 0) == 0) { rec.root_family = RootFamily::F4; i = 2; }
      else if (rs.rfind("G2", 0) == 0) { rec.root_family = RootFamily::G2; i = 2; }
      else if (rs[0] == 'A') { rec.root_family = RootFamily::A; i = 1; }
      else if (rs[0] == 'B') { rec.root_family = RootFamily::B; i = 1; }
      else if (rs[0] == 'C') { rec.root_family = RootFamily::C; i = 1; }
      else if (rs[0] == 'D') { rec.root_family = RootFamily::D; i = 1; }
      else throw std::invalid_argument("bad root system column: " + rs);
      std::string rest = rs.substr(i);
      if (!rest.empty() && rest.front() == '{' && rest.back() == '}')
        rest = rest.substr(1, rest.size() - 2);
      rec.root_rank_expr = rest;  // possibly empty for fixed-rank families
    }
    rec.m1_expr = trim(cols[5]);
    rec.m2_expr = trim(cols[6]);
    {
      // split factors on '+' outside braces (expressions may contain '+')
      std::vector<std::string> pieces;
      {
        std::string cur;
        int depth = 0;
        for (char c : trim(cols[7])) {
          if (c == '{') ++depth;
          if (c == '}') --depth;
          if (c == '+' && depth == 0) {
            pieces.push_back(cur);
            cur.clear();
          } else {
            cur += c;
          }
        }
        pieces.push_back(cur);
      }
      for (auto& piece : pieces) {
        std::string f = trim(piece);
        size_t i = 0;
        while (i < f.size() && (std::isalpha(static_cast<unsigned char>(f[i])) ||
                                std::isdigit(static_cast<unsigned char>(f[i])) || f[i] == '{'))
          if (f[i] == '{') break; else ++i;
        // split leading algebra token from a {expr} or digit suffix
        std::string tok, arg;
        if (f == "u1" || f == "e6" || f == "e7" || f == "e8" || f == "f4" || f == "g2") {
          tok = f;
        } else {
          tok = f.substr(0, 2);
          arg = f.substr(2);
          if (!arg.empty() && arg.front() == '{' && arg.back() == '}')
            arg = arg.substr(1, arg.size() - 2);
        }
        rec.iso.emplace_back(tok, arg);
      }
    }
    rec.flags = trim(cols[8]);
    cat.impl_->records.push_back(std::move(rec));
  }
  return cat;
}

// ---------------------------------------------------------------------------

namespace {

int isometry_rank_for(const std::string& key, const Env& P) {
  auto at = [&](const char* k) { return P.at(k); };
  if (key == "RH") return (at("n") + 1) / 2;
  if (key == "CH") return at("n");
  if (key == "HH") return at("n") + 1;
  if (key == "FII") return 4;
  if (key == "AI") return at("n") - 1;
  if (key == "AII") return 2 * at("n") - 1;
  if (key == "AIIIa") return at("p") + at("q") - 1;
  if (key == "AIIIb") return 2 * at("p") - 1;
  if (key == "BDIa") return (at("p") + at("q")) / 2;
  if (key == "BDIb") return at("p");
  if (key == "CI") return at("r");
  if (key == "CIIa") return at("p") + at("q");
  if (key == "CIIb") return 2 * at("p");
  if (key == "DIIIa") return 2 * at("m");
  if (key == "DIIIb") return 2 * at("m") + 1;
  if (key == "SLC") return 2 * (at("n") - 1);
  if (key == "SOCb") return 2 * at("r");
  if (key == "SPC") return 2 * at("r");
  if (key == "SOCd") return 2 * at("r");
  if (key == "G2C") return 4;
  if (key == "F4C") return 8;
  if (key == "E6C") return 12;
  if (key == "E7C") return 14;
  if (key == "E8C") return 16;
  if (key == "EI" || key == "EII" || key == "EIII" || key == "EIV") return 6;
  if (key == "EV" || key == "EVI" || key == "EVII") return 7;
  if (key == "EVIII" || key == "EIX") return 8;
  if (key == "FI") return 4;
  if (key == "G") return 2;
  throw std::invalid_argument("no isometry-group rank rule for family: " + key);
}

}  // namespace

SymmetricSpace Catalog::instantiate(const std::string& family_key, const Env& params) const {
  const Record& rec = impl_->record(family_key);
  if (params.size() != rec.params.size())
    throw std::invalid_argument("family " + family_key + " takes " +
                                std::to_string(rec.params.size()) + " parameter(s)");
  Env env;
  for (const auto& [name, min_expr] : rec.params) {
    auto it = params.find(name);
    if (it == params.end())
      throw std::invalid_argument("family " + family_key + " needs parameter '" + name + "'");
    long long lo = eval_expr(min_expr, env);
    if (it->second < lo)
      throw std::invalid_argument("parameter " + name + "=" + std::to_string(it->second) +
                                  " below minimum " + std::to_string(lo) + " for family " +
                                  family_key);
    env[name] = it->second;
  }

  SymmetricSpace s;
  s.family = rec.key;
  s.params = env;
  s.noncompact_id = substitute(rec.nc_tpl, env);
  s.compact_id = substitute(rec.c_tpl, env);
  s.dim = static_cast<int>(eval_expr(rec.dim_expr, env));
  s.rank = static_cast<int>(eval_expr(rec.rank_expr, env));
  int root_rank = rec.root_rank_expr.empty() ? 0 : static_cast<int>(eval_expr(rec.root_rank_expr, env));
  if (rec.root_rank_expr.empty()) {
    // fixed-rank exceptional family
    RootSystem probe{rec.root_family, 1};
    switch (rec.root_family) {
      case RootFamily::E6: probe.rank = 6; break;
      case RootFamily::E7: probe.rank = 7; break;
      case RootFamily::E8: probe.rank = 8; break;
      case RootFamily::F4: probe.rank = 4; break;
      case RootFamily::G2: probe.rank = 2; break;
      default: throw std::invalid_argument("missing rank for root system in " + family_key);
    }
    root_rank = probe.rank;
  }
  s.roots = make_root_system(rec.root_family, root_rank);
  s.mult.m_long = static_cast<int>(eval_expr(rec.m1_expr, env));
  s.mult.m_short = static_cast<int>(eval_expr(rec.m2_expr, env));
  for (const auto& [tok, arg] : rec.iso) {
    AlgebraType t = algebra_type_from(tok == "u1" ? "u" : tok);
    int n = arg.empty() ? 0 : static_cast<int>(eval_expr(arg, env));
    add_factor(s.isotropy, t, n);
  }
  for (char f : rec.flags) {
    switch (f) {
      case 'i': s.flags.inner = true; break;
      case 'I': {  // inner iff some parameter is even (real Grassmannian rule)
        bool even = false;
        for (const auto& [k, v] : env) even = even || (v % 2 == 0);
        s.flags.inner = even;
        break;
      }
      case 'h': s.flags.hermitian = true; break;
      case 'H': {  // hermitian iff the first declared parameter equals 2
        if (!rec.params.empty() && env.at(rec.params.front().first) == 2)
          s.flags.hermitian = true;
        break;
      }
      case 'g': s.flags.group_manifold = true; break;
      case 'c': s.flags.constant_curvature = true; break;
      case 'x': s.flags.external_multiplicities = true; break;
      case '-': break;
      default:
        throw std::invalid_argument(std::string("unknown flag '") + f + "' in family " + family_key);
    }
  }
  s.isometry_rank = isometry_rank_for(rec.key, env);
  return s;
}

std::string normalize_space_id(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (c == ' ' || c == '\t' || c == '{' || c == '}') continue;
    if (c == 'X') c = 'x';
    s += c;
  }
  std::string t;
  for (char c : s) {
    if (c == '_') {
      if (!t.empty() && std::isdigit(static_cast<unsigned char>(t.back()))) t += '^';
      continue;
    }
    t += c;
  }
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    std::string u = t.substr(0, slash + 1);
    for (size_t i = slash + 1; i < t.size(); ++i) {
      if (std::isdigit(static_cast<unsigned char>(u.back())) &&
          std::isupper(static_cast<unsigned char>(t[i])))
        u += 'x';
      u += t[i];
    }
    t = u;
  }
  return t;
}

namespace {

// Short-name rewrites for the rank-one families: RHn/CHn/HHn/OH2.
std::optional<std::string> rank_one_rewrite(const std::string& id) {
  auto tail_int = [](const std::string& s, size_t from) -> std::optional<int> {
    if (from >= s.size()) return std::nullopt;
    for (size_t i = from; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    return std::stoi(s.substr(from));
  };
  if (id == "OH2") return std::string("F4^-20/Spin9");
  if (id.rfind("RH", 0) == 0)
    if (auto n = tail_int(id, 2))
      return "SO(1," + std::to_string(*n) + ")/SO" + std::to_string(*n);
  if (id.rfind("CH", 0) == 0)
    if (auto n = tail_int(id, 2))
      return "SU(1," + std::to_string(*n) + ")/S(U1xU" + std::to_string(*n) + ")";
  if (id.rfind("HH", 0) == 0)
    if (auto n = tail_int(id, 2))
      return "Sp(1," + std::to_string(*n) + ")/Sp1xSp" + std::to_string(*n);
  return std::nullopt;
}

// Solve record params from template captures. Returns nullopt when the id is
// not an instantiation at all; out_of_range is set when it is one with
// parameters outside the record's declared range.
std::optional<Env> solve_params(const Record& rec, const IdTemplate& tpl,
                                const std::vector<long long>& caps, bool& out_of_range) {
  out_of_range = false;
  Env env;
  long long maxcap = 1;
  for (long long c : caps) maxcap = std::max(maxcap, c);
  if (maxcap > 1000000) return std::nullopt;

  // Fix parameters having a bare capture.
  for (size_t i = 0; i < tpl.exprs.size(); ++i)
    for (const auto& [name, _] : rec.params)
      if (tpl.exprs[i] == name) {
        auto it = env.find(name);
        if (it != env.end() && it->second != caps[i]) return std::nullopt;
        env[name] = static_cast<int>(caps[i]);
      }

  std::vector<std::string> free_names;
  for (const auto& [name, _] : rec.params)
    if (!env.count(name)) free_names.push_back(name);
  if (free_names.size() > 1) return std::nullopt;  // no such record in the catalog

  auto verify = [&](const Env& full) {
    for (size_t i = 0; i < tpl.exprs.size(); ++i)
      if (eval_expr(tpl.exprs[i], full) != caps[i]) return false;
    return true;
  };

  if (free_names.empty()) {
    if (!verify(env)) return std::nullopt;
  } else {
    bool found = false;
    for (long long v = 1; v <= maxcap + 2; ++v) {
      Env full = env;
      full[free_names[0]] = static_cast<int>(v);
      if (verify(full)) { env = full; found = true; break; }
    }
    if (!found) return std::nullopt;
  }

  // Range check.
  Env seen;
  for (const auto& [name, min_expr] : rec.params) {
    long long lo = eval_expr(min_expr, seen);
    seen[name] = env[name];
    if (env[name] < lo) out_of_range = true;
  }
  return env;
}

}  // namespace

std::optional<SymmetricSpace> Catalog::find(const std::string& raw) const {
  std::string id = normalize_space_id(raw);
  if (auto rw = rank_one_rewrite(id)) id = *rw;
  {
    auto it = impl_->aliases.find(id);
    if (it != impl_->aliases.end()) id = it->second;
  }

  struct OutOfRange {
    const Record* rec;
    Env params;
    bool compact;
  };
  std::vector<OutOfRange> fallbacks;

  for (const auto& rec : impl_->records) {
    for (int side = 0; side < 2; ++side) {
      const IdTemplate& tpl = side == 0 ? rec.nc_tpl : rec.c_tpl;
      auto caps = match_template(tpl, id);
      if (!caps) continue;
      bool oor = false;
      auto env = solve_params(rec, tpl, *caps, oor);
      if (!env) continue;
      if (!oor) {
        SymmetricSpace s = instantiate(rec.key, *env);
        s.compact_form = (side == 1);
        return s;
      }
      fallbacks.push_back({&rec, *env, side == 1});
    }
  }

  for (const auto& fb : fallbacks) {
    std::string nc_id = normalize_space_id(substitute(fb.rec->nc_tpl, fb.params));
    auto it = impl_->aliases.find(nc_id);
    if (it == impl_->aliases.end()) continue;
    auto target = find(it->second);
    if (!target) continue;
    return fb.compact ? dual(*target) : *target;
  }
  return std::nullopt;
}

std::vector<SymmetricSpace> Catalog::enumerate(const EnumFilter& filter) const {
  if (filter.max_dim > ceiling_)
    throw std::invalid_argument("enumerate bound " + std::to_string(filter.max_dim) +
                                " exceeds catalog ceiling " + std::to_string(ceiling_));
  std::vector<SymmetricSpace> out;
  auto admit = [&](SymmetricSpace&& s) {
    if (s.dim < filter.min_dim || s.dim > filter.max_dim) return;
    if (filter.exact_rank && s.rank != *filter.exact_rank) return;
    if (filter.rank_range &&
        (s.rank < filter.rank_range->first || s.rank > filter.rank_range->second))
      return;
    if (filter.exclude_rank_one && s.rank == 1) return;
    s.compact_form = filter.compact_form;
    out.push_back(std::move(s));
  };

  for (const auto& rec : impl_->records) {
    if (rec.params.empty()) {
      Env env;
      if (eval_expr(rec.dim_expr, env) <= filter.max_dim) admit(instantiate(rec.key, env));
      continue;
    }
    if (rec.params.size() == 1) {
      const auto& [name, min_expr] = rec.params[0];
      Env env;
      for (long long v = eval_expr(min_expr, env);; ++v) {
        Env e{{name, static_cast<int>(v)}};
        if (eval_expr(rec.dim_expr, e) > filter.max_dim) break;
        admit(instantiate(rec.key, e));
      }
      continue;
    }
    // two parameters, dim increasing in each
    const auto& [p_name, p_min_expr] = rec.params[0];
    const auto& [q_name, q_min_expr] = rec.params[1];
    Env none;
    for (long long p = eval_expr(p_min_expr, none);; ++p) {
      Env ep{{p_name, static_cast<int>(p)}};
      long long q0 = eval_expr(q_min_expr, ep);
      Env e0 = ep;
      e0[q_name] = static_cast<int>(q0);
      if (eval_expr(rec.dim_expr, e0) > filter.max_dim) break;
      for (long long q = q0;; ++q) {
        Env e = ep;
        e[q_name] = static_cast<int>(q);
        if (eval_expr(rec.dim_expr, e) > filter.max_dim) break;
        admit(instantiate(rec.key, e));
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const SymmetricSpace& a, const SymmetricSpace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.name() < b.name();
  });
  return out;
}

std::vector<std::string> Catalog::family_keys() const {
  std::vector<std::string> keys;
  for (const auto& r : impl_->records) keys.push_back(r.key);
  return keys;
}

std::vector<Catalog::LintIssue> Catalog::lint() const {
  std::vector<LintIssue> issues;
  auto bad = [&](const std::string& rec, const std::string& msg) {
    issues.push_back({rec, msg});
  };

  std::map<std::string, std::string> seen_ids;  // id -> record key
  EnumFilter all;
  all.max_dim = ceiling_;
  all.compact_form = false;
  std::vector<SymmetricSpace> sweep;
  try {
    sweep = enumerate(all);
  } catch (const std::exception& e) {
    bad("catalog", std::string("enumerate failed: ") + e.what());
    return issues;
  }

  for (const auto& s : sweep) {
    std::string where = s.family + " " + s.noncompact_id;
    if (!validate_dimension_formula(s))
      bad(where, "dimension formula violated");
    if (s.rank != s.roots.rank)
      bad(where, "rank column disagrees with root system rank");
    if (s.mult.m_long < 1 || s.mult.m_short < 1)
      bad(where, "multiplicities must be >= 1");
    if (s.flags.hermitian && s.dim % 2 != 0)
      bad(where, "hermitian space with odd dimension");
    bool inner_by_rank = s.isotropy.rank() == s.isometry_rank;
    if (s.flags.inner != inner_by_rank)
      bad(where, "inner flag disagrees with rank(K) == rank(G)");
    if (s.isotropy.rank() > s.isometry_rank)
      bad(where, "isotropy rank exceeds isometry group rank");
    auto [it, fresh] = seen_ids.emplace(s.noncompact_id, s.family);
    if (!fresh)
      bad(where, "duplicate id also produced by family " + it->second);
    auto back = find(s.noncompact_id);
    if (!back || back->family != s.family || back->params != s.params)
      bad(where, "noncompact id does not round-trip through find()");
    auto backc = find(s.compact_id);
    if (!backc || backc->family != s.family || backc->params != s.params ||
        !backc->compact_form)
      bad(where, "compact id does not round-trip through find()");
  }

  for (const auto& [from, to] : impl_->aliases) {
    if (!find(to)) bad("@alias " + from, "alias target does not resolve: " + to);
    auto src = find(from);
    if (!src) bad("@alias " + from, "alias source does not resolve");
  }
  return issues;
}

}  // namespace symidx
