#include "symidx/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symidx {

std::string to_string(RootFamily f) {
  switch (f) {
    case RootFamily::A: return "A";
    case RootFamily::B: return "B";
    case RootFamily::C: return "C";
    case RootFamily::D: return "D";
    case RootFamily::BC: return "BC";
    case RootFamily::E6: return "E6";
    case RootFamily::E7: return "E7";
    case RootFamily::E8: return "E8";
    case RootFamily::F4: return "F4";
    case RootFamily::G2: return "G2";
  }
  return "?";
}

std::string to_string(const RootSystem& rs) {
  switch (rs.family) {
    case RootFamily::A:
    case RootFamily::B:
    case RootFamily::C:
    case RootFamily::D:
    case RootFamily::BC:
      return to_string(rs.family) + std::to_string(rs.rank);
    default:
      return to_string(rs.family);
  }
}

static int fixed_rank(RootFamily f) {
  switch (f) {
    case RootFamily::E6: return 6;
    case RootFamily::E7: return 7;
    case RootFamily::E8: return 8;
    case RootFamily::F4: return 4;
    case RootFamily::G2: return 2;
    default: return 0;
  }
}

bool is_valid(const RootSystem& rs) noexcept {
  if (rs.rank < 1) return false;
  switch (rs.family) {
    case RootFamily::A:
    case RootFamily::B:
    case RootFamily::C:
    case RootFamily::BC:
      return true;
    case RootFamily::D:
      return rs.rank >= 2;
    default:
      return rs.rank == fixed_rank(rs.family);
  }
}

RootSystem make_root_system(RootFamily family, int rank) {
  RootSystem rs{family, rank};
  if (!is_valid(rs))
    throw std::invalid_argument("invalid root system " + to_string(family) + std::to_string(rank));
  return rs;
}

RootSystem parse_root_system(const std::string& token) {
  size_t i = 0;
  while (i < token.size() && std::isalpha(static_cast<unsigned char>(token[i]))) ++i;
  std::string letters = token.substr(0, i);
  std::string digits = token.substr(i);
  RootFamily f;
  if (letters == "A") f = RootFamily::A;
  else if (letters == "B") f = RootFamily::B;
  else if (letters == "C") f = RootFamily::C;
  else if (letters == "D") f = RootFamily::D;
  else if (letters == "BC") f = RootFamily::BC;
  else if (letters == "E" && digits == "6") return make_root_system(RootFamily::E6, 6);
  else if (letters == "E" && digits == "7") return make_root_system(RootFamily::E7, 7);
  else if (letters == "E" && digits == "8") return make_root_system(RootFamily::E8, 8);
  else if (letters == "F" && digits == "4") return make_root_system(RootFamily::F4, 4);
  else if (letters == "G" && digits == "2") return make_root_system(RootFamily::G2, 2);
  else throw std::invalid_argument("unknown root system token: " + token);
  if (digits.empty()) throw std::invalid_argument("missing rank in root system token: " + token);
  return make_root_system(f, std::stoi(digits));
}

static void require_valid(const RootSystem& rs) {
  if (!is_valid(rs))
    throw std::invalid_argument("invalid root system " + to_string(rs.family) +
                                std::to_string(rs.rank));
}

PositiveRootCounts positive_root_counts(const RootSystem& rs) {
  require_valid(rs);
  const int r = rs.rank;
  switch (rs.family) {
    case RootFamily::A: return {r * (r + 1) / 2, 0};
    case RootFamily::B:
      if (r == 1) return {1, 0};  // single root length
      return {r * (r - 1), r};
    case RootFamily::C:
      if (r == 1) return {1, 0};
      return {r, r * (r - 1)};
    case RootFamily::D: return {r * (r - 1), 0};
    case RootFamily::BC: return {r * (r - 1), r};  // (a,2a) collapsed to one short root
    case RootFamily::E6: return {36, 0};
    case RootFamily::E7: return {63, 0};
    case RootFamily::E8: return {120, 0};
    case RootFamily::F4: return {12, 12};
    case RootFamily::G2: return {3, 3};
  }
  return {};
}

int reflection_hyperplane_count(const RootSystem& rs) {
  require_valid(rs);
  const int r = rs.rank;
  switch (rs.family) {
    case RootFamily::A: return r * (r + 1) / 2;
    case RootFamily::B:
    case RootFamily::C:
    case RootFamily::BC: return r * r;
    case RootFamily::D: return r * (r - 1);
    case RootFamily::E6: return 36;
    case RootFamily::E7: return 63;
    case RootFamily::E8: return 120;
    case RootFamily::F4: return 24;
    case RootFamily::G2: return 6;
  }
  return 0;
}

std::vector<int> highest_root_coefficients(const RootSystem& rs) {
  require_valid(rs);
  const int r = rs.rank;
  switch (rs.family) {
    case RootFamily::A: return std::vector<int>(r, 1);
    case RootFamily::B: {
      if (r == 1) return {1};
      std::vector<int> c(r, 2);
      c[0] = 1;
      return c;
    }
    case RootFamily::C: {
      if (r == 1) return {1};
      std::vector<int> c(r, 2);
      c[r - 1] = 1;
      return c;
    }
    case RootFamily::D: {
      if (r == 2)
        throw std::invalid_argument("D2 is reducible and has no unique highest root");
      std::vector<int> c(r, 2);
      c[0] = 1;
      c[r - 2] = 1;
      c[r - 1] = 1;
      return c;
    }
    case RootFamily::BC: return std::vector<int>(r, 2);  // highest root 2e_1
    case RootFamily::E6: return {1, 2, 2, 3, 2, 1};
    case RootFamily::E7: return {2, 2, 3, 4, 3, 2, 1};
    case RootFamily::E8: return {2, 3, 4, 6, 5, 4, 3, 2};
    case RootFamily::F4: return {2, 3, 4, 2};
    case RootFamily::G2: return {3, 2};
  }
  return {};
}

bool has_coefficient_exceeding_one(const RootSystem& rs) {
  auto c = highest_root_coefficients(rs);
  return std::any_of(c.begin(), c.end(), [](int v) { return v > 1; });
}

// ---------------------------------------------------------------------------
// Type A subsystems

std::vector<int> TypeASubsystem::boundaries() const {
  std::vector<int> d{0};
  for (int s : block_sizes) d.push_back(d.back() + s);
  return d;
}

int TypeASubsystem::span_rank() const {
  int v = 0;
  for (int s : block_sizes) v += s - 1;
  return v;
}

int TypeASubsystem::hyperplane_count() const {
  int v = 0;
  for (int s : block_sizes) v += s * (s - 1) / 2;
  return v;
}

std::string TypeASubsystem::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < block_sizes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(block_sizes[i]);
  }
  return s + "}";
}

TypeASubsystem make_type_a_subsystem(int ambient_rank, std::vector<int> block_sizes) {
  if (ambient_rank < 1) throw std::invalid_argument("ambient rank must be >= 1");
  if (block_sizes.empty()) throw std::invalid_argument("subsystem needs at least one block");
  std::sort(block_sizes.begin(), block_sizes.end(), std::greater<int>());
  int total = 0;
  for (int s : block_sizes) {
    if (s < 2) throw std::invalid_argument("block sizes must be >= 2");
    total += s;
  }
  if (total > ambient_rank + 1)
    throw std::invalid_argument("block sizes exceed ambient index set");
  return TypeASubsystem{ambient_rank, std::move(block_sizes)};
}

static void partitions_min2(int total, int max_part, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(total, max_part); p >= 2; --p) {
    if (total - p == 1) continue;  // a remainder of 1 can never be filled
    cur.push_back(p);
    partitions_min2(total - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<TypeASubsystem> enumerate_type_a_subsystems(int r) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<TypeASubsystem> result;
  for (int total = 2; total <= r + 1; ++total) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_min2(total, total, cur, parts);
    for (auto& p : parts) {
      if (total == r + 1 && p.size() == 1) continue;  // the full system
      result.push_back(TypeASubsystem{r, p});
    }
  }
  return result;
}

std::vector<RootVec> type_a_positive_roots(int r) {
  std::vector<RootVec> roots;
  for (int i = 0; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      RootVec v(r + 1, 0);
      v[i] = 1;
      v[j] = -1;
      roots.push_back(std::move(v));
    }
  return roots;
}

std::vector<RootVec> realize_positive_roots(const TypeASubsystem& sub) {
  std::vector<RootVec> roots;
  auto d = sub.boundaries();
  for (size_t b = 0; b + 1 < d.size(); ++b)
    for (int i = d[b]; i < d[b + 1]; ++i)
      for (int j = i + 1; j < d[b + 1]; ++j) {
        RootVec v(sub.ambient_rank + 1, 0);
        v[i] = 1;
        v[j] = -1;
        roots.push_back(std::move(v));
      }
  return roots;
}

static long long dot(const RootVec& a, const RootVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

static RootVec normalized_sign(RootVec v) {
  for (int x : v) {
    if (x > 0) return v;
    if (x < 0) break;
  }
  for (int& x : v) x = -x;
  return v;
}

bool is_reflection_closed(const std::vector<RootVec>& positive_roots) {
  if (positive_roots.empty()) return true;
  const size_t n = positive_roots.front().size();
  std::set<RootVec> pos;
  for (const auto& v : positive_roots) {
    if (v.size() != n) throw std::invalid_argument("inconsistent root vector dimensions");
    pos.insert(normalized_sign(v));
  }
  for (const auto& a : pos) {
    long long aa = dot(a, a);
    for (const auto& b : pos) {
      long long num = 2 * dot(a, b);
      if (num % aa != 0) return false;  // not crystallographic within the set
      long long c = num / aa;
      RootVec refl(n);
      for (size_t i = 0; i < n; ++i)
        refl[i] = static_cast<int>(b[i] - c * a[i]);
      if (!pos.count(normalized_sign(refl))) return false;
    }
  }
  return true;
}

bool verify_subsystem_closed(const TypeASubsystem& sub) {
  return is_reflection_closed(realize_positive_roots(sub));
}

}  // namespace symidx
