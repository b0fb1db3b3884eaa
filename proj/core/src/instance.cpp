#include "weavenet/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace weavenet {

using Json = nlohmann::ordered_json;

namespace {

// rank table: table[agent][candidate] = 1-based rank
std::vector<std::vector<int>> build_ranks(
    const std::vector<std::vector<int>>& prefs, int n_candidates,
    const char* side) {
  std::vector<std::vector<int>> ranks(prefs.size());
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    const auto& list = prefs[i];
    if (static_cast<int>(list.size()) != n_candidates)
      throw std::invalid_argument(std::string("preference list on side ") +
                                  side + " has wrong length");
    std::vector<int>& r = ranks[i];
    r.assign(n_candidates, 0);
    for (int pos = 0; pos < n_candidates; ++pos) {
      const int c = list[pos];
      if (c < 0 || c >= n_candidates)
        throw std::invalid_argument(std::string("candidate index out of "
                                                "range on side ") +
                                    side);
      if (r[c] != 0)
        throw std::invalid_argument(
            std::string("preference list on side ") + side +
            " is not a permutation (duplicate candidate)");
      r[c] = pos + 1;
    }
  }
  return ranks;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

PreferenceInstance::PreferenceInstance(std::vector<std::vector<int>> prefs_a,
                                       std::vector<std::vector<int>> prefs_b,
                                       std::optional<Provenance> provenance)
    : n_(static_cast<int>(prefs_a.size())),
      m_(static_cast<int>(prefs_b.size())),
      prefs_a_(std::move(prefs_a)),
      prefs_b_(std::move(prefs_b)),
      provenance_(std::move(provenance)) {
  if (n_ < 1 || m_ < 1)
    throw std::invalid_argument("instance needs at least one agent per side");
  if (m_ > n_)
    throw std::invalid_argument("side B may not be larger than side A");
  rank_a_ = build_ranks(prefs_a_, m_, "A");
  rank_b_ = build_ranks(prefs_b_, n_, "B");
}

Matching::Matching(std::vector<int> pair_of_a)
    : pair_of_a_(std::move(pair_of_a)) {
  std::vector<int> seen;
  for (int b : pair_of_a_) {
    if (b == kUnassigned) continue;
    if (b < 0) throw std::invalid_argument("negative B-index in matching");
    if (std::find(seen.begin(), seen.end(), b) != seen.end())
      throw std::invalid_argument("B-index assigned twice in matching");
    seen.push_back(b);
  }
}

std::vector<int> Matching::partner_of_b(int m) const {
  std::vector<int> inv(m, kUnassigned);
  for (int i = 0; i < size_a(); ++i) {
    const int b = pair_of_a_[i];
    if (b == kUnassigned) continue;
    if (b >= m) throw std::invalid_argument("B-index exceeds m");
    inv[b] = i;
  }
  return inv;
}

bool Matching::is_perfect(int m) const {
  if (size_a() != m) return false;
  for (int b : pair_of_a_)
    if (b == kUnassigned) return false;
  return true;  // all assigned + no duplicates (ctor invariant) = bijection
}

const char* to_string(CostKind kind) {
  switch (kind) {
    case CostKind::kSeq: return "seq";
    case CostKind::kBal: return "bal";
    case CostKind::kEgal: return "egal";
    case CostKind::kReg: return "reg";
  }
  return "?";
}

CostKind cost_kind_from_string(const std::string& s) {
  if (s == "seq") return CostKind::kSeq;
  if (s == "bal") return CostKind::kBal;
  if (s == "egal") return CostKind::kEgal;
  if (s == "reg") return CostKind::kReg;
  throw std::invalid_argument("unknown cost kind: " + s);
}

long long CostReport::by_kind(CostKind kind) const {
  switch (kind) {
    case CostKind::kSeq: return seq;
    case CostKind::kBal: return bal;
    case CostKind::kEgal: return egal;
    case CostKind::kReg: return reg;
  }
  return 0;
}

ScoreMatrices scale_ranks(const PreferenceInstance& inst, double c_min) {
  if (!(c_min > 0.0 && c_min < 1.0))
    throw std::invalid_argument("c_min must lie in (0, 1)");
  const int n = inst.n();
  const int m = inst.m();
  ScoreMatrices s;
  s.c_min = c_min;
  s.a = DenseMatrix(n, m);
  s.b = DenseMatrix(m, n);
  // Each side normalizes by the length of its own list, so the last rank
  // always maps to c_min and the first to the top of (0, 1].
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      s.a(i, j) = (1.0 - c_min) * (m - inst.rank_a(i, j)) / m + c_min;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      s.b(j, i) = (1.0 - c_min) * (n - inst.rank_b(j, i)) / n + c_min;
  return s;
}

std::vector<std::pair<int, int>> find_blocking_pairs(
    const PreferenceInstance& inst, const Matching& match) {
  const int n = inst.n();
  const int m = inst.m();
  if (match.size_a() != n)
    throw std::invalid_argument("matching size does not fit instance");
  const std::vector<int> inv = match.partner_of_b(m);

  std::vector<std::pair<int, int>> blocking;
  for (int v = 0; v < n; ++v) {
    const int j = match.partner_of_a(v);
    if (j == Matching::kUnassigned) continue;  // a_v has no matched partner
    for (int w = 0; w < m; ++w) {
      if (w == j) continue;
      const int i = inv[w];
      if (i == Matching::kUnassigned) continue;  // b_w has no matched partner
      if (inst.rank_a(v, w) < inst.rank_a(v, j) &&
          inst.rank_b(w, v) < inst.rank_b(w, i))
        blocking.emplace_back(v, w);
    }
  }
  return blocking;
}

bool is_stable(const PreferenceInstance& inst, const Matching& match) {
  return find_blocking_pairs(inst, match).empty();
}

CostReport cost_report(const PreferenceInstance& inst, const Matching& match) {
  if (!match.is_perfect(inst.m()) || inst.n() != inst.m())
    throw std::invalid_argument("cost report requires a perfect matching");
  CostReport r;
  for (int i = 0; i < inst.n(); ++i) {
    const int j = match.partner_of_a(i);
    const int ra = inst.rank_a(i, j);
    const int rb = inst.rank_b(j, i);
    r.p_a += ra;
    r.p_b += rb;
    r.reg = std::max(r.reg, static_cast<long long>(std::max(ra, rb)));
  }
  r.seq = std::llabs(r.p_a - r.p_b);
  r.egal = r.p_a + r.p_b;
  r.bal = std::max(r.p_a, r.p_b);
  return r;
}

std::string instance_to_json(const PreferenceInstance& inst) {
  Json j;
  j["version"] = 1;
  j["n"] = inst.n();
  j["m"] = inst.m();
  j["prefs_a"] = inst.prefs_a();
  j["prefs_b"] = inst.prefs_b();
  if (inst.provenance()) {
    j["distribution"] = inst.provenance()->distribution;
    j["seed"] = inst.provenance()->seed;
  }
  return j.dump(2) + "\n";
}

PreferenceInstance instance_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  if (j.at("version").get<int>() != 1)
    throw std::runtime_error("unsupported instance format version");
  auto prefs_a = j.at("prefs_a").get<std::vector<std::vector<int>>>();
  auto prefs_b = j.at("prefs_b").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(prefs_a.size()) != j.at("n").get<int>() ||
      static_cast<int>(prefs_b.size()) != j.at("m").get<int>())
    throw std::runtime_error("instance header disagrees with list sizes");
  std::optional<Provenance> prov;
  if (j.contains("distribution"))
    prov = Provenance{j.at("distribution").get<std::string>(),
                      j.value("seed", std::uint64_t{0})};
  return PreferenceInstance(std::move(prefs_a), std::move(prefs_b),
                            std::move(prov));
}

void save_instance(const PreferenceInstance& inst, const std::string& path) {
  write_file(path, instance_to_json(inst));
}

PreferenceInstance load_instance(const std::string& path) {
  return instance_from_json(read_file(path));
}

std::string matching_to_json(const Matching& match) {
  Json j;
  j["version"] = 1;
  j["pairs"] = match.pairs();  // -1 marks an unassigned A-agent
  return j.dump(2) + "\n";
}

Matching matching_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  if (j.at("version").get<int>() != 1)
    throw std::runtime_error("unsupported matching format version");
  return Matching(j.at("pairs").get<std::vector<int>>());
}

void save_matching(const Matching& match, const std::string& path) {
  write_file(path, matching_to_json(match));
}

Matching load_matching(const std::string& path) {
  return matching_from_json(read_file(path));
}

}  // namespace weavenet
