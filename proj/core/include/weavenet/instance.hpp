#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weavenet/matrix.hpp"

namespace weavenet {

/// Where a generated instance came from; carried through serialization so
/// experiment outputs stay traceable to their dataset.
struct Provenance {
  std::string distribution;
  std::uint64_t seed = 0;
};

/// A two-sided matching instance: n agents on side A, m candidates on
/// side B (m <= n), each agent holding a full preference list over the
/// opposite side, most preferred first.
///
/// Lists store 0-based candidate indices. Ranks are 1-based: rank 1 is
/// the most preferred candidate.
class PreferenceInstance {
 public:
  PreferenceInstance(std::vector<std::vector<int>> prefs_a,
                     std::vector<std::vector<int>> prefs_b,
                     std::optional<Provenance> provenance = std::nullopt);

  int n() const { return n_; }
  int m() const { return m_; }

  const std::vector<std::vector<int>>& prefs_a() const { return prefs_a_; }
  const std::vector<std::vector<int>>& prefs_b() const { return prefs_b_; }

  /// 1-based rank of candidate b_j in a_i's list.
  int rank_a(int i, int j) const { return rank_a_[i][j]; }
  /// 1-based rank of agent a_i in b_j's list.
  int rank_b(int j, int i) const { return rank_b_[j][i]; }

  const std::optional<Provenance>& provenance() const { return provenance_; }

  bool operator==(const PreferenceInstance& other) const {
    return prefs_a_ == other.prefs_a_ && prefs_b_ == other.prefs_b_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> prefs_a_;
  std::vector<std::vector<int>> prefs_b_;
  std::vector<std::vector<int>> rank_a_;  // rank_a_[i][j], 1-based
  std::vector<std::vector<int>> rank_b_;  // rank_b_[j][i], 1-based
  std::optional<Provenance> provenance_;
};

/// Rank tables rescaled into (0, 1], higher score = more preferred.
/// a(i, j) scores candidate b_j from a_i's viewpoint; b(j, i) mirrors it.
struct ScoreMatrices {
  DenseMatrix a;  // n x m
  DenseMatrix b;  // m x n
  double c_min = 0.0;
};

inline constexpr double kDefaultCMin = 0.1;

/// One-to-one assignment, possibly partial. pair_of_a[i] holds the
/// matched B-index of a_i or kUnassigned. No B-index appears twice.
class Matching {
 public:
  static constexpr int kUnassigned = -1;

  explicit Matching(std::vector<int> pair_of_a);

  int size_a() const { return static_cast<int>(pair_of_a_.size()); }
  int partner_of_a(int i) const { return pair_of_a_[i]; }
  const std::vector<int>& pairs() const { return pair_of_a_; }

  /// B-side inverse: partner_of_b(j) or kUnassigned. Sized for `m`
  /// candidates.
  std::vector<int> partner_of_b(int m) const;

  /// True when every A-agent is assigned and all m candidates are used,
  /// i.e. the matching is a bijection (requires size_a() == m).
  bool is_perfect(int m) const;

  bool operator==(const Matching&) const = default;
  /// Lexicographic order on the pair vector; used for deterministic
  /// tie-breaks among equal-cost matchings.
  bool operator<(const Matching& other) const {
    return pair_of_a_ < other.pair_of_a_;
  }

 private:
  std::vector<int> pair_of_a_;
};

enum class CostKind { kSeq, kBal, kEgal, kReg };

const char* to_string(CostKind kind);
CostKind cost_kind_from_string(const std::string& s);

/// The fairness costs of a perfect matching, on raw 1-based ranks.
struct CostReport {
  long long p_a = 0;   // sum of A-side ranks
  long long p_b = 0;   // sum of B-side ranks
  long long seq = 0;   // |p_a - p_b|
  long long reg = 0;   // worst individual rank
  long long egal = 0;  // p_a + p_b
  long long bal = 0;   // max(p_a, p_b)

  long long by_kind(CostKind kind) const;
};

/// Linear rank rescaling: score = (1 - c_min) * (len - rank) / len + c_min,
/// where len is the length of the agent's own list. Last rank maps to
/// c_min, first rank to the top of (0, 1].
ScoreMatrices scale_ranks(const PreferenceInstance& inst,
                          double c_min = kDefaultCMin);

/// All pairs (a_v, b_w) not in `match` where both agents are matched and
/// both strictly prefer each other over their partners. Ordered by
/// (A-index, B-index).
std::vector<std::pair<int, int>> find_blocking_pairs(
    const PreferenceInstance& inst, const Matching& match);

bool is_stable(const PreferenceInstance& inst, const Matching& match);

/// Fairness costs of a perfect matching; throws std::invalid_argument on
/// imperfect input (costs are undefined there).
CostReport cost_report(const PreferenceInstance& inst, const Matching& match);

// --- serialization (0-based indices on disk) ---

std::string instance_to_json(const PreferenceInstance& inst);
PreferenceInstance instance_from_json(const std::string& text);
void save_instance(const PreferenceInstance& inst, const std::string& path);
PreferenceInstance load_instance(const std::string& path);

std::string matching_to_json(const Matching& match);
Matching matching_from_json(const std::string& text);
void save_matching(const Matching& match, const std::string& path);
Matching load_matching(const std::string& path);

}  // namespace weavenet
