#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weavenet/instance.hpp"
#include "weavenet/rng.hpp"

namespace weavenet {

/// 2D frequency table over preference-rating pairs, used by the Lib
/// setting. counts is row-major, counts[ra * bins_b + rb]; a higher bin
/// index means a more preferred rating.
struct RatingHistogram {
  int bins_a = 0;
  int bins_b = 0;
  std::vector<double> counts;

  void validate() const;  // throws on empty/negative mass
};

std::string histogram_to_json(const RatingHistogram& hist);
RatingHistogram histogram_from_json(const std::string& text);
void save_histogram(const RatingHistogram& hist, const std::string& path);
RatingHistogram load_histogram(const std::string& path);

enum class DistributionKind { kUniform, kDiscrete, kGauss, kLibHistogram };

const char* to_string(DistributionKind kind);
DistributionKind distribution_kind_from_string(const std::string& s);

struct DistributionSpec {
  DistributionKind kind = DistributionKind::kUniform;
  double popular_fraction = 0.4;  // Discrete: share of popular candidates
  double stddev = 0.4;            // Gauss: score spread
  std::string histogram_path;     // Lib: rating-pair table

  void validate() const;
};

/// A reproducible instance collection: distributions per side, size,
/// master seed and count. Instance `i` is generated from the counter
/// stream `i` of the master seed, so any subset can be produced
/// independently and in parallel.
struct DatasetSpec {
  std::string setting;  // optional tag: UU, DD, GG, UD, Lib
  DistributionSpec side_a;
  DistributionSpec side_b;
  int n = 0;
  std::uint64_t seed = 0;
  int count = 0;

  void validate() const;
};

/// Builds the named settings of the evaluation protocol. `histogram_path`
/// is required for Lib and ignored otherwise.
DatasetSpec dataset_spec_for_setting(const std::string& setting, int n,
                                     std::uint64_t seed, int count,
                                     const std::string& histogram_path = "");

// --- single-side generators ---
// Each agent draws one score and one tie-break jitter per candidate and
// ranks candidates by descending (score, jitter). All draws come from the
// caller's stream in candidate order, so a (seed, stream) pair pins the
// output bit-exactly.

std::vector<std::vector<int>> gen_uniform(int n_agents, int n_candidates,
                                          Philox& rng);
std::vector<std::vector<int>> gen_discrete(int n_agents, int n_candidates,
                                           double popular_fraction,
                                           Philox& rng);
std::vector<std::vector<int>> gen_gauss(int n_agents, int n_candidates,
                                        double stddev, Philox& rng);

/// Joint generator for the Lib setting: each pair (a_i, b_j) draws a
/// rating pair from the histogram; ratings are ranked per agent with
/// uniform tie-breaking.
PreferenceInstance gen_lib(int n, Philox& rng, const RatingHistogram& hist);

/// Generates instance `index` of the dataset. The histogram must be
/// supplied when either side uses the Lib distribution.
PreferenceInstance generate_instance(const DatasetSpec& spec, int index,
                                     const RatingHistogram* hist = nullptr);

/// Owns the (optionally loaded) histogram and hands out instances by
/// index; safe to share across threads once constructed.
class InstanceSource {
 public:
  explicit InstanceSource(DatasetSpec spec);

  const DatasetSpec& spec() const { return spec_; }
  int count() const { return spec_.count; }
  PreferenceInstance at(int index) const;

 private:
  DatasetSpec spec_;
  std::optional<RatingHistogram> histogram_;
};

// --- dataset manifests ---

std::string manifest_to_json(const DatasetSpec& spec);
DatasetSpec manifest_from_json(const std::string& text);
void save_manifest(const DatasetSpec& spec, const std::string& path);
/// Loads a manifest; a relative histogram path is resolved against the
/// manifest's directory.
DatasetSpec load_manifest(const std::string& path);

}  // namespace weavenet
