#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lml/rng.hpp"

namespace lml {

enum class ScenarioKind { kSmall, kVarious, kLarge };

const char* scenario_name(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario(const std::string& name);

// Majority-proportion regime. The interval is fixed by the kind:
// Small [1/C, 0.4], Various [1/C, 1], Large [0.6, 1].
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::kVarious;
  int num_classes = 0;
  double majority_lo = 0.0;
  double majority_hi = 1.0;
  int bag_size_min = 10;
  int bag_size_max = 10;

  static ScenarioSpec make(ScenarioKind kind, int num_classes, int bag_size);
  static ScenarioSpec make(ScenarioKind kind, int num_classes, int bag_size_min, int bag_size_max);
  const char* name() const { return scenario_name(kind); }
  // Rejects intervals outside [1/C, 1], bag sizes < 2, and bag sizes for
  // which no majority count can land in the interval.
  void validate() const;
};

// Smallest majority count that admits a strictly-unique maximum for a
// bag of `bag_size` over `num_classes` classes.
int min_feasible_majority_count(int bag_size, int num_classes);

struct InstancePool {
  int feature_dim = 0;
  // [class][instance][dim]
  std::vector<std::vector<std::vector<double>>> by_class;

  int num_classes() const { return static_cast<int>(by_class.size()); }
  int class_size(int k) const { return static_cast<int>(by_class[static_cast<size_t>(k)].size()); }
  int total_instances() const;
  void validate() const;
};

// One bag: the instances, the one-hot majority label, and the hidden
// evaluation-only per-instance labels with their per-class counts.
struct BagRecord {
  std::vector<std::vector<double>> instances;
  std::vector<double> majority_label;
  std::vector<int> hidden_instance_labels;
  std::vector<int> count_vector;

  int size() const { return static_cast<int>(instances.size()); }
  int num_classes() const { return static_cast<int>(count_vector.size()); }
  int majority_index() const;
  double majority_proportion() const;
  // Recomputes counts/majority from the hidden labels and checks them
  // against the stored fields. Throws on any mismatch.
  void check_invariants() const;
};

// Unit direction for class k: one-hot axes when C <= d, else equally
// spaced directions on the first-two-coordinates circle (C <= 6), else
// +/-1 for d == 1, C == 2. Pairwise distances are >= 1 in all cases.
std::vector<std::vector<double>> class_directions(int num_classes, int dim);

// Isotropic unit-variance Gaussian per class, centered at
// separation * class_direction. Deterministic given seed.
InstancePool generate_gaussian_pool(int num_classes, int per_class, int dim, double separation,
                                    uint64_t seed);

// CSV rows: d feature columns then one integer label column. An optional
// header is auto-detected by a non-numeric first row.
InstancePool load_pool_csv(const std::string& path);
void write_pool_csv(const InstancePool& pool, const std::string& path);

// Class counts for one bag: majority class uniform over [0,C), majority
// proportion uniform over the scenario interval (rounded to a count),
// remainder spread over the other classes by stick-breaking with every
// minority capped at majority-1. The returned maximum is always unique.
std::vector<int> draw_class_counts(const ScenarioSpec& spec, int bag_size, Rng& rng);

// Instances sampled uniformly with replacement from each class list,
// then shuffled.
BagRecord assemble_bag(const InstancePool& pool, const std::vector<int>& counts, Rng& rng);

struct DatasetSplits {
  std::vector<BagRecord> train, val, test;
};

// Bags are generated with per-bag derived RNG streams (stream = bag
// index), so generation order never changes the content of bag i.
DatasetSplits make_dataset(const InstancePool& pool, const ScenarioSpec& spec, int n_bags,
                           uint64_t seed, double train_frac, double val_frac, double test_frac);
DatasetSplits make_dataset_counts(const InstancePool& pool, const ScenarioSpec& spec, int n_train,
                                  int n_val, int n_test, uint64_t seed);

// --- dataset files -------------------------------------------------------
// JSONL bag records (one object per line) plus a manifest.json sidecar.

struct DatasetManifest {
  int format_version = 1;
  uint64_t config_hash = 0;
  uint64_t seed = 0;
  ScenarioSpec scenario;
  int feature_dim = 0;
  int n_train = 0, n_val = 0, n_test = 0;
  std::string source;  // "synthetic" or "csv"
};

void export_dataset(const DatasetSplits& splits, const DatasetManifest& manifest,
                    const std::string& dir);

struct LoadedDataset {
  DatasetSplits splits;
  DatasetManifest manifest;
};

LoadedDataset import_dataset(const std::string& dir);

}  // namespace lml
