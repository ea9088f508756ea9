#include "lml/bagsynth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lml/nn.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace lml {

const char* scenario_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kSmall: return "Small";
    case ScenarioKind::kVarious: return "Various";
    case ScenarioKind::kLarge: return "Large";
  }
  return "?";
}

std::optional<ScenarioKind> parse_scenario(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "small") return ScenarioKind::kSmall;
  if (s == "various") return ScenarioKind::kVarious;
  if (s == "large") return ScenarioKind::kLarge;
  return std::nullopt;
}

int min_feasible_majority_count(int bag_size, int num_classes) {
  // smallest n with bag_size - n <= (C-1)(n-1), i.e. n >= (B+C-1)/C
  return (bag_size + num_classes - 1 + num_classes - 1) / num_classes;
}

ScenarioSpec ScenarioSpec::make(ScenarioKind kind, int num_classes, int bag_size) {
  return make(kind, num_classes, bag_size, bag_size);
}

ScenarioSpec ScenarioSpec::make(ScenarioKind kind, int num_classes, int bag_size_min,
                                int bag_size_max) {
  ScenarioSpec spec;
  spec.kind = kind;
  spec.num_classes = num_classes;
  spec.bag_size_min = bag_size_min;
  spec.bag_size_max = bag_size_max;
  if (num_classes < 2) throw std::invalid_argument("scenario needs at least 2 classes");
  double inv_c = 1.0 / num_classes;
  switch (kind) {
    case ScenarioKind::kSmall:
      spec.majority_lo = inv_c;
      spec.majority_hi = 0.4;
      break;
    case ScenarioKind::kVarious:
      spec.majority_lo = inv_c;
      spec.majority_hi = 1.0;
      break;
    case ScenarioKind::kLarge:
      spec.majority_lo = 0.6;
      spec.majority_hi = 1.0;
      break;
  }
  spec.validate();
  return spec;
}

void ScenarioSpec::validate() const {
  if (num_classes < 2) throw std::invalid_argument("scenario needs at least 2 classes");
  if (bag_size_min < 2) throw std::invalid_argument("bag size must be >= 2");
  if (bag_size_max < bag_size_min) throw std::invalid_argument("bag size range is inverted");
  double inv_c = 1.0 / num_classes;
  if (majority_lo < inv_c - 1e-12 || majority_hi > 1.0 + 1e-12 || majority_lo > majority_hi) {
    throw std::invalid_argument(std::string("scenario ") + name() + ": majority interval [" +
                                std::to_string(majority_lo) + "," + std::to_string(majority_hi) +
                                "] is infeasible for C=" + std::to_string(num_classes));
  }
  for (int b = bag_size_min; b <= bag_size_max; ++b) {
    int n_min = min_feasible_majority_count(b, num_classes);
    int n_hi = static_cast<int>(std::lround(majority_hi * b));
    if (n_hi < n_min) {
      throw std::invalid_argument(std::string("scenario ") + name() + ": no feasible majority count for bag size " +
                                  std::to_string(b) + " with C=" + std::to_string(num_classes) +
                                  " (need >= " + std::to_string(n_min) + ")");
    }
  }
}

int InstancePool::total_instances() const {
  int n = 0;
  for (const auto& cls : by_class) n += static_cast<int>(cls.size());
  return n;
}

void InstancePool::validate() const {
  if (feature_dim < 1) throw std::invalid_argument("pool feature_dim must be >= 1");
  if (num_classes() < 2) throw std::invalid_argument("pool needs at least 2 classes");
  for (size_t k = 0; k < by_class.size(); ++k) {
    for (size_t i = 0; i < by_class[k].size(); ++i) {
      if (static_cast<int>(by_class[k][i].size()) != feature_dim) {
        throw std::invalid_argument("pool class " + std::to_string(k) + " instance " +
                                    std::to_string(i) + " has wrong dimension");
      }
    }
  }
}

int BagRecord::majority_index() const {
  return one_hot_index(std::span<const double>(majority_label));
}

double BagRecord::majority_proportion() const {
  int m = majority_index();
  return static_cast<double>(count_vector[static_cast<size_t>(m)]) / size();
}

void BagRecord::check_invariants() const {
  int c = num_classes();
  if (c < 2) throw std::runtime_error("bag has fewer than 2 classes");
  if (instances.size() != hidden_instance_labels.size()) {
    throw std::runtime_error("bag instances and hidden labels differ in length");
  }
  std::vector<int> recount(static_cast<size_t>(c), 0);
  for (int label : hidden_instance_labels) {
    if (label < 0 || label >= c) throw std::runtime_error("hidden label out of range");
    recount[static_cast<size_t>(label)] += 1;
  }
  if (recount != count_vector) throw std::runtime_error("count_vector does not match hidden labels");
  int total = 0;
  for (int n : count_vector) total += n;
  if (total != size()) throw std::runtime_error("count_vector total != bag size");
  int best = argmax_lowest_int(std::span<const int>(count_vector));
  int ties = 0;
  for (int n : count_vector) {
    if (n == count_vector[static_cast<size_t>(best)]) ++ties;
  }
  if (ties != 1) throw std::runtime_error("count_vector has a tied maximum");
  if (majority_index() != best) throw std::runtime_error("majority_label does not match counts");
}

std::vector<std::vector<double>> class_directions(int num_classes, int dim) {
  if (dim < 1) throw std::invalid_argument("class_directions: dim must be >= 1");
  if (num_classes < 2) throw std::invalid_argument("class_directions: need >= 2 classes");
  std::vector<std::vector<double>> dirs(static_cast<size_t>(num_classes),
                                        std::vector<double>(static_cast<size_t>(dim), 0.0));
  if (num_classes <= dim) {
    for (int k = 0; k < num_classes; ++k) dirs[static_cast<size_t>(k)][static_cast<size_t>(k)] = 1.0;
    return dirs;
  }
  if (dim >= 2 && num_classes <= 6) {
    // hexagon or sparser: adjacent chord 2*sin(pi/C) >= 1 holds up to C=6
    for (int k = 0; k < num_classes; ++k) {
      double angle = 2.0 * 3.14159265358979323846 * k / num_classes;
      dirs[static_cast<size_t>(k)][0] = std::cos(angle);
      dirs[static_cast<size_t>(k)][1] = std::sin(angle);
    }
    return dirs;
  }
  throw std::invalid_argument("class_directions: cannot place " + std::to_string(num_classes) +
                              " unit centers with pairwise distance >= 1 in dimension " +
                              std::to_string(dim));
}

InstancePool generate_gaussian_pool(int num_classes, int per_class, int dim, double separation,
                                    uint64_t seed) {
  if (per_class < 1) throw std::invalid_argument("generate_gaussian_pool: per_class must be >= 1");
  if (separation < 0.0) throw std::invalid_argument("generate_gaussian_pool: separation must be >= 0");
  auto dirs = class_directions(num_classes, dim);
  InstancePool pool;
  pool.feature_dim = dim;
  pool.by_class.resize(static_cast<size_t>(num_classes));
  for (int k = 0; k < num_classes; ++k) {
    Rng rng(derive_stream(seed, static_cast<uint64_t>(k)));
    auto& cls = pool.by_class[static_cast<size_t>(k)];
    cls.resize(static_cast<size_t>(per_class));
    for (int i = 0; i < per_class; ++i) {
      auto& x = cls[static_cast<size_t>(i)];
      x.resize(static_cast<size_t>(dim));
      for (int j = 0; j < dim; ++j) {
        x[static_cast<size_t>(j)] =
            separation * dirs[static_cast<size_t>(k)][static_cast<size_t>(j)] + rng.normal();
      }
    }
  }
  pool.validate();
  return pool;
}

namespace {

bool parse_double_field(const std::string& field, double& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc{} && res.ptr == end && std::isfinite(out);
}

bool parse_int_field(const std::string& field, int& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc{} && res.ptr == end;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  for (auto& f : fields) {
    size_t a = f.find_first_not_of(" \t");
    size_t b = f.find_last_not_of(" \t");
    f = (a == std::string::npos) ? std::string() : f.substr(a, b - a + 1);
  }
  return fields;
}

}  // namespace

InstancePool load_pool_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pool CSV: " + path);
  std::string line;
  int row = 0;
  int dim = -1;
  bool first_data_row = true;
  std::vector<std::pair<std::vector<double>, int>> rows;
  int max_label = -1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (first_data_row) {
      // header detection: a non-numeric first row is skipped
      bool numeric = true;
      double tmp;
      for (const auto& f : fields) {
        if (!parse_double_field(f, tmp)) {
          numeric = false;
          break;
        }
      }
      if (!numeric) continue;
      first_data_row = false;
      dim = static_cast<int>(fields.size()) - 1;
      if (dim < 1) throw std::runtime_error("pool CSV row " + std::to_string(row) +
                                            ": need at least one feature column and a label");
    }
    if (static_cast<int>(fields.size()) != dim + 1) {
      throw std::runtime_error("pool CSV row " + std::to_string(row) + ": expected " +
                               std::to_string(dim + 1) + " columns, got " +
                               std::to_string(fields.size()));
    }
    std::vector<double> features(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      if (!parse_double_field(fields[static_cast<size_t>(j)], features[static_cast<size_t>(j)])) {
        throw std::runtime_error("pool CSV row " + std::to_string(row) + ": feature column " +
                                 std::to_string(j + 1) + " is not numeric: '" +
                                 fields[static_cast<size_t>(j)] + "'");
      }
    }
    int label = -1;
    if (!parse_int_field(fields[static_cast<size_t>(dim)], label) || label < 0) {
      throw std::runtime_error("pool CSV row " + std::to_string(row) +
                               ": label must be a non-negative integer, got '" +
                               fields[static_cast<size_t>(dim)] + "'");
    }
    max_label = std::max(max_label, label);
    rows.emplace_back(std::move(features), label);
  }
  if (rows.empty()) throw std::runtime_error("pool CSV has no data rows: " + path);
  if (max_label < 1) throw std::runtime_error("pool CSV defines fewer than 2 classes: " + path);
  InstancePool pool;
  pool.feature_dim = dim;
  pool.by_class.resize(static_cast<size_t>(max_label + 1));
  for (auto& [features, label] : rows) {
    pool.by_class[static_cast<size_t>(label)].push_back(std::move(features));
  }
  pool.validate();
  return pool;
}

void write_pool_csv(const InstancePool& pool, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write pool CSV: " + path);
  char buf[64];
  for (int k = 0; k < pool.num_classes(); ++k) {
    for (const auto& x : pool.by_class[static_cast<size_t>(k)]) {
      for (double f : x) {
        std::snprintf(buf, sizeof(buf), "%.17g", f);
        out << buf << ',';
      }
      out << k << '\n';
    }
  }
  if (!out) throw std::runtime_error("failed writing pool CSV: " + path);
}

std::vector<int> draw_class_counts(const ScenarioSpec& spec, int bag_size, Rng& rng) {
  if (bag_size < 2) throw std::invalid_argument("draw_class_counts: bag size must be >= 2");
  int c = spec.num_classes;
  int n_min = min_feasible_majority_count(bag_size, c);
  if (static_cast<int>(std::lround(spec.majority_hi * bag_size)) < n_min) {
    throw std::invalid_argument("draw_class_counts: scenario interval admits no feasible majority "
                                "count for bag size " + std::to_string(bag_size));
  }

  int majority = rng.uniform_int(0, c - 1);
  int n = -1;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    double p = rng.uniform(spec.majority_lo, spec.majority_hi);
    int candidate = static_cast<int>(std::lround(p * bag_size));
    if (candidate >= n_min && candidate <= bag_size) {
      n = candidate;
      break;
    }
  }
  if (n < 0) throw std::logic_error("draw_class_counts: resampling failed to find a feasible count");

  int remainder = bag_size - n;
  int k = c - 1;
  std::vector<int> parts(static_cast<size_t>(k), 0);
  if (remainder > 0) {
    if (k == 1) {
      parts[0] = remainder;
    } else {
      std::vector<int> cuts(static_cast<size_t>(k - 1));
      for (auto& cut : cuts) cut = rng.uniform_int(0, remainder);
      std::sort(cuts.begin(), cuts.end());
      int prev = 0;
      for (int i = 0; i < k - 1; ++i) {
        parts[static_cast<size_t>(i)] = cuts[static_cast<size_t>(i)] - prev;
        prev = cuts[static_cast<size_t>(i)];
      }
      parts[static_cast<size_t>(k - 1)] = remainder - prev;
    }
    // enforce a strictly unique maximum: minorities never reach n
    int cap = n - 1;
    int excess = 0;
    for (auto& part : parts) {
      if (part > cap) {
        excess += part - cap;
        part = cap;
      }
    }
    size_t cursor = 0;
    while (excess > 0) {
      if (parts[cursor] < cap) {
        ++parts[cursor];
        --excess;
      }
      cursor = (cursor + 1) % parts.size();
    }
    rng.shuffle(parts);
  }

  std::vector<int> counts(static_cast<size_t>(c), 0);
  counts[static_cast<size_t>(majority)] = n;
  size_t part_idx = 0;
  for (int cls = 0; cls < c; ++cls) {
    if (cls == majority) continue;
    counts[static_cast<size_t>(cls)] = parts[part_idx++];
  }
  return counts;
}

BagRecord assemble_bag(const InstancePool& pool, const std::vector<int>& counts, Rng& rng) {
  int c = pool.num_classes();
  if (static_cast<int>(counts.size()) != c) {
    throw std::invalid_argument("assemble_bag: counts length != pool classes");
  }
  int total = 0;
  for (int n : counts) {
    if (n < 0) throw std::invalid_argument("assemble_bag: negative count");
    total += n;
  }
  if (total < 1) throw std::invalid_argument("assemble_bag: empty bag");
  int best = argmax_lowest_int(std::span<const int>(counts));
  for (int k = 0; k < c; ++k) {
    if (k != best && counts[static_cast<size_t>(k)] == counts[static_cast<size_t>(best)]) {
      throw std::invalid_argument("assemble_bag: counts have a tied maximum");
    }
  }

  std::vector<std::pair<std::vector<double>, int>> drawn;
  drawn.reserve(static_cast<size_t>(total));
  for (int k = 0; k < c; ++k) {
    int want = counts[static_cast<size_t>(k)];
    if (want == 0) continue;
    int available = pool.class_size(k);
    if (available == 0) {
      throw std::invalid_argument("assemble_bag: class " + std::to_string(k) +
                                  " has no pool instances");
    }
    for (int i = 0; i < want; ++i) {
      int idx = rng.uniform_int(0, available - 1);
      drawn.emplace_back(pool.by_class[static_cast<size_t>(k)][static_cast<size_t>(idx)], k);
    }
  }
  rng.shuffle(drawn);

  BagRecord bag;
  bag.count_vector = counts;
  bag.majority_label.assign(static_cast<size_t>(c), 0.0);
  bag.majority_label[static_cast<size_t>(best)] = 1.0;
  bag.instances.reserve(drawn.size());
  bag.hidden_instance_labels.reserve(drawn.size());
  for (auto& [features, label] : drawn) {
    bag.instances.push_back(std::move(features));
    bag.hidden_instance_labels.push_back(label);
  }
  return bag;
}

DatasetSplits make_dataset_counts(const InstancePool& pool, const ScenarioSpec& spec, int n_train,
                                  int n_val, int n_test, uint64_t seed) {
  pool.validate();
  spec.validate();
  if (pool.num_classes() != spec.num_classes) {
    throw std::invalid_argument("make_dataset: pool has " + std::to_string(pool.num_classes()) +
                                " classes but scenario expects " + std::to_string(spec.num_classes));
  }
  if (n_train < 0 || n_val < 0 || n_test < 0 || n_train + n_val + n_test < 3) {
    throw std::invalid_argument("make_dataset: need at least 3 bags");
  }
  int n_bags = n_train + n_val + n_test;
  DatasetSplits splits;
  splits.train.reserve(static_cast<size_t>(n_train));
  splits.val.reserve(static_cast<size_t>(n_val));
  splits.test.reserve(static_cast<size_t>(n_test));
  for (int i = 0; i < n_bags; ++i) {
    Rng bag_rng(derive_stream(seed, static_cast<uint64_t>(i)));
    int bag_size = spec.bag_size_min == spec.bag_size_max
                       ? spec.bag_size_min
                       : bag_rng.uniform_int(spec.bag_size_min, spec.bag_size_max);
    auto counts = draw_class_counts(spec, bag_size, bag_rng);
    BagRecord bag = assemble_bag(pool, counts, bag_rng);
    if (i < n_train) {
      splits.train.push_back(std::move(bag));
    } else if (i < n_train + n_val) {
      splits.val.push_back(std::move(bag));
    } else {
      splits.test.push_back(std::move(bag));
    }
  }
  return splits;
}

DatasetSplits make_dataset(const InstancePool& pool, const ScenarioSpec& spec, int n_bags,
                           uint64_t seed, double train_frac, double val_frac, double test_frac) {
  if (!(train_frac > 0.0) || !(val_frac > 0.0) || !(test_frac > 0.0)) {
    throw std::invalid_argument("make_dataset: split fractions must be positive");
  }
  if (std::fabs(train_frac + val_frac + test_frac - 1.0) > 1e-9) {
    throw std::invalid_argument("make_dataset: split fractions must sum to 1");
  }
  if (n_bags < 3) throw std::invalid_argument("make_dataset: need at least 3 bags");
  int n_val = static_cast<int>(std::floor(n_bags * val_frac));
  int n_test = static_cast<int>(std::floor(n_bags * test_frac));
  int n_train = n_bags - n_val - n_test;
  return make_dataset_counts(pool, spec, n_train, n_val, n_test, seed);
}

namespace {

char hash_hex_buf[17];

std::string hash_to_hex(uint64_t h) {
  std::snprintf(hash_hex_buf, sizeof(hash_hex_buf), "%016llx", static_cast<unsigned long long>(h));
  return hash_hex_buf;
}

uint64_t hex_to_hash(const std::string& s) {
  return std::stoull(s, nullptr, 16);
}

ordered_json scenario_to_json(const ScenarioSpec& spec) {
  return ordered_json{{"kind", spec.name()},
                      {"num_classes", spec.num_classes},
                      {"majority_lo", spec.majority_lo},
                      {"majority_hi", spec.majority_hi},
                      {"bag_size_min", spec.bag_size_min},
                      {"bag_size_max", spec.bag_size_max}};
}

ScenarioSpec scenario_from_json(const ordered_json& j) {
  ScenarioSpec spec;
  auto kind = parse_scenario(j.at("kind").get<std::string>());
  if (!kind) throw std::runtime_error("manifest: unknown scenario kind");
  spec.kind = *kind;
  spec.num_classes = j.at("num_classes").get<int>();
  spec.majority_lo = j.at("majority_lo").get<double>();
  spec.majority_hi = j.at("majority_hi").get<double>();
  spec.bag_size_min = j.at("bag_size_min").get<int>();
  spec.bag_size_max = j.at("bag_size_max").get<int>();
  spec.validate();
  return spec;
}

void write_split_jsonl(const std::vector<BagRecord>& bags, const std::string& path, int* next_id) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dataset file: " + path);
  for (const auto& bag : bags) {
    ordered_json j{{"bag_id", (*next_id)++},
                   {"features", bag.instances},
                   {"majority_label_index", bag.majority_index()},
                   {"hidden_labels", bag.hidden_instance_labels},
                   {"count_vector", bag.count_vector}};
    out << j.dump() << '\n';
  }
  if (!out) throw std::runtime_error("failed writing dataset file: " + path);
}

std::vector<BagRecord> read_split_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  std::vector<BagRecord> bags;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + " line " + std::to_string(row) + ": " + e.what());
    }
    BagRecord bag;
    bag.instances = j.at("features").get<std::vector<std::vector<double>>>();
    bag.hidden_instance_labels = j.at("hidden_labels").get<std::vector<int>>();
    bag.count_vector = j.at("count_vector").get<std::vector<int>>();
    int majority = j.at("majority_label_index").get<int>();
    bag.majority_label.assign(bag.count_vector.size(), 0.0);
    if (majority < 0 || majority >= static_cast<int>(bag.count_vector.size())) {
      throw std::runtime_error(path + " line " + std::to_string(row) + ": bad majority index");
    }
    bag.majority_label[static_cast<size_t>(majority)] = 1.0;
    try {
      bag.check_invariants();
    } catch (const std::exception& e) {
      throw std::runtime_error(path + " line " + std::to_string(row) + ": " + e.what());
    }
    bags.push_back(std::move(bag));
  }
  return bags;
}

}  // namespace

void export_dataset(const DatasetSplits& splits, const DatasetManifest& manifest,
                    const std::string& dir) {
  fs::create_directories(dir);
  int next_id = 0;
  write_split_jsonl(splits.train, dir + "/train.jsonl", &next_id);
  write_split_jsonl(splits.val, dir + "/val.jsonl", &next_id);
  write_split_jsonl(splits.test, dir + "/test.jsonl", &next_id);
  ordered_json j{{"format_version", manifest.format_version},
                 {"config_hash", hash_to_hex(manifest.config_hash)},
                 {"seed", manifest.seed},
                 {"scenario", scenario_to_json(manifest.scenario)},
                 {"feature_dim", manifest.feature_dim},
                 {"n_train", static_cast<int>(splits.train.size())},
                 {"n_val", static_cast<int>(splits.val.size())},
                 {"n_test", static_cast<int>(splits.test.size())},
                 {"source", manifest.source}};
  std::ofstream out(dir + "/manifest.json");
  if (!out) throw std::runtime_error("cannot write manifest: " + dir + "/manifest.json");
  out << j.dump(2) << '\n';
}

LoadedDataset import_dataset(const std::string& dir) {
  std::ifstream in(dir + "/manifest.json");
  if (!in) throw std::runtime_error("cannot open manifest: " + dir + "/manifest.json");
  ordered_json j = ordered_json::parse(in);
  LoadedDataset ds;
  ds.manifest.format_version = j.at("format_version").get<int>();
  if (ds.manifest.format_version != 1) {
    throw std::runtime_error("unsupported dataset format version " +
                             std::to_string(ds.manifest.format_version));
  }
  ds.manifest.config_hash = hex_to_hash(j.at("config_hash").get<std::string>());
  ds.manifest.seed = j.at("seed").get<uint64_t>();
  ds.manifest.scenario = scenario_from_json(j.at("scenario"));
  ds.manifest.feature_dim = j.at("feature_dim").get<int>();
  ds.manifest.n_train = j.at("n_train").get<int>();
  ds.manifest.n_val = j.at("n_val").get<int>();
  ds.manifest.n_test = j.at("n_test").get<int>();
  ds.manifest.source = j.at("source").get<std::string>();
  ds.splits.train = read_split_jsonl(dir + "/train.jsonl");
  ds.splits.val = read_split_jsonl(dir + "/val.jsonl");
  ds.splits.test = read_split_jsonl(dir + "/test.jsonl");
  if (static_cast<int>(ds.splits.train.size()) != ds.manifest.n_train ||
      static_cast<int>(ds.splits.val.size()) != ds.manifest.n_val ||
      static_cast<int>(ds.splits.test.size()) != ds.manifest.n_test) {
    throw std::runtime_error("dataset split sizes do not match manifest: " + dir);
  }
  return ds;
}

}  // namespace lml
