#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace face::data {

enum class Split : uint8_t { kTrain = 0, kVal = 1, kTest = 2 };

const char* split_name(Split s);
Split split_from_name(const std::string& name);

struct Edge {
  int user;
  int item;
  Split split{Split::kTrain};
};

struct InteractionDataset {
  int num_users{0};
  int num_items{0};
  std::vector<Edge> edges;

  // Edge item lists grouped per user for one split.
  std::vector<std::vector<int>> items_by_user(Split s) const;
  std::vector<std::vector<int>> items_by_user_all() const;
  size_t count(Split s) const;
};

// Contiguous-index <-> raw-id maps built by the loader.
struct IndexMaps {
  std::vector<std::string> user_ids;  // new id -> raw id
  std::vector<std::string> item_ids;
  std::unordered_map<std::string, int> user_index;
  std::unordered_map<std::string, int> item_index;
};

struct LoadResult {
  InteractionDataset dataset;  // all edges labelled train until split
  IndexMaps maps;
  int duplicates_dropped{0};
};

// interactions.tsv: `user<TAB>item` per line. Raw ids may be arbitrary
// strings; contiguous ids are assigned in order of first appearance.
LoadResult load_interactions(const std::string& path);

// Per-user random 3:1:1 partition. Users with fewer than 3 interactions keep
// everything in train. Deterministic in (dataset, seed).
InteractionDataset split_3_1_1(const InteractionDataset& ds, uint64_t seed);

void save_dataset(const std::string& dir, const InteractionDataset& ds, const IndexMaps& maps);
std::pair<InteractionDataset, IndexMaps> load_prepared(const std::string& dir);

class AnchorStore {
 public:
  AnchorStore() = default;
  AnchorStore(std::string kind, Eigen::MatrixXd rows);
  const std::string& kind() const { return kind_; }
  const Eigen::MatrixXd& matrix() const { return rows_; }
  int count() const { return static_cast<int>(rows_.rows()); }
  int dim() const { return static_cast<int>(rows_.cols()); }
  uint64_t content_hash() const;

 private:
  std::string kind_;
  Eigen::MatrixXd rows_;  // never mutated after construction
};

// anchors.bin: header (uint32 count, uint32 dim) + row-major float32, little
// endian. Rows are L2-normalized at load unless `normalize` is false.
AnchorStore load_anchors(const std::string& path, int expected_count, bool normalize,
                         const std::string& kind = "item");

struct EntitySummary {
  std::string kind;  // "user" | "item"
  std::string raw_id;
  std::string text;
};

// summaries.jsonl: {"kind":"user"|"item","id":...,"summary":...} per line.
std::vector<EntitySummary> load_summaries(const std::string& path);

std::vector<std::string> load_wordlist(const std::string& path);

}  // namespace face::data
