#include "face/data.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "face/error.hpp"
#include "face/hash.hpp"
#include "face/io.hpp"
#include "face/log.hpp"
#include "face/rng.hpp"

namespace face::data {

using json = nlohmann::json;

const char* split_name(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
  }
  return "?";
}

Split split_from_name(const std::string& name) {
  if (name == "train") return Split::kTrain;
  if (name == "val") return Split::kVal;
  if (name == "test") return Split::kTest;
  throw ParseError("unknown split label: " + name);
}

std::vector<std::vector<int>> InteractionDataset::items_by_user(Split s) const {
  std::vector<std::vector<int>> out(static_cast<size_t>(num_users));
  for (const Edge& e : edges) {
    if (e.split == s) out[static_cast<size_t>(e.user)].push_back(e.item);
  }
  return out;
}

std::vector<std::vector<int>> InteractionDataset::items_by_user_all() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(num_users));
  for (const Edge& e : edges) out[static_cast<size_t>(e.user)].push_back(e.item);
  return out;
}

size_t InteractionDataset::count(Split s) const {
  size_t n = 0;
  for (const Edge& e : edges) {
    if (e.split == s) ++n;
  }
  return n;
}

LoadResult load_interactions(const std::string& path) {
  if (!io::file_exists(path)) throw MissingInputError("interactions file not found: " + path);
  std::vector<std::string> lines = io::read_lines(path);

  LoadResult out;
  std::set<std::pair<int, int>> seen;
  int line_no = 0;
  for (const std::string& line : lines) {
    ++line_no;
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected `user<TAB>item`, got: " + line);
    }
    std::string raw_u = line.substr(0, tab);
    std::string raw_i = line.substr(tab + 1);
    if (raw_i.find('\t') != std::string::npos) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": extra field on line");
    }

    auto [uit, u_new] = out.maps.user_index.try_emplace(
        raw_u, static_cast<int>(out.maps.user_ids.size()));
    if (u_new) out.maps.user_ids.push_back(raw_u);
    auto [iit, i_new] = out.maps.item_index.try_emplace(
        raw_i, static_cast<int>(out.maps.item_ids.size()));
    if (i_new) out.maps.item_ids.push_back(raw_i);

    int u = uit->second;
    int i = iit->second;
    if (!seen.insert({u, i}).second) {
      ++out.duplicates_dropped;
      continue;
    }
    out.dataset.edges.push_back(Edge{u, i, Split::kTrain});
  }
  if (out.dataset.edges.empty()) throw DataError("no interactions in " + path);
  if (out.duplicates_dropped > 0) {
    log_warn(std::to_string(out.duplicates_dropped) + " duplicate interaction(s) dropped from " +
             path);
  }
  out.dataset.num_users = static_cast<int>(out.maps.user_ids.size());
  out.dataset.num_items = static_cast<int>(out.maps.item_ids.size());
  return out;
}

InteractionDataset split_3_1_1(const InteractionDataset& ds, uint64_t seed) {
  InteractionDataset out = ds;
  // Group edge indices per user, keeping dataset order inside each group.
  std::vector<std::vector<size_t>> per_user(static_cast<size_t>(ds.num_users));
  for (size_t k = 0; k < ds.edges.size(); ++k) {
    per_user[static_cast<size_t>(ds.edges[k].user)].push_back(k);
  }
  Rng rng(derive_seed(seed, 0x5117));
  for (int u = 0; u < ds.num_users; ++u) {
    auto& idx = per_user[static_cast<size_t>(u)];
    size_t n = idx.size();
    if (n < 3) {
      for (size_t k : idx) out.edges[k].split = Split::kTrain;
      continue;
    }
    rng.shuffle(idx);
    size_t n_val = n / 5;
    size_t n_test = n / 5;
    size_t n_train = n - n_val - n_test;
    for (size_t p = 0; p < n; ++p) {
      Split s = p < n_train ? Split::kTrain : (p < n_train + n_val ? Split::kVal : Split::kTest);
      out.edges[idx[p]].split = s;
    }
  }
  return out;
}

void save_dataset(const std::string& dir, const InteractionDataset& ds, const IndexMaps& maps) {
  std::filesystem::create_directories(dir);
  std::ostringstream tsv;
  for (const Edge& e : ds.edges) {
    tsv << e.user << '\t' << e.item << '\t' << split_name(e.split) << '\n';
  }
  io::write_text_file(dir + "/interactions_split.tsv", tsv.str());

  json j;
  j["num_users"] = ds.num_users;
  j["num_items"] = ds.num_items;
  j["users"] = maps.user_ids;
  j["items"] = maps.item_ids;
  io::write_text_file(dir + "/index_map.json", j.dump(2) + "\n");
}

std::pair<InteractionDataset, IndexMaps> load_prepared(const std::string& dir) {
  std::string tsv_path = dir + "/interactions_split.tsv";
  std::string map_path = dir + "/index_map.json";
  if (!io::file_exists(tsv_path) || !io::file_exists(map_path)) {
    throw MissingInputError("prepared dataset not found under " + dir +
                            " (run `face prepare` first)");
  }
  json j = json::parse(io::read_text_file(map_path));
  IndexMaps maps;
  maps.user_ids = j.at("users").get<std::vector<std::string>>();
  maps.item_ids = j.at("items").get<std::vector<std::string>>();
  for (size_t k = 0; k < maps.user_ids.size(); ++k) maps.user_index[maps.user_ids[k]] = static_cast<int>(k);
  for (size_t k = 0; k < maps.item_ids.size(); ++k) maps.item_index[maps.item_ids[k]] = static_cast<int>(k);

  InteractionDataset ds;
  ds.num_users = j.at("num_users").get<int>();
  ds.num_items = j.at("num_items").get<int>();
  int line_no = 0;
  for (const std::string& line : io::read_lines(tsv_path)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    int u, i;
    std::string label;
    if (!(ss >> u >> i >> label)) {
      throw ParseError(tsv_path + ":" + std::to_string(line_no) + ": bad line");
    }
    if (u < 0 || u >= ds.num_users || i < 0 || i >= ds.num_items) {
      throw IndexError(tsv_path + ":" + std::to_string(line_no) + ": id out of range");
    }
    ds.edges.push_back(Edge{u, i, split_from_name(label)});
  }
  return {std::move(ds), std::move(maps)};
}

AnchorStore::AnchorStore(std::string kind, Eigen::MatrixXd rows)
    : kind_(std::move(kind)), rows_(std::move(rows)) {}

uint64_t AnchorStore::content_hash() const { return hash_matrix(rows_); }

AnchorStore load_anchors(const std::string& path, int expected_count, bool normalize,
                         const std::string& kind) {
  if (!io::file_exists(path)) throw MissingInputError("anchor file not found: " + path);
  Eigen::MatrixXd m = io::read_matrix_f32(path);
  if (m.rows() != expected_count) {
    throw ShapeError("anchor count mismatch in " + path + ": expected " +
                     std::to_string(expected_count) + ", file has " + std::to_string(m.rows()));
  }
  if (!m.allFinite()) throw DataError("non-finite value in anchor file " + path);
  if (normalize) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      double nrm = m.row(r).norm();
      if (nrm > 0.0) m.row(r) /= nrm;
    }
  }
  return AnchorStore(kind, std::move(m));
}

std::vector<EntitySummary> load_summaries(const std::string& path) {
  if (!io::file_exists(path)) throw MissingInputError("summaries file not found: " + path);
  std::vector<EntitySummary> out;
  std::set<std::pair<std::string, std::string>> seen;
  int line_no = 0;
  for (const std::string& line : io::read_lines(path)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    EntitySummary s;
    s.kind = j.at("kind").get<std::string>();
    if (s.kind != "user" && s.kind != "item") {
      throw ParseError(path + ":" + std::to_string(line_no) + ": kind must be user|item");
    }
    const auto& id = j.at("id");
    s.raw_id = id.is_string() ? id.get<std::string>() : id.dump();
    s.text = j.at("summary").get<std::string>();
    if (s.text.empty()) {
      throw DataError(path + ":" + std::to_string(line_no) + ": empty summary");
    }
    if (!seen.insert({s.kind, s.raw_id}).second) {
      throw DataError(path + ":" + std::to_string(line_no) + ": duplicate summary for " + s.kind +
                      " " + s.raw_id);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> load_wordlist(const std::string& path) {
  if (!io::file_exists(path)) throw MissingInputError("wordlist not found: " + path);
  std::vector<std::string> words;
  for (const std::string& line : io::read_lines(path)) {
    if (!line.empty()) words.push_back(line);
  }
  if (words.empty()) throw DataError("wordlist is empty: " + path);
  return words;
}

}  // namespace face::data
