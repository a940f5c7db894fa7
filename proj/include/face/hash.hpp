#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <string>

namespace face {

// FNV-1a over raw bytes. Used for asset-integrity checks (frozen codebook,
// anchors) and config fingerprints, not for anything adversarial.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xCBF29CE484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline uint64_t fnv1a64(const std::string& s, uint64_t h = 0xCBF29CE484222325ULL) {
  return fnv1a64(s.data(), s.size(), h);
}

inline uint64_t hash_matrix(const Eigen::MatrixXd& m, uint64_t h = 0xCBF29CE484222325ULL) {
  const int64_t rows = m.rows();
  const int64_t cols = m.cols();
  h = fnv1a64(&rows, sizeof(rows), h);
  h = fnv1a64(&cols, sizeof(cols), h);
  return fnv1a64(m.data(), sizeof(double) * static_cast<size_t>(m.size()), h);
}

std::string hex64(uint64_t v);

}  // namespace face
