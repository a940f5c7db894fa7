#include "face/io.hpp"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "face/error.hpp"
#include "face/hash.hpp"

namespace face::io {

namespace {

// All on-disk formats are little-endian; these helpers keep that explicit
// rather than relying on host byte order.
void put_u32(std::string& out, uint32_t v) {
  char b[4];
  b[0] = static_cast<char>(v & 0xFF);
  b[1] = static_cast<char>((v >> 8) & 0xFF);
  b[2] = static_cast<char>((v >> 16) & 0xFF);
  b[3] = static_cast<char>((v >> 24) & 0xFF);
  out.append(b, 4);
}

uint32_t get_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

}  // namespace

bool file_exists(const std::string& path) {
  std::error_code ec;
  return std::filesystem::exists(path, ec);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

void write_matrix_f32(const std::string& path, const Eigen::MatrixXd& m) {
  std::string buf;
  buf.reserve(8 + 4 * static_cast<size_t>(m.size()));
  put_u32(buf, static_cast<uint32_t>(m.rows()));
  put_u32(buf, static_cast<uint32_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      float f = static_cast<float>(m(r, c));
      uint32_t bits;
      std::memcpy(&bits, &f, 4);
      put_u32(buf, bits);
    }
  }
  write_text_file(path, buf);
}

Eigen::MatrixXd read_matrix_f32(const std::string& path) {
  std::string buf = read_text_file(path);
  if (buf.size() < 8) throw ShapeError("matrix file too short for header: " + path);
  const auto* p = reinterpret_cast<const unsigned char*>(buf.data());
  uint32_t rows = get_u32(p);
  uint32_t cols = get_u32(p + 4);
  size_t expected = 8 + 4ull * rows * cols;
  if (buf.size() != expected) {
    throw ShapeError("matrix file " + path + " truncated or oversized: header says " +
                     std::to_string(rows) + "x" + std::to_string(cols) + " (" +
                     std::to_string(expected) + " bytes), file has " +
                     std::to_string(buf.size()));
  }
  Eigen::MatrixXd m(rows, cols);
  const unsigned char* q = p + 8;
  for (uint32_t r = 0; r < rows; ++r) {
    for (uint32_t c = 0; c < cols; ++c) {
      uint32_t bits = get_u32(q);
      q += 4;
      float f;
      std::memcpy(&f, &bits, 4);
      m(r, c) = static_cast<double>(f);
    }
  }
  return m;
}

void append_matrix_f64(std::string& buffer, const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      double d = m(r, c);
      uint64_t bits;
      std::memcpy(&bits, &d, 8);
      char b[8];
      for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
      buffer.append(b, 8);
    }
  }
}

Eigen::MatrixXd read_matrix_f64(const std::string& buffer, size_t offset, int rows, int cols) {
  size_t need = offset + 8ull * rows * cols;
  if (buffer.size() < need) throw ShapeError("tensor blob truncated");
  Eigen::MatrixXd m(rows, cols);
  const auto* p = reinterpret_cast<const unsigned char*>(buffer.data()) + offset;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      uint64_t bits = 0;
      for (int i = 0; i < 8; ++i) bits |= static_cast<uint64_t>(p[i]) << (8 * i);
      p += 8;
      double d;
      std::memcpy(&d, &bits, 8);
      m(r, c) = d;
    }
  }
  return m;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::string text = read_text_file(path);
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

uint64_t file_hash(const std::string& path) {
  std::string buf = read_text_file(path);
  return fnv1a64(buf);
}

}  // namespace face::io
