#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace face::io {

bool file_exists(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Fixed interchange format shared by anchors.bin and vocab_embeddings.bin:
// 8-byte header of two little-endian uint32 (row count, dim), then row-major
// little-endian float32 values.
void write_matrix_f32(const std::string& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix_f32(const std::string& path);

// Raw float64 block used inside checkpoints (bit-exact round trips).
void append_matrix_f64(std::string& buffer, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix_f64(const std::string& buffer, size_t offset, int rows, int cols);

std::vector<std::string> read_lines(const std::string& path);

uint64_t file_hash(const std::string& path);

}  // namespace face::io
