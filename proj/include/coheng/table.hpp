// SPDX-License-Identifier: Apache-2.0
#ifndef COHENG_TABLE_HPP
#define COHENG_TABLE_HPP

#include <string>
#include <vector>

namespace coheng {

/// Shortest-roundtrip decimal rendering of a double (at most 17 significant
/// digits), the fixed formatting of every emitted dataset.
std::string format_double(double v);

/// Numeric result table with named columns. Serialization is byte-stable for
/// identical contents.
class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<double> row);
  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return static_cast<int>(columns_.size()); }
  const std::string& column_name(int c) const { return columns_[static_cast<size_t>(c)]; }
  double at(int r, int c) const { return rows_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
  int column_index(const std::string& name) const;  // -1 when absent

  std::string to_csv() const;
  std::string to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

/// Write `content` to `path` atomically (temp file in the same directory,
/// then rename).
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace coheng

#endif
