// SPDX-License-Identifier: Apache-2.0
#include "coheng/table.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace coheng {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void ResultTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("row length does not match column count");
  rows_.push_back(std::move(row));
}

int ResultTable::column_index(const std::string& name) const {
  for (size_t c = 0; c < columns_.size(); ++c)
    if (columns_[c] == name) return static_cast<int>(c);
  return -1;
}

std::string ResultTable::to_csv() const {
  std::string out;
  for (size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += ',';
    out += columns_[c];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string ResultTable::to_json() const {
  std::string out = "{\n  \"columns\": [";
  for (size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += ", ";
    out += '"' + columns_[c] + '"';
  }
  out += "],\n  \"rows\": [";
  for (size_t r = 0; r < rows_.size(); ++r) {
    out += (r ? ",\n    [" : "\n    [");
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ", ";
      out += format_double(rows_[r][c]);
    }
    out += ']';
  }
  out += rows_.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + ": " + ec.message());
  }
}

}  // namespace coheng
