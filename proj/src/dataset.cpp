// Copyright 2026 The privfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privfair/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "privfair/error.hpp"

namespace privfair {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& text, std::size_t line_no) {
  try {
    std::size_t consumed = 0;
    double v = std::stod(text, &consumed);
    require(consumed == text.size() && std::isfinite(v), ErrorCode::kParse,
            "line " + std::to_string(line_no) + ": bad numeric field \"" +
                text + "\"");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                ": bad numeric field \"" + text + "\"");
  }
}

int parse_binary(const std::string& text, const char* what,
                 std::size_t line_no) {
  if (text == "0") return 0;
  if (text == "1") return 1;
  fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what +
                              " must be 0 or 1, got \"" + text + "\"");
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

LabeledDataset LabeledDataset::from_records(std::vector<Record> records) {
  require(!records.empty(), ErrorCode::kInvalidArgument, "dataset is empty");
  std::size_t dimension = records.front().features.size();
  for (const Record& r : records) {
    require(r.features.size() == dimension, ErrorCode::kInvalidArgument,
            "records disagree on feature dimension");
    for (double f : r.features) {
      require(std::isfinite(f), ErrorCode::kInvalidArgument,
              "features must be finite");
    }
    require(r.label == 0 || r.label == 1, ErrorCode::kInvalidArgument,
            "label must be 0 or 1");
    require(r.group == 0 || r.group == 1, ErrorCode::kInvalidArgument,
            "group must be 0 or 1");
  }
  return LabeledDataset(std::move(records), dimension);
}

LabeledDataset LabeledDataset::from_csv(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIo, "cannot open \"" + path + "\"");

  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorCode::kParse,
          "\"" + path + "\" is empty");
  std::vector<std::string> header = split_csv_line(strip_cr(line));
  require(header.size() >= 3, ErrorCode::kParse,
          "header must be f1,...,fd,label,group");
  std::size_t d = header.size() - 2;
  for (std::size_t i = 0; i < d; ++i) {
    require(header[i] == "f" + std::to_string(i + 1), ErrorCode::kParse,
            "feature column " + std::to_string(i + 1) + " must be named f" +
                std::to_string(i + 1));
  }
  require(header[d] == "label" && header[d + 1] == "group", ErrorCode::kParse,
          "last two columns must be label,group");

  std::vector<Record> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    std::vector<std::string> fields = split_csv_line(line);
    require(fields.size() == header.size(), ErrorCode::kParse,
            "line " + std::to_string(line_no) + ": expected " +
                std::to_string(header.size()) + " fields, got " +
                std::to_string(fields.size()));
    Record r;
    r.features.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
      r.features.push_back(parse_double(fields[i], line_no));
    }
    r.label = parse_binary(fields[d], "label", line_no);
    r.group = parse_binary(fields[d + 1], "group", line_no);
    records.push_back(std::move(r));
  }
  require(!records.empty(), ErrorCode::kParse,
          "\"" + path + "\" has a header but no records");
  return from_records(std::move(records));
}

std::size_t LabeledDataset::group_count(int group) const {
  std::size_t count = 0;
  for (const Record& r : records_) {
    if (r.group == group) ++count;
  }
  return count;
}

std::vector<double> read_csv_column(const std::string& path, int column,
                                    bool skip_header) {
  require(column >= 0, ErrorCode::kInvalidArgument,
          "column index must be nonnegative");
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIo, "cannot open \"" + path + "\"");

  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (skip_header && line_no == 1) continue;
    std::vector<std::string> fields = split_csv_line(line);
    require(static_cast<std::size_t>(column) < fields.size(), ErrorCode::kParse,
            "line " + std::to_string(line_no) + ": no column " +
                std::to_string(column));
    values.push_back(parse_double(fields[column], line_no));
  }
  require(!values.empty(), ErrorCode::kParse,
          "\"" + path + "\" contains no data rows");
  return values;
}

}  // namespace privfair
