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

#ifndef PRIVFAIR_DATASET_HPP_
#define PRIVFAIR_DATASET_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace privfair {

// One labeled, group-annotated record. Labels and groups are binary.
struct Record {
  std::vector<double> features;
  int label = 0;
  int group = 0;
};

// An in-memory dataset with a uniform feature dimension. Construction
// validates every record, so a LabeledDataset is well-formed by construction.
class LabeledDataset {
 public:
  static LabeledDataset from_records(std::vector<Record> records);

  // Loads a CSV file whose header is exactly f1,...,fd,label,group and whose
  // label/group columns contain only 0 or 1. Throws Parse (naming the line)
  // on any malformed content, Io if the file cannot be read.
  static LabeledDataset from_csv(const std::string& path);

  std::size_t size() const { return records_.size(); }
  std::size_t dimension() const { return dimension_; }
  const std::vector<Record>& records() const { return records_; }
  std::size_t group_count(int group) const;

 private:
  LabeledDataset(std::vector<Record> records, std::size_t dimension)
      : records_(std::move(records)), dimension_(dimension) {}

  std::vector<Record> records_;
  std::size_t dimension_ = 0;
};

// Reads one numeric column (0-based) out of an arbitrary CSV file; used by
// the CLI to feed release mechanisms. skip_header drops the first line.
std::vector<double> read_csv_column(const std::string& path, int column,
                                    bool skip_header);

}  // namespace privfair

#endif  // PRIVFAIR_DATASET_HPP_
