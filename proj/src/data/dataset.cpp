// Copyright 2026 The qcsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcs/data/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qcs/common.hpp"

namespace qcs {

std::string_view to_string(TaskKind kind) {
  return kind == TaskKind::kClassification ? "classification" : "regression";
}

std::optional<TaskKind> task_kind_from_string(std::string_view name) {
  if (name == "classification") return TaskKind::kClassification;
  if (name == "regression") return TaskKind::kRegression;
  return std::nullopt;
}

std::string_view to_string(Split split) { return split == Split::kTrain ? "train" : "test"; }

std::vector<std::size_t> Dataset::rows(Split split) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (splits[i] == split) out.push_back(i);
  }
  return out;
}

Dataset Dataset::select(std::span<const std::size_t> row_ids) const {
  Dataset out;
  out.task = task;
  out.n_features = n_features;
  for (const auto r : row_ids) {
    out.features.push_back(features.at(r));
    out.targets.push_back(targets.at(r));
    out.splits.push_back(splits.at(r));
  }
  return out;
}

Dataset Dataset::select(Split split) const {
  const auto ids = rows(split);
  return select(ids);
}

std::vector<std::string> validate_dataset(const Dataset& ds) {
  std::vector<std::string> out;
  if (ds.targets.empty()) out.push_back("no data rows");
  if (ds.features.size() != ds.targets.size() || ds.splits.size() != ds.targets.size()) {
    out.push_back("column lengths differ");
    return out;
  }
  for (std::size_t r = 0; r < ds.size(); ++r) {
    const std::string row = "row " + std::to_string(r + 1);
    if (ds.features[r].size() != static_cast<std::size_t>(ds.n_features)) {
      out.push_back(row + ": expected " + std::to_string(ds.n_features) + " features");
      continue;
    }
    for (std::size_t f = 0; f < ds.features[r].size(); ++f) {
      const double v = ds.features[r][f];
      if (!(v >= -1.0 && v <= 1.0)) {
        out.push_back(row + ", f" + std::to_string(f) + ": feature outside [-1,1]");
      }
    }
    const double y = ds.targets[r];
    if (ds.task == TaskKind::kClassification) {
      if (y != -1.0 && y != 1.0) out.push_back(row + ": label not in {-1,+1}");
    } else if (!(y >= -1.0 && y <= 1.0)) {
      out.push_back(row + ": target outside [-1,1]");
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    auto cell = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\r')) cell.remove_suffix(1);
    while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
    out.push_back(cell);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_cell(std::string_view cell, std::size_t line, const std::string& column) {
  double v = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto res = std::from_chars(cell.data(), end, v);
  if (cell.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw ParseError("not a number: '" + std::string(cell) + "'", line, column);
  }
  return v;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

Dataset parse_dataset_csv(std::string_view text, TaskKind task) {
  Dataset ds;
  ds.task = task;
  std::size_t pos = 0, line_no = 0;
  bool have_header = false;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line == "\r" || line.front() == '#') continue;
    const auto cells = split_commas(line);
    if (!have_header) {
      if (cells.size() < 2 || cells[0] != "split" || cells[1] != "label") {
        throw ParseError("header must start with 'split,label'", line_no, "header");
      }
      for (std::size_t c = 2; c < cells.size(); ++c) {
        if (cells[c] != "f" + std::to_string(c - 2)) {
          throw ParseError("expected column f" + std::to_string(c - 2), line_no, std::string(cells[c]));
        }
      }
      ds.n_features = static_cast<int>(cells.size() - 2);
      have_header = true;
      continue;
    }
    if (cells.size() != static_cast<std::size_t>(ds.n_features) + 2) {
      throw ParseError("expected " + std::to_string(ds.n_features + 2) + " columns, got " +
                           std::to_string(cells.size()),
                       line_no);
    }
    if (cells[0] == "train") {
      ds.splits.push_back(Split::kTrain);
    } else if (cells[0] == "test") {
      ds.splits.push_back(Split::kTest);
    } else {
      throw ParseError("unknown split tag '" + std::string(cells[0]) + "'", line_no, "split");
    }
    ds.targets.push_back(parse_cell(cells[1], line_no, "label"));
    std::vector<double> row(static_cast<std::size_t>(ds.n_features));
    for (std::size_t f = 0; f < row.size(); ++f) {
      row[f] = parse_cell(cells[f + 2], line_no, "f" + std::to_string(f));
    }
    ds.features.push_back(std::move(row));
  }
  if (!have_header || ds.targets.empty()) throw ParseError("no data rows");
  return ds;
}

Dataset read_dataset_file(const std::filesystem::path& path, TaskKind task) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open dataset file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_dataset_csv(ss.str(), task);
}

Dataset load_dataset(const std::filesystem::path& path, TaskKind task) {
  auto ds = read_dataset_file(path, task);
  const auto problems = validate_dataset(ds);
  if (!problems.empty()) {
    throw Error(path.string() + ": " + problems.front() +
                (problems.size() > 1 ? " (+" + std::to_string(problems.size() - 1) + " more)" : ""));
  }
  return ds;
}

std::string dataset_to_csv(const Dataset& ds) {
  std::ostringstream os;
  os << "split,label";
  for (int f = 0; f < ds.n_features; ++f) os << ",f" << f;
  os << "\n";
  for (std::size_t r = 0; r < ds.size(); ++r) {
    os << to_string(ds.splits[r]) << "," << format_double(ds.targets[r]);
    for (const double v : ds.features[r]) os << "," << format_double(v);
    os << "\n";
  }
  return os.str();
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write dataset file: " + path.string());
  out << dataset_to_csv(ds);
}

Dataset preprocess_classification(const Dataset& raw, int max_features) {
  Dataset out;
  out.task = TaskKind::kClassification;
  out.n_features = std::min(raw.n_features, max_features);
  out.splits = raw.splits;
  for (std::size_t r = 0; r < raw.size(); ++r) {
    const double y = raw.targets[r];
    if (y != 0.0 && y != 1.0) {
      throw Error("row " + std::to_string(r + 1) + ": label must be 0 or 1 before remapping");
    }
    out.targets.push_back(y == 0.0 ? -1.0 : 1.0);
    std::vector<double> row(static_cast<std::size_t>(out.n_features));
    for (std::size_t f = 0; f < raw.features[r].size(); ++f) {
      const double b = raw.features[r][f];
      if (b != 0.0 && b != 1.0) {
        throw Error("row " + std::to_string(r + 1) + ", f" + std::to_string(f) + ": non-binary bit");
      }
      if (f < row.size()) row[f] = b == 0.0 ? -1.0 : 1.0;
    }
    out.features.push_back(std::move(row));
  }
  return out;
}

Dataset preprocess_regression(const Dataset& raw, int max_features) {
  Dataset out;
  out.task = TaskKind::kRegression;
  out.n_features = std::min(raw.n_features, max_features);
  out.splits = raw.splits;
  out.targets = raw.targets;
  bool binary = true;
  for (const auto& row : raw.features) {
    for (const double v : row) binary = binary && (v == 0.0 || v == 1.0);
  }
  for (const auto& row : raw.features) {
    std::vector<double> kept(row.begin(), row.begin() + out.n_features);
    if (binary) {
      for (auto& v : kept) v = v == 0.0 ? -1.0 : 1.0;
    }
    out.features.push_back(std::move(kept));
  }
  return out;
}

NormalizedTargets normalize_targets(std::span<const double> train, std::span<const double> test) {
  if (train.empty()) throw Error("normalize_targets: empty training targets");
  const auto [lo, hi] = std::minmax_element(train.begin(), train.end());
  if (*lo == *hi) throw Error("normalize_targets: training targets are constant");
  NormalizedTargets out;
  out.scaler = {*lo, *hi};
  for (const double y : train) out.train.push_back(std::clamp(out.scaler.forward(y), -1.0, 1.0));
  for (const double y : test) {
    const double z = out.scaler.forward(y);
    if (z < -1.0 || z > 1.0) ++out.clamped;
    out.test.push_back(std::clamp(z, -1.0, 1.0));
  }
  return out;
}

NormalizedTargets normalize_dataset_targets(Dataset& ds) {
  std::vector<double> train, test;
  for (std::size_t r = 0; r < ds.size(); ++r) {
    (ds.splits[r] == Split::kTrain ? train : test).push_back(ds.targets[r]);
  }
  auto n = normalize_targets(train, test);
  std::size_t i = 0, j = 0;
  for (std::size_t r = 0; r < ds.size(); ++r) {
    ds.targets[r] = ds.splits[r] == Split::kTrain ? n.train[i++] : n.test[j++];
  }
  return n;
}

}  // namespace qcs
