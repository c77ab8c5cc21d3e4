// Copyright 2026 The vperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vperm/select_matrix.h"

namespace vperm {

SelectMatrix::SelectMatrix(size_t n) : rows_(n, OneHotVec(n)) {}

SelectMatrix SelectMatrix::FromRows(std::vector<OneHotVec> rows) {
  SelectMatrix m;
  m.rows_ = std::move(rows);
  return m;
}

SelectMatrix SelectMatrix::FromColumns(const std::vector<OneHotVec> &columns) {
  const size_t n = columns.size();
  SelectMatrix m(n);
  for (size_t col = 0; col < n; ++col) {
    for (size_t row = 0; row < n; ++row) {
      if (columns[col].Get(row)) m.Set(row, col, true);
    }
  }
  return m;
}

SelectMatrix SelectMatrix::Identity(size_t n) {
  SelectMatrix m(n);
  for (size_t i = 0; i < n; ++i) m.Set(i, i, true);
  return m;
}

std::optional<size_t> SelectMatrix::SelectedInput(size_t j) const {
  const size_t first = rows_[j].FirstSet();
  if (first >= rows_[j].size()) return std::nullopt;
  return first;
}

bool SelectMatrix::RowsAtMostOneHot() const {
  for (const auto &row : rows_) {
    if (row.Popcount() > 1) return false;
  }
  return true;
}

bool SelectMatrix::IsPermutation() const {
  const size_t n = size();
  std::vector<size_t> column_hits(n, 0);
  for (const auto &row : rows_) {
    if (row.Popcount() != 1) return false;
    ++column_hits[row.FirstSet()];
  }
  for (size_t hits : column_hits) {
    if (hits != 1) return false;
  }
  return true;
}

SelectMatrix SelectMatrix::ExpandToGranules(size_t ratio) const {
  if (ratio == 1) return *this;
  const size_t n = size();
  SelectMatrix g(n * ratio);
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) {
      if (!Get(j, i)) continue;
      for (size_t k = 0; k < ratio; ++k) g.Set(j * ratio + k, i * ratio + k, true);
    }
  }
  return g;
}

std::string SelectMatrix::ToString() const {
  std::string s;
  for (const auto &row : rows_) {
    s += row.ToString();
    s += '\n';
  }
  return s;
}

}  // namespace vperm
