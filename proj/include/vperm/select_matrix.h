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

#ifndef VPERM_SELECT_MATRIX_H_
#define VPERM_SELECT_MATRIX_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vperm/bitvec.h"

namespace vperm {

// Square matrix of crossbar select lines. Row j holds the select inputs of
// output j's AND-OR multiplexer; column i is the fan-out of input i.
class SelectMatrix {
 public:
  SelectMatrix() = default;
  explicit SelectMatrix(size_t n);

  // Output-driven form: row j is the decoded source of output j.
  static SelectMatrix FromRows(std::vector<OneHotVec> rows);
  // Input-driven form: column i is the decoded destination of input i. The
  // transposition is pure wiring.
  static SelectMatrix FromColumns(const std::vector<OneHotVec> &columns);
  static SelectMatrix Identity(size_t n);

  size_t size() const { return rows_.size(); }
  const OneHotVec &Row(size_t j) const { return rows_[j]; }
  bool Get(size_t row, size_t col) const { return rows_[row].Get(col); }
  void Set(size_t row, size_t col, bool v) { rows_[row].Set(col, v); }

  // Input selected by row j, or nullopt for an all-zero row. Requires the
  // row to be one-hot or empty.
  std::optional<size_t> SelectedInput(size_t j) const;

  // Every row has at most one set bit.
  bool RowsAtMostOneHot() const;
  // Every row and every column has exactly one set bit.
  bool IsPermutation() const;

  // Replicates each element-level select across `ratio` consecutive
  // granules, giving an (n*ratio)-square matrix where granule k of output
  // element j selects granule k of the chosen input element.
  SelectMatrix ExpandToGranules(size_t ratio) const;

  std::string ToString() const;

  friend bool operator==(const SelectMatrix &, const SelectMatrix &) = default;

 private:
  std::vector<OneHotVec> rows_;
};

}  // namespace vperm

#endif  // VPERM_SELECT_MATRIX_H_
