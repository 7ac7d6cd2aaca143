#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tdss {

// Row-major bit matrix; rows are 64-bit word spans so BFS frontiers and
// closure rows can be combined word-wise.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
        data_(rows * words_per_row_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row(r)[c >> 6] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    mutable_row(r)[c >> 6] |= std::uint64_t{1} << (c & 63);
  }

  const std::uint64_t* row(std::size_t r) const {
    return data_.data() + r * words_per_row_;
  }
  std::uint64_t* mutable_row(std::size_t r) {
    return data_.data() + r * words_per_row_;
  }

  std::size_t count_row(std::size_t r) const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w)
      total += static_cast<std::size_t>(std::popcount(row(r)[w]));
    return total;
  }
  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t word : data_)
      total += static_cast<std::size_t>(std::popcount(word));
    return total;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace tdss
