// Word-packed vectors and matrices over GF(2).
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kMaxLength = std::size_t{1} << 16;

constexpr std::size_t words_for(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

/// A length-n vector over GF(2). Coordinate i lives in bit (i % 64) of word
/// (i / 64); storage bits at positions >= size() are always zero.
///
/// Coordinates are 0-based in the API. Text renderings list coordinate 0 first.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n);

  static BitVector ones(std::size_t n);
  /// Parses a string of '0'/'1' characters; coordinate 0 is the first character.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const word_t mask = word_t{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

  std::span<const word_t> words() const { return words_; }
  std::span<word_t> words() { return words_; }

  bool is_zero() const;
  std::size_t weight() const;

  BitVector& operator^=(const BitVector& other);

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<word_t> words_;
};

/// Orders vectors by their '0'/'1' text rendering: the first differing
/// coordinate decides, and a 0 there is smaller. Lengths must match.
bool lex_less(const BitVector& a, const BitVector& b);

/// Hamming weight.
std::size_t weight(const BitVector& v);

/// Number of coordinates where both vectors are 1.
std::size_t mu(const BitVector& a, const BitVector& b);

BitVector add(const BitVector& a, const BitVector& b);

/// Scalar product over GF(2), i.e. mu(a, b) mod 2.
int dot(const BitVector& a, const BitVector& b);

/// An ordered list of equal-length rows. The column count is kept even when
/// there are no rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t ncols) : ncols_(ncols) {}
  BitMatrix(std::size_t ncols, std::vector<BitVector> rows);

  static BitMatrix identity(std::size_t n);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  bool empty() const { return rows_.empty(); }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  std::span<const BitVector> rows() const { return rows_; }

  void push_back(BitVector row);

  /// Rows [first, first + count).
  BitMatrix slice_rows(std::size_t first, std::size_t count) const;
  /// This matrix with the rows of `below` appended.
  BitMatrix stacked(const BitMatrix& below) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t ncols_ = 0;
  std::vector<BitVector> rows_;
};

/// a * b^T: entry (i, j) is dot(a.row(i), b.row(j)).
BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b);

struct RrefResult {
  BitMatrix matrix;  ///< reduced row echelon form, zero rows removed
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< strictly increasing, one per row
};

RrefResult rref(const BitMatrix& m);

/// Basis of {x : m x^T = 0}, returned in RREF.
BitMatrix kernel_basis(const BitMatrix& m);

}  // namespace sdc
