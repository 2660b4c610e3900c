#include "sdc/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sdc {

namespace {

void require_same_length(const BitVector& a, const BitVector& b, const char* op) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(op) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
}

}  // namespace

BitVector::BitVector(std::size_t n) : size_(n), words_(words_for(n), 0) {
  if (n == 0 || n > kMaxLength)
    throw std::invalid_argument("BitVector length must be in [1, 65536], got " + std::to_string(n));
}

BitVector BitVector::ones(std::size_t n) {
  BitVector v(n);
  std::fill(v.words_.begin(), v.words_.end(), ~word_t{0});
  if (const std::size_t tail = n % kWordBits; tail != 0) v.words_.back() = (word_t{1} << tail) - 1;
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("BitVector::from_string: invalid symbol '" + std::string(1, bits[i]) + "'");
  }
  return v;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](word_t w) { return w == 0; });
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (word_t x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other, "add");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool lex_less(const BitVector& a, const BitVector& b) {
  require_same_length(a, b, "lex_less");
  const auto aw = a.words();
  const auto bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i) {
    if (const word_t diff = aw[i] ^ bw[i]; diff != 0) {
      const word_t lowest = diff & (~diff + 1);
      return (aw[i] & lowest) == 0;
    }
  }
  return false;
}

std::size_t weight(const BitVector& v) { return v.weight(); }

std::size_t mu(const BitVector& a, const BitVector& b) {
  require_same_length(a, b, "mu");
  const auto aw = a.words();
  const auto bw = b.words();
  std::size_t m = 0;
  for (std::size_t i = 0; i < aw.size(); ++i) m += static_cast<std::size_t>(std::popcount(aw[i] & bw[i]));
  return m;
}

BitVector add(const BitVector& a, const BitVector& b) {
  BitVector r = a;
  r ^= b;
  return r;
}

int dot(const BitVector& a, const BitVector& b) {
  require_same_length(a, b, "dot");
  const auto aw = a.words();
  const auto bw = b.words();
  word_t acc = 0;
  for (std::size_t i = 0; i < aw.size(); ++i) acc ^= aw[i] & bw[i];
  return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(std::size_t ncols, std::vector<BitVector> rows) : ncols_(ncols) {
  rows_.reserve(rows.size());
  for (auto& r : rows) push_back(std::move(r));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVector r(n);
    r.set(i);
    m.rows_.push_back(std::move(r));
  }
  return m;
}

void BitMatrix::push_back(BitVector row) {
  if (row.size() != ncols_)
    throw std::invalid_argument("BitMatrix row has length " + std::to_string(row.size()) + ", expected " +
                                std::to_string(ncols_));
  rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::slice_rows(std::size_t first, std::size_t count) const {
  if (first + count > rows_.size()) throw std::out_of_range("BitMatrix::slice_rows: range exceeds row count");
  BitMatrix m(ncols_);
  m.rows_.assign(rows_.begin() + static_cast<std::ptrdiff_t>(first),
                 rows_.begin() + static_cast<std::ptrdiff_t>(first + count));
  return m;
}

BitMatrix BitMatrix::stacked(const BitMatrix& below) const {
  if (below.ncols_ != ncols_) throw std::invalid_argument("BitMatrix::stacked: column count mismatch");
  BitMatrix m = *this;
  m.rows_.insert(m.rows_.end(), below.rows_.begin(), below.rows_.end());
  return m;
}

BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b) {
  if (a.ncols() != b.ncols()) throw std::invalid_argument("multiply_transpose: column count mismatch");
  if (b.nrows() == 0) return BitMatrix();
  BitMatrix out(b.nrows());
  for (const auto& ra : a.rows()) {
    BitVector r(b.nrows());
    for (std::size_t j = 0; j < b.nrows(); ++j)
      if (dot(ra, b.row(j))) r.set(j);
    out.push_back(std::move(r));
  }
  return out;
}

RrefResult rref(const BitMatrix& m) {
  std::vector<BitVector> rows(m.rows().begin(), m.rows().end());
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.ncols() && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return RrefResult{BitMatrix(m.ncols(), std::move(rows)), rank, std::move(pivots)};
}

BitMatrix kernel_basis(const BitMatrix& m) {
  const std::size_t n = m.ncols();
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  BitMatrix basis(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitVector x(n);
    x.set(free);
    for (std::size_t i = 0; i < r.rank; ++i)
      if (r.matrix.row(i).get(free)) x.set(r.pivots[i]);
    basis.push_back(std::move(x));
  }
  return rref(basis).matrix;
}

}  // namespace sdc
