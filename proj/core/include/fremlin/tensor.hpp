#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fremlin/lattice.hpp"

namespace fremlin {

/// Element of the Fremlin tensor product of Q^n and Q^m, modeled as an n x m
/// matrix with the entrywise order; x (x) y is the outer product.
class TensorElement {
 public:
  TensorElement(std::size_t rows, std::size_t cols);
  /// Throws InvalidArgument on ragged or empty input.
  explicit TensorElement(const std::vector<std::vector<Rational>>& entries);

  static TensorElement from_vector(std::size_t rows, std::size_t cols, const LatticeElement& flat);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::pair<std::size_t, std::size_t> shape() const noexcept { return {rows_, cols_}; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  /// Row-major flattening into Q^(n*m).
  LatticeElement flatten() const;
  bool is_zero() const;
  bool is_nonnegative() const;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

void require_same_shape(const TensorElement& a, const TensorElement& b);

TensorElement operator+(const TensorElement& a, const TensorElement& b);
TensorElement operator-(const TensorElement& a, const TensorElement& b);
TensorElement operator*(const Rational& lambda, const TensorElement& a);
TensorElement abs(const TensorElement& a);
TensorElement join(const TensorElement& a, const TensorElement& b);
TensorElement meet(const TensorElement& a, const TensorElement& b);
bool leq(const TensorElement& a, const TensorElement& b);
/// sum_ij a_ij b_ij
Rational frobenius(const TensorElement& a, const TensorElement& b);
std::string to_string(const TensorElement& a);

/// Outer product: entries x_i * y_j.
TensorElement rank_one(const LatticeElement& x, const LatticeElement& y);

struct RankOnePair {
  LatticeElement a;
  LatticeElement b;
};

/// For u >= 0 returns a, b >= 0 with u <= a (x) b: a_i = max_j u_ij, b = 1.
/// Throws PreconditionViolation on a negative entry.
RankOnePair dominating_rank_one(const TensorElement& u);

/// For c >= 0 returns the family {(c_ij e_i, e_j) : c_ij > 0}; every member is
/// below c and the entrywise supremum of the family is c (empty family: 0).
std::vector<RankOnePair> rank_one_sup_recover(const TensorElement& c);

/// Entrywise supremum of the rank-one elements of a family, zero when empty.
TensorElement supremum(std::size_t rows, std::size_t cols, const std::vector<RankOnePair>& family);

}  // namespace fremlin
