#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fremlin/rational.hpp"

namespace fremlin {

/// A point of Q^n with the coordinatewise order. Lattice operations are
/// coordinatewise: (x v y)_i = max(x_i, y_i), |x|_i = |x_i|.
class LatticeElement {
 public:
  /// Throws InvalidArgument when `coords` is empty.
  explicit LatticeElement(std::vector<Rational> coords);
  LatticeElement(std::initializer_list<Rational> coords);

  static LatticeElement zero(std::size_t dim);
  static LatticeElement ones(std::size_t dim);
  /// Scaled basis vector scale * e_index.
  static LatticeElement unit(std::size_t dim, std::size_t index, const Rational& scale = 1);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_nonnegative() const;

  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;

 private:
  std::vector<Rational> coords_;
};

LatticeElement operator+(const LatticeElement& x, const LatticeElement& y);
LatticeElement operator-(const LatticeElement& x, const LatticeElement& y);
LatticeElement operator-(const LatticeElement& x);
LatticeElement operator*(const Rational& lambda, const LatticeElement& x);

LatticeElement join(const LatticeElement& x, const LatticeElement& y);
LatticeElement meet(const LatticeElement& x, const LatticeElement& y);
LatticeElement abs(const LatticeElement& x);
LatticeElement positive_part(const LatticeElement& x);

/// Coordinatewise x <= y.
bool leq(const LatticeElement& x, const LatticeElement& y);
Rational dot(const LatticeElement& x, const LatticeElement& y);

/// Throws DimensionMismatch unless the dimensions agree.
void require_same_dim(const LatticeElement& x, const LatticeElement& y);

std::string to_string(const LatticeElement& x);

namespace op {
struct Join {};
struct Meet {};
struct Abs {};
struct Plus {};
struct Scale {
  Rational lambda;
};
}  // namespace op

using LatticeOp = std::variant<op::Join, op::Meet, op::Abs, op::Plus, op::Scale>;

/// Single dispatch point over the vector-lattice operations. Unary operations
/// (abs, scale) act on `x` and ignore `y`.
LatticeElement lattice_eval(const LatticeElement& x, const LatticeElement& y, const LatticeOp& operation);

struct RieszSplit {
  LatticeElement first;
  LatticeElement second;
};

/// Riesz decomposition: for |z| <= |x| + |y| returns z = z1 + z2 with
/// |z1| <= |x| and |z2| <= |y|, using z1 = (z v -|x|) ^ |x|.
/// Throws PreconditionViolation naming the first coordinate where
/// |z_i| > |x_i| + |y_i|.
RieszSplit riesz_decompose(const LatticeElement& z, const LatticeElement& x, const LatticeElement& y);

/// x' = |x| - |x|^|y|, y' = |y| - |x|^|y|. The pair is disjoint and
/// x' - y' = |x| - |y|.
RieszSplit disjointify(const LatticeElement& x, const LatticeElement& y);

/// Dense rational matrix, row-major; a linear map Q^cols -> Q^rows.
using Matrix = std::vector<std::vector<Rational>>;

/// Throws DimensionMismatch when x does not match the column count.
LatticeElement apply(const Matrix& a, const LatticeElement& x);
/// Lattice homomorphisms between coordinatewise lattices are exactly the
/// nonnegative matrices with at most one nonzero entry per row.
bool is_lattice_homomorphism(const Matrix& a);

}  // namespace fremlin
