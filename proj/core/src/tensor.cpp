#include "fremlin/tensor.hpp"

#include <sstream>

#include "fremlin/errors.hpp"

namespace fremlin {

TensorElement::TensorElement(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("tensor shape must be positive");
}

TensorElement::TensorElement(const std::vector<std::vector<Rational>>& entries)
    : TensorElement(entries.size(), entries.empty() ? 0 : entries.front().size()) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (entries[i].size() != cols_) throw InvalidArgument("ragged tensor rows");
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(i, j) = entries[i][j];
      (*this)(i, j).canonicalize();
    }
  }
}

TensorElement TensorElement::from_vector(std::size_t rows, std::size_t cols, const LatticeElement& flat) {
  if (flat.dim() != rows * cols) throw DimensionMismatch(rows * cols, flat.dim());
  TensorElement t(rows, cols);
  for (std::size_t k = 0; k < flat.dim(); ++k) t.entries_[k] = flat[k];
  return t;
}

LatticeElement TensorElement::flatten() const { return LatticeElement(entries_); }

bool TensorElement::is_zero() const {
  for (const auto& v : entries_)
    if (v != 0) return false;
  return true;
}

bool TensorElement::is_nonnegative() const {
  for (const auto& v : entries_)
    if (v < 0) return false;
  return true;
}

void require_same_shape(const TensorElement& a, const TensorElement& b) {
  if (a.shape() != b.shape()) throw DimensionMismatch(a.rows() * a.cols(), b.rows() * b.cols());
}

namespace {

template <class F>
TensorElement zip(const TensorElement& a, const TensorElement& b, F f) {
  require_same_shape(a, b);
  TensorElement out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f(a(i, j), b(i, j));
  return out;
}

}  // namespace

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

TensorElement operator*(const Rational& lambda, const TensorElement& a) {
  return zip(a, a, [&](const Rational& x, const Rational&) { return Rational(lambda * x); });
}

TensorElement abs(const TensorElement& a) {
  return zip(a, a, [](const Rational& x, const Rational&) { return abs_value(x); });
}

TensorElement join(const TensorElement& a, const TensorElement& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return max_value(x, y); });
}

TensorElement meet(const TensorElement& a, const TensorElement& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return min_value(x, y); });
}

bool leq(const TensorElement& a, const TensorElement& b) {
  require_same_shape(a, b);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) > b(i, j)) return false;
  return true;
}

Rational frobenius(const TensorElement& a, const TensorElement& b) {
  require_same_shape(a, b);
  Rational s;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) s += a(i, j) * b(i, j);
  return s;
}

std::string to_string(const TensorElement& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

TensorElement rank_one(const LatticeElement& x, const LatticeElement& y) {
  TensorElement t(x.dim(), y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.dim(); ++j) t(i, j) = x[i] * y[j];
  }
  return t;
}

namespace {

void require_nonnegative(const TensorElement& u, const char* op) {
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (u(i, j) < 0)
        throw PreconditionViolation(std::string(op) + ": negative entry at (" + std::to_string(i) + ", " +
                                        std::to_string(j) + ")",
                                    i * u.cols() + j);
}

}  // namespace

RankOnePair dominating_rank_one(const TensorElement& u) {
  require_nonnegative(u, "dominating_rank_one");
  std::vector<Rational> a(u.rows());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (u(i, j) > a[i]) a[i] = u(i, j);
  return {LatticeElement(std::move(a)), LatticeElement::ones(u.cols())};
}

std::vector<RankOnePair> rank_one_sup_recover(const TensorElement& c) {
  require_nonnegative(c, "rank_one_sup_recover");
  std::vector<RankOnePair> family;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c(i, j) > 0)
        family.push_back({LatticeElement::unit(c.rows(), i, c(i, j)), LatticeElement::unit(c.cols(), j)});
  return family;
}

TensorElement supremum(std::size_t rows, std::size_t cols, const std::vector<RankOnePair>& family) {
  TensorElement out(rows, cols);
  for (const auto& [a, b] : family) out = join(out, rank_one(a, b));
  return out;
}

}  // namespace fremlin
