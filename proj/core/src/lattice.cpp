#include "fremlin/lattice.hpp"

#include <sstream>

#include "fremlin/errors.hpp"

namespace fremlin {

LatticeElement::LatticeElement(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidArgument("lattice element must have dimension >= 1");
  for (auto& c : coords_) c.canonicalize();
}

LatticeElement::LatticeElement(std::initializer_list<Rational> coords)
    : LatticeElement(std::vector<Rational>(coords)) {}

LatticeElement LatticeElement::zero(std::size_t dim) { return LatticeElement(std::vector<Rational>(dim)); }

LatticeElement LatticeElement::ones(std::size_t dim) { return LatticeElement(std::vector<Rational>(dim, Rational(1))); }

LatticeElement LatticeElement::unit(std::size_t dim, std::size_t index, const Rational& scale) {
  std::vector<Rational> c(dim);
  c.at(index) = scale;
  return LatticeElement(std::move(c));
}

bool LatticeElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool LatticeElement::is_nonnegative() const {
  for (const auto& c : coords_)
    if (c < 0) return false;
  return true;
}

void require_same_dim(const LatticeElement& x, const LatticeElement& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch(x.dim(), y.dim());
}

namespace {

template <class F>
LatticeElement zip(const LatticeElement& x, const LatticeElement& y, F f) {
  require_same_dim(x, y);
  std::vector<Rational> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = f(x[i], y[i]);
  return LatticeElement(std::move(out));
}

template <class F>
LatticeElement map(const LatticeElement& x, F f) {
  std::vector<Rational> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = f(x[i]);
  return LatticeElement(std::move(out));
}

}  // namespace

LatticeElement operator+(const LatticeElement& x, const LatticeElement& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return Rational(a + b); });
}

LatticeElement operator-(const LatticeElement& x, const LatticeElement& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return Rational(a - b); });
}

LatticeElement operator-(const LatticeElement& x) {
  return map(x, [](const Rational& a) { return Rational(-a); });
}

LatticeElement operator*(const Rational& lambda, const LatticeElement& x) {
  return map(x, [&](const Rational& a) { return Rational(lambda * a); });
}

LatticeElement join(const LatticeElement& x, const LatticeElement& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return max_value(a, b); });
}

LatticeElement meet(const LatticeElement& x, const LatticeElement& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return min_value(a, b); });
}

LatticeElement abs(const LatticeElement& x) { return map(x, abs_value); }

LatticeElement positive_part(const LatticeElement& x) {
  return map(x, [](const Rational& a) { return a < 0 ? Rational(0) : a; });
}

bool leq(const LatticeElement& x, const LatticeElement& y) {
  require_same_dim(x, y);
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Rational dot(const LatticeElement& x, const LatticeElement& y) {
  require_same_dim(x, y);
  Rational s;
  for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

std::string to_string(const LatticeElement& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.dim(); ++i) os << (i ? ", " : "") << x[i].get_str();
  os << ')';
  return os.str();
}

LatticeElement lattice_eval(const LatticeElement& x, const LatticeElement& y, const LatticeOp& operation) {
  struct Visitor {
    const LatticeElement& x;
    const LatticeElement& y;
    LatticeElement operator()(op::Join) const { return join(x, y); }
    LatticeElement operator()(op::Meet) const { return meet(x, y); }
    LatticeElement operator()(op::Abs) const { return abs(x); }
    LatticeElement operator()(op::Plus) const { return x + y; }
    LatticeElement operator()(const op::Scale& s) const { return s.lambda * x; }
  };
  return std::visit(Visitor{x, y}, operation);
}

RieszSplit riesz_decompose(const LatticeElement& z, const LatticeElement& x, const LatticeElement& y) {
  require_same_dim(z, x);
  require_same_dim(z, y);
  for (std::size_t i = 0; i < z.dim(); ++i) {
    if (abs_value(z[i]) > abs_value(x[i]) + abs_value(y[i]))
      throw PreconditionViolation("riesz_decompose: |z_" + std::to_string(i) + "| = " + abs_value(z[i]).get_str() +
                                      " exceeds |x_i| + |y_i| = " + Rational(abs_value(x[i]) + abs_value(y[i])).get_str(),
                                  i);
  }
  const LatticeElement bound = abs(x);
  LatticeElement first = meet(join(z, -bound), bound);
  LatticeElement second = z - first;
  return {std::move(first), std::move(second)};
}

RieszSplit disjointify(const LatticeElement& x, const LatticeElement& y) {
  require_same_dim(x, y);
  const LatticeElement ax = abs(x), ay = abs(y);
  const LatticeElement common = meet(ax, ay);
  return {ax - common, ay - common};
}

LatticeElement apply(const Matrix& a, const LatticeElement& x) {
  if (a.empty()) throw InvalidArgument("matrix needs at least one row");
  std::vector<Rational> out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != x.dim()) throw DimensionMismatch(a[r].size(), x.dim());
    for (std::size_t c = 0; c < x.dim(); ++c) out[r] += a[r][c] * x[c];
  }
  return LatticeElement(std::move(out));
}

bool is_lattice_homomorphism(const Matrix& a) {
  for (const auto& row : a) {
    std::size_t nonzero = 0;
    for (const auto& v : row) {
      if (v < 0) return false;
      if (v != 0) ++nonzero;
    }
    if (nonzero > 1) return false;
  }
  return true;
}

}  // namespace fremlin
