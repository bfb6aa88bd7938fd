#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fremlin/lattice.hpp"
#include "fremlin/lp.hpp"
#include "fremlin/rng.hpp"

namespace fremlin {

enum class Hull { Sol, Conv, ConvB };

/// Canonical shape of a decorated set. Every decoration list collapses to one
/// of these: repeated hulls are idempotent, Conv then Conv_b is Conv_b, and any
/// hull applied to a convex solid set leaves it unchanged.
enum class HullForm {
  Points,      // the generators themselves
  Sol,         // union of boxes [-|g|, |g|]
  Conv,        // convex hull
  ConvB,       // convex balanced hull
  SolOfConv,   // Sol(Conv(G))
  SolOfConvB,  // Sol(Conv_b(G))
  ConvBOfSol,  // Conv_b(Sol(G)) == Conv(Sol(G)); convex, balanced, solid
};

HullForm normalize(const std::vector<Hull>& decoration);
std::string to_string(Hull h);
std::string to_string(HullForm f);

/// Coordinate box [lo, hi].
struct Box {
  LatticeElement lo;
  LatticeElement hi;
  bool contains(const LatticeElement& x) const;
};

/// One polyhedral piece { offset + map * w : w >= 0, rows(w) }. Pieces that
/// are exactly coordinate boxes carry `box`, which short-circuits membership.
struct Piece {
  std::vector<Rational> offset;
  std::vector<std::vector<Rational>> map;  // dim rows, `vars` columns
  std::vector<Constraint> rows;            // over w
  std::size_t vars = 0;
  std::optional<Box> box;

  static Piece from_box(LatticeElement lo, LatticeElement hi);
  std::size_t dim() const noexcept { return offset.size(); }
  bool contains(const LatticeElement& x) const;
};

/// Finite union of polyhedral pieces with exact membership by linear
/// feasibility. This is the oracle form of set expressions (sums, scalings,
/// joins, meets, intersections) that are not finitely generated.
class Region {
 public:
  Region(std::size_t dim, std::vector<Piece> pieces);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  bool contains(const LatticeElement& x) const;

  friend Region operator+(const Region& a, const Region& b);
  friend Region operator*(const Rational& alpha, const Region& a);
  /// Image under the linear map given row-wise by `matrix` (target_dim x dim).
  Region image(const std::vector<std::vector<Rational>>& matrix) const;
  Region unite(const Region& other) const;
  Region intersect(const Region& other) const;
  /// {a v b : a in this, b in other}
  Region join(const Region& other) const;
  /// {a ^ b : a in this, b in other}
  Region meet(const Region& other) const;

 private:
  std::size_t dim_;
  std::vector<Piece> pieces_;
};

/// A finitely generated set with hull decoration applied innermost-first:
/// decoration {Sol, ConvB} means Conv_b(Sol(generators)).
class GeneratedSet {
 public:
  /// Throws InvalidArgument on an empty generator list, DimensionMismatch on
  /// mixed dimensions.
  explicit GeneratedSet(std::vector<LatticeElement> generators, std::vector<Hull> decoration = {});

  std::size_t dim() const noexcept { return generators_.front().dim(); }
  const std::vector<LatticeElement>& generators() const noexcept { return generators_; }
  const std::vector<Hull>& decoration() const noexcept { return decoration_; }
  HullForm form() const noexcept { return form_; }
  bool is_undecorated() const noexcept { return form_ == HullForm::Points; }
  bool is_convex_solid() const noexcept;

  GeneratedSet with(std::vector<Hull> decoration) const { return GeneratedSet(generators_, std::move(decoration)); }
  Region region() const;

  /// Point of the set built from its constructive form.
  LatticeElement sample(CounterRng& rng) const;

 private:
  std::vector<LatticeElement> generators_;
  std::vector<Hull> decoration_;
  HullForm form_;
};

/// Exact membership decision.
bool member(const GeneratedSet& set, const LatticeElement& x);

struct GaugeResult {
  std::optional<Rational> value;  // nullopt is +infinity
  std::vector<Rational> weights;  // optimal lambda_k per generator (|lambda| for Conv_b)
  bool finite() const noexcept { return value.has_value(); }
};

/// Minkowski functional inf{r > 0 : x in r S} for convex balanced forms
/// (Conv_b and Conv_b of Sol). Throws InvalidArgument otherwise.
GaugeResult gauge(const GeneratedSet& set, const LatticeElement& x);

/// Generator-level set algebra. The binary constructions require undecorated
/// operands; `scaled` keeps the decoration.
GeneratedSet sum_of(const GeneratedSet& a, const GeneratedSet& b);
GeneratedSet union_of(const GeneratedSet& a, const GeneratedSet& b);
GeneratedSet join_of(const GeneratedSet& a, const GeneratedSet& b);
GeneratedSet meet_of(const GeneratedSet& a, const GeneratedSet& b);
GeneratedSet scaled(const Rational& alpha, const GeneratedSet& a);
/// Common generators; nullopt when the intersection is empty.
std::optional<GeneratedSet> intersection_of(const GeneratedSet& a, const GeneratedSet& b);

/// Membership oracle for the intersection of two decorated sets.
Region intersect_probe(const GeneratedSet& a, const GeneratedSet& b);

}  // namespace fremlin
