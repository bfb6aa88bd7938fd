#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fremlin/lattice.hpp"
#include "fremlin/report.hpp"
#include "fremlin/rng.hpp"
#include "fremlin/seminorm.hpp"
#include "fremlin/tensor.hpp"

namespace fremlin {

/// Bilinear map Phi: Q^n x Q^m -> Q^g given by the images Phi(e_i, f_j).
/// Phi is a lattice bimorphism exactly when the images are nonnegative and
/// pairwise disjoint.
class LatticeBimorphism {
 public:
  /// Throws DimensionMismatch on ragged input or images of the wrong
  /// dimension, InvalidArgument when an image is negative or two images
  /// overlap.
  LatticeBimorphism(std::size_t target_dim, std::vector<std::vector<LatticeElement>> images);
  /// Skips the lattice invariants (shape is still checked). Used to build
  /// broken fixtures.
  static LatticeBimorphism unchecked(std::size_t target_dim, std::vector<std::vector<LatticeElement>> images);
  /// images[i][j] = e_(i*m + j), so that Phi(x, y) is the row-major flattening of x (x) y.
  static LatticeBimorphism canonical(std::size_t n, std::size_t m);

  std::size_t rows() const noexcept { return images_.size(); }
  std::size_t cols() const noexcept { return images_.front().size(); }
  std::size_t target_dim() const noexcept { return target_dim_; }
  const LatticeElement& image(std::size_t i, std::size_t j) const { return images_[i][j]; }
  const std::vector<std::vector<LatticeElement>>& images() const noexcept { return images_; }
  /// Recomputes nonnegativity and disjointness.
  bool is_lattice_bimorphism() const;

  LatticeBimorphism scaled(const Rational& lambda) const;

 private:
  LatticeBimorphism(std::size_t target_dim, std::vector<std::vector<LatticeElement>> images, bool check);

  std::size_t target_dim_;
  std::vector<std::vector<LatticeElement>> images_;
};

/// Phi(x, y) = sum_ij x_i y_j images[i][j]. Throws DimensionMismatch.
LatticeElement bimorphism_eval(const LatticeBimorphism& phi, const LatticeElement& x, const LatticeElement& y);

/// T(u) = sum_ij u_ij images[i][j], the linear map with T(x (x) y) = Phi(x, y).
class InducedHom {
 public:
  /// No invariant check; see induce_hom.
  explicit InducedHom(LatticeBimorphism phi) : phi_(std::move(phi)) {}

  const LatticeBimorphism& bimorphism() const noexcept { return phi_; }
  LatticeElement operator()(const TensorElement& u) const;
  /// target_dim x (rows * cols) matrix acting on row-major flattenings.
  Matrix matrix() const;

 private:
  LatticeBimorphism phi_;
};

/// Throws InvalidArgument when phi is not a lattice bimorphism.
InducedHom induce_hom(const LatticeBimorphism& phi);

/// Random lattice bimorphism: every target coordinate is owned by at most one
/// atom pair and carries a positive value.
LatticeBimorphism random_bimorphism(CounterRng& rng, std::size_t n, std::size_t m, std::size_t g);

/// Smallest C with r(T(a (x) b)) <= C for every pair of atoms of p and q,
/// nullopt (infinite) when T does not vanish on a product involving a
/// zero-cost direction. Then r(T u) <= C (p (x) q)(u) for every u.
std::optional<Rational> continuity_constant(const InducedHom& T, const RieszSeminorm& p, const RieszSeminorm& q,
                                            const RieszSeminorm& r);

struct ContinuityResult {
  std::optional<Rational> constant;
  Report report;
};

/// Validates the constant on sampled u against certified upper bounds, and
/// follows the set-level chain T(W(U, V)) in Conv_b(Sol(T(U (x) V))) on
/// sampled points of W, with the solid-image witness |T(w)| <= |T(a)|.
ContinuityResult continuity_certificate(const InducedHom& T, const RieszSeminorm& p, const RieszSeminorm& q,
                                        const RieszSeminorm& r, std::size_t samples, std::uint64_t seed,
                                        std::size_t workers = 1);

/// Factorization T(x (x) y) = Phi(x, y), the homomorphism property in each
/// slot and of T, uniqueness of T from rank-one values, and detection of a
/// broken (non-disjoint) fixture.
Report universal_property_check(const LatticeBimorphism& phi, std::size_t samples, std::uint64_t seed,
                                std::size_t workers = 1);

}  // namespace fremlin
