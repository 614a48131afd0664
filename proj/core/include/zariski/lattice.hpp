#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/matrix.hpp"
#include "zariski/rational.hpp"

namespace zariski {

/// Rank-rho integer symmetric bilinear form in a fixed class basis.
struct IntersectionLattice {
  std::size_t rank = 0;
  ZMatrix gram;
};

/// A named class in the lattice basis. The self-intersection is cached at
/// construction time by CurveSystem.
struct CurveClass {
  std::string name;
  std::vector<Int> coords;
};

struct ValidationReport {
  std::vector<std::string> fatal;
  std::vector<std::string> warnings;
  std::optional<Signature> lattice_signature;

  bool valid() const { return fatal.empty(); }
};

/// Symmetry violations are fatal. A signature other than (1, rho-1, 0) only
/// warns: the numeric criteria stay meaningful on non-geometric lattices,
/// which the property tests rely on.
ValidationReport validate_lattice(const IntersectionLattice& lattice);

/// Exact rational coefficient vector over the generator curves.
struct Divisor {
  std::vector<Rat> coeffs;

  Divisor() = default;
  explicit Divisor(std::vector<Rat> c) : coeffs(std::move(c)) {}
  static Divisor zero(std::size_t size) { return Divisor(std::vector<Rat>(size)); }
  static Divisor unit(std::size_t size, std::size_t index);

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const;
  bool is_effective() const;  // all coefficients >= 0
  bool is_integral() const;
  std::vector<std::size_t> support() const;  // indices with nonzero coefficient

  bool operator==(const Divisor&) const = default;
};

Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);
Divisor operator*(const Rat& scale, const Divisor& d);

/// Generator curves over an intersection lattice. Construction validates all
/// invariants (symmetric lattice, distinct names, coordinate lengths, nonzero
/// classes) and caches the generator Gram matrix.
class CurveSystem {
 public:
  CurveSystem(IntersectionLattice lattice, std::vector<CurveClass> curves);

  const IntersectionLattice& lattice() const { return lattice_; }
  std::span<const CurveClass> curves() const { return curves_; }
  std::size_t size() const { return curves_.size(); }

  const ZMatrix& generator_gram() const { return gram_; }
  const Int& pairing(std::size_t i, std::size_t j) const { return gram_.at(i, j); }
  const Int& self_intersection(std::size_t i) const { return gram_.at(i, i); }

  const std::string& name_of(std::size_t i) const { return curves_[i].name; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Indices of generators with negative self-intersection, ascending.
  std::vector<std::size_t> negative_curves() const;

 private:
  IntersectionLattice lattice_;
  std::vector<CurveClass> curves_;
  ZMatrix gram_;  // pairwise products of the generator classes
};

/// u^T G v over the generator Gram matrix; bilinear and symmetric.
Rat pair(const CurveSystem& system, const Divisor& u, const Divisor& v);

/// pair(d, C_j) for the j-th generator.
Rat pair_with_generator(const CurveSystem& system, const Divisor& d, std::size_t j);

/// |S| x |S| matrix of pairwise products of the selected generators, order
/// preserved. The empty subset yields the 0x0 matrix.
QMatrix gram_submatrix(const CurveSystem& system, std::span<const std::size_t> subset);

/// Integer variant used by the engine internals.
ZMatrix gram_subzmatrix(const CurveSystem& system, std::span<const std::size_t> subset);

}  // namespace zariski
