#include "zariski/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "zariski/errors.hpp"

namespace zariski {

ValidationReport validate_lattice(const IntersectionLattice& lattice) {
  ValidationReport report;
  if (lattice.rank == 0) report.fatal.push_back("lattice rank must be at least 1");
  if (lattice.gram.rows() != lattice.rank || lattice.gram.cols() != lattice.rank)
    report.fatal.push_back("gram matrix shape does not match the declared rank");
  if (!report.fatal.empty()) return report;

  if (!lattice.gram.is_symmetric()) {
    for (std::size_t i = 0; i < lattice.rank; ++i)
      for (std::size_t j = i + 1; j < lattice.rank; ++j)
        if (lattice.gram.at(i, j) != lattice.gram.at(j, i)) {
          report.fatal.push_back("gram matrix is not symmetric: entry (" + std::to_string(i) +
                                 "," + std::to_string(j) + ") = " +
                                 to_string(lattice.gram.at(i, j)) + " but (" +
                                 std::to_string(j) + "," + std::to_string(i) + ") = " +
                                 to_string(lattice.gram.at(j, i)));
          return report;
        }
  }

  const Signature sig = signature(lattice.gram);
  report.lattice_signature = sig;
  if (!(sig.positive == 1 && sig.zero == 0 && sig.negative == lattice.rank - 1)) {
    report.warnings.push_back(
        "lattice signature (" + std::to_string(sig.positive) + "," +
        std::to_string(sig.negative) + "," + std::to_string(sig.zero) +
        ") differs from the surface signature (1," + std::to_string(lattice.rank - 1) +
        ",0); criteria remain evaluable but the input is not a geometric surface lattice");
  }
  return report;
}

Divisor Divisor::unit(std::size_t size, std::size_t index) {
  if (index >= size) throw InputError("Divisor::unit: index out of range");
  Divisor d = zero(size);
  d.coeffs[index] = 1;
  return d;
}

bool Divisor::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
}

bool Divisor::is_effective() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c >= 0; });
}

bool Divisor::is_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return is_integral(c); });
}

std::vector<std::size_t> Divisor::support() const {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) indices.push_back(i);
  return indices;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  if (a.size() != b.size()) throw InputError("divisor sum: coefficient lengths differ");
  Divisor out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  if (a.size() != b.size()) throw InputError("divisor difference: coefficient lengths differ");
  Divisor out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

Divisor operator*(const Rat& scale, const Divisor& d) {
  Divisor out = d;
  for (Rat& c : out.coeffs) {
    c *= scale;
    c.canonicalize();
  }
  return out;
}

CurveSystem::CurveSystem(IntersectionLattice lattice, std::vector<CurveClass> curves)
    : lattice_(std::move(lattice)), curves_(std::move(curves)) {
  ValidationReport lattice_report = validate_lattice(lattice_);
  if (!lattice_report.valid()) throw InputError("invalid lattice: " + lattice_report.fatal.front());

  std::unordered_set<std::string> names;
  for (const CurveClass& curve : curves_) {
    if (curve.name.empty()) throw InputError("curve with empty name");
    if (!names.insert(curve.name).second)
      throw InputError("duplicate curve name '" + curve.name + "'");
    if (curve.coords.size() != lattice_.rank)
      throw InputError("curve '" + curve.name + "' has " + std::to_string(curve.coords.size()) +
                       " coordinates; lattice rank is " + std::to_string(lattice_.rank));
    if (std::all_of(curve.coords.begin(), curve.coords.end(),
                    [](const Int& v) { return v == 0; }))
      throw InputError("curve '" + curve.name + "' is the zero class");
  }

  // generator Gram: G_ij = coords_i^T · gram · coords_j
  const std::size_t n = curves_.size();
  const std::size_t rank = lattice_.rank;
  gram_ = ZMatrix(n, n);
  std::vector<Int> image(rank);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < rank; ++r) {
      image[r] = 0;
      for (std::size_t s = 0; s < rank; ++s)
        image[r] += lattice_.gram.at(r, s) * curves_[i].coords[s];
    }
    for (std::size_t j = i; j < n; ++j) {
      Int value = 0;
      for (std::size_t r = 0; r < rank; ++r) value += image[r] * curves_[j].coords[r];
      gram_.at(i, j) = value;
      gram_.at(j, i) = value;
    }
  }
}

std::optional<std::size_t> CurveSystem::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> CurveSystem::negative_curves() const {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (self_intersection(i) < 0) indices.push_back(i);
  return indices;
}

Rat pair(const CurveSystem& system, const Divisor& u, const Divisor& v) {
  const std::size_t n = system.size();
  if (u.size() != n || v.size() != n)
    throw InputError("pair: divisor coefficient lengths do not match the curve system");
  Rat total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u.coeffs[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (v.coeffs[j] == 0) continue;
      row += v.coeffs[j] * Rat(system.pairing(i, j));
    }
    total += u.coeffs[i] * row;
  }
  total.canonicalize();
  return total;
}

Rat pair_with_generator(const CurveSystem& system, const Divisor& d, std::size_t j) {
  const std::size_t n = system.size();
  if (d.size() != n)
    throw InputError("pair: divisor coefficient length does not match the curve system");
  if (j >= n) throw InputError("pair: generator index out of range");
  Rat total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.coeffs[i] == 0) continue;
    total += d.coeffs[i] * Rat(system.pairing(i, j));
  }
  total.canonicalize();
  return total;
}

ZMatrix gram_subzmatrix(const CurveSystem& system, std::span<const std::size_t> subset) {
  const std::size_t n = system.size();
  std::vector<bool> seen(n, false);
  for (std::size_t index : subset) {
    if (index >= n) throw InputError("gram_submatrix: index out of range");
    if (seen[index]) throw InputError("gram_submatrix: duplicate index");
    seen[index] = true;
  }
  ZMatrix out(subset.size(), subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j)
      out.at(i, j) = system.pairing(subset[i], subset[j]);
  return out;
}

QMatrix gram_submatrix(const CurveSystem& system, std::span<const std::size_t> subset) {
  return to_rational(gram_subzmatrix(system, subset));
}

}  // namespace zariski
