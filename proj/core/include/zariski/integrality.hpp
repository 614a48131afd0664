#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zariski/lattice.hpp"
#include "zariski/zariski.hpp"

namespace zariski {

/// A negative generator whose pairing with a divisor is not a multiple of
/// its self-intersection. `scaling` is the factor used to clear rational
/// coefficients before testing (1 for integral divisors).
struct DivisibilityWitness {
  std::size_t curve;
  std::string divisor_label;
  Int pairing;       // (C · scaling*D)
  Int self_intersection;
  Int remainder;     // pairing mod |C^2|, nonzero
  Int scaling;
};

/// Two negative generators with negative definite pair matrix but nonzero
/// product. Carries the leading minors of the 2x2 Gram.
struct PairWitness {
  std::size_t first;
  std::size_t second;
  Int product;
  Int minor_one;  // C_i^2 < 0
  Int minor_two;  // det of the pair matrix > 0
};

/// A pairing (C_i·C_j) outside (-C_i^2)·Z_{>=0}.
struct GeneratorCriterionWitness {
  std::size_t source;  // the negative generator C_i
  std::size_t other;   // j != i
  Int product;
  Int modulus;  // -C_i^2 > 0
};

/// A negative generator with no partner whose pairing is a positive multiple
/// of -C_i^2.
struct MoriWitness {
  std::size_t curve;
  Int modulus;  // -C_i^2 > 0
};

using D1Witness =
    std::variant<DivisibilityWitness, PairWitness, GeneratorCriterionWitness, MoriWitness>;

struct D1Verdict {
  std::vector<D1Witness> violations;

  bool holds() const { return violations.empty(); }
};

/// True iff C^2 divides (C·D) in the integers. Rational divisors are cleared
/// first and the test applies to the cleared pairing. The generator must be
/// a negative curve; the condition constrains nothing else.
bool check_divisibility(const CurveSystem& system, std::size_t negative_curve, const Divisor& d);

/// Structured variant used to assemble reports.
std::optional<DivisibilityWitness> divisibility_witness(const CurveSystem& system,
                                                        std::size_t negative_curve,
                                                        const Divisor& d,
                                                        const std::string& label);

/// Every pair of negative generators with negative definite 2x2 Gram must be
/// orthogonal.
D1Verdict check_pairwise_orthogonality(const CurveSystem& system);

/// Every negative generator C_i must pair into (-C_i^2)·Z_{>=0} with every
/// other generator. When the effective cone is generated by the curves with
/// nonnegative integer coefficients, this criterion is equivalent to every
/// decomposition being integral.
D1Verdict check_generator_criterion(const CurveSystem& system);

/// For declared Mori-cone generator data: every negative generator needs a
/// partner C_j with (C_i·C_j) a positive multiple of -C_i^2. Throws
/// InputError when the data are not flagged as Mori-generated.
D1Verdict check_mori_negative_curves(const CurveSystem& system, bool mori_generated);

struct ConeScaling {
  Int delta;                  // det of the generator Gram
  Int clearing_factor;        // least positive integer making the divisor integral
  bool delta_clears;          // |delta|·D integral, i.e. clearing_factor | |delta|
};

/// Throws DegenerateConeError when the generator Gram is singular.
ConeScaling cone_determinant_scaling(const CurveSystem& system, const Divisor& d);

struct NegativityReport {
  std::vector<std::size_t> negative_curve_indices;
  Int b_observed;  // max of -C_i^2 over negative generators, 0 if none
};

NegativityReport negativity_bound(const CurveSystem& system);

struct WitnessSearchResult {
  Divisor divisor;
  Int denominator;  // > 1
};

/// Enumerates effective integral divisors with coefficients up to
/// coeff_bound (ascending total degree, descending lexicographic within a
/// degree) and returns the first whose decomposition has denominator > 1.
/// Divisors on which the decomposition errors are skipped.
std::optional<WitnessSearchResult> search_nonintegral_witness(
    const CurveSystem& system, unsigned coeff_bound,
    std::size_t generator_cap = kDefaultBruteForceCap);

}  // namespace zariski
