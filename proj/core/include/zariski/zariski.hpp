#pragma once

#include <vector>

#include "zariski/lattice.hpp"

namespace zariski {

/// D = P + N with P nonnegative against every generator, N effective with
/// negative definite support Gram, and P orthogonal to the support of N.
/// m is the least positive integer making m·N (equivalently m·P, for
/// integral D) integral.
struct ZariskiDecomposition {
  Divisor positive_part;
  Divisor negative_part;
  std::vector<std::size_t> support;  // generators with positive N-coefficient, ascending
  Int denominator;                   // m >= 1
  std::size_t iterations = 0;        // support-growth rounds used by the solver

  bool operator==(const ZariskiDecomposition& other) const {
    return positive_part == other.positive_part && negative_part == other.negative_part &&
           support == other.support && denominator == other.denominator;
  }
};

/// True iff pair(d, C_j) >= 0 for every generator C_j. Nefness here is
/// relative to the supplied generator set: the tool cannot see curves
/// outside the data, and every report says so.
bool is_nef_on_generators(const CurveSystem& system, const Divisor& d);

/// Support-growing solver. Starts from the generators in supp(D) that meet D
/// negatively, solves Gram(S)·a = (D·C_j) on the current support S, and
/// enlarges S by every generator in supp(D) the remainder still meets
/// negatively, until P = D - N is nonnegative on supp(D). All additions
/// happen in one batch per round; the fixed point is unique either way.
///
/// Throws InputError for non-effective input and NotPseudoEffectiveError
/// when the data admit no decomposition (singular support Gram, negative
/// solution coefficient, indefinite support, or P negative against a
/// generator outside supp(D)).
ZariskiDecomposition zariski_decompose(const CurveSystem& system, const Divisor& d);

inline constexpr std::size_t kDefaultBruteForceCap = 16;

/// Independent oracle: enumerates every subset of supp(D), solves for the
/// candidate negative part, filters by the three decomposition conditions and
/// requires exactly one surviving candidate. Throws OracleViolationError when
/// zero or several distinct candidates survive, and ResourceError when the
/// system has more generators than the cap.
ZariskiDecomposition brute_force_decompose(const CurveSystem& system, const Divisor& d,
                                           std::size_t generator_cap = kDefaultBruteForceCap);

/// Least common multiple of the reduced denominators of the negative part;
/// 1 exactly when the decomposition is integral.
Int zariski_denominator(const ZariskiDecomposition& decomposition);

}  // namespace zariski
