#include "zariski/zariski.hpp"

#include <algorithm>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

void require_matching_effective(const CurveSystem& system, const Divisor& d) {
  if (d.size() != system.size())
    throw InputError("divisor coefficient length does not match the curve system");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.coeffs[i] < 0)
      throw InputError("divisor is not effective: coefficient of '" + system.name_of(i) +
                       "' is " + to_string(d.coeffs[i]));
}

Divisor divisor_from_solution(std::size_t size, const std::vector<std::size_t>& support,
                              const std::vector<Rat>& a) {
  Divisor n = Divisor::zero(size);
  for (std::size_t k = 0; k < support.size(); ++k) n.coeffs[support[k]] = a[k];
  return n;
}

std::vector<std::size_t> positive_support(const Divisor& n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n.coeffs[i] > 0) out.push_back(i);
  return out;
}

}  // namespace

bool is_nef_on_generators(const CurveSystem& system, const Divisor& d) {
  if (d.size() != system.size())
    throw InputError("divisor coefficient length does not match the curve system");
  for (std::size_t j = 0; j < system.size(); ++j)
    if (pair_with_generator(system, d, j) < 0) return false;
  return true;
}

ZariskiDecomposition zariski_decompose(const CurveSystem& system, const Divisor& d) {
  require_matching_effective(system, d);
  const std::size_t size = system.size();
  const std::vector<std::size_t> supp_d = d.support();

  std::vector<bool> in_support(size, false);
  std::vector<std::size_t> support;  // kept ascending
  for (std::size_t j : supp_d)
    if (pair_with_generator(system, d, j) < 0) {
      in_support[j] = true;
      support.push_back(j);
    }

  Divisor negative = Divisor::zero(size);
  Divisor positive = d;
  std::vector<Rat> solution;
  std::size_t iterations = 0;

  while (true) {
    ++iterations;
    if (iterations > size + 1)
      throw NotPseudoEffectiveError("support growth failed to terminate");  // unreachable

    if (!support.empty()) {
      std::vector<Rat> rhs(support.size());
      for (std::size_t k = 0; k < support.size(); ++k)
        rhs[k] = pair_with_generator(system, d, support[k]);
      auto solved = solve_linear(gram_subzmatrix(system, support), rhs);
      if (!solved)
        throw NotPseudoEffectiveError(
            "support Gram matrix is singular; the data admit no decomposition");
      solution = std::move(*solved);
      negative = divisor_from_solution(size, support, solution);
      positive = d - negative;
    }

    std::vector<std::size_t> additions;
    for (std::size_t j : supp_d)
      if (!in_support[j] && pair_with_generator(system, positive, j) < 0) additions.push_back(j);
    if (additions.empty()) break;
    for (std::size_t j : additions) in_support[j] = true;
    support.insert(support.end(), additions.begin(), additions.end());
    std::sort(support.begin(), support.end());
  }

  for (const Rat& a : solution)
    if (a < 0)
      throw NotPseudoEffectiveError(
          "solved negative part has a negative coefficient; the data admit no decomposition");
  if (!is_negative_definite(gram_submatrix(system, support)))
    throw NotPseudoEffectiveError(
        "support Gram matrix is not negative definite; the data admit no decomposition");
  if (!is_nef_on_generators(system, positive))
    throw NotPseudoEffectiveError(
        "positive part meets a generator outside supp(D) negatively; the data admit no "
        "decomposition");

  ZariskiDecomposition result;
  result.positive_part = std::move(positive);
  result.negative_part = std::move(negative);
  result.support = positive_support(result.negative_part);
  result.iterations = iterations;
  result.denominator = zariski_denominator(result);
  return result;
}

ZariskiDecomposition brute_force_decompose(const CurveSystem& system, const Divisor& d,
                                           std::size_t generator_cap) {
  require_matching_effective(system, d);
  if (system.size() > generator_cap)
    throw ResourceError("brute-force decomposition: generator count exceeds the cap");

  const std::size_t size = system.size();
  const std::vector<std::size_t> supp_d = d.support();
  std::vector<ZariskiDecomposition> survivors;

  const std::size_t subset_count = std::size_t{1} << supp_d.size();
  for (std::size_t mask = 0; mask < subset_count; ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t bit = 0; bit < supp_d.size(); ++bit)
      if (mask & (std::size_t{1} << bit)) subset.push_back(supp_d[bit]);

    std::vector<Rat> rhs(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k)
      rhs[k] = pair_with_generator(system, d, subset[k]);
    auto solved = solve_linear(gram_subzmatrix(system, subset), rhs);
    if (!solved) continue;

    bool effective = true;
    for (const Rat& a : *solved)
      if (a < 0) {
        effective = false;
        break;
      }
    if (!effective) continue;

    Divisor negative = divisor_from_solution(size, subset, *solved);
    Divisor positive = d - negative;
    if (!is_nef_on_generators(system, positive)) continue;
    const std::vector<std::size_t> support = positive_support(negative);
    if (!is_negative_definite(gram_submatrix(system, support))) continue;

    bool duplicate = false;
    for (const ZariskiDecomposition& seen : survivors)
      if (seen.negative_part == negative) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;

    ZariskiDecomposition candidate;
    candidate.positive_part = std::move(positive);
    candidate.negative_part = std::move(negative);
    candidate.support = support;
    candidate.denominator = zariski_denominator(candidate);
    survivors.push_back(std::move(candidate));
  }

  if (survivors.size() != 1)
    throw OracleViolationError("subset enumeration found " + std::to_string(survivors.size()) +
                               " decompositions where exactly one must exist");
  return survivors.front();
}

Int zariski_denominator(const ZariskiDecomposition& decomposition) {
  return denominator_lcm(decomposition.negative_part.coeffs);
}

}  // namespace zariski
