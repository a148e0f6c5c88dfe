#include "avstab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace avstab {

DiscreteMeasure make_measure(std::vector<Atom> atoms, bool renormalize) {
  if (atoms.empty()) throw std::invalid_argument("make_measure: empty atom list");

  for (const Atom& a : atoms) {
    if (!std::isfinite(a.position) || std::abs(a.position) > 1.0)
      throw PositionOutOfRange("atom position " + std::to_string(a.position) + " outside [-1, 1]");
    if (!std::isfinite(a.weight) || !(a.weight > 0.0))
      throw NonpositiveWeight("atom weight " + std::to_string(a.weight) + " is not positive");
  }

  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.position < b.position; });
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    if (atoms[i].position == atoms[i - 1].position)
      throw DuplicatePosition("duplicate atom position " + std::to_string(atoms[i].position));
  }

  double sum = 0.0;
  for (const Atom& a : atoms) sum += a.weight;
  if (renormalize) {
    for (Atom& a : atoms) a.weight /= sum;
  } else if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw WeightsNotNormalized("weights sum to " + std::to_string(sum) + ", expected 1");
  }

  return DiscreteMeasure(std::move(atoms));
}

std::vector<Atom> descending_atoms(const DiscreteMeasure& mu) {
  return std::vector<Atom>(mu.atoms().rbegin(), mu.atoms().rend());
}

DiscreteMeasure arithmetic_measure() {
  return make_measure({{-1.0, 0.5}, {1.0, 0.5}});
}

}  // namespace avstab
