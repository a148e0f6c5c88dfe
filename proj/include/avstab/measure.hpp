#pragma once

#include <cstddef>
#include <vector>

#include "avstab/errors.hpp"

namespace avstab {

/// One point mass: position in [-1, 1], weight > 0.
struct Atom {
  double position = 0.0;
  double weight = 0.0;
};

/// Discrete probability measure on [-1, 1] with finite support.
/// Atoms are stored in strictly ascending position order and the value is
/// immutable after construction, so concurrent reads are safe.
class DiscreteMeasure {
 public:
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

 private:
  friend DiscreteMeasure make_measure(std::vector<Atom>, bool);
  explicit DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  std::vector<Atom> atoms_;
};

/// Validating constructor. Sorts the atoms by position and checks that
/// positions lie in [-1, 1] and are pairwise distinct, that weights are
/// positive, and that the weights sum to 1 within 1e-12. With
/// `renormalize` set the weights are divided by their sum instead.
DiscreteMeasure make_measure(std::vector<Atom> atoms, bool renormalize = false);

/// Atoms in descending position order, the indexing the stability numbers
/// use (index 0 carries the largest position).
std::vector<Atom> descending_atoms(const DiscreteMeasure& mu);

/// Two equal point masses at -1 and +1.
DiscreteMeasure arithmetic_measure();

inline constexpr double kWeightSumTolerance = 1e-12;

}  // namespace avstab
