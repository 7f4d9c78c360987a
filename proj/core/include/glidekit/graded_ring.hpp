#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glidekit/rational.hpp"

namespace glidekit {

struct RingLabel {
  std::string name;
  int degree = 0;
};

using LabelCombination = std::map<std::string, Rational>;
using LabelTuple = std::vector<std::string>;
/// Finitely supported map from label tuples to coefficients.
using TensorElement = std::map<LabelTuple, Rational>;

/// A graded ring with a finite basis of named labels, one degree-0 unit and
/// positive degrees elsewhere. Products absent from the table are zero, so a
/// truncated quotient ring is described by simply omitting its top products.
class GradedRingData {
 public:
  using Constants = std::map<std::pair<std::string, std::string>, LabelCombination>;

  /// Validates the data and throws kInvalidRing on any violation: duplicate
  /// or unknown labels, a unit that is not of degree 0, products that do not
  /// add degrees, or a counit that is not 1 on the unit and 0 elsewhere.
  /// Products with the unit are implied and may be omitted.
  static GradedRingData create(std::vector<RingLabel> basis, std::string unit, Constants constants,
                               LabelCombination counit = {});

  const std::string& unit() const { return unit_; }
  /// Non-unit labels ordered by degree, then name.
  const std::vector<RingLabel>& labels() const { return labels_; }
  bool has_label(const std::string& name) const { return degrees_.contains(name); }
  int degree(const std::string& name) const;
  Rational counit(const std::string& name) const;
  const Constants& constants() const { return constants_; }

  /// Product of two basis elements as a combination of labels.
  LabelCombination product(const std::string& a, const std::string& b) const;

 private:
  std::string unit_;
  std::vector<RingLabel> labels_;
  std::map<std::string, int> degrees_;
  Constants constants_;
};

/// The cell ring of CP^infinity truncated above x^max_power: labels "0" (the
/// unit), "1", ..., "max_power" with x^a of degree 2a and x^a x^b = x^{a+b}.
GradedRingData cp_infinity_ring(int max_power);

/// M_{n,Theta} as an element of the n-fold tensor power of R: theta_j sits
/// in slot iota(j) for every order-preserving injection iota, the unit
/// fills the other slots. Throws kUnknownLabel, kTupleTooLong.
TensorElement m_tensor(const LabelTuple& theta, const GradedRingData& ring, std::size_t n);

/// Slotwise product in the tensor power.
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b, const GradedRingData& ring);

/// Applies the counit to the last slot, mapping the n-fold tensor power to
/// the (n-1)-fold one.
TensorElement counit_project(const TensorElement& t, const GradedRingData& ring);

/// Expansion of M_{n,Theta} * M_{n,Kappa} in the basis M_{n,Theta'},
/// read off the tensors of the form (theta'_1, ..., theta'_k, 1, ..., 1).
/// Requires n >= l(Theta) + l(Kappa) and non-unit labels.
std::map<LabelTuple, Rational> qsym_r_product(const LabelTuple& theta, const LabelTuple& kappa,
                                              const GradedRingData& ring, std::size_t n);

/// The same product by a direct overlapping shuffle of the label tuples in
/// which colliding labels multiply through the ring.
std::map<LabelTuple, Rational> qsym_r_product_direct(const LabelTuple& theta, const LabelTuple& kappa,
                                                     const GradedRingData& ring);

}  // namespace glidekit
