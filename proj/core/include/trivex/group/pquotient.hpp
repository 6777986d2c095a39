#pragma once

#include <vector>

#include "trivex/group/pc_presentation.hpp"

namespace trivex::group {

struct QuotientOptions {
  // Cap on generators of the covering presentation built at each step.
  std::size_t max_generators = kMaxPcGenerators;
};

// Largest elementary abelian 2-quotient (class 1).
PcPresentation class_one_quotient(const Presentation& pres);

// Quotient of class c+1 from a consistent one of class c. The class stays c
// when no new generators survive.
PcPresentation next_class(const PcPresentation& pcp, const QuotientOptions& opts = {});

// Largest quotient of 2-class at most k.
PcPresentation pquotient(const Presentation& pres, int k, const QuotientOptions& opts = {});

// Class 1..k quotients; entry c-1 has class c.
std::vector<PcPresentation> pquotient_tower(const Presentation& pres, int k, const QuotientOptions& opts = {});

// Natural map G_c -> G_{c-1} that drops the generators of weight c.
class Projection {
 public:
  explicit Projection(const PcPresentation& source);
  [[nodiscard]] const PcPresentation& target() const { return target_; }
  [[nodiscard]] GroupElement apply(const GroupElement& g) const;

 private:
  int keep_ = 0;
  PcPresentation target_;
};

}  // namespace trivex::group
