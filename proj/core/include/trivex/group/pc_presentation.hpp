#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trivex/group/word.hpp"
#include "trivex/util/bitset.hpp"

namespace trivex::group {

inline constexpr std::size_t kMaxPcGenerators = 512;
using Exponents = FixedBits<kMaxPcGenerators>;

// Element of a finite 2-group given by its normal form a_0^{e_0} ... a_{N-1}^{e_{N-1}}.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(const Exponents& e) : exps_(e) {}

  [[nodiscard]] const Exponents& exponents() const { return exps_; }
  [[nodiscard]] bool is_identity() const { return exps_.none(); }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  Exponents exps_;
};

// Which relation introduced a pc generator.
struct Definition {
  enum class Kind { Image, Power, Commutator };
  Kind kind = Kind::Image;
  int first = 0;   // Image: defining generator. Power: i. Commutator: j.
  int second = 0;  // Commutator: i (j > i). Unused otherwise.
  friend bool operator==(const Definition&, const Definition&) = default;
};

// Raw tables of a power-commutator presentation with all relative orders 2:
//   a_i^2 = power[i],  [a_j, a_i] = commutator[j(j-1)/2 + i] for j > i,
// with [a, b] = a^-1 b^-1 a b, and images[x] the normal form of defining generator x.
struct PcTables {
  std::vector<int> weights;
  std::vector<Definition> definitions;
  std::vector<Exponents> power;
  std::vector<Exponents> commutator;
  std::vector<Exponents> images;
};

// Consistent pc-presentation of a 2-quotient of a finitely presented group.
// Invariants: weights are non-decreasing; the right side of every relation
// only involves generators of strictly larger weight and larger index.
class PcPresentation {
 public:
  PcPresentation() = default;
  PcPresentation(Presentation source, int pclass, PcTables tables);

  [[nodiscard]] int size() const { return static_cast<int>(t_.weights.size()); }
  [[nodiscard]] int pclass() const { return class_; }
  [[nodiscard]] const Presentation& source() const { return source_; }
  [[nodiscard]] const PcTables& tables() const { return t_; }
  [[nodiscard]] int weight(int i) const { return t_.weights[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const Definition& definition(int i) const { return t_.definitions[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const Exponents& power_relation(int i) const { return t_.power[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const Exponents& commutator_relation(int j, int i) const;
  // Number of generators of each weight 1..class.
  [[nodiscard]] std::vector<int> layer_sizes() const;

  [[nodiscard]] GroupElement identity() const { return {}; }
  [[nodiscard]] GroupElement generator(int i) const;
  // Image of defining generator x of the source presentation.
  [[nodiscard]] GroupElement image(int x) const;

  [[nodiscard]] GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  [[nodiscard]] GroupElement inverse(const GroupElement& g) const;
  [[nodiscard]] GroupElement power(const GroupElement& g, std::uint64_t e) const;
  [[nodiscard]] GroupElement evaluate(const Word& w) const;
  // Order of g; always a power of two.
  [[nodiscard]] std::uint64_t element_order(const GroupElement& g) const;

  // u <- u * a_i, u in normal form.
  void mul_gen(Exponents& u, int i) const;
  // u <- u * w for a normal word w.
  void mul_word(Exponents& u, const Exponents& w) const;

 private:
  Presentation source_;
  int class_ = 0;
  PcTables t_;
  std::vector<char> central_above_;  // a_i commutes with every a_j, j > i
};

// Normal-form difference of each standard overlap test word; all zero iff consistent.
std::vector<Exponents> consistency_differences(const PcPresentation& pcp);
// True when every source relator evaluates to the identity.
bool relators_hold(const PcPresentation& pcp);

// Lexicographic index sum e_i 2^{N-1-i}; requires N <= 63.
std::uint64_t element_index(const PcPresentation& pcp, const GroupElement& g);
GroupElement element_at(const PcPresentation& pcp, std::uint64_t index);
// All 2^N elements in index order. Throws CapExceeded above cap.
std::vector<GroupElement> enumerate(const PcPresentation& pcp, std::uint64_t cap);

// Images of x0, x0^-1, x1, x1^-1, x3, x3^-1 with x3 = x1^-1 x0^-1.
std::array<GroupElement, 6> labeled_generators(const PcPresentation& pcp);
// Distinct elements among labeled_generators, first occurrence order.
std::vector<GroupElement> generator_set(const PcPresentation& pcp);

}  // namespace trivex::group
