#pragma once

#include <array>
#include <string>
#include <vector>

namespace trivex::group {

// One letter x_g^{+1} or x_g^{-1} of a word in the free group.
struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word. Construction and every operation keep it reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  // Word from (generator, exponent) runs, e.g. {{1,3},{0,-2}} = x1^3 x0^-2.
  static Word from_powers(const std::vector<std::pair<int, int>>& runs);

  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] std::size_t length() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }

  [[nodiscard]] Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

  // Exponent sum of each generator, for abelianisation.
  [[nodiscard]] std::vector<int> exponent_sums(int generators) const;

  // Human-readable form such as "x1 x0 x1^-3".
  [[nodiscard]] std::string str() const;

 private:
  std::vector<Letter> letters_;
};

// Finite presentation: generator count and relators.
struct Presentation {
  int generators = 0;
  std::vector<Word> relators;
};

// The three relators r1, r2, r3 of the two-generator group G, in that order.
std::array<Word, 3> relators();

// <x0, x1 | r1, r2, r3>.
Presentation expander_presentation();

}  // namespace trivex::group
