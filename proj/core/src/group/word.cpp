#include "trivex/group/word.hpp"

#include <cstdlib>
#include <sstream>

#include "trivex/error.hpp"

namespace trivex::group {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) throw InvalidArgument("Word: letter exponent must be +1 or -1");
    if (l.generator < 0) throw InvalidArgument("Word: negative generator index");
    push_reduced(letters_, l);
  }
}

Word Word::from_powers(const std::vector<std::pair<int, int>>& runs) {
  std::vector<Letter> letters;
  for (auto [g, e] : runs) {
    const int sign = e < 0 ? -1 : 1;
    for (int i = 0; i < std::abs(e); ++i) letters.push_back({g, sign});
  }
  return Word(std::move(letters));
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (const auto& l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

std::vector<int> Word::exponent_sums(int generators) const {
  std::vector<int> sums(static_cast<std::size_t>(generators), 0);
  for (const auto& l : letters_) {
    if (l.generator >= generators) throw InvalidArgument("Word: generator index out of range");
    sums[static_cast<std::size_t>(l.generator)] += l.exponent;
  }
  return sums;
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const auto run = static_cast<int>(j - i) * letters_[i].exponent;
    if (!first) os << ' ';
    os << 'x' << letters_[i].generator;
    if (run != 1) os << '^' << run;
    first = false;
    i = j;
  }
  return os.str();
}

std::array<Word, 3> relators() {
  // (x1 x0)^3 x1^-3 x0^-3
  Word r1 = Word::from_powers({{1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, -3}, {0, -3}});
  // x1 x0^-1 x1^-1 x0^-3 x1^2 x0^-1 x1 x0 x1
  Word r2 = Word::from_powers({{1, 1}, {0, -1}, {1, -1}, {0, -3}, {1, 2}, {0, -1}, {1, 1}, {0, 1}, {1, 1}});
  // x1^3 x0^-1 x1 x0 x1 x0^2 x1^2 x0 x1 x0
  Word r3 = Word::from_powers(
      {{1, 3}, {0, -1}, {1, 1}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 1}, {1, 1}, {0, 1}});
  return {std::move(r1), std::move(r2), std::move(r3)};
}

Presentation expander_presentation() {
  auto r = relators();
  return Presentation{2, {r[0], r[1], r[2]}};
}

}  // namespace trivex::group
