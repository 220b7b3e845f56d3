#include "surflink/fsq.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace surflink {

FSQElement::FSQElement(int base, bool barred, Word tail)
    : base_(base), barred_(barred), tail_(std::move(tail)) {
  if (base < 1) throw std::invalid_argument("FSQ base generator must be positive");
  std::size_t k = 0;
  const auto letters = tail_.letters();
  while (k < letters.size() && generator_of(letters[k]) == base_) ++k;
  if (k > 0) tail_ = Word(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(k), letters.end()));
}

int FSQElement::max_generator() const { return std::max(base_, tail_.max_generator()); }

Word FSQElement::associated_word() const {
  return tail_.inverse() * Word::generator(base_, barred_ ? -1 : 1) * tail_;
}

std::string FSQElement::str() const {
  std::string s = (barred_ ? "~x" : "x") + std::to_string(base_);
  if (!tail_.empty()) s += " [ " + tail_.str() + " ]";
  return s;
}

FSQElement fsq_op(const FSQElement& a, const FSQElement& b, OpMode mode) {
  Word t = a.tail() * b.associated_word().pow(mode == OpMode::star ? 1 : -1);
  return FSQElement(a.base(), a.barred(), std::move(t));
}

FSQElement fsq_bar(const FSQElement& e) { return FSQElement(e.base(), !e.barred(), e.tail()); }

FSQElement fsq_pow(const FSQElement& e, const Word& w) {
  return FSQElement(e.base(), e.barred(), e.tail() * w);
}

namespace {

// Image of x_g under a single Artin letter, as a free quandle element.
FSQElement letter_image(int letter, int g) {
  const int i = letter < 0 ? -letter : letter;
  if (g != i && g != i + 1) return FSQElement(g);
  if (letter > 0) {
    return g == i ? FSQElement(i + 1, false, Word{-i}) : FSQElement(i);
  }
  return g == i ? FSQElement(i + 1) : FSQElement(i, false, Word{i + 1});
}

}  // namespace

FSQElement braid_fsq_action(const BraidWord& b, const FSQElement& e) {
  if (e.max_generator() > b.degree()) {
    throw std::invalid_argument("element uses x" + std::to_string(e.max_generator()) +
                                " beyond braid degree " + std::to_string(b.degree()));
  }
  FSQElement cur = e;
  for (int letter : b.letters()) {
    const FSQElement head = letter_image(letter, cur.base());
    const Word tail = artin_action(BraidWord(b.degree(), {letter}), cur.tail());
    cur = FSQElement(head.base(), cur.barred(), head.tail() * tail);
  }
  return cur;
}

FSQElement parse_fsq_element(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& v) {
    v.erase(0, v.find_first_not_of(" \t"));
    v.erase(v.find_last_not_of(" \t") + 1);
  };
  strip(s);
  Word tail;
  if (const auto open = s.find('['); open != std::string::npos) {
    const auto close = s.find(']', open);
    if (close == std::string::npos || close != s.size() - 1) {
      throw std::invalid_argument("unbalanced tail brackets in '" + std::string(text) + "'");
    }
    tail = parse_word(s.substr(open + 1, close - open - 1));
    s = s.substr(0, open);
    strip(s);
  }
  bool barred = false;
  if (!s.empty() && s[0] == '~') {
    barred = true;
    s.erase(0, 1);
  }
  const Word head = parse_word(s);
  if (head.size() != 1 || head[0] < 0) {
    throw std::invalid_argument("bad FSQ element '" + std::string(text) + "'");
  }
  return FSQElement(head[0], barred, tail);
}

}  // namespace surflink
