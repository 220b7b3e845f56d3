#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "surflink/braid.hpp"
#include "surflink/word.hpp"

namespace surflink {

// Element x^w or xbar^w of the free symmetric quandle FSQ(A). A bar in a
// tail is the inverse letter. Canonical form: the tail never starts with the
// base generator (either sign), since (x, w) ~ (x, x w).
class FSQElement {
 public:
  FSQElement() = default;
  FSQElement(int base, bool barred = false, Word tail = {});

  static FSQElement generator(int g, bool barred = false) { return FSQElement(g, barred); }

  int base() const { return base_; }
  bool barred() const { return barred_; }
  const Word& tail() const { return tail_; }

  // Largest generator index in base or tail.
  int max_generator() const;

  // Group element of F(A) this element conjugates by: t^-1 x^{+-1} t.
  Word associated_word() const;

  friend auto operator<=>(const FSQElement&, const FSQElement&) = default;
  friend bool operator==(const FSQElement&, const FSQElement&) = default;

  // `x2`, `~x2`, `x2 [ x1^-1 ]`.
  std::string str() const;

 private:
  int base_ = 1;
  bool barred_ = false;
  Word tail_;
};

enum class OpMode { star, dual };

// (x, w) * (y, u) = (x, w u^-1 y u); a barred right operand contributes y^-1
// and the dual operation flips the sign again.
FSQElement fsq_op(const FSQElement& a, const FSQElement& b, OpMode mode = OpMode::star);
FSQElement fsq_bar(const FSQElement& e);

// e^w: right action of a free-group word, letter by letter.
FSQElement fsq_pow(const FSQElement& e, const Word& w);

// sigma_i . x_i = x_{i+1} dual x_i, sigma_i . x_{i+1} = x_i,
// sigma_i^-1 . x_i = x_{i+1}, sigma_i^-1 . x_{i+1} = x_i * x_{i+1};
// bars pass through and letters compose as in artin_action.
FSQElement braid_fsq_action(const BraidWord& b, const FSQElement& e);

// `x3`, `~x3`, `x3 [ x1 x2^-1 ]`.
FSQElement parse_fsq_element(std::string_view text);

}  // namespace surflink
