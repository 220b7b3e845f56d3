#include "surflink/braid_system.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "surflink/errors.hpp"

namespace surflink {

BraidSystem::BraidSystem(int degree, std::vector<ConjugateFactor> factors)
    : degree_(degree), factors_(std::move(factors)) {
  if (degree < 2) throw std::invalid_argument("braid system degree must be at least 2");
  for (const auto& f : factors_) {
    if (f.conjugator.degree() != degree_) throw std::invalid_argument("factor degree mismatch");
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("factor sign must be +1 or -1");
  }
}

void BraidSystem::add_factor(int sign, BraidWord conjugator) {
  if (conjugator.degree() != degree_) throw std::invalid_argument("factor degree mismatch");
  if (sign != 1 && sign != -1) throw std::invalid_argument("factor sign must be +1 or -1");
  factors_.push_back({sign, std::move(conjugator)});
}

BraidWord factor_braid(const ConjugateFactor& f) {
  const int deg = f.conjugator.degree();
  return f.conjugator.inverse() * BraidWord(deg, {f.sign}) * f.conjugator;
}

BraidWord boundary_braid(const BraidSystem& sys) {
  BraidWord out(sys.degree());
  for (const auto& f : sys.factors()) out *= factor_braid(f);
  return out;
}

BraidSystem slide(const BraidSystem& sys, int i, SlideDirection dir) {
  if (i < 1 || i >= sys.size()) {
    throw std::out_of_range("slide index " + std::to_string(i) + " outside 1.." +
                            std::to_string(sys.size() - 1));
  }
  std::vector<ConjugateFactor> fs = sys.factors();
  const ConjugateFactor a = fs[i - 1];
  const ConjugateFactor b = fs[i];
  if (dir == SlideDirection::right) {
    // beta_a beta_b beta_a^-1 = (b_b beta_a^-1)^-1 s1^e (b_b beta_a^-1)
    fs[i - 1] = {b.sign, (b.conjugator * factor_braid(a).inverse()).free_reduced()};
    fs[i] = a;
  } else {
    // beta_b^-1 beta_a beta_b = (b_a beta_b)^-1 s1^e (b_a beta_b)
    fs[i - 1] = b;
    fs[i] = {a.sign, (a.conjugator * factor_braid(b)).free_reduced()};
  }
  return BraidSystem(sys.degree(), std::move(fs));
}

int euler_characteristic(const BraidSystem& sys) { return sys.degree() - sys.size(); }

int genus_from(int c, int d, int chi) { return 2 * (c + d) - chi; }

AdequacyReport check_weak_boundary(const BraidSystem& sys) {
  return adequacy_check(boundary_braid(sys));
}

bool check_strict_boundary(const BraidSystem& sys) {
  return braids_equal(boundary_braid(sys), BraidWord(sys.degree()));
}

BraidSystem case2_system(int k) {
  if (k < 1) throw std::invalid_argument("case2_system needs k >= 1");
  const BraidWord b = BraidWord(4, {-2}).pow(k);
  const BraidWord swap_pairs(4, {2, 1, 3, 2});
  BraidSystem sys(4);
  sys.add_factor(+1, b);
  sys.add_factor(-1, swap_pairs.inverse() * b);
  return sys;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

BraidSystem parse_braid_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  int degree = 0;
  std::vector<std::pair<int, std::string>> pending;  // (line, body)
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'key: value'");
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    if (key == "degree") {
      if (degree != 0) throw ParseError(lineno, "duplicate degree");
      try {
        std::size_t used = 0;
        degree = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad degree '" + value + "'");
      }
      if (degree < 2 || degree % 2 != 0) throw ParseError(lineno, "degree must be even and >= 2");
    } else if (key == "factor") {
      if (degree == 0) throw ParseError(lineno, "factor before degree");
      pending.emplace_back(lineno, value);
    } else {
      throw ParseError(lineno, "unknown key '" + key + "'");
    }
  }
  if (degree == 0) throw ParseError(0, "missing 'degree:' line");
  BraidSystem sys(degree);
  for (const auto& [ln, body] : pending) {
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw ParseError(ln, "factor needs '<sign> ; <braid>'");
    const std::string s = trim(std::string_view(body).substr(0, semi));
    int sign = 0;
    if (s == "+1" || s == "1") {
      sign = 1;
    } else if (s == "-1") {
      sign = -1;
    } else {
      throw ParseError(ln, "bad sign '" + s + "'");
    }
    try {
      sys.add_factor(sign, parse_braid(std::string_view(body).substr(semi + 1), degree));
    } catch (const std::invalid_argument& e) {
      throw ParseError(ln, e.what());
    }
  }
  return sys;
}

std::string format_braid_system(const BraidSystem& sys) {
  std::ostringstream os;
  os << "degree: " << sys.degree() << '\n';
  for (const auto& f : sys.factors()) {
    os << "factor: " << (f.sign > 0 ? "+1" : "-1") << " ; " << f.conjugator.str() << '\n';
  }
  return os.str();
}

BraidSystem random_braid_system(int degree, int n, int max_conj_len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, max_conj_len);
  std::uniform_int_distribution<int> gen(1, degree - 1);
  std::bernoulli_distribution coin(0.5);
  BraidSystem sys(degree);
  for (int f = 0; f < n; ++f) {
    std::vector<int> letters;
    const int L = len(rng);
    for (int k = 0; k < L; ++k) letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
    const int sign = coin(rng) ? 1 : -1;
    sys.add_factor(sign, BraidWord(degree, std::move(letters)).free_reduced());
  }
  return sys;
}

}  // namespace surflink
