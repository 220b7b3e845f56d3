#include "surflink/sq_presentation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "surflink/errors.hpp"

namespace surflink {

namespace {

void check_indices(int generators, const std::vector<Relation>& rels, bool allow_bars) {
  if (generators < 0) throw std::invalid_argument("negative generator count");
  for (const auto& [l, r] : rels) {
    for (const FSQElement* e : {&l, &r}) {
      if (e->max_generator() > generators) {
        throw std::invalid_argument("relation uses x" + std::to_string(e->max_generator()) +
                                    " but only " + std::to_string(generators) +
                                    " generators exist");
      }
      if (!allow_bars && e->barred()) throw std::invalid_argument("bar in a quandle presentation");
    }
  }
}

template <class Eval>
std::uint64_t count_assignments(int generators, int size, const std::vector<Relation>& rels,
                                Eval eval) {
  if (generators == 0) return 1;
  if (std::pow(static_cast<double>(size), generators) > kMaxColoringSpace) {
    throw GuardExceeded("coloring space " + std::to_string(size) + "^" +
                        std::to_string(generators) + " exceeds the coloring guard");
  }
  // relation i is checked once its largest generator is assigned
  std::vector<std::vector<int>> ready(static_cast<std::size_t>(generators + 1));
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const int m = std::max(rels[i].first.max_generator(), rels[i].second.max_generator());
    ready[m].push_back(static_cast<int>(i));
  }
  std::vector<int> f(static_cast<std::size_t>(generators), 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int g) -> void {
    if (g > generators) {
      ++count;
      return;
    }
    for (int v = 0; v < size; ++v) {
      f[g - 1] = v;
      bool ok = true;
      for (int i : ready[g]) {
        if (eval(rels[i].first, f) != eval(rels[i].second, f)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, g + 1);
    }
  };
  rec(rec, 1);
  return count;
}

FSQElement gen(int g, bool barred = false, Word tail = {}) {
  return FSQElement(g, barred, std::move(tail));
}

// Substitutes images for tail letters and replaces a base equal to g.
FSQElement substitute(const FSQElement& e, int g, const FSQElement& repl,
                      const std::vector<Word>& images) {
  const Word tail = apply_endomorphism(images, e.tail());
  if (e.base() != g) return FSQElement(e.base(), e.barred(), tail);
  return FSQElement(repl.base(), e.barred() != repl.barred(), repl.tail() * tail);
}

FSQElement shift_down(const FSQElement& e, int g, const std::vector<Word>& images) {
  return FSQElement(e.base() > g ? e.base() - 1 : e.base(), e.barred(),
                    apply_endomorphism(images, e.tail()));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

void validate(const SQPresentation& p) { check_indices(p.generators, p.relations, true); }
void validate(const QPresentation& p) { check_indices(p.generators, p.relations, false); }

SQPresentation plat_symmetric_quandle(const BraidSystem& sys) {
  if (sys.degree() % 2 != 0) throw std::invalid_argument("plat presentation needs even degree");
  SQPresentation p;
  p.generators = sys.degree();
  for (const auto& f : sys.factors()) {
    p.relations.emplace_back(braid_fsq_action(f.conjugator, gen(1)),
                             braid_fsq_action(f.conjugator, gen(2)));
  }
  for (int j = 1; 2 * j <= sys.degree(); ++j) {
    p.relations.emplace_back(gen(2 * j - 1), gen(2 * j, true));
  }
  return p;
}

int evaluate(const FSQElement& e, const std::vector<int>& f, const FiniteSymmetricQuandle& x) {
  int v = f[e.base() - 1];
  if (e.barred()) v = x.bar(v);
  for (Letter l : e.tail().letters()) {
    const int u = f[generator_of(l) - 1];
    v = l > 0 ? x.op(v, u) : x.dual(v, u);
  }
  return v;
}

int evaluate(const FSQElement& e, const std::vector<int>& f, const FiniteQuandle& q) {
  if (e.barred()) throw std::invalid_argument("bar evaluated in a plain quandle");
  int v = f[e.base() - 1];
  for (Letter l : e.tail().letters()) {
    const int u = f[generator_of(l) - 1];
    v = l > 0 ? q.op(v, u) : q.dual(v, u);
  }
  return v;
}

std::uint64_t count_colorings(const SQPresentation& p, const FiniteSymmetricQuandle& x) {
  validate(p);
  return count_assignments(p.generators, x.size(), p.relations,
                           [&](const FSQElement& e, const std::vector<int>& f) {
                             return evaluate(e, f, x);
                           });
}

std::uint64_t count_quandle_colorings(const QPresentation& p, const FiniteQuandle& q) {
  validate(p);
  return count_assignments(p.generators, q.size(), p.relations,
                           [&](const FSQElement& e, const std::vector<int>& f) {
                             return evaluate(e, f, q);
                           });
}

std::vector<int> act_on_coloring(const BraidWord& b, const std::vector<int>& f,
                                 const FiniteSymmetricQuandle& x) {
  if (static_cast<int>(f.size()) != b.degree()) {
    throw std::invalid_argument("coloring size differs from braid degree");
  }
  std::vector<int> t = f;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    const int i = (*it < 0 ? -*it : *it) - 1;
    const int a = t[i], c = t[i + 1];
    if (*it > 0) {
      t[i] = x.dual(c, a);
      t[i + 1] = a;
    } else {
      t[i] = c;
      t[i + 1] = x.op(a, c);
    }
  }
  return t;
}

std::uint64_t count_plat_colorings(const BraidSystem& sys, const FiniteSymmetricQuandle& x) {
  const int m = sys.degree() / 2;
  const int q = x.size();
  if (std::pow(static_cast<double>(q), m) > kMaxColoringSpace) {
    throw GuardExceeded("coloring space " + std::to_string(q) + "^" + std::to_string(m) +
                        " exceeds the coloring guard");
  }
  // x_{2j-1} = ~x_{2j}: choose x_{2j}
  std::vector<int> pick(static_cast<std::size_t>(m), 0);
  std::vector<int> f(static_cast<std::size_t>(2 * m));
  std::uint64_t count = 0;
  while (true) {
    for (int j = 0; j < m; ++j) {
      f[2 * j + 1] = pick[j];
      f[2 * j] = x.bar(pick[j]);
    }
    bool ok = true;
    for (const auto& fac : sys.factors()) {
      const std::vector<int> t = act_on_coloring(fac.conjugator, f, x);
      if (t[0] != t[1]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int j = 0;
    while (j < m && ++pick[j] == q) pick[j++] = 0;
    if (j == m) break;
  }
  return count;
}

SQPresentation connect_sum_P0(const SQPresentation& p, int g) {
  if (g < 1 || g > p.generators) {
    throw std::out_of_range("generator x" + std::to_string(g) + " not in presentation");
  }
  SQPresentation out = p;
  out.relations.emplace_back(gen(g), gen(g, true));
  return out;
}

QPresentation to_quandle_presentation(const SQPresentation& p) {
  validate(p);
  const int k = p.generators;
  auto lift = [k](const FSQElement& e, bool flip) {
    const bool barred = e.barred() != flip;
    return FSQElement(barred ? e.base() + k : e.base(), false, e.tail());
  };
  QPresentation q;
  q.generators = 2 * k;
  for (const auto& [l, r] : p.relations) q.relations.emplace_back(lift(l, false), lift(r, false));
  for (const auto& [l, r] : p.relations) q.relations.emplace_back(lift(l, true), lift(r, true));
  for (int x = 1; x <= k; ++x) {
    for (int y = 1; y <= k; ++y) {
      q.relations.emplace_back(gen(x, false, Word{y + k}), gen(x, false, Word{-y}));
      q.relations.emplace_back(gen(x + k, false, Word{y + k}), gen(x + k, false, Word{-y}));
    }
  }
  return q;
}

SQPresentation eliminate_generator(const SQPresentation& p, int g, int relation_index) {
  validate(p);
  if (g < 1 || g > p.generators) {
    throw std::out_of_range("generator x" + std::to_string(g) + " not in presentation");
  }
  if (relation_index < 0 || relation_index >= static_cast<int>(p.relations.size())) {
    throw std::out_of_range("relation index " + std::to_string(relation_index) + " out of range");
  }
  const auto& [l, r] = p.relations[relation_index];
  auto is_bare = [g](const FSQElement& e) { return e.base() == g && e.tail().empty(); };
  auto uses = [g](const FSQElement& e) {
    if (e.base() == g) return true;
    for (Letter x : e.tail().letters())
      if (generator_of(x) == g) return true;
    return false;
  };
  FSQElement repl;
  if (is_bare(l) && !uses(r)) {
    repl = l.barred() ? fsq_bar(r) : r;
  } else if (is_bare(r) && !uses(l)) {
    repl = r.barred() ? fsq_bar(l) : l;
  } else {
    throw std::invalid_argument("relation " + std::to_string(relation_index) +
                                " does not define x" + std::to_string(g));
  }
  std::vector<Word> images;
  for (int j = 1; j <= p.generators; ++j) images.push_back(Word::generator(j));
  images[g - 1] = repl.associated_word();
  std::vector<Word> renumber;
  for (int j = 1; j <= p.generators; ++j) {
    renumber.push_back(j == g ? Word{} : Word::generator(j > g ? j - 1 : j));
  }
  SQPresentation out;
  out.generators = p.generators - 1;
  for (int i = 0; i < static_cast<int>(p.relations.size()); ++i) {
    if (i == relation_index) continue;
    const auto& [a, b] = p.relations[i];
    out.relations.emplace_back(shift_down(substitute(a, g, repl, images), g, renumber),
                               shift_down(substitute(b, g, repl, images), g, renumber));
  }
  return out;
}

DihedralKind parse_dihedral_kind(std::string_view name) {
  if (name == "odd-id") return DihedralKind::odd_id;
  if (name == "even-id") return DihedralKind::even_id;
  if (name == "4n+2-antipodal") return DihedralKind::antipodal_4n2;
  if (name == "4n-antipodal") return DihedralKind::antipodal_4n;
  if (name == "4n-half") return DihedralKind::half_4n;
  throw std::invalid_argument("unknown dihedral presentation kind '" + std::string(name) + "'");
}

std::string to_string(DihedralKind kind) {
  switch (kind) {
    case DihedralKind::odd_id: return "odd-id";
    case DihedralKind::even_id: return "even-id";
    case DihedralKind::antipodal_4n2: return "4n+2-antipodal";
    case DihedralKind::antipodal_4n: return "4n-antipodal";
    case DihedralKind::half_4n: return "4n-half";
  }
  return "?";
}

SQPresentation dihedral_presentation(DihedralKind kind, int n) {
  if (n < 1) throw std::invalid_argument("dihedral presentation parameter must be >= 1");
  const Word xy = Word{1, 2}.pow(n);
  const Word yx = Word{2, 1}.pow(n);
  SQPresentation p;
  p.generators = 2;
  auto& R = p.relations;
  switch (kind) {
    case DihedralKind::antipodal_4n2:
      R.emplace_back(gen(1, true), gen(2, false, xy));
      R.emplace_back(gen(2, true), gen(1, false, yx));
      break;
    case DihedralKind::antipodal_4n:
      R.emplace_back(gen(1, true), gen(1, false, yx));
      R.emplace_back(gen(2, true), gen(2, false, xy));
      break;
    case DihedralKind::odd_id:
      R.emplace_back(gen(1, true), gen(1));
      R.emplace_back(gen(2, true), gen(2));
      R.emplace_back(gen(1), gen(2, false, xy));
      break;
    case DihedralKind::even_id:
      R.emplace_back(gen(1, true), gen(1));
      R.emplace_back(gen(2, true), gen(2));
      R.emplace_back(gen(1), gen(1, false, yx));
      R.emplace_back(gen(2), gen(2, false, xy));
      break;
    case DihedralKind::half_4n:
      R.emplace_back(gen(1, true), gen(1));
      R.emplace_back(gen(1, true), gen(1, false, yx));
      R.emplace_back(gen(2, true), gen(2, false, xy));
      break;
  }
  return p;
}

int dihedral_target_order(DihedralKind kind, int n) {
  switch (kind) {
    case DihedralKind::odd_id: return 2 * n + 1;
    case DihedralKind::even_id: return 2 * n;
    case DihedralKind::antipodal_4n2: return 4 * n + 2;
    case DihedralKind::antipodal_4n:
    case DihedralKind::half_4n: return 4 * n;
  }
  return 0;
}

FiniteSymmetricQuandle dihedral_target(DihedralKind kind, int n) {
  const int order = dihedral_target_order(kind, n);
  switch (kind) {
    case DihedralKind::odd_id:
    case DihedralKind::even_id:
      return FiniteSymmetricQuandle(dihedral(order), identity_involution(order));
    case DihedralKind::antipodal_4n2:
    case DihedralKind::antipodal_4n:
      return FiniteSymmetricQuandle(dihedral(order), antipodal_map(order));
    case DihedralKind::half_4n:
      return FiniteSymmetricQuandle(dihedral(order), half_antipodal_map(order));
  }
  throw std::invalid_argument("unknown dihedral presentation kind");
}

QPresentation dihedral_quandle_presentation(int order) {
  if (order < 1) throw std::invalid_argument("dihedral quandle order must be >= 1");
  const int n = order / 2;
  QPresentation q;
  q.generators = 2;
  q.relations.emplace_back(gen(1, false, Word{2, 2}), gen(1));
  q.relations.emplace_back(gen(2, false, Word{1, 1}), gen(2));
  if (order % 2 == 1) {
    q.relations.emplace_back(gen(1), gen(2, false, Word{1, 2}.pow(n)));
  } else {
    q.relations.emplace_back(gen(1), gen(1, false, Word{2, 1}.pow(n)));
    q.relations.emplace_back(gen(2), gen(2, false, Word{1, 2}.pow(n)));
  }
  return q;
}

SQPresentation parse_sq_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  SQPresentation p;
  bool have_gens = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'key: value'");
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    if (key == "gens") {
      if (have_gens) throw ParseError(lineno, "duplicate gens");
      try {
        std::size_t used = 0;
        p.generators = std::stoi(value, &used);
        if (used != value.size() || p.generators < 0) throw std::invalid_argument("bad");
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad generator count '" + value + "'");
      }
      have_gens = true;
    } else if (key == "rel") {
      if (!have_gens) throw ParseError(lineno, "rel before gens");
      const auto eq = value.find('=');
      if (eq == std::string::npos) throw ParseError(lineno, "relation needs '='");
      try {
        Relation r{parse_fsq_element(value.substr(0, eq)), parse_fsq_element(value.substr(eq + 1))};
        check_indices(p.generators, {r}, true);
        p.relations.push_back(std::move(r));
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    } else {
      throw ParseError(lineno, "unknown key '" + key + "'");
    }
  }
  if (!have_gens) throw ParseError(0, "missing 'gens:' line");
  return p;
}

std::string format_relation(const Relation& r) { return r.first.str() + " = " + r.second.str(); }

std::string format_sq_presentation(const SQPresentation& p) {
  std::string s = "gens: " + std::to_string(p.generators) + "\n";
  for (const auto& r : p.relations) s += "rel: " + format_relation(r) + "\n";
  return s;
}

}  // namespace surflink
