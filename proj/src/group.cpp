#include "surflink/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "surflink/errors.hpp"

namespace surflink {

GroupPresentation closed_braid_link_group(const BraidWord& b) {
  GroupPresentation p{b.degree(), {}};
  const auto images = artin_images(b);
  for (int i = 1; i <= b.degree(); ++i) {
    p.relators.push_back(images[i - 1] * Word::generator(i, -1));
  }
  return p;
}

GroupPresentation plat_knot_group(const BraidSystem& sys, bool with_plat_relators) {
  GroupPresentation p{sys.degree(), {}};
  for (const auto& f : sys.factors()) {
    const Word a = artin_action(f.conjugator, Word::generator(1));
    const Word b = artin_action(f.conjugator, Word::generator(2));
    p.relators.push_back(a * b.inverse());
  }
  if (with_plat_relators) {
    for (int j = 1; 2 * j <= sys.degree(); ++j) {
      p.relators.push_back(Word{2 * j - 1, 2 * j});
    }
  }
  return p;
}

IntMatrix exponent_sum_matrix(const GroupPresentation& p) {
  IntMatrix M(p.relators.size(), std::vector<Integer>(static_cast<std::size_t>(p.rank), 0));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (Letter l : p.relators[r].letters()) {
      const int g = generator_of(l);
      if (g > p.rank) throw std::invalid_argument("relator uses generator beyond rank");
      M[r][g - 1] += sign_of(l);
    }
  }
  return M;
}

IntMatrix plat_exponent_sum_matrix(const BraidSystem& sys, bool with_plat_relators) {
  const int deg = sys.degree();
  IntMatrix M;
  for (const auto& f : sys.factors()) {
    const std::vector<int> lab = conjugate_labels(f.conjugator);
    std::vector<Integer> row(static_cast<std::size_t>(deg), 0);
    row[lab[0] - 1] += 1;
    row[lab[1] - 1] -= 1;
    M.push_back(std::move(row));
  }
  if (with_plat_relators) {
    for (int j = 1; 2 * j <= deg; ++j) {
      std::vector<Integer> row(static_cast<std::size_t>(deg), 0);
      row[2 * j - 2] = 1;
      row[2 * j - 1] = 1;
      M.push_back(std::move(row));
    }
  }
  return M;
}

std::vector<Integer> abelianization(const GroupPresentation& p) {
  return abelianization(exponent_sum_matrix(p), p.rank);
}

std::vector<Integer> abelianization(const IntMatrix& M, int rank) {
  const SmithForm s = smith_normal_form(M, static_cast<std::size_t>(rank));
  const std::size_t diag = std::min(M.size(), static_cast<std::size_t>(rank));
  std::vector<Integer> torsion;
  int free_rank = rank;
  for (std::size_t i = 0; i < diag; ++i) {
    const Integer& d = s.D[i][i];
    if (d == 0) continue;
    --free_rank;
    if (d > 1) torsion.push_back(d);
  }
  std::sort(torsion.begin(), torsion.end());
  torsion.insert(torsion.end(), static_cast<std::size_t>(free_rank), Integer(0));
  return torsion;
}

std::optional<std::pair<int, int>> classify_H1(const std::vector<Integer>& factors) {
  int c = 0, d = 0;
  for (const auto& f : factors) {
    if (f == 0) {
      ++c;
    } else if (f == 2) {
      ++d;
    } else if (f != 1) {
      return std::nullopt;
    }
  }
  return std::make_pair(c, d);
}

std::string render_H1(const std::vector<Integer>& factors) {
  std::map<Integer, int> torsion;
  int free_rank = 0;
  for (const auto& f : factors) {
    if (f == 0) {
      ++free_rank;
    } else if (f != 1) {
      ++torsion[f];
    }
  }
  std::vector<std::string> parts;
  if (free_rank > 0) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& [t, e] : torsion) parts.push_back("(Z/" + t.str() + ")^" + std::to_string(e));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

namespace {

// Coset table with coincidence handling, following the HLT strategy.
class CosetTable {
 public:
  CosetTable(int rank, std::int64_t limit) : ncols_(2 * rank), limit_(limit) { new_row(); }

  bool overflow() const { return overflow_; }
  std::int64_t defined() const { return static_cast<std::int64_t>(parent_.size()); }
  std::size_t rows() const { return parent_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  std::int64_t live_count() const {
    std::int64_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) n += alive(c);
    return n;
  }

  static int col(Letter l) { return 2 * (generator_of(l) - 1) + (l < 0 ? 1 : 0); }
  static int inv(int x) { return x ^ 1; }

  // Traces `rel` at coset c, defining cosets until the cycle closes.
  void scan_and_fill(int c, const std::vector<int>& rel) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(rel.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][rel[i]] >= 0) f = table_[f][rel[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(rel[j])] >= 0) b = table_[b][inv(rel[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][rel[i]] = b;
        table_[b][inv(rel[i])] = f;
        return;
      }
      if (!define(f, rel[i])) return;
    }
  }

  bool fill_row(int c) {
    for (int x = 0; x < ncols_; ++x) {
      if (!alive(static_cast<std::size_t>(c))) return true;
      if (table_[c][x] < 0 && !define(c, x)) return false;
    }
    return true;
  }

 private:
  void new_row() {
    table_.emplace_back(static_cast<std::size_t>(ncols_), -1);
    parent_.push_back(static_cast<int>(parent_.size()));
  }

  bool define(int c, int x) {
    if (defined() >= limit_) {
      overflow_ = true;
      return false;
    }
    const int d = static_cast<int>(parent_.size());
    new_row();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
    return true;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const int e = queue_[q];
      for (int x = 0; x < ncols_; ++x) {
        const int d = table_[e][x];
        if (d < 0) continue;
        table_[d][inv(x)] = -1;
        const int mu = rep(e), nu = rep(d);
        if (table_[mu][x] >= 0) {
          merge(nu, table_[mu][x]);
        } else if (table_[nu][inv(x)] >= 0) {
          merge(mu, table_[nu][inv(x)]);
        } else {
          table_[mu][x] = nu;
          table_[nu][inv(x)] = mu;
        }
      }
    }
  }

  int ncols_;
  std::int64_t limit_;
  bool overflow_ = false;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

}  // namespace

CosetEnumeration todd_coxeter(const GroupPresentation& p, std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("coset limit must be at least 1");
  if (p.rank < 1) return {true, 1, 1};
  std::vector<std::vector<int>> rels;
  for (const auto& r : p.relators) {
    if (r.empty()) continue;
    if (r.max_generator() > p.rank) throw std::invalid_argument("relator uses generator beyond rank");
    std::vector<int> cols;
    for (Letter l : r.letters()) cols.push_back(CosetTable::col(l));
    rels.push_back(std::move(cols));
  }
  CosetTable t(p.rank, limit);
  for (std::size_t c = 0; c < t.rows(); ++c) {
    if (!t.alive(c)) continue;
    for (const auto& rel : rels) {
      t.scan_and_fill(static_cast<int>(c), rel);
      if (t.overflow()) return {false, 0, t.defined()};
      if (!t.alive(c)) break;
    }
    if (t.alive(c) && !t.fill_row(static_cast<int>(c))) return {false, 0, t.defined()};
  }
  return {true, t.live_count(), t.defined()};
}

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> product, int identity)
    : product_(std::move(product)), identity_(identity) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("empty group table");
  if (identity < 0 || identity >= n) throw std::invalid_argument("identity out of range");
  for (const auto& row : product_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (product_[identity][a] != a || product_[a][identity] != a)
      throw std::invalid_argument("identity law fails");
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (product_[a][b] == identity && product_[b][a] == identity) inverse_[a] = b;
    if (inverse_[a] < 0) throw std::invalid_argument("inverse law fails");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (product_[product_[a][b]][c] != product_[a][product_[b][c]])
          throw std::invalid_argument("associativity fails");
}

int FiniteGroupTable::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroupTable::pow(int a, int e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = identity_;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int quaternion_element(int k, int i, int j) {
  const int n = 4 * k;
  return ((i % n) + n) % n + n * j;
}

FiniteGroupTable generalized_quaternion(int k) {
  if (k < 1) throw std::invalid_argument("generalized_quaternion needs k >= 1");
  const int n = 4 * k;
  std::vector<std::vector<int>> prod(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      const int i = x % n, j = x / n, s = y % n, t = y / n;
      // a^i b^j a^s b^t = a^{i + (-1)^j s} b^{j+t}, and b^2 = a^{2k}
      int e = i + (j ? -s : s);
      int bj = j + t;
      if (bj == 2) {
        e += 2 * k;
        bj = 0;
      }
      prod[x][y] = quaternion_element(k, e, bj);
    }
  return FiniteGroupTable(std::move(prod), 0);
}

GroupPresentation generalized_quaternion_presentation(int k) {
  const Word a = Word::generator(1), b = Word::generator(2);
  return {2, {a.pow(4 * k), b.pow(2) * a.pow(-2 * k), b.inverse() * a * b * a}};
}

GroupPresentation displayed_quaternion_presentation(int k) {
  const Word a = Word::generator(1), b = Word::generator(2);
  return {2, {a.pow(4 * k), b.pow(2) * a.pow(-k), b.inverse() * a * b * a}};
}

namespace {

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t count_group_homs(const GroupPresentation& p, const FiniteGroupTable& T,
                               std::uint64_t limit) {
  const auto space = checked_power(static_cast<std::uint64_t>(T.order()), p.rank, limit);
  if (space > limit) {
    throw GuardExceeded("hom search space " + std::to_string(T.order()) + "^" +
                        std::to_string(p.rank) + " exceeds " + std::to_string(limit) +
                        "; use todd_coxeter instead");
  }
  // Each relator is checked as soon as its largest generator is assigned.
  std::vector<std::vector<const Word*>> ready(static_cast<std::size_t>(p.rank) + 1);
  for (const auto& r : p.relators) {
    if (r.max_generator() > p.rank) throw std::invalid_argument("relator uses generator beyond rank");
    ready[static_cast<std::size_t>(r.max_generator())].push_back(&r);
  }
  for (const Word* r : ready[0])
    if (!r->empty()) return 0;

  std::vector<int> img(static_cast<std::size_t>(p.rank) + 1, 0);
  auto holds = [&](const Word& w) {
    int x = T.identity();
    for (Letter l : w.letters()) {
      const int g = img[generator_of(l)];
      x = T.mul(x, l > 0 ? g : T.inv(g));
    }
    return x == T.identity();
  };
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int g) -> void {
    if (g > p.rank) {
      ++count;
      return;
    }
    for (int v = 0; v < T.order(); ++v) {
      img[g] = v;
      bool ok = true;
      for (const Word* r : ready[g])
        if (!holds(*r)) {
          ok = false;
          break;
        }
      if (ok) self(self, g + 1);
    }
  };
  rec(rec, 1);
  return count;
}

GroupPresentation parse_group_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  GroupPresentation p;
  bool have_gens = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    const auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'key: value'");
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    const std::string value = line.substr(colon + 1);
    if (key == "gens") {
      try {
        p.rank = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad generator count");
      }
      if (p.rank < 1) throw ParseError(lineno, "generator count must be positive");
      have_gens = true;
    } else if (key == "rel") {
      if (!have_gens) throw ParseError(lineno, "rel before gens");
      try {
        Word w = parse_word(value);
        if (w.max_generator() > p.rank) throw std::invalid_argument("generator beyond gens");
        p.relators.push_back(std::move(w));
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

std::string format_group_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  os << "gens: " << p.rank << '\n';
  for (const auto& r : p.relators) os << "rel: " << r.str() << '\n';
  return os.str();
}

}  // namespace surflink
