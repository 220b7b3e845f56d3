#include "surflink/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "surflink/errors.hpp"

namespace surflink {

namespace {

void validate_shape(const OpTable& t) {
  const std::size_t q = t.size();
  if (q == 0) throw std::invalid_argument("empty quandle table");
  for (const auto& row : t) {
    if (row.size() != q) throw std::invalid_argument("quandle table is not square");
    for (int v : row)
      if (v < 0 || v >= static_cast<int>(q)) throw std::invalid_argument("table entry out of range");
  }
}

void require_size(const std::vector<int>& rho, int q) {
  if (static_cast<int>(rho.size()) != q) throw std::invalid_argument("involution size mismatch");
  for (int v : rho)
    if (v < 0 || v >= q) throw std::invalid_argument("involution entry out of range");
}

}  // namespace

std::optional<AxiomViolation> check_quandle_axioms(const OpTable& t) {
  validate_shape(t);
  const int q = static_cast<int>(t.size());
  for (int a = 0; a < q; ++a)
    if (t[a][a] != a) return AxiomViolation{"Q1", {a}};
  for (int b = 0; b < q; ++b) {
    std::vector<int> pre(static_cast<std::size_t>(q), -1);
    for (int a = 0; a < q; ++a) {
      const int c = t[a][b];
      if (pre[c] >= 0) return AxiomViolation{"Q2", {pre[c], a, b}};
      pre[c] = a;
    }
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) return AxiomViolation{"Q3", {a, b, c}};
  return std::nullopt;
}

FiniteQuandle::FiniteQuandle(OpTable op) : op_(std::move(op)) {
  if (auto v = check_quandle_axioms(op_)) {
    std::string w;
    for (int x : v->witness) w += (w.empty() ? "" : ",") + std::to_string(x);
    throw std::invalid_argument("not a quandle: " + v->axiom + " fails at (" + w + ")");
  }
  const int q = size();
  dual_.assign(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) dual_[op_[a][b]][b] = a;
}

bool is_good_involution(const FiniteQuandle& q, const std::vector<int>& rho) {
  const int n = q.size();
  if (static_cast<int>(rho.size()) != n) return false;
  for (int a = 0; a < n; ++a)
    if (rho[a] < 0 || rho[a] >= n || rho[rho[a]] != a) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (rho[q.op(a, b)] != q.op(rho[a], b)) return false;
      if (q.op(a, rho[b]) != q.dual(a, b)) return false;
    }
  return true;
}

FiniteSymmetricQuandle::FiniteSymmetricQuandle(FiniteQuandle q, std::vector<int> rho)
    : quandle_(std::move(q)), rho_(std::move(rho)) {
  require_size(rho_, quandle_.size());
  if (!is_good_involution(quandle_, rho_)) throw std::invalid_argument("rho is not a good involution");
}

FiniteQuandle dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral quandle needs n >= 1");
  OpTable t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (((2 * b - a) % n) + n) % n;
  return FiniteQuandle(std::move(t));
}

FiniteQuandle trivial_quandle(int n) {
  if (n < 1) throw std::invalid_argument("trivial quandle needs n >= 1");
  OpTable t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = a;
  return FiniteQuandle(std::move(t));
}

std::vector<int> identity_involution(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

std::vector<int> antipodal_map(int n) {
  if (n % 2 != 0) throw std::invalid_argument("antipodal map needs even n");
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) r[a] = (a + n / 2) % n;
  return r;
}

std::vector<int> half_antipodal_map(int n) {
  if (n % 4 != 0) throw std::invalid_argument("half-antipodal map needs n divisible by 4");
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) r[a] = (a % 2 == 0) ? (a + n / 2) % n : a;
  return r;
}

std::vector<int> half_antipodal_prime_map(int n) {
  if (n % 4 != 0) throw std::invalid_argument("half-antipodal map needs n divisible by 4");
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) r[a] = (a % 2 == 1) ? (a + n / 2) % n : a;
  return r;
}

std::vector<std::vector<int>> orbits(const FiniteQuandle& q) {
  const int n = q.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int u = find(a), v = find(q.op(a, b));
      if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }
  std::map<int, std::vector<int>> groups;
  for (int a = 0; a < n; ++a) groups[find(a)].push_back(a);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<std::vector<int>> enumerate_good_involutions(const FiniteQuandle& q) {
  const int n = q.size();
  if (n > kMaxInvolutionSearch) {
    throw GuardExceeded("good-involution search limited to " +
                        std::to_string(kMaxInvolutionSearch) + " elements, got " +
                        std::to_string(n));
  }
  // a*rho(b) = a dual b pins rho(b) to columns acting as the inverse of b's.
  std::vector<std::vector<int>> cand(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = q.op(a, c) == q.dual(a, b);
      if (ok) cand[b].push_back(c);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> rho(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self, int b) -> void {
    while (b < n && rho[b] >= 0) ++b;
    if (b == n) {
      if (is_good_involution(q, rho)) out.push_back(rho);
      return;
    }
    for (int c : cand[b]) {
      if (c != b && rho[c] >= 0) continue;
      if (c != b && std::find(cand[c].begin(), cand[c].end(), b) == cand[c].end()) continue;
      rho[b] = c;
      rho[c] = b;
      self(self, b + 1);
      rho[b] = -1;
      rho[c] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

FiniteSymmetricQuandle double_quandle(const FiniteQuandle& q) {
  const int n = q.size();
  OpTable t(static_cast<std::size_t>(2 * n), std::vector<int>(static_cast<std::size_t>(2 * n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t[a][b] = q.op(a, b);
      t[a][n + b] = q.dual(a, b);
      t[n + a][b] = n + q.op(a, b);
      t[n + a][n + b] = n + q.dual(a, b);
    }
  std::vector<int> rho(static_cast<std::size_t>(2 * n));
  for (int a = 0; a < n; ++a) {
    rho[a] = n + a;
    rho[n + a] = a;
  }
  return FiniteSymmetricQuandle(FiniteQuandle(std::move(t)), std::move(rho));
}

bool is_kei(const FiniteQuandle& q) {
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (q.op(q.op(a, b), b) != a) return false;
  return true;
}

std::optional<std::pair<int, int>> component_signature(const FiniteSymmetricQuandle& x) {
  const auto comps = orbits(x.quandle());
  std::vector<int> comp_of(static_cast<std::size_t>(x.size()));
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int a : comps[i]) comp_of[a] = static_cast<int>(i);
  int c = 0, d = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const int target = comp_of[x.bar(comps[i].front())];
    for (int a : comps[i])
      if (comp_of[x.bar(a)] != target) return std::nullopt;
    if (target == static_cast<int>(i)) {
      ++d;
    } else if (target > static_cast<int>(i)) {
      ++c;
    }
  }
  return std::make_pair(c, d);
}

namespace {

using Signature = std::tuple<int, bool, int, int>;

std::vector<Signature> element_signatures(const FiniteSymmetricQuandle& x) {
  const int n = x.size();
  std::vector<int> orbit_size(static_cast<std::size_t>(n));
  for (const auto& o : orbits(x.quandle()))
    for (int a : o) orbit_size[a] = static_cast<int>(o.size());
  std::vector<Signature> sig;
  for (int a = 0; a < n; ++a) {
    int fixed_right = 0, fixed_left = 0;
    for (int b = 0; b < n; ++b) {
      fixed_right += x.op(b, a) == b;
      fixed_left += x.op(a, b) == b;
    }
    sig.emplace_back(orbit_size[a], x.bar(a) == a, fixed_right, fixed_left);
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteSymmetricQuandle& x, const FiniteSymmetricQuandle& y)
      : x_(x), y_(y), sx_(element_signatures(x)), sy_(element_signatures(y)) {}

  std::optional<std::vector<int>> run() {
    auto sorted_x = sx_, sorted_y = sy_;
    std::sort(sorted_x.begin(), sorted_x.end());
    std::sort(sorted_y.begin(), sorted_y.end());
    if (sorted_x != sorted_y) return std::nullopt;
    std::vector<int> f(static_cast<std::size_t>(x_.size()), -1);
    std::vector<int> used(static_cast<std::size_t>(y_.size()), -1);
    if (search(f, used)) return f;
    return std::nullopt;
  }

 private:
  // Assigns f(a) = v and closes under products and rho.
  bool assign(std::vector<int>& f, std::vector<int>& used, int a, int v) const {
    std::vector<std::pair<int, int>> queue{{a, v}};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const auto [p, w] = queue[k];
      if (f[p] >= 0) {
        if (f[p] != w) return false;
        continue;
      }
      if (used[w] >= 0 || sx_[p] != sy_[w]) return false;
      f[p] = w;
      used[w] = p;
      queue.emplace_back(x_.bar(p), y_.bar(w));
      for (int b = 0; b < x_.size(); ++b) {
        if (f[b] < 0) continue;
        queue.emplace_back(x_.op(p, b), y_.op(w, f[b]));
        queue.emplace_back(x_.op(b, p), y_.op(f[b], w));
        queue.emplace_back(x_.dual(p, b), y_.dual(w, f[b]));
        queue.emplace_back(x_.dual(b, p), y_.dual(f[b], w));
      }
    }
    return true;
  }

  bool search(std::vector<int>& f, std::vector<int>& used) const {
    int a = 0;
    while (a < x_.size() && f[a] >= 0) ++a;
    if (a == x_.size()) return true;
    for (int v = 0; v < y_.size(); ++v) {
      if (used[v] >= 0 || sx_[a] != sy_[v]) continue;
      auto f2 = f;
      auto used2 = used;
      if (assign(f2, used2, a, v) && search(f2, used2)) {
        f = std::move(f2);
        used = std::move(used2);
        return true;
      }
    }
    return false;
  }

  const FiniteSymmetricQuandle& x_;
  const FiniteSymmetricQuandle& y_;
  std::vector<Signature> sx_, sy_;
};

}  // namespace

std::optional<std::vector<int>> symmetric_quandle_isomorphic(const FiniteSymmetricQuandle& x,
                                                             const FiniteSymmetricQuandle& y) {
  if (x.size() > kMaxIsomorphismSearch || y.size() > kMaxIsomorphismSearch) {
    throw GuardExceeded("isomorphism search limited to " + std::to_string(kMaxIsomorphismSearch) +
                        " elements");
  }
  if (x.size() != y.size()) return std::nullopt;
  return IsoSearch(x, y).run();
}

std::string to_string(P2Obstruction o) {
  switch (o) {
    case P2Obstruction::obstructed: return "obstructed";
    case P2Obstruction::none: return "none";
    case P2Obstruction::not_applicable: return "not-applicable";
  }
  return "?";
}

P2Obstruction p2_obstruction(const FiniteSymmetricQuandle& x, bool assume_connected) {
  const bool connected = orbits(x.quandle()).size() == 1;
  if (!connected) {
    if (assume_connected) throw std::invalid_argument("symmetric quandle is not connected");
    return P2Obstruction::not_applicable;
  }
  return x.rho() == identity_involution(x.size()) ? P2Obstruction::none : P2Obstruction::obstructed;
}

std::string involution_name(int n, const std::vector<int>& rho) {
  if (rho == identity_involution(n)) return "id";
  if (n % 2 == 0 && rho == antipodal_map(n)) return "antipodal";
  if (n % 4 == 0 && rho == half_antipodal_map(n)) return "half-antipodal";
  if (n % 4 == 0 && rho == half_antipodal_prime_map(n)) return "half-antipodal'";
  std::string s = "rho[";
  for (std::size_t i = 0; i < rho.size(); ++i) s += (i ? " " : "") + std::to_string(rho[i]);
  return s + "]";
}

std::vector<BatteryEntry> dihedral_battery(int max_k) {
  std::vector<BatteryEntry> out;
  for (int k = 1; k <= max_k; ++k) {
    const FiniteQuandle q = dihedral(k);
    for (auto& rho : enumerate_good_involutions(q)) {
      std::string name = "R" + std::to_string(k) + " " + involution_name(k, rho);
      out.push_back({std::move(name), k, FiniteSymmetricQuandle(q, std::move(rho))});
    }
  }
  return out;
}

QuandleFile parse_quandle_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0, size = 0;
  OpTable rows;
  std::optional<std::vector<int>> rho;
  auto ints = [](const std::string& s, int ln) {
    std::istringstream is(s);
    std::vector<int> v;
    std::string tok;
    while (is >> tok) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(ln, "bad integer '" + tok + "'");
      }
    }
    return v;
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (const auto colon = line.find(':'); colon != std::string::npos) {
      std::string key = line.substr(0, colon);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      const auto vals = ints(line.substr(colon + 1), lineno);
      if (key == "size") {
        if (vals.size() != 1 || vals[0] < 1) throw ParseError(lineno, "bad size");
        size = vals[0];
      } else if (key == "rho") {
        if (static_cast<int>(vals.size()) != size) throw ParseError(lineno, "rho needs size entries");
        rho = vals;
      } else {
        throw ParseError(lineno, "unknown key '" + key + "'");
      }
      continue;
    }
    if (size == 0) throw ParseError(lineno, "table row before size");
    auto row = ints(line, lineno);
    if (static_cast<int>(row.size()) != size) throw ParseError(lineno, "row needs size entries");
    rows.push_back(std::move(row));
  }
  if (size == 0) throw ParseError(0, "missing 'size:' line");
  if (static_cast<int>(rows.size()) != size) throw ParseError(0, "expected size table rows");
  try {
    FiniteQuandle q(std::move(rows));
    if (rho && !is_good_involution(q, *rho)) throw std::invalid_argument("rho is not a good involution");
    return {std::move(q), std::move(rho)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string format_quandle(const FiniteQuandle& q, const std::vector<int>* rho) {
  std::ostringstream os;
  os << "size: " << q.size() << '\n';
  for (const auto& row : q.table()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
  if (rho) {
    os << "rho:";
    for (int v : *rho) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace surflink
