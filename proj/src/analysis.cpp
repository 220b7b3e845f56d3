#include "surflink/analysis.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "surflink/errors.hpp"
#include "surflink/sq_presentation.hpp"

namespace surflink {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

bool is_guard(const std::string& error) { return error.rfind("guard exceeded", 0) == 0; }

}  // namespace

bool AnalysisReport::guard_tripped() const {
  if (is_guard(boundary_error) || is_guard(group_error) || is_guard(quandle_error)) return true;
  for (const auto& c : colorings)
    if (is_guard(c.error)) return true;
  return false;
}

AnalysisReport analyze(const BraidSystem& sys, const AnalysisOptions& options) {
  AnalysisReport r;
  r.degree = sys.degree();
  r.factors = sys.size();
  r.euler_characteristic = euler_characteristic(sys);

  Stopwatch boundary_clock;
  try {
    r.weak = check_weak_boundary(sys);
    r.strict = check_strict_boundary(sys);
  } catch (const GuardExceeded& e) {
    r.boundary_error = std::string("guard exceeded: ") + e.what();
  }
  r.timings.push_back({"boundary", boundary_clock.millis()});

  Stopwatch group_clock;
  try {
    r.group_generators = sys.degree();
    r.group_relators = sys.size() + sys.degree() / 2;
    r.h1 = abelianization(plat_exponent_sum_matrix(sys), sys.degree());
    r.components = classify_H1(r.h1);
    if (r.components) r.genus = genus_from(r.components->first, r.components->second,
                                           r.euler_characteristic);
    bool free_rank = false;
    for (const auto& f : r.h1)
      if (f == 0) free_rank = true;
    if (!free_rank) r.cosets = todd_coxeter(plat_knot_group(sys), options.coset_limit);
  } catch (const GuardExceeded& e) {
    r.group_error = std::string("guard exceeded: ") + e.what();
  }
  r.timings.push_back({"group", group_clock.millis()});

  Stopwatch quandle_clock;
  r.quandle_generators = sys.degree();
  r.quandle_relations = sys.size() + sys.degree() / 2;
  for (const auto& entry : dihedral_battery(options.battery_max)) {
    ColoringEntry c{entry.name, std::nullopt, {}};
    try {
      c.count = count_plat_colorings(sys, entry.target);
    } catch (const GuardExceeded& e) {
      c.error = std::string("guard exceeded: ") + e.what();
    }
    r.colorings.push_back(std::move(c));
  }
  r.timings.push_back({"quandle", quandle_clock.millis()});
  return r;
}

std::string render(const AnalysisReport& r, const AnalysisOptions& options) {
  std::ostringstream os;
  os << "[boundary]\n";
  os << "degree: " << r.degree << '\n';
  os << "factors: " << r.factors << '\n';
  os << "euler_characteristic: " << r.euler_characteristic << '\n';
  if (!r.boundary_error.empty()) {
    os << "error: " << r.boundary_error << '\n';
  } else {
    os << "weak_boundary: " << to_string(r.weak.verdict) << '\n';
    os << "pairing_check: " << (r.weak.pairing.pass ? "pass" : "fail") << '\n';
    if (!r.weak.pairing.pass) {
      os << "pairing_failure: pair " << r.weak.pairing.pair << " -> {" << r.weak.pairing.image.first
         << "," << r.weak.pairing.image.second << "}\n";
    }
    os << "kernel_check: " << (r.weak.kernel.pass ? "pass" : "fail") << '\n';
    if (!r.weak.kernel.pass) os << "kernel_failure: pair " << r.weak.kernel.failing_pair << '\n';
    os << "strict_boundary: " << (r.strict ? "true" : "false") << '\n';
  }

  os << "[group]\n";
  os << "generators: " << r.group_generators << '\n';
  os << "relators: " << r.group_relators << '\n';
  if (!r.group_error.empty() && r.h1.empty() && r.group_generators == 0) {
    os << "error: " << r.group_error << '\n';
  } else {
    os << "H1: " << render_H1(r.h1) << '\n';
    os << "invariant_factors:";
    if (r.h1.empty()) os << " none";
    for (const auto& f : r.h1) os << ' ' << f;
    os << '\n';
    if (r.components) {
      os << "components: (c,d) = (" << r.components->first << "," << r.components->second << ")\n";
      os << "genus: " << *r.genus << '\n';
    } else {
      os << "components: unclassified\n";
    }
    if (!r.group_error.empty()) {
      os << "error: " << r.group_error << '\n';
    } else if (!r.cosets) {
      os << "order: infinite (H1 has free rank)\n";
    } else if (r.cosets->complete) {
      os << "order: " << r.cosets->order << '\n';
      os << "cosets_defined: " << r.cosets->cosets_defined << '\n';
    } else {
      os << "order: inconclusive (coset limit " << options.coset_limit << ")\n";
      os << "cosets_defined: " << r.cosets->cosets_defined << '\n';
    }
  }

  os << "[quandle]\n";
  os << "generators: " << r.quandle_generators << '\n';
  os << "relations: " << r.quandle_relations << '\n';
  if (!r.quandle_error.empty()) os << "error: " << r.quandle_error << '\n';
  for (const auto& c : r.colorings) {
    os << "colorings " << c.target << ": ";
    if (c.count) {
      os << *c.count;
    } else {
      os << c.error;
    }
    os << '\n';
  }

  if (options.timing) {
    os << "[timing]\n";
    for (const auto& t : r.timings) {
      os << t.stage << "_ms: " << static_cast<long long>(t.millis + 0.5) << '\n';
    }
  }
  return os.str();
}

std::vector<int> named_involution(int n, std::string_view name) {
  if (name == "id") return identity_involution(n);
  if (name == "antipodal") return antipodal_map(n);
  if (name == "half-antipodal") return half_antipodal_map(n);
  if (name == "half-antipodal'") return half_antipodal_prime_map(n);
  std::istringstream in{std::string(name)};
  std::vector<int> rho;
  int v = 0;
  while (in >> v) rho.push_back(v);
  if (!in.eof() || static_cast<int>(rho.size()) != n) {
    throw std::invalid_argument("unknown involution '" + std::string(name) + "'");
  }
  return rho;
}

FiniteSymmetricQuandle parse_target(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  int n = 0;
  if (!(in >> kind >> n) || kind != "dihedral" || n < 1) {
    throw std::invalid_argument("target must read 'dihedral <n> [<involution>]', got '" +
                                std::string(text) + "'");
  }
  std::string rest;
  std::getline(in, rest);
  rest.erase(0, rest.find_first_not_of(" \t"));
  rest.erase(rest.find_last_not_of(" \t") + 1);
  return FiniteSymmetricQuandle(dihedral(n), named_involution(n, rest.empty() ? "id" : rest));
}

}  // namespace surflink
