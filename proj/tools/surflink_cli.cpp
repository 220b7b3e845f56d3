#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "surflink/analysis.hpp"
#include "surflink/braid_system.hpp"
#include "surflink/errors.hpp"
#include "surflink/fsq.hpp"
#include "surflink/group.hpp"
#include "surflink/quandle.hpp"
#include "surflink/sq_presentation.hpp"

using namespace surflink;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitGuard = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// First non-comment key decides the file kind.
std::string first_key(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    return key;
  }
  return {};
}

FiniteQuandle quandle_source(int dihedral_n, const std::string& file, std::optional<std::vector<int>>* rho) {
  if (!file.empty()) {
    QuandleFile q = parse_quandle_file(slurp(file));
    if (rho) *rho = q.rho;
    return q.quandle;
  }
  if (dihedral_n < 1) throw std::invalid_argument("give --dihedral <n> or --file <path>");
  return dihedral(dihedral_n);
}

std::string render_images(const std::vector<int>& rho) {
  std::string s = "[";
  for (std::size_t i = 0; i < rho.size(); ++i) s += (i ? " " : "") + std::to_string(rho[i]);
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braided surfaces, plat knot groups and symmetric quandles"};
  app.require_subcommand(1);

  AnalysisOptions opts;
  std::string analyze_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for a braid system file");
  analyze_cmd->add_option("file", analyze_path, "braid system file")->required();
  analyze_cmd->add_option("--coset-limit", opts.coset_limit, "coset enumeration limit");
  analyze_cmd->add_option("--battery-max", opts.battery_max, "largest dihedral order in the battery");
  analyze_cmd->add_flag("--timing", opts.timing, "append stage timings");

  std::string act_braid, act_word, act_fsq;
  int act_degree = 0;
  auto* act_cmd = app.add_subcommand("act", "Apply a braid to a free-group word or FSQ element");
  act_cmd->add_option("--braid", act_braid, "braid word, e.g. 's1 s2^-1'")->required();
  auto* word_opt = act_cmd->add_option("--word", act_word, "free group word");
  auto* fsq_opt = act_cmd->add_option("--fsq", act_fsq, "FSQ element, e.g. '~x2 [ x1 ]'");
  word_opt->excludes(fsq_opt);
  act_cmd->add_option("--degree", act_degree, "braid degree (default: smallest that fits)");

  auto* quandle_cmd = app.add_subcommand("quandle", "Finite quandle utilities");
  quandle_cmd->require_subcommand(1);
  int q_dihedral = 0;
  std::string q_file, q_rho, q_iso_check, q_left, q_right;
  auto* gi_cmd = quandle_cmd->add_subcommand("good-involutions", "List all good involutions");
  gi_cmd->add_option("--dihedral", q_dihedral, "dihedral quandle R_n");
  gi_cmd->add_option("--file", q_file, "quandle table file");
  auto* double_cmd = quandle_cmd->add_subcommand("double", "Double D(Q) with its involution");
  double_cmd->add_option("--dihedral", q_dihedral, "dihedral quandle R_n");
  double_cmd->add_option("--file", q_file, "quandle table file");
  double_cmd->add_option("--iso-check", q_iso_check, "target, e.g. 'dihedral 6 antipodal'");
  auto* sig_cmd = quandle_cmd->add_subcommand("signature", "Component signature (c,d)");
  sig_cmd->add_option("--dihedral", q_dihedral, "dihedral quandle R_n");
  sig_cmd->add_option("--file", q_file, "quandle table file");
  sig_cmd->add_option("--rho", q_rho, "involution name or images");
  auto* iso_cmd = quandle_cmd->add_subcommand("iso", "Symmetric quandle isomorphism test");
  iso_cmd->add_option("--left", q_left, "e.g. 'dihedral 6 antipodal'")->required();
  iso_cmd->add_option("--right", q_right, "e.g. 'dihedral 6 id'")->required();

  std::string slide_path, slide_dir = "right";
  int slide_index = 1;
  auto* slide_cmd = app.add_subcommand("slide", "Apply a slide move to a braid system file");
  slide_cmd->add_option("file", slide_path, "braid system file")->required();
  slide_cmd->add_option("--index", slide_index, "1-based position i (pair i, i+1)");
  slide_cmd->add_option("--dir", slide_dir, "left or right")->check(CLI::IsMember({"left", "right"}));

  std::string tc_path;
  std::int64_t tc_limit = 100000;
  auto* tc_cmd = app.add_subcommand("toddcoxeter", "Coset enumeration of a group or plat group");
  tc_cmd->add_option("file", tc_path, "group presentation or braid system file")->required();
  tc_cmd->add_option("--limit", tc_limit, "coset limit");

  std::string col_path, col_target;
  int col_battery = 8;
  auto* col_cmd = app.add_subcommand("colorings", "Coloring counts of an SQ presentation");
  col_cmd->add_option("file", col_path, "SQ presentation or braid system file")->required();
  col_cmd->add_option("--target", col_target, "e.g. 'dihedral 4 antipodal' (default: battery)");
  col_cmd->add_option("--battery-max", col_battery, "largest dihedral order in the battery");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      const BraidSystem sys = parse_braid_system(slurp(analyze_path));
      const AnalysisReport report = analyze(sys, opts);
      std::cout << render(report, opts);
      return report.guard_tripped() ? kExitGuard : 0;
    }

    if (*act_cmd) {
      int degree = act_degree;
      if (degree == 0) {
        const BraidWord probe = parse_braid(act_braid, 1 << 20);
        int need = 2;
        for (int l : probe.letters()) need = std::max(need, (l < 0 ? -l : l) + 1);
        const int gens = *word_opt ? parse_word(act_word).max_generator()
                                   : parse_fsq_element(act_fsq).max_generator();
        degree = std::max(need, gens);
      }
      const BraidWord b = parse_braid(act_braid, degree);
      if (*word_opt) {
        std::cout << artin_action(b, parse_word(act_word)).str() << '\n';
      } else if (*fsq_opt) {
        std::cout << braid_fsq_action(b, parse_fsq_element(act_fsq)).str() << '\n';
      } else {
        throw std::invalid_argument("give --word or --fsq");
      }
      return 0;
    }

    if (*gi_cmd) {
      const FiniteQuandle q = quandle_source(q_dihedral, q_file, nullptr);
      const auto all = enumerate_good_involutions(q);
      std::cout << "[quandle]\n";
      std::cout << "size: " << q.size() << '\n';
      std::cout << "good_involutions: " << all.size() << '\n';
      for (const auto& rho : all) {
        std::cout << "involution: " << render_images(rho);
        if (!q_file.empty()) {
          std::cout << '\n';
        } else {
          std::cout << " (" << involution_name(q.size(), rho) << ")\n";
        }
      }
      return 0;
    }

    if (*double_cmd) {
      const FiniteQuandle q = quandle_source(q_dihedral, q_file, nullptr);
      const FiniteSymmetricQuandle d = double_quandle(q);
      std::cout << "[quandle]\n";
      std::cout << "size: " << d.size() << '\n';
      std::cout << "rho: " << render_images(d.rho()) << '\n';
      if (!q_iso_check.empty()) {
        const auto iso = symmetric_quandle_isomorphic(d, parse_target(q_iso_check));
        std::cout << "iso_check: " << (iso ? "isomorphic" : "not-isomorphic") << '\n';
        if (iso) std::cout << "map: " << render_images(*iso) << '\n';
      } else {
        std::cout << format_quandle(d.quandle(), &d.rho());
      }
      return 0;
    }

    if (*sig_cmd) {
      std::optional<std::vector<int>> file_rho;
      const FiniteQuandle q = quandle_source(q_dihedral, q_file, &file_rho);
      std::vector<int> rho;
      if (!q_rho.empty()) {
        rho = named_involution(q.size(), q_rho);
      } else if (file_rho) {
        rho = *file_rho;
      } else {
        rho = identity_involution(q.size());
      }
      const FiniteSymmetricQuandle x(q, rho);
      std::cout << "[quandle]\n";
      std::cout << "components: " << orbits(q).size() << '\n';
      const auto sig = component_signature(x);
      if (sig) {
        std::cout << "(c,d) = (" << sig->first << "," << sig->second << ")\n";
      } else {
        std::cout << "(c,d) = undefined\n";
      }
      std::cout << "p2_obstruction: " << to_string(p2_obstruction(x, false)) << '\n';
      return 0;
    }

    if (*iso_cmd) {
      const auto iso = symmetric_quandle_isomorphic(parse_target(q_left), parse_target(q_right));
      std::cout << "[quandle]\n";
      std::cout << "iso: " << (iso ? "isomorphic" : "not-isomorphic") << '\n';
      if (iso) std::cout << "map: " << render_images(*iso) << '\n';
      return 0;
    }

    if (*slide_cmd) {
      const BraidSystem sys = parse_braid_system(slurp(slide_path));
      const auto dir = slide_dir == "left" ? SlideDirection::left : SlideDirection::right;
      std::cout << format_braid_system(slide(sys, slide_index, dir));
      return 0;
    }

    if (*tc_cmd) {
      const std::string text = slurp(tc_path);
      const GroupPresentation g = first_key(text) == "degree"
                                      ? plat_knot_group(parse_braid_system(text))
                                      : parse_group_presentation(text);
      const CosetEnumeration r = todd_coxeter(g, tc_limit);
      std::cout << "[group]\n";
      std::cout << "generators: " << g.rank << '\n';
      std::cout << "relators: " << g.relators.size() << '\n';
      if (r.complete) {
        std::cout << "order: " << r.order << '\n';
      } else {
        std::cout << "order: inconclusive (coset limit " << tc_limit << ")\n";
      }
      std::cout << "cosets_defined: " << r.cosets_defined << '\n';
      return 0;
    }

    if (*col_cmd) {
      const std::string text = slurp(col_path);
      const SQPresentation p = first_key(text) == "degree"
                                   ? plat_symmetric_quandle(parse_braid_system(text))
                                   : parse_sq_presentation(text);
      std::cout << "[quandle]\n";
      std::cout << "generators: " << p.generators << '\n';
      std::cout << "relations: " << p.relations.size() << '\n';
      bool tripped = false;
      auto one = [&](const std::string& name, const FiniteSymmetricQuandle& x) {
        std::cout << "colorings " << name << ": ";
        try {
          std::cout << count_colorings(p, x) << '\n';
        } catch (const GuardExceeded& e) {
          std::cout << "guard exceeded: " << e.what() << '\n';
          tripped = true;
        }
      };
      if (!col_target.empty()) {
        one(col_target, parse_target(col_target));
      } else {
        for (const auto& e : dihedral_battery(col_battery)) one(e.name, e.target);
      }
      return tripped ? kExitGuard : 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
