#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surflink/braid_system.hpp"
#include "surflink/group.hpp"
#include "surflink/quandle.hpp"

namespace surflink {

struct AnalysisOptions {
  std::int64_t coset_limit = 100000;
  int battery_max = 8;
  bool timing = false;
};

struct StageTiming {
  std::string stage;
  double millis = 0;
};

struct ColoringEntry {
  std::string target;
  std::optional<std::uint64_t> count;  // empty when the guard tripped
  std::string error;
};

struct AnalysisReport {
  int degree = 0;
  int factors = 0;
  int euler_characteristic = 0;
  AdequacyReport weak;
  bool strict = false;
  std::string boundary_error;

  int group_generators = 0;
  int group_relators = 0;
  std::vector<Integer> h1;
  std::optional<std::pair<int, int>> components;
  std::optional<int> genus;
  std::optional<CosetEnumeration> cosets;  // empty when H1 has free rank
  std::string group_error;

  int quandle_generators = 0;
  int quandle_relations = 0;
  std::vector<ColoringEntry> colorings;
  std::string quandle_error;

  std::vector<StageTiming> timings;

  bool guard_tripped() const;
};

AnalysisReport analyze(const BraidSystem& sys, const AnalysisOptions& options = {});

// `key: value` lines under [boundary], [group], [quandle]; a [timing] block
// only when timing was requested.
std::string render(const AnalysisReport& report, const AnalysisOptions& options = {});

// `id`, `antipodal`, `half-antipodal`, `half-antipodal'` or explicit images.
std::vector<int> named_involution(int n, std::string_view name);

// `dihedral <n> [<involution>]`, involution defaulting to id.
FiniteSymmetricQuandle parse_target(std::string_view text);

}  // namespace surflink
