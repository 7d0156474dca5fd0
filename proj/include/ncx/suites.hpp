#pragma once

// Randomized verification suites. Each check line is keyed by
// (identity, level, indices) and aggregated over trials.

#include <cstdint>
#include <string>
#include <vector>

#include "ncx/exactlin.hpp"

namespace ncx {

/// Deliberate corruptions used to show that the suites catch mistakes.
enum class Fault { None, GSignFlip, TauResidue, GroupD0, HomotopyComponent, FaceOffByOne };

const std::vector<std::string>& fault_names();
Fault parse_fault(const std::string& name);
std::string fault_name(Fault f);

struct CheckResult {
  std::string identity;
  std::size_t level = 0;
  std::vector<long long> indices;
  std::uint64_t seed = 0; // first failing trial seed, else the suite seed
  bool pass = true;
  std::size_t trials = 0;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> results;

  bool pass() const;
  std::size_t failures() const;
  void append(const SuiteReport& other);
};

struct SuiteConfig {
  std::size_t n_max = 3;
  std::size_t trials = 20;
  std::uint64_t seed = 24301;
  Ring ring = Ring::prime_field(5);
  Fault fault = Fault::None;
};

/// Random complexes of period 1..n_max with dims <= 4 validate.
SuiteReport verify_generator(const SuiteConfig& cfg);
/// Simplicial identities, functoriality, tau validity and naturality,
/// vertex closed forms, for levels up to n_max.
SuiteReport verify_simplicial(const SuiteConfig& cfg);

SuiteReport verify_g_nilpotency(const SuiteConfig& cfg);
SuiteReport verify_unit(const SuiteConfig& cfg);
SuiteReport verify_counit(const SuiteConfig& cfg);
SuiteReport verify_triangles(const SuiteConfig& cfg);
/// F and G on morphisms and G on homotopies.
SuiteReport verify_functors(const SuiteConfig& cfg);
/// spine(filler(chain)) and filler(spine(C)) against their inputs.
SuiteReport verify_spine_filler(const SuiteConfig& cfg);
SuiteReport verify_augmented(const SuiteConfig& cfg);
/// All of the above equivalence suites.
SuiteReport verify_equivalence(const SuiteConfig& cfg);

/// cone = cone via filler, cone(id) contractible, tau_d natural, triangles.
SuiteReport verify_cone(const SuiteConfig& cfg);
/// R1 at homology level on random composable pairs.
SuiteReport verify_octahedron(const SuiteConfig& cfg);
/// p-homology of sums of full strings vanishes, periods 2..n_max.
SuiteReport verify_full_strings(const SuiteConfig& cfg);
/// Built-in groups: recalage identities up to K = n_max, round trips, L4,
/// presentation conversions, chop functoriality.
SuiteReport verify_group(const SuiteConfig& cfg);

/// Worker count: NCX_THREADS if set, else hardware concurrency.
std::size_t worker_count();

} // namespace ncx
