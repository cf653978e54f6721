#pragma once

#include "wakimoto/current.hpp"
#include "wakimoto/fock.hpp"
#include "wakimoto/liealg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wakimoto {

enum class Verdict { Pass, Fail };
const char* to_string(Verdict v);

struct Counterexample {
  std::vector<int> modes;
  FockVector vector;
  FockVector delta;
};

/// Printed versus measured value of a doubtful kernel constant.
struct MeasuredConstant {
  std::string instance;
  std::string printed;
  std::string measured;
};

struct CheckReport {
  CheckReport(std::string id_, LieParams params_)
      : id(std::move(id_)), params(std::move(params_)) {}

  std::string id;
  LieParams params;
  std::uint64_t instances = 0;
  Verdict verdict = Verdict::Pass;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;
  std::vector<MeasuredConstant> measured;
  /// Relation, Heisenberg, highest-weight and character checks decide the
  /// exit status; lemma checks are diagnostic.
  bool authoritative = true;
};

struct CheckSpec {
  std::string id;
  std::vector<LieParams> grid;
  int max_mode = 2;         // pair window [-max_mode, max_mode]
  int triple_mode = 1;      // R6 window
  int num_vectors = 20;
  int max_degree = 3;
  std::uint64_t seed = 1;
};

/// Vacuum first, then count-1 seeded vectors of one or two monomials with
/// variables of |mode| <= mode_window, degree <= max_degree.
std::vector<FockVector> random_test_vectors(std::uint64_t seed, int count, int max_degree,
                                            int mode_window, const LieParams& p);

/// Oscillator commutation relations on seeded vectors; one report per grid point.
std::vector<CheckReport> check_heisenberg(const CheckSpec& spec);

/// R1..R6; one report per grid point.
std::vector<CheckReport> check_relation(const CheckSpec& spec);

/// Catalog identities; one report per grid point, never authoritative.
std::vector<CheckReport> check_lemma(const CheckSpec& spec);

/// Vacuum annihilation profile over modes [-mode_window, mode_window].
CheckReport check_highest_weight(const LieParams& p, int mode_window);

/// Fock bigraded dimensions against PBW counts.
CheckReport check_character(const LieParams& p, EnergyWindow energy_window, int weight_depth);

/// The built-in grid: seven (n, r) shapes, four gamma^2 values each, lambda
/// drawn from {0, 1, -1/2, 3} by a generator seeded from (seed, n, r, index).
std::vector<LieParams> default_grid(std::uint64_t seed);

/// Relation ids R1..R6 and the Heisenberg id.
const std::vector<std::string>& relation_ids();

}  // namespace wakimoto
