#pragma once

#include "wakimoto/current.hpp"
#include "wakimoto/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wakimoto {

/// Separates one kernel term whose printed constant is in doubt. The full
/// printed right-hand side is rest + printed * structure; the verifier also
/// solves lhs - rest = c * structure for c.
struct ConstantProbe {
  Rational printed;
  DistRhs structure;
  DistRhs rest;
};

/// One index instance of a catalog identity: either [x(z), y(w)] = rhs, or
/// the distribution identity lhs = rhs when lhs is set.
struct LemmaInstance {
  std::string label;
  CurrentExpr x;
  CurrentExpr y;
  int wx = 1;
  int wy = 1;
  std::optional<DistRhs> lhs;
  DistRhs rhs;
  std::optional<ConstantProbe> probe;
};

/// PRELIM.1-6, COLLECTION.1-4, PRELIM2.a-l in catalog order.
const std::vector<std::string>& lemma_ids();

/// Scope restriction applied when building instances, or empty.
std::string lemma_scope_note(const std::string& id);

/// Throws std::invalid_argument for an unknown id.
std::vector<LemmaInstance> lemma_instances(const std::string& id, const LieParams& p);

}  // namespace wakimoto
