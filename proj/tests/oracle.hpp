#pragma once

// Independent expansion of current modes: enumerate every mode tuple in a box,
// order each word with creators left and annihilators right, and apply the
// basic operators one by one. Shares only apply_basic with the engine.

#include "wakimoto/current.hpp"
#include "wakimoto/oscillator.hpp"

#include <stdexcept>
#include <vector>

namespace oracle {

using namespace wakimoto;

inline BasicOp to_op(const FieldFactor& f, int q) {
  switch (f.kind) {
    case FieldKind::A: return BasicOp::a(f.i, f.j, q);
    case FieldKind::AStar:
    case FieldKind::DAStar: return BasicOp::astar(f.i, f.j, q);
    case FieldKind::B: return BasicOp::b(f.i, q);
  }
  throw std::logic_error("bad field");
}

inline FockVector apply_word(const std::vector<FieldFactor>& fs, const std::vector<int>& modes,
                             const FockVector& v, const LieParams& p) {
  Rational c = 1;
  std::vector<BasicOp> creators, others;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (fs[k].kind == FieldKind::DAStar) c *= -modes[k];
    BasicOp op = to_op(fs[k], modes[k]);
    (is_creation(op, p) ? creators : others).push_back(op);
  }
  if (c == 0) return {};
  FockVector out = v;
  for (auto it = others.rbegin(); it != others.rend(); ++it) out = apply_basic(*it, out, p);
  for (auto it = creators.rbegin(); it != creators.rend(); ++it) out = apply_basic(*it, out, p);
  return out.scaled(c);
}

/// X_m v by brute force over modes in [-box, box]. Sets edge_hit when a tuple
/// touching the box boundary contributes, meaning the box was too small.
inline FockVector mode_apply(const CurrentExpr& cur, int m, const FockVector& v,
                             const LieParams& p, int box, bool& edge_hit) {
  FockVector out;
  for (const auto& t : cur.terms()) {
    const int k = static_cast<int>(t.factors.size());
    std::vector<int> modes(k, -box);
    while (true) {
      int head = 0;
      for (int s = 0; s + 1 < k; ++s) head += modes[s];
      modes[k - 1] = m - head;
      if (-box <= modes[k - 1] && modes[k - 1] <= box) {
        FockVector w = apply_word(t.factors, modes, v, p);
        if (!w.is_zero()) {
          for (int q : modes)
            if (q == box || q == -box) edge_hit = true;
          out.add_scaled(t.coeff, w);
        }
      }
      int s = k - 2;
      while (s >= 0 && modes[s] == box) modes[s--] = -box;
      if (s < 0) break;
      ++modes[s];
    }
  }
  return out;
}

}  // namespace oracle
