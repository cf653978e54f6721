#include "wakimoto/oscillator.hpp"

#include <stdexcept>

namespace wakimoto {

namespace {

void validate(const BasicOp& op, int n) {
  bool ok = op.kind == OscKind::B ? (1 <= op.i && op.i <= n)
                                  : (1 <= op.i && op.i <= op.j && op.j <= n);
  if (!ok) throw std::invalid_argument("oscillator indices out of range: " + op.to_string());
}

}  // namespace

const char* to_string(OscKind k) {
  switch (k) {
    case OscKind::A: return "A";
    case OscKind::AStar: return "ASTAR";
    case OscKind::B: return "B";
  }
  return "?";
}

std::string BasicOp::to_string() const {
  std::string s = wakimoto::to_string(kind);
  s += "(" + std::to_string(i);
  if (kind != OscKind::B) s += "," + std::to_string(j);
  return s + ";" + std::to_string(mode) + ")";
}

bool is_annihilation(const BasicOp& op, const LieParams& p) {
  switch (op.kind) {
    case OscKind::A: return op.j <= p.r() && op.mode >= 0;
    case OscKind::AStar: return op.j > p.r() || op.mode > 0;
    case OscKind::B: return op.mode > 0;
  }
  return false;
}

bool is_creation(const BasicOp& op, const LieParams& p) {
  if (op.kind == OscKind::B) return op.mode < 0;
  return !is_annihilation(op, p);
}

FockVector apply_basic(const BasicOp& op, const FockVector& v, const LieParams& p) {
  validate(op, p.n());
  switch (op.kind) {
    case OscKind::A: {
      Variable x = Variable::x(op.i, op.j, op.mode);
      if (op.j <= p.r() && op.mode >= 0) return v.derivative(x);
      return v.times_variable(x);
    }
    case OscKind::AStar: {
      Variable x = Variable::x(op.i, op.j, -op.mode);
      if (op.j <= p.r() && op.mode <= 0) return v.times_variable(x);
      return v.derivative(x).scaled(-1);
    }
    case OscKind::B: {
      if (op.mode == 0) return v.scaled(p.lambda(op.i));
      if (op.mode < 0) return v.times_variable(Variable::y(op.i, -op.mode));
      FockVector out;
      for (int j = 1; j <= p.n(); ++j) {
        const Rational& bij = p.gram(op.i, j);
        if (bij != 0) out.add_scaled(bij * op.mode, v.derivative(Variable::y(j, op.mode)));
      }
      return out;
    }
  }
  return {};
}

const char* to_string(ContractionTag t) {
  switch (t) {
    case ContractionTag::Zero: return "ZERO";
    case ContractionTag::IotaZW: return "IOTA_ZW";
    case ContractionTag::IotaWZ: return "IOTA_WZ";
    case ContractionTag::MinusDelta: return "MINUS_DELTA";
  }
  return "?";
}

ContractionClass contraction_class(const OscField& first, const OscField& second,
                                   const LieParams& p) {
  if (first.kind == OscKind::B || second.kind == OscKind::B)
    throw std::invalid_argument("contraction_class accepts only A and ASTAR fields");
  if (first.kind == second.kind || first.root != second.root)
    return {ContractionTag::Zero, 0};
  bool levi = first.root.in_levi(p.r());
  if (first.kind == OscKind::A)
    return levi ? ContractionClass{ContractionTag::IotaZW, 1}
                : ContractionClass{ContractionTag::Zero, 0};
  return levi ? ContractionClass{ContractionTag::IotaWZ, 1}
              : ContractionClass{ContractionTag::MinusDelta, 1};
}

}  // namespace wakimoto
