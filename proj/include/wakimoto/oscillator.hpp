#pragma once

#include "wakimoto/fock.hpp"
#include "wakimoto/liealg.hpp"

#include <string>

namespace wakimoto {

enum class OscKind { A, AStar, B };
const char* to_string(OscKind k);

/// One oscillator mode: a_{ij,m}, a*_{ij,m} or b_{i,m}. For B only i is used.
struct BasicOp {
  OscKind kind;
  int i;
  int j;
  int mode;

  static BasicOp a(int i, int j, int m) { return {OscKind::A, i, j, m}; }
  static BasicOp astar(int i, int j, int m) { return {OscKind::AStar, i, j, m}; }
  static BasicOp b(int i, int m) { return {OscKind::B, i, i, m}; }

  std::string to_string() const;
  friend bool operator==(const BasicOp&, const BasicOp&) = default;
};

/// Kills the vacuum. b_{i,0} is a scalar and counts as neither.
bool is_annihilation(const BasicOp& op, const LieParams& p);
bool is_creation(const BasicOp& op, const LieParams& p);

/// a_{ij,m}: d/dx_{ij,m} if j <= r and m >= 0, else multiplication by x_{ij,m}.
/// a*_{ij,m}: x_{ij,-m} if j <= r and m <= 0, else -d/dx_{ij,-m}.
/// b_{i,0} = lambda_i, b_{i,-m} = y_{i,m}, b_{i,m} = m sum_j B_ij d/dy_{j,m}.
/// Throws std::invalid_argument for indices outside rank n.
FockVector apply_basic(const BasicOp& op, const FockVector& v, const LieParams& p);

enum class ContractionTag { Zero, IotaZW, IotaWZ, MinusDelta };
const char* to_string(ContractionTag t);

struct ContractionClass {
  ContractionTag tag;
  Rational multiplier;
};

/// An oscillator field without mode: kind plus root indices.
struct OscField {
  OscKind kind;
  Root root;
};

/// Contraction of first(z) with second(w). Only A and AStar are accepted.
ContractionClass contraction_class(const OscField& first, const OscField& second,
                                   const LieParams& p);

}  // namespace wakimoto
