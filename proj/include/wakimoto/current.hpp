#pragma once

#include "wakimoto/fock.hpp"
#include "wakimoto/liealg.hpp"
#include "wakimoto/oscillator.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wakimoto {

/// Basic fields. Weights: A 1, AStar 0, B 1, DAStar 1 where DAStar is the
/// derivative of a*, whose mode q acts as (-q) a*_q.
enum class FieldKind { A, AStar, B, DAStar };

int field_weight(FieldKind k);
const char* to_string(FieldKind k);

struct FieldFactor {
  FieldKind kind;
  int i;
  int j;

  static FieldFactor a(int i, int j) { return {FieldKind::A, i, j}; }
  static FieldFactor astar(int i, int j) { return {FieldKind::AStar, i, j}; }
  static FieldFactor b(int i) { return {FieldKind::B, i, i}; }
  static FieldFactor dastar(int i, int j) { return {FieldKind::DAStar, i, j}; }

  int weight() const { return field_weight(kind); }
  std::string to_string() const;
  friend bool operator==(const FieldFactor&, const FieldFactor&) = default;
};

/// coeff * :f_1 :f_2 ... f_k::, nested to the right, outermost first.
struct CurrentTerm {
  Rational coeff;
  std::vector<FieldFactor> factors;
};

/// Homogeneous sum of normal-ordered terms. With weight w the expression
/// expands as sum_m X_m z^{-m-w}, and the factor modes of each term add up to m.
class CurrentExpr {
 public:
  explicit CurrentExpr(std::string label = {}) : label_(std::move(label)) {}

  /// Throws std::invalid_argument if the term's weight differs from earlier
  /// terms or the factor list is empty. Zero coefficients are dropped.
  CurrentExpr& add(Rational coeff, std::vector<FieldFactor> factors);

  const std::vector<CurrentTerm>& terms() const { return terms_; }
  int weight() const { return weight_; }
  const std::string& label() const { return label_; }
  std::string to_string() const;

 private:
  std::string label_;
  std::vector<CurrentTerm> terms_;
  int weight_ = -1;
};

CurrentExpr single_field(FieldFactor f);

enum class CurrentKind { E, F, H, CalH };

/// Free-field currents E_i, F_i, H_i = CalH_i + b_i. Throws
/// std::invalid_argument for i outside 1..n.
CurrentExpr build_current(CurrentKind kind, int i, const LieParams& p);

/// Raised when a mode sum has no finite range, i.e. a term pairs an
/// all-creation field with a factor unbounded in the opposite direction.
class UnboundedModes : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True when the normal-ordered product has finitely many mode assignments
/// for each total mode: either no all-creation factor (a_{ij} with j > r), or
/// exactly one and every other factor without creation modes.
bool is_field_product(std::span<const FieldFactor> factors, const LieParams& p);

/// f_q applied to v.
FockVector apply_field(const FieldFactor& f, int q, const FockVector& v, const LieParams& p);

/// Optional scalar weight of one mode assignment, evaluated at the leaf.
using ModeWeight = std::function<Rational(std::span<const int> modes)>;

/// Applies :f_1 ... f_k: with factor modes summing to total. When weight is
/// given, each mode assignment is multiplied by weight(modes).
FockVector apply_normal_ordered(std::span<const FieldFactor> factors, int total,
                                const FockVector& v, const LieParams& p,
                                const ModeWeight* weight = nullptr);

/// X_m v.
FockVector mode_apply(const CurrentExpr& cur, int m, const FockVector& v, const LieParams& p);

/// M with X_q v = 0 for every q > M. Throws UnboundedModes when no finite
/// bound exists (an all-creation factor, e.g. a_{ij} with j > r).
int upper_mode_bound(const CurrentExpr& cur, const FockVector& v, const LieParams& p);
int upper_mode_bound(const FieldFactor& f, const FockVector& v, const LieParams& p);

/// X_m Y_n v - Y_n X_m v.
FockVector mode_bracket_apply(const CurrentExpr& x, int m, const CurrentExpr& y, int n,
                              const FockVector& v, const LieParams& p);

enum class Kernel { Delta, DwDelta };

/// Written forms accepted by the builders; normalized to Kernel on entry.
enum class KernelForm { DeltaZW, DeltaWZ, DwDelta, MinusDzDelta };
Kernel normalize(KernelForm k);

enum class Point { Z, W };

struct PlacedFactor {
  FieldFactor field;
  Point point;
};

/// coeff * :f_1(p_1) ... f_k(p_k): * kernel. An empty factor list is a scalar.
struct DistTerm {
  Rational coeff;
  std::vector<PlacedFactor> factors;
  Kernel kernel;
};

/// Two-variable distribution: finite sum of DistTerms.
class DistRhs {
 public:
  DistRhs& add_scalar(Rational c, KernelForm k);
  /// c * X(at) * kernel, expanded term by term.
  DistRhs& add_current(Rational c, const CurrentExpr& x, Point at, KernelForm k);
  /// c * :X(z) Y(w): * kernel.
  DistRhs& add_currents(Rational c, const CurrentExpr& xz, const CurrentExpr& yw, KernelForm k);
  DistRhs& add_product(Rational c, std::vector<PlacedFactor> factors, KernelForm k);

  const std::vector<DistTerm>& terms() const { return terms_; }

 private:
  std::vector<DistTerm> terms_;
};

/// Coefficient of z^{-m-wx} w^{-n-wy} of the distribution, applied to v.
/// wx and wy are the weights of the bracketed fields on the other side.
FockVector rhs_mode_apply(const DistRhs& rhs, int m, int n, const FockVector& v,
                          const LieParams& p, int wx = 1, int wy = 1);

}  // namespace wakimoto
