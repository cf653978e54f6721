#pragma once

#include "wakimoto/rational.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace wakimoto {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using RationalMatrix = Matrix<Rational>;

/// Integer coefficients over the simple-root basis alpha_1..alpha_n.
using Weight = Eigen::VectorXi;

/// Parameters of one intermediate Wakimoto module: rank n, split point r,
/// the value gamma^2 and the Cartan eigenvalues lambda_i = lambda(H_i).
///
/// Immutable after construction. The Gram matrix of the auxiliary Heisenberg
/// algebra is computed once here since every b-mode application needs it.
class LieParams {
 public:
  /// Throws std::invalid_argument unless n >= 1, 0 <= r <= n, gamma_sq != 0
  /// and lambda has exactly n entries.
  LieParams(int n, int r, Rational gamma_sq, std::vector<Rational> lambda);

  int n() const { return n_; }
  int r() const { return r_; }
  const Rational& gamma_sq() const { return gamma_sq_; }
  const std::vector<Rational>& lambda() const { return lambda_; }
  /// 1-based.
  const Rational& lambda(int i) const { return lambda_.at(i - 1); }

  /// The central value gamma^2 - (r+1); always derived.
  Rational level() const { return gamma_sq_ - (r_ + 1); }
  bool is_level_zero() const { return level() == 0; }

  /// Entries B_ij of the b-Heisenberg Gram matrix (0-based storage).
  const RationalMatrix& gram() const { return gram_; }
  const Rational& gram(int i, int j) const { return gram_(i - 1, j - 1); }

  friend bool operator==(const LieParams& a, const LieParams& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.gamma_sq_ == b.gamma_sq_ &&
           a.lambda_ == b.lambda_;
  }

 private:
  int n_;
  int r_;
  Rational gamma_sq_;
  std::vector<Rational> lambda_;
  RationalMatrix gram_;
};

/// Positive root alpha_k + ... + alpha_l, 1 <= k <= l <= n.
struct Root {
  int k;
  int l;

  /// Member of the positive roots of the sl(r+1) Levi factor.
  bool in_levi(int r) const { return l <= r; }
  auto operator<=>(const Root&) const = default;
};

std::vector<Root> positive_roots(int n);
/// Delta^+_r: roots supported on alpha_1..alpha_r (empty for r = 0).
std::vector<Root> levi_roots(int r);
Weight root_weight(int n, Root rt);
Weight simple_root(int n, int i);

/// A_n: 2 on the diagonal, -1 on the first off-diagonals.
template <class Scalar = int>
Matrix<Scalar> cartan_matrix(int n) {
  Matrix<Scalar> a = Matrix<Scalar>::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = Scalar(2);
    if (i + 1 < n) {
      a(i, i + 1) = Scalar(-1);
      a(i + 1, i) = Scalar(-1);
    }
  }
  return a;
}

/// (alpha_i | alpha_kl) by the closed four-delta formula.
int root_pairing(int i, Root rt);

/// (alpha_i | w) for a weight given in simple-root coordinates.
int weight_pairing(int i, const Weight& w);

/// Gram matrix B of the b-Heisenberg algebra. Evaluates the entrywise
/// formula and the block formula independently; a disagreement throws
/// std::logic_error.
RationalMatrix b_matrix(int n, int r, const Rational& gamma_sq);
RationalMatrix b_matrix(const LieParams& p);

Rational central_charge(const LieParams& p);

enum class Generator { E, F, H };
const char* to_string(Generator g);

/// Set of integer modes: empty, all of Z, or a half line m >= from.
class ModeSet {
 public:
  static ModeSet none() { return ModeSet(Kind::None, 0); }
  static ModeSet all() { return ModeSet(Kind::All, 0); }
  static ModeSet at_least(int from) { return ModeSet(Kind::AtLeast, from); }

  bool contains(int m) const;
  std::string describe() const;
  friend bool operator==(const ModeSet&, const ModeSet&) = default;

 private:
  enum class Kind { None, All, AtLeast };
  ModeSet(Kind k, int from) : kind_(k), from_(from) {}
  Kind kind_;
  int from_;
};

/// Which modes of the simple generators kill 1 (x) 1, plus the eigenvalue
/// rows H_{i,0} -> lambda_i and c -> gamma^2 - (r+1).
struct AnnihilationProfile {
  std::vector<ModeSet> e;
  std::vector<ModeSet> f;
  std::vector<ModeSet> h;
  std::vector<Rational> cartan_eigenvalues;
  Rational central;

  /// 1-based index. H_{i,0} is an eigen-row and never listed in h.
  const ModeSet& kills(Generator g, int i) const;
};

/// The profile realized by the free-field currents: on the i <= r block E
/// and F trade places relative to the literal Borel subalgebra. E_{i,0}
/// kills the vacuum for i <= r only when lambda_i = 0.
AnnihilationProfile expected_annihilation_profile(const LieParams& p);

/// Simple-generator content of the literal Borel subalgebra B-bar_r.
AnnihilationProfile literal_borel_profile(const LieParams& p);

struct GradedGenerator {
  std::string label;
  int energy;
  Weight weight;
};

struct Bidegree {
  int energy;
  std::vector<int> weight;
  auto operator<=>(const Bidegree&) const = default;
};

using GradedDims = std::map<Bidegree, std::uint64_t>;

struct EnergyWindow {
  int lo;
  int hi;
  bool contains(int e) const { return lo <= e && e <= hi; }
};

/// Counts monomials of degree <= max_factors in the given free generators
/// whose total energy lies in the window, keyed by total bidegree.
GradedDims count_graded_monomials(std::span<const GradedGenerator> gens,
                                  EnergyWindow window, int max_factors);

enum class BorelConvention { Realized, Literal };

/// Loop generators complementary to the annihilating subalgebra, one per
/// root/mode slot plus n Cartan directions per negative mode, with energy
/// inside the window. Energy of X (x) t^m is -m.
std::vector<GradedGenerator> pbw_generators(const LieParams& p, EnergyWindow window,
                                            BorelConvention convention);

/// PBW graded dimensions of the Verma-type module, truncated to generators
/// and totals inside the energy window and to at most weight_depth factors.
GradedDims pbw_graded_dims(const LieParams& p, EnergyWindow window, int weight_depth);

}  // namespace wakimoto
