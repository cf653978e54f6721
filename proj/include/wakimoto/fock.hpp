#pragma once

#include "wakimoto/liealg.hpp"
#include "wakimoto/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wakimoto {

enum class Family : std::uint8_t { X = 0, Y = 1 };

// Packed as family | i | j | biased mode so integer order is the canonical order.
class Variable {
 public:
  static Variable x(int i, int j, int mode);
  static Variable y(int i, int mode);

  Family family() const { return static_cast<Family>(key_ >> 56); }
  int i() const { return static_cast<int>((key_ >> 48) & 0xff); }
  int j() const { return static_cast<int>((key_ >> 40) & 0xff); }
  int mode() const {
    return static_cast<int>(static_cast<std::int64_t>(key_ & 0xffffffffULL) - kBias);
  }
  std::uint64_t key() const { return key_; }

  /// x[i,j,m] or y[i,m].
  std::string to_string() const;

  auto operator<=>(const Variable&) const = default;

 private:
  static constexpr std::int64_t kBias = std::int64_t{1} << 31;
  explicit Variable(std::uint64_t key) : key_(key) {}
  std::uint64_t key_;
};

/// True when the variable exists in C[x] (x) C[y] for rank n: 1 <= i <= j <= n
/// for x, 1 <= i <= n and mode >= 1 for y.
bool is_valid(const Variable& v, int n);

/// Commutative monomial: strictly increasing variables with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);  // canonicalizes

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int degree() const;
  int exponent(const Variable& v) const;

  Monomial times(const Variable& v, int e = 1) const;
  /// Removes one power of v; precondition exponent(v) >= 1.
  Monomial divided(const Variable& v) const;
  Monomial times(const Monomial& other) const;

  /// "1" for the empty monomial, else factors joined by '*', powers as ^e.
  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Finite exact linear combination of monomials. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
class FockVector {
 public:
  using Terms = std::map<Monomial, Rational>;

  FockVector() = default;
  static FockVector vacuum();
  static FockVector basis(Monomial m, Rational c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  /// this += c * w.
  FockVector& add_scaled(const Rational& c, const FockVector& w);

  FockVector scaled(const Rational& c) const;
  FockVector times_variable(const Variable& v) const;
  /// Partial derivative by v.
  FockVector derivative(const Variable& v) const;

  /// Every variable occurring in some monomial, in canonical order.
  std::set<Variable> variables() const;
  int max_degree() const;

  /// "0" or terms "p/q*monomial" joined by " + " in canonical order; the
  /// constant term prints as "p/q" alone.
  std::string to_string() const;

  friend FockVector operator+(FockVector a, const FockVector& b) { return a.add_scaled(1, b); }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a.add_scaled(-1, b); }
  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Terms terms_;
};

FockVector vacuum();
FockVector add_scaled(const FockVector& v, const Rational& c, const FockVector& w);

struct Bigrade {
  int energy;
  Weight weight;
};

/// True for x_{ij,m} created by a*_{ij,-m} (j <= r and m >= 0).
bool is_astar_created(const Variable& v, int r);

/// Energy and root-lattice weight relative to lambda. x created by an a-mode
/// at mode m: (-m, -alpha_ij); x_{ij,m} created by a*_{ij,-m}: (m, +alpha_ij);
/// y_{i,m}: (m, 0).
Bigrade bigrade(const Variable& v, const LieParams& p);
Bigrade bigrade(const Monomial& m, const LieParams& p);

}  // namespace wakimoto
