#include "wakimoto/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace wakimoto {

Variable Variable::x(int i, int j, int mode) {
  auto biased = static_cast<std::uint64_t>(static_cast<std::int64_t>(mode) + kBias);
  return Variable((std::uint64_t{0} << 56) | (static_cast<std::uint64_t>(i) << 48) |
                  (static_cast<std::uint64_t>(j) << 40) | biased);
}

Variable Variable::y(int i, int mode) {
  auto biased = static_cast<std::uint64_t>(static_cast<std::int64_t>(mode) + kBias);
  return Variable((std::uint64_t{1} << 56) | (static_cast<std::uint64_t>(i) << 48) | biased);
}

std::string Variable::to_string() const {
  if (family() == Family::X)
    return "x[" + std::to_string(i()) + "," + std::to_string(j()) + "," +
           std::to_string(mode()) + "]";
  return "y[" + std::to_string(i()) + "," + std::to_string(mode()) + "]";
}

bool is_valid(const Variable& v, int n) {
  if (v.family() == Family::X) return 1 <= v.i() && v.i() <= v.j() && v.j() <= n;
  return 1 <= v.i() && v.i() <= n && v.mode() >= 1;
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& [v, e] : factors) {
    if (e <= 0) throw std::invalid_argument("monomial exponents must be positive");
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
  }
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::times(const Variable& v, int e) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  if (it != out.factors_.end() && it->first == v)
    it->second += e;
  else
    out.factors_.insert(it, {v, e});
  return out;
}

Monomial Monomial::divided(const Variable& v) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  if (it == out.factors_.end() || it->first != v)
    throw std::invalid_argument("variable absent from monomial");
  if (--it->second == 0) out.factors_.erase(it);
  return out;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out = *this;
  for (const auto& [v, e] : other.factors_) out = out.times(v, e);
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.to_string();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

FockVector FockVector::vacuum() { return basis(Monomial{}, 1); }

FockVector FockVector::basis(Monomial m, Rational c) {
  FockVector v;
  v.add_term(m, c);
  return v;
}

Rational FockVector::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FockVector& FockVector::add_scaled(const Rational& c, const FockVector& w) {
  if (c == 0) return *this;
  for (const auto& [m, x] : w.terms_) add_term(m, c * x);
  return *this;
}

FockVector FockVector::scaled(const Rational& c) const {
  FockVector out;
  if (c == 0) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * x);
  return out;
}

FockVector FockVector::times_variable(const Variable& v) const {
  FockVector out;
  for (const auto& [m, x] : terms_) out.terms_.emplace(m.times(v), x);
  return out;
}

FockVector FockVector::derivative(const Variable& v) const {
  FockVector out;
  for (const auto& [m, x] : terms_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.divided(v), x * e);
  }
  return out;
}

std::set<Variable> FockVector::variables() const {
  std::set<Variable> out;
  for (const auto& [m, x] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

int FockVector::max_degree() const {
  int d = 0;
  for (const auto& [m, x] : terms_) d = std::max(d, m.degree());
  return d;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, x] : terms_) {
    if (!s.empty()) s += " + ";
    s += format_rational(x);
    if (!m.empty()) s += "*" + m.to_string();
  }
  return s;
}

FockVector vacuum() { return FockVector::vacuum(); }

FockVector add_scaled(const FockVector& v, const Rational& c, const FockVector& w) {
  FockVector out = v;
  out.add_scaled(c, w);
  return out;
}

bool is_astar_created(const Variable& v, int r) {
  return v.family() == Family::X && v.j() <= r && v.mode() >= 0;
}

Bigrade bigrade(const Variable& v, const LieParams& p) {
  if (v.family() == Family::Y) return {v.mode(), Weight::Zero(p.n())};
  Weight w = root_weight(p.n(), {v.i(), v.j()});
  if (is_astar_created(v, p.r())) return {v.mode(), w};
  return {-v.mode(), -w};
}

Bigrade bigrade(const Monomial& m, const LieParams& p) {
  Bigrade out{0, Weight::Zero(p.n())};
  for (const auto& [v, e] : m.factors()) {
    Bigrade g = bigrade(v, p);
    out.energy += e * g.energy;
    out.weight += e * g.weight;
  }
  return out;
}

}  // namespace wakimoto
