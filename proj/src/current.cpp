#include "wakimoto/current.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

namespace wakimoto {

namespace {

constexpr long long kInf = 1LL << 40;

struct Range {
  long long lo;
  long long hi;
};

bool finite(long long x) { return -kInf < x && x < kInf; }

std::optional<Range> creation_range(const FieldFactor& f, const LieParams& p) {
  bool levi = f.j <= p.r();
  switch (f.kind) {
    case FieldKind::A: return levi ? Range{-kInf, -1} : Range{-kInf, kInf};
    case FieldKind::AStar: return levi ? std::optional<Range>(Range{-kInf, 0}) : std::nullopt;
    case FieldKind::DAStar: return levi ? std::optional<Range>(Range{-kInf, -1}) : std::nullopt;
    case FieldKind::B: return Range{-kInf, -1};
  }
  return std::nullopt;
}

bool is_creation_mode(const FieldFactor& f, long long q, const LieParams& p) {
  auto r = creation_range(f, p);
  return r && r->lo <= q && q <= r->hi;
}

// Modes q at which f_q is not a creator yet may act nonzero on a vector
// whose variables are vars.
std::vector<int> annihilation_support(const FieldFactor& f, const std::set<Variable>& vars,
                                      const LieParams& p) {
  std::vector<int> out;
  switch (f.kind) {
    case FieldKind::A:
      if (f.j <= p.r())
        for (const Variable& v : vars)
          if (v.family() == Family::X && v.i() == f.i && v.j() == f.j && v.mode() >= 0)
            out.push_back(v.mode());
      break;
    case FieldKind::AStar:
    case FieldKind::DAStar:
      for (const Variable& v : vars)
        if (v.family() == Family::X && v.i() == f.i && v.j() == f.j) {
          int q = -v.mode();
          if (f.j > p.r() || q >= 1) out.push_back(q);
        }
      break;
    case FieldKind::B:
      out.push_back(0);
      for (const Variable& v : vars)
        if (v.family() == Family::Y && p.gram(f.i, v.i()) != 0) out.push_back(v.mode());
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Minkowski sum of per-factor hulls; nullopt when some factor never acts.
std::optional<Range> support(std::span<const FieldFactor> factors, const std::set<Variable>& vars,
                             const LieParams& p) {
  Range total{0, 0};
  for (const auto& f : factors) {
    Range h{kInf, -kInf};
    if (auto c = creation_range(f, p)) h = *c;
    auto ann = annihilation_support(f, vars, p);
    if (!ann.empty()) {
      h.lo = std::min<long long>(h.lo, ann.front());
      h.hi = std::max<long long>(h.hi, ann.back());
    }
    if (h.lo > h.hi) return std::nullopt;
    total.lo = (!finite(total.lo) || !finite(h.lo)) ? -kInf : total.lo + h.lo;
    total.hi = (!finite(total.hi) || !finite(h.hi)) ? kInf : total.hi + h.hi;
  }
  return total;
}

FockVector nested_apply(std::span<const FieldFactor> factors, long long total,
                        const FockVector& v, const LieParams& p, const ModeWeight* weight,
                        std::vector<int>& modes) {
  if (v.is_zero()) return {};
  const FieldFactor& f = factors.front();
  if (factors.size() == 1) {
    Rational c = 1;
    if (weight) {
      modes.push_back(static_cast<int>(total));
      c = (*weight)(modes);
      modes.pop_back();
      if (c == 0) return {};
    }
    FockVector out = apply_field(f, static_cast<int>(total), v, p);
    return c == 1 ? out : out.scaled(c);
  }

  auto rest = factors.subspan(1);
  const std::set<Variable> vars = v.variables();
  FockVector out;

  // Annihilating part of f acts first.
  for (int q : annihilation_support(f, vars, p)) {
    if (is_creation_mode(f, q, p)) continue;
    FockVector w = apply_field(f, q, v, p);
    if (w.is_zero()) continue;
    modes.push_back(q);
    out.add_scaled(1, nested_apply(rest, total - q, w, p, weight, modes));
    modes.pop_back();
  }

  // Creating part of f acts last.
  auto cr = creation_range(f, p);
  if (!cr) return out;
  auto s = support(rest, vars, p);
  if (!s) return out;
  long long lo = std::max(cr->lo, finite(s->hi) ? total - s->hi : -kInf);
  long long hi = std::min(cr->hi, finite(s->lo) ? total - s->lo : kInf);
  if (lo > hi) return out;
  if (!finite(lo) || !finite(hi))
    throw UnboundedModes("unbounded mode sum for factor " + f.to_string());
  for (long long q = lo; q <= hi; ++q) {
    modes.push_back(static_cast<int>(q));
    FockVector w = nested_apply(rest, total - q, v, p, weight, modes);
    modes.pop_back();
    if (!w.is_zero()) out.add_scaled(1, apply_field(f, static_cast<int>(q), w, p));
  }
  return out;
}

int bound_of(std::span<const FieldFactor> factors, const FockVector& v, const LieParams& p) {
  auto s = support(factors, v.variables(), p);
  if (!s) return std::numeric_limits<int>::min();
  if (!finite(s->hi)) throw UnboundedModes("no finite upper mode bound");
  return static_cast<int>(s->hi);
}

}  // namespace

int field_weight(FieldKind k) { return k == FieldKind::AStar ? 0 : 1; }

const char* to_string(FieldKind k) {
  switch (k) {
    case FieldKind::A: return "a";
    case FieldKind::AStar: return "a*";
    case FieldKind::B: return "b";
    case FieldKind::DAStar: return "da*";
  }
  return "?";
}

std::string FieldFactor::to_string() const {
  if (kind == FieldKind::B) return "b" + std::to_string(i);
  return std::string(wakimoto::to_string(kind)) + std::to_string(i) + std::to_string(j);
}

CurrentExpr& CurrentExpr::add(Rational coeff, std::vector<FieldFactor> factors) {
  if (factors.empty()) throw std::invalid_argument("current term needs at least one field");
  int w = 0;
  for (const auto& f : factors) w += f.weight();
  if (weight_ >= 0 && w != weight_)
    throw std::invalid_argument("inhomogeneous current " + label_);
  weight_ = w;
  if (coeff != 0) terms_.push_back({std::move(coeff), std::move(factors)});
  return *this;
}

std::string CurrentExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += format_rational(t.coeff) + "*:";
    for (std::size_t k = 0; k < t.factors.size(); ++k) {
      if (k) s += ' ';
      s += t.factors[k].to_string();
    }
    s += ':';
  }
  return s;
}

CurrentExpr single_field(FieldFactor f) {
  CurrentExpr c(f.to_string());
  c.add(1, {f});
  return c;
}

CurrentExpr build_current(CurrentKind kind, int i, const LieParams& p) {
  const int n = p.n();
  const int r = p.r();
  if (i < 1 || i > n) throw std::invalid_argument("current index out of range");
  using FF = FieldFactor;
  switch (kind) {
    case CurrentKind::F: {
      CurrentExpr c("F" + std::to_string(i));
      c.add(1, {FF::a(i, i)});
      for (int j = i + 1; j <= n; ++j) c.add(1, {FF::a(i, j), FF::astar(i + 1, j)});
      return c;
    }
    case CurrentKind::CalH:
    case CurrentKind::H: {
      CurrentExpr c((kind == CurrentKind::H ? "H" : "CalH") + std::to_string(i));
      for (Root rt : positive_roots(n)) {
        int s = root_pairing(i, rt);
        if (s != 0) c.add(s, {FF::a(rt.k, rt.l), FF::astar(rt.k, rt.l)});
      }
      if (kind == CurrentKind::H) c.add(1, {FF::b(i)});
      return c;
    }
    case CurrentKind::E: {
      CurrentExpr c("E" + std::to_string(i));
      for (int k = 1; k < i; ++k)
        c.add(1, {FF::astar(i, i), FF::a(k, i - 1), FF::astar(k, i - 1)});
      for (int k = 1; k <= i; ++k) c.add(-1, {FF::astar(i, i), FF::a(k, i), FF::astar(k, i)});
      for (int k = i + 1; k <= n; ++k) c.add(1, {FF::a(i + 1, k), FF::astar(i, k)});
      for (int k = 1; k < i; ++k) c.add(-1, {FF::a(k, i - 1), FF::astar(k, i)});
      c.add(-1, {FF::astar(i, i), FF::b(i)});
      Rational shift = Rational(i > r ? r + 1 : i + 1) - p.gamma_sq();
      c.add(-shift, {FF::dastar(i, i)});
      return c;
    }
  }
  throw std::invalid_argument("unknown current kind");
}

bool is_field_product(std::span<const FieldFactor> factors, const LieParams& p) {
  int all_creation = 0;
  int creating = 0;
  for (const auto& f : factors) {
    auto cr = creation_range(f, p);
    if (cr && !finite(cr->hi)) ++all_creation;
    else if (cr) ++creating;
  }
  return all_creation == 0 || (all_creation == 1 && creating == 0);
}

FockVector apply_field(const FieldFactor& f, int q, const FockVector& v, const LieParams& p) {
  switch (f.kind) {
    case FieldKind::A: return apply_basic(BasicOp::a(f.i, f.j, q), v, p);
    case FieldKind::AStar: return apply_basic(BasicOp::astar(f.i, f.j, q), v, p);
    case FieldKind::B: return apply_basic(BasicOp::b(f.i, q), v, p);
    case FieldKind::DAStar:
      if (q == 0) return {};
      return apply_basic(BasicOp::astar(f.i, f.j, q), v, p).scaled(-q);
  }
  return {};
}

FockVector apply_normal_ordered(std::span<const FieldFactor> factors, int total,
                                const FockVector& v, const LieParams& p,
                                const ModeWeight* weight) {
  if (factors.empty()) throw std::invalid_argument("empty normal-ordered product");
  std::vector<int> modes;
  return nested_apply(factors, total, v, p, weight, modes);
}

FockVector mode_apply(const CurrentExpr& cur, int m, const FockVector& v, const LieParams& p) {
  FockVector out;
  for (const auto& t : cur.terms())
    out.add_scaled(t.coeff, apply_normal_ordered(t.factors, m, v, p));
  return out;
}

int upper_mode_bound(const CurrentExpr& cur, const FockVector& v, const LieParams& p) {
  int best = std::numeric_limits<int>::min();
  for (const auto& t : cur.terms()) best = std::max(best, bound_of(t.factors, v, p));
  return best;
}

int upper_mode_bound(const FieldFactor& f, const FockVector& v, const LieParams& p) {
  return bound_of(std::span<const FieldFactor>(&f, 1), v, p);
}

FockVector mode_bracket_apply(const CurrentExpr& x, int m, const CurrentExpr& y, int n,
                              const FockVector& v, const LieParams& p) {
  FockVector out = mode_apply(x, m, mode_apply(y, n, v, p), p);
  out.add_scaled(-1, mode_apply(y, n, mode_apply(x, m, v, p), p));
  return out;
}

Kernel normalize(KernelForm k) {
  switch (k) {
    case KernelForm::DeltaZW:
    case KernelForm::DeltaWZ: return Kernel::Delta;
    case KernelForm::DwDelta:
    case KernelForm::MinusDzDelta: return Kernel::DwDelta;
  }
  return Kernel::Delta;
}

DistRhs& DistRhs::add_scalar(Rational c, KernelForm k) {
  if (c != 0) terms_.push_back({std::move(c), {}, normalize(k)});
  return *this;
}

DistRhs& DistRhs::add_current(Rational c, const CurrentExpr& x, Point at, KernelForm k) {
  for (const auto& t : x.terms()) {
    std::vector<PlacedFactor> fs;
    for (const auto& f : t.factors) fs.push_back({f, at});
    add_product(c * t.coeff, std::move(fs), k);
  }
  return *this;
}

DistRhs& DistRhs::add_currents(Rational c, const CurrentExpr& xz, const CurrentExpr& yw,
                               KernelForm k) {
  for (const auto& s : xz.terms())
    for (const auto& t : yw.terms()) {
      std::vector<PlacedFactor> fs;
      for (const auto& f : s.factors) fs.push_back({f, Point::Z});
      for (const auto& f : t.factors) fs.push_back({f, Point::W});
      add_product(c * s.coeff * t.coeff, std::move(fs), k);
    }
  return *this;
}

DistRhs& DistRhs::add_product(Rational c, std::vector<PlacedFactor> factors, KernelForm k) {
  if (c != 0) terms_.push_back({std::move(c), std::move(factors), normalize(k)});
  return *this;
}

FockVector rhs_mode_apply(const DistRhs& rhs, int m, int n, const FockVector& v,
                          const LieParams& p, int wx, int wy) {
  FockVector out;
  for (const auto& term : rhs.terms()) {
    int w = 0;
    std::vector<FieldFactor> fields;
    for (const auto& pf : term.factors) {
      w += pf.field.weight();
      fields.push_back(pf.field);
    }
    const int shift = term.kernel == Kernel::Delta ? 1 : 2;
    const int total = m + n + wx + wy - shift - w;

    if (fields.empty()) {
      if (total != 0) continue;
      Rational c = term.coeff;
      if (term.kernel == Kernel::DwDelta) c *= m + wx - 1;
      out.add_scaled(c, v);
      continue;
    }
    if (term.kernel == Kernel::Delta) {
      out.add_scaled(term.coeff, apply_normal_ordered(fields, total, v, p));
      continue;
    }
    // Coefficient of the d/dw delta kernel depends on the z-side exponent.
    ModeWeight weight = [&](std::span<const int> modes) {
      long long sz = 0;
      for (std::size_t k = 0; k < modes.size(); ++k)
        if (term.factors[k].point == Point::Z) sz += modes[k] + fields[k].weight();
      return Rational(static_cast<long>(m + wx - 1 - sz));
    };
    out.add_scaled(term.coeff, apply_normal_ordered(fields, total, v, p, &weight));
  }
  return out;
}

}  // namespace wakimoto
