#include "wakimoto/liealg.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace wakimoto {

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

Rational entry_formula(int i, int j, int r, const Rational& gamma_sq, int aij) {
  Rational s = gamma_sq;
  if (i > r && j > r) s -= r + 1;
  if (i == r + 1 && j == r + 1) s += Rational(r, 2);
  return s * aij;
}

}  // namespace

LieParams::LieParams(int n, int r, Rational gamma_sq, std::vector<Rational> lambda)
    : n_(n), r_(r), gamma_sq_(std::move(gamma_sq)), lambda_(std::move(lambda)) {
  if (n_ < 1) throw std::invalid_argument("n must be a positive integer");
  if (r_ < 0 || r_ > n_) throw std::invalid_argument("r must satisfy 0 ≤ r ≤ n");
  if (gamma_sq_ == 0) throw std::invalid_argument("gamma_sq must be nonzero");
  if (static_cast<int>(lambda_.size()) != n_)
    throw std::invalid_argument("lambda must have exactly n entries");
  gram_ = b_matrix(n_, r_, gamma_sq_);
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  for (int k = 1; k <= n; ++k)
    for (int l = k; l <= n; ++l) out.push_back({k, l});
  return out;
}

std::vector<Root> levi_roots(int r) { return positive_roots(r); }

Weight root_weight(int n, Root rt) {
  Weight w = Weight::Zero(n);
  for (int t = rt.k; t <= rt.l; ++t) w(t - 1) = 1;
  return w;
}

Weight simple_root(int n, int i) { return root_weight(n, {i, i}); }

int root_pairing(int i, Root rt) {
  return delta(i, rt.k) - delta(i + 1, rt.k) - delta(i, rt.l + 1) + delta(i + 1, rt.l + 1);
}

int weight_pairing(int i, const Weight& w) {
  Eigen::VectorXi row = cartan_matrix<int>(static_cast<int>(w.size())).row(i - 1).transpose();
  return row.dot(w);
}

RationalMatrix b_matrix(int n, int r, const Rational& gamma_sq) {
  const Matrix<int> a = cartan_matrix<int>(n);

  RationalMatrix entrywise(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      entrywise(i - 1, j - 1) = entry_formula(i, j, r, gamma_sq, a(i - 1, j - 1));

  RationalMatrix block = a.cast<Rational>() * gamma_sq;
  if (r < n) {
    block.bottomRightCorner(n - r, n - r) -= cartan_matrix<Rational>(n - r) * Rational(r + 1);
    block(r, r) += r;
  }

  if (entrywise != block) {
    std::ostringstream msg;
    msg << "Gram matrix formulas disagree at n=" << n << " r=" << r
        << " gamma_sq=" << format_rational(gamma_sq);
    throw std::logic_error(msg.str());
  }
  return entrywise;
}

RationalMatrix b_matrix(const LieParams& p) { return p.gram(); }

Rational central_charge(const LieParams& p) { return p.level(); }

const char* to_string(Generator g) {
  switch (g) {
    case Generator::E: return "E";
    case Generator::F: return "F";
    case Generator::H: return "H";
  }
  return "?";
}

bool ModeSet::contains(int m) const {
  switch (kind_) {
    case Kind::None: return false;
    case Kind::All: return true;
    case Kind::AtLeast: return m >= from_;
  }
  return false;
}

std::string ModeSet::describe() const {
  switch (kind_) {
    case Kind::None: return "none";
    case Kind::All: return "all";
    case Kind::AtLeast: return "m>=" + std::to_string(from_);
  }
  return "?";
}

const ModeSet& AnnihilationProfile::kills(Generator g, int i) const {
  switch (g) {
    case Generator::E: return e.at(i - 1);
    case Generator::F: return f.at(i - 1);
    case Generator::H: return h.at(i - 1);
  }
  throw std::invalid_argument("unknown generator");
}

AnnihilationProfile expected_annihilation_profile(const LieParams& p) {
  AnnihilationProfile prof;
  for (int i = 1; i <= p.n(); ++i) {
    if (i <= p.r()) {
      prof.e.push_back(ModeSet::at_least(p.lambda(i) == 0 ? 0 : 1));
      prof.f.push_back(ModeSet::at_least(0));
    } else {
      prof.e.push_back(ModeSet::all());
      prof.f.push_back(ModeSet::none());
    }
    prof.h.push_back(ModeSet::at_least(1));
  }
  prof.cartan_eigenvalues = p.lambda();
  prof.central = p.level();
  return prof;
}

AnnihilationProfile literal_borel_profile(const LieParams& p) {
  AnnihilationProfile prof;
  for (int i = 1; i <= p.n(); ++i) {
    if (i <= p.r()) {
      prof.e.push_back(ModeSet::at_least(0));
      prof.f.push_back(ModeSet::at_least(1));
    } else {
      prof.e.push_back(ModeSet::all());
      prof.f.push_back(ModeSet::none());
    }
    prof.h.push_back(ModeSet::at_least(1));
  }
  prof.cartan_eigenvalues = p.lambda();
  prof.central = p.level();
  return prof;
}

GradedDims count_graded_monomials(std::span<const GradedGenerator> gens,
                                  EnergyWindow window, int max_factors) {
  using State = std::tuple<int, int, std::vector<int>>;  // factors, energy, weight
  std::size_t rank = gens.empty() ? 0 : static_cast<std::size_t>(gens.front().weight.size());

  std::map<State, std::uint64_t> states;
  states[{0, 0, std::vector<int>(rank, 0)}] = 1;

  for (const auto& g : gens) {
    std::map<State, std::uint64_t> next;
    for (const auto& [st, count] : states) {
      auto [used, energy, weight] = st;
      for (int k = 0; used + k <= max_factors; ++k) {
        std::vector<int> w = weight;
        for (std::size_t t = 0; t < rank; ++t) w[t] += k * g.weight(static_cast<Eigen::Index>(t));
        next[{used + k, energy + k * g.energy, std::move(w)}] += count;
      }
    }
    states = std::move(next);
  }

  GradedDims out;
  for (const auto& [st, count] : states) {
    const auto& [used, energy, weight] = st;
    if (window.contains(energy)) out[{energy, weight}] += count;
  }
  return out;
}

std::vector<GradedGenerator> pbw_generators(const LieParams& p, EnergyWindow window,
                                            BorelConvention convention) {
  const int n = p.n();
  std::vector<GradedGenerator> out;
  auto push = [&](std::string label, int mode, Weight w) {
    int energy = -mode;
    if (window.contains(energy))
      out.push_back({std::move(label) + "@" + std::to_string(mode), energy, std::move(w)});
  };

  for (Root rt : positive_roots(n)) {
    const std::string tag = std::to_string(rt.k) + "," + std::to_string(rt.l);
    const Weight w = root_weight(n, rt);
    for (int m = -window.hi; m <= -window.lo; ++m) {
      if (rt.in_levi(p.r())) {
        int e_top = convention == BorelConvention::Realized ? 0 : -1;
        int f_top = convention == BorelConvention::Realized ? -1 : 0;
        if (m <= e_top) push("E" + tag, m, w);
        if (m <= f_top) push("F" + tag, m, -w);
      } else {
        push("F" + tag, m, -w);
      }
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int m = -window.hi; m <= -1; ++m) push("H" + std::to_string(i), m, Weight::Zero(n));
  return out;
}

GradedDims pbw_graded_dims(const LieParams& p, EnergyWindow window, int weight_depth) {
  auto gens = pbw_generators(p, window, BorelConvention::Realized);
  return count_graded_monomials(gens, window, weight_depth);
}

}  // namespace wakimoto
