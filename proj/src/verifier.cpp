#include "wakimoto/verifier.hpp"

#include "wakimoto/lemma_catalog.hpp"
#include "wakimoto/oscillator.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <span>

namespace wakimoto {

namespace {

using Eval = std::function<FockVector(std::span<const int> modes, const FockVector& v)>;

struct Family {
  std::string label;
  Eval eval;
};

void for_each_tuple(int arity, int window, const std::function<void(std::span<const int>)>& f) {
  std::vector<int> modes(arity, -window);
  while (true) {
    f(modes);
    int k = arity - 1;
    while (k >= 0 && modes[k] == window) modes[k--] = -window;
    if (k < 0) return;
    ++modes[k];
  }
}

bool fails(const Eval& eval, std::span<const int> modes, const FockVector& v) {
  try {
    return !eval(modes, v).is_zero();
  } catch (const std::exception&) {
    return true;
  }
}

// Drops monomials from v, then pulls each mode toward 0 while the failure persists.
Counterexample minimize(const Eval& eval, std::vector<int> modes, FockVector v) {
  bool changed = true;
  while (changed) {
    changed = false;
    if (v.size() > 1) {
      for (const auto& [m, c] : v.terms()) {
        FockVector smaller = v;
        smaller.add_term(m, -c);
        if (fails(eval, modes, smaller)) {
          v = std::move(smaller);
          changed = true;
          break;
        }
      }
    }
    for (std::size_t k = 0; k < modes.size(); ++k) {
      while (modes[k] != 0) {
        auto trial = modes;
        trial[k] += modes[k] > 0 ? -1 : 1;
        if (!fails(eval, trial, v)) break;
        modes = std::move(trial);
        changed = true;
      }
    }
  }
  FockVector delta;
  try {
    delta = eval(modes, v);
  } catch (const std::exception&) {
  }
  return {std::move(modes), std::move(v), std::move(delta)};
}

CheckReport run_families(const std::string& id, const LieParams& p,
                         const std::vector<Family>& families, int arity, int window,
                         const std::vector<FockVector>& vectors) {
  CheckReport rep{id, p};
  std::uint64_t failures = 0;
  const Family* first_family = nullptr;
  std::vector<int> first_modes;
  const FockVector* first_vector = nullptr;
  std::string error;

  for (const auto& fam : families) {
    for_each_tuple(arity, window, [&](std::span<const int> modes) {
      for (const auto& v : vectors) {
        ++rep.instances;
        bool bad;
        try {
          bad = !fam.eval(modes, v).is_zero();
        } catch (const std::exception& e) {
          bad = true;
          if (error.empty()) error = e.what();
        }
        if (!bad) continue;
        if (failures++ == 0) {
          first_family = &fam;
          first_modes.assign(modes.begin(), modes.end());
          first_vector = &v;
        }
      }
    });
  }

  if (failures > 0) {
    rep.verdict = Verdict::Fail;
    rep.counterexample = minimize(first_family->eval, first_modes, *first_vector);
    rep.notes.push_back("failing instances: " + std::to_string(failures));
    rep.notes.push_back("counterexample instance: " + first_family->label);
    if (!error.empty()) rep.notes.push_back("engine error: " + error);
  }
  return rep;
}

struct Currents {
  std::vector<CurrentExpr> e, f, h;
};

Currents build_all(const LieParams& p) {
  Currents c;
  for (int i = 1; i <= p.n(); ++i) {
    c.e.push_back(build_current(CurrentKind::E, i, p));
    c.f.push_back(build_current(CurrentKind::F, i, p));
    c.h.push_back(build_current(CurrentKind::H, i, p));
  }
  return c;
}

Eval bracket_eval(const CurrentExpr& x, const CurrentExpr& y, DistRhs rhs, const LieParams& p) {
  return [&x, &y, rhs = std::move(rhs), &p](std::span<const int> m, const FockVector& v) {
    FockVector out = mode_bracket_apply(x, m[0], y, m[1], v, p);
    out.add_scaled(-1, rhs_mode_apply(rhs, m[0], m[1], v, p));
    return out;
  };
}

CheckReport relation_at(const std::string& id, const LieParams& p, const CheckSpec& spec) {
  const int n = p.n();
  const auto a = cartan_matrix<int>(n);
  const Currents cur = build_all(p);
  const auto vectors =
      random_test_vectors(spec.seed, spec.num_vectors, spec.max_degree, spec.max_mode, p);
  const Rational c = p.level();

  std::vector<Family> fams;
  auto label = [](const std::string& pre, int i, int j) {
    return pre + "i=" + std::to_string(i) + ",j=" + std::to_string(j);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int aij = a(i - 1, j - 1);
      const auto &ei = cur.e[i - 1], &ej = cur.e[j - 1], &fi = cur.f[i - 1],
                 &fj = cur.f[j - 1], &hi = cur.h[i - 1], &hj = cur.h[j - 1];
      DistRhs rhs;
      if (id == "R1") {
        rhs.add_scalar(c * aij, KernelForm::DwDelta);
        fams.push_back({label("", i, j), bracket_eval(hi, hj, rhs, p)});
      } else if (id == "R2") {
        rhs.add_current(aij, ej, Point::Z, KernelForm::DeltaZW);
        fams.push_back({label("", i, j), bracket_eval(hi, ej, rhs, p)});
      } else if (id == "R3") {
        rhs.add_current(-aij, fj, Point::Z, KernelForm::DeltaZW);
        fams.push_back({label("", i, j), bracket_eval(hi, fj, rhs, p)});
      } else if (id == "R4") {
        if (i == j) {
          rhs.add_current(1, hi, Point::Z, KernelForm::DeltaZW);
          rhs.add_scalar(c, KernelForm::DwDelta);
        }
        fams.push_back({label("", i, j), bracket_eval(ei, fj, rhs, p)});
      } else if (id == "R5") {
        if (aij == -1) continue;
        fams.push_back({label("E:", i, j), bracket_eval(ei, ej, rhs, p)});
        fams.push_back({label("F:", i, j), bracket_eval(fi, fj, rhs, p)});
      } else if (id == "R6") {
        if (aij != -1) continue;
        for (int which = 0; which < 2; ++which) {
          const CurrentExpr& xi = which == 0 ? ei : fi;
          const CurrentExpr& xj = which == 0 ? ej : fj;
          Eval ev = [&xi, &xj, &p](std::span<const int> m, const FockVector& v) {
            auto inner = [&](const FockVector& u) {
              return mode_bracket_apply(xi, m[1], xj, m[2], u, p);
            };
            FockVector out = mode_apply(xi, m[0], inner(v), p);
            out.add_scaled(-1, inner(mode_apply(xi, m[0], v, p)));
            return out;
          };
          fams.push_back({label(which == 0 ? "E:" : "F:", i, j), std::move(ev)});
        }
      }
    }

  if (id == "R6") return run_families(id, p, fams, 3, spec.triple_mode, vectors);
  CheckReport rep = run_families(id, p, fams, 2, spec.max_mode, vectors);
  if (id == "R1") {
    // The scalar itself, read off [H_{i,1}, H_{j,-1}] on the vacuum.
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        FockVector v = mode_bracket_apply(cur.h[i - 1], 1, cur.h[j - 1], -1, vacuum(), p);
        Rational s = v.coefficient(Monomial{});
        Rational expected = c * a(i - 1, j - 1);
        bool ok = v.size() <= 1 && s == expected;
        rep.measured.push_back({"i=" + std::to_string(i) + ",j=" + std::to_string(j),
                                format_rational(expected), format_rational(s)});
        if (!ok) rep.verdict = Verdict::Fail;
      }
  }
  return rep;
}

CheckReport heisenberg_at(const LieParams& p, const CheckSpec& spec) {
  const int n = p.n();
  const auto vectors =
      random_test_vectors(spec.seed, spec.num_vectors, spec.max_degree, spec.max_mode, p);

  struct Field {
    OscKind kind;
    int i, j;
  };
  std::vector<Field> fields;
  for (Root a : positive_roots(n)) fields.push_back({OscKind::A, a.k, a.l});
  for (Root a : positive_roots(n)) fields.push_back({OscKind::AStar, a.k, a.l});
  for (int i = 1; i <= n; ++i) fields.push_back({OscKind::B, i, i});

  std::vector<Family> fams;
  for (std::size_t s = 0; s < fields.size(); ++s)
    for (std::size_t t = s; t < fields.size(); ++t) {
      Field x = fields[s], y = fields[t];
      Eval ev = [x, y, &p](std::span<const int> m, const FockVector& v) {
        BasicOp ox{x.kind, x.i, x.j, m[0]}, oy{y.kind, y.i, y.j, m[1]};
        FockVector out = apply_basic(ox, apply_basic(oy, v, p), p);
        out.add_scaled(-1, apply_basic(oy, apply_basic(ox, v, p), p));
        if (m[0] + m[1] == 0) {
          bool same = x.i == y.i && x.j == y.j;
          Rational expected = 0;
          if (x.kind == OscKind::A && y.kind == OscKind::AStar && same) expected = 1;
          if (x.kind == OscKind::AStar && y.kind == OscKind::A && same) expected = -1;
          if (x.kind == OscKind::B && y.kind == OscKind::B) expected = p.gram(x.i, y.i) * m[0];
          out.add_scaled(-expected, v);
        }
        return out;
      };
      auto tag = [](Field f) {
        return std::string(to_string(f.kind)) + "(" + std::to_string(f.i) +
               (f.kind == OscKind::B ? "" : "," + std::to_string(f.j)) + ")";
      };
      fams.push_back({tag(x) + "," + tag(y), std::move(ev)});
    }
  return run_families("HEIS", p, fams, 2, spec.max_mode, vectors);
}

std::string measure_constant(const LemmaInstance& inst, const LieParams& p, int window,
                             const std::vector<FockVector>& vectors) {
  std::optional<Rational> c;
  bool consistent = true;
  for_each_tuple(2, window, [&](std::span<const int> m) {
    if (!consistent) return;
    for (const auto& v : vectors) {
      FockVector lhs = inst.lhs ? rhs_mode_apply(*inst.lhs, m[0], m[1], v, p, inst.wx, inst.wy)
                                : mode_bracket_apply(inst.x, m[0], inst.y, m[1], v, p);
      FockVector d = lhs;
      d.add_scaled(-1, rhs_mode_apply(inst.probe->rest, m[0], m[1], v, p, inst.wx, inst.wy));
      FockVector s = rhs_mode_apply(inst.probe->structure, m[0], m[1], v, p, inst.wx, inst.wy);
      if (!c && !s.is_zero()) {
        const auto& [mono, coeff] = *s.terms().begin();
        c = d.coefficient(mono) / coeff;
      }
      if (!c) {
        if (!d.is_zero()) consistent = false;
        continue;
      }
      d.add_scaled(-*c, s);
      if (!d.is_zero()) consistent = false;
    }
  });
  if (!consistent) return "inconsistent";
  if (!c) return "undetermined";
  return format_rational(*c);
}

// Monomials of degree 1 and 2 in the x-variables of the probed roots, so the
// probe structure acts nonzero somewhere.
std::vector<FockVector> probe_vectors(const std::vector<LemmaInstance>& instances, int window) {
  std::set<Root> roots;
  for (const auto& inst : instances)
    if (inst.probe)
      for (const auto& t : inst.probe->structure.terms())
        for (const auto& f : t.factors) roots.insert({f.field.i, f.field.j});
  std::vector<Variable> vars;
  for (Root a : roots)
    for (int m = -window; m <= window; ++m) vars.push_back(Variable::x(a.k, a.l, m));
  std::vector<FockVector> out;
  for (std::size_t s = 0; s < vars.size(); ++s) {
    out.push_back(FockVector::basis(Monomial({{vars[s], 1}})));
    for (std::size_t t = s; t < vars.size(); ++t)
      out.push_back(FockVector::basis(Monomial({{vars[s], 1}, {vars[t], 1}})));
  }
  return out;
}

CheckReport lemma_at(const std::string& id, const LieParams& p, const CheckSpec& spec) {
  const auto instances = lemma_instances(id, p);
  auto vectors =
      random_test_vectors(spec.seed, spec.num_vectors, spec.max_degree, spec.max_mode, p);
  auto extra = probe_vectors(instances, spec.max_mode);
  vectors.insert(vectors.end(), extra.begin(), extra.end());

  std::vector<Family> fams;
  for (const auto& inst : instances) {
    Eval ev = [&inst, &p](std::span<const int> m, const FockVector& v) {
      FockVector out = inst.lhs ? rhs_mode_apply(*inst.lhs, m[0], m[1], v, p, inst.wx, inst.wy)
                                : mode_bracket_apply(inst.x, m[0], inst.y, m[1], v, p);
      out.add_scaled(-1, rhs_mode_apply(inst.rhs, m[0], m[1], v, p, inst.wx, inst.wy));
      return out;
    };
    fams.push_back({inst.label, std::move(ev)});
  }
  CheckReport rep = run_families(id, p, fams, 2, spec.max_mode, vectors);
  rep.authoritative = false;
  if (auto note = lemma_scope_note(id); !note.empty()) rep.notes.push_back(note);
  for (const auto& inst : instances)
    if (inst.probe)
      rep.measured.push_back({inst.label, format_rational(inst.probe->printed),
                              measure_constant(inst, p, spec.max_mode, vectors)});
  return rep;
}

}  // namespace

const char* to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

const std::vector<std::string>& relation_ids() {
  static const std::vector<std::string> ids = {"HEIS", "R1", "R2", "R3", "R4", "R5", "R6"};
  return ids;
}

std::vector<FockVector> random_test_vectors(std::uint64_t seed, int count, int max_degree,
                                            int mode_window, const LieParams& p) {
  std::vector<Variable> pool;
  for (Root a : positive_roots(p.n()))
    for (int m = -mode_window; m <= mode_window; ++m) pool.push_back(Variable::x(a.k, a.l, m));
  for (int i = 1; i <= p.n(); ++i)
    for (int m = 1; m <= mode_window; ++m) pool.push_back(Variable::y(i, m));

  static const int numerators[] = {1, -2, 3};
  static const int denominators[] = {1, 2};
  std::mt19937_64 gen(seed);
  std::vector<FockVector> out{vacuum()};
  while (static_cast<int>(out.size()) < count) {
    FockVector v;
    const int terms = 1 + static_cast<int>(gen() % 2);
    for (int t = 0; t < terms; ++t) {
      const int degree = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_degree));
      std::vector<Monomial::Factor> fs;
      for (int k = 0; k < degree; ++k) fs.push_back({pool[gen() % pool.size()], 1});
      Rational c(numerators[gen() % 3], denominators[gen() % 2]);
      c.canonicalize();
      v.add_term(Monomial(std::move(fs)), c);
    }
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

std::vector<CheckReport> check_heisenberg(const CheckSpec& spec) {
  std::vector<CheckReport> out;
  for (const auto& p : spec.grid) out.push_back(heisenberg_at(p, spec));
  return out;
}

std::vector<CheckReport> check_relation(const CheckSpec& spec) {
  std::vector<CheckReport> out;
  for (const auto& p : spec.grid) {
    out.push_back(spec.id == "HEIS" ? heisenberg_at(p, spec) : relation_at(spec.id, p, spec));
  }
  return out;
}

std::vector<CheckReport> check_lemma(const CheckSpec& spec) {
  std::vector<CheckReport> out;
  for (const auto& p : spec.grid) out.push_back(lemma_at(spec.id, p, spec));
  return out;
}

CheckReport check_highest_weight(const LieParams& p, int mode_window) {
  CheckReport rep{"HW", p};
  const auto prof = expected_annihilation_profile(p);
  const auto literal = literal_borel_profile(p);
  const Currents cur = build_all(p);
  const FockVector vac = vacuum();
  bool literal_ok = true;

  auto fail = [&](int m, FockVector delta, const std::string& what) {
    if (rep.verdict == Verdict::Pass)
      rep.counterexample = Counterexample{{m}, vac, std::move(delta)};
    if (rep.verdict == Verdict::Pass) rep.notes.push_back("counterexample instance: " + what);
    rep.verdict = Verdict::Fail;
  };

  for (int i = 1; i <= p.n(); ++i)
    for (Generator g : {Generator::E, Generator::F, Generator::H}) {
      const CurrentExpr& x = g == Generator::E   ? cur.e[i - 1]
                             : g == Generator::F ? cur.f[i - 1]
                                                 : cur.h[i - 1];
      for (int m = -mode_window; m <= mode_window; ++m) {
        ++rep.instances;
        FockVector out = mode_apply(x, m, vac, p);
        std::string what = std::string(to_string(g)) + std::to_string(i) + "," + std::to_string(m);
        if (g == Generator::H && m == 0) {
          FockVector d = out;
          d.add_scaled(-prof.cartan_eigenvalues[i - 1], vac);
          if (!d.is_zero()) fail(m, d, what);
          continue;
        }
        bool killed = out.is_zero();
        if (killed != prof.kills(g, i).contains(m)) fail(m, out, what);
        if (literal.kills(g, i).contains(m) && !killed) literal_ok = false;
      }
      rep.notes.push_back(std::string(to_string(g)) + std::to_string(i) + " kills vacuum for " +
                          prof.kills(g, i).describe());
    }

  // Central value from [H_{i,1}, H_{i,-1}] vac = 2 c vac.
  for (int i = 1; i <= p.n(); ++i) {
    ++rep.instances;
    FockVector v = mode_bracket_apply(cur.h[i - 1], 1, cur.h[i - 1], -1, vac, p);
    Rational c = v.coefficient(Monomial{}) / 2;
    rep.measured.push_back({"c via H" + std::to_string(i), format_rational(prof.central),
                            format_rational(c)});
    FockVector d = v;
    d.add_scaled(-2 * prof.central, vac);
    if (!d.is_zero()) fail(1, d, "central value via H" + std::to_string(i));
  }

  rep.notes.push_back(std::string("literal Borel annihilates vacuum: ") +
                      (literal_ok ? "true" : "false"));
  if (p.r() == 0 && !literal_ok) {
    rep.verdict = Verdict::Fail;
    rep.notes.push_back("literal Borel expected to annihilate the vacuum for r = 0");
  }
  return rep;
}

CheckReport check_character(const LieParams& p, EnergyWindow window, int weight_depth) {
  CheckReport rep{"CHAR", p};
  const int reach = std::max(std::abs(window.lo), std::abs(window.hi));
  std::vector<GradedGenerator> fock;
  auto push = [&](const Variable& v) {
    Bigrade g = bigrade(v, p);
    if (window.contains(g.energy)) fock.push_back({v.to_string(), g.energy, g.weight});
  };
  for (Root a : positive_roots(p.n()))
    for (int m = -reach; m <= reach; ++m) push(Variable::x(a.k, a.l, m));
  for (int i = 1; i <= p.n(); ++i)
    for (int m = 1; m <= reach; ++m) push(Variable::y(i, m));

  const GradedDims lhs = count_graded_monomials(fock, window, weight_depth);
  const GradedDims rhs = pbw_graded_dims(p, window, weight_depth);
  const GradedDims lit = count_graded_monomials(
      pbw_generators(p, window, BorelConvention::Literal), window, weight_depth);

  auto describe = [](const Bidegree& b) {
    std::string s = "(" + std::to_string(b.energy) + ",[";
    for (std::size_t k = 0; k < b.weight.size(); ++k)
      s += (k ? "," : "") + std::to_string(b.weight[k]);
    return s + "])";
  };
  auto mismatches = [](const GradedDims& a, const GradedDims& b) {
    std::vector<std::pair<Bidegree, std::pair<std::uint64_t, std::uint64_t>>> out;
    std::map<Bidegree, std::pair<std::uint64_t, std::uint64_t>> all;
    for (const auto& [k, v] : a) all[k].first = v;
    for (const auto& [k, v] : b) all[k].second = v;
    for (const auto& [k, v] : all)
      if (v.first != v.second) out.push_back({k, v});
    return out;
  };

  std::map<Bidegree, int> keys;
  for (const auto& [k, v] : lhs) keys[k];
  for (const auto& [k, v] : rhs) keys[k];
  rep.instances = keys.size();

  auto bad = mismatches(lhs, rhs);
  if (!bad.empty()) {
    rep.verdict = Verdict::Fail;
    rep.notes.push_back("mismatching bidegrees: " + std::to_string(bad.size()));
    for (std::size_t k = 0; k < bad.size() && k < 10; ++k)
      rep.notes.push_back("bidegree " + describe(bad[k].first) +
                          ": fock=" + std::to_string(bad[k].second.first) +
                          " pbw=" + std::to_string(bad[k].second.second));
  }
  rep.notes.push_back("literal Borel (no swap) mismatching bidegrees: " +
                      std::to_string(mismatches(lhs, lit).size()));
  return rep;
}

std::vector<LieParams> default_grid(std::uint64_t seed) {
  static const std::pair<int, int> shapes[] = {{1, 0}, {1, 1}, {2, 0}, {2, 1},
                                               {2, 2}, {3, 1}, {3, 3}};
  const Rational gammas[] = {Rational(1), Rational(2), Rational(5), Rational(7, 2)};
  const Rational choices[] = {Rational(0), Rational(1), Rational(-1, 2), Rational(3)};
  std::vector<LieParams> grid;
  for (auto [n, r] : shapes)
    for (int g = 0; g < 4; ++g) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r),
                        static_cast<std::uint32_t>(g)};
      std::mt19937_64 gen(seq);
      std::vector<Rational> lambda;
      for (int i = 0; i < n; ++i) lambda.push_back(choices[gen() % 4]);
      grid.emplace_back(n, r, gammas[g], std::move(lambda));
    }
  return grid;
}

}  // namespace wakimoto
