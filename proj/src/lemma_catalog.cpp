#include "wakimoto/lemma_catalog.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace wakimoto {

namespace {

using FF = FieldFactor;
using Terms = std::vector<CurrentTerm>;

std::string root_label(Root a) {
  return "(" + std::to_string(a.k) + "," + std::to_string(a.l) + ")";
}

std::string ij_label(int i, int j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); }

int d(bool b) { return b ? 1 : 0; }

CurrentExpr make(const std::string& label, const Terms& ts) {
  CurrentExpr c(label);
  for (const auto& t : ts) c.add(t.coeff, t.factors);
  return c;
}

Terms operator+(Terms a, const Terms& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Terms scaled(Terms ts, const Rational& c) {
  for (auto& t : ts) t.coeff *= c;
  if (c == 0) ts.clear();
  return ts;
}

// :f X: for every term of X.
Terms prefixed(FF f, Terms ts) {
  for (auto& t : ts) t.factors.insert(t.factors.begin(), f);
  return ts;
}

Terms term(Rational c, std::vector<FF> fs) { return {CurrentTerm{std::move(c), std::move(fs)}}; }

// sum_{k=lo}^{hi} :a_{f(k)} a*_{g(k)}:
Terms pair_sum(int lo, int hi, const std::function<std::pair<Root, Root>(int)>& idx) {
  Terms out;
  for (int k = lo; k <= hi; ++k) {
    auto [x, y] = idx(k);
    out.push_back({1, {FF::a(x.k, x.l), FF::astar(y.k, y.l)}});
  }
  return out;
}

// sum_{k=i+1}^n a_{ik} a*_{i+1,k}
Terms f_tail(int i, int n) {
  return pair_sum(i + 1, n, [i](int k) { return std::pair{Root{i, k}, Root{i + 1, k}}; });
}
// sum_{k=1}^{i-1} a_{k,i-1} a*_{k,i-1}
Terms number_prev(int i) {
  return pair_sum(1, i - 1, [i](int k) { return std::pair{Root{k, i - 1}, Root{k, i - 1}}; });
}
// sum_{k=1}^{i} a_{ki} a*_{ki}
Terms number_cur(int i) {
  return pair_sum(1, i, [i](int k) { return std::pair{Root{k, i}, Root{k, i}}; });
}
Terms s_part(int i) { return number_prev(i) + scaled(number_cur(i), -1); }
Terms t1(int i) { return prefixed(FF::astar(i, i), number_prev(i)); }
Terms t2(int i) { return prefixed(FF::astar(i, i), number_cur(i)); }
Terms t_part(int i) { return prefixed(FF::astar(i, i), s_part(i)); }
// sum_{k=i+1}^n a_{i+1,k} a*_{ik}
Terms u_part(int i, int n) {
  return pair_sum(i + 1, n, [i](int k) { return std::pair{Root{i + 1, k}, Root{i, k}}; });
}
// sum_{k=1}^{i-1} a_{k,i-1} a*_{ki}
Terms v_part(int i) {
  return pair_sum(1, i - 1, [i](int k) { return std::pair{Root{k, i - 1}, Root{k, i}}; });
}

void add_terms(DistRhs& rhs, const Rational& c, const Terms& ts, Point at, KernelForm k) {
  for (const auto& t : ts) {
    std::vector<PlacedFactor> fs;
    for (const auto& f : t.factors) fs.push_back({f, at});
    rhs.add_product(c * t.coeff, std::move(fs), k);
  }
}

// Two placed single fields, e.g. :a*_ii(z) a*_jj(w):.
std::vector<PlacedFactor> placed(std::initializer_list<PlacedFactor> fs) { return fs; }

LemmaInstance bracket(std::string label, const std::string& xl, const Terms& x,
                      const std::string& yl, const Terms& y, int wx, int wy) {
  LemmaInstance inst;
  inst.label = std::move(label);
  inst.x = make(xl, x);
  inst.y = make(yl, y);
  inst.wx = inst.x.terms().empty() ? wx : inst.x.weight();
  inst.wy = inst.y.terms().empty() ? wy : inst.y.weight();
  return inst;
}

Terms cal_h(int i, int n) {
  Terms out;
  for (Root a : positive_roots(n)) {
    int s = root_pairing(i, a);
    if (s != 0) out.push_back({s, {FF::a(a.k, a.l), FF::astar(a.k, a.l)}});
  }
  return out;
}

void with_probe(LemmaInstance& inst, Rational printed, DistRhs structure, DistRhs rest) {
  inst.rhs = rest;
  for (const auto& t : structure.terms()) {
    // The printed rhs is rest plus the scaled structure term.
    inst.rhs.add_product(printed * t.coeff, t.factors,
                         t.kernel == Kernel::Delta ? KernelForm::DeltaZW : KernelForm::DwDelta);
  }
  inst.probe = ConstantProbe{std::move(printed), std::move(structure), std::move(rest)};
}

using Builder = std::function<std::vector<LemmaInstance>(const LieParams&)>;

std::vector<LemmaInstance> prelim_single(const LieParams& p, FieldKind kind) {
  const int n = p.n();
  std::vector<LemmaInstance> out;
  for (int i = 1; i <= n; ++i)
    for (Root a : positive_roots(n)) {
      FF f{kind, a.k, a.l};
      int s = root_pairing(i, a);
      auto inst = bracket("i=" + std::to_string(i) + ",alpha=" + root_label(a),
                          "CalH" + std::to_string(i), cal_h(i, n), f.to_string(),
                          term(1, {f}), 1, f.weight());
      switch (kind) {
        case FieldKind::A:
          inst.rhs.add_current(-s, single_field(f), Point::Z, KernelForm::DeltaZW);
          break;
        case FieldKind::AStar:
          inst.rhs.add_current(s, single_field(f), Point::Z, KernelForm::DeltaZW);
          break;
        default:
          inst.rhs.add_current(s, single_field(FF::astar(a.k, a.l)), Point::Z,
                               KernelForm::DwDelta);
          break;
      }
      out.push_back(std::move(inst));
    }
  return out;
}

std::vector<LemmaInstance> prelim4(const LieParams& p) {
  const int n = p.n(), r = p.r();
  const auto a = cartan_matrix<int>(n);
  std::vector<LemmaInstance> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto inst = bracket(ij_label(i, j), "CalH" + std::to_string(i), cal_h(i, n),
                          "CalH" + std::to_string(j), cal_h(j, n), 1, 1);
      Rational c = Rational((1 - d(i > r) * d(j > r)) * (r + 1)) +
                   Rational(r, 2) * d(i == r + 1) * d(j == r + 1);
      inst.rhs.add_scalar(-a(i - 1, j - 1) * c, KernelForm::DwDelta);
      out.push_back(std::move(inst));
    }
  return out;
}

// [CalH_i(z), :a_al a*_be a*_ga:(w)]
std::vector<LemmaInstance> prelim5(const LieParams& p) {
  const int n = p.n(), r = p.r();
  const auto roots = positive_roots(n);
  std::vector<LemmaInstance> out;
  for (int i = 1; i <= n; ++i)
    for (Root al : roots)
      for (Root be : roots)
        for (Root ga : roots) {
          if (ga < be) continue;
          FF fa = FF::a(al.k, al.l), fb = FF::astar(be.k, be.l), fg = FF::astar(ga.k, ga.l);
          Terms y = term(1, {fa, fb, fg});
          if (!is_field_product(y.front().factors, p)) continue;
          auto inst = bracket("i=" + std::to_string(i) + ",alpha=" + root_label(al) +
                                  ",beta=" + root_label(be) + ",gamma=" + root_label(ga),
                              "CalH" + std::to_string(i), cal_h(i, n), "aa*a*", y, 1, 1);
          Weight w = root_weight(n, be) + root_weight(n, ga) - root_weight(n, al);
          add_terms(inst.rhs, weight_pairing(i, w), y, Point::W, KernelForm::DeltaZW);
          if (al.in_levi(r)) {
            int s = root_pairing(i, al);
            if (al == be) inst.rhs.add_product(-s, placed({{fg, Point::W}}), KernelForm::DwDelta);
            if (al == ga) inst.rhs.add_product(-s, placed({{fb, Point::W}}), KernelForm::DwDelta);
          }
          out.push_back(std::move(inst));
        }
  return out;
}

// [CalH_i(z), :a_al a_be a*_ga:(w)]
std::vector<LemmaInstance> prelim6(const LieParams& p) {
  const int n = p.n(), r = p.r();
  const auto roots = positive_roots(n);
  std::vector<LemmaInstance> out;
  for (int i = 1; i <= n; ++i)
    for (Root al : roots)
      for (Root be : roots) {
        if (be < al) continue;
        for (Root ga : roots) {
          FF fa = FF::a(al.k, al.l), fb = FF::a(be.k, be.l), fg = FF::astar(ga.k, ga.l);
          Terms y = term(1, {fa, fb, fg});
          if (!is_field_product(y.front().factors, p)) continue;
          auto inst = bracket("i=" + std::to_string(i) + ",alpha=" + root_label(al) +
                                  ",beta=" + root_label(be) + ",gamma=" + root_label(ga),
                              "CalH" + std::to_string(i), cal_h(i, n), "aaa*", y, 1, 2);
          Weight w = root_weight(n, ga) - root_weight(n, al) - root_weight(n, be);
          add_terms(inst.rhs, weight_pairing(i, w), y, Point::W, KernelForm::DeltaZW);
          if (ga.in_levi(r)) {
            int s = root_pairing(i, ga);
            if (ga == be) inst.rhs.add_product(-s, placed({{fa, Point::W}}), KernelForm::DwDelta);
            if (ga == al) inst.rhs.add_product(-s, placed({{fb, Point::W}}), KernelForm::DwDelta);
          }
          out.push_back(std::move(inst));
        }
      }
  return out;
}

std::vector<LemmaInstance> collection1(const LieParams& p, bool derivative) {
  const auto roots = positive_roots(p.n());
  std::vector<LemmaInstance> out;
  for (Root a : roots)
    for (Root b : roots) {
      FF fy = derivative ? FF::dastar(b.k, b.l) : FF::astar(b.k, b.l);
      auto inst = bracket("alpha=" + root_label(a) + ",beta=" + root_label(b),
                          FF::a(a.k, a.l).to_string(), term(1, {FF::a(a.k, a.l)}),
                          fy.to_string(), term(1, {fy}), 1, fy.weight());
      if (a == b) inst.rhs.add_scalar(1, derivative ? KernelForm::DwDelta : KernelForm::DeltaZW);
      out.push_back(std::move(inst));
    }
  return out;
}

std::vector<LemmaInstance> collection2(const LieParams& p) {
  std::vector<LemmaInstance> out;
  for (Root a : positive_roots(p.n())) {
    Terms x = term(1, {FF::a(a.k, a.l), FF::astar(a.k, a.l)});
    auto inst = bracket("alpha=" + root_label(a), "aa*", x, "aa*", x, 1, 1);
    if (a.in_levi(p.r())) inst.rhs.add_scalar(-1, KernelForm::DwDelta);
    out.push_back(std::move(inst));
  }
  return out;
}

// d_w a*(w) delta(z-w) = a*(z) d_w delta - a*(w) d_w delta, as distributions.
std::vector<LemmaInstance> collection4(const LieParams& p) {
  std::vector<LemmaInstance> out;
  for (Root a : positive_roots(p.n()))
    for (int wx = 0; wx <= 1; ++wx)
      for (int wy = 0; wy <= 1; ++wy) {
        LemmaInstance inst;
        inst.label = "alpha=" + root_label(a) + ",wx=" + std::to_string(wx) +
                     ",wy=" + std::to_string(wy);
        inst.wx = wx;
        inst.wy = wy;
        DistRhs lhs;
        lhs.add_product(1, placed({{FF::dastar(a.k, a.l), Point::W}}), KernelForm::DeltaZW);
        inst.lhs = lhs;
        inst.rhs.add_product(1, placed({{FF::astar(a.k, a.l), Point::Z}}), KernelForm::DwDelta);
        inst.rhs.add_product(-1, placed({{FF::astar(a.k, a.l), Point::W}}), KernelForm::DwDelta);
        out.push_back(std::move(inst));
      }
  return out;
}

template <class F>
std::vector<LemmaInstance> all_pairs(const LieParams& p, F&& f) {
  std::vector<LemmaInstance> out;
  for (int i = 1; i <= p.n(); ++i)
    for (int j = 1; j <= p.n(); ++j) out.push_back(f(i, j));
  return out;
}

std::vector<LemmaInstance> prelim2_a(const LieParams& p) {
  const int n = p.n();
  return all_pairs(p, [n](int i, int j) {
    auto inst = bracket(ij_label(i, j), "Ftail", f_tail(i, n), "Ftail", f_tail(j, n), 1, 1);
    if (i == j + 1)
      add_terms(inst.rhs, 1,
                pair_sum(j + 2, n, [j](int k) { return std::pair{Root{j, k}, Root{j + 2, k}}; }),
                Point::Z, KernelForm::DeltaZW);
    if (j == i + 1)
      add_terms(inst.rhs, -1,
                pair_sum(i + 2, n, [i](int k) { return std::pair{Root{i, k}, Root{i + 2, k}}; }),
                Point::Z, KernelForm::DeltaZW);
    return inst;
  });
}

std::vector<LemmaInstance> prelim2_b(const LieParams& p) {
  const int n = p.n();
  return all_pairs(p, [n](int i, int j) {
    auto inst = bracket(ij_label(i, j), "V", v_part(i), "Ftail", f_tail(j, n), 1, 1);
    if (j == i - 1)
      add_terms(inst.rhs, -1, term(1, {FF::a(i - 1, i - 1), FF::astar(i, i)}), Point::Z,
                KernelForm::DeltaZW);
    return inst;
  });
}

std::vector<LemmaInstance> prelim2_c(const LieParams& p) {
  const int n = p.n();
  return all_pairs(p, [n](int i, int j) {
    return bracket(ij_label(i, j), "T", t_part(i), "Ftail", f_tail(j, n), 1, 1);
  });
}

std::vector<LemmaInstance> prelim2_d(const LieParams& p) {
  return all_pairs(p, [](int i, int j) {
    auto inst = bracket(ij_label(i, j), "T", t_part(i), "a", term(1, {FF::a(j, j)}), 1, 1);
    if (i == j) {
      add_terms(inst.rhs, -1, s_part(i), Point::Z, KernelForm::DeltaZW);
      add_terms(inst.rhs, 1, term(1, {FF::a(i, i), FF::astar(i, i)}), Point::Z,
                KernelForm::DeltaZW);
    }
    if (j == i - 1)
      add_terms(inst.rhs, -1, term(1, {FF::a(i - 1, i - 1), FF::astar(i, i)}), Point::Z,
                KernelForm::DeltaZW);
    return inst;
  });
}

std::vector<LemmaInstance> prelim2_e(const LieParams& p) {
  const int r = p.r();
  return all_pairs(p, [r](int i, int j) {
    auto inst = bracket(ij_label(i, j), "T1", t1(i), "T1", t1(j), 1, 1);
    DistRhs rest;
    if (j == i - 1)
      add_terms(rest, 1, prefixed(FF::astar(i, i), prefixed(FF::astar(i - 1, i - 1),
                                                             number_prev(i - 1))),
                Point::Z, KernelForm::DeltaZW);
    if (i == j - 1)
      add_terms(rest, -1, prefixed(FF::astar(j, j), prefixed(FF::astar(j - 1, j - 1),
                                                             number_prev(j - 1))),
                Point::W, KernelForm::DeltaZW);
    if (i == j) {
      DistRhs structure;
      structure.add_product(1, placed({{FF::astar(i, i), Point::Z}, {FF::astar(i, i), Point::W}}),
                            KernelForm::DwDelta);
      with_probe(inst, Rational(-(i - 1) * d(1 <= i - 1 && i - 1 <= r)), structure, rest);
    } else {
      inst.rhs = rest;
    }
    return inst;
  });
}

std::vector<LemmaInstance> prelim2_f(const LieParams& p) {
  const int r = p.r();
  return all_pairs(p, [r](int i, int j) {
    auto inst = bracket(ij_label(i, j), "T1", t1(i), "T2", t2(j), 1, 1);
    DistRhs rest;
    if (j == i - 1)
      add_terms(rest, 1, prefixed(FF::astar(i, i), prefixed(FF::astar(i - 1, i - 1),
                                                             number_prev(i))),
                Point::Z, KernelForm::DeltaZW);
    if (i == j)
      add_terms(rest, -1, prefixed(FF::astar(i, i), prefixed(FF::astar(i, i), number_prev(i))),
                Point::W, KernelForm::DeltaZW);
    if (j == i - 1) {
      DistRhs structure;
      structure.add_product(
          1, placed({{FF::astar(i, i), Point::Z}, {FF::astar(i - 1, i - 1), Point::W}}),
          KernelForm::DwDelta);
      with_probe(inst, Rational(-i * d(1 <= i - 1 && i - 1 <= r)), structure, rest);
    } else {
      inst.rhs = rest;
    }
    return inst;
  });
}

std::vector<LemmaInstance> prelim2_g(const LieParams& p) {
  const int r = p.r();
  return all_pairs(p, [r](int i, int j) {
    auto inst = bracket(ij_label(i, j), "T2", t2(i), "T2", t2(j), 1, 1);
    if (i == j) {
      DistRhs structure;
      structure.add_product(1, placed({{FF::astar(i, i), Point::Z}, {FF::astar(i, i), Point::W}}),
                            KernelForm::DwDelta);
      with_probe(inst, Rational(-(3 + i) * d(i <= r)), structure, DistRhs{});
    }
    return inst;
  });
}

std::vector<LemmaInstance> prelim2_h(const LieParams& p) {
  const int n = p.n(), r = p.r();
  return all_pairs(p, [n, r](int i, int j) {
    auto inst = bracket(ij_label(i, j), "T", t_part(i), "U", u_part(j, n), 1, 1);
    if (j == i - 1) {
      DistRhs rest;
      add_terms(rest, -1, prefixed(FF::astar(i - 1, i), s_part(i)), Point::Z,
                KernelForm::DeltaZW);
      DistRhs structure;
      structure.add_product(1, placed({{FF::astar(i - 1, i), Point::Z}}), KernelForm::DwDelta);
      with_probe(inst, Rational(d(i <= r)), structure, rest);
    }
    return inst;
  });
}

std::vector<LemmaInstance> prelim2_i(const LieParams& p) {
  return all_pairs(p, [](int i, int j) {
    auto inst = bracket(ij_label(i, j), "T", t_part(i), "V", v_part(j), 1, 1);
    Terms inner;
    if (i - 1 == j)
      inner = inner + pair_sum(1, i - 2, [i](int l) {
                return std::pair{Root{l, i - 2}, Root{l, i - 1}};
              });
    if (i == j)
      inner = inner + scaled(v_part(i), -2);
    if (i == j - 1)
      inner = inner + pair_sum(1, i, [i](int l) { return std::pair{Root{l, i}, Root{l, i + 1}}; });
    add_terms(inst.rhs, 1, prefixed(FF::astar(i, i), inner), Point::Z, KernelForm::DeltaZW);
    if (i == j - 1)
      add_terms(inst.rhs, -1, prefixed(FF::astar(i, i + 1), s_part(i)), Point::Z,
                KernelForm::DeltaZW);
    return inst;
  });
}

std::vector<LemmaInstance> prelim2_j(const LieParams& p) {
  return all_pairs(p, [](int i, int j) {
    auto inst = bracket(ij_label(i, j), "V", v_part(i), "V", v_part(j), 1, 1);
    if (j == i - 1)
      add_terms(inst.rhs, 1,
                pair_sum(1, i - 2, [i](int l) { return std::pair{Root{l, i - 2}, Root{l, i}}; }),
                Point::Z, KernelForm::DeltaZW);
    if (i == j - 1)
      add_terms(inst.rhs, -1,
                pair_sum(1, j - 2, [j](int l) { return std::pair{Root{l, j - 2}, Root{l, j}}; }),
                Point::Z, KernelForm::DeltaZW);
    return inst;
  });
}

std::vector<LemmaInstance> prelim2_k(const LieParams& p) {
  const int n = p.n();
  return all_pairs(p, [n](int i, int j) {
    auto inst = bracket(ij_label(i, j), "U", u_part(i, n), "U", u_part(j, n), 1, 1);
    if (i == j - 1)
      add_terms(inst.rhs, 1,
                pair_sum(i + 2, n, [i](int l) { return std::pair{Root{i + 2, l}, Root{i, l}}; }),
                Point::Z, KernelForm::DeltaZW);
    if (j == i - 1)
      add_terms(inst.rhs, -1,
                pair_sum(j + 2, n, [j](int l) { return std::pair{Root{j + 2, l}, Root{j, l}}; }),
                Point::Z, KernelForm::DeltaZW);
    return inst;
  });
}

std::vector<LemmaInstance> prelim2_l(const LieParams& p) {
  const int n = p.n();
  return all_pairs(p, [n](int i, int j) {
    return bracket(ij_label(i, j), "V", v_part(i), "U", u_part(j, n), 1, 1);
  });
}

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"PRELIM.1", [](const LieParams& p) { return prelim_single(p, FieldKind::A); }},
      {"PRELIM.2", [](const LieParams& p) { return prelim_single(p, FieldKind::AStar); }},
      {"PRELIM.3", [](const LieParams& p) { return prelim_single(p, FieldKind::DAStar); }},
      {"PRELIM.4", prelim4},
      {"PRELIM.5", prelim5},
      {"PRELIM.6", prelim6},
      {"COLLECTION.1", [](const LieParams& p) { return collection1(p, false); }},
      {"COLLECTION.2", collection2},
      {"COLLECTION.3", [](const LieParams& p) { return collection1(p, true); }},
      {"COLLECTION.4", collection4},
      {"PRELIM2.a", prelim2_a},
      {"PRELIM2.b", prelim2_b},
      {"PRELIM2.c", prelim2_c},
      {"PRELIM2.d", prelim2_d},
      {"PRELIM2.e", prelim2_e},
      {"PRELIM2.f", prelim2_f},
      {"PRELIM2.g", prelim2_g},
      {"PRELIM2.h", prelim2_h},
      {"PRELIM2.i", prelim2_i},
      {"PRELIM2.j", prelim2_j},
      {"PRELIM2.k", prelim2_k},
      {"PRELIM2.l", prelim2_l},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {
      "PRELIM.1",     "PRELIM.2",     "PRELIM.3",     "PRELIM.4",     "PRELIM.5",
      "PRELIM.6",     "COLLECTION.1", "COLLECTION.2", "COLLECTION.3", "COLLECTION.4",
      "PRELIM2.a",    "PRELIM2.b",    "PRELIM2.c",    "PRELIM2.d",    "PRELIM2.e",
      "PRELIM2.f",    "PRELIM2.g",    "PRELIM2.h",    "PRELIM2.i",    "PRELIM2.j",
      "PRELIM2.k",    "PRELIM2.l"};
  return ids;
}

std::string lemma_scope_note(const std::string& id) {
  if (id == "PRELIM.5")
    return "instances with beta <= gamma; products that are not fields on the Fock space "
           "are excluded";
  if (id == "PRELIM.6")
    return "instances with alpha <= beta; products that are not fields on the Fock space "
           "are excluded";
  return {};
}

std::vector<LemmaInstance> lemma_instances(const std::string& id, const LieParams& p) {
  auto it = builders().find(id);
  if (it == builders().end()) throw std::invalid_argument("unknown lemma id: " + id);
  return it->second(p);
}

}  // namespace wakimoto
