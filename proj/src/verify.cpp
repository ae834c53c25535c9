#include "brq/verify.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "brq/brauer.hpp"
#include "brq/cli.hpp"
#include "brq/corpus.hpp"
#include "brq/error.hpp"
#include "brq/examples.hpp"
#include "brq/io.hpp"

namespace brq {

namespace {

using Factors = std::vector<std::int64_t>;

std::string show(const Factors& f) { return to_string(f); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

Vec times(const Vec& v, std::int64_t k, const Factors& d) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod_reduce(v[i] * k, d[i]);
  return out;
}

CaseResult check(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail)};
}

// Runs body and turns exceptions into a failing case.
void attempt(std::vector<CaseResult>& out, const std::string& name, const std::function<CaseResult()>& body) {
  try {
    out.push_back(body());
  } catch (const std::exception& e) {
    out.push_back(check(name, false, std::string("error: ") + e.what()));
  }
}

// ---------------------------------------------------------------------------

void abelian_shapes(std::int64_t bound, Factors& cur, std::int64_t product, std::vector<Factors>& out) {
  out.push_back(cur);
  const std::int64_t step = cur.empty() ? 1 : cur.back();
  for (std::int64_t d = std::max<std::int64_t>(2, step); product * d <= bound; d += step) {
    cur.push_back(d);
    abelian_shapes(bound, cur, product * d, out);
    cur.pop_back();
  }
}

std::vector<CaseResult> abelian_sweep() {
  std::vector<Factors> shapes;
  Factors cur;
  abelian_shapes(48, cur, 1, shapes);
  std::sort(shapes.begin(), shapes.end(), [](const Factors& a, const Factors& b) {
    std::int64_t pa = 1, pb = 1;
    for (auto x : a) pa *= x;
    for (auto x : b) pb *= x;
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<CaseResult> out;
  for (const Factors& s : shapes) {
    const std::string name = "A" + show(s);
    attempt(out, name, [&] {
      Factors pairs;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) pairs.push_back(gcd64(s[i], s[j]));
      const Factors expected = canonical_invariants(pairs);
      const FiniteGroup g = s.empty() ? cyclic_group(1) : abelian_group(s);
      const Factors got = h2_qz(g).invariant_factors();
      return check(name, got == expected, "h2 " + show(got) + " expected " + show(expected));
    });
  }
  return out;
}

std::vector<CaseResult> cyclic_vanishing() {
  std::vector<CaseResult> out;
  for (std::int64_t n = 1; n <= 96; ++n) {
    const std::string name = "C" + std::to_string(n);
    attempt(out, name, [&] {
      const Factors got = h2_qz(cyclic_group(n)).invariant_factors();
      return check(name, got.empty(), "h2 " + show(got));
    });
  }
  return out;
}

std::vector<CaseResult> b0_corpus() {
  std::vector<CaseResult> out;
  const auto corpus = b0_vanishing_corpus();
  out.push_back(check("corpus size", corpus.size() >= 30, std::to_string(corpus.size()) + " groups"));
  for (const auto& ng : corpus)
    attempt(out, ng.name, [&] {
      const FiniteGroup g = ng.make();
      const BrauerReport r = bogomolov_multiplier(g);
      const Factors& b0 = r.unramified_group.invariant_factors();
      return check(ng.name, g.order() <= 64 && b0.empty(),
                   "order " + std::to_string(g.order()) + " h2 " + show(r.h2) + " b0 " + show(b0));
    });
  return out;
}

std::vector<CaseResult> b0_order64() {
  std::vector<CaseResult> out;
  const FiniteGroup g = b0_order64_group();
  BrauerReport r;
  attempt(out, "multiplier", [&] {
    r = bogomolov_multiplier(g);
    const Factors& b0 = r.unramified_group.invariant_factors();
    return check("multiplier", g.order() == 64 && b0 == Factors{2},
                 "order " + std::to_string(g.order()) + " h2 " + show(r.h2) + " b0 " + show(b0));
  });
  attempt(out, "witness restricts to zero on all bicyclic subgroups", [&] {
    const BrauerContext all(g, 0, false);
    std::size_t checked = 0;
    bool pass = !r.unramified_witnesses.empty();
    for (const Vec& w : r.unramified_witnesses)
      for (std::size_t i = 0; i < all.subgroups().size(); ++i, ++checked)
        pass = pass && is_zero(all.restrict_to(i, w));
    return check("witness restricts to zero on all bicyclic subgroups", pass,
                 std::to_string(checked) + " restrictions");
  });
  return out;
}

std::vector<CaseResult> stack(const std::string& fixture_dir) {
  std::vector<CaseResult> out;
  attempt(out, "Klein four on P3", [] {
    const FiniteGroup k4 = abelian_group({2, 2});
    const Factors got = br_stack_fixed_point(k4, GModule::trivial_lattice(k4, 1), true).invariant_factors();
    return check("Klein four on P3", got == Factors{2}, "stack " + show(got));
  });
  attempt(out, "A4 restriction to Klein four", [] {
    const FiniteGroup g = alternating_group(4);
    const CohomologyGroup h = h2_qz(g);
    bool pass = h.invariant_factors() == Factors{2};
    std::size_t klein = 0;
    for (const auto& s : bicyclic_subgroups(g, false)) {
      if (s.order() != 4 || !pass) continue;
      const SubgroupGroup sg = subgroup_group(g, s);
      const CohomologyGroup hs = h2_qz(sg.group, h.modulus());
      pass = restrict_class(h, {1}, hs, sg) == Vec{1} && hs.invariant_factors() == Factors{2};
      ++klein;
    }
    return check("A4 restriction to Klein four", pass && klein == 1,
                 "h2 " + show(h.invariant_factors()) + ", injective on " + std::to_string(klein) + " subgroup");
  });
  attempt(out, "A4 on the moduli space of six points", [&] {
    const std::string path = fixture_dir + "/m06_pic.json";
    if (!std::filesystem::exists(path)) return check("A4 on the moduli space of six points", false, "missing " + path);
    Limits limits = Limits::defaults();
    limits.lattice_rank = std::max<std::size_t>(limits.lattice_rank, 16);
    const io::Document doc = io::parse_document(io::load_json(path), limits);
    if (!doc.pic) return check("A4 on the moduli space of six points", false, "no pic lattice");
    const Factors got = br_stack_fixed_point(doc.group, *doc.pic, true, limits).invariant_factors();
    return check("A4 on the moduli space of six points", got == (Factors{2, 2}) && doc.pic->rank() == 16,
                 "rank " + std::to_string(doc.pic->rank()) + " stack " + show(got));
  });
  return out;
}

// ---------------------------------------------------------------------------

struct Pool {
  std::vector<std::vector<Vec>> rank1, rank2, rank3;
};

Pool lattice_pool() {
  Pool p;
  p.rank1 = {{{-1}}};
  p.rank2 = {{{0, 1}, {1, 0}}, {{0, -1}, {1, 0}}, {{0, -1}, {1, -1}}, {{0, -1}, {1, 1}}, {{-1, 0}, {0, -1}},
             {{1, 0}, {0, -1}}};
  p.rank3 = {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
             {{0, -1, 0}, {1, -1, 0}, {0, 0, 1}}, {{0, -1, 0}, {1, 0, 0}, {0, 0, -1}}};
  return p;
}

std::vector<Vec> mat_mul(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> c(a.size(), Vec(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<Vec> mat_pow(const std::vector<Vec>& a, std::int64_t k) {
  std::vector<Vec> r(a.size(), Vec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i][i] = 1;
  for (std::int64_t i = 0; i < k; ++i) r = mat_mul(r, a);
  return r;
}

std::vector<Vec> scaled(std::vector<Vec> a, std::int64_t s) {
  for (auto& row : a)
    for (auto& x : row) x *= s;
  return a;
}

std::string describe(const GModule& m) {
  switch (m.kind()) {
    case GModule::Kind::trivial_qz:
      return "Q/Z";
    case GModule::Kind::finite: {
      std::ostringstream s;
      s << "finite " << show(m.factors());
      for (int g : m.group().generators()) {
        s << " ";
        for (const Vec& row : m.matrix(g)) s << to_string(row);
      }
      return s.str();
    }
    case GModule::Kind::lattice: {
      std::ostringstream s;
      s << "lattice rank " << m.rank();
      for (int g : m.group().generators()) {
        s << " ";
        for (const Vec& row : m.matrix(g)) s << to_string(row);
      }
      return s.str();
    }
  }
  return "";
}

// A random bicyclic group of order <= bound with a random coefficient module.
// Invalid actions (wrong orders) are rejected by GModule and redrawn.
GModule random_case(std::mt19937& rng, const Pool& pool) {
  for (;;) {
    const int kind = static_cast<int>(rng() % 4);
    const std::size_t bound = kind == 3 ? 24 : 36;
    std::vector<Factors> shapes;
    for (std::int64_t a = 1; a <= 36; ++a)
      for (std::int64_t b = a; a * b <= static_cast<std::int64_t>(bound); b += a)
        if (b > 1) shapes.push_back(a == 1 ? Factors{b} : Factors{a, b});
    const Factors shape = shapes[rng() % shapes.size()];
    const FiniteGroup g = abelian_group(shape);
    const std::size_t ngens = shape.size();
    try {
      if (kind == 0) return GModule::trivial_qz(g);
      if (kind == 1) {
        const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 11);
        std::vector<std::vector<Vec>> act;
        for (std::size_t i = 0; i < ngens; ++i) {
          std::vector<std::int64_t> units;
          for (std::int64_t u = 1; u < m; ++u)
            if (gcd64(u, m) == 1) units.push_back(u);
          act.push_back({{units[rng() % units.size()]}});
        }
        return GModule::finite(g, {m}, act);
      }
      if (kind == 2) {
        const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 5);
        const auto& p = pool.rank2[rng() % pool.rank2.size()];
        std::vector<std::vector<Vec>> act;
        act.push_back(mat_pow(p, 1 + static_cast<std::int64_t>(rng() % 2)));
        if (ngens > 1) act.push_back(scaled(mat_pow(p, static_cast<std::int64_t>(rng() % 3)), rng() % 2 ? -1 : 1));
        for (auto& a : act)
          for (auto& row : a)
            for (auto& x : row) x = mod_reduce(x, m);
        return GModule::finite(g, {m, m}, act);
      }
      const std::size_t rank = 1 + rng() % 3;
      const auto& list = rank == 1 ? pool.rank1 : rank == 2 ? pool.rank2 : pool.rank3;
      const auto& p = list[rng() % list.size()];
      std::vector<std::vector<Vec>> act;
      act.push_back(mat_pow(p, 1 + static_cast<std::int64_t>(rng() % 2)));
      if (ngens > 1) act.push_back(scaled(mat_pow(p, static_cast<std::int64_t>(rng() % 3)), rng() % 2 ? -1 : 1));
      return GModule::lattice(g, rank, act);
    } catch (const ValidationError&) {
      continue;
    }
  }
}

std::vector<CaseResult> oracle_equivalence() {
  std::mt19937 rng(20240611);
  const Pool pool = lattice_pool();
  std::vector<CaseResult> out;
  for (int i = 0; i < 50; ++i) {
    const GModule m = random_case(rng, pool);
    const std::string name = "case " + std::to_string(i);
    attempt(out, name, [&] {
      const Factors shape = abelian_structure(m.group()).invariants;
      const Factors b1 = h1(m).invariant_factors(), b2 = h2(m).invariant_factors();
      const Factors s1 = small_complex_h(m, 1), s2 = small_complex_h(m, 2);
      return check(name, b1 == s1 && b2 == s2,
                   "A " + show(shape) + " M " + describe(m) + " h1 " + show(b1) + "/" + show(s1) + " h2 " + show(b2) +
                       "/" + show(s2));
    });
  }
  return out;
}

std::vector<CaseResult> transfer() {
  std::vector<CaseResult> out;
  for (const auto& ng : b0_vanishing_corpus())
    attempt(out, ng.name, [&] {
      const FiniteGroup g = ng.make();
      const CohomologyGroup hg = h2_qz(g);
      const Factors& d = hg.invariant_factors();
      bool pass = true;
      std::size_t subgroups = 0;
      for (const auto& s : subgroups_of_small_index(g, 4)) {
        ++subgroups;
        const SubgroupGroup sg = subgroup_group(g, s);
        const CohomologyGroup hs = h2_qz(sg.group, hg.modulus());
        const auto index = static_cast<std::int64_t>(g.order() / s.order());
        for (std::size_t i = 0; i < d.size(); ++i) {
          Vec e(d.size(), 0);
          e[i] = 1;
          const Vec r = restrict_class(hg, e, hs, sg);
          pass = pass && corestrict_class(hs, r, hg, sg) == times(e, index, d);
        }
      }
      return check(ng.name, pass, "h2 " + show(d) + ", " + std::to_string(subgroups) + " subgroups of index <= 4");
    });
  return out;
}

// ---------------------------------------------------------------------------

// Basis of {u : m u = 0} as the columns of a matrix, by reduced row echelon form.
CycloMatrix right_kernel(CycloMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const CycloNumber inv = m(r, c).inverse();
    for (std::size_t j = 0; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const CycloNumber f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back(c);
  CycloMatrix k(cols, free.size(), m.conductor());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = CycloNumber::rational(1, m.conductor());
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -m(i, free[f]);
  }
  return k;
}

Vec beta_class(const SemilinearAction& a, int r, Factors& invariants) {
  const BrauerContext ctx(a.group);
  invariants = ctx.h2().invariant_factors();
  return ctx.class_of(plucker_action(a, r).scalar_cocycle);
}

std::vector<CaseResult> plucker_oracle() {
  std::vector<CaseResult> out;
  const SemilinearAction heis = heisenberg_correlation_action(4);
  const SemilinearAction integral = single_correlation_action(
      int_matrix({{0, 1, 0, 0}, {1, 0, 0, 2}, {0, 0, 0, 1}, {0, 2, 1, 1}}));
  std::vector<std::pair<const SemilinearAction*, int>> correlations;
  for (std::size_t x = 0; x < heis.group.order(); ++x)
    if (heis.is_correlation[x]) correlations.emplace_back(&heis, static_cast<int>(x));
  correlations.emplace_back(&integral, integral.group.generators()[0]);

  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> small(-3, 3);
  const int n = 4, r = 2;
  for (int plane = 0; plane < 25;) {
    std::vector<Vec> s(n, Vec(r));
    for (auto& row : s)
      for (auto& x : row) x = small(rng);
    const CycloMatrix sm = int_matrix(s);
    const CycloMatrix ps = exterior_power(sm, r);
    bool degenerate = true;
    for (std::size_t i = 0; i < ps.rows(); ++i) degenerate = degenerate && ps(i, 0).is_zero();
    if (degenerate) continue;
    const auto [action, element] = correlations[static_cast<std::size_t>(plane) % correlations.size()];
    const std::string name = "plane " + std::to_string(plane);
    attempt(out, name, [&, action = action, element = element] {
      const CycloMatrix image = action->matrices[static_cast<std::size_t>(element)] * sm;
      const CycloMatrix ann = right_kernel(image.transpose());
      if (ann.cols() != static_cast<std::size_t>(n - r)) return check(name, false, "annihilator has wrong dimension");
      const CycloMatrix pw = exterior_power(ann, n - r);
      const CycloMatrix pm = plucker_matrix(*action, element, r);
      const auto ratio = (pm * ps).scalar_ratio(pw);
      std::string where = action == &heis ? "Heisenberg element " + std::to_string(element) : "integral phi";
      return check(name, ratio.has_value() && !ratio->is_zero(),
                   where + " S " + [&] {
                     std::string t;
                     for (const Vec& row : s) t += to_string(row);
                     return t;
                   }() + " ratio " + (ratio ? ratio->to_string() : std::string("none")));
    });
    ++plane;
  }
  for (int h : {2, 4}) {
    const std::string name = "2 beta = 0, Heisenberg n = " + std::to_string(h);
    attempt(out, name, [&] {
      Factors d;
      const Vec beta = beta_class(heisenberg_correlation_action(h), h / 2, d);
      return check(name, is_zero(times(beta, 2, d)), "h2 " + show(d) + " beta " + to_string(beta));
    });
  }
  attempt(out, "2 beta = 0, integral phi", [&] {
    Factors d;
    const Vec beta = beta_class(integral, 2, d);
    return check("2 beta = 0, integral phi", is_zero(times(beta, 2, d)), "h2 " + show(d) + " beta " + to_string(beta));
  });
  return out;
}

// ---------------------------------------------------------------------------

std::string report_signature(const BrauerReport& r) {
  io::Json j = io::report_json(r, true);
  j.erase("kind");
  return j.dump();
}

std::vector<CaseResult> degeneracies() {
  std::vector<CaseResult> out;
  for (const auto& a : linear_action_corpus()) {
    const std::string name = "projective = linear: " + a.name;
    attempt(out, name, [&] {
      const BrauerReport proj = br_nr_projective(collineation_action(a.action));
      const BrauerReport lin = br_nr_linear(a.action.group);
      const bool same = report_signature(proj) == report_signature(lin);
      return check(name, same, "b0 " + show(lin.unramified_group.invariant_factors()));
    });
  }
  for (const auto& a : projective_action_corpus()) {
    const std::string name = "grassmannian r = 1 = projective: " + a.name;
    attempt(out, name, [&] {
      const BrauerReport g1 = br_nr_grassmannian(a.action, 1);
      const BrauerReport proj = br_nr_projective(collineation_action(a.action));
      return check(name, report_signature(g1) == report_signature(proj),
                   "stack " + show(proj.stack_group.invariant_factors()) + " unramified " +
                       show(proj.unramified_group.invariant_factors()));
    });
  }
  for (const auto& a : projective_action_corpus()) {
    const std::string name = "flag m = 1 = grassmannian: " + a.name;
    attempt(out, name, [&] {
      const int r = a.action.dimension / 2;
      const BrauerReport f = br_nr_flag(a.action, {r});
      const BrauerReport g = br_nr_grassmannian(a.action, r);
      return check(name, report_signature(f) == report_signature(g),
                   "r " + std::to_string(r) + " stack " + show(g.stack_group.invariant_factors()) + " unramified " +
                       show(g.unramified_group.invariant_factors()));
    });
  }
  return out;
}

std::vector<CaseResult> toric() {
  std::vector<CaseResult> out;
  for (const auto& ex : gl2z_finite_subgroups()) {
    const std::string name = ex.name;
    attempt(out, name, [&] {
      const BrauerReport r = br_nr_toric(ex.module());
      const Factors& u = r.unramified_group.invariant_factors();
      return check(name, u.empty(), std::string(ex.bicyclic ? "bicyclic" : "not bicyclic") + ", order " +
                                        std::to_string(ex.group().order()) + " h2 " + show(r.h2) + " unramified " +
                                        show(u));
    });
  }
  attempt(out, "S3 root lattice", [] {
    const LatticeExample ex = s3_root_lattice();
    const BrauerReport r = br_nr_toric(ex.module());
    return check("S3 root lattice", r.h2.empty() && r.unramified_group.trivial(),
                 "h2 " + show(r.h2) + " unramified " + show(r.unramified_group.invariant_factors()));
  });
  return out;
}

// ---------------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<CaseResult> fixtures(const std::string& dir) {
  std::vector<CaseResult> out;
  const io::Json manifest = io::load_json(dir + "/manifest.json");
  for (const auto& c : manifest.at("cases")) {
    const std::string name = c.at("name").get<std::string>();
    attempt(out, name, [&] {
      std::vector<std::string> args;
      for (const auto& a : c.at("args")) {
        std::string s = a.get<std::string>();
        if (!s.empty() && s[0] == '@') s = dir + "/" + s.substr(1);
        args.push_back(s);
      }
      std::ostringstream o, e;
      const int code = run_cli(args, o, e);
      const int want_code = c.value("exit", 0);
      const std::string expected = read_file(dir + "/" + c.at("expected").get<std::string>());
      const bool same = o.str() == expected;
      return check(name, same && code == want_code,
                   "exit " + std::to_string(code) + (same ? ", output identical" : ", output differs"));
    });
  }
  return out;
}

using SuiteFn = std::function<std::vector<CaseResult>(const std::string&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"abelian-sweep", [](const std::string&) { return abelian_sweep(); }},
      {"cyclic-vanishing", [](const std::string&) { return cyclic_vanishing(); }},
      {"b0-corpus", [](const std::string&) { return b0_corpus(); }},
      {"b0-order64", [](const std::string&) { return b0_order64(); }},
      {"stack", [](const std::string& d) { return stack(d); }},
      {"oracle-equivalence", [](const std::string&) { return oracle_equivalence(); }},
      {"transfer", [](const std::string&) { return transfer(); }},
      {"plucker-oracle", [](const std::string&) { return plucker_oracle(); }},
      {"degeneracies", [](const std::string&) { return degeneracies(); }},
      {"toric", [](const std::string&) { return toric(); }},
      {"fixtures", [](const std::string& d) { return fixtures(d); }},
  };
  return r;
}

}  // namespace

std::size_t SuiteResult::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

std::string SuiteResult::transcript() const {
  std::ostringstream s;
  for (const auto& c : cases) s << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  s << suite << ": " << passed() << "/" << cases.size() << " passed\n";
  return s.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"abelian-sweep", "cyclic-vanishing", "b0-corpus",      "b0-order64",
                                                  "stack",         "oracle-equivalence", "transfer",     "plucker-oracle",
                                                  "degeneracies",  "toric",            "fixtures"};
  return names;
}

std::string default_fixture_dir() {
  if (const char* s = std::getenv("BRQ_FIXTURE_DIR")) return s;
#ifdef BRQ_DEFAULT_FIXTURE_DIR
  return BRQ_DEFAULT_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw DomainError("unknown suite '" + name + "'");
  const std::string dir = options.fixture_dir.empty() ? default_fixture_dir() : options.fixture_dir;
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.suite = name;
  result.cases = it->second(dir);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace brq
