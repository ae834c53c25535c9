#include "brq/io.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include "brq/corpus.hpp"
#include "brq/error.hpp"

namespace brq::io {

namespace {

std::int64_t get_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ValidationError(what + ": expected an integer");
  return j.get<std::int64_t>();
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(what + ": missing \"" + key + "\"");
  return j.at(key);
}

std::vector<std::int64_t> get_int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + ": expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_int(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> to_ints(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

CycloNumber parse_term(const std::string& t, const std::string& what) {
  static const std::regex re(R"(^(\d+(?:/\d+)?)?(\*)?(?:(z)(\d+)(?:\^(-?\d+))?|(i))?$)");
  std::smatch m;
  if (t.empty() || !std::regex_match(t, m, re) || (!m[1].matched && !m[3].matched && !m[6].matched) ||
      (m[2].matched && !(m[1].matched && (m[3].matched || m[6].matched))))
    throw ValidationError(what + ": cannot parse cyclotomic term \"" + t + "\"");
  mpq_class coef(1);
  if (m[1].matched) {
    coef = mpq_class(m[1].str());
    coef.canonicalize();
  }
  if (m[6].matched) return CycloNumber::zeta(4, 1) * CycloNumber::rational(coef, 4);
  if (!m[3].matched) return CycloNumber::rational(coef);
  const std::int64_t order = std::stoll(m[4].str());
  if (order < 1 || order > 10000) throw ValidationError(what + ": root of unity order out of range in \"" + t + "\"");
  const std::int64_t k = m[5].matched ? std::stoll(m[5].str()) : 1;
  return CycloNumber::zeta(order, k) * CycloNumber::rational(coef, order);
}

CycloNumber add_promoted(const CycloNumber& a, const CycloNumber& b) {
  const std::int64_t l = std::lcm(a.conductor(), b.conductor());
  return a.promote(l) + b.promote(l);
}

std::string kind_name(GModule::Kind k) {
  switch (k) {
    case GModule::Kind::trivial_qz:
      return "trivial_qz";
    case GModule::Kind::finite:
      return "finite";
    case GModule::Kind::lattice:
      return "lattice";
  }
  return "";
}

FiniteGroup named_group(const std::string& name) {
  std::smatch m;
  static const std::regex re(R"(^([CDQSA])(\d+)$)");
  if (std::regex_match(name, m, re)) {
    const int n = std::stoi(m[2].str());
    const char c = m[1].str()[0];
    if (n >= 1 && n <= 4096) {
      if (c == 'C') return cyclic_group(n);
      if (c == 'D' && n >= 2) return dihedral_group(n);
      if (c == 'Q' && n >= 8 && n % 4 == 0) return dicyclic_group(n / 4);
      if (c == 'S' && n >= 1 && n <= 6) return symmetric_group(n);
      if (c == 'A' && n >= 1 && n <= 6) return alternating_group(n);
    }
  }
  if (name == "K4") return abelian_group({2, 2});
  if (name == "B0-64") return b0_order64_group();
  for (const auto& ng : b0_vanishing_corpus())
    if (ng.name == name) return ng.make();
  throw ValidationError("group: unknown name \"" + name + "\"");
}

Json matrix_json(const std::vector<Vec>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

CycloNumber parse_cyclo(const Json& j) {
  if (j.is_number_integer()) return CycloNumber::rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (j.is_object()) {
    const std::int64_t m = get_int(field(j, "m", "cyclotomic number"), "cyclotomic conductor");
    if (m < 1 || m > 10000) throw ValidationError("cyclotomic conductor out of range: " + std::to_string(m));
    const Json& c = field(j, "c", "cyclotomic number");
    if (!c.is_array() || c.size() > static_cast<std::size_t>(euler_phi(m)))
      throw ValidationError("cyclotomic number: \"c\" must list at most phi(m) coefficients");
    QPoly poly(static_cast<std::size_t>(euler_phi(m)));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_number_integer()) {
        poly[i] = mpq_class(std::to_string(c[i].get<std::int64_t>()));
      } else if (c[i].is_array() && c[i].size() == 2) {
        const std::int64_t den = get_int(c[i][1], "coefficient denominator");
        if (den == 0) throw ValidationError("cyclotomic number: zero denominator");
        poly[i] = mpq_class(mpz_class(std::to_string(get_int(c[i][0], "coefficient numerator"))),
                            mpz_class(std::to_string(den)));
        poly[i].canonicalize();
      } else {
        throw ValidationError("cyclotomic number: coefficients must be integers or [num, den] pairs");
      }
    }
    return CycloNumber(m, poly);
  }
  if (!j.is_string()) throw ValidationError("cyclotomic number: expected an integer, a string or an object");
  std::string s;
  for (char ch : j.get<std::string>())
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ValidationError("cyclotomic number: empty string");
  CycloNumber total = CycloNumber::rational(0);
  std::size_t start = 0;
  int sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    const bool end = i == s.size();
    if (end || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^')) {
      CycloNumber t = parse_term(s.substr(start, i - start), "cyclotomic number \"" + s + "\"");
      total = add_promoted(total, sign < 0 ? -t : t);
      if (!end) {
        sign = s[i] == '-' ? -1 : 1;
        start = i + 1;
      }
    }
  }
  return total;
}

CycloMatrix parse_cyclo_matrix(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw ValidationError(what + ": expected a nonempty matrix");
  const std::size_t rows = j.size(), cols = j[0].size();
  std::vector<CycloNumber> entries;
  std::int64_t l = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ValidationError(what + ": rows have different lengths");
    for (std::size_t k = 0; k < cols; ++k) {
      try {
        entries.push_back(parse_cyclo(j[i][k]));
      } catch (const ValidationError& e) {
        throw ValidationError(what + ", entry (" + std::to_string(i) + ", " + std::to_string(k) + "): " + e.what());
      }
      l = std::lcm(l, entries.back().conductor());
    }
  }
  CycloMatrix m(rows, cols, l);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = entries[i * cols + k].promote(l);
  return m;
}

std::vector<Vec> parse_int_matrix(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ValidationError(what + ": expected a nonempty integer matrix");
  std::vector<Vec> m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    m.push_back(get_int_list(j[i], what + ", row " + std::to_string(i)));
    if (m.back().size() != m[0].size()) throw ValidationError(what + ": rows have different lengths");
  }
  return m;
}

std::vector<Json> generator_entries(const Json& j, const FiniteGroup& g, bool identity_default, const std::string& what) {
  const std::size_t n = g.generators().size();
  std::vector<Json> out(n);
  if (j.is_array()) {
    if (j.size() != n)
      throw ValidationError(what + ": expected " + std::to_string(n) + " generator matrices, got " +
                            std::to_string(j.size()));
    for (std::size_t i = 0; i < n; ++i) out[i] = j[i];
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::size_t pos = 0;
      long idx = -1;
      try {
        idx = std::stol(key, &pos);
      } catch (...) {
        pos = 0;
      }
      if (pos != key.size() || idx < 0 || static_cast<std::size_t>(idx) >= n)
        throw ValidationError(what + ": \"" + key + "\" is not a generator position (0.." + std::to_string(n) + ")");
      out[static_cast<std::size_t>(idx)] = value;
    }
  } else {
    throw ValidationError(what + ": expected an object keyed by generator position or an array");
  }
  if (!identity_default)
    for (std::size_t i = 0; i < n; ++i)
      if (out[i].is_null()) throw ValidationError(what + ": generator " + std::to_string(i) + " has no matrix");
  return out;
}

namespace {

std::vector<std::vector<Vec>> integer_action(const Json& j, const FiniteGroup& g, std::size_t rank,
                                             const std::string& what) {
  std::vector<std::vector<Vec>> mats;
  const auto entries = generator_entries(j, g, true, what);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].is_null()) {
      std::vector<Vec> id(rank, Vec(rank, 0));
      for (std::size_t k = 0; k < rank; ++k) id[k][k] = 1;
      mats.push_back(std::move(id));
      continue;
    }
    auto m = parse_int_matrix(entries[i], what + ", generator " + std::to_string(i));
    if (m.size() != rank || m[0].size() != rank)
      throw ValidationError(what + ", generator " + std::to_string(i) + ": matrix must be " + std::to_string(rank) +
                            " x " + std::to_string(rank));
    mats.push_back(std::move(m));
  }
  return mats;
}

std::size_t get_rank(const Json& j, const std::string& what) {
  const std::int64_t r = get_int(field(j, "rank", what), what + " rank");
  if (r < 1 || r > 64) throw ValidationError(what + ": rank must lie in 1..64");
  return static_cast<std::size_t>(r);
}

}  // namespace

FiniteGroup parse_group(const Json& j, const Limits& limits) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("group: expected an object with a string \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "permutation") {
    const std::int64_t degree = get_int(field(j, "degree", "permutation group"), "permutation degree");
    if (degree < 1 || degree > 4096) throw ValidationError("permutation degree out of range");
    const Json& gens = field(j, "generators", "permutation group");
    if (!gens.is_array()) throw ValidationError("permutation group: \"generators\" must be an array");
    std::vector<Perm> perms;
    for (std::size_t i = 0; i < gens.size(); ++i)
      perms.push_back(to_ints(get_int_list(gens[i], "permutation " + std::to_string(i))));
    return from_permutation_generators(static_cast<int>(degree), perms, limits.group_order);
  }
  if (kind == "cayley") {
    const Json& t = field(j, "table", "Cayley table");
    if (!t.is_array()) throw ValidationError("Cayley table: expected an array of rows");
    if (t.size() > limits.group_order)
      throw SizeLimitError("Cayley table of order " + std::to_string(t.size()) + " exceeds the maximum order " +
                           std::to_string(limits.group_order));
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < t.size(); ++i) rows.push_back(to_ints(get_int_list(t[i], "Cayley table row " + std::to_string(i))));
    return from_cayley_table(rows);
  }
  if (kind == "semidirect") {
    const FiniteGroup a = parse_group(field(j, "normal", "semidirect product"), limits);
    const FiniteGroup b = parse_group(field(j, "acting", "semidirect product"), limits);
    const Json& act = field(j, "action", "semidirect product");
    if (!act.is_array()) throw ValidationError("semidirect product: \"action\" must be an array of image lists");
    std::vector<std::vector<int>> action;
    for (std::size_t i = 0; i < act.size(); ++i)
      action.push_back(to_ints(get_int_list(act[i], "semidirect action " + std::to_string(i))));
    if (a.order() * b.order() > limits.group_order)
      throw SizeLimitError("semidirect product exceeds the maximum order " + std::to_string(limits.group_order));
    return semidirect_product(a, b, action);
  }
  if (kind == "central_extension") {
    const FiniteGroup base = parse_group(field(j, "base", "central extension"), limits);
    const std::int64_t n = get_int(field(j, "n", "central extension"), "central extension n");
    if (n < 1) throw ValidationError("central extension: n must be positive");
    const Json& c = field(j, "cocycle", "central extension");
    if (!c.is_array() || c.size() != base.order())
      throw ValidationError("central extension: cocycle must be a " + std::to_string(base.order()) + " x " +
                            std::to_string(base.order()) + " table");
    if (base.order() * static_cast<std::size_t>(n) > limits.group_order)
      throw SizeLimitError("central extension exceeds the maximum order " + std::to_string(limits.group_order));
    std::vector<std::int64_t> flat;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto row = get_int_list(c[i], "cocycle row " + std::to_string(i));
      if (row.size() != base.order()) throw ValidationError("central extension: cocycle rows must have length |G|");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return central_extension_from_cocycle(base, n, flat);
  }
  if (kind == "abelian") {
    const auto f = get_int_list(field(j, "factors", "abelian group"), "abelian factors");
    std::size_t order = 1;
    for (auto x : f) {
      if (x < 1) throw ValidationError("abelian group: factors must be positive");
      order *= static_cast<std::size_t>(x);
      if (order > limits.group_order)
        throw SizeLimitError("abelian group exceeds the maximum order " + std::to_string(limits.group_order));
    }
    return abelian_group(f);
  }
  if (kind == "named") {
    const Json& n = field(j, "name", "named group");
    if (!n.is_string()) throw ValidationError("named group: \"name\" must be a string");
    FiniteGroup g = named_group(n.get<std::string>());
    if (g.order() > limits.group_order)
      throw SizeLimitError("group exceeds the maximum order " + std::to_string(limits.group_order));
    return g;
  }
  throw ValidationError("group: unknown kind \"" + kind + "\"");
}

GModule parse_module(const Json& j, const FiniteGroup& g) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("module: expected an object with a string \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "trivial_qz") return GModule::trivial_qz(g);
  if (kind == "finite") {
    const auto factors = get_int_list(field(j, "factors", "finite module"), "finite module factors");
    if (factors.empty()) throw ValidationError("finite module: needs at least one factor");
    for (auto d : factors)
      if (d < 1) throw ValidationError("finite module: factors must be positive");
    const Json none = Json::object();
    return GModule::finite(g, factors, integer_action(j.contains("action") ? j["action"] : none, g, factors.size(),
                                                      "finite module action"));
  }
  if (kind == "lattice") {
    const std::size_t rank = get_rank(j, "lattice");
    const Json none = Json::object();
    return GModule::lattice(g, rank, integer_action(j.contains("action") ? j["action"] : none, g, rank, "lattice action"));
  }
  throw ValidationError("module: unknown kind \"" + kind + "\"");
}

Document parse_document(const Json& j, const Limits& limits) {
  if (!j.is_object()) throw ValidationError("document: expected a JSON object");
  Document d;
  if (j.contains("kind")) {
    d.group = parse_group(j, limits);
    return d;
  }
  d.group = parse_group(field(j, "group", "document"), limits);
  const FiniteGroup& g = d.group;
  if (j.contains("module")) d.module = parse_module(j["module"], g);
  if (j.contains("pic")) d.pic = parse_module(j["pic"], g);
  if (j.contains("toric")) {
    const Json& t = j["toric"];
    const std::size_t rank = get_rank(t, "toric");
    const Json none = Json::object();
    d.toric = GModule::lattice(g, rank, integer_action(t.contains("matrices") ? t["matrices"] : none, g, rank, "toric"));
  }
  if (j.contains("flags")) {
    const Json& f = j["flags"];
    if (!f.is_object()) throw ValidationError("flags: expected an object");
    if (f.contains("fixed_point")) {
      if (!f["fixed_point"].is_boolean()) throw ValidationError("flags: \"fixed_point\" must be true or false");
      d.fixed_point = f["fixed_point"].get<bool>();
    }
  }
  if (j.contains("projective") || j.contains("correlation")) {
    const std::size_t ng = g.generators().size();
    std::vector<Json> entries(ng);
    std::int64_t dim = 0;
    if (j.contains("projective")) {
      const Json& p = j["projective"];
      dim = get_int(field(p, "dimension", "projective"), "projective dimension");
      entries = generator_entries(field(p, "matrices", "projective"), g, true, "projective matrices");
    }
    std::vector<bool> corr(ng, false);
    if (j.contains("correlation")) {
      const Json& c = j["correlation"];
      const Json list = c.is_array() ? c : Json::array({c});
      for (const auto& item : list) {
        const std::int64_t w = get_int(field(item, "coset_witness", "correlation"), "correlation coset_witness");
        if (w < 0 || static_cast<std::size_t>(w) >= ng)
          throw ValidationError("correlation: coset_witness must be a generator position (0.." +
                                std::to_string(ng - 1) + ")");
        if (!entries[static_cast<std::size_t>(w)].is_null())
          throw ValidationError("correlation: generator " + std::to_string(w) + " also has a collineation matrix");
        entries[static_cast<std::size_t>(w)] = field(item, "phi", "correlation");
        corr[static_cast<std::size_t>(w)] = true;
      }
    }
    std::vector<CycloMatrix> mats;
    for (std::size_t i = 0; i < ng; ++i) {
      if (entries[i].is_null()) throw ValidationError("projective: generator " + std::to_string(i) + " has no matrix");
      mats.push_back(parse_cyclo_matrix(entries[i], (corr[i] ? "correlation phi, generator " : "projective, generator ") +
                                                        std::to_string(i)));
      if (dim == 0) dim = static_cast<std::int64_t>(mats.back().rows());
      if (mats.back().rows() != static_cast<std::size_t>(dim) || mats.back().cols() != static_cast<std::size_t>(dim))
        throw ValidationError("generator " + std::to_string(i) + ": matrix must be " + std::to_string(dim) + " x " +
                              std::to_string(dim));
    }
    if (ng == 0) throw ValidationError("projective: the group has no generators");
    d.semilinear = semilinear_action(g, mats, corr);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Rendering

Json cyclo_json(const CycloNumber& x) {
  Json c = Json::array();
  for (const auto& q : x.coefficients()) {
    if (q.get_den() == 1)
      c.push_back(std::stoll(q.get_num().get_str()));
    else
      c.push_back(Json::array({std::stoll(q.get_num().get_str()), std::stoll(q.get_den().get_str())}));
  }
  return Json{{"m", x.conductor()}, {"c", c}};
}

Json structure_json(const AbelianStructure& s, bool witnesses) {
  Json j{{"invariant_factors", s.invariant_factors()}};
  if (witnesses) j["witnesses"] = matrix_json(s.witnesses());
  return j;
}

Json cochain_json(const Cochain& c) {
  Json values = Json::array();
  auto entry = [&](std::size_t offset) {
    if (c.k == 1) return Json(c.values[offset]);
    return Json(Vec(c.values.begin() + static_cast<std::ptrdiff_t>(offset),
                    c.values.begin() + static_cast<std::ptrdiff_t>(offset + c.k)));
  };
  if (c.degree == 1) {
    for (std::size_t g = 0; g < c.n; ++g) values.push_back(entry(g * c.k));
  } else {
    for (std::size_t g = 0; g < c.n; ++g) {
      Json row = Json::array();
      for (std::size_t h = 0; h < c.n; ++h) row.push_back(entry((g * c.n + h) * c.k));
      values.push_back(row);
    }
  }
  return Json{{"degree", c.degree}, {"modulus", c.modulus}, {"values", values}};
}

Json cohomology_json(const CohomologyGroup& h, bool witnesses) {
  Json j{{"degree", h.degree()},
         {"module", kind_name(h.module().kind())},
         {"modulus", h.modulus()},
         {"invariant_factors", h.invariant_factors()}};
  if (witnesses) {
    Json reps = Json::array();
    for (const auto& c : h.representatives()) reps.push_back(cochain_json(c));
    j["representatives"] = reps;
  }
  return j;
}

Json report_json(const BrauerReport& r, bool witnesses) {
  Json diagnostics = Json::array();
  for (const auto& d : r.diagnostics) {
    Json e{{"class", d.coords}};
    if (d.detected) {
      e["detected_by"] = *d.detected;
      e["subgroup"] = r.subgroups[*d.detected].elements;
    } else {
      e["detected_by"] = nullptr;
    }
    diagnostics.push_back(e);
  }
  Json j{{"kind", r.kind},
         {"modulus", r.modulus},
         {"h2", r.h2},
         {"amitsur", matrix_json(r.amitsur)},
         {"stack_group", structure_json(r.stack_group, false)},
         {"invariant_factors", r.unramified_group.invariant_factors()}};
  if (witnesses) j["witnesses"] = matrix_json(r.unramified_witnesses);
  j["subgroup_count"] = r.subgroups.size();
  if (witnesses) {
    Json subs = Json::array();
    for (const auto& s : r.subgroups) subs.push_back(s.generators);
    j["subgroup_generators"] = subs;
  }
  j["diagnostics"] = diagnostics;
  j["flags"] = r.flags;
  return j;
}

Json group_info_json(const FiniteGroup& g, bool subgroups) {
  const auto bic = bicyclic_subgroups(g, true);
  Json j{{"order", g.order()},
         {"generators", g.generators()},
         {"abelian", g.is_abelian()},
         {"exponent", g.exponent()},
         {"center_order", center(g).size()},
         {"abelianization", h1(GModule::trivial_qz(g)).invariant_factors()},
         {"bicyclic_subgroup_classes", bic.size()}};
  if (subgroups) {
    Json subs = Json::array();
    for (const auto& s : bic) subs.push_back(s.elements);
    j["bicyclic_subgroups"] = subs;
  }
  return j;
}

std::string factors_text(const std::vector<std::int64_t>& f) {
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " + Z/" : "Z/") + std::to_string(f[i]);
  return s;
}

std::string structure_text(const AbelianStructure& s) { return factors_text(s.invariant_factors()); }

std::string cohomology_text(const CohomologyGroup& h, bool witnesses) {
  std::ostringstream out;
  out << "H^" << h.degree() << "(G, " << kind_name(h.module().kind()) << ") = " << factors_text(h.invariant_factors())
      << "\n";
  if (witnesses)
    for (std::size_t i = 0; i < h.representatives().size(); ++i)
      out << "  generator " << i << ": " << cochain_json(h.representatives()[i]).dump() << "\n";
  return out.str();
}

std::string report_text(const BrauerReport& r, bool witnesses) {
  std::ostringstream out;
  out << "kind: " << r.kind << "\n";
  out << "H^2(G, Q/Z) = " << factors_text(r.h2) << "\n";
  if (!r.amitsur.empty()) {
    out << "Amitsur generators:";
    for (const auto& a : r.amitsur) out << " " << vec_text(a);
    out << "\n";
  }
  out << "stack group = " << structure_text(r.stack_group) << "\n";
  out << "unramified Brauer group = " << structure_text(r.unramified_group) << "\n";
  if (witnesses)
    for (const auto& w : r.unramified_witnesses) out << "  witness " << vec_text(w) << "\n";
  out << "bicyclic subgroups checked: " << r.subgroups.size() << "\n";
  for (const auto& d : r.diagnostics) {
    out << "  class " << vec_text(d.coords);
    if (d.detected)
      out << " is detected on subgroup " << *d.detected << " (order " << r.subgroups[*d.detected].order() << ")\n";
    else
      out << " restricts to zero on every subgroup\n";
  }
  for (const auto& f : r.flags) out << "flag: " << f << "\n";
  return out.str();
}

std::string group_info_text(const FiniteGroup& g, bool subgroups) {
  const Json j = group_info_json(g, subgroups);
  std::ostringstream out;
  out << "order: " << g.order() << "\n";
  out << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n";
  out << "exponent: " << g.exponent() << "\n";
  out << "center order: " << j["center_order"].get<std::size_t>() << "\n";
  out << "abelianization: " << factors_text(j["abelianization"].get<std::vector<std::int64_t>>()) << "\n";
  out << "bicyclic subgroup classes: " << j["bicyclic_subgroup_classes"].get<std::size_t>() << "\n";
  if (subgroups)
    for (const auto& s : j["bicyclic_subgroups"]) out << "  " << s.dump() << "\n";
  return out.str();
}

}  // namespace brq::io
