#include "glat/json_io.hpp"

#include "glat/errors.hpp"

namespace glat {

namespace {

// .at() style access that reports malformed documents as InputError.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

Json algebra_to_json(const GradedLieAlgebra& g) {
  Json j;
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["k"] = g.k();
  j["degrees"] = g.degrees();
  Json brackets = Json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int jj = i + 1; jj < g.dim(); ++jj) {
      const auto& terms = g.bracket_basis_raw(i, jj);
      if (terms.empty()) continue;
      Json t = Json::array();
      for (const auto& term : terms) t.push_back(Json::array({term.target, rat_str(term.coeff)}));
      brackets.push_back(Json::array({i, jj, t}));
    }
  j["brackets"] = std::move(brackets);
  return j;
}

GradedLieAlgebra algebra_from_json(const Json& j, bool run_validation) {
  return guarded("algebra json", [&] {
    const std::string name = j.at("name").get<std::string>();
    const int dim = j.at("dim").get<int>();
    const int k = j.at("k").get<int>();
    const std::vector<int> degrees = j.at("degrees").get<std::vector<int>>();
    if (static_cast<int>(degrees.size()) != dim)
      throw InputError("degrees length disagrees with dim");
    std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
    for (const auto& entry : j.at("brackets")) {
      const int a = entry.at(0).get<int>();
      const int b = entry.at(1).get<int>();
      std::vector<BracketTerm> terms;
      for (const auto& t : entry.at(2))
        terms.push_back({t.at(0).get<int>(), rat_parse(t.at(1).get<std::string>())});
      if (table.count({a, b})) throw InputError("duplicate bracket entry");
      table[{a, b}] = std::move(terms);
    }
    return run_validation ? GradedLieAlgebra::create(name, k, degrees, std::move(table))
                          : GradedLieAlgebra::unchecked(name, k, degrees, std::move(table));
  });
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  return guarded("matrix json", [&] {
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j) {
      std::vector<Rat> r;
      for (const auto& x : row) r.push_back(rat_parse(x.get<std::string>()));
      rows.push_back(std::move(r));
    }
    return rows.empty() ? RatMatrix() : RatMatrix::from_rows(rows);
  });
}

Json rat_vector_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rat_str(x));
  return out;
}

std::vector<Rat> rat_vector_from_json(const Json& j) {
  return guarded("rational vector", [&] {
    std::vector<Rat> out;
    for (const auto& x : j) out.push_back(rat_parse(x.get<std::string>()));
    return out;
  });
}

Json subalgebra_to_json(const GradedSubalgebra& b) {
  Json j;
  j["algebra"] = b.algebra_name;
  Json comps;
  for (const auto& [d, s] : b.components) comps[std::to_string(d)] = matrix_to_json(s.basis());
  j["components"] = std::move(comps);
  return j;
}

GradedSubalgebra subalgebra_from_json(const Json& j, const GradedLieAlgebra& g) {
  return guarded("subalgebra json", [&] {
    GradedSubalgebra b;
    b.algebra_name = j.at("algebra").get<std::string>();
    for (const auto& [key, rows] : j.at("components").items()) {
      const int d = std::stoi(key);
      const RatMatrix m = matrix_from_json(rows);
      b.components[d] = Subspace::from_rows(g.component_dim(d), m.rows() == 0 ? RatMatrix(0, g.component_dim(d)) : m);
    }
    return b;
  });
}

Json fields_to_json(const std::vector<PolyVectorField>& fields) {
  Json j;
  j["vars"] = fields.empty() ? 0 : fields[0].vars;
  Json fs = Json::array();
  for (const auto& f : fields) {
    Json comps = Json::array();
    for (const auto& p : f.components) {
      Json terms = Json::array();
      for (const auto& [e, c] : p.terms()) {
        Json t;
        t["coeff"] = rat_str(c);
        t["exps"] = e;
        terms.push_back(std::move(t));
      }
      comps.push_back(std::move(terms));
    }
    fs.push_back(std::move(comps));
  }
  j["fields"] = std::move(fs);
  return j;
}

std::vector<PolyVectorField> fields_from_json(const Json& j) {
  return guarded("fields json", [&] {
    const int vars = j.at("vars").get<int>();
    std::vector<PolyVectorField> out;
    for (const auto& fj : j.at("fields")) {
      PolyVectorField f;
      f.vars = vars;
      for (const auto& comp : fj) {
        Polynomial p(vars);
        for (const auto& term : comp) {
          const auto exps = term.at("exps").get<std::vector<int>>();
          if (static_cast<int>(exps.size()) != vars)
            throw InputError("term exponent vector has wrong length");
          p.add_term(exps, rat_parse(term.at("coeff").get<std::string>()));
        }
        f.components.push_back(std::move(p));
      }
      if (static_cast<int>(f.components.size()) != vars)
        throw InputError("field must list one component per variable");
      out.push_back(std::move(f));
    }
    return out;
  });
}

Json validation_report_to_json(const ValidationReport& rep) {
  Json j;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["pass"] = rep.structural_pass;
  j["killing_rank"] = rep.killing_rank;
  j["killing_nondegenerate"] = rep.killing_nondegenerate;
  return j;
}

Json prolongation_to_json(const ProlongationResult& r) {
  Json j;
  Json dims;
  for (const auto& [d, n] : r.component_dims) dims[std::to_string(d)] = n;
  j["dims"] = std::move(dims);
  j["total"] = r.total();
  j["terminated"] = r.terminated;
  if (r.truncated_at) j["truncated_at"] = *r.truncated_at;
  return j;
}

Json subalgebra_report_to_json(const SubalgebraReport& rep) {
  Json j;
  j["closed"] = rep.closed;
  j["proper"] = rep.proper;
  j["dim"] = rep.dim;
  Json prof;
  for (const auto& [d, n] : rep.profile) prof[std::to_string(d)] = n;
  j["profile"] = std::move(prof);
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

Json growth_to_json(const GrowthVector& gv) {
  Json j;
  j["dims"] = gv.dims;
  j["bracket_generating"] = gv.bracket_generating;
  j["capped"] = gv.capped;
  return j;
}

Json genericity_to_json(const GenericityReport& rep) {
  Json j;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["pass"] = rep.pass;
  return j;
}

Json classification_to_json(const Rank4Classification& c) {
  Json j;
  j["type"] = rank4_type_name(c.type);
  j["detail"] = c.detail;
  if (c.invariant_form.rows() == 4) {
    j["invariant_form"] = matrix_to_json(c.invariant_form);
    j["signature"] = Json::array({c.signature[0], c.signature[1], c.signature[2]});
  }
  return j;
}

Json gap_scan_to_json(const GapScanResult& r) {
  Json j;
  j["trials"] = r.trials;
  Json hist;
  for (const auto& [dim, count] : r.histogram) hist[std::to_string(dim)] = count;
  j["histogram"] = std::move(hist);
  Json viols = Json::array();
  for (const auto& v : r.violations) {
    Json vj;
    vj["dim"] = v.dim;
    Json prof;
    for (const auto& [d, n] : v.profile) prof[std::to_string(d)] = n;
    vj["profile"] = std::move(prof);
    Json gens = Json::array();
    for (const auto& [d, coords] : v.generators) {
      Json gj;
      gj["degree"] = d;
      gj["coords"] = rat_vector_to_json(coords);
      gens.push_back(std::move(gj));
    }
    vj["generators"] = std::move(gens);
    viols.push_back(std::move(vj));
  }
  j["violations"] = std::move(viols);
  return j;
}

}  // namespace glat
