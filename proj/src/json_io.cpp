#include "klie/json_io.hpp"

namespace klie {

Json rational_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

Json vector_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected [num, den] rational");
  return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

RatVec vector_from_json(const Json& j) {
  RatVec v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

Json root_system_json(const RootSystem& rs) {
  Json out;
  out["kind"] = kind_name(rs.kind);
  out["rank"] = rs.rank;
  out["ambient_dim"] = rs.ambient_dim;
  Json simple = Json::array(), positive = Json::array(), constraints = Json::array();
  for (const auto& r : rs.simple_roots) simple.push_back(vector_json(r.coords));
  for (const auto& r : rs.positive_roots) positive.push_back(vector_json(r.coords));
  for (const auto& c : rs.cartan_constraints) constraints.push_back(vector_json(c));
  out["simple_roots"] = simple;
  out["positive_roots"] = positive;
  out["cartan_constraints"] = constraints;
  return out;
}

Json orbit_json(const std::vector<CartanVector>& orbit) {
  Json out = Json::array();
  for (const auto& v : orbit) out.push_back(vector_json(v.coords));
  return out;
}

Json spectrum_json(const RootSystem& rs, const CartanVector& z) {
  const SpectrumReport report = eigen_spectrum(rs, z);
  Json out;
  Json levels = Json::array();
  for (const auto& e : report.entries) {
    Json level;
    level["lambda"] = rational_json(e.lambda);
    level["lambda_str"] = e.lambda.str();
    level["mult"] = e.multiplicity;
    levels.push_back(level);
  }
  out["levels"] = levels;
  out["dim_m0"] = report.dim_m0;
  out["regular"] = is_regular(rs, z);
  Json summands = Json::array();
  for (const auto& comp : report.summands) summands.push_back(comp);
  out["summands"] = summands;
  return out;
}

Json classification_json(const RootSystem& rs, const CartanVector& z) {
  const auto cls = classify_hermitian_pair(rs, z);
  const auto desc = centralizer_type(rs, z);
  Json out;
  switch (cls.outcome) {
    case HermitianOutcome::NotHermitian: out["case"] = "not-hermitian"; break;
    case HermitianOutcome::Case1: out["case"] = 1; break;
    case HermitianOutcome::Case2: out["case"] = 2; break;
    case HermitianOutcome::Case3: out["case"] = 3; break;
    case HermitianOutcome::Case4: out["case"] = 4; break;
    case HermitianOutcome::ExcludedE6: out["case"] = "excluded-e6"; break;
    case HermitianOutcome::ExcludedE7: out["case"] = "excluded-e7"; break;
  }
  Json params = Json::object();
  if (cls.outcome == HermitianOutcome::Case1) {
    params["p"] = cls.p;
    params["q"] = cls.q;
  } else if (cls.outcome == HermitianOutcome::Case3) {
    params["p"] = cls.p;
  } else if (cls.outcome == HermitianOutcome::Case2 ||
             cls.outcome == HermitianOutcome::Case4) {
    params["n"] = cls.n;
  }
  out["parameters"] = params;
  if (cls.noncompact_index > 0) out["noncompact_index"] = cls.noncompact_index;
  Json factors = Json::array();
  for (const auto& f : desc.factors) factors.push_back(factor_name(f));
  out["factors"] = factors;
  out["center_dim"] = desc.center_dim;
  out["z_spans_center"] = desc.z_spans_center;
  out["spectrum"] = spectrum_json(rs, z);
  out["below_threshold"] = cls.below_threshold;
  return out;
}

Json decomposition_json(const RootSystem& rs, const CartanVector& z) {
  const RootSplit split = split_roots(rs, z);
  const auto summands = irreducible_summands(rs, z);
  Json out;
  out["dim_m0"] = rs.rank + 2 * static_cast<int>(split.i2.size());
  Json parts = Json::array();
  for (const auto& comp : summands) {
    Json part;
    part["lambda"] = rational_json(dot(z.coords, split.i1[comp.front()].coords).abs());
    Json roots = Json::array();
    for (auto idx : comp) roots.push_back(vector_json(split.i1[idx].coords));
    part["roots"] = roots;
    part["dim"] = 2 * comp.size();
    parts.push_back(part);
  }
  out["summands"] = parts;
  Json i2 = Json::array();
  for (const auto& g : split.i2) i2.push_back(vector_json(g.coords));
  out["i2_roots"] = i2;
  return out;
}

Json report_json(const SampleReport& report) {
  Json out;
  out["quantity_label"] = report.quantity_label;
  out["num_samples"] = report.num_samples;
  out["seed"] = report.seed;
  out["max_abs_deviation"] = report.max_abs_deviation;
  out["tolerance"] = report.tolerance;
  out["pass"] = report.pass;
  out["status"] = report.status;
  return out;
}

Json matrix_json(const AlgebraElement& x) {
  const bool complex_entries = x.kind != MatrixKind::So;
  Json rows = Json::array();
  for (std::size_t i = 0; i < x.mat.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < x.mat.size(); ++j) {
      const GaussianRational& e = x.mat(i, j);
      if (complex_entries)
        row.push_back(Json::array({rational_json(e.re), rational_json(e.im)}));
      else
        row.push_back(rational_json(e.re));
    }
    rows.push_back(row);
  }
  Json out;
  out["kind"] = matrix_kind_name(x.kind);
  out["n"] = x.n;
  out["entries"] = rows;
  return out;
}

}  // namespace klie
