#include "klie/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>

#include "klie/fixtures.hpp"
#include "klie/json_io.hpp"
#include "klie/weyl.hpp"

namespace klie {

namespace {

constexpr std::uint64_t kDefaultSeed = 2024;

CartanVector parse_z(const RootSystem& rs, const std::string& text) {
  RatVec v;
  try {
    v = parse_rational_vector(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("--z: ") + e.what());
  }
  if (static_cast<int>(v.size()) != rs.ambient_dim)
    throw std::invalid_argument("--z: expected " + std::to_string(rs.ambient_dim) +
                                " ambient coordinates for " + rs.name() + ", got " +
                                std::to_string(v.size()));
  if (!satisfies_constraints(rs, v)) {
    std::string residuals;
    for (const auto& c : rs.cartan_constraints) {
      if (!residuals.empty()) residuals += ", ";
      residuals += dot(c, v).str();
    }
    throw std::invalid_argument("--z: vector violates the Cartan constraints of " + rs.name() +
                                " (residuals: " + residuals + ")");
  }
  return {v};
}

std::string rat_str(const Json& pair) {
  const Rational r = rational_from_json(pair);
  return r.str();
}

std::string vec_text(const Json& vec) {
  std::string s = "(";
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (i) s += ",";
    s += rat_str(vec[i]);
  }
  return s + ")";
}

void render_text(const Json& payload, std::ostream& out) {
  if (payload.contains("positive_roots")) {  // roots
    out << payload["kind"].get<std::string>() << payload["rank"].get<int>()
        << "  (ambient dimension " << payload["ambient_dim"].get<int>() << ")\n";
    out << "simple roots:";
    for (const auto& r : payload["simple_roots"]) out << " " << vec_text(r);
    out << "\npositive roots (" << payload["positive_roots"].size() << "):";
    for (const auto& r : payload["positive_roots"]) out << " " << vec_text(r);
    out << "\n";
    if (!payload["cartan_constraints"].empty()) {
      out << "cartan constraints:";
      for (const auto& c : payload["cartan_constraints"]) out << " " << vec_text(c) << ".x=0";
      out << "\n";
    }
  } else if (payload.is_array()) {  // orbit
    out << "orbit size " << payload.size() << "\n";
    for (const auto& v : payload) out << vec_text(v) << "\n";
  } else if (payload.contains("case")) {  // classification
    const Json& c = payload["case"];
    if (c.is_number()) {
      static const char* kNames[] = {
          "", "(su(p+q), su(p) + su(q) + R)", "(so(2n), su(n) + R)",
          "(so(p+2), so(p) + R)", "(sp(n), su(n) + R)"};
      out << "case " << c.get<int>() << "  " << kNames[c.get<int>()];
      for (const auto& [key, val] : payload["parameters"].items())
        out << "  " << key << " = " << val.get<int>();
      out << "\n";
      if (payload["below_threshold"].get<bool>())
        out << "note: below the stated parameter threshold for this case\n";
    } else {
      out << c.get<std::string>() << "\n";
    }
    out << "factors:";
    if (payload["factors"].empty()) out << " (none)";
    for (const auto& f : payload["factors"]) out << " " << f.get<std::string>();
    out << "\ncenter dim " << payload["center_dim"].get<int>() << ", Z spans center: "
        << (payload["z_spans_center"].get<bool>() ? "yes" : "no") << "\n";
    render_text(payload["spectrum"], out);
  } else if (payload.contains("levels")) {  // spectrum
    for (const auto& level : payload["levels"])
      out << "lambda " << level["lambda_str"].get<std::string>() << "  multiplicity "
          << level["mult"].get<int>() << "\n";
    out << "dim m0 " << payload["dim_m0"].get<int>() << ", regular: "
        << (payload["regular"].get<bool>() ? "yes" : "no") << ", summands: "
        << payload["summands"].size() << "\n";
  } else if (payload.contains("summands")) {  // decomposition
    out << "dim m0 " << payload["dim_m0"].get<int>() << "\n";
    for (const auto& part : payload["summands"]) {
      out << "summand  lambda " << rat_str(part["lambda"]) << "  dim "
          << part["dim"].get<int>() << " :";
      for (const auto& r : part["roots"]) out << " " << vec_text(r);
      out << "\n";
    }
  } else if (payload.contains("reports")) {  // verify-sphere
    out << "fixture " << payload["fixture"].get<std::string>() << "\n";
    for (const auto& rep : payload["reports"]) {
      if (rep.contains("constant")) {
        out << (rep["constant"].get<bool>() ? "CONSTANT " : "NON-CONSTANT ")
            << rep["quantity_label"].get<std::string>();
        if (rep["constant"].get<bool>())
          out << "  |X|^2 = " << rat_str(rep["c"]);
        else
          out << "  witness " << vec_text(rep["witness_x"]) << " -> "
              << rat_str(rep["length_sq_x"]) << " vs " << vec_text(rep["witness_y"])
              << " -> " << rat_str(rep["length_sq_y"]);
        out << "\n";
      } else {
        out << (rep["pass"].get<bool>() ? "PASS " : "FAIL ")
            << rep["quantity_label"].get<std::string>() << "  max dev "
            << rep["max_abs_deviation"].get<double>() << " (tol "
            << rep["tolerance"].get<double>() << ", " << rep["num_samples"].get<int>()
            << " samples, seed " << rep["seed"].get<std::uint64_t>() << ")";
        if (rep["status"].get<std::string>() != "ok")
          out << "  [" << rep["status"].get<std::string>() << "]";
        out << "\n";
      }
    }
  } else {
    out << payload.dump(2) << "\n";
  }
}

void emit(const Json& payload, bool text, std::ostream& out) {
  if (text)
    render_text(payload, out);
  else
    out << payload.dump() << "\n";
}

int cmd_verify_sphere(const std::string& fixture, int samples, std::uint64_t seed,
                      bool text, std::ostream& out) {
  Json reports = Json::array();
  auto push_cert = [&](const LengthCertificate& cert, const std::string& label) {
    Json j;
    j["quantity_label"] = label;
    j["constant"] = cert.constant;
    if (cert.constant) {
      j["c"] = rational_json(cert.c);
    } else {
      j["witness_x"] = vector_json(cert.witness_x);
      j["witness_y"] = vector_json(cert.witness_y);
      j["length_sq_x"] = rational_json(cert.value_x);
      j["length_sq_y"] = rational_json(cert.value_y);
    }
    reports.push_back(j);
  };

  bool all_pass = true;
  auto push_report = [&](const SampleReport& r) {
    reports.push_back(report_json(r));
    all_pass = all_pass && r.pass;
  };

  if (fixture == "su4" || fixture == "so8" || fixture == "sp2" || fixture == "so10") {
    MatrixKind kind = MatrixKind::Su;
    int n = 4;
    if (fixture == "so8") kind = MatrixKind::So, n = 8;
    if (fixture == "so10") kind = MatrixKind::So, n = 10;
    if (fixture == "sp2") kind = MatrixKind::Sp, n = 2;
    const auto fx = make_hermitian_sphere_fixture(kind, n);
    const auto cert = is_constant_length(fx.z_doubled);
    push_cert(cert, "constant length of the integer generator");
    all_pass = all_pass && cert.constant;
    push_report(verify_orthogonality(fx.z_field, fx.m_fields, samples, seed));
    RatVec alpha(fx.basis.ambient_dim);
    if (fixture == "su4") {
      alpha[0] = Rational(1);
      alpha[2] = Rational(-1);
    } else if (fixture == "sp2") {
      alpha[0] = Rational(2);
    } else {
      alpha[0] = Rational(1);
      alpha[1] = Rational(1);
    }
    const auto pr = root_pair_fields(fx.basis, alpha);
    push_report(
        verify_root_pair_identities(fx.z_field, pr.u, pr.v, pr.alpha, samples, seed));
    if (fixture == "so10") {
      RatVec beta(5);
      beta[2] = Rational(1);
      beta[3] = Rational(1);
      const auto pb = root_pair_fields(fx.basis, beta);
      push_report(verify_pairing_transfer(fx.z_field, pr.u, pr.v, pr.alpha, pb.alpha,
                                          dot(alpha, beta), samples, seed));
    }
  } else if (fixture == "biinv-su2" || fixture == "biinv-so3" || fixture == "biinv-sp1") {
    MatrixKind kind = MatrixKind::Su;
    int n = 2;
    if (fixture == "biinv-so3") kind = MatrixKind::So, n = 3;
    if (fixture == "biinv-sp1") kind = MatrixKind::Sp, n = 1;
    push_report(biinvariant_all_constant(kind, n, std::min(samples, 200), seed));
  } else if (fixture == "s2-rotation") {
    const auto cert = is_constant_length(real_form(so3_triple(3).f12));
    push_cert(cert, "F_12 on S^2 (expected non-constant)");
    all_pass = all_pass && !cert.constant;
  } else {
    throw std::invalid_argument(
        "--fixture: unknown fixture '" + fixture +
        "' (expected su4, so8, so10, sp2, biinv-su2, biinv-so3, biinv-sp1, s2-rotation)");
  }

  Json payload;
  payload["fixture"] = fixture;
  payload["reports"] = reports;
  emit(payload, text, out);
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"killing-lie: exact root-system and Killing-field calculus for the "
               "compact classical algebras"};
  app.name("klie");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string algebra, ztext, fixture = "su4";
  int noncompact = 0;
  int samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string seed_env_error;
  try {
    seed = sampling_seed(kDefaultSeed);
  } catch (const std::exception& e) {
    seed_env_error = e.what();
  }
  std::size_t orbit_cap = 10'000'000;

  auto* roots = app.add_subcommand("roots", "Print the root system data");
  roots->add_option("--algebra", algebra, "Algebra, e.g. A2, B3, D5, E7")->required();

  auto* orbit = app.add_subcommand("orbit", "Weyl orbit of a Cartan vector");
  orbit->add_option("--algebra", algebra)->required();
  orbit->add_option("--z", ztext, "Exact rational vector, e.g. 1/2,0,-1")->required();
  orbit->add_option("--cap", orbit_cap, "Orbit size cap");

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of -L_Z^2 on m");
  spectrum->add_option("--algebra", algebra)->required();
  spectrum->add_option("--z", ztext)->required();

  auto* classify = app.add_subcommand("classify", "Hermitian-pair classification of (g, k)");
  classify->add_option("--algebra", algebra)->required();
  classify->add_option("--z", ztext, "Cartan vector in ambient coordinates");
  classify
      ->add_option("--noncompact", noncompact,
                   "Use the Hermitian generator of the j-th simple root")
      ->check(CLI::PositiveNumber);

  auto* decompose = app.add_subcommand("decompose", "Irreducible summands of m");
  decompose->add_option("--algebra", algebra)->required();
  decompose->add_option("--z", ztext)->required();

  auto* verify = app.add_subcommand("verify-sphere", "Sphere metric verifications");
  verify->add_option("--fixture", fixture,
                     "su4, so8, so10, sp2, biinv-su2, biinv-so3, biinv-sp1, s2-rotation");
  verify->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Sampling seed (default from KILLING_LIE_SEED)");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in fixture suite");
  selftest->add_option("--seed", seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool text = (format == "text");
  if (!seed_env_error.empty() && (verify->parsed() || selftest->parsed())) {
    err << "error: " << seed_env_error << "\n";
    return 2;
  }
  auto named_build = [&algebra]() {
    try {
      return build_from_name(algebra);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("--algebra: ") + e.what());
    }
  };
  try {
    if (roots->parsed()) {
      emit(root_system_json(named_build()), text, out);
    } else if (orbit->parsed()) {
      const RootSystem rs = named_build();
      emit(orbit_json(weyl_orbit(rs, parse_z(rs, ztext), orbit_cap)), text, out);
    } else if (spectrum->parsed()) {
      const RootSystem rs = named_build();
      emit(spectrum_json(rs, parse_z(rs, ztext)), text, out);
    } else if (classify->parsed()) {
      const RootSystem rs = named_build();
      CartanVector z;
      if (!ztext.empty() && noncompact > 0)
        throw std::invalid_argument("--z and --noncompact are mutually exclusive");
      if (!ztext.empty()) {
        z = parse_z(rs, ztext);
      } else if (noncompact > 0) {
        try {
          z = hermitian_generator(rs, noncompact);
        } catch (const std::domain_error& e) {
          throw std::invalid_argument(std::string("--noncompact: ") + e.what());
        }
      } else {
        throw std::invalid_argument("classify requires --z or --noncompact");
      }
      emit(classification_json(rs, z), text, out);
    } else if (decompose->parsed()) {
      const RootSystem rs = named_build();
      emit(decomposition_json(rs, parse_z(rs, ztext)), text, out);
    } else if (verify->parsed()) {
      return cmd_verify_sphere(fixture, samples, seed, text, out);
    } else if (selftest->parsed()) {
      int failures = 0;
      for (const auto& line : run_selftest(seed)) {
        out << (line.pass ? "PASS" : "FAIL") << "  " << line.label;
        if (!line.detail.empty()) out << "  (" << line.detail << ")";
        out << "\n";
        if (!line.pass) ++failures;
      }
      out << (failures == 0 ? "selftest: all checks passed"
                            : "selftest: " + std::to_string(failures) + " check(s) failed")
          << "\n";
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace klie
