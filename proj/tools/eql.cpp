// eql: batch front-end for the exact quiver library.
//
//   eql <command> --input <path> --order <N> --field <spec> --out <path> [--seed <u64>]
//
// Commands: transfer, potential, moduli, ncdef.  Reports are JSON with
// a "verdicts" array; identical config and fixtures produce
// byte-identical output.  Exit codes: 0 success, 2 invalid fixture or
// config, 3 failed structural identity (Stasheff / cyclicity / hull),
// 4 infeasible enumeration.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "eql/ainfinity.hpp"
#include "eql/fixtures.hpp"
#include "eql/json_io.hpp"
#include "eql/moduli.hpp"
#include "eql/ncdef.hpp"
#include "eql/potential.hpp"

namespace {

using eql::json;

struct Config {
  std::string command, input, field = "rationals", out;
  int order = 3;
  std::uint64_t seed = 0;
};

constexpr int kExitFixture = 2;
constexpr int kExitIdentity = 3;
constexpr int kExitInfeasible = 4;

struct ExitWith {
  int code;
  std::string message;
};

void add_verdict(json& rep, const std::string& name, bool pass, json witness = nullptr) {
  json v{{"name", name}, {"pass", pass}};
  if (!witness.is_null()) v["witness"] = std::move(witness);
  rep["verdicts"].push_back(std::move(v));
}

void write_report(const Config& cfg, const json& rep) {
  std::ofstream os(cfg.out, std::ios::binary);
  if (!os) throw ExitWith{1, "cannot write " + cfg.out};
  os << rep.dump(2) << "\n";
}

json report_skeleton(const Config& cfg) {
  return json{{"schema_version", 1},
              {"command", cfg.command},
              {"field", cfg.field},
              {"order", cfg.order},
              {"verdicts", json::array()}};
}

template <class K>
json series_to_json(const eql::PathSeries<K>& f) {
  json terms = json::array();
  for (const auto& [w, c] : f.coefficients()) {
    json t{{"word", w.edges}, {"coeff", eql::json_scalar<K>::dump(c)}};
    terms.push_back(std::move(t));
  }
  json out{{"terms", std::move(terms)}};
  if (f.endpoints()) {
    out["source"] = f.endpoints()->first;
    out["target"] = f.endpoints()->second;
  }
  return out;
}

// ---- transfer ---------------------------------------------------------

template <class K>
int cmd_transfer(const Config& cfg, const json& fixture) {
  eql::DgAlgebra<K> A = eql::load_dg_algebra<K>(fixture);
  auto dga = eql::check_dga(A);
  if (!dga.pass) throw ExitWith{kExitFixture, "not a dg-algebra: " + dga.detail};
  auto hodge = eql::compute_hodge(A);
  eql::AInfinityStructure<K> ainf;
  eql::TransferData<K> I;
  eql::transfer_both(hodge, cfg.order, ainf, I);

  json rep = report_skeleton(cfg);
  std::map<int, int> hdims;
  for (const auto& g : ainf.h_basis) ++hdims[g.degree];
  for (const auto& [deg, d] : hdims)
    rep["cohomology"][std::to_string(deg)] = d;
  for (int n = 2; n <= ainf.max_arity; ++n) {
    json tensor = json::array();
    for (const auto& [tuple, col] : ainf.bar(n).cols) {
      auto m = ainf.m_column(n, tuple);
      json inputs = json::array();
      for (int t : tuple) inputs.push_back(ainf.h_basis[t].name);
      json outputs;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != K(0)) outputs[ainf.h_basis[i].name] = eql::json_scalar<K>::dump(m[i]);
      tensor.push_back(json{{"inputs", std::move(inputs)}, {"outputs", std::move(outputs)}});
    }
    rep["products"]["m" + std::to_string(n)] = std::move(tensor);
  }
  auto st = eql::check_stasheff(ainf);
  add_verdict(rep, "stasheff identities", st.pass,
              st.pass ? json(nullptr) : json{{"detail", st.detail}});
  auto mo = eql::check_morphism(hodge, ainf, I, std::max(2, cfg.order - 1));
  add_verdict(rep, "morphism identities", mo.pass,
              mo.pass ? json(nullptr) : json{{"detail", mo.detail}});
  write_report(cfg, rep);
  return st.pass && mo.pass ? 0 : kExitIdentity;
}

// ---- potential --------------------------------------------------------

template <class K>
int cmd_potential(const Config& cfg, const json& fixture) {
  if constexpr (eql::field_traits<K>::characteristic != 0) {
    (void)fixture;
    throw ExitWith{kExitFixture, "potential pipelines need a characteristic-zero field"};
  } else {
  if (cfg.order < 2) throw ExitWith{kExitFixture, "potential pipelines need order >= 2"};
  eql::DgAlgebra<K> A = eql::load_dg_algebra<K>(fixture);
  auto dga = eql::check_dga(A);
  if (!dga.pass) throw ExitWith{kExitFixture, "not a dg-algebra: " + dga.detail};
  if (!fixture.contains("pairing")) throw ExitWith{kExitFixture, "potential needs a pairing"};
  auto hodge = eql::compute_hodge(A);
  eql::AInfinityStructure<K> ainf;
  eql::TransferData<K> I;
  eql::transfer_both(hodge, cfg.order + 1, ainf, I);
  auto pairing =
      eql::load_pairing<K>(fixture.at("pairing"), A, hodge.incl, ainf.h_basis.size());
  eql::ExtQuiverPresentation<K> pres(ainf);

  json rep = report_skeleton(cfg);
  auto cyc = eql::check_cyclic(ainf, pairing, std::min(cfg.order, ainf.max_arity - 1));
  add_verdict(rep, "pairing cyclicity", cyc.pass,
              cyc.pass ? json(nullptr) : json{{"detail", cyc.detail}});
  if (!cyc.pass) {
    write_report(cfg, rep);
    return kExitIdentity;
  }
  auto W = eql::build_potential(ainf, pairing, pres, cfg.order + 1);
  rep["potential"] = series_to_json(W.series());
  auto reln = eql::relations_from_products(ainf, pres, &pairing, cfg.order);
  for (std::size_t i = 0; i < pres.quiver().edges().size(); ++i) {
    int eid = pres.quiver().edges()[i].id;
    auto dW = eql::cyclic_derivative(W, eid);
    rep["derivatives"]["edge" + std::to_string(eid)] = series_to_json(dW);
  }
  auto jac = eql::verify_jacobian_identity(ainf, pairing, pres, cfg.order);
  add_verdict(rep, "jacobian identity I = dW", jac.pass,
              jac.pass ? json(nullptr) : json{{"detail", jac.detail}});
  write_report(cfg, rep);
  return jac.pass ? 0 : kExitIdentity;
  }
}

// ---- moduli -----------------------------------------------------------

eql::Rat sample_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  return eql::Rat(num(rng), den(rng));
}

// Crit(tr W) = MC on representations sampled from the dg section.
template <class K>
void moduli_crit_section(const Config& cfg, const json& dg, json& rep, bool& all_pass) {
  using R = eql::Rat;
  eql::DgAlgebra<R> A = eql::load_dg_algebra<R>(dg);
  auto dga = eql::check_dga(A);
  if (!dga.pass) throw ExitWith{kExitFixture, "not a dg-algebra: " + dga.detail};
  if (!dg.contains("pairing")) throw ExitWith{kExitFixture, "crit/mc section needs a pairing"};
  auto hodge = eql::compute_hodge(A);
  eql::AInfinityStructure<R> ainf;
  eql::TransferData<R> I;
  int order = std::max(3, cfg.order);
  eql::transfer_both(hodge, order + 1, ainf, I);
  auto pairing = eql::load_pairing<R>(dg.at("pairing"), A, hodge.incl, ainf.h_basis.size());
  eql::ExtQuiverPresentation<R> pres(ainf);
  auto W = eql::build_potential(ainf, pairing, pres, order + 1);
  auto reln = eql::relations_from_products(ainf, pres, &pairing, order);
  std::mt19937_64 rng(cfg.seed);
  int samples = dg.value("samples", 10);
  bool ok = true;
  std::string why;
  for (int s = 0; s < samples && ok; ++s) {
    std::map<int, int> dims;
    for (int v : pres.quiver().vertices()) dims[v] = 1 + static_cast<int>(rng() % 3);
    eql::DimVector dv(pres.quiver(), dims);
    std::map<int, eql::Matrix<R>> mats;
    for (const auto& e : pres.quiver().edges()) {
      eql::Matrix<R> m(dims.at(e.target), dims.at(e.source));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sample_rat(rng);
      mats.emplace(e.id, std::move(m));
    }
    eql::Representation<R> u(pres.quiver_ptr(), dv, std::move(mats));
    auto cr = eql::crit_equals_mc(W, reln, u);
    auto kappa = eql::mc_defect(ainf, pres, u, order);
    bool kz = eql::mc_defect_is_zero(kappa);
    bool gz = true;
    for (const auto& e : pres.quiver().edges())
      if (!eql::trace_gradient_entrywise(W, u, e.id, order).is_zero()) gz = false;
    if (!cr.pass) {
      ok = false;
      why = cr.detail;
    }
    if (kz != gz) {
      ok = false;
      why = "kappa vanishing disagrees with the gradient";
    }
  }
  add_verdict(rep, "crit(tr W) = MC on sampled representations", ok,
              ok ? json(nullptr) : json{{"detail", why}});
  all_pass = all_pass && ok;
}

template <class K>
int cmd_moduli(const Config& cfg, const json& fixture) {
  if constexpr (!eql::field_traits<K>::finite) {
    (void)fixture;
    throw ExitWith{kExitFixture, "moduli enumeration needs a finite field (use --field F<p>)"};
  } else {
  if (!fixture.contains("quiver")) throw ExitWith{kExitFixture, "moduli needs a quiver"};
  eql::Quiver q = eql::load_quiver(fixture.at("quiver"));
  auto reln = eql::load_relations<K>(fixture.value("relations", json(nullptr)), &q, cfg.order);
  eql::DimVector dim(q, eql::load_dimension_vector<K>(fixture.at("dimension")));
  eql::StabilityParameter sigma(eql::load_stability(fixture.at("stability")));

  json rep = report_skeleton(cfg);
  rep["seed"] = cfg.seed;
  bool all_pass = true;
  try {
    auto cls = eql::s_equivalence_classes(&q, reln, dim, sigma);
    rep["classes"]["semistable_count"] = cls.semistable.size();
    rep["classes"]["class_count"] = cls.classes.size();
    json sigs = json::array();
    for (const auto& s : cls.signatures) sigs.push_back(s);
    rep["classes"]["signatures"] = std::move(sigs);
    json factors = json::array();
    for (const auto& f : cls.factor_registry) {
      json fd;
      for (const auto& [v, m] : f.dim().entries()) fd[std::to_string(v)] = m;
      factors.push_back(std::move(fd));
    }
    rep["classes"]["stable_factors"] = std::move(factors);
    add_verdict(rep, "s-equivalence classes computed", true);

    if (fixture.contains("stability_plus")) {
      eql::StabilityParameter sp(eql::load_stability(fixture.at("stability_plus")));
      auto wc = eql::wallcross_compare(&q, reln, dim, sigma, sp);
      json w{{"wall_detected", wc.wall_detected},
             {"sigma_classes", wc.sigma_classes},
             {"sigma_plus_classes", wc.sigma_plus_classes}};
      if (wc.wall_detected) {
        w["wall_equation"] = wc.wall_equation;
        json sub;
        for (const auto& [v, m] : wc.offending_subdim) sub[std::to_string(v)] = m;
        w["offending_subdim"] = std::move(sub);
      } else {
        w["fibers"] = wc.fibers;
      }
      rep["wallcross"] = std::move(w);
      add_verdict(rep, "wall-crossing comparison computed", true);
    }
  } catch (const std::runtime_error& e) {
    if (std::string(e.what()).find("infeasible") != std::string::npos)
      throw ExitWith{kExitInfeasible, e.what()};
    throw;
  }
  if (fixture.contains("dg")) moduli_crit_section<K>(cfg, fixture.at("dg"), rep, all_pass);
  write_report(cfg, rep);
  return all_pass ? 0 : kExitIdentity;
  }
}

// ---- ncdef ------------------------------------------------------------

template <class K>
int cmd_ncdef(const Config& cfg, const json& fixture) {
  if (!fixture.contains("quiver")) throw ExitWith{kExitFixture, "ncdef needs a quiver"};
  eql::Quiver q = eql::load_quiver(fixture.at("quiver"));
  int n_max = cfg.order;
  int ambient_order = n_max + 1;
  auto reln =
      eql::load_relations<K>(fixture.value("relations", json(nullptr)), &q, ambient_order);
  eql::QuotientAlgebra<K> A(&q, reln, ambient_order);
  auto tower = eql::build_tower(A, n_max + 1);

  json rep = report_skeleton(cfg);
  json levels = json::array();
  for (int n = 0; n <= n_max; ++n)
    levels.push_back(json{{"level", n},
                          {"dim_E", tower.levels[n].E.d},
                          {"dim_R", tower.levels[n].R.dim()}});
  rep["tower"] = std::move(levels);
  auto hull = eql::hull_compare(&q, reln, tower, n_max);
  json hv = json::array();
  for (std::size_t n = 0; n < hull.levels.size(); ++n)
    hv.push_back(json{{"level", n}, {"pass", hull.levels[n].pass}});
  rep["hull_levels"] = std::move(hv);
  std::string hull_why;
  for (const auto& l : hull.levels)
    if (!l.pass && hull_why.empty()) hull_why = l.detail;
  add_verdict(rep, "hull comparison R = A/m^(n+1)", hull.pass,
              hull.pass ? json(nullptr) : json{{"detail", hull_why}});
  bool equiv_pass = true;
  if constexpr (eql::field_traits<K>::finite) {
    int dim_bound = fixture.value("dim_bound", 3);
    // feasibility: worst-case number of enumerated matrices
    double worst = 1;
    std::size_t slots = q.edges().size() * dim_bound * (dim_bound - 1) / 2;
    for (std::size_t s = 0; s < slots; ++s) worst *= eql::field_traits<K>::order;
    double types = std::pow(static_cast<double>(q.vertices().size()), dim_bound);
    if (worst * types > static_cast<double>(1u << 22))
      throw ExitWith{kExitInfeasible,
                     "enumeration infeasible: about " + std::to_string(worst * types) +
                         " modules at dim_bound " + std::to_string(dim_bound)};
    auto eq = eql::check_equivalence(A, tower, n_max, dim_bound);
    for (const auto& [name, ok] : eq.checks) add_verdict(rep, name, ok);
    equiv_pass = eq.pass;
  }
  write_report(cfg, rep);
  return hull.pass && equiv_pass ? 0 : kExitIdentity;
}

// ---- dispatch ---------------------------------------------------------

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <template <class> class Cmd>
struct Runner;

template <class F>
int dispatch_field(const Config& cfg, const json& fixture, F&& run, bool allow_finite,
                   bool need_char0) {
  if (cfg.field == "rationals") return run.template operator()<eql::Rat>(cfg, fixture);
  if (cfg.field == "gaussian-rationals")
    return run.template operator()<eql::GaussRat>(cfg, fixture);
  if (cfg.field.size() > 1 && cfg.field[0] == 'F') {
    int p = std::stoi(cfg.field.substr(1));
    if (!is_prime(p)) throw ExitWith{kExitFixture, "field characteristic must be prime"};
    if (need_char0)
      throw ExitWith{kExitFixture, "this command needs a characteristic-zero field"};
    if (!allow_finite) throw ExitWith{kExitFixture, "finite fields unsupported here"};
    switch (p) {
      case 2: return run.template operator()<eql::Fp<2>>(cfg, fixture);
      case 3: return run.template operator()<eql::Fp<3>>(cfg, fixture);
      case 5: return run.template operator()<eql::Fp<5>>(cfg, fixture);
      case 7: return run.template operator()<eql::Fp<7>>(cfg, fixture);
      case 11: return run.template operator()<eql::Fp<11>>(cfg, fixture);
      case 13: return run.template operator()<eql::Fp<13>>(cfg, fixture);
      default: throw ExitWith{kExitFixture, "unsupported prime " + std::to_string(p)};
    }
  }
  throw ExitWith{kExitFixture, "unknown field spec " + cfg.field};
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"exact quiver library front-end"};
  app.add_option("command", cfg.command, "transfer | potential | moduli | ncdef")->required();
  app.add_option("--input", cfg.input, "fixture path")->required();
  app.add_option("--order", cfg.order, "truncation order / arity cap");
  app.add_option("--field", cfg.field, "rationals | gaussian-rationals | F<p>");
  app.add_option("--out", cfg.out, "report path")->required();
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  CLI11_PARSE(app, argc, argv);

  try {
    json fixture;
    {
      std::ifstream is(cfg.input, std::ios::binary);
      if (!is) throw ExitWith{kExitFixture, "cannot read " + cfg.input};
      try {
        fixture = json::parse(is);
      } catch (const json::parse_error& e) {
        throw ExitWith{kExitFixture, std::string("malformed JSON: ") + e.what()};
      }
    }
    try {
      eql::require_schema(fixture);
      if (cfg.command == "transfer") {
        return dispatch_field(
            cfg, fixture,
            []<class K>(const Config& c, const json& f) { return cmd_transfer<K>(c, f); },
            true, false);
      } else if (cfg.command == "potential") {
        return dispatch_field(
            cfg, fixture,
            []<class K>(const Config& c, const json& f) { return cmd_potential<K>(c, f); },
            false, true);
      } else if (cfg.command == "moduli") {
        return dispatch_field(
            cfg, fixture,
            []<class K>(const Config& c, const json& f) { return cmd_moduli<K>(c, f); },
            true, false);
      } else if (cfg.command == "ncdef") {
        return dispatch_field(
            cfg, fixture,
            []<class K>(const Config& c, const json& f) { return cmd_ncdef<K>(c, f); },
            true, false);
      }
      throw ExitWith{kExitFixture, "unknown command " + cfg.command};
    } catch (const eql::FixtureError& e) {
      throw ExitWith{kExitFixture, e.what()};
    }
  } catch (const ExitWith& e) {
    std::cerr << "eql: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "eql: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
