// Command-line front end for the GSp4 Serre-weight engine.
//
// Subcommands: predict, companions, bgg, lifts, decompose, enumerate, check.
// Types are given as --mu a,b,c (torus character), --diag e1,e2,e3,e4
// (inertia exponents) or --weight k,l (modular weight).  Output is plain
// text or JSON; identical requests produce byte-identical output.
// Exit codes: 0 success, 2 invalid request, 3 internal inconsistency.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "gsp4/checks.hpp"
#include "gsp4/json_io.hpp"

namespace {

using namespace gsp4;

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Int> parse_ints(const std::string& csv, size_t n, const char* what) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(errc::bad_request, std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  if (out.size() != n)
    fail(errc::bad_request,
         std::string(what) + " needs " + std::to_string(n) + " comma-separated integers");
  return out;
}

struct TypeInput {
  std::string mu, diag, weight;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mu", mu, "torus character a,b,c");
    cmd->add_option("--diag", diag, "diagonal inertia exponents e1,e2,e3,e4");
    cmd->add_option("--weight", weight, "modular weight k,l");
  }

  TameType resolve(Int p) const {
    const int given = (!mu.empty()) + (!diag.empty()) + (!weight.empty());
    if (given != 1)
      fail(errc::bad_request, "give exactly one of --mu, --diag, --weight");
    if (!mu.empty()) {
      const auto v = parse_ints(mu, 3, "--mu");
      return type_from_weight(Weight(v[0], v[1], v[2]), p);
    }
    if (!diag.empty()) {
      const auto v = parse_ints(diag, 4, "--diag");
      return type_from_exponents({v[0], v[1], v[2], v[3]}, p);
    }
    const auto v = parse_ints(weight, 2, "--weight");
    return type_from_modular_weight(v[0], v[1], p);
  }
};

Int checked_p(Int p) {
  if (!is_prime(p)) fail(errc::bad_request, "p must be a prime >= 2");
  return p;
}

std::string xy_str(const Weight& lam) { return (lam + rho_tilde()).str(); }

void print_predictions(std::ostream& os, const TameType& t,
                       const std::vector<PredictedWeight>& pred, bool as_json) {
  if (as_json) {
    json j{{"p", t.p}, {"mu", to_json(t.mu)}, {"weights", json::array()}};
    for (const auto& pw : pred) j["weights"].push_back(to_json(pw));
    os << j.dump(2) << "\n";
    return;
  }
  os << "p=" << t.p << "  mu=" << t.mu.str() << "  (canonical";
  if (t.raw_mu != t.mu) os << " of " << t.raw_mu.str();
  os << ")\n";
  os << pred.size() << " predicted regular Serre weights:\n";
  for (const auto& pw : pred) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-16s lambda=%-14s x=%-14s %s (from C%d)",
                  pw.alcove.label().c_str(), pw.weight.lam.str().c_str(),
                  xy_str(pw.weight.lam).c_str(), pw.direct ? "direct     " : "transported",
                  pw.source_alcove);
    os << buf << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact predicted Serre weight sets for tame p-ordinary symplectic types"};
  app.require_subcommand(1);
  std::string format = "text";

  Int p = 0;
  TypeInput input;
  std::string lambda_csv, weight_kl;
  bool regular_only = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")->capture_default_str();
  };

  auto* predict_cmd = app.add_subcommand("predict", "predicted Serre weight set of a type");
  predict_cmd->add_option("--p", p, "prime")->required();
  input.attach(predict_cmd);
  add_format(predict_cmd);

  auto* companions_cmd =
      app.add_subcommand("companions", "the eight companion records of a modular weight");
  companions_cmd->add_option("--p", p, "prime")->required();
  companions_cmd->add_option("--weight", weight_kl, "modular weight k,l")->required();
  add_format(companions_cmd);

  auto* bgg_cmd = app.add_subcommand("bgg", "dual BGG complex outline of a modular weight");
  bgg_cmd->add_option("--weight", weight_kl, "modular weight k,l")->required();
  add_format(bgg_cmd);

  auto* lifts_cmd = app.add_subcommand("lifts", "crystalline lift recipes of a generic type");
  lifts_cmd->add_option("--p", p, "prime")->required();
  input.attach(lifts_cmd);
  add_format(lifts_cmd);

  auto* decompose_cmd =
      app.add_subcommand("decompose", "simple constituents of a dual Weyl module");
  decompose_cmd->add_option("--p", p, "prime")->required();
  decompose_cmd->add_option("--lambda", lambda_csv, "highest weight a,b,c")->required();
  add_format(decompose_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "all Serre weights in canonical form");
  enumerate_cmd->add_option("--p", p, "prime")->required();
  enumerate_cmd->add_flag("--regular", regular_only, "regular weights only");
  add_format(enumerate_cmd);

  auto* check_cmd = app.add_subcommand("check", "run the invariant suite for a prime");
  check_cmd->add_option("--p", p, "prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json err{{"error", "usage"}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }

  const bool as_json = format == "json";
  if (!as_json && format != "text")
    fail(errc::bad_request, "--format must be text or json");
  std::ostream& os = std::cout;

  if (predict_cmd->parsed()) {
    const TameType t = input.resolve(checked_p(p));
    if (!input.weight.empty() && !as_json) {
      const auto v = parse_ints(input.weight, 2, "--weight");
      if (!modular_weight_generic(v[0], v[1], p))
        os << "note: (k,l) outside the generic range k > l > 3, k+l < p+1\n";
    }
    print_predictions(os, t, predict(t), as_json);
  } else if (companions_cmd->parsed()) {
    const auto v = parse_ints(weight_kl, 2, "--weight");
    const auto recs = companion_table(v[0], v[1], checked_p(p));
    if (as_json) {
      json j = json::array();
      for (const auto& r : recs) j.push_back(to_json(r));
      os << j.dump(2) << "\n";
    } else {
      os << "companion records for (k,l)=(" << v[0] << "," << v[1] << "), p=" << p << ":\n";
      for (const auto& r : recs) {
        char kl[32], buf[200];
        std::snprintf(kl, sizeof(kl), "(%lld,%lld)", r.k_prime, r.ell_prime);
        std::snprintf(buf, sizeof(buf),
                      "  %-5s twist=%-4lld conj=%-8s (k',l')=%-9s lambda'=%-14s %-14s %s",
                      r.case_id.c_str(), r.twist_exp, std::string(word(r.conjugator)).c_str(),
                      kl, r.lambda_prime.str().c_str(), r.alcove_condition.c_str(),
                      std::string(to_string(r.automorphic_type)).c_str());
        os << buf << "\n";
      }
      os << (companion_matches_table(v[0], v[1], p) ? "table check: consistent"
                                                    : "table check: MISMATCH")
         << "\n";
    }
  } else if (bgg_cmd->parsed()) {
    const auto v = parse_ints(weight_kl, 2, "--weight");
    const BggOutline o = bgg_outline(v[0], v[1]);
    if (as_json) {
      os << to_json(o).dump(2) << "\n";
    } else {
      os << "dual BGG outline for (k,l)=(" << v[0] << "," << v[1] << "):\n  terms:";
      for (const auto& [r, s] : o.terms) os << "  w^(" << r << "," << s << ")";
      os << "\n  degrees: " << o.degrees[0] << ".." << o.degrees[3] << "\n  jumps:";
      for (Int j : o.fil_jumps) os << " " << j;
      os << "\n  graded pieces:";
      for (const auto& g : o.graded)
        os << "  Fil^" << g.jump << "->H^" << g.coh_degree << "(w^(" << g.sheaf.first << ","
           << g.sheaf.second << "))";
      os << "\n  last differential degree: " << *o.differential_degrees[2] << "\n";
    }
  } else if (lifts_cmd->parsed()) {
    const TameType t = input.resolve(checked_p(p));
    const auto recipes = lift_recipes(t);
    if (as_json) {
      json j{{"p", t.p}, {"mu", to_json(t.mu)}, {"recipes", json::array()}};
      for (const auto& r : recipes) j["recipes"].push_back(to_json(r));
      os << j.dump(2) << "\n";
    } else {
      os << "crystalline lift recipes, p=" << t.p << "  mu=" << t.mu.str() << ":\n";
      for (const auto& r : recipes) {
        char buf[200];
        std::snprintf(buf, sizeof(buf), "  %-7s %-6s %-8s HT={%lld,%lld,%lld,%lld}",
                      r.row.c_str(), std::string(to_string(r.side)).c_str(),
                      std::string(to_string(r.shape)).c_str(), r.ht_weights[0],
                      r.ht_weights[1], r.ht_weights[2], r.ht_weights[3]);
        os << buf << "  units=(" << r.units[0] << "," << r.units[1] << "," << r.units[2]
           << "," << r.units[3] << ")  mu_row=" << r.mu_row.str() << "\n";
      }
      os << "unit relation: alpha*delta == beta*gamma\n";
    }
  } else if (decompose_cmd->parsed()) {
    const auto v = parse_ints(lambda_csv, 3, "--lambda");
    const Weight lam(v[0], v[1], v[2]);
    const VirtualSum dec = decompose_weyl(lam, checked_p(p));
    if (as_json) {
      json j{{"p", p}, {"lambda", to_json(lam)}, {"constituents", to_json(dec)}};
      os << j.dump(2) << "\n";
    } else {
      os << "W" << lam.str() << " =";
      bool first = true;
      for (const auto& [sym, mult] : dec.terms()) {
        os << (first ? " " : " + ");
        if (mult != 1) os << mult << "*";
        os << sym.str();
        first = false;
      }
      os << "\n";
    }
  } else if (enumerate_cmd->parsed()) {
    const auto all = enumerate_serre_weights(checked_p(p), regular_only);
    if (as_json) {
      json j = json::array();
      for (const auto& f : all) j.push_back(to_json(f));
      os << j.dump(2) << "\n";
    } else {
      os << all.size() << (regular_only ? " regular" : "") << " Serre weights for p=" << p
         << ":\n";
      for (const auto& f : all) os << "  " << f.str() << (f.regular ? "  regular" : "") << "\n";
    }
  } else if (check_cmd->parsed()) {
    if (!run_invariant_suite(checked_p(p), os)) return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gsp4::error& e) {
    gsp4::json err{{"error", std::string(to_string(e.code()))}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return e.internal() ? 3 : 2;
  } catch (const std::exception& e) {
    gsp4::json err{{"error", "internal"}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return 3;
  }
}
