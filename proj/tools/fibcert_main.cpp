// fibcert: exact-arithmetic fibering-number certificates for
// surface-bundle 4-manifolds.
//
// Exit codes: 0 certified / computed, 1 hypothesis failure or
// counterexample, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibcert/akcert.hpp"
#include "fibcert/coverbundle.hpp"
#include "fibcert/salter.hpp"
#include "fibcert/surfgroup.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using Clock = std::chrono::steady_clock;

struct Report {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  uint64_t seed = 0;
  nlohmann::json payload;
  std::string text;
  int exit_code = 0;
};

// The envelope carries timing; the payload is byte-identical across runs
// with equal (command, parameters, seed).
void emit(const Report& report, bool as_json, double ms) {
  if (as_json) {
    nlohmann::json envelope{{"tool", "fibcert"},
                            {"version", kVersion},
                            {"command", report.command},
                            {"parameters", report.parameters},
                            {"seed", report.seed},
                            {"payload", report.payload},
                            {"timing_ms", ms}};
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << report.text;
  }
}

std::string survey_text(const std::vector<fib::VariantSurveyRow>& rows) {
  std::ostringstream out;
  out << "lift-variant survey (exploratory; no values asserted)\n";
  for (const auto& r : rows) {
    out << "  " << r.description << ": invariant dim " << r.invariant_dim
        << ", b1 total " << r.b1_total << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fibering-number certificates for surface-bundle 4-manifolds"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the machine-readable report envelope");

  // ak: the branched double cover of the product of a genus-129 cover
  // with a genus-3 surface
  auto* ak = app.add_subcommand("ak", "certify the two fiberings of the branched-cover bundle");
  std::string selection = "default";
  bool variant_survey = false;
  ak->add_option("--selection", selection, "generator selection: default | minimal")
      ->check(CLI::IsMember({"default", "minimal"}));
  ak->add_flag("--variant-survey", variant_survey,
               "tabulate invariant dimensions over monodromy lift variants");

  auto* salter = app.add_subcommand("salter", "certify the four fiberings of the doubled punctured product");
  int genus = 2;
  int trials = 1000;
  uint64_t seed = 0;
  salter->add_option("--genus", genus, "factor genus (>= 2)")->required();
  salter->add_option("--trials", trials, "randomized cup-zero pair trials");
  salter->add_option("--seed", seed, "trial generator seed");

  auto* cover = app.add_subcommand("cover", "certify a finite regular cover of a trivial surface bundle");
  std::string spec_path;
  cover->add_option("--spec", spec_path, "cover spec JSON file")->required();

  auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz cover genus");
  int base_genus = 0, degree = 0;
  std::string branch;
  rh->add_option("-g,--base-genus", base_genus, "base genus")->required();
  rh->add_option("-d,--degree", degree, "covering degree")->required();
  rh->add_option("-b,--branch", branch,
                 "comma-separated branch multiplicities, NxM for repeats");

  auto* rs = app.add_subcommand("rs", "Reidemeister-Schreier data for the mod-2 homology cover");
  int rs_genus = 0;
  bool mod2 = false;
  rs->add_option("--genus", rs_genus, "closed surface genus")->required();
  rs->add_flag("--mod2", mod2, "use the full mod-2 homology quotient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Report report;
  auto t0 = Clock::now();
  try {
    if (*ak) {
      report.command = "ak";
      report.parameters = {{"selection", selection},
                           {"variant_survey", variant_survey}};
      fib::DoubleCoverModel model = fib::DoubleCoverModel::standard();
      if (variant_survey) {
        std::vector<fib::Word> loops;
        for (const auto& e : fib::GeneratorSelection::default_selection().entries) {
          loops.push_back(e.loop);
        }
        auto rows = fib::lift_variant_survey(loops, model);
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& r : rows) {
          jrows.push_back({{"variant", r.description},
                           {"invariant_dim", r.invariant_dim},
                           {"b1_total", r.b1_total}});
        }
        report.payload = {{"survey", jrows}};
        report.text = survey_text(rows);
      } else {
        auto sel = selection == "minimal"
                       ? fib::GeneratorSelection::minimal_selection()
                       : fib::GeneratorSelection::default_selection();
        fib::FiberingCertificate cert = fib::ak_certificate(sel, model);
        report.payload = cert.to_json();
        report.payload["model"] = model.to_json();
        report.text = cert.render_text();
        report.exit_code = cert.conclusion() ? 0 : 1;
      }
    } else if (*salter) {
      report.command = "salter";
      report.parameters = {{"genus", genus}, {"trials", trials}};
      report.seed = seed;
      if (genus < 2) {
        std::cerr << "error: --genus must be >= 2 (the base of a surface "
                     "bundle with chi > 0 has genus > 1)\n";
        return 2;
      }
      fib::FiberingCertificate cert = fib::no_fifth_fibering_check(genus, trials, seed);
      report.payload = cert.to_json();
      report.text = cert.render_text();
      report.exit_code = cert.conclusion() ? 0 : 1;
    } else if (*cover) {
      report.command = "cover";
      report.parameters = {{"spec", spec_path}};
      std::ifstream in(spec_path);
      if (!in) {
        std::cerr << "error: cannot open spec file: " << spec_path << "\n";
        return 2;
      }
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: spec parse failure: " << e.what() << "\n";
        return 2;
      }
      fib::ProductCoverSpec spec = fib::ProductCoverSpec::from_json(j);
      fib::FiberingCertificate cert = fib::cover_certificate(spec);
      report.payload = cert.to_json();
      report.text = cert.render_text();
      report.exit_code = cert.conclusion() ? 0 : 1;
    } else if (*rh) {
      report.command = "rh";
      std::vector<int> mults;
      std::stringstream ss(branch);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto x = tok.find('x');
        if (x != std::string::npos) {
          int count = std::stoi(tok.substr(x + 1));
          int m = std::stoi(tok.substr(0, x));
          for (int i = 0; i < count; ++i) mults.push_back(m);
        } else {
          mults.push_back(std::stoi(tok));
        }
      }
      report.parameters = {{"base_genus", base_genus},
                           {"degree", degree},
                           {"branch", mults}};
      int g = fib::riemann_hurwitz_genus(base_genus, degree, mults);
      report.payload = {{"cover_genus", g}};
      report.text = "cover genus: " + std::to_string(g) + "\n";
    } else if (*rs) {
      report.command = "rs";
      report.parameters = {{"genus", rs_genus}, {"mod2", mod2}};
      if (!mod2) {
        std::cerr << "error: only --mod2 quotients are supported\n";
        return 2;
      }
      auto pres = fib::SurfacePresentation::closed_surface(rs_genus);
      auto q = fib::mod2_homology_cover(rs_genus);
      auto sub = fib::reidemeister_schreier(pres, q);
      int b1 = fib::abelianized_rank(sub);
      int cover_genus = fib::riemann_hurwitz_genus(
          rs_genus, static_cast<int>(q.group.order()), {});
      report.payload = {{"index", sub.index},
                        {"generators", sub.generator_count()},
                        {"relators", sub.rewritten_relators.size()},
                        {"b1", b1},
                        {"genus", cover_genus}};
      std::ostringstream out;
      out << "index: " << sub.index << "\ngenerators: " << sub.generator_count()
          << "\nrelators: " << sub.rewritten_relators.size() << "\nb1: " << b1
          << "\ngenus: " << cover_genus << "\n";
      report.text = out.str();
      if (b1 != 2 * cover_genus) report.exit_code = 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  emit(report, as_json, ms);
  return report.exit_code;
}
