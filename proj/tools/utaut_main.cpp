#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "utaut/report.hpp"

namespace {

std::vector<int> parse_c_literal(const std::string& s) {
  std::vector<int> digits;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) digits.push_back(std::stoi(tok));
  return digits;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact conjugacy and class-preserving automorphism computations "
               "for quotients of unitriangular groups over finite fields"};
  app.require_subcommand(1);

  utaut::RunConfig cfg;
  std::string c_literal;

  auto add_common = [&](CLI::App* sub, bool with_k, bool with_m = true) {
    sub->add_option("--p", cfg.p, "field characteristic (prime)")->required();
    if (with_m) sub->add_option("--m", cfg.m, "extension degree");
    sub->add_option("--n", cfg.n, "matrix degree")->required();
    if (with_k) sub->add_option("--k", cfg.k, "truncation index (2 <= k <= n)");
    sub->add_option("--method", cfg.method, "brute | structured | generated | all");
    sub->add_option("--c", c_literal, "field element literal: base-p digits, low power first");
    sub->add_option("--out", cfg.out_path, "write JSON report here");
    sub->add_flag("--csv", cfg.csv, "also write the class histogram as CSV");
    sub->add_option("--max-order", cfg.max_order, "group order cap")
        ->envname("UTAUT_MAX_ORDER");
    sub->add_option("--max-candidates", cfg.max_candidates, "candidate cap")
        ->envname("UTAUT_MAX_CANDIDATES");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = auto)")
        ->envname("UTAUT_THREADS");
  };

  add_common(app.add_subcommand("info", "group order and center"), true);
  add_common(app.add_subcommand("classes", "conjugacy class table"), true);
  add_common(app.add_subcommand("autc", "class-preserving automorphism group"), true);
  add_common(app.add_subcommand("verify-a", "prime-field verification (Aut_c = Inn)"), true,
             false);
  add_common(app.add_subcommand("verify-b", "k = 3 structure verification"), false);
  add_common(app.add_subcommand("thm27", "explicit non-inner witness over a non-prime field"),
             true);
  add_common(app.add_subcommand("burnside", "generated Aut_c for k = 3"), false);
  add_common(app.add_subcommand("report", "full report including open-question counts"), true);

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (cfg.command == "verify-a") cfg.m = 1;
  if (cfg.command == "verify-b" || cfg.command == "burnside") cfg.k = 3;
  if (!c_literal.empty()) {
    try {
      cfg.c_literal = parse_c_literal(c_literal);
    } catch (const std::exception&) {
      std::cerr << "error: bad --c literal\n";
      return utaut::kExitBadParams;
    }
  }
  return utaut::run(cfg, std::cout);
}
