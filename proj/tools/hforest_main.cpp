#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hforest/error.hpp"
#include "hforest/explore.hpp"
#include "hforest/hcalc.hpp"
#include "hforest/oracle.hpp"
#include "hforest/ordinal.hpp"
#include "hforest/qorder.hpp"
#include "hforest/term.hpp"
#include "hforest/transforms.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

struct CommandArgs {
  std::string qo_path;
  std::string term1;
  std::string term2;
  std::string term_file;
  std::string xi = "0";
  std::string op;
  std::string ord = "0";
  std::string rel = "h";
  std::string dot_path;
  std::string report_path;
  std::string index_cap = "0";
  std::size_t max_nodes = 4;
  std::size_t max_branch = 2;
  std::size_t max_terms = 1000000;
};

// Inline terms, or the lines of --term-file when given.
std::vector<std::string> term_texts(const CommandArgs& args, std::size_t expected) {
  std::vector<std::string> texts;
  if (!args.term_file.empty()) {
    std::ifstream in(args.term_file);
    if (!in) throw hforest::parse_error("cannot open term file: " + args.term_file, 0);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) texts.push_back(line);
    }
  } else {
    if (!args.term1.empty()) texts.push_back(args.term1);
    if (!args.term2.empty()) texts.push_back(args.term2);
  }
  if (texts.size() != expected)
    throw CLI::ValidationError("expected " + std::to_string(expected) + " term(s), got " +
                               std::to_string(texts.size()));
  return texts;
}

int bool_result(bool value) {
  std::cout << (value ? "true" : "false") << "\n";
  return value ? kExitTrue : kExitFalse;
}

int run_leq(const CommandArgs& args, bool both_ways) {
  hforest::QOrder q = hforest::QOrder::load_file(args.qo_path);
  auto texts = term_texts(args, 2);
  hforest::Term t = hforest::parse_term(texts[0], q);
  hforest::Term s = hforest::parse_term(texts[1], q);
  hforest::HContext ctx(q);
  return bool_result(both_ways ? ctx.equiv(t, s) : ctx.leq(t, s));
}

int run_rleq(const CommandArgs& args) {
  hforest::QOrder q = hforest::QOrder::load_file(args.qo_path);
  hforest::Ordinal xi = hforest::Ordinal::parse(args.xi);
  auto texts = term_texts(args, 2);
  hforest::Term t = hforest::parse_term(texts[0], q);
  hforest::Term s = hforest::parse_term(texts[1], q);
  return bool_result(hforest::leq_h_xi(xi, q, t, s));
}

int run_apply(const CommandArgs& args) {
  hforest::QOrder q = hforest::QOrder::load_file(args.qo_path);
  hforest::Ordinal ord = hforest::Ordinal::parse(args.ord);
  auto texts = term_texts(args, 1);
  hforest::Term t = hforest::parse_term(texts[0], q);
  hforest::Term out;
  if (args.op == "s")
    out = hforest::apply_s(ord, t);
  else if (args.op == "r")
    out = hforest::apply_r(ord, t);
  else if (args.op == "s*")
    out = hforest::apply_s_star(ord, t);
  else
    out = hforest::apply_r_star(ord, t);
  std::cout << hforest::print_term(out) << "\n";
  return kExitTrue;
}

int run_level(const CommandArgs& args) {
  hforest::QOrder q = hforest::QOrder::load_file(args.qo_path);
  hforest::Ordinal xi = hforest::Ordinal::parse(args.xi);
  auto texts = term_texts(args, 1);
  return bool_result(hforest::in_level(hforest::parse_term(texts[0], q), xi));
}

int run_irr(const CommandArgs& args) {
  hforest::QOrder q = hforest::QOrder::load_file(args.qo_path);
  auto texts = term_texts(args, 1);
  return bool_result(hforest::is_join_irreducible(q, hforest::parse_term(texts[0], q)));
}

int run_oracle(const CommandArgs& args) {
  hforest::QOrder q = hforest::QOrder::load_file(args.qo_path);
  auto texts = term_texts(args, 2);
  hforest::LabeledForest f = hforest::to_labeled_forest(hforest::parse_term(texts[0], q));
  hforest::LabeledForest g = hforest::to_labeled_forest(hforest::parse_term(texts[1], q));
  return bool_result(hforest::hom_leq(q, f, g));
}

int run_enum(const CommandArgs& args) {
  hforest::QOrder q = hforest::QOrder::load_file(args.qo_path);
  hforest::EnumOptions opt;
  opt.level = hforest::Ordinal::parse(args.xi);
  opt.max_nodes = args.max_nodes;
  opt.max_branch = args.max_branch;
  opt.index_cap = hforest::Ordinal::parse(args.index_cap);
  opt.max_terms = args.max_terms;
  std::vector<hforest::Term> terms = hforest::enumerate_terms(q, opt);

  hforest::TermRelation rel = hforest::TermRelation::h();
  if (args.rel != "h") {
    if (args.rel.rfind("hxi:", 0) != 0)
      throw CLI::ValidationError("--rel must be 'h' or 'hxi:ORDINAL'");
    rel = hforest::TermRelation::h_xi(hforest::Ordinal::parse(args.rel.substr(4)));
  }
  hforest::DegreePoset poset = hforest::quotient(q, terms, rel);

  std::cout << "terms " << terms.size() << "\n";
  std::cout << "classes " << poset.classes.size() << "\n";
  if (!args.dot_path.empty()) {
    std::ofstream out(args.dot_path, std::ios::binary);
    if (!out) throw hforest::validation_error("cannot write DOT file: " + args.dot_path);
    out << hforest::hasse_dot(poset);
  }
  if (!args.report_path.empty()) {
    std::ofstream out(args.report_path, std::ios::binary);
    if (!out) throw hforest::validation_error("cannot write report file: " + args.report_path);
    out << hforest::poset_report(poset);
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iterated Q-labeled forest calculus"};
  app.require_subcommand(1);
  CommandArgs args;

  auto add_common = [&](CLI::App* cmd, std::size_t terms) {
    cmd->add_option("--qo", args.qo_path, "Q-order JSON file")->required();
    cmd->add_option("--term-file", args.term_file,
                    "read the term(s) from a file, one per line, instead of the command line");
    if (terms >= 1) cmd->add_option("term", args.term1, "first term");
    if (terms >= 2) cmd->add_option("term2", args.term2, "second term");
    return cmd;
  };

  auto* leq = add_common(app.add_subcommand("leq", "decide T <=_h S"), 2);
  auto* equiv = add_common(app.add_subcommand("equiv", "decide T ==_h S"), 2);
  auto* rleq = add_common(app.add_subcommand("rleq", "decide the induced T <=_h^xi S"), 2);
  rleq->add_option("--xi", args.xi, "ordinal index of the induced order")->required();
  auto* apply = add_common(app.add_subcommand("apply", "apply a section or retraction"), 1);
  apply->add_option("--op", args.op, "one of s, r, s*, r*")
      ->required()
      ->check(CLI::IsMember({"s", "r", "s*", "r*"}));
  apply->add_option("--ord", args.ord, "ordinal argument of the operator")->required();
  auto* level = add_common(app.add_subcommand("level", "decide membership in level xi"), 1);
  level->add_option("--xi", args.xi, "level ordinal")->required();
  auto* irr = add_common(app.add_subcommand("irr", "decide sigma-join-irreducibility"), 1);
  auto* oracle =
      add_common(app.add_subcommand("oracle", "brute-force monotone-map comparison (level 1)"), 2);
  auto* enumerate = add_common(app.add_subcommand("enum", "enumerate terms and quotient them"), 0);
  enumerate->add_option("--xi", args.xi, "level ordinal")->required();
  enumerate->add_option("--max-nodes", args.max_nodes, "node-count bound")->required();
  enumerate->add_option("--max-branch", args.max_branch, "forest arity bound")->required();
  enumerate->add_option("--index-cap", args.index_cap, "bound on section indices (default 0)");
  enumerate->add_option("--rel", args.rel, "relation: h (default) or hxi:ORDINAL");
  enumerate->add_option("--dot", args.dot_path, "write the Hasse diagram as DOT");
  enumerate->add_option("--report", args.report_path, "write the flat class report");
  enumerate->add_option("--max-terms", args.max_terms, "hard cap on enumerated terms");

  try {
    app.parse(argc, argv);
    if (leq->parsed()) return run_leq(args, false);
    if (equiv->parsed()) return run_leq(args, true);
    if (rleq->parsed()) return run_rleq(args);
    if (apply->parsed()) return run_apply(args);
    if (level->parsed()) return run_level(args);
    if (irr->parsed()) return run_irr(args);
    if (oracle->parsed()) return run_oracle(args);
    if (enumerate->parsed()) return run_enum(args);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const hforest::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hforest::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
