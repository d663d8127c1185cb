// Command-line front end. All results print as key=value lines.
// Exit codes: 0 success / feasible / pass, 1 infeasible / fail, 2 usage or
// input error (including enumeration caps).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pileshuffle/algebra.hpp"
#include "pileshuffle/arrows.hpp"
#include "pileshuffle/chain.hpp"
#include "pileshuffle/decide.hpp"
#include "pileshuffle/family.hpp"
#include "pileshuffle/gadgets.hpp"
#include "pileshuffle/perm.hpp"
#include "pileshuffle/reduction.hpp"
#include "pileshuffle/verifier.hpp"

namespace {

using namespace pileshuffle;

constexpr const char* kFamilyGrammar =
    "family grammar: rounds separated by '/'; each round is a fixed word over "
    "{q,s} (qqqqss), a free round (A6), a power (qqqqss^3), or a seeded round "
    "with fixed prefix and free tail (qs+A2)";

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PermConvention parse_convention(const std::string& name) {
  if (name == "sequence") return PermConvention::sequence;
  if (name == "embedding") return PermConvention::embedding;
  throw ParseError("convention must be sequence or embedding");
}

FormulaVariant parse_variant(const std::string& name) {
  if (name == "I") return FormulaVariant::I;
  if (name == "II") return FormulaVariant::II;
  if (name == "III") return FormulaVariant::III;
  if (name == "V") return FormulaVariant::V;
  throw ParseError("variant must be I, II, III, or V");
}

DecideStrategy parse_strategy(const std::string& name) {
  if (name == "naive") return DecideStrategy::naive;
  if (name == "structured") return DecideStrategy::structured;
  throw ParseError("strategy must be naive or structured");
}

PileAssignment parse_piles(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  PileAssignment out;
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad pile index: " + tok);
    }
  }
  if (out.empty()) throw ParseError("empty pile assignment");
  return out;
}

TypeSchedule parse_schedule(const std::string& text) {
  TypeSchedule out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t sep = text.find('/', start);
    if (sep == std::string::npos) sep = text.size();
    TypeWord w = text.substr(start, sep - start);
    if (w.empty() || !is_type_word(w))
      throw ParseError("schedule rounds must be nonempty words over {q,s}");
    out.push_back(std::move(w));
    start = sep + 1;
  }
  return out;
}

std::string schedule_text(const TypeSchedule& sched) {
  std::string out;
  for (size_t t = 0; t < sched.size(); ++t) {
    if (t) out.push_back('/');
    out += sched[t];
  }
  return out;
}

std::string piles_text(const PileAssignment& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(p[i]);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"pile shuffle sorting: shuffles, chain automata, and the "
               "SAT-to-sort-feasibility reductions"};
  app.require_subcommand(1);
  app.footer(std::string(kFamilyGrammar) +
             "\nsort questions print as two lines: family spec, then the "
             "permutation in embedding convention");

  std::string perm_text, convention = "sequence", types, piles_arg, schedule_arg;
  std::string cnf_path, variant_name = "I", profile, family_arg, witness_arg;
  std::string strategy_name = "structured", gadget_name, lemma_id;
  int num_vars = 0, repeat = 1, bound = 0;
  long long cap = 1LL << 24;
  long long chain_cap = 1LL << 20;
  bool to_sort = false;

  auto* shuffle_cmd = app.add_subcommand("shuffle", "one pile-shuffle round");
  shuffle_cmd->add_option("--perm", perm_text, "permutation")->required();
  shuffle_cmd->add_option("--convention", convention, "sequence|embedding");
  shuffle_cmd->add_option("--types", types, "pile type word over {q,s}")->required();
  shuffle_cmd->add_option("--piles", piles_arg, "pile of each label, 1-based")->required();

  auto* sort_cmd = app.add_subcommand("sort", "find a sorting assignment");
  sort_cmd->add_option("--perm", perm_text, "permutation")->required();
  sort_cmd->add_option("--convention", convention, "sequence|embedding");
  sort_cmd->add_option("--schedule", schedule_arg, "round type words joined by '/'")
      ->required();

  auto* compose_cmd = app.add_subcommand("compose", "compose type words");
  compose_cmd->add_option("--schedule", schedule_arg, "round type words joined by '/'")
      ->required();

  auto* chain_cmd = app.add_subcommand("chain", "chain automaton runs");
  auto* accept_cmd = chain_cmd->add_subcommand("accept", "accept/reject a profile");
  accept_cmd->add_option("typeword", types, "chain type word")->required();
  accept_cmd->add_option("profile", profile, "change profile over {a,d}")->required();
  auto* trace_cmd = chain_cmd->add_subcommand("trace", "dump the trajectory");
  trace_cmd->add_option("typeword", types, "chain type word")->required();
  trace_cmd->add_option("profile", profile, "change profile over {a,d}")->required();
  chain_cmd->require_subcommand(1);

  auto* gadget_cmd = app.add_subcommand("gadget", "print a lexicon word");
  gadget_cmd->add_option("name", gadget_name,
                         "key-word|start-clause|pos|neg|dk|endpos|endneg|enddk|"
                         "next|force-q|pass|align")
      ->required();

  auto* formula_cmd = app.add_subcommand("formula", "formula change profile");
  formula_cmd->add_option("--variant", variant_name, "I|II|III|V");
  formula_cmd->add_option("--cnf", cnf_path, "DIMACS file, or - for stdin")->required();
  formula_cmd->add_option("--repeat", repeat, "first-round repetitions (variant V)");

  auto* reduce_cmd = app.add_subcommand("reduce", "SAT to feasibility question");
  reduce_cmd->add_option("--variant", variant_name, "I|II|III|V");
  reduce_cmd->add_option("--cnf", cnf_path, "DIMACS file, or - for stdin")->required();
  reduce_cmd->add_option("--repeat", repeat, "first-round repetitions (variant V)");
  reduce_cmd->add_flag("--to-sort", to_sort, "emit a sort question (realized permutation)");

  auto* decode_cmd = app.add_subcommand("decode", "assignment from a witness schedule");
  decode_cmd->add_option("--variant", variant_name, "I|II|III|V");
  decode_cmd->add_option("--witness", witness_arg, "schedule, words joined by '/'")
      ->required();
  decode_cmd->add_option("--vars", num_vars, "number of formula variables")->required();
  decode_cmd->add_option("--repeat", repeat, "first-round repetitions (variant V)");

  auto* decide_cmd = app.add_subcommand("decide", "feasibility of (profile, family)");
  decide_cmd->add_option("--profile", profile, "change profile over {a,d}")->required();
  decide_cmd->add_option("--family", family_arg, kFamilyGrammar)->required();
  decide_cmd->add_option("--strategy", strategy_name, "naive|structured");
  decide_cmd->add_option("--cap", cap, "schedule enumeration cap");

  auto* sat_cmd = app.add_subcommand("sat", "brute-force satisfiability");
  sat_cmd->add_option("--cnf", cnf_path, "DIMACS file, or - for stdin")->required();

  auto* verify_cmd = app.add_subcommand("verify", "machine checks");
  auto* lemmas_cmd = verify_cmd->add_subcommand("lemmas", "trajectory claim suite");
  lemmas_cmd->add_option("--bound", bound, "measures-worth of free piles per claim");
  lemmas_cmd->add_option("--chain-cap", chain_cap, "per-claim chain enumeration cap");
  lemmas_cmd->add_option("--only", lemma_id, "run a single claim by id");
  auto* vreduce_cmd = verify_cmd->add_subcommand("reduction", "SAT vs feasibility");
  vreduce_cmd->add_option("--variant", variant_name, "I|II|III|V");
  vreduce_cmd->add_option("--cnf", cnf_path, "DIMACS file, or - for stdin")->required();
  vreduce_cmd->add_option("--strategy", strategy_name, "naive|structured");
  vreduce_cmd->add_option("--cap", cap, "schedule enumeration cap");
  vreduce_cmd->add_option("--repeat", repeat, "first-round repetitions (variant V)");
  verify_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*shuffle_cmd) {
    const Permutation pi = parse_permutation(perm_text, parse_convention(convention));
    const Permutation out = shuffle_once(pi, types, parse_piles(piles_arg));
    std::cout << "result_sequence=" << to_string(out, PermConvention::sequence) << "\n";
    std::cout << "result_embedding=" << to_string(out, PermConvention::embedding) << "\n";
    std::cout << "sorted=" << (out.is_identity() ? "true" : "false") << "\n";
    return 0;
  }

  if (*sort_cmd) {
    const Permutation pi = parse_permutation(perm_text, parse_convention(convention));
    const TypeSchedule sched = parse_schedule(schedule_arg);
    const auto rounds = multi_round_sort(pi, sched);
    std::cout << "profile=" << change_profile(pi) << "\n";
    std::cout << "virtual_types=" << compose_fold(sched) << "\n";
    std::cout << "feasible=" << (rounds ? "true" : "false") << "\n";
    if (!rounds) return 1;
    for (size_t t = 0; t < rounds->size(); ++t)
      std::cout << "round" << t + 1 << "_piles=" << piles_text((*rounds)[t]) << "\n";
    return 0;
  }

  if (*compose_cmd) {
    std::cout << "virtual_types=" << compose_fold(parse_schedule(schedule_arg)) << "\n";
    return 0;
  }

  if (*accept_cmd || *trace_cmd) {
    if (!is_change_profile(profile)) throw ParseError("profile must be over {a,d}");
    const ChainAutomaton chain(types);
    if (*trace_cmd) {
      const auto tr = chain.trace(0, profile);
      std::cout << "t=0 state=0\n";
      for (size_t i = 1; i < tr.size(); ++i)
        std::cout << "t=" << i << " symbol=" << profile[i - 1] << " state=" << tr[i]
                  << "\n";
    }
    const int end = chain.run(0, profile);
    std::cout << "end_state=" << end << "\n";
    std::cout << "accepted=" << (end < chain.terminal() ? "true" : "false") << "\n";
    return end < chain.terminal() ? 0 : 1;
  }

  if (*gadget_cmd) {
    const std::pair<std::string, std::string> table[] = {
        {"key-word", std::string(lexicon::key_word)},
        {"start-clause", std::string(lexicon::start_clause)},
        {"pos", std::string(lexicon::pos)},
        {"neg", std::string(lexicon::neg)},
        {"dk", std::string(lexicon::dk)},
        {"endpos", std::string(lexicon::endpos)},
        {"endneg", std::string(lexicon::endneg)},
        {"enddk", std::string(lexicon::enddk)},
        {"next", std::string(lexicon::next)},
        {"force-q", std::string(lexicon::force_q)},
        {"pass", std::string(lexicon::pass)},
        {"align", lexicon::align()}};
    for (const auto& [name, word] : table) {
      if (name == gadget_name) {
        std::cout << "word=" << word << "\n";
        std::cout << "length=" << word.size() << "\n";
        return 0;
      }
    }
    throw ParseError("unknown gadget: " + gadget_name);
  }

  if (*formula_cmd) {
    const CnfFormula f = parse_dimacs(slurp(cnf_path));
    const std::string w = build_formula(parse_variant(variant_name), f, repeat);
    std::cout << "profile=" << w << "\n";
    std::cout << "length=" << w.size() << "\n";
    return 0;
  }

  if (*reduce_cmd) {
    const CnfFormula f = parse_dimacs(slurp(cnf_path));
    const ChainQuestion q = reduce(parse_variant(variant_name), f, repeat);
    std::cout << "family=" << q.family.spec_text() << "\n";
    if (to_sort) {
      const SortQuestion s = reduce_to_sort(q);
      std::cout << "perm_embedding=" << to_string(s.perm, PermConvention::embedding)
                << "\n";
    } else {
      std::cout << "profile=" << q.profile << "\n";
    }
    return 0;
  }

  if (*decode_cmd) {
    const TypeSchedule witness = parse_schedule(witness_arg);
    try {
      const TruthAssignment x =
          decode_assignment(parse_variant(variant_name), witness, num_vars, repeat);
      std::cout << "assignment=" << embed_assignment(x) << "\n";
      for (size_t i = 0; i < x.size(); ++i)
        std::cout << "x" << i + 1 << "=" << (x[i] ? "true" : "false") << "\n";
      return 0;
    } catch (const DecodeError& e) {
      std::cout << "error=" << e.what() << "\n";
      return 1;
    }
  }

  if (*decide_cmd) {
    const FactoredFamily fam = parse_family(family_arg);
    DecideOptions opts;
    opts.naive_cap = cap;
    const auto witness =
        decide_feasibility(profile, fam, parse_strategy(strategy_name), opts);
    std::cout << "family=" << fam.spec_text() << "\n";
    std::cout << "feasible=" << (witness ? "true" : "false") << "\n";
    if (!witness) return 1;
    std::cout << "witness=" << schedule_text(*witness) << "\n";
    return 0;
  }

  if (*sat_cmd) {
    const CnfFormula f = parse_dimacs(slurp(cnf_path));
    const auto x = sat_brute_force(f);
    std::cout << "satisfiable=" << (x ? "true" : "false") << "\n";
    if (!x) return 1;
    std::cout << "assignment=" << embed_assignment(*x) << "\n";
    return 0;
  }

  if (*lemmas_cmd) {
    VerifyOptions opts;
    if (bound > 0) {
      opts.measure_n = bound;
      opts.align_n = std::min(bound, 2);
    }
    opts.chain_cap = chain_cap;
    bool all_passed = true;
    bool matched = lemma_id.empty();
    for (const auto& rep : verify_gadget_lemmas(opts)) {
      if (!lemma_id.empty() && rep.id != lemma_id) continue;
      matched = true;
      std::cout << "claim=" << rep.id << " passed=" << (rep.passed ? "true" : "false")
                << " refused=" << (rep.refused ? "true" : "false")
                << " cases=" << rep.cases << "\n";
      if (!rep.detail.empty()) std::cout << "detail=" << rep.detail << "\n";
      all_passed = all_passed && rep.passed;
    }
    if (!matched) throw ParseError("unknown claim id: " + lemma_id);
    std::cout << "all_passed=" << (all_passed ? "true" : "false") << "\n";
    return all_passed ? 0 : 1;
  }

  if (*vreduce_cmd) {
    const CnfFormula f = parse_dimacs(slurp(cnf_path));
    DecideOptions opts;
    opts.naive_cap = cap;
    const auto rep = check_reduction_equivalence(parse_variant(variant_name), f,
                                                 parse_strategy(strategy_name), opts,
                                                 repeat);
    std::cout << "satisfiable=" << (rep.sat ? "true" : "false") << "\n";
    std::cout << "feasible=" << (rep.feasible ? "true" : "false") << "\n";
    std::cout << "agrees=" << (rep.agrees ? "true" : "false") << "\n";
    std::cout << "decoded_ok=" << (rep.decoded_ok ? "true" : "false") << "\n";
    if (!rep.detail.empty()) std::cout << "detail=" << rep.detail << "\n";
    return rep.agrees && rep.decoded_ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cout << "error=" << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {  // parse and contract errors
    std::cout << "error=" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "error=" << e.what() << "\n";
    return 2;
  }
}
