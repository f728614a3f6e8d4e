// qslab: command-line front end for the Queuesort map, its preimages, the
// exact counting formulas, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "qslab/qslab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace qslab;

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string text;
  for (const auto& t : tokens) {
    if (!text.empty()) text += ' ';
    text += t;
  }
  return text;
}

json word_json(const InjectiveWord& w) { return json(w.values()); }

CountMethod parse_method(const std::string& name) {
  if (name == "auto") return CountMethod::Auto;
  if (name == "recursive") return CountMethod::Recursive;
  if (name == "formula") return CountMethod::Formula;
  if (name == "oracle") return CountMethod::Oracle;
  throw std::invalid_argument("unknown method '" + name + "'");
}

struct Options {
  std::vector<std::string> word_tokens;
  std::string format = "plain";
  std::string method = "auto";
  bool trace = false;
  bool count_only = false;
  std::size_t n = 0;
  std::string k = "0";
  std::size_t cutoff = kDefaultCensusCutoff;
  std::size_t oracle_cutoff = kDefaultOracleCutoff;
  std::string sequence_name;
  std::size_t terms = 10;
  std::string suite;
  std::string witness_kind;
  std::vector<std::size_t> witness_args;
  VerifyOptions verify;
  int max_n = -1;
  int samples = -1;
  std::uint64_t seed = kDefaultSeed;
  bool strict = false;
  bool exploratory = false;
};

int cmd_apply(const Options& o) {
  auto w = parse_word(join_tokens(o.word_tokens));
  auto run = run_queue(w);
  if (o.format == "json") {
    json out{{"input", word_json(w)}, {"output", word_json(run.output)}};
    if (o.trace) out["trace"] = run.trace.ops;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << run.output.str() << "\n";
    if (o.trace) std::cout << run.trace.ops << "\n";
  }
  return 0;
}

int cmd_preimages(const Options& o) {
  auto w = parse_word(join_tokens(o.word_tokens));
  auto method = parse_method(o.method);
  if (o.count_only) {
    BigInt count = count_preimages(w, method, o.oracle_cutoff);
    if (o.format == "json")
      std::cout << json{{"target", word_json(w)}, {"count", count.str()}}.dump() << "\n";
    else
      std::cout << count.str() << "\n";
    return 0;
  }
  PreimageSet set = method == CountMethod::Oracle ? preimages_oracle(w, o.oracle_cutoff) : preimages(w);
  if (o.format == "json") {
    json members = json::array();
    for (const auto& m : set.members) members.push_back(word_json(m));
    std::cout << json{{"target", word_json(w)}, {"count", std::to_string(set.size())}, {"members", members}}.dump()
              << "\n";
  } else {
    for (const auto& m : set.members) std::cout << m.str() << "\n";
  }
  return 0;
}

int cmd_count(const Options& o) {
  auto w = parse_word(join_tokens(o.word_tokens));
  BigInt count = count_preimages(w, parse_method(o.method), o.oracle_cutoff);
  if (o.format == "json")
    std::cout << json{{"target", word_json(w)}, {"count", count.str()}, {"method", o.method}}.dump() << "\n";
  else
    std::cout << count.str() << "\n";
  return 0;
}

int cmd_census(const Options& o) {
  auto table = census(o.n, o.cutoff);
  if (o.format == "json") {
    json tally = json::object();
    for (const auto& [k, q] : table.tally) tally[k.str()] = q.str();
    std::cout << json{{"n", table.n}, {"tally", tally}}.dump() << "\n";
  } else {
    for (const auto& [k, q] : table.tally) std::cout << k.str() << ": " << q.str() << "\n";
  }
  return 0;
}

int cmd_classify(const Options& o) {
  auto members = classify(o.n, BigInt(o.k), o.cutoff);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& p : members) arr.push_back(word_json(p));
    std::cout << json{{"n", o.n}, {"k", BigInt(o.k).str()}, {"members", arr}}.dump() << "\n";
  } else {
    for (const auto& p : members) std::cout << p.str() << "\n";
  }
  return 0;
}

int cmd_sequence(const Options& o) {
  const std::string& name = o.sequence_name;
  auto scalar = [&](std::size_t start, BigInt (*term)(std::size_t)) {
    std::vector<std::string> vals;
    for (std::size_t i = 0; i < o.terms; ++i) vals.push_back(term(start + i).str());
    if (o.format == "json") {
      std::cout << json{{"name", name}, {"start", start}, {"terms", vals}}.dump() << "\n";
    } else {
      std::cout << join_tokens(vals) << "\n";
    }
  };
  auto triangle = [&](std::size_t i_lo, std::size_t i_hi_off, BigInt (*entry)(std::size_t, std::size_t)) {
    json rows = json::array();
    for (std::size_t n = 1; n <= o.terms; ++n) {
      std::vector<std::string> row;
      for (std::size_t i = i_lo; i <= n + i_hi_off; ++i) row.push_back(entry(n, i).str());
      if (o.format == "json")
        rows.push_back(row);
      else
        std::cout << join_tokens(row) << "\n";
    }
    if (o.format == "json") std::cout << json{{"name", name}, {"rows", rows}}.dump() << "\n";
  };

  if (name == "q0")
    scalar(1, count_q0);
  else if (name == "q1")
    scalar(1, count_q1);
  else if (name == "q2")
    scalar(0, count_q2);
  else if (name == "catalan")
    scalar(0, catalan);
  else if (name == "derangement")
    scalar(0, derangement);
  else if (name == "ballot-b")
    triangle(1, 0, ballot_b);
  else if (name == "ballot-g")
    triangle(2, 1, ballot_g);
  else
    throw std::invalid_argument("unknown sequence '" + name +
                                "'; valid: q0 q1 q2 catalan derangement ballot-b ballot-g");
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  if (o.max_n >= 0) vo.max_n = o.max_n;
  if (o.samples >= 0) vo.samples = o.samples;
  vo.seed = o.seed;
  vo.oracle_cutoff = o.oracle_cutoff;
  auto rep = verify_suite(o.suite, vo);

  bool exploratory = (rep.exploratory || o.exploratory) && !o.strict;
  const char* label = rep.passed() ? "PASS" : (exploratory ? "FINDINGS" : "FAIL");
  std::cout << "suite " << rep.suite << ": " << label << " (cases: " << rep.cases;
  if (!rep.passed()) std::cout << ", " << (exploratory ? "findings" : "failures") << ": " << rep.failures.size();
  std::cout << ")\n";
  for (const auto& f : rep.failures)
    std::cout << "  " << f.input << ": expected " << f.expected << ", got " << f.actual << "\n";

  json failures = json::array();
  for (const auto& f : rep.failures)
    failures.push_back(json{{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  std::cout << json{{"suite", rep.suite}, {"parameters", rep.parameters}, {"cases", rep.cases},
                    {"failures", failures}, {"passed", rep.passed()}, {"exploratory", exploratory}}
                   .dump()
            << "\n";
  return rep.passed() || exploratory ? 0 : 1;
}

int cmd_witness(const Options& o) {
  Permutation w;
  json params;
  if (o.witness_kind == "mpm") {
    if (o.witness_args.size() != 3) throw std::invalid_argument("witness mpm needs m1 p1 m2");
    w = canonical_mpm_perm(o.witness_args[0], o.witness_args[1], o.witness_args[2]);
    params = {{"m1", o.witness_args[0]}, {"p1", o.witness_args[1]}, {"m2", o.witness_args[2]}};
  } else if (o.witness_kind == "not3") {
    if (o.witness_args.size() != 1) throw std::invalid_argument("witness not3 needs n");
    w = not3_family(o.witness_args[0]);
    params = {{"n", o.witness_args[0]}};
  } else {
    throw std::invalid_argument("unknown witness '" + o.witness_kind + "'; valid: mpm not3");
  }
  if (o.format == "json")
    std::cout << json{{"kind", o.witness_kind}, {"parameters", params}, {"witness", word_json(w)}}.dump() << "\n";
  else
    std::cout << w.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Queuesort preimage workbench: apply the map, enumerate and count preimages,\n"
               "run the census, and verify the counting formulas against brute force."};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"plain", "json"}));
  };
  auto add_word = [&](CLI::App* cmd) {
    cmd->add_option("word", o.word_tokens, "separated values (\"2 1 5 4 3\") or digits (\"21543\")")
        ->required()
        ->expected(-1);
  };
  auto add_oracle_cutoff = [&](CLI::App* cmd) {
    cmd->add_option("--oracle-cutoff", o.oracle_cutoff, "max length for exhaustive scans")
        ->envname("QSLAB_MAX_ORACLE");
  };

  auto* apply = app.add_subcommand("apply", "apply the queue map to a word");
  add_word(apply);
  apply->add_flag("--trace", o.trace, "also print the Q/B/O operation trace");
  add_format(apply);

  auto* pre = app.add_subcommand("preimages", "enumerate the preimages of a word");
  add_word(pre);
  pre->add_flag("--count-only", o.count_only, "print the count instead of the members");
  pre->add_option("--method", o.method, "enumeration method")->check(CLI::IsMember({"auto", "recursive", "oracle"}));
  add_oracle_cutoff(pre);
  add_format(pre);

  auto* cnt = app.add_subcommand("count", "count the preimages of a word");
  add_word(cnt);
  cnt->add_option("--method", o.method, "counting method")
      ->check(CLI::IsMember({"auto", "recursive", "formula", "oracle"}));
  add_oracle_cutoff(cnt);
  add_format(cnt);

  auto* cen = app.add_subcommand("census", "tally preimage counts across all of S_n");
  cen->add_option("n", o.n, "permutation length")->required();
  cen->add_option("--cutoff", o.cutoff, "largest allowed n");
  add_format(cen);

  auto* cls = app.add_subcommand("classify", "list the permutations with exactly k preimages");
  cls->add_option("n", o.n, "permutation length")->required();
  cls->add_option("k", o.k, "preimage count")->required()->check(CLI::Number);
  cls->add_option("--cutoff", o.cutoff, "largest allowed n");
  add_format(cls);

  auto* seq = app.add_subcommand("sequence", "print a counting sequence or triangle");
  seq->add_option("name", o.sequence_name, "q0 q1 q2 catalan derangement ballot-b ballot-g")->required();
  seq->add_option("--terms", o.terms, "number of terms or rows (q0/q1 start at n=1, the rest at n=0)");
  add_format(seq);

  auto* ver = app.add_subcommand("verify", "run a named verification suite");
  ver->add_option("suite", o.suite, "suite name; see --help-suites")->required();
  ver->add_option("--max-n", o.max_n, "exhaustive bound override");
  ver->add_option("--samples", o.samples, "random draws per length past the exhaustive bound");
  ver->add_option("--seed", o.seed, "seed for random sampling");
  add_oracle_cutoff(ver);
  ver->add_flag("--strict", o.strict, "treat exploratory findings as failures");
  ver->add_flag("--exploratory", o.exploratory, "treat failures as findings (exit 0)");

  auto* wit = app.add_subcommand("witness", "print a canonical witness permutation");
  wit->add_option("kind", o.witness_kind, "mpm (m1 p1 m2) or not3 (n)")->required();
  wit->add_option("args", o.witness_args, "shape parameters")->expected(-1);
  add_format(wit);

  try {
    app.parse(argc, argv);
    if (apply->parsed()) return cmd_apply(o);
    if (pre->parsed()) return cmd_preimages(o);
    if (cnt->parsed()) return cmd_count(o);
    if (cen->parsed()) return cmd_census(o);
    if (cls->parsed()) return cmd_classify(o);
    if (seq->parsed()) return cmd_sequence(o);
    if (ver->parsed()) return cmd_verify(o);
    if (wit->parsed()) return cmd_witness(o);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (std::string(e.what()).rfind("unknown suite", 0) == 0) {
      std::cerr << "valid suites:";
      for (const auto& s : qslab::suite_names()) std::cerr << " " << s;
      std::cerr << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
