#include "evord/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "evord/certificate.hpp"
#include "evord/counting.hpp"
#include "evord/error.hpp"
#include "evord/realizer.hpp"
#include "evord/report_io.hpp"
#include "evord/search.hpp"
#include "evord/signs.hpp"
#include "evord/text_io.hpp"

namespace evord {

namespace {

using nlohmann::ordered_json;

constexpr const char* kFooter = R"txt(Claims and the commands that check them:
  reversal-invariant identity sets, 597861 for (6,5)       count invariant-sets -n 6 -k 5
  translation classes 1588155 (S5) and 2208534929 (S6)      count classes -n 5|6
  centralizer of the reversal: 8 (n=5), 48 (n=6)            count centralizer -n 5
  C(n,2) = 2^(m-1) - 1 has solutions (3,3),(6,5),(91,13)    count diophantine
  any pair of orderings is realizable on a line             check "{(1,2,3),(3,1,2)}"
  the cyclic 5-set is unrealizable (symbolic certificate)   certify-q0 [--dump-polynomials]
  every other 5-subset of S5 is realizable                  search s5
  294 identity 5-subsets of S6 fail the sign test           search s6-signs [--long-run]
  7676 S6 sets contain the cyclic set after one deletion    q0-extend
  class, group and time-reversal statistics of a set list   classes FILE [--expand]

Set arguments accept "{(1,2,3),(2,3,1)}" or "(1,2,3);(2,3,1)"; "@path" reads the
first set in a file. check exits 0 (REALIZABLE), 10 (UNREALIZABLE-CERTIFIED)
or 20 (INCONCLUSIVE). EVORD_JOBS overrides --jobs.)txt";

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

PermSet read_set_argument(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    const auto sets = parse_permset_lines(slurp(arg.substr(1)));
    if (sets.empty()) throw Error("no set found in " + arg.substr(1));
    return sets.front();
  }
  return parse_permset(arg);
}

ordered_json witness_json(const Witness& w) { return ordered_json::parse(witness_to_json(w)); }

std::string mask_str(std::uint32_t mask, int m) {
  std::string s;
  for (int i = 0; i < m; ++i) s += (mask >> i) & 1U ? '+' : '-';
  return s;
}

struct Context {
  std::ostream& out;
  bool structured = false;
};

int cmd_count(Context& ctx, const std::string& what, int n, int k, long n_max, long m_max) {
  ordered_json doc;
  doc["command"] = "count";
  doc["what"] = what;
  std::ostringstream text;
  if (what == "invariant-sets") {
    const auto v = invariant_set_count({n, k});
    doc["n"] = n;
    doc["k"] = k;
    doc["value"] = v.get_str();
    text << v.get_str() << "\n";
  } else if (what == "classes") {
    const auto v = equivalence_class_count(n, k);
    doc["n"] = n;
    doc["k"] = k;
    doc["value"] = v.get_str();
    text << v.get_str() << "\n";
  } else if (what == "centralizer") {
    const auto v = centralizer_order(n);
    doc["n"] = n;
    doc["value"] = v.get_str();
    text << v.get_str() << "\n";
  } else if (what == "five-cycles") {
    const auto c = order5_subgroup_count(n);
    doc["n"] = n;
    doc["five_cycles"] = c.five_cycles.get_str();
    doc["subgroups"] = c.subgroups.get_str();
    text << "five_cycles " << c.five_cycles.get_str() << "\nsubgroups " << c.subgroups.get_str() << "\n";
  } else if (what == "diophantine") {
    auto arr = ordered_json::array();
    for (const auto& [a, b] : diophantine_solutions(n_max, m_max)) {
      arr.push_back({a, b});
      text << "(" << a << "," << b << ")\n";
    }
    doc["solutions"] = std::move(arr);
  } else {
    throw Error("unknown count target: " + what);
  }
  ctx.out << (ctx.structured ? doc.dump(2) + "\n" : text.str());
  return 0;
}

int cmd_check(Context& ctx, const std::string& arg, bool show_signs) {
  const auto q = read_set_argument(arg);
  ordered_json doc;
  doc["command"] = "check";
  doc["set"] = q.str();
  std::ostringstream text;
  std::string verdict;
  std::string reason;
  int status = kInconclusive;

  if (q.size() == 5 && q.n() >= 2 && q.n() <= 8) {
    const auto rep = translations(q).front();
    const auto signs = sign_report(rep);
    if (show_signs) {
      auto table = ordered_json::array();
      for (const auto& [pair, cls] : signs.table) {
        const std::string pattern = mask_str(cls.mask, cls.m);
        table.push_back({{"pair", {pair.j, pair.k}}, {"pattern", pattern}});
        text << "(" << pair.j << "," << pair.k << ") " << pattern << "\n";
      }
      doc["sign_table"] = std::move(table);
      auto missing = ordered_json::array();
      for (auto m : signs.never_eliminated) missing.push_back(mask_str(m, signs.m));
      doc["patterns_not_eliminated"] = missing;
      text << "patterns not eliminated: " << signs.never_eliminated.size() << "\n";
    }
    if (signs.unrealizable) {
      verdict = "UNREALIZABLE-CERTIFIED";
      reason = "every non-trivial sign pattern of the velocity dependence is eliminated by an event pair";
      status = kUnrealizableCertified;
    }
  }
  if (status == kInconclusive && contains_q0_minor(q)) {
    const auto cert = certify_q0();
    if (!cert.conclusion) throw Error("internal: cyclic-set certificate did not verify");
    verdict = "UNREALIZABLE-CERTIFIED";
    reason = q.n() == 5 ? "translate of the cyclic set; symbolic gap certificate holds"
                        : "five of its events form a translate of the cyclic set; symbolic gap certificate holds";
    status = kUnrealizableCertified;
  }
  if (status == kInconclusive && q.size() <= 5 && q.n() >= 2) {
    const auto schedules = builtin_schedules(q.n());
    if (auto r = realize_detailed(q, schedules)) {
      verdict = "REALIZABLE";
      reason = "witness via " + r->route;
      status = kRealizable;
      doc["witness"] = witness_json(r->witness);
      text << witness_to_json(r->witness);
    }
  }
  if (status == kInconclusive) {
    verdict = "INCONCLUSIVE";
    reason = q.size() > 5 ? "more than five observers are outside the constructive pipeline"
                          : "no built-in schedule produced a witness";
  }
  doc["verdict"] = verdict;
  doc["reason"] = reason;
  if (ctx.structured) {
    ctx.out << doc.dump(2) << "\n";
  } else {
    ctx.out << verdict << "\n" << reason << "\n" << text.str();
  }
  return status;
}

int cmd_realize(Context& ctx, const std::string& arg) {
  const auto q = read_set_argument(arg);
  const auto schedules = builtin_schedules(std::max(2, q.n()));
  const auto r = realize_detailed(q, schedules);
  ordered_json doc;
  doc["command"] = "realize";
  doc["set"] = q.str();
  doc["verdict"] = r ? "REALIZED" : "NOT-REALIZED";
  if (r) {
    doc["route"] = r->route;
    doc["schedule"] = r->schedule;
    doc["translation"] = r->translation;
    doc["solved"] = r->solved;
    doc["witness"] = witness_json(r->witness);
  }
  if (ctx.structured) {
    ctx.out << doc.dump(2) << "\n";
  } else if (r) {
    ctx.out << "REALIZED route=" << r->route << " schedule=" << r->schedule
            << " translation=" << r->translation << " solved=" << r->solved << "\n"
            << witness_to_json(r->witness);
  } else {
    ctx.out << "NOT-REALIZED (inconclusive: no built-in schedule worked)\n";
  }
  return r ? 0 : kInconclusive;
}

int cmd_verify(Context& ctx, const std::string& path) {
  const auto w = witness_from_json(slurp(path));
  const auto res = verify_witness(w);
  if (ctx.structured) {
    ordered_json doc;
    doc["command"] = "verify";
    doc["ok"] = res.ok;
    doc["diagnostic"] = res.diagnostic;
    ctx.out << doc.dump(2) << "\n";
  } else {
    ctx.out << (res.ok ? "OK" : "FAILED: " + res.diagnostic) << "\n";
  }
  return res.ok ? 0 : 1;
}

int cmd_certify(Context& ctx, bool dump) {
  const auto r = certify_q0();
  if (ctx.structured) {
    ordered_json doc;
    doc["command"] = "certify-q0";
    auto ds = ordered_json::array();
    for (std::size_t k = 0; k < 4; ++k) {
      ds.push_back({{"name", "D" + std::to_string(k + 1)},
                    {"terms", r.D_summary[k].terms},
                    {"sign", r.D_summary[k].verdict()}});
    }
    doc["determinants"] = std::move(ds);
    doc["beta_d4"] = {{"terms", r.beta_summary.terms}, {"sign", r.beta_summary.verdict()}};
    doc["matrices_agree"] = r.matrices_agree;
    doc["linear_relation"] = r.linear_relation;
    doc["conclusion"] = r.conclusion;
    if (dump) {
      for (std::size_t k = 0; k < 4; ++k) doc["polynomials"]["D" + std::to_string(k + 1)] = r.D[k].dump();
      doc["polynomials"]["beta_d4"] = r.beta_d4.dump();
    }
    ctx.out << doc.dump(2) << "\n";
  } else {
    ctx.out << r.str();
    if (dump) ctx.out << r.dump();
  }
  return r.conclusion ? 0 : 1;
}

void emit_report(Context& ctx, const SearchReport& r, const std::string& output) {
  if (!output.empty()) write_report_file(output, r);
  ctx.out << (ctx.structured ? report_to_json(r) : format_report(r));
}

int cmd_classes(Context& ctx, const std::string& path, bool expand) {
  auto sets = parse_permset_lines(slurp(path));
  if (expand) {
    sets = expand_classes(sets);
  } else {
    for (auto& q : sets) {
      if (!q.contains_identity()) q = translations(q).front();
    }
  }
  const auto st = class_analysis(sets);
  if (ctx.structured) {
    ordered_json doc;
    doc["command"] = "classes";
    for (const auto& [k, v] : st) doc["stats"][k] = v;
    ctx.out << doc.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : st) ctx.out << k << " " << v << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact event orderings seen by inertial observers in Minkowski space.", "evord"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  auto* count = app.add_subcommand("count", "Closed-form counts over the symmetric group");
  std::string count_what;
  int n = 5, k = 5;
  long n_max = 100, m_max = 14;
  count->add_option("what", count_what, "invariant-sets | classes | centralizer | five-cycles | diophantine")
      ->required()
      ->check(CLI::IsMember({"invariant-sets", "classes", "centralizer", "five-cycles", "diophantine"}));
  count->add_option("-n,--n", n, "Number of events");
  count->add_option("-k,--k", k, "Set size");
  count->add_option("--n-max", n_max, "Diophantine scan bound on n");
  count->add_option("--m-max", m_max, "Diophantine scan bound on m");

  auto* check = app.add_subcommand("check", "Three-way realizability verdict for a set of orderings");
  std::string set_arg;
  bool show_signs = false;
  check->add_option("set", set_arg, "Set of permutations")->required();
  check->add_flag("--signs", show_signs, "Print the event-pair sign table");

  auto* realize_cmd = app.add_subcommand("realize", "Construct and verify a witness");
  realize_cmd->add_option("set", set_arg, "Set of permutations")->required();

  auto* verify = app.add_subcommand("verify", "Check a witness document exactly");
  std::string path;
  verify->add_option("witness", path, "Witness file")->required();

  auto* certify = app.add_subcommand("certify-q0", "Symbolic certificate for the cyclic 5-set");
  bool dump = false;
  certify->add_flag("--dump-polynomials", dump, "Print every term of D1..D4 and beta*D4");

  auto* search = app.add_subcommand("search", "Enumeration sweeps");
  std::string target;
  std::string shard_text, resume, output;
  unsigned jobs = 0;
  bool long_run = false, class_mode = false, verify_witnesses = false;
  search->add_option("target", target, "s5 | s6-signs | q0-extend")
      ->required()
      ->check(CLI::IsMember({"s5", "s6-signs", "q0-extend"}));
  search->add_option("--shard", shard_text, "Combination-rank interval a..b");
  search->add_option("--jobs", jobs, "Worker threads (default: all cores)");
  search->add_option("--resume", resume, "Directory of finished shard parts");
  search->add_option("--output", output, "Also write the report to this file");
  search->add_flag("--long-run", long_run, "s6-signs: test every combination without pruning");
  search->add_flag("--classes", class_mode, "s5: one representative per translation class");
  search->add_flag("--verify-witnesses", verify_witnesses, "s5: build and verify every witness");

  auto* q0ext = app.add_subcommand("q0-extend", "The S6 sets obtained by inserting an event into the cyclic set");
  q0ext->add_option("--output", output, "Also write the report to this file");

  auto* classes = app.add_subcommand("classes", "Class statistics of a file of sets");
  bool expand = false;
  classes->add_option("file", path, "One set per line")->required();
  classes->add_flag("--expand", expand, "First close the list under translation and time reversal");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Context ctx{out, format == "structured"};
  try {
    if (*count) return cmd_count(ctx, count_what, n, k, n_max, m_max);
    if (*check) return cmd_check(ctx, set_arg, show_signs);
    if (*realize_cmd) return cmd_realize(ctx, set_arg);
    if (*verify) return cmd_verify(ctx, path);
    if (*certify) return cmd_certify(ctx, dump);
    if (*q0ext) {
      emit_report(ctx, q0_extension_sets(), output);
      return 0;
    }
    if (*classes) return cmd_classes(ctx, path, expand);
    if (*search) {
      SearchOptions opt;
      opt.jobs = jobs;
      opt.long_run = long_run;
      opt.class_mode = class_mode;
      opt.verify_witnesses = verify_witnesses;
      if (!shard_text.empty()) opt.shard = parse_shard(shard_text);
      if (!resume.empty()) opt.resume_dir = resume;
      if (target == "s5") {
        emit_report(ctx, search_s5(opt), output);
      } else if (target == "s6-signs") {
        emit_report(ctx, search_s6_signs(opt), output);
      } else {
        emit_report(ctx, q0_extension_sets(), output);
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace evord
