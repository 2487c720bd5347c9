// srw: command-line front end.
//
// Exit codes: 0 the claim holds, 1 refuted, 2 undetermined or out of
// resources, 3 malformed input.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "srw/catalog.hpp"
#include "srw/completion.hpp"
#include "srw/congruence.hpp"
#include "srw/dehn.hpp"
#include "srw/enumeration.hpp"
#include "srw/error.hpp"
#include "srw/identities.hpp"
#include "srw/witness.hpp"

using nlohmann::json;
using namespace srw;

namespace {

  constexpr int         kOk           = 0;
  constexpr int         kRefuted      = 1;
  constexpr int         kUndetermined = 2;
  constexpr int         kInputError   = 3;
  constexpr std::size_t kMaxCatalogN  = 64;

  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Options {
    std::string   catalog;
    std::string   file;
    std::string   order;
    std::string   format = "text";
    std::uint64_t seed   = 0;
    std::size_t   jobs   = 1;
  };

  struct Input {
    Presentation               presentation;
    RewritingSystem            system;
    std::optional<std::size_t> mn;  // set for catalog M_n in its own order
  };

  std::optional<std::size_t> parse_mn(std::string const& name) {
    if (name.size() < 2 || (name[0] != 'M' && name[0] != 'm')) {
      return std::nullopt;
    }
    try {
      return std::stoul(name.substr(1));
    } catch (std::exception const&) {
      return std::nullopt;
    }
  }

  Input load(Options const& o) {
    if (o.catalog.empty() == o.file.empty()) {
      throw InputError("exactly one of --catalog and --file is required");
    }
    std::optional<std::size_t> mn;
    auto                       read = [&]() -> Presentation {
      if (!o.catalog.empty()) {
        mn = parse_mn(o.catalog);
        return lookup_catalog(o.catalog, kMaxCatalogN).presentation;
      }
      std::ifstream in(o.file);
      if (!in) {
        throw InputError("cannot read " + o.file);
      }
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_presentation(buf.str());
    };
    Presentation p = read();
    if (!o.order.empty()) {
      p.alphabet = Alphabet(p.alphabet.letters(), o.order);
      mn.reset();
    }
    std::vector<std::string> warnings;
    RewritingSystem          s = orient(p, ShortlexOrder(p.alphabet), &warnings);
    for (auto const& w : warnings) {
      std::cerr << "warning: " << w << '\n';
    }
    return {std::move(p), std::move(s), mn};
  }

  std::string show(RewritingSystem const& s, Element const& e) {
    return format(s.alphabet(), e);
  }

  std::string show_word(RewritingSystem const& s, Word const& w) {
    return s.alphabet().format(w);
  }

  void print_json(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  void require_format(Options const& o, std::string const& cmd, bool csv_ok) {
    if (o.format == "csv" && !csv_ok) {
      throw InputError("csv output is not available for " + cmd);
    }
  }

  json trace_json(RewritingSystem const& s, std::vector<MergeStep> const& trace) {
    json out = json::array();
    for (auto const& step : trace) {
      char const* side = step.side == MergeSide::seed   ? "seed"
                         : step.side == MergeSide::left ? "left"
                                                        : "right";
      json j{{"u", show(s, step.u)},
             {"v", show(s, step.v)},
             {"side", side},
             {"onPath", step.on_path}};
      if (step.side != MergeSide::seed) {
        j["generator"] = std::string(1, s.alphabet().letter(step.generator));
        j["parent"]    = *step.parent;
      }
      out.push_back(std::move(j));
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String-rewriting workbench for finitely presented monoids with zero"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  auto*   catalog_opt = app.add_option("--catalog", o.catalog, "Built-in presentation, e.g. M2");
  auto*   file_opt    = app.add_option("--file", o.file, "Presentation file");
  catalog_opt->excludes(file_opt);
  app.add_option("--order", o.order, "Letter precedence, lowest first");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--jobs", o.jobs, "Worker threads for probe-all and dehn-profile")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));

  std::string word_u, word_v;
  std::size_t max_len = 0, radius = 0, seed_len = 0, n_max = 0, slack = 4, n = 1;
  std::size_t max_nodes = 5'000'000, max_merges = SIZE_MAX;
  bool        with_trace = false;

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of a word");
  normalize_cmd->add_option("word", word_u)->required();

  auto* equal_cmd = app.add_subcommand("equal", "Decide u = v in the monoid");
  equal_cmd->add_option("u", word_u)->required();
  equal_cmd->add_option("v", word_v)->required();

  auto* confluence_cmd = app.add_subcommand("confluence", "Check the critical pairs");
  auto* complete_cmd   = app.add_subcommand("complete", "Knuth-Bendix completion");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List normal forms");
  enumerate_cmd->add_option("--max-len", max_len)->required();

  auto* growth_cmd = app.add_subcommand("growth", "Count normal forms by length");
  growth_cmd->add_option("--max-len", max_len)->required();

  auto* witness_cmd = app.add_subcommand("witness", "Find x, y with x w y = 1");
  witness_cmd->add_option("word", word_u)->required();
  std::size_t witness_len = 12;
  witness_cmd->add_option("--max-len", witness_len, "Longest intermediate state");
  witness_cmd->add_option("--max-nodes", max_nodes);

  auto* probe_cmd = app.add_subcommand("probe", "Congruence generated by (u, v)");
  probe_cmd->add_option("u", word_u)->required();
  probe_cmd->add_option("v", word_v)->required();
  probe_cmd->add_option("--radius", radius)->required();
  probe_cmd->add_option("--max-merges", max_merges);
  probe_cmd->add_flag("--trace", with_trace, "Print the collapse certificate");

  auto* probe_all_cmd = app.add_subcommand("probe-all", "Probe every short seed pair");
  probe_all_cmd->add_option("--seed-len", seed_len)->required();
  probe_all_cmd->add_option("--radius", radius)->required();
  probe_all_cmd->add_option("--max-merges", max_merges);

  auto* dehn_cmd = app.add_subcommand("dehn", "Derivation area of an equal pair");
  dehn_cmd->add_option("u", word_u)->required();
  dehn_cmd->add_option("v", word_v)->required();
  dehn_cmd->add_option("--max-len", max_len, "Longest intermediate word (default |u|+|v|+4)");
  dehn_cmd->add_option("--max-nodes", max_nodes);

  auto* profile_cmd = app.add_subcommand("dehn-profile", "Measured Dehn function");
  profile_cmd->add_option("--n-max", n_max)->required();
  profile_cmd->add_option("--slack", slack);
  profile_cmd->add_option("--max-nodes", max_nodes);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Check the M_n identities");
  verify_cmd->add_option("--n", n)->required()->check(CLI::Range(std::size_t{1}, kMaxCatalogN));

  auto*       catalog_cmd = app.add_subcommand("catalog", "Built-in presentations");
  std::string catalog_action, catalog_name;
  catalog_cmd->add_option("action", catalog_action)
      ->required()
      ->check(CLI::IsMember({"list", "dump"}));
  catalog_cmd->add_option("name", catalog_name);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInputError;
  }

  bool const json_out = o.format == "json";
  bool const csv_out  = o.format == "csv";

  try {
    if (catalog_cmd->parsed()) {
      require_format(o, "catalog", false);
      if (catalog_action == "list") {
        json j = json::array();
        for (auto const& entry : list_catalog()) {
          if (json_out) {
            j.push_back({{"name", entry.name}, {"description", entry.description}});
          } else {
            std::cout << entry.name << "  " << entry.description << '\n';
          }
        }
        if (json_out) {
          print_json(j);
        }
        return kOk;
      }
      if (catalog_name.empty()) {
        throw InputError("catalog dump needs a name");
      }
      CatalogEntry entry = lookup_catalog(catalog_name, kMaxCatalogN);
      if (json_out) {
        json rels = json::array();
        for (auto const& r : entry.presentation.relations) {
          rels.push_back({{"lhs", entry.presentation.alphabet.format(r.lhs)},
                          {"rhs", format(entry.presentation.alphabet, r.rhs)}});
        }
        print_json({{"name", entry.name},
                    {"generators", entry.presentation.alphabet.precedence_string()},
                    {"relations", rels},
                    {"provenance", entry.provenance}});
      } else {
        std::cout << "# " << entry.name << ": " << entry.provenance << '\n'
                  << format_presentation(entry.presentation);
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      require_format(o, "verify-paper", false);
      IdentityReport report = verify_paper_identities(n);
      if (json_out) {
        json checks = json::array();
        for (auto const& c : report.checks) {
          checks.push_back({{"word", c.lhs},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"pass", c.pass}});
        }
        print_json({{"n", n}, {"allPass", report.all_pass()}, {"checks", checks}});
      } else {
        for (auto const& c : report.checks) {
          std::cout << (c.pass ? "pass  " : "FAIL  ") << c.lhs << " = " << c.expected;
          if (!c.pass) {
            std::cout << " (got " << c.actual << ')';
          }
          std::cout << '\n';
        }
        std::cout << report.checks.size() << " identities, "
                  << (report.all_pass() ? "all hold" : "some fail") << '\n';
      }
      return report.all_pass() ? kOk : kRefuted;
    }

    Input const            in = load(o);
    RewritingSystem const& s  = in.system;
    Alphabet const&        A  = s.alphabet();

    if (normalize_cmd->parsed()) {
      require_format(o, "normalize", false);
      Element    e = parse_element(A, word_u);
      Derivation d = e.is_zero() ? Derivation{e, 0} : derive(s, e.word());
      if (json_out) {
        print_json({{"word", word_u}, {"normalForm", show(s, d.result)}, {"steps", d.steps}});
      } else {
        std::cout << show(s, d.result) << '\n';
      }
      return kOk;
    }

    if (equal_cmd->parsed()) {
      require_format(o, "equal", false);
      Element a     = normalize(s, parse_element(A, word_u));
      Element b     = normalize(s, parse_element(A, word_v));
      bool    equal = a == b;
      if (json_out) {
        print_json({{"u", word_u},
                    {"v", word_v},
                    {"equal", equal},
                    {"normalForms", {show(s, a), show(s, b)}}});
      } else {
        std::cout << (equal ? "true" : "false") << '\n';
      }
      return equal ? kOk : kRefuted;
    }

    if (confluence_cmd->parsed()) {
      require_format(o, "confluence", false);
      ConfluenceReport r = check_local_confluence(s);
      if (json_out) {
        print_json(to_json(s, r));
      } else {
        std::cout << std::boolalpha << "locally confluent: " << r.locally_confluent
                  << ", terminating: " << r.terminating
                  << ", critical pairs: " << r.critical_pair_count << '\n';
        for (auto const& cp : r.unresolved) {
          std::cout << "unresolved: rules " << cp.source.rule1 << ',' << cp.source.rule2
                    << " on " << show_word(s, cp.source.word) << ": " << show(s, cp.left)
                    << " vs " << show(s, cp.right) << '\n';
        }
      }
      return r.complete() ? kOk : kRefuted;
    }

    if (complete_cmd->parsed()) {
      require_format(o, "complete", false);
      CompletionOutcome out = knuth_bendix(in.presentation, ShortlexOrder(in.presentation.alphabet));
      bool              done = std::holds_alternative<Completed>(out);
      RewritingSystem const& sys =
          done ? std::get<Completed>(out).system : std::get<ResourceLimit>(out).system;
      if (json_out) {
        json rules = json::array();
        for (auto const& r : sys.rules()) {
          rules.push_back({{"lhs", show_word(sys, r.lhs)}, {"rhs", show(sys, r.rhs)}});
        }
        json j{{"status", done ? "completed" : "resource-limit"}, {"rules", rules}};
        if (done) {
          j["steps"] = std::get<Completed>(out).steps;
        } else {
          j["reason"]     = std::get<ResourceLimit>(out).reason;
          j["unresolved"] = std::get<ResourceLimit>(out).unresolved;
        }
        print_json(j);
      } else {
        for (std::size_t i = 0; i < sys.rules().size(); ++i) {
          std::cout << sys.format_rule(i) << '\n';
        }
        if (done) {
          std::cout << "completed: " << sys.rules().size() << " rules, "
                    << std::get<Completed>(out).steps << " steps\n";
        } else {
          std::cout << "resource limit: " << std::get<ResourceLimit>(out).reason << '\n';
        }
      }
      return done ? kOk : kUndetermined;
    }

    if (enumerate_cmd->parsed()) {
      auto nfs = enumerate_normal_forms(s, max_len);
      if (json_out) {
        json j = json::array();
        for (auto const& w : nfs) {
          j.push_back(show_word(s, w));
        }
        print_json(j);
      } else {
        if (csv_out) {
          std::cout << "length,word\n";
        }
        for (auto const& w : nfs) {
          if (csv_out) {
            std::cout << w.size() << ',';
          }
          std::cout << show_word(s, w) << '\n';
        }
      }
      return kOk;
    }

    if (growth_cmd->parsed()) {
      GrowthSeries g = growth_series(s, max_len);
      if (json_out) {
        print_json({{"counts", g.counts}, {"total", g.total()}});
      } else {
        std::cout << (csv_out ? "length,count\n" : "");
        for (std::size_t l = 0; l < g.counts.size(); ++l) {
          std::cout << l << (csv_out ? "," : " ") << g.counts[l] << '\n';
        }
        if (!csv_out) {
          std::cout << "total " << g.total() << '\n';
        }
      }
      return kOk;
    }

    if (witness_cmd->parsed()) {
      require_format(o, "witness", false);
      Element w = normalize(s, parse_element(A, word_u));
      if (w.is_zero()) {
        throw InputError(word_u + " is zero and has no unit witness");
      }
      std::optional<WitnessPair> pair;
      char const*                method = in.mn ? "constructive" : "search";
      if (in.mn) {
        pair = unit_witness_mn(s, *in.mn, w);
      } else {
        pair = unit_witness_search(s, w.word(), {witness_len, max_nodes});
      }
      if (!pair) {
        if (json_out) {
          print_json({{"word", word_u}, {"method", method}, {"status", "undetermined"}});
        } else {
          std::cout << "undetermined within the search limits\n";
        }
        return kUndetermined;
      }
      Word const x = pair->x, y = pair->y;
      bool       ok = normalize(s, concat(x, w.word(), y)).is_identity();
      if (json_out) {
        print_json({{"word", word_u},
                    {"method", method},
                    {"x", show_word(s, x)},
                    {"y", show_word(s, y)},
                    {"verified", ok}});
      } else {
        std::cout << "x = " << show_word(s, x) << ", y = " << show_word(s, y) << '\n';
      }
      return ok ? kOk : kRefuted;
    }

    if (probe_cmd->parsed()) {
      require_format(o, "probe", false);
      Element     u = parse_element(A, word_u), v = parse_element(A, word_v);
      ProbeResult r = probe_congruence(s, u, v, radius, {max_merges});
      if (auto* c = std::get_if<Collapsed>(&r)) {
        bool replayed = replay_trace(s, u, v, c->trace);
        if (json_out) {
          json j{{"status", "collapsed"},
                 {"pathLength", c->path_length},
                 {"traceLength", c->trace.size()},
                 {"truncated", c->truncated},
                 {"replayed", replayed}};
          if (with_trace) {
            j["trace"] = trace_json(s, c->trace);
          }
          print_json(j);
        } else {
          std::cout << "collapsed: 1 ~ 0 after " << c->path_length << " merges on the path, "
                    << c->trace.size() << " in the certificate, " << c->truncated
                    << " truncated products\n";
          if (with_trace) {
            std::cout << trace_json(s, c->trace).dump(2) << '\n';
          }
        }
        return replayed ? kOk : kRefuted;
      }
      auto const& un = std::get<Undetermined>(r);
      if (json_out) {
        print_json({{"status", "undetermined"},
                    {"classCount", un.class_count},
                    {"truncated", un.truncated},
                    {"hitLimit", un.hit_limit}});
      } else {
        std::cout << "undetermined: " << un.class_count << " classes, " << un.truncated
                  << " truncated products" << (un.hit_limit ? ", merge limit hit" : "") << '\n';
      }
      return kUndetermined;
    }

    if (probe_all_cmd->parsed()) {
      ProbeSummary sum = probe_all_pairs(s, seed_len, radius, {max_merges}, o.jobs);
      auto status = [](ProbeRecord const& r) {
        return r.status == ProbeStatus::collapsed ? "collapsed" : "undetermined";
      };
      if (csv_out) {
        std::cout << "seed_u,seed_v,status,trace_len,truncated\n";
        for (auto const& r : sum.records) {
          std::cout << show(s, r.u) << ',' << show(s, r.v) << ',' << status(r) << ','
                    << r.trace_length << ',' << r.truncated << '\n';
        }
      } else if (json_out) {
        json records = json::array();
        for (auto const& r : sum.records) {
          records.push_back({{"seedU", show(s, r.u)},
                             {"seedV", show(s, r.v)},
                             {"status", status(r)},
                             {"traceLength", r.trace_length},
                             {"truncated", r.truncated}});
        }
        print_json({{"pairs", sum.records.size()},
                    {"collapsed", sum.collapsed},
                    {"undetermined", sum.undetermined},
                    {"worstTrace", sum.worst_trace},
                    {"records", records}});
      } else {
        std::cout << "pairs: " << sum.records.size() << ", collapsed: " << sum.collapsed
                  << ", undetermined: " << sum.undetermined
                  << ", worst trace: " << sum.worst_trace << '\n';
        for (auto const& r : sum.records) {
          if (r.status == ProbeStatus::undetermined) {
            std::cout << "undetermined: " << show(s, r.u) << ' ' << show(s, r.v) << '\n';
          }
        }
      }
      return sum.undetermined == 0 ? kOk : kUndetermined;
    }

    if (dehn_cmd->parsed()) {
      require_format(o, "dehn", false);
      Element u = parse_element(A, word_u), v = parse_element(A, word_v);
      auto    len = [](Element const& e) { return e.is_zero() ? 0 : e.word().size(); };
      DehnLimits limits{max_len ? max_len : len(u) + len(v) + 4, max_nodes};
      AreaResult r = dehn_area(in.presentation, s, u, v, limits);
      if (auto* a = std::get_if<Area>(&r)) {
        if (json_out) {
          json chain = json::array();
          for (auto const& e : a->derivation) {
            chain.push_back(show(s, e));
          }
          print_json({{"status", "area"}, {"steps", a->steps}, {"derivation", chain}});
        } else {
          std::cout << "area: " << a->steps << '\n';
          for (std::size_t i = 0; i < a->derivation.size(); ++i) {
            std::cout << (i ? "  -> " : "     ") << show(s, a->derivation[i]) << '\n';
          }
        }
        return kOk;
      }
      if (std::holds_alternative<NotEqual>(r)) {
        if (json_out) {
          print_json({{"status", "not-equal"}});
        } else {
          std::cout << "not equal\n";
        }
        return kRefuted;
      }
      std::size_t nodes = std::get<SearchLimitReached>(r).nodes;
      if (json_out) {
        print_json({{"status", "resource-limit"}, {"nodes", nodes}});
      } else {
        std::cout << "resource limit after " << nodes << " nodes\n";
      }
      return kUndetermined;
    }

    if (profile_cmd->parsed()) {
      auto rows = dehn_profile(in.presentation, s, n_max, {slack, max_nodes, o.jobs});
      std::size_t limited = 0;
      for (auto const& row : rows) {
        limited += row.limited.size();
      }
      if (csv_out) {
        std::cout << "n,D,limited_pairs\n";
        for (auto const& row : rows) {
          std::cout << row.n << ',' << row.d << ',' << row.limited.size() << '\n';
        }
      } else if (json_out) {
        json j = json::array();
        for (auto const& row : rows) {
          json r{{"n", row.n}, {"D", row.d}, {"limitedPairs", row.limited.size()}};
          if (row.witness) {
            r["witness"] = {show(s, row.witness->first), show(s, row.witness->second)};
          }
          j.push_back(std::move(r));
        }
        print_json({{"slack", slack}, {"rows", j}});
      } else {
        for (auto const& row : rows) {
          std::cout << "D(" << row.n << ") = " << row.d;
          if (row.witness) {
            std::cout << "  " << show(s, row.witness->first) << " ~ "
                      << show(s, row.witness->second);
          }
          if (!row.limited.empty()) {
            std::cout << "  [" << row.limited.size() << " pairs hit the search limit]";
          }
          std::cout << '\n';
        }
      }
      return limited == 0 ? kOk : kUndetermined;
    }
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (UnorientableRelation const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
