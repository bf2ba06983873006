#include "nextclosure/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "nextclosure/closure.hpp"
#include "nextclosure/cxt.hpp"
#include "nextclosure/random_context.hpp"

namespace nextclosure {

namespace {

using Clock = std::chrono::steady_clock;

class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

FormalContext load_context(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_cxt(buf.str());
  } catch (const CxtParseError& e) {
    throw DomainError(path + ":" + std::to_string(e.line()) + ": " + e.what());
  }
}

std::vector<std::string> names_of(const BitSet& set, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (auto i : set.indices()) out.push_back(names[i]);
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ' ';
    s += names[i];
  }
  return s;
}

enum class Algorithm { kIrreducible, kClassic };
enum class Format { kLines, kJson };

// Streams attribute subsets of `k` in the order of the chosen algorithm.
void visit_intents(const FormalContext& k, Algorithm algorithm, std::size_t limit,
                   const std::function<void(const BitSet&)>& visit) {
  std::size_t emitted = 0;
  if (limit == 0) return;
  if (algorithm == Algorithm::kIrreducible) {
    for_each_intent(k, [&](const BitSet& b) {
      visit(b);
      return ++emitted < limit;
    });
    return;
  }
  const ClosureOperator c = intent_closure_operator(k);
  std::optional<BitSet> current = c(BitSet(c.n));
  while (current && emitted < limit) {
    visit(*current);
    ++emitted;
    current = classic_next(*current, c);
  }
}

void print_sets(std::ostream& out, const std::vector<BitSet>& sets, const std::vector<std::string>& names,
                Format format) {
  if (format == Format::kJson) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& s : sets) doc.push_back(names_of(s, names));
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& s : sets) out << join_names(names_of(s, names)) << '\n';
}

std::string format_report_table(const std::vector<RunReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "algorithm" << std::right << std::setw(10) << "intents" << std::setw(12)
     << "wall_ms" << std::setw(10) << "calls" << std::setw(16) << "superset_tests" << std::setw(14) << "max_per_call"
     << std::setw(15) << "intersections" << std::setw(10) << "closures" << '\n';
  for (const auto& r : reports) {
    os << std::left << std::setw(12) << r.algorithm << std::right << std::setw(10) << r.intent_count << std::setw(12)
       << std::fixed << std::setprecision(3) << r.wall_ms << std::setw(10) << r.successor_calls << std::setw(16)
       << r.superset_tests << std::setw(14) << r.max_superset_tests_per_call << std::setw(15) << r.intersections
       << std::setw(10) << r.closure_applications << '\n';
  }
  return os.str();
}

}  // namespace

std::vector<RunReport> benchmark_intents(const FormalContext& k, std::size_t repeat) {
  repeat = std::max<std::size_t>(repeat, 1);
  RunReport irreducible{.algorithm = "irreducible", .wall_ms = std::numeric_limits<double>::infinity()};
  RunReport classic{.algorithm = "classic", .wall_ms = std::numeric_limits<double>::infinity()};

  for (std::size_t run = 0; run < repeat; ++run) {
    RunReport r{.algorithm = irreducible.algorithm};
    const auto start = Clock::now();
    const ObjectIntentTable table = object_intent_rows(clarify_reduce_objects(k));
    std::optional<BitSet> current = BitSet::full(table.attribute_count);
    while (current) {
      ++r.intent_count;
      IntentCounters counters;
      current = next_intent(table, *current, &counters);
      ++r.successor_calls;
      r.superset_tests += counters.superset_tests;
      r.intersections += counters.intersections;
      r.max_superset_tests_per_call = std::max(r.max_superset_tests_per_call, counters.superset_tests);
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (r.wall_ms < irreducible.wall_ms) irreducible = r;
  }

  for (std::size_t run = 0; run < repeat; ++run) {
    RunReport r{.algorithm = classic.algorithm};
    const ClosureOperator base = intent_closure_operator(k);
    std::uint64_t applications = 0;
    const ClosureOperator counted{base.n, [&](const BitSet& b) {
                                    ++applications;
                                    return base(b);
                                  }};
    const auto start = Clock::now();
    std::optional<BitSet> current = counted(BitSet(counted.n));
    while (current) {
      ++r.intent_count;
      current = classic_next(*current, counted);
      ++r.successor_calls;
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    r.closure_applications = applications;
    if (r.wall_ms < classic.wall_ms) classic = r;
  }
  return {irreducible, classic};
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate intents, extents and concepts of formal contexts with Next-Closure", "fcaenum"};
  app.require_subcommand(1);

  const std::map<std::string, Algorithm> algorithms{{"irreducible", Algorithm::kIrreducible},
                                                    {"classic", Algorithm::kClassic}};
  const std::map<std::string, Format> formats{{"lines", Format::kLines}, {"json", Format::kJson}};

  std::string file;
  Algorithm algorithm = Algorithm::kIrreducible;
  Format format = Format::kLines;
  std::size_t limit = std::numeric_limits<std::size_t>::max();

  auto add_enumeration_options = [&](CLI::App* sub) {
    sub->add_option("FILE", file, "Context in Burmeister .cxt format")->required();
    sub->add_option("--algorithm", algorithm, "irreducible (default) or classic")
        ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case));
    sub->add_option("--limit", limit, "Stop after N results")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "lines (default) or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* intents = app.add_subcommand("intents", "List intents, one per line");
  add_enumeration_options(intents);
  auto* extents = app.add_subcommand("extents", "List extents, one per line");
  add_enumeration_options(extents);
  auto* concepts = app.add_subcommand("concepts", "List extent | intent pairs");
  add_enumeration_options(concepts);

  auto* reduce = app.add_subcommand("reduce", "Write the object-clarified, object-reduced context");
  reduce->add_option("FILE", file, "Context in Burmeister .cxt format")->required();

  std::size_t repeat = 1;
  auto* bench = app.add_subcommand("bench", "Compare both intent algorithms");
  bench->add_option("FILE", file, "Context in Burmeister .cxt format")->required();
  bench->add_option("--repeat", repeat, "Timed runs per algorithm (best is reported)")->check(CLI::PositiveNumber);
  bench->add_option("--format", format, "lines (default) or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::size_t objects = 0, attributes = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  auto* random = app.add_subcommand("random", "Write a random context in .cxt format");
  random->add_option("--objects", objects)->required();
  random->add_option("--attributes", attributes)->required();
  random->add_option("--density", density)->required();
  random->add_option("--seed", seed)->required();

  std::size_t samples = 1000;
  auto* check = app.add_subcommand("check", "Parse a context and test the closure axioms of ''");
  check->add_option("FILE", file, "Context in Burmeister .cxt format")->required();
  check->add_option("--samples", samples, "Random subsets tested for large attribute sets");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  try {
    if (intents->parsed() || extents->parsed()) {
      FormalContext k = load_context(file);
      const bool objects_side = extents->parsed();
      if (objects_side) k = transpose(k);
      std::vector<BitSet> sets;
      visit_intents(k, algorithm, limit, [&](const BitSet& b) { sets.push_back(b); });
      print_sets(out, sets, k.attributes(), format);
    } else if (concepts->parsed()) {
      const FormalContext k = load_context(file);
      nlohmann::json doc = nlohmann::json::array();
      visit_intents(k, algorithm, limit, [&](const BitSet& intent) {
        const auto extent_names = names_of(derive_objects(k, intent), k.objects());
        const auto intent_names = names_of(intent, k.attributes());
        if (format == Format::kJson)
          doc.push_back({{"extent", extent_names}, {"intent", intent_names}});
        else
          out << join_names(extent_names) << " | " << join_names(intent_names) << '\n';
      });
      if (format == Format::kJson) out << doc.dump() << '\n';
    } else if (reduce->parsed()) {
      out << write_cxt(clarify_reduce_objects(load_context(file)));
    } else if (bench->parsed()) {
      const auto reports = benchmark_intents(load_context(file), repeat);
      if (format == Format::kJson) {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& r : reports)
          doc.push_back({{"algorithm", r.algorithm},
                         {"intents", r.intent_count},
                         {"wall_ms", r.wall_ms},
                         {"successor_calls", r.successor_calls},
                         {"superset_tests", r.superset_tests},
                         {"max_superset_tests_per_call", r.max_superset_tests_per_call},
                         {"intersections", r.intersections},
                         {"closure_applications", r.closure_applications}});
        out << doc.dump(2) << '\n';
      } else {
        out << format_report_table(reports);
      }
      if (reports[0].intent_count != reports[1].intent_count) {
        err << "error: algorithms disagree on the number of intents\n";
        return kExitDomainError;
      }
    } else if (random->parsed()) {
      try {
        out << write_cxt(random_context(objects, attributes, density, seed));
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
      }
    } else if (check->parsed()) {
      const FormalContext k = load_context(file);
      AxiomCheckOptions options;
      options.samples = samples;
      const AxiomReport report = validate_closure_axioms(intent_closure_operator(k), options);
      out << k.object_count() << " objects, " << k.attribute_count() << " attributes\n";
      out << "closure axioms: " << report.checked_sets
          << (report.exhaustive ? " subsets (exhaustive)" : " sampled subsets")
          << ", " << report.violations.size() << " violations\n";
      for (const auto& v : report.violations)
        err << "violation: " << to_string(v.axiom) << " at " << v.subset.to_string() << '\n';
      if (!report.ok()) return kExitDomainError;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace nextclosure
