#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dergrade.hpp"
#include "io.hpp"

namespace dergrade::cli {

using io::json;

enum exit_code : int {
  ok = 0,
  internal_failure = 1,
  spec_failure = 2,
  setup_failure = 3,
  property_failure = 4,
};

/// Everything one invocation needs.
struct JobSpec {
  std::string command;
  std::string group = "heisenberg";
  std::string quotient = "derived";
  std::string input = "-";
  std::string output = "-";
  std::uint64_t seed = 0;
  std::size_t samples = 50;
  std::size_t word_length = 4;
};

/// Streams used by a run; tests substitute string streams.
struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string read_all(std::istream& is) { return {std::istreambuf_iterator<char>(is), {}}; }

inline std::string read_input(const std::string& path, Streams& s) {
  if (path == "-") return read_all(s.in);
  std::ifstream f(path);
  if (!f) throw spec_error("cannot open input file '" + path + "'");
  return read_all(f);
}

/// Writes to a sibling temporary and renames it into place.
inline void write_output(const std::string& path, const std::string& text, Streams& s) {
  if (path == "-") {
    s.out << text;
    return;
  }
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw spec_error("cannot open output file '" + path + "'");
    f << text;
    if (!f.flush()) throw spec_error("failed writing output file '" + path + "'");
  }
  std::filesystem::rename(tmp, target);
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json require_field(const json& j, const char* field, const std::string& command) {
  if (!j.is_object() || !j.contains(field))
    throw spec_error(command + " input needs a \"" + std::string(field) + "\" field");
  return j[field];
}

// Built-in fixture derivations per kernel, used by `verify` without --in.

inline std::vector<json> default_fixtures(const Heisenberg&) {
  return {
      json::parse(R"({"kind":"inner","a":[[1,[1,0,0]]]})"),
      json::parse(R"({"kind":"inner","a":[[1,[1,0,0]],[1,[0,0,1]]]})"),
      json::parse(R"({"kind":"inner","a":[[1,[1,0,0]],[1,[0,1,0]]]})"),
      json::parse(R"({"kind":"central","tau":[2,3],"z":[0,0,1]})"),
      json::parse(R"({"kind":"inner","a":[[[0,1,1,1],[2,-1,1]],[[1,2,0,1],[0,1,3]]]})"),
  };
}

inline std::vector<json> default_fixtures(const FreeAbelian& g) {
  std::vector<json> out;
  std::vector<std::int64_t> tau(g.rank(), 0), z(g.rank(), 0), e1(g.rank(), 0);
  tau[0] = 1;
  z[g.rank() > 1 ? 1 : 0] = 1;
  e1[0] = 1;
  out.push_back({{"kind", "central"}, {"tau", tau}, {"z", z}});
  out.push_back({{"kind", "table"}, {"images", {{"e1", json::array({json::array({2, z}), json::array({-1, e1})})}}}});
  return out;
}

inline std::vector<json> default_fixtures(const PermutationGroup& g) {
  std::vector<json> out;
  for (const auto& s : g.generators()) out.push_back({{"kind", "inner"}, {"a", json::array({json::array({1, s.one_line()})})}});
  if (g.generators().size() >= 2) {
    auto st = mul(g.generators()[0], g.generators()[1]);
    out.push_back({{"kind", "inner"},
                   {"a", json::array({json::array({1, st.one_line()}), json::array({-2, g.generators()[0].one_line()})})}});
  }
  return out;
}

// Quotient selection per kernel.

inline GradingSetup<Heisenberg> make_setup(const std::shared_ptr<const Heisenberg>& g, const JobSpec& job, Streams&) {
  if (job.quotient == "derived") return GradingSetup<Heisenberg>::derived(g);
  if (job.quotient == "trivial")
    throw setup_rejected(setup_rejected::reason::non_abelian_quotient,
                         "quotient not abelian: generators x and y do not commute modulo N = {e} "
                         "(xy = (1,1,1), yx = (1,1,0))");
  throw spec_error("heisenberg supports --quotient derived (N = H') or trivial");
}

inline GradingSetup<FreeAbelian> make_setup(const std::shared_ptr<const FreeAbelian>& g, const JobSpec& job, Streams&) {
  if (job.quotient == "derived" || job.quotient == "trivial") return GradingSetup<FreeAbelian>::derived(g);
  throw spec_error(g->name() + " supports --quotient derived (= trivial, G' = {0})");
}

/// "derived", "trivial", or a JSON file {"normal_subgroup": [<one-line>, ...]}
/// listing generators of N.
inline GradingSetup<PermutationGroup> make_setup(const std::shared_ptr<const PermutationGroup>& g,
                                                 const JobSpec& job, Streams& s) {
  if (job.quotient == "derived") return GradingSetup<PermutationGroup>::derived(g);
  std::vector<Permutation> gens;
  if (job.quotient != "trivial") {
    const auto spec = io::parse(read_input(job.quotient, s), job.quotient);
    const auto list = require_field(spec, "normal_subgroup", "quotient spec");
    if (!list.is_array()) throw spec_error("quotient spec: \"normal_subgroup\" must be an array of permutations");
    for (std::size_t i = 0; i < list.size(); ++i)
      gens.push_back(io::element_from_json(*g, list[i], "normal_subgroup[" + std::to_string(i) + "]"));
  }
  return {g, PermutationQuotient(g, gens)};
}

template <GroupKernel G>
std::vector<Derivation<G>> parse_derivation_list(const std::shared_ptr<const G>& group, const json& j) {
  std::vector<Derivation<G>> out;
  const json list = j.is_object() && j.contains("derivations") ? j["derivations"] : j;
  if (list.is_array()) {
    for (std::size_t i = 0; i < list.size(); ++i)
      out.push_back(io::derivation_from_json(group, list[i], "derivations[" + std::to_string(i) + "]"));
  } else {
    out.push_back(io::derivation_from_json(group, list));
  }
  return out;
}

template <GroupKernel G>
int run_with(const std::shared_ptr<const G>& group, const JobSpec& job, Streams& s) {
  const auto& cmd = job.command;

  if (cmd == "info") {
    json gens = json::array();
    for (std::size_t i = 0; i < group->generators().size(); ++i)
      gens.push_back({{"name", group->generator_names()[i]},
                      {"element", io::to_json(group->generators()[i])},
                      {"display", to_string(group->generators()[i])}});
    json out{{"group", group->name()},
             {"generators", gens},
             {"center", group->center_description()},
             {"derived_subgroup", group->derived_subgroup_description()},
             {"stem", group->is_stem()}};
    if constexpr (std::is_same_v<G, PermutationGroup>) out["order"] = group->order();
    write_output(job.output, dump(out), s);
    return ok;
  }

  const auto input = job.input.empty() ? std::string() : read_input(job.input, s);

  if (cmd == "decompose") {
    const auto setup = make_setup(group, job, s);
    const auto d = io::derivation_from_json(group, io::parse(input, job.input));
    const auto dec = decompose(d, setup);
    write_output(job.output, dump(io::to_json(dec)), s);
    s.err << "quotient: " << setup.quotient().description() << "\n";
    s.err << std::left << std::setw(24) << "key" << "generator-image terms\n";
    for (const auto& [k, c] : dec.components) {
      std::size_t terms = 0;
      for (const auto& img : c.images()) terms += img.size();
      s.err << std::left << std::setw(24) << k.str() << terms << "\n";
    }
    if (dec.components.empty()) s.err << "(zero derivation: no components)\n";
    return ok;
  }

  if (cmd == "bracket") {
    const auto j = io::parse(input, job.input);
    json left, right;
    if (j.is_array() && j.size() == 2) {
      left = j[0];
      right = j[1];
    } else {
      left = require_field(j, "left", cmd);
      right = require_field(j, "right", cmd);
    }
    const auto d = io::derivation_from_json(group, left, "left");
    const auto e = io::derivation_from_json(group, right, "right");
    write_output(job.output, dump(io::to_json(bracket(d, e))), s);
    return ok;
  }

  if (cmd == "apply") {
    const auto j = io::parse(input, job.input);
    const auto d = io::derivation_from_json(group, require_field(j, "derivation", cmd));
    const auto x = io::algebra_from_json(*group, require_field(j, "x", cmd), "x");
    write_output(job.output, dump(io::to_json(d.apply(x))), s);
    return ok;
  }

  if (cmd == "character") {
    const auto j = io::parse(input, job.input);
    const auto d = io::derivation_from_json(group, require_field(j, "derivation", cmd));
    const auto phi = io::arrow_from_json(*group, require_field(j, "arrow", cmd));
    write_output(job.output, dump(io::to_json(character_value(d, phi))), s);
    return ok;
  }

  if (cmd == "verify") {
    const auto setup = make_setup(group, job, s);
    std::vector<Derivation<G>> fixtures;
    if (input.empty() || input.find_first_not_of(" \t\r\n") == std::string::npos) {
      for (const auto& f : default_fixtures(*group)) fixtures.push_back(io::derivation_from_json(group, f));
    } else {
      fixtures = parse_derivation_list(group, io::parse(input, job.input));
    }
    const auto results = run_verification(setup, fixtures, job.seed, {job.samples, job.word_length});
    json props = json::array();
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed();
      props.push_back({{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"passed", r.passed()}});
      s.err << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.name << r.checks - r.failures
            << "/" << r.checks << "\n";
    }
    json out{{"group", group->name()},
             {"quotient", setup.quotient().description()},
             {"seed", job.seed},
             {"samples", job.samples},
             {"word_len", job.word_length},
             {"fixtures", fixtures.size()},
             {"properties", props},
             {"passed", all}};
    write_output(job.output, dump(out), s);
    return all ? ok : property_failure;
  }

  throw spec_error("unknown command '" + cmd + "'");
}

} // namespace detail

/// Resolves --group and runs the job. Maps errors onto exit codes:
/// 2 spec/parse, 3 setup rejection, 4 property failure.
inline int run(const JobSpec& job, Streams& s) {
  try {
    if (job.samples == 0 || job.word_length == 0) throw spec_error("--samples and --word-len must be positive");
    const auto& g = job.group;
    if (g == "heisenberg") return detail::run_with(std::make_shared<const Heisenberg>(), job, s);
    if (g.rfind("zn:", 0) == 0) {
      std::size_t n = 0;
      try {
        std::size_t pos = 0;
        n = std::stoul(g.substr(3), &pos);
        if (pos + 3 != g.size()) n = 0;
      } catch (const std::exception&) {
      }
      if (n == 0 || n > 16) throw spec_error("--group zn:<n> needs 1 <= n <= 16");
      return detail::run_with(std::make_shared<const FreeAbelian>(n), job, s);
    }
    if (g.rfind("perm:", 0) == 0)
      return detail::run_with(std::make_shared<const PermutationGroup>(PermutationGroup::named(g.substr(5))), job, s);
    throw spec_error("unknown group '" + g + "' (expected heisenberg, zn:<n> or perm:<name>)");
  } catch (const setup_rejected& e) {
    s.err << "setup rejected: " << e.what() << "\n";
    return setup_failure;
  } catch (const parse_error& e) {
    s.err << "parse error: " << e.what() << "\n";
    return spec_failure;
  } catch (const error& e) {
    s.err << "error: " << e.what() << "\n";
    return spec_failure;
  } catch (const std::exception& e) {
    s.err << "internal error: " << e.what() << "\n";
    return internal_failure;
  }
}

/// Parses argv into a JobSpec and runs it.
inline int main(int argc, char** argv, Streams& s) {
  CLI::App app{"Derivations of group algebras and their grading by an abelian quotient G/N", "dergrade"};
  app.require_subcommand(1);
  JobSpec job;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"decompose", "split a derivation into its graded components"},
      {"bracket", "commutator [d, e] of two derivations"},
      {"apply", "evaluate d(x) on an algebra element"},
      {"character", "character value of a derivation on an arrow (u, v)"},
      {"verify", "run the invariant suites on fixture derivations"},
      {"info", "generators, centre, commutator subgroup and stem verdict"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--group", job.group, "heisenberg | zn:<n> | perm:<S4|A5|D4|C6|V4|...>");
    sub->add_option("--quotient", job.quotient, "derived | trivial | quotient spec JSON file");
    sub->add_option("--in", job.input, "input JSON file, - for stdin");
    sub->add_option("--out", job.output, "output file, - for stdout");
    sub->add_option("--seed", job.seed, "random seed");
    sub->add_option("--samples", job.samples, "verification sample count");
    sub->add_option("--word-len", job.word_length, "maximum random word length");
    sub->callback([&job, name = name] { job.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, s.out, s.err);
    return rc == 0 ? ok : spec_failure;
  }
  if (job.command == "info") job.input.clear();
  if (job.command == "verify" && job.input == "-" && !app.get_subcommand("verify")->count("--in")) job.input.clear();
  return run(job, s);
}

} // namespace dergrade::cli
