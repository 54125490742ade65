#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphpoly/bigint.hpp"
#include "graphpoly/cut.hpp"
#include "graphpoly/derived.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/indep.hpp"
#include "graphpoly/multipoly.hpp"
#include "graphpoly/poly.hpp"
#include "graphpoly/verify.hpp"

namespace graphpoly::cli {

// Sniffs DIMACS ("c"/"p" lead tokens) versus plain edge list.
inline Graph parse_auto(const std::string& text) {
  std::istringstream scan(text);
  std::string line;
  while (std::getline(scan, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;
    if (tok == "c" || tok == "p") return parse_dimacs(text);
    break;
  }
  return parse_edge_list(text);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_auto(buf.str());
}

// One polynomial answer plus its derived scalars, rendered as text or as the
// fixed JSON shape {"n","m","polynomial","scalars","ms"}. Coefficients are
// decimal strings so arbitrary precision survives JSON.
struct Report {
  int n = 0;
  int m = 0;
  std::string name;
  std::string method;
  Poly poly;
  nlohmann::ordered_json scalars = nlohmann::ordered_json::object();
  long long ms = 0;
};

inline std::vector<std::string> coefficient_strings(const Poly& p) {
  std::vector<std::string> out;
  if (p.degree() < 0) return {"0"};
  out.reserve(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.at(k).str());
  return out;
}

inline void write_report(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["polynomial"] = {{"name", r.name}, {"method", r.method}, {"coeffs", coefficient_strings(r.poly)}};
    j["scalars"] = r.scalars;
    j["ms"] = r.ms;
    out << j.dump() << "\n";
    return;
  }
  out << "n = " << r.n << "\n";
  out << "m = " << r.m << "\n";
  out << r.name << " polynomial [" << r.method << "]: " << r.poly.to_string() << "\n";
  for (const auto& [key, val] : r.scalars.items()) {
    out << key << " = " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
  }
  out << "ms = " << r.ms << "\n";
}

namespace cli_detail {

using Clock = std::chrono::steady_clock;

inline long long elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

inline int smallest_nonzero_index(const Poly& p) {
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.at(k) != 0) return k;
  }
  throw std::logic_error("zero polynomial has no nonzero coefficient");
}

inline std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace cli_detail

// Front-end entry point, argv-style but without the program name. All output
// goes to the supplied streams; the return value is the process exit code:
// 0 success, 1 input error, 2 size-guard rejection, 3 verification failure.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph polynomials: independent sets, cliques, vertex covers, bipartite cuts"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "text";
  std::string indep_method = "esp";
  std::string cover_method = "esp";
  std::string cut_method = "xor";
  std::size_t max_work = kDefaultMaxWork;
  int k = 0;
  std::uint64_t seed = 1;
  int count = 200;
  int n_max = 12;
  double edge_prob = 0.3;
  std::string fault;

  const auto add_common = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input) {
      sub->add_option("--input", input, "graph file (edge list or DIMACS)")->required();
    }
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--max-work", max_work, "cap on live terms in intermediate expansions")
        ->capture_default_str();
  };

  CLI::App* indep = app.add_subcommand("indep", "independence polynomial");
  add_common(indep);
  indep->add_option("--method", indep_method, "esp or extraction")
      ->check(CLI::IsMember({"esp", "extraction"}))
      ->capture_default_str();

  CLI::App* clique = app.add_subcommand("clique", "clique polynomial (complement route)");
  add_common(clique);

  CLI::App* cover = app.add_subcommand("cover", "vertex-cover polynomial");
  add_common(cover);
  cover->add_option("--method", cover_method, "esp (reversal) or extraction")
      ->check(CLI::IsMember({"esp", "extraction"}))
      ->capture_default_str();

  CLI::App* cut = app.add_subcommand("cut", "bipartite-cut polynomial");
  add_common(cut);
  cut->add_option("--method", cut_method, "xor or laurent")
      ->check(CLI::IsMember({"xor", "laurent"}))
      ->capture_default_str();

  CLI::App* enumerate = app.add_subcommand("enumerate", "list independent sets of a given order");
  add_common(enumerate);
  enumerate->add_option("--k", k, "set order to enumerate")->required();

  CLI::App* verify = app.add_subcommand("verify", "random-graph identity sweep");
  add_common(verify, false);
  verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
  verify->add_option("--count", count, "number of random graphs")->capture_default_str();
  verify->add_option("--n-max", n_max, "largest vertex count")->capture_default_str();
  verify->add_option("--edge-prob", edge_prob, "edge probability")->capture_default_str();
  verify->add_option("--inject-fault", fault, "corrupt one route to exercise the harness")
      ->check(CLI::IsMember({"indep", "clique", "cover", "cut"}));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("graphpoly");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    const auto t0 = cli_detail::Clock::now();
    if (indep->parsed() || clique->parsed() || cover->parsed() || cut->parsed()) {
      const Graph g = load_graph(input);
      Report r;
      r.n = g.vertex_count();
      r.m = g.edge_count();
      if (indep->parsed()) {
        r.name = "independence";
        r.method = indep_method;
        r.poly = indep_method == "esp" ? independence_polynomial(g, max_work)
                                       : indep_poly_by_extraction(g, max_work);
        r.scalars["alpha"] = r.poly.degree();
        r.scalars["eta"] = r.poly.degree() + 1;
      } else if (clique->parsed()) {
        r.name = "clique";
        r.method = "esp";
        r.poly = clique_polynomial(g, max_work);
        r.scalars["gamma"] = r.poly.degree();
      } else if (cover->parsed()) {
        r.name = "cover";
        r.method = cover_method;
        r.poly = cover_method == "esp" ? vertex_cover_polynomial(g, max_work)
                                       : cover_poly_by_extraction(g, max_work);
        r.scalars["beta"] = cli_detail::smallest_nonzero_index(r.poly);
      } else {
        r.name = "cut";
        r.method = cut_method;
        r.poly = cut_method == "xor" ? cut_polynomial_xor(g) : cut_polynomial_laurent(g, max_work);
        r.scalars["expected_cut"] = cli_detail::rational_string(expected_random_cut(r.poly));
      }
      r.ms = cli_detail::elapsed_ms(t0);
      write_report(r, format, out);
      return 0;
    }
    if (enumerate->parsed()) {
      const Graph g = load_graph(input);
      const auto sets = enumerate_independent_sets(g, k, max_work);
      const long long ms = cli_detail::elapsed_ms(t0);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["k"] = k;
        j["count"] = sets.size();
        j["sets"] = sets;
        j["ms"] = ms;
        out << j.dump() << "\n";
      } else {
        for (const auto& s : sets) {
          for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
          out << "\n";
        }
      }
      return 0;
    }
    // verify
    VerifyOptions opt;
    opt.seed = seed;
    opt.count = count;
    opt.max_vertices = n_max;
    opt.edge_prob = edge_prob;
    opt.max_work = max_work;
    if (fault == "indep") opt.fault = FaultSite::indep;
    if (fault == "clique") opt.fault = FaultSite::clique;
    if (fault == "cover") opt.fault = FaultSite::cover;
    if (fault == "cut") opt.fault = FaultSite::cut;
    const VerifySummary summary = run_verification(opt);
    const long long ms = cli_detail::elapsed_ms(t0);
    if (format == "json") {
      nlohmann::ordered_json j;
      j["seed"] = seed;
      j["count"] = count;
      j["n_max"] = n_max;
      j["graphs"] = summary.graphs;
      auto props = nlohmann::ordered_json::array();
      std::map<std::string, int> failure_counts;
      for (const auto& f : summary.failures) ++failure_counts[f.property];
      for (const auto& [name, checked] : summary.checked) {
        props.push_back({{"name", name}, {"checked", checked}, {"failures", failure_counts[name]}});
      }
      j["properties"] = props;
      auto fails = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < summary.failures.size() && i < 10; ++i) {
        const VerifyFailure& f = summary.failures[i];
        fails.push_back({{"graph_index", f.graph_index},
                         {"property", f.property},
                         {"detail", f.detail},
                         {"graph", f.graph}});
      }
      j["failures"] = fails;
      j["result"] = summary.all_passed() ? "pass" : "fail";
      j["ms"] = ms;
      out << j.dump() << "\n";
    } else {
      out << "seed = " << seed << "\n";
      out << "graphs = " << summary.graphs << "\n";
      std::map<std::string, int> failure_counts;
      for (const auto& f : summary.failures) ++failure_counts[f.property];
      for (const auto& [name, checked] : summary.checked) {
        if (failure_counts[name] == 0) {
          out << "PASS " << name << " (checked " << checked << ")\n";
        } else {
          out << "FAIL " << name << " (checked " << checked << ", failures "
              << failure_counts[name] << ")\n";
        }
      }
      for (std::size_t i = 0; i < summary.failures.size() && i < 3; ++i) {
        const VerifyFailure& f = summary.failures[i];
        out << "failure: graph " << f.graph_index << ", " << f.property << ": " << f.detail
            << "\n";
        out << "offending graph for replay:\n" << f.graph;
      }
      out << "result = " << (summary.all_passed() ? "pass" : "fail") << "\n";
      out << "ms = " << ms << "\n";
    }
    return summary.all_passed() ? 0 : 3;
  } catch (const WorkLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace graphpoly::cli
