// orthospace: checks, catalogue census, classification, and lattice export
// for finite orthogonality spaces.
//
// Exit codes: 0 success / all cells match; 1 verification mismatch;
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orthospace/graph6.hpp"
#include "orthospace/io.hpp"

namespace {

using namespace orthospace;

struct InputFlags {
  std::string path, g6, edges;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  auto* a = cmd->add_option("--input", in.path, "file holding graph6 or JSON input");
  auto* b = cmd->add_option("--g6", in.g6, "inline graph6 string");
  auto* c = cmd->add_option("--edges", in.edges,
                            "inline JSON: [[i,j],...] or {\"n\":...,\"edges\"|\"cliques\":...}");
  a->excludes(b)->excludes(c);
  b->excludes(c);
}

OrthoSpace load_space(const InputFlags& in) {
  int given = !in.path.empty() + !in.g6.empty() + !in.edges.empty();
  if (given != 1)
    throw std::invalid_argument("exactly one of --input, --g6, --edges is required");
  if (!in.g6.empty()) return from_graph6(in.g6);
  if (!in.edges.empty()) {
    nlohmann::json j = nlohmann::json::parse(in.edges);
    if (j.is_object()) return space_from_json(in.edges);
    if (!j.is_array())
      throw std::invalid_argument("--edges takes a JSON array or object");
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw std::invalid_argument("--edges entries must be [i, j] integer pairs");
      int a = e[0].get<int>(), b = e[1].get<int>();
      edges.emplace_back(a, b);
      n = std::max({n, a + 1, b + 1});
    }
    if (edges.empty())
      throw std::invalid_argument(
          "cannot infer the point count from an empty edge list; pass {\"n\":...,\"edges\":[]}");
    return OrthoSpace::from_edges(n, edges);
  }
  std::ifstream f(in.path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open input file: " + in.path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return space_from_text(buf.str());
}

std::size_t lattice_cap_from_env() {
  const char* s = std::getenv("ORTHOSPACE_LATTICE_CAP");
  if (!s || !*s) return kDefaultLatticeCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0' || v == 0)
    throw std::invalid_argument("ORTHOSPACE_LATTICE_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

TableId parse_table_id(const std::string& s) {
  if (s == "I" || s == "1") return TableId::I;
  if (s == "II" || s == "2") return TableId::II;
  if (s == "III" || s == "3") return TableId::III;
  throw std::invalid_argument("table must be one of I, II, III");
}

CensusFilter::Pred parse_pred(const std::string& s) {
  if (s == "all") return CensusFilter::Pred::all;
  if (s == "l1") return CensusFilter::Pred::l1;
  if (s == "l2") return CensusFilter::Pred::l2;
  if (s == "linear") return CensusFilter::Pred::linear;
  throw std::invalid_argument("filter must be one of all, l1, l2, linear");
}

int run(int argc, char** argv) {
  CLI::App app{"finite orthogonality spaces: property checks, catalogue census, "
               "classification, closure-lattice export"};
  app.require_subcommand(1);

  std::string format = "human";

  InputFlags check_in;
  auto* cmd_check = app.add_subcommand("check", "run every predicate on one space");
  add_input_flags(cmd_check, check_in);
  cmd_check->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

  std::string table_id;
  int n_max = 9, jobs = 1;
  bool extended = false;
  auto* cmd_tables =
      app.add_subcommand("tables", "recompute a reference table and diff it");
  cmd_tables->add_option("table", table_id, "I, II or III")->required();
  cmd_tables->add_option("--n-max", n_max, "largest point count to census (default 9)");
  cmd_tables->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd_tables->add_flag("--extended", extended, "allow the n=10 row (long run)");
  cmd_tables->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

  int enum_n = 0;
  std::string filter = "all";
  bool connected_only = false;
  auto* cmd_enum =
      app.add_subcommand("enumerate", "stream one graph6 line per isomorphism class");
  cmd_enum->add_option("n", enum_n, "point count")->required();
  cmd_enum->add_option("--filter", filter)->check(CLI::IsMember({"all", "l1", "l2", "linear"}));
  cmd_enum->add_flag("--connected", connected_only, "keep only connected classes");
  cmd_enum->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

  InputFlags classify_in;
  auto* cmd_classify =
      app.add_subcommand("classify", "matching / windmill / other decomposition");
  add_input_flags(cmd_classify, classify_in);
  cmd_classify->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

  InputFlags lattice_in;
  auto* cmd_lattice =
      app.add_subcommand("lattice", "orthoclosed-set lattice with predicate summary");
  add_input_flags(cmd_lattice, lattice_in);
  cmd_lattice->add_option("--format", format)
      ->check(CLI::IsMember({"human", "json", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  if (cmd_check->parsed()) {
    PropertyReport r = full_report(load_space(check_in), lattice_cap_from_env());
    if (format == "json")
      std::cout << report_to_json(r).dump(2) << "\n";
    else
      std::cout << report_to_human(r);
    return 0;
  }

  if (cmd_tables->parsed()) {
    TableId id = parse_table_id(table_id);
    int bound = extended ? 10 : 9;
    if (n_max < 2 || n_max > bound)
      throw std::invalid_argument(
          "--n-max must be between 2 and " + std::to_string(bound) +
          (extended ? "" : " (pass --extended for 10)"));
    TableCheck check = verify_table(id, n_max, jobs);
    if (format == "json")
      std::cout << table_check_to_json(check).dump(2) << "\n";
    else if (format == "csv")
      std::cout << table_check_to_csv(check);
    else
      std::cout << table_check_to_human(check);
    return check.pass ? 0 : 1;
  }

  if (cmd_enum->parsed()) {
    if (enum_n < 1 || enum_n > kMaxEnumVertices)
      throw std::invalid_argument("n must be between 1 and " +
                                  std::to_string(kMaxEnumVertices));
    CensusFilter::Pred pred = parse_pred(filter);
    std::vector<std::string> lines;
    enumerate_spaces(enum_n, [&](const OrthoSpace& s) {
      if (connected_only && !s.is_connected()) return true;
      bool keep = true;
      switch (pred) {
        case CensusFilter::Pred::all: break;
        case CensusFilter::Pred::l1: keep = check_l1(s).holds; break;
        case CensusFilter::Pred::l2: keep = check_l2(s).holds; break;
        case CensusFilter::Pred::linear: keep = is_linear(s); break;
      }
      if (keep) lines.push_back(to_graph6(s));
      return true;
    });
    if (format == "json") {
      json out;
      out["schema"] = 1;
      out["n"] = enum_n;
      out["filter"] = filter;
      out["connected"] = connected_only;
      out["count"] = lines.size();
      out["classes"] = lines;
      std::cout << out.dump(2) << "\n";
    } else {
      for (const std::string& line : lines) std::cout << line << "\n";
    }
    return 0;
  }

  if (cmd_classify->parsed()) {
    OrthoSpace space = load_space(classify_in);
    PropertyReport r;
    r.n = space.vertex_count();
    if ((r.matching = classify_rank2(space)))
      r.classification = Classification::matching_2abphi;
    else if ((r.windmill = classify_rank3(space)))
      r.classification = Classification::windmill_3abphi;
    if (format == "json")
      std::cout << classification_to_json(r).dump(2) << "\n";
    else
      std::cout << classification_to_human(r);
    return 0;
  }

  // lattice
  OrthoSpace space = load_space(lattice_in);
  ClosureLattice lat = compute_lattice(space, lattice_cap_from_env());
  if (format == "json")
    std::cout << lattice_to_json(lat).dump(2) << "\n";
  else if (format == "dot")
    std::cout << lattice_to_dot(lat);
  else
    std::cout << lattice_summary_human(lat);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lattice_too_large& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
