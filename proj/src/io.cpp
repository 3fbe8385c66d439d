#include "orthospace/io.hpp"

#include <sstream>

#include "orthospace/graph6.hpp"

namespace orthospace {

namespace {

json set_to_json(VertexSet s) {
  json a = json::array();
  for (int v : s) a.push_back(v);
  return a;
}

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

const char* kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::l1_fail: return "l1";
    case WitnessKind::l2_fail: return "l2";
    case WitnessKind::irredundancy_fail: return "irredundancy";
    case WitnessKind::strong_irredundancy_fail: return "strong_irredundancy";
    case WitnessKind::dacey_fail: return "dacey";
    default: return "difference_singleton";
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pair_suffix(const PropertyCheck& c) {
  if (c.holds || !c.witness) return "";
  return " (e=" + std::to_string(c.witness->e) + ", f=" + std::to_string(c.witness->f) + ")";
}

void matching_fields(json& out, const MatchingStructure& m) {
  out["a"] = set_to_json(m.a_side);
  out["b"] = set_to_json(m.b_side);
  json phi = json::array();
  for (auto [a, b] : m.phi) phi.push_back(json::array({a, b}));
  out["phi"] = phi;
}

std::string matching_lines(const MatchingStructure& m, const std::string& indent) {
  std::ostringstream os;
  os << indent << "A = " << set_to_string(m.a_side) << "\n";
  os << indent << "B = " << set_to_string(m.b_side) << "\n";
  os << indent << "φ: ";
  bool first = true;
  for (auto [a, b] : m.phi) {
    if (!first) os << ", ";
    os << a << " ↦ " << b;
    first = false;
  }
  os << "\n";
  return os.str();
}

}  // namespace

OrthoSpace space_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("input JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("input JSON needs an integer \"n\"");
  int n = j["n"].get<int>();
  bool has_edges = j.contains("edges");
  bool has_cliques = j.contains("cliques");
  if (has_edges == has_cliques)
    throw std::invalid_argument("input JSON needs exactly one of \"edges\" or \"cliques\"");
  if (has_edges) {
    if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw std::invalid_argument("\"edges\" entries must be [i, j] integer pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return OrthoSpace::from_edges(n, edges);
  }
  if (!j["cliques"].is_array()) throw std::invalid_argument("\"cliques\" must be an array");
  std::vector<std::vector<int>> family;
  for (const auto& c : j["cliques"]) {
    if (!c.is_array()) throw std::invalid_argument("\"cliques\" entries must be arrays");
    std::vector<int> members;
    for (const auto& v : c) {
      if (!v.is_number_integer())
        throw std::invalid_argument("\"cliques\" entries must hold integers");
      members.push_back(v.get<int>());
    }
    family.push_back(std::move(members));
  }
  return OrthoSpace::from_maximal_cliques(n, family).space;
}

OrthoSpace space_from_text(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  std::size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw std::invalid_argument("empty input");
  std::string body = text.substr(b, e - b + 1);
  if (body.front() == '{') return space_from_json(body);
  // graph6 payloads are single lines
  if (std::size_t nl = body.find_first_of("\r\n"); nl != std::string::npos)
    body.resize(nl);
  return from_graph6(body);
}

json witness_to_json(const Witness& w) {
  json out;
  out["kind"] = kind_name(w.kind);
  switch (w.kind) {
    case WitnessKind::dacey_fail:
      out["closed_set"] = set_to_json(w.set_a);
      out["orthogonal_subset"] = set_to_json(w.set_b);
      break;
    case WitnessKind::difference_singleton:
      out["clique_a"] = set_to_json(w.set_a);
      out["clique_b"] = set_to_json(w.set_b);
      break;
    default:
      out["e"] = w.e;
      out["f"] = w.f;
  }
  return out;
}

json report_to_json(const PropertyReport& r) {
  json out;
  out["schema"] = 1;
  out["n"] = r.n;
  out["rank"] = r.rank;
  out["connected"] = r.connected;
  if (!r.diameter)
    out["diameter"] = nullptr;
  else if (r.diameter->is_infinite())
    out["diameter"] = "infinite";
  else
    out["diameter"] = r.diameter->value();
  out["l1"] = r.l1.holds;
  out["l2"] = r.l2.holds;
  out["linear"] = r.linear;
  out["irredundant"] = r.irredundant.holds;
  out["strongly_irredundant"] = r.strongly_irredundant.holds;
  out["irreducible"] = r.irreducible;
  out["dacey"] = r.dacey ? json(*r.dacey) : json(nullptr);
  out["lattice_overflow"] = r.lattice_overflow;
  out["mo_index"] = r.mo_index ? json(*r.mo_index) : json(nullptr);
  switch (r.classification) {
    case Classification::matching_2abphi: out["classification"] = "matching"; break;
    case Classification::windmill_3abphi: out["classification"] = "windmill"; break;
    default: out["classification"] = "other";
  }
  if (r.matching) {
    json m;
    matching_fields(m, *r.matching);
    out["matching"] = m;
  }
  if (r.windmill) {
    json w;
    w["hub"] = r.windmill->hub;
    matching_fields(w, r.windmill->matching);
    out["windmill"] = w;
  }
  json ws = json::array();
  for (const Witness& w : r.witnesses) ws.push_back(witness_to_json(w));
  out["witnesses"] = ws;
  return out;
}

std::string report_to_human(const PropertyReport& r) {
  std::ostringstream os;
  os << "points: " << r.n << "\n";
  os << "rank: " << r.rank << "\n";
  os << "connected: " << yes_no(r.connected) << "\n";
  os << "diameter: ";
  if (!r.diameter)
    os << "-";
  else if (r.diameter->is_infinite())
    os << "infinite";
  else
    os << r.diameter->value();
  os << "\n";
  os << "L1: " << yes_no(r.l1.holds) << pair_suffix(r.l1) << "\n";
  os << "L2: " << yes_no(r.l2.holds) << pair_suffix(r.l2) << "\n";
  os << "linear: " << yes_no(r.linear) << "\n";
  os << "irredundant: " << yes_no(r.irredundant.holds) << pair_suffix(r.irredundant) << "\n";
  os << "strongly irredundant: " << yes_no(r.strongly_irredundant.holds)
     << pair_suffix(r.strongly_irredundant) << "\n";
  os << "irreducible: " << yes_no(r.irreducible) << "\n";
  os << "Dacey: ";
  if (!r.dacey)
    os << "unknown (lattice cap hit)";
  else if (*r.dacey)
    os << "yes";
  else
    os << "no (A=" << set_to_string(r.dacey_witness->set_a)
       << ", D=" << set_to_string(r.dacey_witness->set_b) << ")";
  os << "\n";
  os << "MO-index: ";
  if (r.mo_index)
    os << *r.mo_index;
  else
    os << "-";
  os << "\n";
  os << "classification: ";
  switch (r.classification) {
    case Classification::matching_2abphi: os << "MATCHING_2ABφ"; break;
    case Classification::windmill_3abphi: os << "WINDMILL_3ABφ"; break;
    default: os << "OTHER";
  }
  os << "\n";
  return os.str();
}

json classification_to_json(const PropertyReport& r) {
  json out;
  out["schema"] = 1;
  switch (r.classification) {
    case Classification::matching_2abphi: {
      out["classification"] = "matching";
      matching_fields(out, *r.matching);
      break;
    }
    case Classification::windmill_3abphi: {
      out["classification"] = "windmill";
      out["hub"] = r.windmill->hub;
      matching_fields(out, r.windmill->matching);
      break;
    }
    default:
      out["classification"] = "other";
  }
  return out;
}

std::string classification_to_human(const PropertyReport& r) {
  switch (r.classification) {
    case Classification::matching_2abphi:
      return "MATCHING_2ABφ\n" + matching_lines(*r.matching, "  ");
    case Classification::windmill_3abphi:
      return "WINDMILL_3ABφ\n  hub = " + std::to_string(r.windmill->hub) + "\n" +
             matching_lines(r.windmill->matching, "  ");
    default:
      return "OTHER\n";
  }
}

json lattice_to_json(const ClosureLattice& lat) {
  json out;
  out["schema"] = 1;
  json els = json::array();
  for (VertexSet e : lat.elements) els.push_back(set_to_json(e));
  out["elements"] = els;
  json cov = json::array();
  for (auto [i, j] : lat.covers()) cov.push_back(json::array({i, j}));
  out["covers"] = cov;
  out["ortho"] = lat.ortho;
  OrthoLatticeCheck ol = is_ortholattice(lat);
  out["ortholattice"] = ol.holds;
  out["orthomodular"] = ol.holds ? json(is_orthomodular(lat).holds) : json(nullptr);
  out["modular"] = is_modular(lat).holds;
  out["atomistic"] = is_atomistic(lat);
  out["length"] = lattice_length(lat);
  auto mo = match_MO(lat);
  out["mo_index"] = mo ? json(*mo) : json(nullptr);
  return out;
}

std::string lattice_summary_human(const ClosureLattice& lat) {
  std::ostringstream os;
  os << "elements: " << lat.size() << "\n";
  OrthoLatticeCheck ol = is_ortholattice(lat);
  os << "ortholattice: " << yes_no(ol.holds);
  if (!ol.holds) os << " (" << ol.violation << ")";
  os << "\n";
  os << "orthomodular: " << (ol.holds ? yes_no(is_orthomodular(lat).holds) : "-") << "\n";
  os << "modular: " << yes_no(is_modular(lat).holds) << "\n";
  os << "atomistic: " << yes_no(is_atomistic(lat)) << "\n";
  os << "length: " << lattice_length(lat) << "\n";
  auto mo = match_MO(lat);
  os << "MO-index: ";
  if (mo)
    os << *mo;
  else
    os << "-";
  os << "\n";
  return os.str();
}

std::string census_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,total,filtered,connected_total,connected_filtered\n";
  for (const TableRow& r : rows) {
    out += std::to_string(r.n);
    for (std::uint64_t c : r.cells) out += "," + std::to_string(c);
    out += "\n";
  }
  return out;
}

json census_json(const std::vector<TableRow>& rows) {
  json out;
  out["schema"] = 1;
  json jr = json::array();
  for (const TableRow& r : rows) {
    json row;
    row["n"] = r.n;
    row["total"] = r.cells[0];
    row["filtered"] = r.cells[1];
    row["connected_total"] = r.cells[2];
    row["connected_filtered"] = r.cells[3];
    jr.push_back(row);
  }
  out["rows"] = jr;
  return out;
}

namespace {

const char* table_label(TableId id) {
  switch (id) {
    case TableId::I: return "I";
    case TableId::II: return "II";
    default: return "III";
  }
}

}  // namespace

json table_check_to_json(const TableCheck& check) {
  json out;
  out["schema"] = 1;
  out["table"] = table_label(check.id);
  out["pass"] = check.pass;
  json rows = json::array();
  for (std::size_t i = 0; i < check.computed.size(); ++i) {
    json row;
    row["n"] = check.computed[i].n;
    row["computed"] = check.computed[i].cells;
    row["expected"] = check.expected[i].cells;
    rows.push_back(row);
  }
  out["rows"] = rows;
  out["first_mismatch"] = check.first_mismatch;
  return out;
}

std::string table_check_to_csv(const TableCheck& check) {
  return census_csv(check.computed);
}

std::string table_check_to_human(const TableCheck& check) {
  std::ostringstream os;
  os << "table " << table_label(check.id) << "\n";
  os << "n\ttotal\tfiltered\tconn_total\tconn_filtered\n";
  for (std::size_t i = 0; i < check.computed.size(); ++i) {
    const TableRow& got = check.computed[i];
    os << got.n;
    for (std::size_t c = 0; c < 4; ++c) {
      os << "\t" << got.cells[c];
      if (got.cells[c] != check.expected[i].cells[c])
        os << " (expected " << check.expected[i].cells[c] << ")";
    }
    os << "\n";
  }
  os << (check.pass ? "PASS" : "FAIL: " + check.first_mismatch) << "\n";
  return os.str();
}

}  // namespace orthospace
