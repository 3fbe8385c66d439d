#ifndef ORTHOSPACE_IO_HPP
#define ORTHOSPACE_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "orthospace/enumerate.hpp"
#include "orthospace/lattice.hpp"
#include "orthospace/properties.hpp"
#include "orthospace/space.hpp"

namespace orthospace {

// insertion-ordered so emitted field order is stable across versions
using json = nlohmann::ordered_json;

/// Accepts {"n": int, "edges": [[i,j],...]} or {"n": int, "cliques": [[...],...]}.
OrthoSpace space_from_json(const std::string& text);

/// Sniffs the input kind: a body starting with '{' parses as JSON, anything
/// else as a graph6 line (surrounding whitespace ignored).
OrthoSpace space_from_text(const std::string& text);

json witness_to_json(const Witness& w);
json report_to_json(const PropertyReport& r);
std::string report_to_human(const PropertyReport& r);

json classification_to_json(const PropertyReport& r);
std::string classification_to_human(const PropertyReport& r);

/// {"elements": [...], "covers": [[i,j],...], "ortho": [...]} plus the
/// predicate summary fields.
json lattice_to_json(const ClosureLattice& lat);
std::string lattice_summary_human(const ClosureLattice& lat);

/// n,total,filtered,connected_total,connected_filtered
std::string census_csv(const std::vector<TableRow>& rows);
json census_json(const std::vector<TableRow>& rows);

json table_check_to_json(const TableCheck& check);
std::string table_check_to_csv(const TableCheck& check);
std::string table_check_to_human(const TableCheck& check);

}  // namespace orthospace

#endif  // ORTHOSPACE_IO_HPP
