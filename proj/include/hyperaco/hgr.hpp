#pragma once

#include <iosfwd>
#include <string>

#include "hyperaco/hypergraph.hpp"

namespace hyperaco {

/// HGR text format:
///   line 1: `n m`
///   then m lines: `w v1 v2 ... vk` (weight first, 1-based vertex ids)
/// Lines whose first non-space character is `#` are ignored, as are blank
/// lines. Syntax errors throw ParseError with the 1-based line number.
/// Parsing does not validate the hypergraph; call validate() after.
Hypergraph read_hgr(std::istream& in);
Hypergraph read_hgr_file(const std::string& path);

/// Emits edges in id order, vertex ids ascending, weights in shortest
/// round-trip decimal. Byte-stable for a given instance.
void write_hgr(std::ostream& out, const Hypergraph& h);
void write_hgr_file(const std::string& path, const Hypergraph& h);
std::string to_hgr_string(const Hypergraph& h);

/// Shortest round-trip decimal for a double ("1", "2.5", "1e-09").
std::string format_decimal(double value);

}  // namespace hyperaco
