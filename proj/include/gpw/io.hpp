#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpw/graph.hpp"
#include "gpw/group_spec.hpp"

namespace gpw {

/// Malformed text input (graph6, edge lists, spec files, words).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard graph6; an optional ">>graph6<<" header and trailing newline
/// are accepted. Vertices are labelled "0".."n-1".
SimpleGraph read_graph6(std::string_view text);
std::string write_graph6(const SimpleGraph& g);

// Edge-list format:
//   # comment
//   n <count> <label> <label> ...
//   e <u> <v>
// Spec files add one line per vertex:
//   o <v> <m|inf>

/// One non-comment input line split on whitespace.
using Record = std::vector<std::string>;

std::vector<Record> read_records(std::istream& in);
std::vector<Record> parse_records(std::string_view text);
/// Builds from the n/e records; other keywords are rejected unless
/// allow_other is set.
SimpleGraph graph_from_records(const std::vector<Record>& records, bool allow_other = false);
GroupSpec spec_from_records(const std::vector<Record>& records, bool allow_other = false);

SimpleGraph read_edge_list(std::istream& in);
SimpleGraph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const SimpleGraph& g, std::string_view prefix = "");
std::string edge_list_string(const SimpleGraph& g);

GroupSpec read_group_spec(std::istream& in);
GroupSpec parse_group_spec(std::string_view text);
void write_group_spec(std::ostream& out, const GroupSpec& spec, std::string_view prefix = "");

/// Reads a graph from text that is either graph6 (a single token) or the
/// edge-list format.
SimpleGraph parse_graph_auto(std::string_view text);

}  // namespace gpw
