#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "skbounds/hypergraph.hpp"

namespace skbounds {

struct LineError {
  int line = 0;
  std::string reason;
};

/// Carries every malformed line found in a document, not just the first.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string source, std::vector<LineError> errors);

  const std::string& source() const { return source_; }
  const std::vector<LineError>& errors() const { return errors_; }

private:
  std::string source_;
  std::vector<LineError> errors_;
};

/// Reads the line format
///
///     # comment
///     m = 4
///     edge 1 2 : 2
///     edge 1 4 : 1/2
///
/// Duplicate edges merge by summing weights. Throws ParseError, or
/// CapExceeded when m is above kMaxVertices.
WeightedHypergraph parse_hypergraph(std::istream& in, const std::string& source = "<input>");

/// Reads a file, or standard input when `path` is "-".
WeightedHypergraph load_hypergraph(const std::string& path, std::istream& stdin_stream);

/// Inverse of parse_hypergraph, edges in ascending mask order.
std::string format_hypergraph(const WeightedHypergraph& hg);

}  // namespace skbounds
