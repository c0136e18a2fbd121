#pragma once

#include <stdexcept>
#include <string>

#include "gctsp/clustered_graph.hpp"

namespace gctsp {

/// Parse failure with the 1-based line the problem was found on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Line-oriented instance text:
///   gctsp 1
///   <n> <m> <scale> <known_optimum or ?>
///   clusters <c_0> ... <c_{n-1}>
///   e <u> <v> <w>        one line per finite edge, u < v
/// Unlisted pairs are INFINITE; lines starting with '#' are comments.
ClusteredGraph parse_instance(const std::string& text);

/// Canonical serialization: no comments, edges sorted by (u, v).
/// write_instance(parse_instance(t)) == t for canonical t, and
/// parse_instance(write_instance(g)) == g always.
std::string write_instance(const ClusteredGraph& g);

ClusteredGraph load_instance_file(const std::string& path);
void save_instance_file(const ClusteredGraph& g, const std::string& path);

}  // namespace gctsp
