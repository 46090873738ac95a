#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "scycle/graph.hpp"

namespace scycle {

/// Line format:
///   c <comment>                 (ignored)
///   p scycle <n> <m> <k> <ell>  (exactly once, before any e/t line)
///   e <u> <v>                   (0-based, m lines, no duplicates or loops)
///   t <v>                       (terminal)
struct Instance {
  std::size_t n = 0;
  int k = 1;
  int ell = 3;
  std::vector<Edge> edges;
  std::vector<Vertex> terminals;

  Graph graph() const;
  VertexSet terminal_set() const;
  /// 64-bit FNV-1a over the serialized form; ties reports to instances.
  std::uint64_t fingerprint() const;

  bool operator==(const Instance&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Throws ParseError with the offending line number.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

/// Header, edges in stored order, then terminals in stored order.
std::string serialize_instance(const Instance& inst);

}  // namespace scycle
