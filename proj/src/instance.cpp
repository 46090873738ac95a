#include "scycle/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace scycle {

Graph Instance::graph() const { return Graph::from_edges(n, edges); }

VertexSet Instance::terminal_set() const { return VertexSet::of(n, terminals); }

std::uint64_t Instance::fingerprint() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_instance(*this)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

namespace {

long long parse_int(std::istringstream& fields, std::size_t line, const char* what) {
  std::string token;
  if (!(fields >> token)) throw ParseError(line, std::string("missing ") + what);
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) throw ParseError(line, std::string("bad ") + what + " '" + token + "'");
  return value;
}

void expect_end(std::istringstream& fields, std::size_t line) {
  std::string extra;
  if (fields >> extra) throw ParseError(line, "unexpected trailing token '" + extra + "'");
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_header = false;
  std::size_t header_line = 0;
  long long declared_m = 0;
  std::set<Edge> seen_edges;
  std::set<Vertex> seen_terminals;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream fields(text);
    std::string kind;
    if (!(fields >> kind) || kind == "c") continue;
    if (kind == "p") {
      if (have_header) throw ParseError(line, "duplicate header");
      std::string format;
      if (!(fields >> format) || format != "scycle") throw ParseError(line, "expected 'p scycle'");
      long long n = parse_int(fields, line, "n");
      declared_m = parse_int(fields, line, "m");
      long long k = parse_int(fields, line, "k");
      long long ell = parse_int(fields, line, "ell");
      expect_end(fields, line);
      if (n < 1) throw ParseError(line, "n must be at least 1");
      if (declared_m < 0) throw ParseError(line, "m must be non-negative");
      if (k < 1) throw ParseError(line, "k must be at least 1");
      if (ell < 1) throw ParseError(line, "ell must be at least 1");
      inst.n = static_cast<std::size_t>(n);
      inst.k = static_cast<int>(k);
      inst.ell = static_cast<int>(ell);
      have_header = true;
      header_line = line;
      continue;
    }
    if (!have_header) throw ParseError(line, "'" + kind + "' line before header");
    auto vertex = [&](const char* what) {
      long long v = parse_int(fields, line, what);
      if (v < 0 || static_cast<std::size_t>(v) >= inst.n)
        throw ParseError(line, std::string(what) + " " + std::to_string(v) + " out of range");
      return static_cast<Vertex>(v);
    };
    if (kind == "e") {
      Vertex u = vertex("endpoint");
      Vertex v = vertex("endpoint");
      expect_end(fields, line);
      if (u == v) throw ParseError(line, "self-loop");
      if (!seen_edges.insert({std::min(u, v), std::max(u, v)}).second) throw ParseError(line, "duplicate edge");
      inst.edges.emplace_back(u, v);
    } else if (kind == "t") {
      Vertex v = vertex("terminal");
      expect_end(fields, line);
      if (!seen_terminals.insert(v).second) throw ParseError(line, "duplicate terminal");
      inst.terminals.push_back(v);
    } else {
      throw ParseError(line, "unknown line type '" + kind + "'");
    }
  }
  if (!have_header) throw ParseError(line, "missing 'p scycle' header");
  if (static_cast<long long>(inst.edges.size()) != declared_m)
    throw ParseError(header_line, "header declares " + std::to_string(declared_m) + " edges, found " +
                                      std::to_string(inst.edges.size()));
  return inst;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p scycle " << inst.n << ' ' << inst.edges.size() << ' ' << inst.k << ' ' << inst.ell << '\n';
  for (auto [u, v] : inst.edges) out << "e " << u << ' ' << v << '\n';
  for (Vertex t : inst.terminals) out << "t " << t << '\n';
  return out.str();
}

}  // namespace scycle
