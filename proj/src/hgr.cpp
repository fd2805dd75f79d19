#include "hyperaco/hgr.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperaco/errors.hpp"

namespace hyperaco {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    tokens.push_back(tok);
  }
  return tokens;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      continue;
    }
    return c == '#';
  }
  return true;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  return value;
}

double parse_weight(const std::string& tok, int line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected numeric edge weight, got '" + tok + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line_no, "edge weight must be finite");
  }
  return value;
}

}  // namespace

Hypergraph read_hgr(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<Hyperedge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) {
      continue;
    }
    std::vector<std::string> tokens = tokenize(line);
    if (n < 0) {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "header must be 'n m'");
      }
      n = parse_int(tokens[0], line_no, "vertex count");
      m = parse_int(tokens[1], line_no, "edge count");
      if (n < 0 || m < 0) {
        throw ParseError(line_no, "vertex and edge counts must be nonnegative");
      }
      edges.reserve(static_cast<size_t>(m));
      continue;
    }
    if (static_cast<int>(edges.size()) == m) {
      throw ParseError(line_no, "content after the last declared edge");
    }
    Hyperedge e;
    e.weight = parse_weight(tokens[0], line_no);
    for (size_t i = 1; i < tokens.size(); ++i) {
      e.vertices.push_back(parse_int(tokens[i], line_no, "vertex id"));
    }
    edges.push_back(std::move(e));
  }
  if (n < 0) {
    throw ParseError(line_no + 1, "missing 'n m' header");
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(line_no + 1,
                     "declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph read_hgr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path + "' for reading");
  }
  return read_hgr(in);
}

std::string format_decimal(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) {
    return "0";
  }
  return std::string(buf, ptr);
}

void write_hgr(std::ostream& out, const Hypergraph& h) {
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const Hyperedge& e : h.edges()) {
    out << format_decimal(e.weight);
    for (VertexId v : e.vertices) {
      out << ' ' << v;
    }
    out << '\n';
  }
}

void write_hgr_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open '" + path + "' for writing");
  }
  write_hgr(out, h);
}

std::string to_hgr_string(const Hypergraph& h) {
  std::ostringstream out;
  write_hgr(out, h);
  return out.str();
}

}  // namespace hyperaco
