#include "netflippa/edgelist.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netflippa {

namespace {

[[noreturn]] void fail(long line_number, const std::string& what) {
  throw std::runtime_error("edge list parse error at line " +
                           std::to_string(line_number) + ": " + what);
}

// "# n=<N>" with optional whitespace around the tokens.
bool parse_header(const std::string& line, long line_number, long* n_out) {
  std::string stripped;
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
  if (stripped.rfind("#n=", 0) != 0) return false;
  const std::string digits = stripped.substr(3);
  if (digits.empty()) fail(line_number, "missing node count in header");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(line_number, "invalid node count '" + digits + "'");
  *n_out = std::stol(digits);
  return true;
}

}  // namespace

Matrix parse_edge_list(const std::string& text) {
  struct Edge {
    long u, v, line;
  };
  std::istringstream input(text);
  std::string line;
  long line_number = 0;
  long declared_n = -1;
  long max_id = -1;
  std::vector<Edge> edges;

  while (std::getline(input, line)) {
    ++line_number;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == '#') {
      long n = 0;
      if (parse_header(line, line_number, &n) && declared_n < 0) declared_n = n;
      continue;
    }
    std::istringstream fields(line);
    long u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v)) fail(line_number, "expected two integer node ids");
    if (fields >> extra) fail(line_number, "unexpected trailing token '" + extra + "'");
    if (u < 0 || v < 0) fail(line_number, "negative node id");
    max_id = std::max({max_id, u, v});
    edges.push_back({u, v, line_number});
  }

  const long n = declared_n >= 0 ? declared_n : max_id + 1;
  Matrix a = Matrix::Zero(n, n);
  for (const Edge& edge : edges) {
    // Range-check against the final node count; the header may appear after
    // some edges.
    if (edge.u >= n || edge.v >= n)
      fail(edge.line, "node id " + std::to_string(std::max(edge.u, edge.v)) +
                          " outside [0, " + std::to_string(n) + ")");
    a(edge.u, edge.v) = 1.0;
    a(edge.v, edge.u) = 1.0;
  }
  return a;
}

Matrix read_edge_list(const std::string& path) {
  std::ifstream input(path);
  if (!input)
    throw std::runtime_error("cannot open edge list file: " + path);
  std::ostringstream buffer;
  buffer << input.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string format_edge_list(const Matrix& a) {
  const auto n = a.rows();
  std::ostringstream out;
  out << "# n=" << n << "\n";
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      if (a(i, j) != 0.0) out << i << " " << j << "\n";
  return out.str();
}

void write_edge_list(const std::string& path, const Matrix& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open output file: " + path);
  out << format_edge_list(a);
  if (!out) throw std::runtime_error("failed writing edge list to " + path);
}

}  // namespace netflippa
