#include "lspan/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lspan {
namespace {

// Yields the whitespace-separated tokens of non-comment lines, tracking line numbers.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next_line(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      std::size_t p = line.find_first_not_of(" \t\r");
      if (p == std::string::npos || line[p] == '#') continue;
      tokens.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      return true;
    }
    return false;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

long long parse_int(const std::string& s, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, "expected integer, got '" + s + "'");
  return v;
}

double parse_real(const std::string& s, int line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, "expected number, got '" + s + "'");
  return v;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open " + path);
  return f;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  TokenReader r(in);
  std::vector<std::string> tok;
  if (!r.next_line(tok)) throw ParseError(r.line(), "missing header");
  if (tok.size() != 2) throw ParseError(r.line(), "header must be 'n m'");
  long long n = parse_int(tok[0], r.line());
  long long m = parse_int(tok[1], r.line());
  if (n < 0 || m < 0) throw ParseError(r.line(), "negative count in header");
  WeightedGraph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!r.next_line(tok)) throw ParseError(r.line(), "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (tok.size() != 3) throw ParseError(r.line(), "edge line must be 'u v w'");
    long long u = parse_int(tok[0], r.line());
    long long v = parse_int(tok[1], r.line());
    double w = parse_real(tok[2], r.line());
    try {
      if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("endpoint out of range");
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
    } catch (const InvalidInput& e) {
      throw ParseError(r.line(), e.what());
    }
  }
  if (r.next_line(tok)) throw ParseError(r.line(), "trailing data after last edge");
  return g;
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream f = open_or_throw(path);
  return read_graph(f);
}

PointSet read_points(std::istream& in) {
  TokenReader r(in);
  std::vector<std::string> tok;
  if (!r.next_line(tok)) throw ParseError(r.line(), "missing header");
  if (tok.size() != 2) throw ParseError(r.line(), "header must be 'n d'");
  long long n = parse_int(tok[0], r.line());
  long long d = parse_int(tok[1], r.line());
  if (n < 0 || d < 1) throw ParseError(r.line(), "invalid header counts");
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(n * d));
  for (long long i = 0; i < n; ++i) {
    if (!r.next_line(tok)) throw ParseError(r.line(), "expected " + std::to_string(n) + " points, found " + std::to_string(i));
    if (static_cast<long long>(tok.size()) != d) throw ParseError(r.line(), "expected " + std::to_string(d) + " coordinates");
    for (const std::string& t : tok) coords.push_back(parse_real(t, r.line()));
  }
  if (r.next_line(tok)) throw ParseError(r.line(), "trailing data after last point");
  return PointSet(static_cast<int>(d), std::move(coords));
}

PointSet read_points_file(const std::string& path) {
  std::ifstream f = open_or_throw(path);
  return read_points(f);
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
}

void write_edges(std::ostream& out, const WeightedGraph& g, const std::vector<EdgeId>& ids) {
  out << g.n() << ' ' << ids.size() << '\n';
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
  }
}

void write_points(std::ostream& out, const PointSet& p) {
  out << p.n() << ' ' << p.d() << '\n';
  for (int i = 0; i < p.n(); ++i) {
    for (int k = 0; k < p.d(); ++k) out << (k ? " " : "") << format_double(p.point(i)[k]);
    out << '\n';
  }
}

}  // namespace lspan
