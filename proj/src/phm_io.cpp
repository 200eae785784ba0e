#include "polyharm/phm_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <tuple>
#include <sstream>
#include <vector>

#include "polyharm/errors.hpp"

namespace phm {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view s, int line, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw SyntaxError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

Scalar parse_number(std::string_view s, int line) {
  try {
    return parse_scalar(s);
  } catch (const SyntaxError& e) {
    throw SyntaxError(line, e.what());
  }
}

std::string coefficient_fields(const Coefficient& c) {
  if (c.exact()) return c.re().get_str() + " " + c.im().get_str();
  return format_decimal(c.value().real()) + " " + format_decimal(c.value().imag());
}

}  // namespace

PolyharmonicMap parse_map(std::string_view text) {
  int p = 0;
  int line_no = 0;
  CoefficientTable a, b;
  std::set<std::tuple<char, int, int>> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto fields = split_ws(line);
    if (fields.empty() || fields[0][0] == '#') continue;

    if (fields[0] == "p") {
      if (p != 0) throw SyntaxError(line_no, "duplicate header");
      if (fields.size() != 2) throw SyntaxError(line_no, "expected 'p <int>'");
      p = parse_int(fields[1], line_no, "layer count");
      if (p < 1) throw SyntaxError(line_no, "p must be >= 1");
      continue;
    }
    if (fields[0] != "a" && fields[0] != "b")
      throw SyntaxError(line_no, "unknown directive '" + std::string(fields[0]) + "'");
    if (p == 0) throw SyntaxError(line_no, "coefficient before 'p' header");
    if (fields.size() != 5) throw SyntaxError(line_no, "expected '<a|b> <n> <k> <re> <im>'");

    const char letter = fields[0][0];
    const int n = parse_int(fields[1], line_no, "degree");
    const int k = parse_int(fields[2], line_no, "layer");
    if (n < 1) throw SyntaxError(line_no, "degree must be >= 1");
    if (k < 1 || k > p) throw SyntaxError(line_no, "layer must lie in [1, p]");
    if (!seen.insert({letter, n, k}).second)
      throw SyntaxError(line_no, std::string("duplicate coefficient ") + letter + " " +
                                     std::to_string(n) + " " + std::to_string(k));
    Coefficient c(parse_number(fields[3], line_no), parse_number(fields[4], line_no));
    (letter == 'a' ? a : b)[{n, k}] = c;
  }
  if (p == 0) throw SyntaxError(0, "missing 'p' header");
  if (!seen.contains({'a', 1, 1})) throw InvalidMap("missing mandatory line 'a 1 1 1 0'");
  return PolyharmonicMap(p, std::move(a), std::move(b));
}

PolyharmonicMap read_map_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_map(ss.str());
}

std::string serialize_map(const PolyharmonicMap& f) {
  std::ostringstream os;
  os << "p " << f.p() << '\n';
  for (const auto& [slot, c] : f.a_table())
    os << "a " << slot.n << ' ' << slot.k << ' ' << coefficient_fields(c) << '\n';
  for (const auto& [slot, c] : f.b_table())
    os << "b " << slot.n << ' ' << slot.k << ' ' << coefficient_fields(c) << '\n';
  return os.str();
}

void write_map_file(const std::string& path, const PolyharmonicMap& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize_map(f);
  if (!out) throw Error("write failed: " + path);
}

}  // namespace phm
