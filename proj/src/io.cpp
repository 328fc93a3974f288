#include "skbounds/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>

#include "skbounds/errors.hpp"

namespace skbounds {

namespace {

std::string join_errors(const std::string& source, const std::vector<LineError>& errors) {
  std::ostringstream os;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (i) os << '\n';
    os << source << ':' << errors[i].line << ": " << errors[i].reason;
  }
  return os.str();
}

std::string strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<long> parse_int(const std::string& token) {
  if (token.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    const long value = std::stol(token, &used);
    if (used != token.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

ParseError::ParseError(std::string source, std::vector<LineError> errors)
    : std::runtime_error(join_errors(source, errors)), source_(std::move(source)), errors_(std::move(errors)) {}

WeightedHypergraph parse_hypergraph(std::istream& in, const std::string& source) {
  std::vector<LineError> errors;
  std::optional<WeightedHypergraph> hg;
  int header_line = 0;
  bool any_edge = false;

  std::string raw;
  for (int line_no = 1; std::getline(in, raw); ++line_no) {
    const std::string line = strip(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto fail = [&](std::string reason) { errors.push_back({line_no, std::move(reason)}); };

    if (line.rfind("edge", 0) == 0 && (line.size() == 4 || line[4] == ' ' || line[4] == '\t')) {
      if (!hg) {
        if (header_line == 0) fail("edge before the 'm = <int>' header");
        continue;
      }
      const auto colon = line.find(':');
      if (colon == std::string::npos) {
        fail("expected 'edge v1 ... vk : weight'");
        continue;
      }
      std::istringstream vertex_stream(line.substr(4, colon - 4));
      std::vector<int> vertices;
      std::set<int> seen;
      bool ok = true;
      for (std::string token; vertex_stream >> token;) {
        const auto v = parse_int(token);
        if (!v) {
          fail("vertex '" + token + "' is not an integer");
          ok = false;
          break;
        }
        if (*v < 1 || *v > hg->vertex_count()) {
          fail("vertex " + token + " outside 1.." + std::to_string(hg->vertex_count()));
          ok = false;
          break;
        }
        if (!seen.insert(static_cast<int>(*v)).second) {
          fail("vertex " + token + " repeated in one edge");
          ok = false;
          break;
        }
        vertices.push_back(static_cast<int>(*v));
      }
      if (!ok) continue;
      if (vertices.empty()) {
        fail("edge lists no vertices");
        continue;
      }
      const std::string weight_text = strip(std::string_view(line).substr(colon + 1));
      Rational weight;
      try {
        weight = Rational::parse(weight_text);
      } catch (const std::exception& e) {
        fail("bad weight: " + std::string(e.what()));
        continue;
      }
      if (weight.sign() <= 0) {
        fail("weight " + weight_text + " is not positive");
        continue;
      }
      hg->add_edge(mask_of(vertices), weight);
      any_edge = true;
      continue;
    }

    if (line.front() == 'm') {
      const auto eq = line.find('=');
      if (eq == std::string::npos || strip(std::string_view(line).substr(1, eq - 1)) != "") {
        fail("expected 'm = <int>'");
        continue;
      }
      if (header_line != 0) {
        fail("duplicate header (first at line " + std::to_string(header_line) + ")");
        continue;
      }
      header_line = line_no;
      const auto m = parse_int(strip(std::string_view(line).substr(eq + 1)));
      if (!m) {
        fail("m is not an integer");
        continue;
      }
      if (*m < 2) {
        fail("m = " + std::to_string(*m) + " but at least 2 terminals are required");
        continue;
      }
      if (*m > kMaxVertices) {
        throw CapExceeded(source + ":" + std::to_string(line_no) + ": m = " + std::to_string(*m) +
                          " exceeds the vertex cap " + std::to_string(kMaxVertices));
      }
      hg.emplace(static_cast<int>(*m));
      continue;
    }

    fail("unrecognized line '" + line + "'");
  }

  if (header_line == 0) errors.push_back({0, "missing 'm = <int>' header"});
  else if (hg && !any_edge) errors.push_back({0, "no edges"});
  if (!errors.empty()) throw ParseError(source, std::move(errors));
  return std::move(*hg);
}

WeightedHypergraph load_hypergraph(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return parse_hypergraph(stdin_stream, "<stdin>");
  std::ifstream file(path);
  if (!file) throw ParseError(path, {{0, "cannot open file"}});
  return parse_hypergraph(file, path);
}

std::string format_hypergraph(const WeightedHypergraph& hg) {
  std::ostringstream os;
  os << "m = " << hg.vertex_count() << '\n';
  for (const auto& [edge, w] : hg.edges()) {
    os << "edge";
    for (int v : vertices_of(edge)) os << ' ' << v;
    os << " : " << w << '\n';
  }
  return os.str();
}

}  // namespace skbounds
