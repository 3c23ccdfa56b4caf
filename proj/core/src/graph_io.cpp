#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "gnns/errors.hpp"
#include "gnns/graph.hpp"

namespace gnns {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

bool is_integer(const std::string& s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

double parse_weight(const std::string& token, const std::string& source, std::size_t line) {
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), w);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(source, line, "invalid weight '" + token + "'");
  }
  if (w < 0.0) {
    throw ParseError(source, line, "negative weight " + token);
  }
  return w;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

Graph parse_edgelist(const std::string& text, std::optional<Directedness> treat_as,
                     const std::string& source) {
  struct RawEdge {
    std::string src, dst;
    double weight;
  };
  std::vector<RawEdge> raw;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == '%') continue;
    auto tokens = tokenize(line);
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(source, line_no, "expected 'src dst [weight]'");
    }
    double w = tokens.size() == 3 ? parse_weight(tokens[2], source, line_no) : 1.0;
    raw.push_back({tokens[0], tokens[1], w});
  }
  if (raw.empty()) {
    throw DataError(source + ": graph has no edges");
  }

  bool numeric = std::all_of(raw.begin(), raw.end(), [](const RawEdge& e) {
    return is_integer(e.src) && is_integer(e.dst);
  });
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const std::string& id) {
    auto [it, inserted] = index.emplace(id, labels.size());
    if (inserted) labels.push_back(id);
    return it->second;
  };
  if (numeric) {
    std::vector<std::pair<long long, std::string>> ids;
    for (const RawEdge& e : raw) {
      ids.emplace_back(std::stoll(e.src), e.src);
      ids.emplace_back(std::stoll(e.dst), e.dst);
    }
    std::sort(ids.begin(), ids.end());
    for (const auto& id : ids) {
      // "01" and "1" are distinct identifiers with the same value; keep both.
      intern(id.second);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) edges.push_back({intern(e.src), intern(e.dst), e.weight});

  std::size_t n = labels.size();
  return Graph::from_edges(n, edges, treat_as.value_or(Directedness::kUndirected),
                           std::move(labels));
}

Graph parse_pajek(const std::string& text, std::optional<Directedness> treat_as,
                  const std::string& source) {
  enum class Section { kNone, kVertices, kEdges, kArcs, kEdgesList, kArcsList };
  Section section = Section::kNone;
  std::size_t n = 0;
  bool have_vertices = false;
  std::vector<std::string> labels;
  std::vector<Edge> edges;       // from *Edges sections
  std::vector<Edge> arcs;        // from *Arcs sections
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  auto vertex = [&](const std::string& token) -> std::size_t {
    long long id = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(source, line_no, "invalid vertex id '" + token + "'");
    }
    if (id < 1 || static_cast<std::size_t>(id) > n) {
      throw ParseError(source, line_no, "vertex id " + token + " outside 1.." + std::to_string(n));
    }
    return static_cast<std::size_t>(id - 1);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '%') continue;
    if (line[first] == '*') {
      auto tokens = tokenize(line.substr(first));
      std::string head = lower(tokens[0]);
      if (head == "*vertices") {
        if (tokens.size() < 2 || !is_integer(tokens[1]) || std::stoll(tokens[1]) < 1) {
          throw ParseError(source, line_no, "expected '*Vertices N' with N >= 1");
        }
        n = static_cast<std::size_t>(std::stoll(tokens[1]));
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
        have_vertices = true;
        section = Section::kVertices;
      } else if (head == "*edges") {
        section = Section::kEdges;
      } else if (head == "*arcs") {
        section = Section::kArcs;
      } else if (head == "*edgeslist") {
        section = Section::kEdgesList;
      } else if (head == "*arcslist") {
        section = Section::kArcsList;
      } else {
        throw ParseError(source, line_no, "unsupported section '" + tokens[0] + "'");
      }
      if (section != Section::kVertices && !have_vertices) {
        throw ParseError(source, line_no, "edge section before *Vertices");
      }
      continue;
    }

    switch (section) {
      case Section::kNone:
        throw ParseError(source, line_no, "data before the first section");
      case Section::kVertices: {
        std::string rest = line.substr(first);
        auto space = rest.find_first_of(" \t");
        std::size_t v = vertex(rest.substr(0, space));
        if (space != std::string::npos) {
          auto open = rest.find('"', space);
          if (open != std::string::npos) {
            auto close = rest.find('"', open + 1);
            if (close == std::string::npos) {
              throw ParseError(source, line_no, "unterminated vertex label");
            }
            labels[v] = rest.substr(open + 1, close - open - 1);
          } else {
            auto tokens = tokenize(rest.substr(space));
            if (!tokens.empty()) labels[v] = tokens[0];
          }
        }
        break;
      }
      case Section::kEdges:
      case Section::kArcs: {
        auto tokens = tokenize(line);
        if (tokens.size() < 2) throw ParseError(source, line_no, "expected 'u v [weight]'");
        double w = 1.0;
        if (tokens.size() >= 3) w = parse_weight(tokens[2], source, line_no);
        Edge e{vertex(tokens[0]), vertex(tokens[1]), w};
        (section == Section::kEdges ? edges : arcs).push_back(e);
        break;
      }
      case Section::kEdgesList:
      case Section::kArcsList: {
        auto tokens = tokenize(line);
        std::size_t u = vertex(tokens[0]);
        for (std::size_t k = 1; k < tokens.size(); ++k) {
          Edge e{u, vertex(tokens[k]), 1.0};
          (section == Section::kEdgesList ? edges : arcs).push_back(e);
        }
        break;
      }
    }
  }
  if (!have_vertices) {
    throw ParseError(source, line_no, "missing *Vertices section");
  }
  if (edges.empty() && arcs.empty()) {
    throw DataError(source + ": graph has no edges");
  }
  // A label repeated by the file would make partition output ambiguous.
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw DataError(source + ": duplicate vertex labels");
    }
  }

  if (treat_as) {
    edges.insert(edges.end(), arcs.begin(), arcs.end());
    return Graph::from_edges(n, edges, *treat_as, std::move(labels));
  }
  if (arcs.empty()) {
    return Graph::from_edges(n, edges, Directedness::kUndirected, std::move(labels));
  }
  for (const Edge& e : edges) {
    arcs.push_back(e);
    arcs.push_back({e.target, e.source, e.weight});
  }
  return Graph::from_edges(n, arcs, Directedness::kDirected, std::move(labels));
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
  std::string key = lower(name);
  if (key == "edgelist") return GraphFormat::kEdgeList;
  if (key == "pajek") return GraphFormat::kPajek;
  throw ConfigError("unknown graph format '" + name + "' (expected edgelist or pajek)");
}

Graph parse_graph(const std::string& text, GraphFormat format,
                  std::optional<Directedness> treat_as, const std::string& source) {
  return format == GraphFormat::kEdgeList ? parse_edgelist(text, treat_as, source)
                                          : parse_pajek(text, treat_as, source);
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format,
                 std::optional<Directedness> treat_as) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("cannot open graph file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format, treat_as, path.string());
}

void write_pajek(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write " + path.string());
  }
  out << "*Vertices " << g.node_count() << '\n';
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    out << i + 1 << " \"" << g.node_labels()[i] << "\"\n";
  }
  out.precision(17);
  if (g.directed()) {
    out << "*Arcs\n";
    for (const Edge& e : g.arcs()) {
      out << e.source + 1 << ' ' << e.target + 1 << ' ' << e.weight << '\n';
    }
  } else {
    out << "*Edges\n";
    for (const Edge& e : g.arcs()) {
      if (e.source > e.target) continue;
      // A stored loop weight is twice the edge weight that produced it.
      double w = e.source == e.target ? 0.5 * e.weight : e.weight;
      out << e.source + 1 << ' ' << e.target + 1 << ' ' << w << '\n';
    }
  }
}

}  // namespace gnns
