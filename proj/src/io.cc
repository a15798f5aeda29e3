#include "vecdom/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "vecdom/error.h"

namespace vecdom {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

int64_t ParseInt(std::string_view token, int line_no) {
  int64_t value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && token[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorCode::kMalformed, "line " + std::to_string(line_no) +
                                           ": expected an integer, got '" +
                                           std::string(token) + "'");
  }
  return value;
}

Vertex ParseVertexId(std::string_view token, int n, int line_no) {
  const int64_t id = ParseInt(token, line_no);
  if (id < 1 || id > n) {
    throw Error(ErrorCode::kOutOfRange,
                "line " + std::to_string(line_no) + ": vertex " +
                    std::to_string(id) + " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(id - 1);
}

[[noreturn]] void Malformed(int line_no, const std::string& what) {
  throw Error(ErrorCode::kMalformed,
              "line " + std::to_string(line_no) + ": " + what);
}

bool IsComment(const std::vector<std::string_view>& tok) {
  return tok.empty() || tok[0] == "c" || tok[0][0] == '#';
}

struct DemandCollector {
  explicit DemandCollector(int n) : k(n, 0), seen(n, false) {}
  void Set(Vertex v, int64_t value, int line_no) {
    if (value < 0) {
      throw Error(ErrorCode::kNegativeDemand,
                  "line " + std::to_string(line_no) + ": negative demand");
    }
    if (seen[v]) {
      throw Error(ErrorCode::kDuplicateVertex,
                  "line " + std::to_string(line_no) + ": vertex " +
                      std::to_string(v + 1) + " listed twice");
    }
    if (value > INT32_MAX) Malformed(line_no, "demand too large");
    seen[v] = true;
    k[v] = static_cast<int>(value);
  }
  RequirementVector k;
  std::vector<bool> seen;
};

// Graph parser shared by ParseGraph and ParseInstance. `extra` handles
// non-graph lines and returns false if it does not recognise them.
template <typename Extra>
Graph ParseGraphLines(std::string_view text, Extra&& extra) {
  std::optional<int64_t> n;
  int64_t m = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    const auto tok = Tokens(line);
    if (IsComment(tok)) continue;
    if (tok[0] == "p") {
      if (n) Malformed(line_no, "second header");
      if (tok.size() != 4 || tok[1] != "edge") {
        Malformed(line_no, "header must be 'p edge <n> <m>'");
      }
      n = ParseInt(tok[2], line_no);
      m = ParseInt(tok[3], line_no);
      if (*n < 0 || m < 0 || *n > INT32_MAX) Malformed(line_no, "bad header");
    } else if (tok[0] == "e") {
      if (!n) Malformed(line_no, "edge before header");
      if (tok.size() != 3) Malformed(line_no, "edge must be 'e <u> <v>'");
      const int64_t u = ParseInt(tok[1], line_no);
      const int64_t v = ParseInt(tok[2], line_no);
      if (u < 1 || v < 1 || u > *n || v > *n) {
        throw Error(ErrorCode::kOutOfRange,
                    "line " + std::to_string(line_no) + ": edge endpoint " +
                        "outside 1.." + std::to_string(*n));
      }
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else if (!extra(tok, n, line_no)) {
      Malformed(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!n) throw Error(ErrorCode::kMalformed, "missing 'p edge' header");
  if (static_cast<int64_t>(edges.size()) != m) {
    throw Error(ErrorCode::kCountMismatch,
                "header declares " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()));
  }
  return Graph::Build(static_cast<int>(*n), edges);
}

}  // namespace

Graph ParseGraph(std::string_view text) {
  return ParseGraphLines(
      text, [](const auto&, const std::optional<int64_t>&, int) { return false; });
}

std::string WriteGraph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.Edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

RequirementVector ParseDemands(std::string_view text, const Graph& g) {
  DemandCollector demands(g.n());
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    const auto tok = Tokens(line);
    if (IsComment(tok)) continue;
    if (tok.size() != 2) Malformed(line_no, "expected '<v> <k>'");
    const Vertex v = ParseVertexId(tok[0], g.n(), line_no);
    demands.Set(v, ParseInt(tok[1], line_no), line_no);
  }
  return demands.k;
}

std::string WriteDemands(const RequirementVector& k) {
  std::ostringstream out;
  for (size_t v = 0; v < k.size(); ++v) out << v + 1 << ' ' << k[v] << '\n';
  return out.str();
}

Instance ParseInstance(std::string_view text) {
  Instance inst;
  bool have_header = false;
  std::vector<std::pair<int, std::vector<std::string_view>>> demand_lines;
  inst.graph = ParseGraphLines(
      text, [&](const std::vector<std::string_view>& tok,
                const std::optional<int64_t>&, int line_no) {
        if (tok[0] == "v") {
          if (have_header) Malformed(line_no, "second variant line");
          if (tok.size() != 3) Malformed(line_no, "expected 'v <nbhd> <scope>'");
          if (tok[1] == "open") {
            inst.neighborhood = Neighborhood::kOpen;
          } else if (tok[1] == "closed") {
            inst.neighborhood = Neighborhood::kClosed;
          } else {
            Malformed(line_no, "neighborhood must be open or closed");
          }
          if (tok[2] == "partial") {
            inst.scope = Scope::kPartial;
          } else if (tok[2] == "total") {
            inst.scope = Scope::kTotal;
          } else {
            Malformed(line_no, "scope must be partial or total");
          }
          have_header = true;
          return true;
        }
        if (tok[0] == "k") {
          if (tok.size() != 3) Malformed(line_no, "expected 'k <v> <demand>'");
          demand_lines.emplace_back(line_no, tok);
          return true;
        }
        return false;
      });
  DemandCollector demands(inst.graph.n());
  for (const auto& [line_no, tok] : demand_lines) {
    const Vertex v = ParseVertexId(tok[1], inst.graph.n(), line_no);
    demands.Set(v, ParseInt(tok[2], line_no), line_no);
  }
  inst.demands = std::move(demands.k);
  return inst;
}

std::string WriteInstance(const Instance& inst) {
  std::ostringstream out;
  out << "v " << ToString(inst.neighborhood) << ' ' << ToString(inst.scope)
      << '\n';
  out << WriteGraph(inst.graph);
  for (size_t v = 0; v < inst.demands.size(); ++v) {
    out << "k " << v + 1 << ' ' << inst.demands[v] << '\n';
  }
  return out.str();
}

VertexSet ParseVertexSet(std::string_view text, int n) {
  VertexSet set;
  std::vector<bool> seen(n, false);
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    const auto tok = Tokens(line);
    if (IsComment(tok)) continue;
    for (std::string_view t : tok) {
      const Vertex v = ParseVertexId(t, n, line_no);
      if (seen[v]) {
        throw Error(ErrorCode::kDuplicateVertex,
                    "vertex " + std::to_string(v + 1) + " listed twice");
      }
      seen[v] = true;
      set.push_back(v);
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformed, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kMalformed, "cannot write " + path);
  out << text;
}

nlohmann::ordered_json ResultRecord(const Solution& solution, bool feasible,
                                    double elapsed_seconds) {
  nlohmann::ordered_json record;
  record["size"] = solution.size();
  auto vertices = nlohmann::ordered_json::array();
  for (Vertex v : solution.vertices) vertices.push_back(v + 1);
  record["vertices"] = std::move(vertices);
  record["feasible"] = feasible;
  record["quality"] = std::string(ToString(solution.quality));
  if (solution.bound) record["bound"] = *solution.bound;
  record["solverPath"] = solution.solver_path;
  record["elapsed"] = elapsed_seconds;
  return record;
}

}  // namespace vecdom
