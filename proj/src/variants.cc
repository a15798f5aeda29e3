#include "vecdom/variants.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "vecdom/error.h"

namespace vecdom {
namespace {

enum class ParamKind { kNone, kAlpha, kK, kDemands };

struct CatalogueRow {
  Neighborhood neighborhood;
  Scope scope;
  Inequality inequality;
  ParamKind param;
  // Fixed threshold for rows that carry no parameter.
  Threshold fixed;
};

constexpr auto kOpen = Neighborhood::kOpen;
constexpr auto kClosed = Neighborhood::kClosed;
constexpr auto kTotal = Scope::kTotal;
constexpr auto kPartial = Scope::kPartial;
constexpr auto kWeak = Inequality::kWeak;
constexpr auto kStrict = Inequality::kStrict;

const std::map<std::string, CatalogueRow>& Catalogue() {
  static const auto* catalogue = new std::map<std::string, CatalogueRow>{
      {"alpha-domination",
       {kOpen, kPartial, kWeak, ParamKind::kAlpha, UniformK{}}},
      {"alpha-rate-domination",
       {kClosed, kTotal, kWeak, ParamKind::kAlpha, UniformK{}}},
      {"domination", {kClosed, kTotal, kWeak, ParamKind::kNone, UniformK{1}}},
      {"k-domination", {kOpen, kPartial, kWeak, ParamKind::kK, UniformK{}}},
      {"k-tuple-domination",
       {kClosed, kTotal, kWeak, ParamKind::kK, UniformK{}}},
      {"k-tuple-total-domination",
       {kOpen, kTotal, kWeak, ParamKind::kK, UniformK{}}},
      {"monopoly",
       {kClosed, kTotal, kWeak, ParamKind::kNone, Fraction{Rational(1, 2)}}},
      {"multiple-domination",
       {kClosed, kTotal, kWeak, ParamKind::kDemands, UniformK{}}},
      {"partial-monopoly",
       {kOpen, kPartial, kStrict, ParamKind::kNone,
        Fraction{Rational(1, 2)}}},
      {"positive-influence-domination",
       {kOpen, kTotal, kWeak, ParamKind::kNone, Fraction{Rational(1, 2)}}},
      {"strict-alpha-domination",
       {kOpen, kPartial, kStrict, ParamKind::kAlpha, UniformK{}}},
      {"strict-total-alpha-domination",
       {kOpen, kTotal, kStrict, ParamKind::kAlpha, UniformK{}}},
      {"total-alpha-domination",
       {kOpen, kTotal, kWeak, ParamKind::kAlpha, UniformK{}}},
      {"total-domination",
       {kOpen, kTotal, kWeak, ParamKind::kNone, UniformK{1}}},
      {"total-vector-domination",
       {kOpen, kTotal, kWeak, ParamKind::kDemands, UniformK{}}},
      {"vector-domination",
       {kOpen, kPartial, kWeak, ParamKind::kDemands, UniformK{}}},
      // k_v = d(v) is the fraction alpha = 1; VertexCoverDemands gives the
      // literal per-vertex form.
      {"vertex-cover",
       {kOpen, kPartial, kWeak, ParamKind::kNone, Fraction{Rational(1)}}},
  };
  return *catalogue;
}

std::string Normalize(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == ' ' || c == '_') {
      out.push_back('-');
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  const std::string_view greek_alpha = "\xce\xb1";  // UTF-8 for α
  for (size_t pos; (pos = out.find(greek_alpha)) != std::string::npos;) {
    out.replace(pos, greek_alpha.size(), "alpha");
  }
  if (out == "vector") return "vector-domination";
  if (out == "total" || out == "total-vector") return "total-vector-domination";
  if (out == "multiple") return "multiple-domination";
  return out;
}

int NeighborhoodSize(const Graph& g, Vertex v, Neighborhood neighborhood) {
  return g.degree(v) + (neighborhood == Neighborhood::kClosed ? 1 : 0);
}

}  // namespace

void VariantSpec::Validate() const {
  if (const auto* fraction = std::get_if<Fraction>(&threshold)) {
    if (fraction->alpha <= Rational(0) || fraction->alpha > Rational(1)) {
      throw Error(ErrorCode::kAlphaOutOfRange,
                  "alpha must lie in (0, 1], got " +
                      fraction->alpha.ToString());
    }
    return;
  }
  if (inequality == Inequality::kStrict) {
    throw Error(ErrorCode::kInvalidVariant,
                "strict inequality requires a fractional threshold");
  }
  if (const auto* uniform = std::get_if<UniformK>(&threshold)) {
    if (uniform->k < 0) {
      throw Error(ErrorCode::kNegativeDemand, "uniform k must be >= 0");
    }
  }
}

int FractionDemand(const Rational& alpha, int neighborhood_size,
                   Inequality inequality) {
  const Rational bound = alpha * Rational(neighborhood_size);
  if (inequality == Inequality::kWeak) return static_cast<int>(bound.Ceil());
  return static_cast<int>(bound.Floor()) + 1;
}

Instance Compile(const Graph& g, const VariantSpec& spec) {
  spec.Validate();
  Instance inst;
  inst.graph = g;
  inst.neighborhood = spec.neighborhood;
  inst.scope = spec.scope;
  inst.demands.resize(g.n());
  if (const auto* uniform = std::get_if<UniformK>(&spec.threshold)) {
    std::fill(inst.demands.begin(), inst.demands.end(), uniform->k);
  } else if (const auto* per_vertex = std::get_if<PerVertex>(&spec.threshold)) {
    if (static_cast<int>(per_vertex->demands.size()) != g.n()) {
      throw Error(ErrorCode::kSizeMismatch,
                  "demand vector has " +
                      std::to_string(per_vertex->demands.size()) +
                      " entries for " + std::to_string(g.n()) + " vertices");
    }
    for (int k : per_vertex->demands) {
      if (k < 0) throw Error(ErrorCode::kNegativeDemand, "negative demand");
    }
    inst.demands = per_vertex->demands;
  } else {
    const Rational& alpha = std::get<Fraction>(spec.threshold).alpha;
    for (Vertex v = 0; v < g.n(); ++v) {
      inst.demands[v] = FractionDemand(
          alpha, NeighborhoodSize(g, v, spec.neighborhood), spec.inequality);
    }
  }
  return inst;
}

VariantSpec NamedVariant(std::string_view name, const VariantParams& params) {
  const std::string key = Normalize(name);
  const auto& catalogue = Catalogue();
  auto it = catalogue.find(key);
  if (it == catalogue.end()) {
    throw Error(ErrorCode::kUnknownVariant,
                "unknown variant '" + std::string(name) + "'");
  }
  const CatalogueRow& row = it->second;
  VariantSpec spec;
  spec.neighborhood = row.neighborhood;
  spec.scope = row.scope;
  spec.inequality = row.inequality;
  switch (row.param) {
    case ParamKind::kNone:
      spec.threshold = row.fixed;
      break;
    case ParamKind::kAlpha:
      if (!params.alpha) {
        throw Error(ErrorCode::kMissingParam, key + " requires alpha");
      }
      spec.threshold = Fraction{*params.alpha};
      break;
    case ParamKind::kK:
      if (!params.k) throw Error(ErrorCode::kMissingParam, key + " requires k");
      spec.threshold = UniformK{*params.k};
      break;
    case ParamKind::kDemands:
      if (!params.demands) {
        throw Error(ErrorCode::kMissingParam, key + " requires demands");
      }
      spec.threshold = PerVertex{*params.demands};
      break;
  }
  spec.Validate();
  return spec;
}

std::vector<std::string> VariantNames() {
  std::vector<std::string> names;
  for (const auto& [name, row] : Catalogue()) names.push_back(name);
  return names;
}

RequirementVector VertexCoverDemands(const Graph& g) {
  RequirementVector demands(g.n());
  for (Vertex v = 0; v < g.n(); ++v) demands[v] = g.degree(v);
  return demands;
}

std::vector<Diagnostic> ValidateInstance(const Instance& inst) {
  std::vector<Diagnostic> diagnostics;
  for (Vertex v = 0; v < inst.n(); ++v) {
    const int d = inst.graph.degree(v);
    Diagnostic diag;
    diag.vertex = v;
    diag.demand = inst.demands[v];
    if (inst.scope == Scope::kPartial) {
      diag.kind = Diagnostic::Kind::kForcedVertex;
      diag.limit = d;
    } else {
      diag.kind = Diagnostic::Kind::kLocallyInfeasible;
      diag.limit = NeighborhoodSize(inst.graph, v, inst.neighborhood);
    }
    if (diag.demand > diag.limit) diagnostics.push_back(diag);
  }
  return diagnostics;
}

Instance AsPartialOpen(const Instance& inst) {
  if (inst.scope != Scope::kPartial) {
    throw Error(ErrorCode::kWrongVariant, "expected a partial-scope instance");
  }
  Instance open = inst;
  open.neighborhood = Neighborhood::kOpen;
  return open;
}

std::string_view ToString(Neighborhood n) {
  return n == Neighborhood::kOpen ? "open" : "closed";
}

std::string_view ToString(Scope s) {
  return s == Scope::kTotal ? "total" : "partial";
}

}  // namespace vecdom
