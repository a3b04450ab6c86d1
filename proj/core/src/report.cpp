#include "smoothorb/report.hpp"

#include <iomanip>
#include <sstream>

#include "smoothorb/error.hpp"

namespace smoothorb {
namespace {

Json elements_json(BasisSet s) { return s.elements(); }

BasisSet elements_from_json(const Json& j) {
  std::vector<int> elems = j.get<std::vector<int>>();
  return BasisSet::from_elements(elems);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string projective_name(int dim) { return dim == 0 ? "point" : "P^" + std::to_string(dim); }

std::string block_list(const std::vector<std::pair<BasisSet, int>>& blocks) {
  std::string out;
  for (const auto& [elements, rank] : blocks) {
    if (!out.empty()) out += ", ";
    out += to_brace_string(elements) + " rank " + std::to_string(rank);
  }
  return out;
}

}  // namespace

MatroidAnalysis analyze(const Matroid& m) {
  return {m.n(), m.k(), dimension(m), m.basis_count(), edges(m).size(), classify(m)};
}

Json to_json(const ClassifierVerdict& verdict) {
  Json j;
  j["simple"] = verdict.simple();
  if (verdict.decomposition) {
    Json factors = Json::array();
    for (const auto& f : verdict.decomposition->factors) {
      factors.push_back({{"elements", elements_json(f.elements)}, {"rank", f.rank}, {"kind", std::string(kind_name(f.kind))}});
    }
    j["factors"] = std::move(factors);
  } else {
    j["factors"] = nullptr;
  }
  j["witness"] = verdict.witness ? elements_json(*verdict.witness) : Json(nullptr);
  return j;
}

ClassifierVerdict verdict_from_json(const Json& j) {
  try {
    ClassifierVerdict v;
    const bool simple = j.at("simple").get<bool>();
    if (simple) {
      ProductDecomposition d;
      for (const auto& f : j.at("factors")) {
        const BasisSet elements = elements_from_json(f.at("elements"));
        const int rank = f.at("rank").get<int>();
        const std::string kind = f.at("kind").get<std::string>();
        const auto expected = admissible_kind(elements.size(), rank);
        if (!expected || kind != kind_name(*expected)) fail(Errc::Parse, "factor kind does not match its rank");
        d.factors.push_back({elements, rank, *expected});
      }
      v.decomposition = std::move(d);
    } else {
      v.witness = elements_from_json(j.at("witness"));
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, std::string("verdict record: ") + e.what());
  }
}

Json to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid;
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    j["counterexample"] = {{"I", elements_json(c.I)}, {"J", elements_json(c.J)}, {"i", c.i}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const MatroidAnalysis& a) {
  return {{"n", a.n},
          {"k", a.k},
          {"dim", a.dim},
          {"vertices", a.vertex_count},
          {"edges", a.edge_count},
          {"verdict", to_json(a.verdict)}};
}

Json to_json(const VertexGraph& graph) {
  Json edges = Json::array();
  for (const auto& r : graph.roots) edges.push_back({r.plus, r.minus});
  return {{"vertex", elements_json(graph.base)}, {"edges", std::move(edges)}, {"forest", graph.is_forest()},
          {"tree", graph.is_tree()}};
}

Json to_json(const PlueckerVector& p) {
  Json minors = Json::array();
  for (const auto& m : p.minors) minors.push_back({{"rows", elements_json(m.rows)}, {"value", to_string(m.value)}});
  return {{"n", p.n}, {"k", p.k}, {"minors", std::move(minors)}};
}

Json to_json(const MomentPoint& mu) {
  Json coords = Json::array();
  for (const auto& x : mu.coords) coords.push_back(to_string(x));
  return {{"moment", std::move(coords)}};
}

Json to_json(const SmoothnessReport& report) {
  Json bases = Json::array();
  for (BasisSet b : report.support_matroid.bases()) bases.push_back(elements_json(b));
  Json j;
  j["verdict"] = report.verdict == OrbitVerdict::Smooth ? "smooth" : "singular";
  j["simple"] = report.simple;
  j["support"] = {{"n", report.support_matroid.n()}, {"k", report.support_matroid.k()}, {"bases", std::move(bases)}};
  if (report.decomposition) {
    ClassifierVerdict v{report.decomposition, std::nullopt};
    j["factors"] = to_json(v)["factors"];
    Json orbit = Json::array();
    for (const auto& f : *report.orbit_description) {
      orbit.push_back({{"elements", elements_json(f.elements)}, {"rank", f.rank}, {"space", projective_name(f.projective_dimension)}});
    }
    j["orbit"] = std::move(orbit);
  } else {
    j["factors"] = nullptr;
    j["orbit"] = nullptr;
  }
  j["witness"] = report.witness ? elements_json(*report.witness) : Json(nullptr);
  return j;
}

Json to_json(const BlockSplit& split, const ComponentDecomposition& partition) {
  auto matrix = [](const ComplexMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Json blocks = Json::array();
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    Json columns = Json::array();
    for (std::size_t c = 0; c < split.column_block.size(); ++c) {
      if (split.column_block[c] == static_cast<int>(b)) columns.push_back(c + 1);
    }
    blocks.push_back({{"elements", elements_json(partition.blocks[b].elements)},
                      {"rank", partition.blocks[b].rank},
                      {"columns", std::move(columns)}});
  }
  return {{"blocks", std::move(blocks)}, {"g", matrix(split.g)}, {"B", matrix(split.b)}};
}

Json to_json(const VerificationReport& report, bool timing) {
  Json ranks = Json::array();
  for (const auto& r : report.ranks) {
    ranks.push_back({{"n", r.n},
                     {"k", r.k},
                     {"matroids_checked", r.matroids_checked},
                     {"simple_count", r.simple_count},
                     {"cases_checked", r.cases_checked}});
  }
  Json counterexamples = Json::array();
  for (const auto& c : report.counterexamples) {
    counterexamples.push_back({{"n", c.n}, {"k", c.k}, {"family", c.family}, {"detail", c.detail}});
  }
  Json j = {{"name", report.name},
            {"n_max", report.n_max},
            {"matroids_checked", report.matroids_checked()},
            {"simple_count", report.simple_count()},
            {"cases_checked", report.cases_checked()},
            {"ranks", std::move(ranks)},
            {"counterexamples", std::move(counterexamples)}};
  if (timing) j["elapsed_ms"] = report.elapsed.count();
  return j;
}

std::string render(const ValidationReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) return dump(to_json(report));
  if (report.valid) return "valid\n";
  const auto& c = *report.counterexample;
  return "invalid: exchange fails for I = " + to_string(c.I) + ", J = " + to_string(c.J) + ", i = " +
         std::to_string(c.i) + "\n";
}

std::string render(const MatroidAnalysis& a, OutputFormat format) {
  if (format == OutputFormat::Json) return dump(to_json(a));
  std::string out = "dim " + std::to_string(a.dim) + ", " + std::to_string(a.vertex_count) + " vertices, " +
                    std::to_string(a.edge_count) + " edges, ";
  if (!a.verdict.simple()) return out + "not simple, witness " + to_string(*a.verdict.witness) + "\n";
  out += "simple, product ";
  bool first = true;
  for (const auto& f : a.verdict.decomposition->factors) {
    if (!first) out += " x ";
    out += to_brace_string(f.elements) + " rank " + std::to_string(f.rank) + " " + std::string(kind_name(f.kind));
    first = false;
  }
  return out + "\n";
}

std::string render(const VertexGraph& graph, OutputFormat format) {
  if (format == OutputFormat::Json) return dump(to_json(graph));
  std::string out = "vertex " + to_string(graph.base) + "\n";
  for (const auto& r : graph.roots) out += "edge " + std::to_string(r.plus) + " " + std::to_string(r.minus) + "\n";
  out += "edges " + std::to_string(graph.edge_count()) + ", forest " + (graph.is_forest() ? "yes" : "no") + ", tree " +
         (graph.is_tree() ? "yes" : "no") + "\n";
  return out;
}

std::string render(const PlueckerVector& p, OutputFormat format) {
  if (format == OutputFormat::Json) return dump(to_json(p));
  std::string out;
  for (const auto& m : p.minors) out += "P[" + to_string(m.rows) + "] = " + to_string(m.value) + "\n";
  return out;
}

std::string render(const MomentPoint& mu, OutputFormat format) {
  if (format == OutputFormat::Json) return dump(to_json(mu));
  std::string out = "mu = (";
  for (std::size_t i = 0; i < mu.coords.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(mu.coords[i]);
  }
  return out + ")\n";
}

std::string render(const SmoothnessReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) return dump(to_json(report));
  if (report.verdict == OrbitVerdict::Singular) {
    return "singular: moment polytope not simple, witness " + to_string(*report.witness) + "\n";
  }
  std::string product;
  std::vector<std::pair<BasisSet, int>> blocks;
  for (const auto& f : *report.orbit_description) {
    blocks.emplace_back(f.elements, f.rank);
    if (f.projective_dimension == 0) continue;
    if (!product.empty()) product += " x ";
    product += projective_name(f.projective_dimension);
  }
  if (product.empty()) product = "point";
  return "smooth: " + product + "; blocks " + block_list(blocks) + "\n";
}

std::string render(const BlockSplit& split, const ComponentDecomposition& partition, OutputFormat format) {
  if (format == OutputFormat::Json) return dump(to_json(split, partition));
  std::string out = "blocks ";
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    if (b > 0) out += ", ";
    out += to_brace_string(partition.blocks[b].elements) + " rank " + std::to_string(partition.blocks[b].rank) + " -> ";
    std::string columns;
    for (std::size_t c = 0; c < split.column_block.size(); ++c) {
      if (split.column_block[c] != static_cast<int>(b)) continue;
      if (!columns.empty()) columns += ' ';
      columns += std::to_string(c + 1);
    }
    out += columns.empty() ? "no columns" : "columns " + columns;
  }
  out += "\n";
  auto matrix = [&](const char* name, const ComplexMatrix& m) {
    out += name;
    out += "\n";
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        if (c > 0) out += ' ';
        out += to_string(m(r, c));
      }
      out += "\n";
    }
  };
  matrix("g", split.g);
  matrix("B", split.b);
  return out;
}

std::string render(const VerificationReport& report, OutputFormat format, bool timing) {
  if (format == OutputFormat::Json) return dump(to_json(report, timing));
  std::ostringstream out;
  out << "verify " << report.name << " (n <= " << report.n_max << ")\n";
  out << std::setw(3) << "n" << std::setw(3) << "k" << std::setw(10) << "matroids" << std::setw(8) << "simple"
      << std::setw(10) << "cases" << "\n";
  for (const auto& r : report.ranks) {
    out << std::setw(3) << r.n << std::setw(3) << r.k << std::setw(10) << r.matroids_checked << std::setw(8)
        << r.simple_count << std::setw(10) << r.cases_checked << "\n";
  }
  for (const auto& c : report.counterexamples) out << "counterexample: " << c.detail << "\n";
  out << "checked " << report.matroids_checked() << " matroids, " << report.simple_count() << " simple, "
      << report.cases_checked() << " cases, counterexamples " << report.counterexamples.size() << "\n";
  if (timing) out << "elapsed " << report.elapsed.count() << " ms\n";
  return out.str();
}

}  // namespace smoothorb
