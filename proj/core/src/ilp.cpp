#include "geodetic/ilp.hpp"

#include <sstream>

#include "geodetic/geodesy.hpp"

namespace geodetic {
namespace {

std::string x_name(Vertex k) { return "x" + std::to_string(k); }
std::string y_name(Vertex i, Vertex j) {
  return "y" + std::to_string(i) + "_" + std::to_string(j);
}

// LP readers cap line length; long rows are wrapped after this many terms.
constexpr std::size_t kTermsPerLine = 8;

void write_terms(std::ostream& out, const std::vector<IlpModel::Term>& terms) {
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    if (t > 0 && t % kTermsPerLine == 0) out << "\n   ";
    if (t == 0) {
      if (term.coefficient < 0) out << " -";
    } else {
      out << (term.coefficient < 0 ? " - " : " + ");
    }
    const int magnitude = term.coefficient < 0 ? -term.coefficient : term.coefficient;
    if (t == 0) out << ' ';
    if (magnitude != 1) out << magnitude << ' ';
    out << term.variable;
  }
}

}  // namespace

IlpModel build_ilp_model(const Graph& g) {
  require_connected(g);
  const auto n = static_cast<Vertex>(g.num_vertices());
  const PkTable pk = pk_table(all_pairs_distances(g));

  IlpModel model;
  model.n = n;
  for (Vertex k = 0; k < n; ++k) {
    model.variables.push_back(x_name(k));
    model.objective.push_back(x_name(k));
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) model.variables.push_back(y_name(i, j));
  }

  using Sense = IlpModel::Sense;
  for (Vertex k = 0; k < n; ++k) {
    IlpModel::Constraint row{"cover_" + std::to_string(k), {{1, x_name(k)}},
                             Sense::GreaterEqual, 1};
    for (const auto& [i, j] : pk.pairs_through(k)) row.terms.push_back({1, y_name(i, j)});
    model.constraints.push_back(std::move(row));
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const std::string tag = std::to_string(i) + "_" + std::to_string(j);
      const std::string y = y_name(i, j);
      model.constraints.push_back(
          {"link_" + tag + "_i", {{1, y}, {-1, x_name(i)}}, Sense::LessEqual, 0});
      model.constraints.push_back(
          {"link_" + tag + "_j", {{1, y}, {-1, x_name(j)}}, Sense::LessEqual, 0});
      model.constraints.push_back({"link_" + tag + "_both",
                                   {{1, x_name(i)}, {1, x_name(j)}, {-1, y}},
                                   Sense::LessEqual,
                                   1});
    }
  }
  return model;
}

std::string write_lp(const IlpModel& model, std::string_view problem_name) {
  std::ostringstream out;
  out << "\\ Problem name: " << problem_name << "\n\n";
  out << "Minimize\n obj:";
  std::vector<IlpModel::Term> objective;
  objective.reserve(model.objective.size());
  for (const auto& v : model.objective) objective.push_back({1, v});
  write_terms(out, objective);
  out << "\nSubject To\n";
  for (const auto& row : model.constraints) {
    out << ' ' << row.name << ':';
    write_terms(out, row.terms);
    out << (row.sense == IlpModel::Sense::LessEqual ? " <= " : " >= ") << row.rhs
        << '\n';
  }
  out << "Binary\n";
  for (const auto& v : model.variables) out << ' ' << v << '\n';
  out << "End\n";
  return out.str();
}

std::string export_ilp(const Graph& g, std::string_view problem_name) {
  return write_lp(build_ilp_model(g), problem_name);
}

}  // namespace geodetic
