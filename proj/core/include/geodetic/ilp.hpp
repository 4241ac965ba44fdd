#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

/// 0-1 model of the geodetic number:
///
///   min  sum_k x_k
///   s.t. x_k + sum_{(i,j) in P_k} y_ij >= 1     for every vertex k
///        y_ij - x_i <= 0                          for every pair i < j
///        y_ij - x_j <= 0
///        x_i + x_j - y_ij <= 1
///        x, y binary
///
/// y_ij linearizes x_i * x_j; the three pair rows are its McCormick
/// envelope.
struct IlpModel {
  enum class Sense { LessEqual, GreaterEqual };

  struct Term {
    int coefficient;
    std::string variable;
  };

  struct Constraint {
    std::string name;
    std::vector<Term> terms;
    Sense sense;
    int rhs;
  };

  std::size_t n = 0;
  /// x0..x{n-1} followed by y{i}_{j} for i < j in lexicographic order.
  std::vector<std::string> variables;
  /// Objective terms, all with coefficient 1.
  std::vector<std::string> objective;
  /// Coverage rows (k ascending) then McCormick rows (pairs lexicographic).
  std::vector<Constraint> constraints;
};

IlpModel build_ilp_model(const Graph& g);

/// Renders a model in CPLEX LP text format (Minimize / Subject To / Binary /
/// End). Output depends only on the model, byte for byte.
std::string write_lp(const IlpModel& model, std::string_view problem_name = "geodetic");

/// build_ilp_model + write_lp. g must be connected.
std::string export_ilp(const Graph& g, std::string_view problem_name = "geodetic");

}  // namespace geodetic
