#pragma once

#include <hydrosym/liealg.hpp>
#include <hydrosym/pdesystem.hpp>

namespace hydrosym {

// First prolongation: coefficients for the first-order jet directions.
struct ProlongedField {
  VectorField base;
  std::map<int, SymExpr> jet_coeffs;  // jet atom id -> coefficient
};

ProlongedField prolong(const VectorField& v, const PDESystem& sys);

// Action of the prolonged field on a first-order expression.
SymExpr apply_prolonged(const ProlongedField& pv, const SymExpr& e);

struct InvarianceReport {
  std::string generator;
  bool pass = false;
  std::vector<std::string> residuals;  // on-shell residual per equation
  std::string witness;                 // first nonzero residual
};

InvarianceReport check_invariance(const VectorField& v, const PDESystem& sys);

struct SuiteReport {
  std::string system;
  std::vector<InvarianceReport> items;
  bool pass = true;
};

SuiteReport verify_generator_suite(const PDESystem& sys,
                                   const std::vector<VectorField>& gens);

}  // namespace hydrosym
