#pragma once

#include <hydrosym/symexpr.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hydrosym {

// Graded vector field on (super)space: one coefficient per base coordinate
// (independent variables and zero-jet fields), plus declared parity.
struct VectorField {
  std::string name;
  Parity parity = Parity::Even;
  std::map<int, SymExpr> coeffs;  // coord id -> coefficient

  bool is_zero() const;
  VectorField operator+(const VectorField& o) const;
  VectorField operator-() const;
  VectorField operator-(const VectorField& o) const { return *this + (-o); }
  std::string str() const;
};

VectorField scale(const SymExpr& c, const VectorField& v);

// Derivation action on a point function of the base coordinates.
SymExpr apply_vector_field(const VectorField& v, const SymExpr& f);

// Parity consistency: an even field carries even coefficients on even
// coordinates and odd coefficients on odd coordinates (and conversely).
bool parity_consistent(const VectorField& v);

// Graded bracket [A,B] = A B - (-1)^{|A||B|} B A on coordinate functions.
VectorField bracket(const VectorField& A, const VectorField& B);

struct StructureTable {
  std::vector<std::string> names;
  // entries[i][j] = coefficients of [g_i, g_j] in the generator basis
  std::vector<std::vector<std::vector<Rational>>> entries;
};

struct NonClosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expands every pairwise bracket in the span of the generators; throws
// NonClosureError naming the offending pair when a bracket leaves the span.
StructureTable structure_table(const std::vector<VectorField>& gens);

// Expansion of a single field over the generator basis (exact solve).
std::optional<std::vector<Rational>> expand_in_basis(
    const VectorField& v, const std::vector<VectorField>& gens);

// Sum_{n>=0} eps^n/n! ad_Y^n(X); stops when the series terminates by
// nilpotency, throws when max_order is exceeded without allow_truncation.
VectorField adjoint_orbit(const VectorField& Y, const VectorField& X,
                          const Rational& eps, int max_order = 12,
                          bool allow_truncation = false);

// Derived series length until termination; empty when the algebra is not
// solvable within the iteration bound.
std::optional<int> solvable_depth(const std::vector<VectorField>& gens);

// Checks [span, ideal] subset span(ideal).
bool is_ideal(const std::vector<VectorField>& algebra,
              const std::vector<VectorField>& ideal);

}  // namespace hydrosym
