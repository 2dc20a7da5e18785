#pragma once

#include <hydrosym/liealg.hpp>

#include <map>
#include <string>
#include <vector>

namespace hydrosym {

// One-dimensional subalgebra representative: a linear combination of algebra
// generators with even or odd (Grassmann) coefficients.
struct SubalgebraRep {
  std::string label;    // L1..L13, SL1..SL28
  std::string algebra;  // classical | susy
  std::vector<std::pair<std::string, std::string>> combo;  // (coeff, generator)
  std::string constraints;

  VectorField materialize(const std::map<std::string, Rational>& bindings = {}) const;
};

// Invariants and change of variable for one subalgebra (Tables II, V, VI),
// together with the expected reduced equations (Tables III, VII, VIII).
struct AnsatzRow {
  std::string label;
  std::string algebra;
  std::string sigma;                                   // in x, t
  std::vector<std::string> invariants;                 // besides sigma
  std::map<std::string, std::string> fields;           // field -> substitution
  std::map<std::string, std::vector<std::string>> field_args;
  int x_elim_power = 0;
  std::string x_elim;                                  // x^power -> replacement
  std::map<std::string, std::string> sigma_grad;       // optional override
  std::vector<std::string> reduced;                    // expected residuals
  std::vector<std::map<std::string, std::string>> samples;  // binding sets
  std::string erratum;
  bool not_applicable = false;
};

struct ConstraintSpec {
  std::string type;  // pair_zero | odd_pair_zero | product_value
  std::vector<std::string> args;
  std::string value;  // product_value only
};

struct RewriteSpec {
  std::string atom;  // e.g. F_sigma, F_sigmasigma, cos(F)^2 handled by power
  int power = 1;
  std::string value;
};

struct SolutionRecord {
  std::string id;
  std::string algebra;
  std::string subalgebra;
  std::map<std::string, std::string> fields;
  std::string tier;  // symbolic | numeric | modulo-ODE
  std::string sigma;
  std::map<std::string, std::vector<std::string>> field_args;
  int x_elim_power = 0;
  std::string x_elim;
  std::map<std::string, std::string> sigma_grad;
  std::vector<ConstraintSpec> constraints;
  std::vector<RewriteSpec> rewrites;
  std::vector<std::string> domain;  // expressions required > 0 when sampling
  std::map<std::string, std::string> numeric_fixed;
  std::vector<std::map<std::string, std::string>> samples;
  std::string erratum;
  std::string special;  // nonempty for dedicated verification paths
};

class Catalog {
 public:
  static const Catalog& instance();

  const std::vector<VectorField>& generators(const std::string& algebra) const;
  const VectorField& generator(const std::string& algebra, const std::string& name) const;
  // Reference supercommutation tables as printed (Tables I and IV).
  const StructureTable& reference_table(const std::string& algebra) const;

  const std::vector<SubalgebraRep>& subalgebras() const { return subalgebras_; }
  const SubalgebraRep& subalgebra(const std::string& label) const;

  const std::vector<AnsatzRow>& ansatz_rows() const { return ansatz_rows_; }
  const AnsatzRow& ansatz(const std::string& label) const;

  const std::vector<SolutionRecord>& solutions() const { return solutions_; }
  const SolutionRecord& solution(const std::string& id) const;

  // Raw embedded JSON documents (algebra, ansatz, solutions).
  static const char* algebra_json();
  static const char* ansatz_json();
  static const char* solutions_json();

  std::string emit_json() const;      // merged catalog document
  std::string emit_markdown() const;  // human-readable tables

 private:
  Catalog();
  std::vector<VectorField> classical_, susy_;
  StructureTable ref_classical_, ref_susy_;
  std::vector<SubalgebraRep> subalgebras_;
  std::vector<AnsatzRow> ansatz_rows_;
  std::vector<SolutionRecord> solutions_;
};

}  // namespace hydrosym
