#pragma once

#include <hydrosym/grassmann.hpp>
#include <hydrosym/rational.hpp>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hydrosym {

struct TierError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Coordinate registry
// ---------------------------------------------------------------------------

enum class CoordKind { IndepEven, IndepOdd, FieldEven, FieldOdd, ConstEven };

struct CoordInfo {
  std::string name;
  CoordKind kind;
};

class CoordRegistry {
 public:
  static CoordRegistry& instance();
  int register_coord(const std::string& name, CoordKind kind);
  int lookup(const std::string& name) const;  // -1 when absent
  const CoordInfo& info(int id) const;
  int size() const;

 private:
  CoordRegistry() = default;
  mutable std::mutex mu_;
  std::vector<CoordInfo> coords_;
  std::map<std::string, int> ids_;
};

// Registers the coordinates and odd generators used across the catalog.
// Idempotent; called by the catalog loader and by tests.
void init_standard_symbols();

// ---------------------------------------------------------------------------
// Atoms
// ---------------------------------------------------------------------------

enum class AtomClass { Indep, Const, Jet, Func };
enum class FuncKind { Exp, Ln, Sin, Cos, Tan, Arctan, Pow };

class SymExpr;

struct JetSpec {
  int field = -1;            // coord id of a Field* coordinate
  std::vector<int> didx;     // sorted multiset of IndepEven coord ids
  bool dtheta = false;       // at most one theta-derivative

  auto operator<=>(const JetSpec&) const = default;
};

struct AtomRec {
  AtomClass cls;
  int coord = -1;  // Indep / Const
  JetSpec jet;     // Jet
  FuncKind fkind = FuncKind::Exp;
  std::shared_ptr<const SymExpr> farg;  // Func argument (canonical)
  bool odd = false;
  std::string sort_key;  // canonical printed form, fixed at intern time
};

class AtomTable {
 public:
  static AtomTable& instance();
  int indep_atom(int coord);
  int const_atom(int coord);
  int jet_atom(const JetSpec& spec);
  int func_atom(FuncKind kind, const SymExpr& arg);
  const AtomRec& rec(int id) const;
  // Canonical structural order: class rank, then sort key.
  bool less(int a, int b) const;
  std::string name(int id) const;

 private:
  AtomTable() = default;
  int intern(AtomRec rec, const std::string& dedup_key);
  mutable std::mutex mu_;
  std::vector<AtomRec> atoms_;
  std::map<std::string, int> index_;
};

// Convenience atom constructors by name (symbols must be registered).
int atom_of_coord(const std::string& name);              // Indep or Const
int atom_of_field(const std::string& field,
                  const std::vector<std::string>& didx = {});  // jet atom

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

struct Term {
  GKey gkey;                                      // sorted generator ids
  std::vector<std::pair<int, Rational>> even;     // (atom, exponent), sorted
  std::vector<int> odd;                           // sorted odd atoms, distinct
};

bool term_less(const Term& a, const Term& b);
struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return term_less(a, b); }
};

// ---------------------------------------------------------------------------
// Differentiation context
// ---------------------------------------------------------------------------

// Chain-rule data for reductions: which independents each field depends on
// (fields absent from the map depend on all IndepEven coordinates except
// sigma), and the gradient of the symmetry variable sigma.
struct DiffContext {
  std::map<int, std::vector<int>> field_args;
  std::map<int, SymExpr> sigma_gradient;  // indep coord id -> d(sigma)/d coord
  bool has_sigma_gradient(int v) const { return sigma_gradient.count(v) > 0; }
};

// ---------------------------------------------------------------------------
// SymExpr
// ---------------------------------------------------------------------------

class SymExpr {
 public:
  using TermMap = std::map<Term, Rational, TermLess>;

  SymExpr() = default;  // zero

  static SymExpr constant(const Rational& q);
  static SymExpr atom(int atom_id);
  static SymExpr atom_pow(int atom_id, const Rational& exponent);
  static SymExpr generator(int gen_id);
  static SymExpr func(FuncKind kind, const SymExpr& arg);  // exp/ln/trig
  // base^exponent for arbitrary base; folds single-term bases where exact.
  static SymExpr pow(const SymExpr& base, const Rational& exponent);

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  SymExpr operator+(const SymExpr& o) const;
  SymExpr operator-(const SymExpr& o) const;
  SymExpr operator-() const;
  SymExpr operator*(const SymExpr& o) const;
  SymExpr& operator+=(const SymExpr& o);
  SymExpr pow_int(long long n) const;

  Parity parity() const;
  bool is_rational_polynomial() const;  // no Func atoms, integer exponents
  bool has_func_atoms() const;

  // Canonical text form; parse(str()) reproduces the expression exactly.
  std::string str() const;

  SymExpr total_derivative(int indep_coord, const DiffContext& ctx = {}) const;
  // Graded left partial with respect to an atom (even or odd).
  SymExpr partial(int atom_id) const;

  // Simultaneous substitution atom -> value. Parity is enforced by default:
  // an odd atom requires a homogeneous odd value. Catalog verification may
  // relax this; the published solutions mix odd constants into bosonic
  // fields, which is still well-defined in the graded algebra.
  SymExpr substitute(const std::map<int, SymExpr>& map,
                     bool enforce_parity = true) const;
  // Replace whole fields: every jet atom of `field` is replaced by the
  // appropriate total derivative of the value.
  SymExpr substitute_fields(const std::map<int, SymExpr>& field_values,
                            const DiffContext& ctx = {},
                            bool enforce_parity = true) const;
  SymExpr substitute_generators(const std::map<int, ExactGrassmann>& map) const;

  // Constraint helpers for catalog records.
  SymExpr drop_generator_pair(int g1, int g2) const;
  SymExpr drop_odd_atom_pair(int a1, int a2) const;
  // Rewrites gfirst*gsecond -> value (an even expression) inside every
  // Grassmann monomial containing both generators.
  SymExpr rewrite_generator_product(int gfirst, int gsecond,
                                    const SymExpr& value) const;

  // Accumulate a raw term (normalizes: merges exponents, expands integer
  // powers of compound bases, folds exp powers).
  void add_term(Term t, const Rational& coeff);

  static SymExpr one() { return constant(Rational(1)); }

 private:
  TermMap terms_;
};

inline SymExpr operator*(const Rational& q, const SymExpr& e) {
  return SymExpr::constant(q) * e;
}

// ---------------------------------------------------------------------------
// Zero testing
// ---------------------------------------------------------------------------

struct Cleared {
  SymExpr expr;
  std::vector<std::string> factors;  // multiplied-in denominators, printed
};

// Multiplies through by compound-base denominators (negative powers of
// pow/ln/trig atoms) and expands; the cleared factors are assumed nonzero on
// the verification domain and recorded for audit.
Cleared clear_denominators(const SymExpr& e);

struct ZeroResult {
  bool zero = false;
  std::string witness;                  // first surviving term / failing point
  std::vector<std::string> cleared_factors;
};

// Symbolic tier: sound "zero" for any expression whose canonical form (after
// clearing) is empty; a "nonzero" verdict is only issued for the
// rational-polynomial subclass, otherwise TierError tells the caller to use
// the numeric tier.
ZeroResult is_zero_symbolic(const SymExpr& e);

struct NumericSpec {
  int points = 100;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  double lo = 0.5, hi = 2.0;
  std::map<int, double> fixed;              // atom id -> bound value
  std::vector<SymExpr> domain_constraints;  // each must evaluate > 0
  int max_resample = 500;
};

ZeroResult is_zero_numeric(const SymExpr& e, const NumericSpec& spec);

// Evaluate with all atoms bound; Grassmann monomials evaluate per basis
// component. Throws EvalError for unbound or odd jet atoms and domain faults.
FloatGrassmann eval_numeric(const SymExpr& e, const std::map<int, double>& values);

// ---------------------------------------------------------------------------
// Polynomial utilities
// ---------------------------------------------------------------------------

// Exact division in the free (Laurent) term algebra: returns q with
// e == q * divisor, when such q exists.
std::optional<SymExpr> exact_divide(const SymExpr& e, const SymExpr& divisor,
                                    int max_steps = 400);

// Replaces atom^k (k >= power, integer exponents) by atom^(k-power) * value
// until every exponent of `atom` is < power. The replacement's degree in
// `atom` must be < power.
SymExpr rewrite_power(const SymExpr& e, int atom_id, long long power,
                      const SymExpr& value);

// Largest n with atom^n dividing every term (0 when the atom is absent from
// some term); used to extract monomial content.
Rational min_exponent(const SymExpr& e, int atom_id);

}  // namespace hydrosym
