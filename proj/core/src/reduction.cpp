#include <hydrosym/parser.hpp>
#include <hydrosym/reduction.hpp>

#include <functional>
#include <sstream>

namespace hydrosym {

namespace {

std::map<std::string, Rational> parse_bindings(
    const std::map<std::string, std::string>& sample) {
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : sample) out[k] = parse_rational(v);
  return out;
}

bool sigma_is_plain(const SymExpr& sig) {
  // sigma that is literally x or t needs no gradient bookkeeping
  if (sig.size() != 1) return false;
  const auto& [term, c] = *sig.terms().begin();
  if (c != 1 || !term.gkey.empty() || !term.odd.empty() || term.even.size() != 1)
    return false;
  const AtomRec& r = AtomTable::instance().rec(term.even[0].first);
  return r.cls == AtomClass::Indep && term.even[0].second == 1;
}

struct AnsatzContext {
  DiffContext ctx;
  std::map<int, SymExpr> field_values;
  int x_atom = -1;
  int x_coord = -1;
  SymExpr x_replacement;
  int x_power = 0;
};

AnsatzContext build_context(const std::map<std::string, std::string>& fields,
                            const std::map<std::string, std::vector<std::string>>& field_args,
                            const std::string& sigma,
                            const std::map<std::string, std::string>& sigma_grad,
                            int x_elim_power, const std::string& x_elim,
                            const std::map<std::string, Rational>& bindings) {
  AnsatzContext out;
  auto& cr = CoordRegistry::instance();
  out.x_coord = cr.lookup("x");
  out.x_atom = AtomTable::instance().indep_atom(out.x_coord);
  for (const auto& [fname, args] : field_args) {
    int f = cr.lookup(fname);
    if (f < 0) throw std::runtime_error("unknown field in field_args: " + fname);
    std::vector<int> ids;
    for (const auto& a : args) ids.push_back(cr.lookup(a));
    out.ctx.field_args[f] = ids;
  }
  if (!sigma_grad.empty()) {
    for (const auto& [var, text] : sigma_grad)
      out.ctx.sigma_gradient[cr.lookup(var)] = parse_expr(text, bindings);
  } else if (!sigma.empty()) {
    SymExpr sig = parse_expr(sigma, bindings);
    if (!sigma_is_plain(sig)) {
      for (const char* var : {"x", "t"}) {
        int v = cr.lookup(var);
        out.ctx.sigma_gradient[v] = sig.total_derivative(v);
      }
    }
  }
  for (const auto& [fname, text] : fields) {
    int f = cr.lookup(fname);
    if (f < 0) throw std::runtime_error("unknown field: " + fname);
    out.field_values[f] = parse_expr(text, bindings);
  }
  if (x_elim_power > 0) {
    out.x_power = x_elim_power;
    out.x_replacement = parse_expr(x_elim, bindings);
  }
  return out;
}

SymExpr eliminate_x(const SymExpr& e, const AnsatzContext& actx) {
  if (actx.x_power <= 0) return e;
  if (actx.x_power == 1) return e.substitute({{actx.x_atom, actx.x_replacement}});
  return rewrite_power(e, actx.x_atom, actx.x_power, actx.x_replacement);
}

const PDESystem& system_for(const std::string& algebra) {
  static PDESystem classical = classical_system();
  static PDESystem susy = susy_system();
  if (algebra == "classical") return classical;
  if (algebra == "susy") return susy;
  throw std::runtime_error("unknown algebra: " + algebra);
}

}  // namespace

MatchResult match_reduced(const SymExpr& computed, const SymExpr& expected) {
  MatchResult res;
  if (expected.is_zero() && computed.is_zero()) {
    res.match = true;
    res.factor = "0";
    return res;
  }
  if (expected.is_zero() != computed.is_zero()) {
    res.discrepancy = expected.is_zero() ? "expected 0, computed " + computed.str()
                                         : "computed 0, expected " + expected.str();
    return res;
  }
  auto q = exact_divide(computed, expected);
  if (!q || q->is_zero()) {
    // try the transposed division in case the factor inverts
    auto q2 = exact_divide(expected, computed);
    if (q2 && !q2->is_zero()) {
      res.match = true;
      res.factor = "(" + q2->str() + ")^(-1)";
      res.monomial = q2->size() == 1;
      return res;
    }
    res.discrepancy = "no exact factor between computed and expected residual";
    return res;
  }
  res.match = true;
  res.factor = q->str();
  res.monomial = q->size() == 1;
  return res;
}

AnsatzOutcome apply_ansatz(const AnsatzRow& row) {
  AnsatzOutcome out;
  out.label = row.label;
  if (row.not_applicable) {
    out.status = "skipped";
    out.witness = "no reduction (pure fermionic translation)";
    return out;
  }
  const PDESystem& sys = system_for(row.algebra);
  std::vector<std::map<std::string, std::string>> samples = row.samples;
  if (samples.empty()) samples.push_back({});
  for (const auto& sample : samples) {
    auto bindings = parse_bindings(sample);
    AnsatzContext actx =
        build_context(row.fields, row.field_args, row.sigma, row.sigma_grad,
                      row.x_elim_power, row.x_elim, bindings);
    if (row.reduced.size() != sys.residuals.size())
      throw std::runtime_error("ansatz row " + row.label +
                               ": expected-residual count mismatch");
    for (size_t i = 0; i < sys.residuals.size(); ++i) {
      SymExpr computed = sys.residuals[i].substitute_fields(actx.field_values, actx.ctx);
      SymExpr expected = parse_expr(row.reduced[i], bindings);
      MatchResult m;
      // fraction-free forms are compared first when the computed residual is
      // already small; clearing denominators on one or both sides covers rows
      // whose residuals are genuine rational functions
      if (actx.x_power <= 1 && computed.size() <= expected.size() * 4 + 8) {
        m = match_reduced(eliminate_x(computed, actx), expected);
      }
      if (!m.match) {
        SymExpr reduced = eliminate_x(clear_denominators(computed).expr, actx);
        SymExpr reduced2 = clear_denominators(reduced).expr;
        m = match_reduced(reduced2, expected);
        if (!m.match) m = match_reduced(reduced2, clear_denominators(expected).expr);
      }
      if (!m.match) {
        out.status = "fail";
        std::ostringstream os;
        os << "equation " << i + 1;
        if (!sample.empty()) {
          os << " at";
          for (const auto& [k, v] : sample) os << " " << k << "=" << v;
        }
        os << ": " << m.discrepancy;
        out.witness = os.str();
        return out;
      }
      if (!m.monomial) out.monomial_factors = false;
      if (out.factors.size() < sys.residuals.size()) out.factors.push_back(m.factor);
    }
  }
  out.status = row.erratum.empty() ? "pass" : "erratum";
  if (!row.erratum.empty()) out.witness = row.erratum;
  if (!out.monomial_factors && out.witness.empty())
    out.witness = "non-monomial prefactor recorded for manual review";
  return out;
}

InvariantOutcome check_ansatz_invariants(const AnsatzRow& row) {
  InvariantOutcome out;
  out.label = row.label;
  out.pass = true;
  std::vector<std::map<std::string, std::string>> samples = row.samples;
  if (samples.empty()) samples.push_back({});
  const SubalgebraRep& rep = Catalog::instance().subalgebra(row.label);
  for (const auto& sample : samples) {
    auto bindings = parse_bindings(sample);
    VectorField v = rep.materialize(bindings);
    std::vector<std::string> exprs = row.invariants;
    if (!row.sigma.empty()) exprs.push_back(row.sigma);
    for (const auto& text : exprs) {
      SymExpr inv = parse_expr(text, bindings);
      SymExpr acted = apply_vector_field(v, inv);
      ZeroResult z = is_zero_symbolic(acted);
      if (!z.zero) {
        out.pass = false;
        out.witness = row.label + ": v(" + text + ") != 0: " + z.witness;
        return out;
      }
    }
  }
  return out;
}

namespace {

// Derives the induced rule for F_sigmasigma from a first-order rewrite
// F_sigma -> value; the derivative is closed under every first-order rule.
void derive_second_order_rewrite(std::map<int, SymExpr>& out, int atom,
                                 const SymExpr& value,
                                 const std::map<int, SymExpr>& first_order,
                                 const DiffContext& ctx) {
  const AtomRec& r = AtomTable::instance().rec(atom);
  if (r.cls != AtomClass::Jet || r.jet.didx.size() != 1) return;
  int svar = r.jet.didx[0];
  JetSpec second = r.jet;
  second.didx.push_back(svar);
  std::sort(second.didx.begin(), second.didx.end());
  int atom2 = AtomTable::instance().jet_atom(second);
  SymExpr dvalue = value.total_derivative(svar, ctx);
  dvalue = dvalue.substitute(first_order, false);
  out[atom2] = dvalue;
}

int single_atom_of(const SymExpr& e, const std::string& what) {
  if (e.size() != 1) throw std::runtime_error(what + ": not a single atom");
  const auto& [t, c] = *e.terms().begin();
  if (c != 1 || !t.gkey.empty())
    throw std::runtime_error(what + ": not a plain atom");
  if (t.odd.size() == 1 && t.even.empty()) return t.odd[0];
  if (t.even.size() == 1 && t.odd.empty() && t.even[0].second == 1)
    return t.even[0].first;
  throw std::runtime_error(what + ": not a plain atom");
}

int generator_id(const std::string& name) {
  int g = GeneratorRegistry::instance().lookup(name);
  if (g < 0) throw std::runtime_error("unknown generator: " + name);
  return g;
}

}  // namespace

SolutionOutcome verify_solution(const SolutionRecord& rec, std::uint64_t seed) {
  if (rec.special == "sl10_monomial") return verify_sl10_monomial();
  SolutionOutcome out;
  out.id = rec.id;
  out.tier = rec.tier;
  const PDESystem& sys = system_for(rec.algebra);
  std::vector<std::map<std::string, std::string>> samples = rec.samples;
  if (samples.empty()) samples.push_back({});
  for (const auto& sample : samples) {
    auto bindings = parse_bindings(sample);
    AnsatzContext actx =
        build_context(rec.fields, rec.field_args, rec.sigma, rec.sigma_grad,
                      rec.x_elim_power, rec.x_elim, bindings);
    // first-order rewrites: collect all of them, then close under the
    // sigma-derivative so induced second-derivative atoms rewrite too
    std::map<int, SymExpr> rewmap;
    for (const auto& rw : rec.rewrites) {
      if (rw.power != 1) continue;
      int atom = single_atom_of(parse_expr(rw.atom, bindings), rec.id + " rewrite");
      rewmap[atom] = parse_expr(rw.value, bindings);
    }
    {
      std::map<int, SymExpr> closures;
      for (const auto& [atom, value] : rewmap)
        derive_second_order_rewrite(closures, atom, value, rewmap, actx.ctx);
      for (auto& [atom, value] : closures) rewmap.emplace(atom, std::move(value));
    }
    std::vector<std::pair<std::pair<int, int>, SymExpr>> power_rewrites;
    for (const auto& rw : rec.rewrites) {
      if (rw.power == 1) continue;
      int atom = single_atom_of(parse_expr(rw.atom, bindings), rec.id + " rewrite");
      power_rewrites.push_back({{atom, rw.power}, parse_expr(rw.value, bindings)});
    }
    // an x-elimination of power >= 2 reaches x inside cleared denominators
    // only by interleaving with the clearing loop below
    if (actx.x_power >= 2)
      power_rewrites.push_back({{actx.x_atom, actx.x_power}, actx.x_replacement});
    for (size_t i = 0; i < sys.residuals.size(); ++i) {
      SymExpr residual = sys.residuals[i].substitute_fields(
          actx.field_values, actx.ctx, /*enforce_parity=*/false);
      for (const auto& c : rec.constraints) {
        if (c.type == "pair_zero") {
          residual = residual.drop_generator_pair(generator_id(c.args.at(0)),
                                                  generator_id(c.args.at(1)));
        } else if (c.type == "odd_pair_zero") {
          int a1 = single_atom_of(parse_expr(c.args.at(0), bindings), "constraint");
          int a2 = single_atom_of(parse_expr(c.args.at(1), bindings), "constraint");
          residual = residual.drop_odd_atom_pair(a1, a2);
        } else if (c.type == "product_value") {
          residual = residual.rewrite_generator_product(
              generator_id(c.args.at(0)), generator_id(c.args.at(1)),
              parse_expr(c.value, bindings));
        } else {
          throw std::runtime_error("unknown constraint type: " + c.type);
        }
      }
      if (actx.x_power == 1)
        residual = residual.substitute({{actx.x_atom, actx.x_replacement}});
      if (!rewmap.empty()) residual = residual.substitute(rewmap, false);
      // interleave clearing with the power rewrites until stable: clearing
      // can reintroduce rewritable powers (cos^2 from cleared denominators)
      if (!power_rewrites.empty() && rec.tier != "numeric") {
        for (int round = 0; round < 8; ++round) {
          SymExpr before = residual;
          residual = clear_denominators(residual).expr;
          for (const auto& [ap, value] : power_rewrites)
            residual = rewrite_power(residual, ap.first, ap.second, value);
          if (residual.str() == before.str()) break;
        }
      } else {
        for (const auto& [ap, value] : power_rewrites)
          residual = rewrite_power(residual, ap.first, ap.second, value);
      }
      if (rec.tier == "numeric") {
        NumericSpec spec;
        spec.seed = seed ^ std::hash<std::string>{}(rec.id);
        for (const auto& [name, val] : rec.numeric_fixed)
          spec.fixed[atom_of_coord(name)] = to_double(parse_rational(val));
        for (const auto& d : rec.domain)
          spec.domain_constraints.push_back(parse_expr(d, bindings));
        ZeroResult z = is_zero_numeric(residual, spec);
        if (!z.zero) {
          out.status = "fail";
          out.witness = "equation " + std::to_string(i + 1) + ": " + z.witness;
          return out;
        }
      } else {
        ZeroResult z;
        try {
          z = is_zero_symbolic(residual);
        } catch (const TierError& e) {
          out.status = "fail";
          out.witness = "equation " + std::to_string(i + 1) + ": " + e.what();
          return out;
        }
        if (!z.zero) {
          out.status = "fail";
          out.witness = "equation " + std::to_string(i + 1) + ": " + z.witness;
          return out;
        }
      }
    }
  }
  out.status = rec.erratum.empty() ? "pass" : "erratum";
  out.witness = rec.erratum;
  return out;
}

SolutionOutcome verify_sl10_monomial() {
  SolutionOutcome out;
  out.id = "solution10";
  out.tier = "symbolic";
  init_standard_symbols();
  auto E = [](const std::string& s) { return parse_expr(s); };
  int p_atom = atom_of_coord("p");

  SymExpr Ainv = E("pow(1+a+3*b, -1)");
  SymExpr kap = E("(1+a+3*b)*pow(1+a+2*b, -1)");
  SymExpr kexp = E("(1+a+2*b)*pow(1+a+3*b, -1)");  // k = l = 1 - b/(1+a+3b)
  SymExpr m = E("3 - p - 3*b*pow(1+a+3*b, -1)");
  SymExpr A0 = E("(p*(1+a+3*b) - 1)*(1+a+2*b)*pow(p, -1)*pow(1+a+3*b, -2)");
  SymExpr B0 = E("(1+a+2*b)*pow(1+a+3*b, -1)*((1+a+3*b)*p - (3+2*a+6*b))*pow((1+a+3*b)*p - (3+3*a+6*b), -1)");
  SymExpr LK = E("(1+a+2*b)^3*(p*a - 1 + 3*p*b + p)*(a^2 - a*p*b + a + 5*a*b - p*b - 3*p*b^2 + 6*b^2 + 3*b)*pow(1+a+3*b, -4)*pow(p, -2)*pow(-3 - 3*a - 6*b + p + p*a + 3*p*b, -2)");
  SymExpr bA = E("b*pow(1+a+3*b, -1)");
  SymExpr aA = E("a*pow(1+a+3*b, -1)");
  SymExpr p = E("p");

  std::vector<SymExpr> eqs = {
      // bosonic equations: the Omega_sigma Lambda_sigma product contributes
      // +p*m*LK to the first and -p*m*LK to the second
      -(bA * A0) - A0 * kexp + kap * B0 * A0 * kexp + kap * kap * p * m * LK,
      -(bA * B0) - B0 * kexp + kap * A0 * B0 * kexp - kap * kap * p * m * LK,
      aA - m + kap * B0 * m,
      Ainv - p + kap * A0 * p,
  };
  SymExpr quad_value = E("-((a^3 + a^2 + 10*a^2*b + 33*a*b^2 + 12*a*b - a + 36*b^3 + 2*b - 1 + 27*b^2)*p + (a^2 + 4*a + 5*a*b + 6*b^2 + 9*b + 3))*pow(-2*a^2*b - 4*a*b - 12*a*b^2 - 12*b^2 - 18*b^3 - 2*b, -1)");

  auto polynomialize = [&](SymExpr e) {
    // clear compound denominators, then negative powers of p, so the
    // quadratic rewrite acts on an honest polynomial in p
    e = clear_denominators(e).expr;
    Rational mn = min_exponent(e, p_atom);
    if (mn < 0) {
      SymExpr shifted;
      for (const auto& [t, c] : e.terms()) {
        Term nt = t;
        nt.even.push_back({p_atom, -mn});
        shifted.add_term(std::move(nt), c);
      }
      e = std::move(shifted);
    }
    return e;
  };
  for (size_t i = 0; i < eqs.size(); ++i) {
    SymExpr cur = eqs[i];
    for (int round = 0; round < 8; ++round) {
      cur = polynomialize(cur);
      SymExpr next = rewrite_power(cur, p_atom, 2, quad_value);
      bool stable = next.str() == cur.str();
      cur = next;
      if (stable && !cur.has_func_atoms()) break;
    }
    ZeroResult z = is_zero_symbolic(cur);
    if (!z.zero) {
      out.status = "fail";
      out.witness = "coefficient equation " + std::to_string(i + 1) +
                    " does not vanish modulo the quadratic: " + z.witness;
      return out;
    }
  }
  out.status = "pass";
  out.witness =
      "printed exponents, A0, B0 and L0*K0 verify symbolically in a, b, p "
      "modulo the printed quadratic";
  return out;
}

EulerOutcome verify_euler_double_wave() {
  EulerOutcome out;
  init_standard_symbols();
  auto& cr = CoordRegistry::instance();
  int x = cr.lookup("x"), t = cr.lookup("t");

  SymExpr U = parse_expr("k^(1/2)*(r1 - r2) + u0");
  SymExpr RHO = parse_expr("A*exp(r1 + r2)");
  SymExpr RHOinv = parse_expr("A^(-1)*exp(-(r1 + r2))");

  PDESystem euler;
  euler.name = "euler-double-wave";
  euler.fields = {cr.lookup("r1"), cr.lookup("r2")};
  euler.solved_t[cr.lookup("r1")] = parse_expr("-(k^(1/2)*(r1 - r2 + 1) + u0)*r1_x");
  euler.solved_t[cr.lookup("r2")] = parse_expr("-(k^(1/2)*(r1 - r2 - 1) + u0)*r2_x");
  euler.residuals = {parse_expr("r1_t + (k^(1/2)*(r1 - r2 + 1) + u0)*r1_x"),
                     parse_expr("r2_t + (k^(1/2)*(r1 - r2 - 1) + u0)*r2_x")};

  SymExpr eq1 = U.total_derivative(t) + U * U.total_derivative(x) +
                parse_expr("k") * RHOinv * RHO.total_derivative(x);
  SymExpr eq2 = RHO.total_derivative(t) + U * RHO.total_derivative(x) +
                RHO * U.total_derivative(x);

  SymExpr red1 = on_shell_reduce(eq1, euler);
  // normalize by the nonvanishing density factor before zero-testing
  SymExpr red2 = on_shell_reduce(eq2, euler) * RHOinv;
  ZeroResult z1 = is_zero_symbolic(red1);
  ZeroResult z2 = is_zero_symbolic(red2);
  out.pass = z1.zero && z2.zero;
  if (!out.pass) {
    out.witness = !z1.zero ? z1.witness : z2.witness;
    return out;
  }

  // negative control: flip the +1 in the r1 characteristic speed
  PDESystem flipped = euler;
  flipped.solved_t[cr.lookup("r1")] = parse_expr("-(k^(1/2)*(r1 - r2 - 1) + u0)*r1_x");
  SymExpr bad = on_shell_reduce(eq1, flipped);
  ZeroResult zb = is_zero_symbolic(bad);
  out.negative_control_fails = !zb.zero;
  if (!out.negative_control_fails) out.witness = "negative control unexpectedly vanished";
  return out;
}

}  // namespace hydrosym
