#include <hydrosym/catalog.hpp>
#include <hydrosym/parser.hpp>

#include <json.hpp>

#include <sstream>

namespace hydrosym {

using nlohmann::json;

namespace {

Parity parse_parity(const std::string& s) {
  return s == "odd" ? Parity::Odd : Parity::Even;
}

VectorField load_generator(const json& j) {
  VectorField vf;
  vf.name = j.at("name").get<std::string>();
  vf.parity = parse_parity(j.at("parity").get<std::string>());
  for (auto it = j.at("coeffs").begin(); it != j.at("coeffs").end(); ++it) {
    int coord = CoordRegistry::instance().lookup(it.key());
    if (coord < 0) throw std::runtime_error("catalog: unknown coordinate " + it.key());
    vf.coeffs[coord] = parse_expr(it.value().get<std::string>());
  }
  return vf;
}

// "0" | "-T1" | "2*J" | "-2*W": a rational multiple of a single generator
std::vector<Rational> parse_table_entry(const std::string& text,
                                        const std::vector<std::string>& order) {
  std::vector<Rational> coeffs(order.size(), Rational(0));
  std::string s = text;
  Rational sign(1);
  size_t pos = 0;
  while (pos < s.size() && (s[pos] == '-' || s[pos] == ' ')) {
    if (s[pos] == '-') sign = -sign;
    ++pos;
  }
  s = s.substr(pos);
  if (s == "0") return coeffs;
  Rational mag(1);
  auto star = s.find('*');
  if (star != std::string::npos) {
    mag = parse_rational(s.substr(0, star));
    s = s.substr(star + 1);
  }
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == s) {
      coeffs[i] = sign * mag;
      return coeffs;
    }
  throw std::runtime_error("catalog: table entry references unknown generator: " + text);
}

StructureTable load_reference_table(const json& j) {
  StructureTable table;
  table.names = j.at("order").get<std::vector<std::string>>();
  for (const auto& row : j.at("entries")) {
    std::vector<std::vector<Rational>> out_row;
    for (const auto& cell : row)
      out_row.push_back(parse_table_entry(cell.get<std::string>(), table.names));
    table.entries.push_back(std::move(out_row));
  }
  return table;
}

AnsatzRow load_ansatz_row(const json& j) {
  AnsatzRow row;
  row.label = j.at("label").get<std::string>();
  row.algebra = j.at("algebra").get<std::string>();
  row.sigma = j.value("sigma", std::string());
  if (j.contains("invariants"))
    row.invariants = j.at("invariants").get<std::vector<std::string>>();
  if (j.contains("fields"))
    for (auto it = j.at("fields").begin(); it != j.at("fields").end(); ++it)
      row.fields[it.key()] = it.value().get<std::string>();
  if (j.contains("field_args"))
    for (auto it = j.at("field_args").begin(); it != j.at("field_args").end(); ++it)
      row.field_args[it.key()] = it.value().get<std::vector<std::string>>();
  row.x_elim_power = j.value("x_elim_power", 0);
  row.x_elim = j.value("x_elim", std::string());
  if (j.contains("sigma_grad"))
    for (auto it = j.at("sigma_grad").begin(); it != j.at("sigma_grad").end(); ++it)
      row.sigma_grad[it.key()] = it.value().get<std::string>();
  if (j.contains("reduced"))
    row.reduced = j.at("reduced").get<std::vector<std::string>>();
  if (j.contains("samples"))
    for (const auto& s : j.at("samples")) {
      std::map<std::string, std::string> binding;
      for (auto it = s.begin(); it != s.end(); ++it)
        binding[it.key()] = it.value().get<std::string>();
      row.samples.push_back(std::move(binding));
    }
  row.erratum = j.value("erratum", std::string());
  row.not_applicable = j.value("not_applicable", false);
  return row;
}

SolutionRecord load_solution(const json& j) {
  SolutionRecord rec;
  rec.id = j.at("id").get<std::string>();
  rec.algebra = j.at("algebra").get<std::string>();
  rec.subalgebra = j.value("subalgebra", std::string());
  rec.tier = j.at("tier").get<std::string>();
  rec.sigma = j.value("sigma", std::string());
  if (j.contains("fields"))
    for (auto it = j.at("fields").begin(); it != j.at("fields").end(); ++it)
      rec.fields[it.key()] = it.value().get<std::string>();
  if (j.contains("field_args"))
    for (auto it = j.at("field_args").begin(); it != j.at("field_args").end(); ++it)
      rec.field_args[it.key()] = it.value().get<std::vector<std::string>>();
  rec.x_elim_power = j.value("x_elim_power", 0);
  rec.x_elim = j.value("x_elim", std::string());
  if (j.contains("sigma_grad"))
    for (auto it = j.at("sigma_grad").begin(); it != j.at("sigma_grad").end(); ++it)
      rec.sigma_grad[it.key()] = it.value().get<std::string>();
  if (j.contains("constraints"))
    for (const auto& c : j.at("constraints")) {
      ConstraintSpec spec;
      spec.type = c.at("type").get<std::string>();
      spec.args = c.at("args").get<std::vector<std::string>>();
      spec.value = c.value("value", std::string());
      rec.constraints.push_back(std::move(spec));
    }
  if (j.contains("rewrites"))
    for (const auto& r : j.at("rewrites")) {
      RewriteSpec spec;
      spec.atom = r.at("atom").get<std::string>();
      spec.power = r.value("power", 1);
      spec.value = r.at("value").get<std::string>();
      rec.rewrites.push_back(std::move(spec));
    }
  if (j.contains("domain"))
    rec.domain = j.at("domain").get<std::vector<std::string>>();
  if (j.contains("numeric_fixed"))
    for (auto it = j.at("numeric_fixed").begin(); it != j.at("numeric_fixed").end(); ++it)
      rec.numeric_fixed[it.key()] = it.value().get<std::string>();
  if (j.contains("samples"))
    for (const auto& s : j.at("samples")) {
      std::map<std::string, std::string> binding;
      for (auto it = s.begin(); it != s.end(); ++it)
        binding[it.key()] = it.value().get<std::string>();
      rec.samples.push_back(std::move(binding));
    }
  rec.erratum = j.value("erratum", std::string());
  rec.special = j.value("special", std::string());
  return rec;
}

}  // namespace

VectorField SubalgebraRep::materialize(
    const std::map<std::string, Rational>& bindings) const {
  VectorField out;
  out.name = label;
  out.parity = Parity::Even;
  bool first = true;
  for (const auto& [coeff_text, gen_name] : combo) {
    const VectorField& gen = Catalog::instance().generator(algebra, gen_name);
    SymExpr coeff = parse_expr(coeff_text, bindings);
    VectorField part = scale(coeff, gen);
    if (first) {
      out.coeffs = part.coeffs;
      out.parity = part.parity;
      first = false;
    } else {
      out = out + part;
    }
  }
  out.name = label;
  return out;
}

Catalog::Catalog() {
  init_standard_symbols();
  json alg = json::parse(algebra_json());
  for (const auto& g : alg.at("generators").at("classical"))
    classical_.push_back(load_generator(g));
  for (const auto& g : alg.at("generators").at("susy"))
    susy_.push_back(load_generator(g));
  ref_classical_ = load_reference_table(alg.at("tables").at("classical"));
  ref_susy_ = load_reference_table(alg.at("tables").at("susy"));
  for (const auto& s : alg.at("subalgebras")) {
    SubalgebraRep rep;
    rep.label = s.at("label").get<std::string>();
    rep.algebra = s.at("algebra").get<std::string>();
    for (const auto& pair : s.at("combo"))
      rep.combo.push_back({pair.at(0).get<std::string>(), pair.at(1).get<std::string>()});
    rep.constraints = s.value("constraints", std::string());
    subalgebras_.push_back(std::move(rep));
  }
  json ans = json::parse(ansatz_json());
  for (const auto& r : ans.at("rows")) ansatz_rows_.push_back(load_ansatz_row(r));
  json sol = json::parse(solutions_json());
  for (const auto& r : sol.at("records")) solutions_.push_back(load_solution(r));
}

const Catalog& Catalog::instance() {
  static Catalog cat;
  return cat;
}

const std::vector<VectorField>& Catalog::generators(const std::string& algebra) const {
  if (algebra == "classical") return classical_;
  if (algebra == "susy") return susy_;
  throw std::runtime_error("unknown algebra: " + algebra);
}

const VectorField& Catalog::generator(const std::string& algebra,
                                      const std::string& name) const {
  for (const auto& g : generators(algebra))
    if (g.name == name) return g;
  throw std::runtime_error("unknown generator " + name + " in " + algebra);
}

const StructureTable& Catalog::reference_table(const std::string& algebra) const {
  if (algebra == "classical") return ref_classical_;
  if (algebra == "susy") return ref_susy_;
  throw std::runtime_error("unknown algebra: " + algebra);
}

const SubalgebraRep& Catalog::subalgebra(const std::string& label) const {
  for (const auto& s : subalgebras_)
    if (s.label == label) return s;
  throw std::runtime_error("unknown subalgebra label: " + label);
}

const AnsatzRow& Catalog::ansatz(const std::string& label) const {
  for (const auto& r : ansatz_rows_)
    if (r.label == label) return r;
  throw std::runtime_error("unknown ansatz row: " + label);
}

const SolutionRecord& Catalog::solution(const std::string& id) const {
  for (const auto& s : solutions_)
    if (s.id == id) return s;
  throw std::runtime_error("unknown solution id: " + id);
}

std::string Catalog::emit_json() const {
  json merged;
  merged["algebra"] = json::parse(algebra_json());
  merged["ansatz"] = json::parse(ansatz_json());
  merged["solutions"] = json::parse(solutions_json());
  return merged.dump(2);
}

std::string Catalog::emit_markdown() const {
  std::ostringstream os;
  os << "# Subalgebra catalog\n\n";
  for (const char* alg : {"classical", "susy"}) {
    os << "## " << alg << " one-dimensional subalgebras\n\n";
    os << "| label | generator | constraints |\n|---|---|---|\n";
    for (const auto& s : subalgebras_) {
      if (s.algebra != alg) continue;
      os << "| " << s.label << " | ";
      bool first = true;
      for (const auto& [c, g] : s.combo) {
        if (!first) os << " + ";
        first = false;
        if (c == "1")
          os << g;
        else
          os << "(" << c << ")*" << g;
      }
      os << " | " << s.constraints << " |\n";
    }
    os << "\n## " << alg << " invariants and reduced equations\n\n";
    os << "| label | sigma | change of variable | reduced equations | notes |\n"
       << "|---|---|---|---|---|\n";
    for (const auto& r : ansatz_rows_) {
      if (r.algebra != alg) continue;
      os << "| " << r.label << " | " << (r.not_applicable ? "N/A" : r.sigma) << " | ";
      bool first = true;
      for (const auto& [f, e] : r.fields) {
        if (!first) os << "; ";
        first = false;
        os << f << " = " << e;
      }
      os << " | ";
      first = true;
      for (const auto& e : r.reduced) {
        if (!first) os << "; ";
        first = false;
        os << e << " = 0";
      }
      os << " | " << r.erratum << " |\n";
    }
    os << "\n";
  }
  os << "## Solution records\n\n| id | subalgebra | tier | erratum |\n|---|---|---|---|\n";
  for (const auto& s : solutions_)
    os << "| " << s.id << " | " << s.subalgebra << " | " << s.tier << " | "
       << s.erratum << " |\n";
  return os.str();
}

}  // namespace hydrosym
