#include <hydrosym/liealg.hpp>

#include <algorithm>
#include <sstream>

namespace hydrosym {

bool VectorField::is_zero() const {
  for (const auto& [c, e] : coeffs)
    if (!e.is_zero()) return false;
  return true;
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField r = *this;
  r.name = name + "+" + o.name;
  for (const auto& [c, e] : o.coeffs) {
    auto it = r.coeffs.find(c);
    if (it == r.coeffs.end())
      r.coeffs[c] = e;
    else
      it->second = it->second + e;
  }
  return r;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& [c, e] : r.coeffs) e = -e;
  return r;
}

VectorField scale(const SymExpr& c, const VectorField& v) {
  VectorField r = v;
  Parity cp = c.parity();
  if (cp == Parity::Odd)
    r.parity = v.parity == Parity::Odd ? Parity::Even : Parity::Odd;
  for (auto& [coord, e] : r.coeffs) e = c * e;
  return r;
}

std::string VectorField::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, e] : coeffs) {
    if (e.is_zero()) continue;
    if (!first) os << " ; ";
    first = false;
    os << "d_" << CoordRegistry::instance().info(c).name << ": " << e.str();
  }
  if (first) os << "0";
  return os.str();
}

namespace {

int coord_atom(int coord) {
  const auto& info = CoordRegistry::instance().info(coord);
  if (info.kind == CoordKind::IndepEven || info.kind == CoordKind::IndepOdd)
    return AtomTable::instance().indep_atom(coord);
  if (info.kind == CoordKind::FieldEven || info.kind == CoordKind::FieldOdd)
    return AtomTable::instance().jet_atom(JetSpec{coord, {}, false});
  throw std::runtime_error("coord_atom: constants have no direction");
}

bool coord_odd(int coord) {
  auto k = CoordRegistry::instance().info(coord).kind;
  return k == CoordKind::IndepOdd || k == CoordKind::FieldOdd;
}

}  // namespace

SymExpr apply_vector_field(const VectorField& v, const SymExpr& f) {
  SymExpr r;
  for (const auto& [coord, coeff] : v.coeffs) {
    if (coeff.is_zero()) continue;
    r += coeff * f.partial(coord_atom(coord));
  }
  return r;
}

bool parity_consistent(const VectorField& v) {
  if (v.parity == Parity::Mixed) return false;
  for (const auto& [coord, coeff] : v.coeffs) {
    if (coeff.is_zero()) continue;
    Parity cp = coeff.parity();
    if (cp == Parity::Mixed) return false;
    bool coeff_odd = cp == Parity::Odd;
    bool want_odd = coord_odd(coord) != (v.parity == Parity::Odd);
    if (coeff_odd != want_odd) return false;
  }
  return true;
}

VectorField bracket(const VectorField& A, const VectorField& B) {
  bool both_odd = A.parity == Parity::Odd && B.parity == Parity::Odd;
  VectorField r;
  r.name = "[" + A.name + "," + B.name + "]";
  r.parity = (A.parity == B.parity) ? Parity::Even : Parity::Odd;
  std::set<int> coords;
  for (const auto& [c, e] : A.coeffs) coords.insert(c);
  for (const auto& [c, e] : B.coeffs) coords.insert(c);
  for (int c : coords) {
    SymExpr bc = B.coeffs.count(c) ? B.coeffs.at(c) : SymExpr();
    SymExpr ac = A.coeffs.count(c) ? A.coeffs.at(c) : SymExpr();
    SymExpr val = apply_vector_field(A, bc);
    SymExpr back = apply_vector_field(B, ac);
    val = both_odd ? val + back : val - back;
    if (!val.is_zero()) r.coeffs[c] = val;
  }
  return r;
}

namespace {

// exact Gaussian elimination for expand_in_basis
struct LinearSystem {
  std::vector<std::vector<Rational>> rows;  // each row: K coefficients + rhs
};

std::optional<std::vector<Rational>> solve_exact(LinearSystem sys, size_t K) {
  auto& rows = sys.rows;
  size_t rank = 0;
  std::vector<int> pivot_col;
  for (size_t col = 0; col < K && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Rational p = rows[rank][col];
    for (auto& v : rows[rank]) v /= p;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (size_t j = 0; j <= K; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  // inconsistent?
  for (size_t r = rank; r < rows.size(); ++r)
    if (rows[r][K] != 0) return std::nullopt;
  std::vector<Rational> sol(K, Rational(0));
  for (size_t i = 0; i < rank; ++i) sol[static_cast<size_t>(pivot_col[i])] = rows[i][K];
  return sol;
}

}  // namespace

std::optional<std::vector<Rational>> expand_in_basis(
    const VectorField& v, const std::vector<VectorField>& gens) {
  // unknowns c_k with sum_k c_k gen_k == v, compared termwise per coordinate
  std::set<int> coords;
  for (const auto& g : gens)
    for (const auto& [c, e] : g.coeffs) coords.insert(c);
  for (const auto& [c, e] : v.coeffs)
    if (!e.is_zero()) coords.insert(c);

  LinearSystem sys;
  size_t K = gens.size();
  for (int c : coords) {
    // collect term keys across all generators and v at this coordinate
    std::map<std::string, std::vector<Rational>> rows;  // term print -> row
    auto add = [&](const SymExpr& e, size_t k, bool rhs) {
      for (const auto& [t, q] : e.terms()) {
        SymExpr single;
        single.add_term(Term(t), Rational(1));
        std::string tkey = single.str();
        auto& row = rows[tkey];
        if (row.empty()) row.assign(K + 1, Rational(0));
        if (rhs)
          row[K] += q;
        else
          row[k] += q;
      }
    };
    for (size_t k = 0; k < K; ++k) {
      auto it = gens[k].coeffs.find(c);
      if (it != gens[k].coeffs.end()) add(it->second, k, false);
    }
    auto vit = v.coeffs.find(c);
    if (vit != v.coeffs.end()) add(vit->second, 0, true);
    for (auto& [key, row] : rows) sys.rows.push_back(row);
  }
  auto sol = solve_exact(sys, K);
  if (!sol) return std::nullopt;
  // verify (elimination ignores free columns; substitute back)
  VectorField recon;
  recon.parity = v.parity;
  for (size_t k = 0; k < K; ++k)
    recon = recon + scale(SymExpr::constant((*sol)[k]), gens[k]);
  VectorField diff = recon - v;
  if (!diff.is_zero()) return std::nullopt;
  return sol;
}

StructureTable structure_table(const std::vector<VectorField>& gens) {
  StructureTable table;
  for (const auto& g : gens) table.names.push_back(g.name);
  table.entries.resize(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    table.entries[i].resize(gens.size());
    for (size_t j = 0; j < gens.size(); ++j) {
      VectorField br = bracket(gens[i], gens[j]);
      auto coeffs = expand_in_basis(br, gens);
      if (!coeffs)
        throw NonClosureError("bracket [" + gens[i].name + "," + gens[j].name +
                              "] leaves the span; residual: " + br.str());
      table.entries[i][j] = *coeffs;
    }
  }
  return table;
}

VectorField adjoint_orbit(const VectorField& Y, const VectorField& X,
                          const Rational& eps, int max_order, bool allow_truncation) {
  VectorField acc = X;
  acc.name = "Ad(" + Y.name + ")(" + X.name + ")";
  VectorField cur = X;
  Rational factor(1);
  for (int n = 1; n <= max_order; ++n) {
    cur = bracket(Y, cur);
    if (cur.is_zero()) return acc;
    factor *= eps / n;
    acc = acc + scale(SymExpr::constant(factor), cur);
  }
  VectorField probe = bracket(Y, cur);
  if (probe.is_zero()) return acc;
  if (allow_truncation) return acc;
  throw std::runtime_error("adjoint_orbit: series did not terminate within max_order " +
                           std::to_string(max_order));
}

namespace {

// rank of a set of vector fields over the rationals (termwise coefficients)
size_t span_rank(const std::vector<VectorField>& fields) {
  std::map<std::string, size_t> keyindex;
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fields) {
    std::map<size_t, Rational> row;
    for (const auto& [c, e] : f.coeffs)
      for (const auto& [t, q] : e.terms()) {
        SymExpr single;
        single.add_term(Term(t), Rational(1));
        std::string key = std::to_string(c) + "|" + single.str();
        auto [it, fresh] = keyindex.try_emplace(key, keyindex.size());
        row[it->second] += q;
      }
    std::vector<Rational> dense(keyindex.size() + 1, Rational(0));
    for (auto& [idx, q] : row) dense[idx] = q;
    rows.push_back(std::move(dense));
  }
  size_t width = keyindex.size();
  for (auto& r : rows) r.resize(width, Rational(0));
  // Gaussian elimination
  size_t rank = 0;
  for (size_t col = 0; col < width && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Rational p = rows[rank][col];
    for (auto& v : rows[rank]) v /= p;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (size_t j = 0; j < width; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<int> solvable_depth(const std::vector<VectorField>& gens) {
  std::vector<VectorField> current = gens;
  for (int depth = 0; depth < 16; ++depth) {
    if (span_rank(current) == 0) return depth;
    std::vector<VectorField> derived;
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j) {
        VectorField br = bracket(current[i], current[j]);
        if (!br.is_zero()) derived.push_back(br);
      }
    // odd-odd anticommutators [g,g] matter too
    for (size_t i = 0; i < current.size(); ++i)
      if (current[i].parity == Parity::Odd) {
        VectorField br = bracket(current[i], current[i]);
        if (!br.is_zero()) derived.push_back(br);
      }
    if (derived.empty()) return depth + 1;
    if (span_rank(derived) >= span_rank(current) && depth > 8) return std::nullopt;
    current = std::move(derived);
  }
  return std::nullopt;
}

bool is_ideal(const std::vector<VectorField>& algebra,
              const std::vector<VectorField>& ideal) {
  std::vector<VectorField> basis = ideal;
  size_t base_rank = span_rank(basis);
  for (const auto& a : algebra)
    for (const auto& h : ideal) {
      VectorField br = bracket(a, h);
      if (br.is_zero()) continue;
      std::vector<VectorField> extended = basis;
      extended.push_back(br);
      if (span_rank(extended) != base_rank) return false;
    }
  return true;
}

}  // namespace hydrosym
