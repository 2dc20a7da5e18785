#include <hydrosym/symexpr.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace hydrosym {

// ---------------------------------------------------------------------------
// CoordRegistry
// ---------------------------------------------------------------------------

CoordRegistry& CoordRegistry::instance() {
  static CoordRegistry reg;
  return reg;
}

int CoordRegistry::register_coord(const std::string& name, CoordKind kind) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ids_.find(name);
  if (it != ids_.end()) {
    if (coords_[it->second].kind != kind)
      throw std::runtime_error("coordinate re-registered with different kind: " + name);
    return it->second;
  }
  int id = static_cast<int>(coords_.size());
  coords_.push_back({name, kind});
  ids_[name] = id;
  return id;
}

int CoordRegistry::lookup(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ids_.find(name);
  return it == ids_.end() ? -1 : it->second;
}

const CoordInfo& CoordRegistry::info(int id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return coords_.at(static_cast<size_t>(id));
}

int CoordRegistry::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<int>(coords_.size());
}

void init_standard_symbols() {
  auto& cr = CoordRegistry::instance();
  cr.register_coord("x", CoordKind::IndepEven);
  cr.register_coord("t", CoordKind::IndepEven);
  cr.register_coord("sigma", CoordKind::IndepEven);
  cr.register_coord("theta", CoordKind::IndepOdd);
  for (const char* f : {"R", "S", "F", "G", "u", "rho", "r1", "r2"})
    cr.register_coord(f, CoordKind::FieldEven);
  for (const char* f : {"xi", "psi", "Lambda", "Omega"})
    cr.register_coord(f, CoordKind::FieldOdd);
  for (const char* c : {"a", "b", "k", "l", "m", "p", "eps", "u0", "p0", "A",
                        "A0", "B0", "C0", "C1", "C2", "C3", "t0", "K0"})
    cr.register_coord(c, CoordKind::ConstEven);
  auto& gr = GeneratorRegistry::instance();
  for (const char* g : {"theta", "eta", "eta1", "eta2", "K_", "K0_", "K1_",
                        "L_", "L0_", "D1_", "D2_", "D3_", "D4_"})
    gr.register_generator(g);
}

// ---------------------------------------------------------------------------
// AtomTable
// ---------------------------------------------------------------------------

AtomTable& AtomTable::instance() {
  static AtomTable table;
  return table;
}

namespace {

std::string pad_index(int idx) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%04d", idx);
  return buf;
}

std::string jet_display_name(const JetSpec& spec) {
  std::string s = CoordRegistry::instance().info(spec.field).name;
  if (!spec.didx.empty() || spec.dtheta) {
    s += "_";
    for (int d : spec.didx) s += CoordRegistry::instance().info(d).name;
    if (spec.dtheta) s += "theta";
  }
  return s;
}

}  // namespace

int AtomTable::intern(AtomRec rec, const std::string& dedup_key) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(dedup_key);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(atoms_.size());
  atoms_.push_back(std::move(rec));
  index_[dedup_key] = id;
  return id;
}

int AtomTable::indep_atom(int coord) {
  const auto& info = CoordRegistry::instance().info(coord);
  if (info.kind != CoordKind::IndepEven && info.kind != CoordKind::IndepOdd)
    throw std::runtime_error("indep_atom: not an independent coordinate: " + info.name);
  AtomRec rec;
  rec.cls = AtomClass::Indep;
  rec.coord = coord;
  rec.odd = info.kind == CoordKind::IndepOdd;
  rec.sort_key = pad_index(coord) + info.name;
  return intern(std::move(rec), "i|" + info.name);
}

int AtomTable::const_atom(int coord) {
  const auto& info = CoordRegistry::instance().info(coord);
  if (info.kind != CoordKind::ConstEven)
    throw std::runtime_error("const_atom: not an even constant: " + info.name);
  AtomRec rec;
  rec.cls = AtomClass::Const;
  rec.coord = coord;
  rec.odd = false;
  rec.sort_key = pad_index(coord) + info.name;
  return intern(std::move(rec), "c|" + info.name);
}

int AtomTable::jet_atom(const JetSpec& spec) {
  const auto& info = CoordRegistry::instance().info(spec.field);
  if (info.kind != CoordKind::FieldEven && info.kind != CoordKind::FieldOdd)
    throw std::runtime_error("jet_atom: not a field: " + info.name);
  for (size_t i = 1; i < spec.didx.size(); ++i)
    if (spec.didx[i - 1] > spec.didx[i])
      throw std::runtime_error("jet_atom: derivative index not sorted");
  AtomRec rec;
  rec.cls = AtomClass::Jet;
  rec.jet = spec;
  bool field_odd = info.kind == CoordKind::FieldOdd;
  rec.odd = field_odd != spec.dtheta;
  std::string key = pad_index(spec.field);
  for (int d : spec.didx) key += "." + pad_index(d);
  if (spec.dtheta) key += ".th";
  rec.sort_key = key;
  return intern(std::move(rec), "j|" + key);
}

int AtomTable::func_atom(FuncKind kind, const SymExpr& arg) {
  if (arg.parity() != Parity::Even && !arg.is_zero())
    throw ParityError("func_atom: argument must be even");
  static const char* names[] = {"exp", "ln", "sin", "cos", "tan", "arctan", "pow"};
  AtomRec rec;
  rec.cls = AtomClass::Func;
  rec.fkind = kind;
  rec.farg = std::make_shared<SymExpr>(arg);
  rec.odd = false;
  std::string argstr = arg.str();
  rec.sort_key = std::string(names[static_cast<int>(kind)]) + "|" + argstr;
  return intern(std::move(rec), "f|" + rec.sort_key);
}

const AtomRec& AtomTable::rec(int id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return atoms_.at(static_cast<size_t>(id));
}

bool AtomTable::less(int a, int b) const {
  if (a == b) return false;
  const AtomRec &ra = rec(a), &rb = rec(b);
  if (ra.cls != rb.cls) return static_cast<int>(ra.cls) < static_cast<int>(rb.cls);
  return ra.sort_key < rb.sort_key;
}

std::string AtomTable::name(int id) const {
  const AtomRec& r = rec(id);
  switch (r.cls) {
    case AtomClass::Indep:
    case AtomClass::Const:
      return CoordRegistry::instance().info(r.coord).name;
    case AtomClass::Jet:
      return jet_display_name(r.jet);
    case AtomClass::Func: {
      static const char* names[] = {"exp", "ln", "sin", "cos", "tan", "arctan"};
      if (r.fkind == FuncKind::Pow) return "(" + r.farg->str() + ")";
      return std::string(names[static_cast<int>(r.fkind)]) + "(" + r.farg->str() + ")";
    }
  }
  return "?";
}

int atom_of_coord(const std::string& name) {
  int id = CoordRegistry::instance().lookup(name);
  if (id < 0) throw std::runtime_error("unknown coordinate: " + name);
  const auto& info = CoordRegistry::instance().info(id);
  if (info.kind == CoordKind::ConstEven) return AtomTable::instance().const_atom(id);
  if (info.kind == CoordKind::IndepEven || info.kind == CoordKind::IndepOdd)
    return AtomTable::instance().indep_atom(id);
  return AtomTable::instance().jet_atom(JetSpec{id, {}, false});
}

int atom_of_field(const std::string& field, const std::vector<std::string>& didx) {
  int f = CoordRegistry::instance().lookup(field);
  if (f < 0) throw std::runtime_error("unknown field: " + field);
  JetSpec spec;
  spec.field = f;
  for (const auto& d : didx) {
    if (d == "theta") {
      spec.dtheta = true;
      continue;
    }
    int c = CoordRegistry::instance().lookup(d);
    if (c < 0) throw std::runtime_error("unknown derivative variable: " + d);
    spec.didx.push_back(c);
  }
  std::sort(spec.didx.begin(), spec.didx.end());
  return AtomTable::instance().jet_atom(spec);
}

// ---------------------------------------------------------------------------
// Term ordering: per-part lexicographic, descending exponent vectors, so the
// leading (largest) term is map.begin().
// ---------------------------------------------------------------------------

namespace {

// three-way: -1 a<b, 0 equal, +1 a>b in *monomial* order
int cmp_gkey(const GKey& a, const GKey& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
      continue;
    }
    // smaller generator id present -> larger monomial
    return a[i] < b[j] ? 1 : -1;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

int cmp_odd(const std::vector<int>& a, const std::vector<int>& b) {
  auto& tab = AtomTable::instance();
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
      continue;
    }
    return tab.less(a[i], b[j]) ? 1 : -1;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

int cmp_even(const std::vector<std::pair<int, Rational>>& a,
             const std::vector<std::pair<int, Rational>>& b) {
  auto& tab = AtomTable::instance();
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i].first == b[j].first) {
      if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
      ++i;
      ++j;
      continue;
    }
    bool a_first;
    if (i >= a.size())
      a_first = false;
    else if (j >= b.size())
      a_first = true;
    else
      a_first = tab.less(a[i].first, b[j].first);
    if (a_first) {
      // a has the earlier atom with exponent q, b has 0 there
      if (a[i].second != 0) return a[i].second > 0 ? 1 : -1;
      ++i;
    } else {
      if (b[j].second != 0) return b[j].second > 0 ? -1 : 1;
      ++j;
    }
  }
  return 0;
}

}  // namespace

bool term_less(const Term& a, const Term& b) {
  // descending monomial order: "less" in the map means larger monomial first
  if (int c = cmp_gkey(a.gkey, b.gkey); c != 0) return c > 0;
  if (int c = cmp_odd(a.odd, b.odd); c != 0) return c > 0;
  return cmp_even(a.even, b.even) > 0;
}

// ---------------------------------------------------------------------------
// SymExpr construction and normalization
// ---------------------------------------------------------------------------

namespace {

bool even_atom_sorted(const std::vector<std::pair<int, Rational>>& v) {
  auto& tab = AtomTable::instance();
  for (size_t i = 1; i < v.size(); ++i)
    if (!tab.less(v[i - 1].first, v[i].first)) return false;
  return true;
}

void sort_even(std::vector<std::pair<int, Rational>>& v) {
  auto& tab = AtomTable::instance();
  std::sort(v.begin(), v.end(),
            [&](const auto& a, const auto& b) { return tab.less(a.first, b.first); });
  // merge duplicates
  std::vector<std::pair<int, Rational>> out;
  for (auto& p : v) {
    if (!out.empty() && out.back().first == p.first)
      out.back().second += p.second;
    else
      out.push_back(p);
  }
  v.clear();
  for (auto& p : out)
    if (p.second != 0) v.push_back(p);
}

}  // namespace

void SymExpr::add_term(Term t, const Rational& coeff) {
  if (coeff == 0) return;
  if (!even_atom_sorted(t.even)) sort_even(t.even);
  auto& tab = AtomTable::instance();

  // fold exp powers: exp(u)^q -> exp(q*u); merge multiple exp atoms
  {
    SymExpr combined_arg;
    bool have_exp = false;
    std::vector<std::pair<int, Rational>> kept;
    for (auto& [atom, q] : t.even) {
      const AtomRec& r = tab.rec(atom);
      if (r.cls == AtomClass::Func && r.fkind == FuncKind::Exp) {
        have_exp = true;
        combined_arg += SymExpr::constant(q) * (*r.farg);
      } else {
        kept.push_back({atom, q});
      }
    }
    if (have_exp) {
      t.even = std::move(kept);
      if (!combined_arg.is_zero()) {
        int ea = tab.func_atom(FuncKind::Exp, combined_arg);
        // insert keeping order
        t.even.push_back({ea, Rational(1)});
        sort_even(t.even);
      }
    }
  }

  // expand integer powers (>=1) of pow atoms
  for (size_t i = 0; i < t.even.size(); ++i) {
    const AtomRec& r = tab.rec(t.even[i].first);
    if (r.cls == AtomClass::Func && r.fkind == FuncKind::Pow &&
        is_integer(t.even[i].second) && t.even[i].second >= 1) {
      long long n = to_long(t.even[i].second);
      SymExpr base = *r.farg;
      Term rest = t;
      rest.even.erase(rest.even.begin() + static_cast<long>(i));
      SymExpr restx;
      restx.terms_[rest] = coeff;
      SymExpr prod = restx * base.pow_int(n);
      for (const auto& [tt, cc] : prod.terms_) {
        auto it = terms_.find(tt);
        if (it == terms_.end()) {
          if (cc != 0) terms_[tt] = cc;
        } else {
          it->second += cc;
          if (it->second == 0) terms_.erase(it);
        }
      }
      return;
    }
  }

  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_[std::move(t)] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymExpr SymExpr::constant(const Rational& q) {
  SymExpr e;
  if (q != 0) e.terms_[Term{}] = q;
  return e;
}

SymExpr SymExpr::atom(int atom_id) {
  const AtomRec& r = AtomTable::instance().rec(atom_id);
  SymExpr e;
  Term t;
  if (r.odd)
    t.odd.push_back(atom_id);
  else
    t.even.push_back({atom_id, Rational(1)});
  e.add_term(std::move(t), Rational(1));
  return e;
}

SymExpr SymExpr::atom_pow(int atom_id, const Rational& exponent) {
  const AtomRec& r = AtomTable::instance().rec(atom_id);
  if (r.odd) throw ParityError("atom_pow: odd atoms have no powers");
  if (exponent == 0) return one();
  SymExpr e;
  Term t;
  t.even.push_back({atom_id, exponent});
  e.add_term(std::move(t), Rational(1));
  return e;
}

SymExpr SymExpr::generator(int gen_id) {
  SymExpr e;
  Term t;
  t.gkey.push_back(gen_id);
  e.terms_[std::move(t)] = Rational(1);
  return e;
}

SymExpr SymExpr::func(FuncKind kind, const SymExpr& arg) {
  if (kind == FuncKind::Pow) throw std::runtime_error("use SymExpr::pow");
  if (kind == FuncKind::Exp && arg.is_zero()) return one();
  int id = AtomTable::instance().func_atom(kind, arg);
  return atom(id);
}

SymExpr SymExpr::operator+(const SymExpr& o) const {
  SymExpr r = *this;
  r += o;
  return r;
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
  for (const auto& [t, c] : o.terms_) {
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_[t] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymExpr SymExpr::operator-() const {
  SymExpr r = *this;
  for (auto& [t, c] : r.terms_) c = -c;
  return r;
}

SymExpr SymExpr::operator-(const SymExpr& o) const { return *this + (-o); }

namespace {

// Raw graded product of two normalized terms; returns false when the product
// annihilates. Does not normalize the even part.
bool raw_term_mul(const Term& a, const Rational& ca, const Term& b,
                  const Rational& cb, Term& out, Rational& cout) {
  int sign = 1;
  if ((a.odd.size() % 2) && (b.gkey.size() % 2)) sign = -sign;
  GKey gk;
  int s1 = merge_odd_sequences(a.gkey, b.gkey, gk);
  if (s1 == 0) return false;
  std::vector<int> od;
  int s2 = merge_odd_sequences(a.odd, b.odd, od);
  if (s2 == 0) return false;
  sign *= s1 * s2;
  out.gkey = std::move(gk);
  out.odd = std::move(od);
  out.even = a.even;
  out.even.insert(out.even.end(), b.even.begin(), b.even.end());
  cout = ca * cb;
  if (sign < 0) cout = -cout;
  return true;
}

}  // namespace

SymExpr SymExpr::operator*(const SymExpr& o) const {
  SymExpr r;
  for (const auto& [ta, ca] : terms_)
    for (const auto& [tb, cb] : o.terms_) {
      Term t;
      Rational c;
      if (!raw_term_mul(ta, ca, tb, cb, t, c)) continue;
      r.add_term(std::move(t), c);
    }
  return r;
}

SymExpr SymExpr::pow_int(long long n) const {
  if (n == 0) return one();
  if (n < 0) {
    if (terms_.size() == 1) {
      const auto& [t, c] = *terms_.begin();
      if (t.gkey.empty() && t.odd.empty()) {
        SymExpr r = one();
        Term nt;
        for (auto& [atom, q] : t.even) nt.even.push_back({atom, q * n});
        SymExpr e;
        e.add_term(std::move(nt), rational_pow(c, n));
        return e;
      }
    }
    return SymExpr::pow(*this, Rational(n));
  }
  SymExpr acc = one(), base = *this;
  unsigned long long m = static_cast<unsigned long long>(n);
  while (m) {
    if (m & 1) acc = acc * base;
    if (m >>= 1) base = base * base;
  }
  return acc;
}

namespace {

// rational q-th root helper for content extraction under fractional powers
std::optional<Rational> rational_root(const Rational& c, const Rational& q) {
  if (is_integer(q)) return rational_pow(c, to_long(q));
  if (c == 1) return Rational(1);
  if (c <= 0) return std::nullopt;
  // c^q with q = n/d: need exact d-th root of c
  long long den = denominator(q).convert_to<long long>();
  auto iroot = [&](const BigInt& v) -> std::optional<BigInt> {
    if (v == 1) return BigInt(1);
    BigInt lo = 1, hi = v;
    while (lo < hi) {
      BigInt mid = (lo + hi) / 2;
      BigInt p = 1;
      for (long long i = 0; i < den; ++i) {
        p *= mid;
        if (p > v) break;
      }
      if (p == v) return mid;
      if (p < v)
        lo = mid + 1;
      else
        hi = mid;
    }
    BigInt p = 1;
    for (long long i = 0; i < den; ++i) p *= lo;
    if (p == v) return lo;
    return std::nullopt;
  };
  auto rn = iroot(numerator(c));
  auto rd = iroot(denominator(c));
  if (!rn || !rd) return std::nullopt;
  Rational root(*rn, *rd);
  return rational_pow(root, numerator(q).convert_to<long long>());
}

}  // namespace

SymExpr SymExpr::pow(const SymExpr& base, const Rational& exponent) {
  if (exponent == 0) return one();
  if (base.is_zero()) {
    if (exponent > 0) return SymExpr();
    throw std::domain_error("pow: zero base with nonpositive exponent");
  }
  if (is_integer(exponent)) {
    long long n = to_long(exponent);
    if (n >= 1 || base.size() == 1) return base.pow_int(n);
  }
  // single even term: fold exponents when the coefficient has an exact root
  if (base.size() == 1) {
    const auto& [t, c] = *base.terms().begin();
    if (t.gkey.empty() && t.odd.empty()) {
      if (auto croot = rational_root(c, exponent)) {
        SymExpr e;
        Term nt;
        for (auto& [atom, q] : t.even) nt.even.push_back({atom, q * exponent});
        e.add_term(std::move(nt), *croot);
        return e;
      }
    }
  }
  // compound base: normalize leading sign and (for integer exponents) content
  SymExpr b = base;
  SymExpr outer = one();
  const auto& [lt, lc] = *b.terms().begin();
  if (is_integer(exponent)) {
    long long n = to_long(exponent);
    if (lc < 0) {
      b = -b;
      if (n % 2 != 0) outer = -outer;
    }
  } else if (lc < 0) {
    // leave fractional powers of negative-leading bases untouched
  }
  int id = AtomTable::instance().func_atom(FuncKind::Pow, b);
  return outer * atom_pow(id, exponent);
}

Parity SymExpr::parity() const {
  if (terms_.empty()) return Parity::Even;
  bool even = false, odd = false;
  for (const auto& [t, c] : terms_)
    (((t.gkey.size() + t.odd.size()) % 2) == 0 ? even : odd) = true;
  if (even && odd) return Parity::Mixed;
  return even ? Parity::Even : Parity::Odd;
}

bool SymExpr::has_func_atoms() const {
  for (const auto& [t, c] : terms_)
    for (const auto& [atom, q] : t.even)
      if (AtomTable::instance().rec(atom).cls == AtomClass::Func) return true;
  return false;
}

bool SymExpr::is_rational_polynomial() const {
  for (const auto& [t, c] : terms_)
    for (const auto& [atom, q] : t.even) {
      if (AtomTable::instance().rec(atom).cls == AtomClass::Func) return false;
      if (!is_integer(q)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string exponent_str(const Rational& q) {
  if (is_integer(q) && q > 1) return "^" + to_string(q);
  return "^(" + to_string(q) + ")";
}

std::string term_str(const Term& t, const Rational& coeff_abs) {
  std::vector<std::string> pieces;
  auto& tab = AtomTable::instance();
  auto& gr = GeneratorRegistry::instance();
  if (!(coeff_abs == 1) || (t.gkey.empty() && t.odd.empty() && t.even.empty()))
    pieces.push_back(to_string(coeff_abs));
  for (int g : t.gkey) pieces.push_back(gr.name(g));
  for (int a : t.odd) pieces.push_back(tab.name(a));
  for (const auto& [a, q] : t.even) {
    std::string s = tab.name(a);
    if (!(q == 1)) s += exponent_str(q);
    pieces.push_back(s);
  }
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i) out += "*";
    out += pieces[i];
  }
  return out;
}

}  // namespace

std::string SymExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    bool neg = c < 0;
    Rational ca = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_str(t, ca);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

namespace {

std::vector<int> default_field_args() {
  static std::vector<int> args = {CoordRegistry::instance().lookup("x"),
                                  CoordRegistry::instance().lookup("t")};
  return args;
}

SymExpr indep_derivative(int coord, int v, const DiffContext& ctx) {
  if (coord == v) return SymExpr::one();
  const auto& info = CoordRegistry::instance().info(coord);
  if (info.name == "sigma") {
    auto it = ctx.sigma_gradient.find(v);
    if (it != ctx.sigma_gradient.end()) return it->second;
    const auto& vi = CoordRegistry::instance().info(v);
    if (vi.name == "sigma") return SymExpr::one();
    throw std::runtime_error("total_derivative: sigma appears but no gradient for d/d" +
                             vi.name);
  }
  return SymExpr();
}

SymExpr atom_total_derivative(int atom_id, int v, const DiffContext& ctx);

SymExpr jet_total_derivative(const JetSpec& spec, int v, const DiffContext& ctx) {
  std::vector<int> args;
  auto it = ctx.field_args.find(spec.field);
  if (it != ctx.field_args.end())
    args = it->second;
  else
    args = default_field_args();
  SymExpr result;
  for (int a : args) {
    SymExpr da = indep_derivative(a, v, ctx);
    if (da.is_zero()) continue;
    JetSpec ns = spec;
    ns.didx.push_back(a);
    std::sort(ns.didx.begin(), ns.didx.end());
    result += SymExpr::atom(AtomTable::instance().jet_atom(ns)) * da;
  }
  return result;
}

SymExpr func_derivative_factor(const AtomRec& r, int v, const DiffContext& ctx) {
  // derivative of the atom value itself (chain rule factor included)
  SymExpr darg = r.farg->total_derivative(v, ctx);
  if (darg.is_zero()) return SymExpr();
  switch (r.fkind) {
    case FuncKind::Exp:
      return SymExpr::func(FuncKind::Exp, *r.farg) * darg;
    case FuncKind::Ln:
      return SymExpr::pow(*r.farg, Rational(-1)) * darg;
    case FuncKind::Sin:
      return SymExpr::func(FuncKind::Cos, *r.farg) * darg;
    case FuncKind::Cos:
      return -(SymExpr::func(FuncKind::Sin, *r.farg) * darg);
    case FuncKind::Tan: {
      SymExpr tanx = SymExpr::func(FuncKind::Tan, *r.farg);
      return (SymExpr::one() + tanx * tanx) * darg;
    }
    case FuncKind::Arctan: {
      SymExpr densum = SymExpr::one() + (*r.farg) * (*r.farg);
      return SymExpr::pow(densum, Rational(-1)) * darg;
    }
    case FuncKind::Pow:
      return darg;  // d(base); the exponent rule is applied by the caller
  }
  return SymExpr();
}

SymExpr atom_total_derivative(int atom_id, int v, const DiffContext& ctx) {
  const AtomRec& r = AtomTable::instance().rec(atom_id);
  switch (r.cls) {
    case AtomClass::Indep:
      if (r.odd) throw UnsupportedError("total_derivative: theta is not differentiable here");
      return indep_derivative(r.coord, v, ctx);
    case AtomClass::Const:
      return SymExpr();
    case AtomClass::Jet:
      return jet_total_derivative(r.jet, v, ctx);
    case AtomClass::Func:
      return func_derivative_factor(r, v, ctx);
  }
  return SymExpr();
}

SymExpr term_to_expr(const Term& t, const Rational& c) {
  SymExpr e;
  e.add_term(Term(t), c);
  return e;
}

}  // namespace

SymExpr SymExpr::total_derivative(int indep_coord, const DiffContext& ctx) const {
  const auto& vi = CoordRegistry::instance().info(indep_coord);
  if (vi.kind == CoordKind::IndepOdd)
    throw UnsupportedError("total_derivative with respect to theta: use the superfield module");
  if (vi.kind != CoordKind::IndepEven)
    throw std::runtime_error("total_derivative: not an independent variable: " + vi.name);

  SymExpr result;
  for (const auto& [t, c] : terms_) {
    // even factors
    for (size_t i = 0; i < t.even.size(); ++i) {
      auto [atom, q] = t.even[i];
      SymExpr da = atom_total_derivative(atom, indep_coord, ctx);
      if (da.is_zero()) continue;
      Term rest = t;
      if (q == 1)
        rest.even.erase(rest.even.begin() + static_cast<long>(i));
      else
        rest.even[i].second = q - 1;
      result += SymExpr::constant(q) * term_to_expr(rest, c) * da;
    }
    // odd factors: an even derivation passes through without signs
    for (size_t i = 0; i < t.odd.size(); ++i) {
      const AtomRec& r = AtomTable::instance().rec(t.odd[i]);
      if (r.cls != AtomClass::Jet) continue;
      SymExpr da = jet_total_derivative(r.jet, indep_coord, ctx);
      if (da.is_zero()) continue;
      // rebuild as (prefix) * da * (suffix)
      Term pre = t;
      pre.odd.assign(t.odd.begin(), t.odd.begin() + static_cast<long>(i));
      Term suf;
      suf.odd.assign(t.odd.begin() + static_cast<long>(i) + 1, t.odd.end());
      result += term_to_expr(pre, c) * da * term_to_expr(suf, Rational(1));
    }
  }
  return result;
}

namespace {

// partial of a single atom's value with respect to target atom
SymExpr atom_partial(int atom_id, int target) {
  if (atom_id == target) return SymExpr::one();
  const AtomRec& r = AtomTable::instance().rec(atom_id);
  if (r.cls != AtomClass::Func) return SymExpr();
  SymExpr darg = r.farg->partial(target);
  if (darg.is_zero()) return SymExpr();
  switch (r.fkind) {
    case FuncKind::Exp:
      return SymExpr::func(FuncKind::Exp, *r.farg) * darg;
    case FuncKind::Ln:
      return SymExpr::pow(*r.farg, Rational(-1)) * darg;
    case FuncKind::Sin:
      return SymExpr::func(FuncKind::Cos, *r.farg) * darg;
    case FuncKind::Cos:
      return -(SymExpr::func(FuncKind::Sin, *r.farg) * darg);
    case FuncKind::Tan: {
      SymExpr tanx = SymExpr::func(FuncKind::Tan, *r.farg);
      return (SymExpr::one() + tanx * tanx) * darg;
    }
    case FuncKind::Arctan:
      return SymExpr::pow(SymExpr::one() + (*r.farg) * (*r.farg), Rational(-1)) * darg;
    case FuncKind::Pow:
      return darg;
  }
  return SymExpr();
}

}  // namespace

SymExpr SymExpr::partial(int atom_id) const {
  const AtomRec& tr = AtomTable::instance().rec(atom_id);
  SymExpr result;
  for (const auto& [t, c] : terms_) {
    if (tr.odd) {
      for (size_t i = 0; i < t.odd.size(); ++i) {
        if (t.odd[i] != atom_id) continue;
        int sign = ((t.gkey.size() + i) % 2) ? -1 : 1;
        Term rest = t;
        rest.odd.erase(rest.odd.begin() + static_cast<long>(i));
        result += term_to_expr(rest, sign < 0 ? Rational(-c) : c);
        break;  // odd atoms are distinct within a term
      }
      continue;
    }
    for (size_t i = 0; i < t.even.size(); ++i) {
      auto [atom, q] = t.even[i];
      SymExpr da = atom_partial(atom, atom_id);
      if (da.is_zero()) continue;
      Term rest = t;
      if (q == 1)
        rest.even.erase(rest.even.begin() + static_cast<long>(i));
      else
        rest.even[i].second = q - 1;
      result += SymExpr::constant(q) * term_to_expr(rest, c) * da;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

namespace {

SymExpr value_power(const SymExpr& value, const Rational& q) {
  if (q == 1) return value;
  if (is_integer(q)) return value.pow_int(to_long(q));
  return SymExpr::pow(value, q);
}

}  // namespace

SymExpr SymExpr::substitute(const std::map<int, SymExpr>& map,
                            bool enforce_parity) const {
  if (enforce_parity)
    for (const auto& [atom, value] : map) {
      const AtomRec& r = AtomTable::instance().rec(atom);
      Parity p = value.parity();
      if (r.odd && p != Parity::Odd && !value.is_zero())
        throw ParityError("substitute: odd atom requires homogeneous odd value");
      if (!r.odd && p != Parity::Even && !value.is_zero())
        throw ParityError("substitute: even atom requires even value");
    }
  auto& tab = AtomTable::instance();
  SymExpr result;
  for (const auto& [t, c] : terms_) {
    SymExpr acc;
    Term gens;
    gens.gkey = t.gkey;
    acc.add_term(std::move(gens), c);
    for (const auto& [atom, q] : t.even) {
      const AtomRec& r = tab.rec(atom);
      auto it = map.find(atom);
      if (it != map.end()) {
        acc = acc * value_power(it->second, q);
        continue;
      }
      if (r.cls == AtomClass::Func) {
        SymExpr narg = r.farg->substitute(map, enforce_parity);
        if (!(narg.str() == r.farg->str())) {
          // rebuild the function atom on the substituted argument
          if (r.fkind == FuncKind::Pow) {
            acc = acc * SymExpr::pow(narg, q);
          } else if (r.fkind == FuncKind::Exp) {
            acc = acc * value_power(SymExpr::func(FuncKind::Exp, narg), q);
          } else {
            int na = tab.func_atom(r.fkind, narg);
            acc = acc * SymExpr::atom_pow(na, q);
          }
          continue;
        }
      }
      acc = acc * SymExpr::atom_pow(atom, q);
    }
    for (int atom : t.odd) {
      auto it = map.find(atom);
      if (it != map.end())
        acc = acc * it->second;
      else
        acc = acc * SymExpr::atom(atom);
    }
    result += acc;
  }
  return result;
}

SymExpr SymExpr::substitute_fields(const std::map<int, SymExpr>& field_values,
                                   const DiffContext& ctx,
                                   bool enforce_parity) const {
  auto& tab = AtomTable::instance();
  std::map<int, SymExpr> atom_map;
  std::map<std::pair<int, std::vector<int>>, SymExpr> memo;
  // collect jet atoms of targeted fields (top level and inside func args)
  std::vector<const SymExpr*> stack = {this};
  std::set<int> seen_atoms;
  while (!stack.empty()) {
    const SymExpr* e = stack.back();
    stack.pop_back();
    for (const auto& [t, c] : e->terms_) {
      std::vector<int> all;
      for (auto& [a, q] : t.even) all.push_back(a);
      for (int a : t.odd) all.push_back(a);
      for (int a : all) {
        if (!seen_atoms.insert(a).second) continue;
        const AtomRec& r = tab.rec(a);
        if (r.cls == AtomClass::Func) {
          stack.push_back(r.farg.get());
          continue;
        }
        if (r.cls != AtomClass::Jet) continue;
        auto fit = field_values.find(r.jet.field);
        if (fit == field_values.end()) continue;
        if (r.jet.dtheta)
          throw UnsupportedError("substitute_fields: theta-derivative atoms unsupported");
        auto key = std::make_pair(r.jet.field, r.jet.didx);
        auto mit = memo.find(key);
        if (mit == memo.end()) {
          SymExpr v = fit->second;
          for (int d : r.jet.didx) v = v.total_derivative(d, ctx);
          mit = memo.emplace(key, std::move(v)).first;
        }
        atom_map[a] = mit->second;
      }
    }
  }
  if (atom_map.empty()) return *this;
  return substitute(atom_map, enforce_parity);
}

SymExpr SymExpr::substitute_generators(const std::map<int, ExactGrassmann>& map) const {
  SymExpr result;
  for (const auto& [t, c] : terms_) {
    ExactGrassmann mono(Rational(1));
    bool touched = false;
    for (int g : t.gkey) {
      auto it = map.find(g);
      if (it != map.end()) {
        mono = mono * it->second;
        touched = true;
      } else {
        mono = mono * ExactGrassmann::generator(g);
      }
    }
    if (!touched) {
      result.add_term(Term(t), c);
      continue;
    }
    for (const auto& [key, q] : mono.terms()) {
      Term nt = t;
      nt.gkey = key;
      result.add_term(std::move(nt), c * q);
    }
  }
  return result;
}

SymExpr SymExpr::drop_generator_pair(int g1, int g2) const {
  SymExpr result;
  for (const auto& [t, c] : terms_) {
    bool has1 = std::binary_search(t.gkey.begin(), t.gkey.end(), g1);
    bool has2 = std::binary_search(t.gkey.begin(), t.gkey.end(), g2);
    if (has1 && has2) continue;
    result.add_term(Term(t), c);
  }
  return result;
}

SymExpr SymExpr::drop_odd_atom_pair(int a1, int a2) const {
  SymExpr result;
  for (const auto& [t, c] : terms_) {
    bool has1 = std::find(t.odd.begin(), t.odd.end(), a1) != t.odd.end();
    bool has2 = std::find(t.odd.begin(), t.odd.end(), a2) != t.odd.end();
    if (has1 && has2) continue;
    result.add_term(Term(t), c);
  }
  return result;
}

SymExpr SymExpr::rewrite_generator_product(int gfirst, int gsecond,
                                           const SymExpr& value) const {
  if (value.parity() != Parity::Even && !value.is_zero())
    throw ParityError("rewrite_generator_product: value must be even");
  int a = std::min(gfirst, gsecond), b = std::max(gfirst, gsecond);
  bool reversed = gfirst > gsecond;  // stored pair (a,b); relation is gfirst*gsecond
  SymExpr result;
  for (const auto& [t, c] : terms_) {
    bool has1 = std::binary_search(t.gkey.begin(), t.gkey.end(), a);
    bool has2 = std::binary_search(t.gkey.begin(), t.gkey.end(), b);
    if (!(has1 && has2)) {
      result.add_term(Term(t), c);
      continue;
    }
    GKey pair = {a, b};
    GKey rest;
    for (int g : t.gkey)
      if (g != a && g != b) rest.push_back(g);
    GKey merged;
    int sign = merge_odd_sequences(pair, rest, merged);  // pair^rest = sign * sorted
    // monomial = sign * (a^b) ^ rest ; relation: gfirst^gsecond = value
    Rational coeff = c;
    if (sign < 0) coeff = -coeff;
    if (reversed) coeff = -coeff;  // a^b = -(gfirst^gsecond)
    Term nt = t;
    nt.gkey = rest;
    result += term_to_expr(nt, coeff) * value;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Clearing and zero tests
// ---------------------------------------------------------------------------

Rational min_exponent(const SymExpr& e, int atom_id) {
  bool first = true;
  Rational m(0);
  for (const auto& [t, c] : e.terms()) {
    Rational q(0);
    for (const auto& [a, qq] : t.even)
      if (a == atom_id) q = qq;
    if (first) {
      m = q;
      first = false;
    } else if (q < m) {
      m = q;
    }
  }
  return m;
}

Cleared clear_denominators(const SymExpr& e) {
  Cleared out;
  out.expr = e;
  auto& tab = AtomTable::instance();
  for (int round = 0; round < 64; ++round) {
    int worst_atom = -1;
    Rational worst_q(0);
    for (const auto& [t, c] : out.expr.terms())
      for (const auto& [a, q] : t.even) {
        if (q >= 0) continue;
        if (tab.rec(a).cls != AtomClass::Func) continue;
        if (worst_atom == -1 || q < worst_q) {
          worst_atom = a;
          worst_q = q;
        }
      }
    if (worst_atom == -1) return out;
    Rational mult = -worst_q;
    // multiply termwise so the exponent merges before any expansion
    SymExpr next;
    for (const auto& [t, c] : out.expr.terms()) {
      Term nt = t;
      nt.even.push_back({worst_atom, mult});
      next.add_term(std::move(nt), c);
    }
    out.expr = std::move(next);
    out.factors.push_back(tab.name(worst_atom) + exponent_str(mult));
  }
  throw std::runtime_error("clear_denominators: did not stabilize");
}

ZeroResult is_zero_symbolic(const SymExpr& e) {
  ZeroResult res;
  if (e.is_zero()) {
    res.zero = true;
    return res;
  }
  Cleared cl = clear_denominators(e);
  res.cleared_factors = cl.factors;
  if (cl.expr.is_zero()) {
    res.zero = true;
    return res;
  }
  if (cl.expr.has_func_atoms())
    throw TierError(
        "is_zero: symbolic tier cannot certify a nonzero verdict for "
        "non-rational expressions; use the numeric tier");
  res.zero = false;
  const auto& [t, c] = *cl.expr.terms().begin();
  res.witness = "leading term: " + (SymExpr::constant(c) * term_to_expr(t, Rational(1))).str();
  return res;
}

// ---------------------------------------------------------------------------
// Numeric evaluation
// ---------------------------------------------------------------------------

namespace {

double eval_scalar(const SymExpr& e, const std::map<int, double>& values);

double eval_atom(int atom_id, const std::map<int, double>& values) {
  auto it = values.find(atom_id);
  if (it != values.end()) return it->second;
  const AtomRec& r = AtomTable::instance().rec(atom_id);
  switch (r.cls) {
    case AtomClass::Indep:
    case AtomClass::Const:
      throw EvalError("eval: unbound symbol " + AtomTable::instance().name(atom_id));
    case AtomClass::Jet:
      throw EvalError("eval: jet atom cannot be sampled: " +
                      AtomTable::instance().name(atom_id));
    case AtomClass::Func: {
      double a = eval_scalar(*r.farg, values);
      switch (r.fkind) {
        case FuncKind::Exp:
          return std::exp(a);
        case FuncKind::Ln:
          if (a <= 0) throw EvalError("eval: ln of nonpositive value");
          return std::log(a);
        case FuncKind::Sin:
          return std::sin(a);
        case FuncKind::Cos:
          return std::cos(a);
        case FuncKind::Tan:
          return std::tan(a);
        case FuncKind::Arctan:
          return std::atan(a);
        case FuncKind::Pow:
          return a;  // exponent handled by the caller
      }
    }
  }
  throw EvalError("eval: unreachable");
}

double apply_exponent(double base, const Rational& q, const std::string& what) {
  if (is_integer(q)) {
    double r = std::pow(base, static_cast<double>(to_long(q)));
    if (!std::isfinite(r)) throw EvalError("eval: nonfinite power of " + what);
    return r;
  }
  if (base < 0) throw EvalError("eval: fractional power of negative " + what);
  if (base == 0 && q < 0) throw EvalError("eval: negative power of zero " + what);
  double r = std::pow(base, to_double(q));
  if (!std::isfinite(r)) throw EvalError("eval: nonfinite power of " + what);
  return r;
}

double eval_scalar(const SymExpr& e, const std::map<int, double>& values) {
  double sum = 0;
  for (const auto& [t, c] : e.terms()) {
    if (!t.gkey.empty() || !t.odd.empty())
      throw EvalError("eval: function argument must be a pure scalar");
    double v = to_double(c);
    for (const auto& [a, q] : t.even)
      v *= apply_exponent(eval_atom(a, values), q, AtomTable::instance().name(a));
    sum += v;
  }
  return sum;
}

}  // namespace

FloatGrassmann eval_numeric(const SymExpr& e, const std::map<int, double>& values) {
  FloatGrassmann out;
  for (const auto& [t, c] : e.terms()) {
    if (!t.odd.empty())
      throw EvalError("eval: odd jet atom remains: " +
                      AtomTable::instance().name(t.odd.front()));
    double v = to_double(c);
    for (const auto& [a, q] : t.even)
      v *= apply_exponent(eval_atom(a, values), q, AtomTable::instance().name(a));
    out.accumulate(t.gkey, v);
  }
  return out;
}

ZeroResult is_zero_numeric(const SymExpr& e, const NumericSpec& spec) {
  ZeroResult res;
  if (e.is_zero()) {
    res.zero = true;
    return res;
  }
  // gather free symbols (recursing into function arguments)
  std::set<int> free;
  {
    std::vector<const SymExpr*> stack = {&e};
    for (const auto& d : spec.domain_constraints) stack.push_back(&d);
    std::set<const SymExpr*> visited;
    while (!stack.empty()) {
      const SymExpr* cur = stack.back();
      stack.pop_back();
      for (const auto& [t, c] : cur->terms()) {
        if (!t.odd.empty())
          throw EvalError("is_zero_numeric: odd jet atom remains: " +
                          AtomTable::instance().name(t.odd.front()));
        for (const auto& [a, q] : t.even) {
          const AtomRec& r = AtomTable::instance().rec(a);
          if (r.cls == AtomClass::Func)
            stack.push_back(r.farg.get());
          else if (spec.fixed.count(a))
            continue;
          else if (r.cls == AtomClass::Jet)
            throw EvalError("is_zero_numeric: jet atom remains: " +
                            AtomTable::instance().name(a));
          else
            free.insert(a);
        }
      }
    }
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> dist(spec.lo, spec.hi);
  for (int pt = 0; pt < spec.points; ++pt) {
    std::map<int, double> values = spec.fixed;
    bool ok = false;
    for (int attempt = 0; attempt < spec.max_resample; ++attempt) {
      for (int a : free) values[a] = dist(rng);
      ok = true;
      for (const auto& d : spec.domain_constraints) {
        try {
          if (eval_scalar(d, values) <= 0) {
            ok = false;
            break;
          }
        } catch (const EvalError&) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    if (!ok) {
      res.zero = false;
      res.witness = "could not sample a point satisfying the domain constraints";
      return res;
    }
    // evaluate per Grassmann component with term-magnitude tracking
    std::map<GKey, double> sums;
    std::map<GKey, double> maxmag;
    try {
      for (const auto& [t, c] : e.terms()) {
        double v = to_double(c);
        for (const auto& [a, q] : t.even)
          v *= apply_exponent(eval_atom(a, values), q, AtomTable::instance().name(a));
        sums[t.gkey] += v;
        maxmag[t.gkey] = std::max(maxmag[t.gkey], std::fabs(v));
      }
    } catch (const EvalError& err) {
      res.zero = false;
      res.witness = std::string("evaluation fault: ") + err.what();
      return res;
    }
    for (const auto& [key, s] : sums) {
      double scale = 1.0 + maxmag[key];
      if (std::fabs(s) > spec.tol * scale) {
        res.zero = false;
        std::ostringstream os;
        os << "point " << pt << ", component ";
        if (key.empty())
          os << "1";
        else
          for (int g : key) os << GeneratorRegistry::instance().name(g);
        os << ": residual " << s << " (scale " << scale << ")";
        res.witness = os.str();
        return res;
      }
    }
  }
  res.zero = true;
  return res;
}

// ---------------------------------------------------------------------------
// Exact division and power rewriting
// ---------------------------------------------------------------------------

std::optional<SymExpr> exact_divide(const SymExpr& e, const SymExpr& divisor,
                                    int max_steps) {
  if (divisor.is_zero()) return std::nullopt;
  if (e.is_zero()) return SymExpr();
  SymExpr rem = e;
  SymExpr quotient;
  const Term dt = divisor.terms().begin()->first;
  const Rational dc = divisor.terms().begin()->second;
  bool have_prev = false;
  Term prev_lt;
  for (int step = 0; step < 20000 && !rem.is_zero(); ++step) {
    const Term rt = rem.terms().begin()->first;
    const Rational rc = rem.terms().begin()->second;
    if (have_prev && !term_less(prev_lt, rt)) return std::nullopt;  // no progress
    prev_lt = rt;
    have_prev = true;
    // structural candidate: rt / dt
    Term q;
    {
      // gkey difference
      size_t i = 0;
      for (int g : rt.gkey) {
        if (i < dt.gkey.size() && dt.gkey[i] == g) {
          ++i;
          continue;
        }
        q.gkey.push_back(g);
      }
      if (i != dt.gkey.size()) return std::nullopt;
    }
    {
      size_t i = 0;
      for (int a : rt.odd) {
        if (i < dt.odd.size() && dt.odd[i] == a) {
          ++i;
          continue;
        }
        q.odd.push_back(a);
      }
      if (i != dt.odd.size()) return std::nullopt;
    }
    {
      // even exponent difference (Laurent: always possible)
      std::map<int, Rational> exps;
      for (const auto& [a, qq] : rt.even) exps[a] += qq;
      for (const auto& [a, qq] : dt.even) exps[a] -= qq;
      for (const auto& [a, qq] : exps)
        if (qq != 0) q.even.push_back({a, qq});
      sort_even(q.even);
    }
    // fix the coefficient by one raw multiplication
    Term probe;
    Rational pc;
    if (!raw_term_mul(q, Rational(1), dt, dc, probe, pc)) return std::nullopt;
    Rational qc = rc / pc;
    SymExpr qe;
    qe.add_term(std::move(q), qc);
    // integer-power expansion inside add_term would break the structural
    // correspondence; detect and bail out (cannot occur for our catalogs)
    if (qe.size() != 1) return std::nullopt;
    quotient += qe;
    rem = rem - qe * divisor;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quotient;
}

SymExpr rewrite_power(const SymExpr& e, int atom_id, long long power,
                      const SymExpr& value) {
  SymExpr cur = e;
  for (int round = 0; round < 512; ++round) {
    bool changed = false;
    SymExpr next;
    for (const auto& [t, c] : cur.terms()) {
      Rational q(0);
      size_t pos = 0;
      bool found = false;
      for (size_t i = 0; i < t.even.size(); ++i)
        if (t.even[i].first == atom_id) {
          q = t.even[i].second;
          pos = i;
          found = true;
          break;
        }
      if (!found || !is_integer(q) || to_long(q) < power) {
        next.add_term(Term(t), c);
        continue;
      }
      changed = true;
      Term nt = t;
      Rational nq = q - power;
      if (nq == 0)
        nt.even.erase(nt.even.begin() + static_cast<long>(pos));
      else
        nt.even[pos].second = nq;
      next += term_to_expr(nt, c) * value;
    }
    if (!changed) return next;
    cur = std::move(next);
  }
  throw std::runtime_error("rewrite_power: did not stabilize");
}

}  // namespace hydrosym
