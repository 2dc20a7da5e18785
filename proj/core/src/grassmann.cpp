#include <hydrosym/grassmann.hpp>

#include <algorithm>
#include <sstream>

namespace hydrosym {

GeneratorRegistry& GeneratorRegistry::instance() {
  static GeneratorRegistry reg;
  return reg;
}

int GeneratorRegistry::register_generator(const std::string& name) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  int id = static_cast<int>(names_.size());
  names_.push_back(name);
  ids_[name] = id;
  return id;
}

int GeneratorRegistry::lookup(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ids_.find(name);
  return it == ids_.end() ? -1 : it->second;
}

const std::string& GeneratorRegistry::name(int id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return names_.at(static_cast<size_t>(id));
}

int GeneratorRegistry::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<int>(names_.size());
}

int normalize_odd_sequence(std::vector<int>& ids) {
  // Insertion sort with transposition counting; sequences are short.
  int sign = 1;
  for (size_t i = 1; i < ids.size(); ++i) {
    int v = ids[i];
    size_t j = i;
    while (j > 0 && ids[j - 1] > v) {
      ids[j] = ids[j - 1];
      --j;
      sign = -sign;
    }
    ids[j] = v;
  }
  for (size_t i = 1; i < ids.size(); ++i)
    if (ids[i] == ids[i - 1]) return 0;
  return sign;
}

int merge_odd_sequences(const std::vector<int>& a, const std::vector<int>& b,
                        std::vector<int>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining a-elements.
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return sign;
}

GrassmannElement gadd(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.kind() != b.kind())
    throw KindMismatchError("gadd: mixed exact/float scalar kinds");
  if (a.kind() == ScalarKind::Exact) return GrassmannElement(a.exact() + b.exact());
  return GrassmannElement(a.flt() + b.flt());
}

GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.kind() != b.kind())
    throw KindMismatchError("gmul: mixed exact/float scalar kinds");
  if (a.kind() == ScalarKind::Exact) return GrassmannElement(a.exact() * b.exact());
  return GrassmannElement(a.flt() * b.flt());
}

Parity parity(const GrassmannElement& a) { return a.parity(); }

namespace {

template <class S>
BasicGrassmann<S> substitute_impl(const BasicGrassmann<S>& a,
                                  const std::map<int, BasicGrassmann<S>>& assignment) {
  for (const auto& [id, value] : assignment) {
    (void)id;
    if (value.parity() != Parity::Odd && !value.is_zero())
      throw ParityError("gsubstitute: substituted value must be homogeneous odd");
  }
  BasicGrassmann<S> result;
  for (const auto& [key, coeff] : a.terms()) {
    BasicGrassmann<S> monomial(coeff);
    for (int id : key) {
      auto it = assignment.find(id);
      if (it == assignment.end())
        monomial = monomial * BasicGrassmann<S>::generator(id);
      else
        monomial = monomial * it->second;
    }
    result = result + monomial;
  }
  return result;
}

}  // namespace

ExactGrassmann gsubstitute(const ExactGrassmann& a,
                           const std::map<int, ExactGrassmann>& assignment) {
  return substitute_impl(a, assignment);
}

GrassmannElement gsubstitute(const GrassmannElement& a,
                             const std::map<int, GrassmannElement>& assignment) {
  if (a.kind() == ScalarKind::Exact) {
    std::map<int, ExactGrassmann> sub;
    for (const auto& [id, v] : assignment) {
      if (v.kind() != ScalarKind::Exact)
        throw KindMismatchError("gsubstitute: mixed scalar kinds");
      sub.emplace(id, v.exact());
    }
    return GrassmannElement(substitute_impl(a.exact(), sub));
  }
  std::map<int, FloatGrassmann> sub;
  for (const auto& [id, v] : assignment) {
    if (v.kind() != ScalarKind::Float)
      throw KindMismatchError("gsubstitute: mixed scalar kinds");
    sub.emplace(id, v.flt());
  }
  return GrassmannElement(substitute_impl(a.flt(), sub));
}

namespace {

template <class S, class Fmt>
std::string str_impl(const BasicGrassmann<S>& g, Fmt fmt) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : g.terms()) {
    if (!first) os << " + ";
    first = false;
    os << fmt(coeff);
    for (int id : key) os << "*" << GeneratorRegistry::instance().name(id);
  }
  return os.str();
}

}  // namespace

std::string GrassmannElement::str() const {
  if (kind_ == ScalarKind::Exact)
    return str_impl(exact_, [](const Rational& q) { return to_string(q); });
  return str_impl(flt_, [](double d) { return std::to_string(d); });
}

}  // namespace hydrosym
