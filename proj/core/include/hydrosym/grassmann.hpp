#pragma once

#include <hydrosym/rational.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hydrosym {

// Sorted, strictly increasing generator-id sequence. The empty key is the
// scalar (body) part of an element.
using GKey = std::vector<int>;

struct KindMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Parity { Even, Odd, Mixed };

// Process-wide registry of odd generators. Registration order fixes the
// canonical sign reference for every product in the algebra, so the registry
// is append-only and ids are never reused.
class GeneratorRegistry {
 public:
  static GeneratorRegistry& instance();

  // Returns the existing id when the name is already registered.
  int register_generator(const std::string& name);
  int lookup(const std::string& name) const;  // -1 when absent
  const std::string& name(int id) const;
  int size() const;

 private:
  GeneratorRegistry() = default;
  mutable std::mutex mu_;
  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
};

// Sorts `ids` in place, returns the sign of the permutation (+1/-1), or 0
// when a generator repeats (the monomial annihilates).
int normalize_odd_sequence(std::vector<int>& ids);

// Merge two already-sorted odd sequences, counting crossings. Returns 0 on a
// repeated id.
int merge_odd_sequences(const std::vector<int>& a, const std::vector<int>& b,
                        std::vector<int>& out);

enum class ScalarKind { Exact, Float };

template <class S>
class BasicGrassmann {
 public:
  BasicGrassmann() = default;
  explicit BasicGrassmann(const S& scalar) {
    if (!(scalar == S{})) terms_[GKey{}] = scalar;
  }
  static BasicGrassmann generator(int id) {
    BasicGrassmann g;
    g.terms_[GKey{id}] = S(1);
    return g;
  }
  static BasicGrassmann monomial(GKey key, const S& coeff) {
    BasicGrassmann g;
    int sign = normalize_odd_sequence(key);
    if (sign != 0 && !(coeff == S{})) terms_assign(g.terms_, key, sign < 0 ? S(-coeff) : coeff);
    return g;
  }

  const std::map<GKey, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const GKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? S{} : it->second;
  }

  BasicGrassmann operator+(const BasicGrassmann& o) const {
    BasicGrassmann r = *this;
    for (const auto& [k, c] : o.terms_) r.accumulate(k, c);
    return r;
  }
  BasicGrassmann operator-() const {
    BasicGrassmann r = *this;
    for (auto& [k, c] : r.terms_) c = S(-c);
    return r;
  }
  BasicGrassmann operator-(const BasicGrassmann& o) const { return *this + (-o); }

  BasicGrassmann operator*(const BasicGrassmann& o) const {
    BasicGrassmann r;
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) {
        GKey merged;
        int sign = merge_odd_sequences(ka, kb, merged);
        if (sign == 0) continue;
        S c = ca * cb;
        r.accumulate(merged, sign < 0 ? S(-c) : c);
      }
    return r;
  }

  Parity parity() const {
    if (terms_.empty()) return Parity::Even;
    bool even = false, odd = false;
    for (const auto& [k, c] : terms_) (k.size() % 2 == 0 ? even : odd) = true;
    if (even && odd) return Parity::Mixed;
    return even ? Parity::Even : Parity::Odd;
  }

  void accumulate(const GKey& key, const S& c) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (!(c == S{})) terms_[key] = c;
      return;
    }
    it->second += c;
    if (it->second == S{}) terms_.erase(it);
  }

 private:
  static void terms_assign(std::map<GKey, S>& m, const GKey& k, const S& c) { m[k] = c; }
  std::map<GKey, S> terms_;
};

using ExactGrassmann = BasicGrassmann<Rational>;
using FloatGrassmann = BasicGrassmann<double>;

// Runtime-kinded element of the exterior algebra: exact rational scalars for
// the symbolic verification paths, doubles for numeric sampling. Mixing kinds
// in one operation is a KindMismatchError.
class GrassmannElement {
 public:
  GrassmannElement() : kind_(ScalarKind::Exact) {}
  explicit GrassmannElement(ExactGrassmann e) : kind_(ScalarKind::Exact), exact_(std::move(e)) {}
  explicit GrassmannElement(FloatGrassmann f) : kind_(ScalarKind::Float), flt_(std::move(f)) {}

  static GrassmannElement scalar(const Rational& q) { return GrassmannElement(ExactGrassmann(q)); }
  static GrassmannElement scalar(double d) { return GrassmannElement(FloatGrassmann(d)); }
  static GrassmannElement generator(int id, ScalarKind kind = ScalarKind::Exact) {
    return kind == ScalarKind::Exact ? GrassmannElement(ExactGrassmann::generator(id))
                                     : GrassmannElement(FloatGrassmann::generator(id));
  }

  ScalarKind kind() const { return kind_; }
  const ExactGrassmann& exact() const { return exact_; }
  const FloatGrassmann& flt() const { return flt_; }
  bool is_zero() const {
    return kind_ == ScalarKind::Exact ? exact_.is_zero() : flt_.is_zero();
  }
  Parity parity() const {
    return kind_ == ScalarKind::Exact ? exact_.parity() : flt_.parity();
  }

  std::string str() const;

 private:
  ScalarKind kind_;
  ExactGrassmann exact_;
  FloatGrassmann flt_;
};

GrassmannElement gadd(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b);
Parity parity(const GrassmannElement& a);

// Simultaneous substitution of odd generators by homogeneous odd elements.
// An even-valued (or mixed) substitution raises ParityError.
GrassmannElement gsubstitute(const GrassmannElement& a,
                             const std::map<int, GrassmannElement>& assignment);
ExactGrassmann gsubstitute(const ExactGrassmann& a,
                           const std::map<int, ExactGrassmann>& assignment);

}  // namespace hydrosym
