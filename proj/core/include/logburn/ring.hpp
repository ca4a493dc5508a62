#pragma once

// Graded ring of classes of varieties with logarithmic volume forms, as a
// free module over canonical generators.
//
// A generator is a sorted multiset of atoms together with an exponent of
// eps (the point with form -1) and a power of T (the class of (k(t), dt/t)).
// The relations eps^2 = 1, eps*T = T and a*b = eps^(mn) * b*a (a, b of
// dimensions m, n) are structural: every Generator value is already in
// normal form, so the product of two generators is again a generator.

#include "logburn/dyadic.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logburn {

/// Opaque birational class [K, omega] with a chosen reference form.
struct Atom {
  std::string id;
  int dim = 0;
  /// The class admits an automorphism sending omega to -omega, so eps*a = a.
  bool eps_self_dual = false;
  /// Order of a mu_d decoration (equivariant classes); absent means none.
  std::optional<int> mu_order;

  friend bool operator==(const Atom&, const Atom&) = default;
};

using AtomPtr = std::shared_ptr<const Atom>;

/// Set of declared atoms, keyed by id.
class AtomRegistry {
 public:
  /// Registers `atom`. Re-declaring an identical atom returns the existing
  /// handle; a conflicting declaration throws RegistryError.
  AtomPtr declare(Atom atom);
  AtomPtr declare(const AtomPtr& atom);
  AtomPtr find(std::string_view id) const;
  /// Like find() but throws RegistryError for unknown ids.
  AtomPtr at(std::string_view id) const;
  void merge(const AtomRegistry& other);
  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }
  const std::map<std::string, AtomPtr, std::less<>>& atoms() const noexcept { return atoms_; }

 private:
  std::map<std::string, AtomPtr, std::less<>> atoms_;
};

/// An atom occurrence before normalization; `negated` stands for [X, -omega].
struct RawAtom {
  AtomPtr atom;
  bool negated = false;
};

class Generator {
 public:
  /// The unit 1 = [Spec k, 1].
  Generator() = default;

  static Generator unit() { return {}; }
  static Generator epsilon();
  static Generator T(int power = 1);
  static Generator of(AtomPtr atom);

  /// Sorts atoms lexicographically by id, folding per-atom sign flags and the
  /// eps^(mn) transposition signs into the eps exponent.
  static Generator normalize(std::span<const RawAtom> raw, int eps, int tpow);
  /// Same, resolving ids through `registry` (RegistryError for unknown ids).
  static Generator normalize(const AtomRegistry& registry,
                             std::span<const std::pair<std::string, bool>> raw, int eps,
                             int tpow);

  const std::vector<AtomPtr>& atoms() const noexcept { return atoms_; }
  int eps() const noexcept { return eps_; }
  int tpow() const noexcept { return tpow_; }
  int degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return atoms_.empty() && eps_ == 0 && tpow_ == 0; }

  /// True when eps * g = g holds for this generator: a positive T power, an
  /// eps-self-dual atom, or an odd-dimensional atom occurring twice.
  bool absorbs_eps() const noexcept;

  Generator times_eps() const;
  Generator times_T(int power) const;
  /// Same atoms and T power with eps exponent 0.
  Generator strip_eps() const;

  friend Generator operator*(const Generator& a, const Generator& b);
  friend bool operator==(const Generator& a, const Generator& b);
  /// Canonical order: degree, atom-id tuple, T power, eps.
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b);

  /// `[a*b] * eps * T^2`, `1`, `eps`, `T`.
  std::string str() const;

 private:
  void settle();

  std::vector<AtomPtr> atoms_;
  int eps_ = 0;
  int tpow_ = 0;
  int degree_ = 0;
};

enum class CoeffDomain { Integer, Dyadic };

/// Finite linear combination of generators with exact coefficients.
class Element {
 public:
  using Terms = std::map<Generator, Dyadic>;

  Element() = default;
  explicit Element(CoeffDomain domain) : domain_(domain) {}
  Element(const Generator& g, Dyadic coeff = 1, CoeffDomain domain = CoeffDomain::Integer);

  static Element zero(CoeffDomain domain = CoeffDomain::Integer) { return Element(domain); }
  static Element one(CoeffDomain domain = CoeffDomain::Integer);
  static Element eps(CoeffDomain domain = CoeffDomain::Integer);
  static Element T(int power = 1, CoeffDomain domain = CoeffDomain::Integer);

  CoeffDomain domain() const noexcept { return domain_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Dyadic coefficient(const Generator& g) const;

  /// Adds `coeff * g` in place.
  void add_term(const Generator& g, const Dyadic& coeff);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Dyadic& c, const Element& x);
  friend bool operator==(const Element& a, const Element& b) {
    return a.domain_ == b.domain_ && a.terms_ == b.terms_;
  }

  Element times_eps() const;
  Element times_T(int power = 1) const;
  /// Right multiplication by a single generator.
  Element times(const Generator& g) const;

  /// Sum of the terms of degree n.
  Element homogeneous_part(int n) const;
  /// Degree of a nonzero homogeneous element; nullopt if mixed. Zero is
  /// homogeneous of degree 0.
  std::optional<int> degree() const;

  /// Exact division by 2; DomainError unless the domain is dyadic.
  Element half() const;
  Element to_dyadic() const;
  /// Back to integer coefficients; DomainError if some coefficient is not integral.
  Element to_integer() const;

  /// Canonical rendering, terms in generator order, `0` for zero.
  std::string str() const;

 private:
  void require_same_domain(const Element& o) const;

  CoeffDomain domain_ = CoeffDomain::Integer;
  Terms terms_;
};

Element add(const Element& x, const Element& y);
Element mul(const Element& x, const Element& y);
Element homogeneous_part(const Element& x, int n);

}  // namespace logburn
