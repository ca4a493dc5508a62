#include "logburn/ring.hpp"

#include "logburn/error.hpp"

#include <algorithm>

namespace logburn {

// ---------------------------------------------------------------------------
// AtomRegistry

AtomPtr AtomRegistry::declare(Atom atom) {
  if (atom.id.empty()) throw RegistryError("atom id must be nonempty");
  if (atom.dim < 0) throw RegistryError("atom '" + atom.id + "' has negative dimension");
  if (atom.mu_order && *atom.mu_order < 1)
    throw RegistryError("atom '" + atom.id + "' has mu_order < 1");
  if (auto it = atoms_.find(atom.id); it != atoms_.end()) {
    if (*it->second != atom) throw RegistryError("conflicting declaration of atom '" + atom.id + "'");
    return it->second;
  }
  auto ptr = std::make_shared<const Atom>(std::move(atom));
  atoms_.emplace(ptr->id, ptr);
  return ptr;
}

AtomPtr AtomRegistry::declare(const AtomPtr& atom) {
  if (!atom) throw RegistryError("null atom");
  if (auto it = atoms_.find(atom->id); it != atoms_.end()) {
    if (*it->second != *atom)
      throw RegistryError("conflicting declaration of atom '" + atom->id + "'");
    return it->second;
  }
  return declare(Atom(*atom));
}

AtomPtr AtomRegistry::find(std::string_view id) const {
  auto it = atoms_.find(id);
  return it == atoms_.end() ? nullptr : it->second;
}

AtomPtr AtomRegistry::at(std::string_view id) const {
  auto p = find(id);
  if (!p) throw RegistryError("unknown atom '" + std::string(id) + "'");
  return p;
}

void AtomRegistry::merge(const AtomRegistry& other) {
  for (const auto& [id, atom] : other.atoms_) declare(atom);
}

// ---------------------------------------------------------------------------
// Generator

Generator Generator::epsilon() {
  Generator g;
  g.eps_ = 1;
  g.settle();
  return g;
}

Generator Generator::T(int power) {
  if (power < 0) throw ArgumentError("negative T power");
  Generator g;
  g.tpow_ = power;
  g.settle();
  return g;
}

Generator Generator::of(AtomPtr atom) {
  if (!atom) throw RegistryError("null atom");
  Generator g;
  g.atoms_.push_back(std::move(atom));
  g.settle();
  return g;
}

Generator Generator::normalize(std::span<const RawAtom> raw, int eps, int tpow) {
  if (tpow < 0) throw ArgumentError("negative T power");
  Generator g;
  long parity = ((eps % 2) + 2) % 2;
  g.atoms_.reserve(raw.size());
  for (const auto& r : raw) {
    if (!r.atom) throw RegistryError("null atom");
    if (r.negated) ++parity;
    g.atoms_.push_back(r.atom);
  }
  const auto& a = g.atoms_;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[j]->id < a[i]->id) parity += static_cast<long>(a[i]->dim) * a[j]->dim;
  std::stable_sort(g.atoms_.begin(), g.atoms_.end(),
                   [](const AtomPtr& x, const AtomPtr& y) { return x->id < y->id; });
  g.eps_ = static_cast<int>(parity % 2);
  g.tpow_ = tpow;
  g.settle();
  return g;
}

Generator Generator::normalize(const AtomRegistry& registry,
                               std::span<const std::pair<std::string, bool>> raw, int eps,
                               int tpow) {
  std::vector<RawAtom> resolved;
  resolved.reserve(raw.size());
  for (const auto& [id, negated] : raw) resolved.push_back({registry.at(id), negated});
  return normalize(resolved, eps, tpow);
}

bool Generator::absorbs_eps() const noexcept {
  if (tpow_ > 0) return true;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i]->eps_self_dual) return true;
    if (i > 0 && atoms_[i - 1]->id == atoms_[i]->id && atoms_[i]->dim % 2 != 0) return true;
  }
  return false;
}

void Generator::settle() {
  eps_ = ((eps_ % 2) + 2) % 2;
  if (eps_ != 0 && absorbs_eps()) eps_ = 0;
  degree_ = tpow_;
  for (const auto& a : atoms_) degree_ += a->dim;
}

Generator Generator::times_eps() const {
  Generator g = *this;
  g.eps_ ^= 1;
  g.settle();
  return g;
}

Generator Generator::times_T(int power) const {
  if (power < 0) throw ArgumentError("negative T power");
  Generator g = *this;
  g.tpow_ += power;
  g.settle();
  return g;
}

Generator Generator::strip_eps() const {
  Generator g = *this;
  g.eps_ = 0;
  return g;
}

Generator operator*(const Generator& a, const Generator& b) {
  Generator g;
  g.atoms_.reserve(a.atoms_.size() + b.atoms_.size());
  long remaining_dim = 0;
  for (const auto& x : a.atoms_) remaining_dim += x->dim;
  long parity = a.eps_ + b.eps_;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.atoms_.size() || j < b.atoms_.size()) {
    // Ties keep the left factor first, matching the stable sort in normalize().
    if (j == b.atoms_.size() || (i < a.atoms_.size() && !(b.atoms_[j]->id < a.atoms_[i]->id))) {
      remaining_dim -= a.atoms_[i]->dim;
      g.atoms_.push_back(a.atoms_[i++]);
    } else {
      parity += remaining_dim * b.atoms_[j]->dim;
      g.atoms_.push_back(b.atoms_[j++]);
    }
  }
  g.eps_ = static_cast<int>(parity % 2);
  g.tpow_ = a.tpow_ + b.tpow_;
  g.settle();
  return g;
}

bool operator==(const Generator& a, const Generator& b) {
  if (a.eps_ != b.eps_ || a.tpow_ != b.tpow_ || a.atoms_.size() != b.atoms_.size()) return false;
  for (std::size_t i = 0; i < a.atoms_.size(); ++i)
    if (a.atoms_[i]->id != b.atoms_[i]->id) return false;
  return true;
}

std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  std::size_t n = std::min(a.atoms_.size(), b.atoms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = a.atoms_[i]->id.compare(b.atoms_[i]->id);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.atoms_.size() <=> b.atoms_.size(); c != 0) return c;
  if (auto c = a.tpow_ <=> b.tpow_; c != 0) return c;
  return a.eps_ <=> b.eps_;
}

std::string Generator::str() const {
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " * ";
    out += part;
  };
  if (!atoms_.empty()) {
    std::string s = "[";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i > 0) s += "*";
      s += atoms_[i]->id;
    }
    append(s + "]");
  }
  if (eps_ != 0) append("eps");
  if (tpow_ == 1) append("T");
  if (tpow_ > 1) append("T^" + std::to_string(tpow_));
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const Generator& g, Dyadic coeff, CoeffDomain domain) : domain_(domain) {
  if (domain == CoeffDomain::Integer && !coeff.is_integer())
    throw DomainError("non-integral coefficient in integer element");
  if (!coeff.is_zero()) terms_.emplace(g, std::move(coeff));
}

Element Element::one(CoeffDomain domain) { return Element(Generator::unit(), 1, domain); }
Element Element::eps(CoeffDomain domain) { return Element(Generator::epsilon(), 1, domain); }
Element Element::T(int power, CoeffDomain domain) {
  return Element(Generator::T(power), 1, domain);
}

Dyadic Element::coefficient(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Dyadic() : it->second;
}

void Element::add_term(const Generator& g, const Dyadic& coeff) {
  if (coeff.is_zero()) return;
  if (domain_ == CoeffDomain::Integer && !coeff.is_integer())
    throw DomainError("non-integral coefficient in integer element");
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::require_same_domain(const Element& o) const {
  if (domain_ != o.domain_) throw DomainError("mixed integer and dyadic coefficient domains");
}

Element& Element::operator+=(const Element& o) {
  require_same_domain(o);
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_domain(o);
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [g, c] : r.terms_) c = -c;
  return r;
}

Element operator*(const Element& a, const Element& b) {
  a.require_same_domain(b);
  Element r(a.domain_);
  for (const auto& [ga, ca] : a.terms_)
    for (const auto& [gb, cb] : b.terms_) r.add_term(ga * gb, ca * cb);
  return r;
}

Element operator*(const Dyadic& c, const Element& x) {
  Element r(x.domain_);
  for (const auto& [g, cx] : x.terms_) r.add_term(g, c * cx);
  return r;
}

Element Element::times_eps() const {
  Element r(domain_);
  for (const auto& [g, c] : terms_) r.add_term(g.times_eps(), c);
  return r;
}

Element Element::times_T(int power) const {
  Element r(domain_);
  for (const auto& [g, c] : terms_) r.add_term(g.times_T(power), c);
  return r;
}

Element Element::times(const Generator& h) const {
  Element r(domain_);
  for (const auto& [g, c] : terms_) r.add_term(g * h, c);
  return r;
}

Element Element::homogeneous_part(int n) const {
  Element r(domain_);
  for (const auto& [g, c] : terms_)
    if (g.degree() == n) r.terms_.emplace(g, c);
  return r;
}

std::optional<int> Element::degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [g, c] : terms_)
    if (g.degree() != d) return std::nullopt;
  return d;
}

Element Element::half() const {
  if (domain_ != CoeffDomain::Dyadic) throw DomainError("halving requires dyadic coefficients");
  Element r(domain_);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, c.half());
  return r;
}

Element Element::to_dyadic() const {
  Element r = *this;
  r.domain_ = CoeffDomain::Dyadic;
  return r;
}

Element Element::to_integer() const {
  for (const auto& [g, c] : terms_)
    if (!c.is_integer()) throw DomainError("coefficient " + c.str() + " is not an integer");
  Element r = *this;
  r.domain_ = CoeffDomain::Integer;
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    bool negative = c.sign() < 0;
    Dyadic mag = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (mag == Dyadic(1)) {
      out += g.str();
    } else {
      out += mag.str();
      if (!g.is_unit()) out += " * " + g.str();
    }
  }
  return out;
}

Element add(const Element& x, const Element& y) { return x + y; }
Element mul(const Element& x, const Element& y) { return x * y; }
Element homogeneous_part(const Element& x, int n) { return x.homogeneous_part(n); }

}  // namespace logburn
