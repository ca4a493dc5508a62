#include "logburn/specialization.hpp"

#include "logburn/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace logburn {

namespace {

constexpr std::string_view kMuTag = "#mu=";

std::string key_name(const StratumKey& key) {
  std::string out = "{";
  for (std::size_t i = 0; i < key.size(); ++i) out += (i ? "," : "") + key[i];
  return out + "}";
}

Rational threshold(const VerticalComponent& v) { return Rational(-1 - v.d, v.e); }

// Nonempty sub-keys of `members`, each sorted.
std::vector<StratumKey> subsets(const std::vector<std::string>& members) {
  std::vector<StratumKey> out;
  const std::size_t m = members.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    StratumKey key;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) key.push_back(members[i]);
    std::sort(key.begin(), key.end());
    out.push_back(std::move(key));
  }
  return out;
}

}  // namespace

void DvrModel::validate() const {
  if (n < 0) throw ValidationError("model dimension must be nonnegative");
  std::set<std::string> vertical_ids;
  std::set<std::string> all_ids;
  for (const auto& v : vertical) {
    if (!all_ids.insert(v.id).second) throw ValidationError("repeated component id '" + v.id + "'");
    if (v.e < 1) throw ValidationError("multiplicity of '" + v.id + "' must be positive");
    vertical_ids.insert(v.id);
  }
  for (const auto& h : horizontal) {
    if (!all_ids.insert(h.id).second) throw ValidationError("repeated component id '" + h.id + "'");
    if (h.d < -1) throw ValidationError("horizontal component '" + h.id + "' has d < -1");
  }
  for (const auto& [key, label] : strata) {
    if (key.empty()) throw ValidationError("empty stratum key");
    if (!std::is_sorted(key.begin(), key.end()) ||
        std::adjacent_find(key.begin(), key.end()) != key.end())
      throw ValidationError("stratum key " + key_name(key) + " is not a sorted set");
    bool meets_fiber = false;
    for (const auto& id : key) {
      if (!all_ids.contains(id))
        throw ValidationError("stratum " + key_name(key) + " names unknown component '" + id + "'");
      meets_fiber = meets_fiber || vertical_ids.contains(id);
    }
    if (!meets_fiber)
      throw ValidationError("stratum " + key_name(key) + " does not meet the special fiber");
    const int expected = n + 1 - static_cast<int>(key.size());
    if (label.degree() != expected)
      throw ValidationError("label " + label.str() + " of stratum " + key_name(key) +
                            " must have degree " + std::to_string(expected));
    for (const auto& sub : subsets(key)) {
      const bool sub_meets = std::any_of(sub.begin(), sub.end(),
                                         [&](const std::string& id) { return vertical_ids.contains(id); });
      if (sub_meets && !strata.contains(sub))
        throw ValidationError("stratum " + key_name(key) + " is labelled but its face " +
                              key_name(sub) + " is not");
    }
  }
}

Rational kappa(const DvrModel& model) {
  if (model.vertical.empty()) throw ArgumentError("kappa needs at least one vertical component");
  Rational best = threshold(model.vertical.front());
  for (const auto& v : model.vertical) best = std::max(best, threshold(v));
  return best;
}

LogSubcomplex log_subcomplex(const DvrModel& model) {
  const Rational k = kappa(model);
  LogSubcomplex out;
  for (const auto& v : model.vertical)
    if (threshold(v) == k) out.a.push_back(v.id);
  for (const auto& h : model.horizontal)
    if (h.d == -1) out.b.push_back(h.id);
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.b.begin(), out.b.end());
  return out;
}

Element specialize(const DvrModel& model) {
  model.validate();
  const Rational k = kappa(model);
  if (k.denominator() != 1)
    throw IntegralityError("kappa = " + std::to_string(k.numerator()) + "/" +
                           std::to_string(k.denominator()) +
                           " is not an integer; use the equivariant specialization");
  const LogSubcomplex sub = log_subcomplex(model);
  for (const auto& id : sub.a)
    if (!model.strata.contains(StratumKey{id}))
      throw ModelError("missing label for stratum {" + id + "}");
  const std::set<std::string> a(sub.a.begin(), sub.a.end());
  std::vector<std::string> members = sub.a;
  members.insert(members.end(), sub.b.begin(), sub.b.end());
  Element out;
  for (const auto& key : subsets(members)) {
    if (std::none_of(key.begin(), key.end(), [&](const std::string& id) { return a.contains(id); }))
      continue;
    const auto it = model.strata.find(key);
    if (it == model.strata.end()) continue;
    const int size = static_cast<int>(key.size());
    out.add_term(it->second.times_T(size - 1), size % 2 == 1 ? 1 : -1);
  }
  return out;
}

Generator decorate(const Generator& label, int k, AtomRegistry* decorated) {
  if (k == 1) return label;
  if (label.atoms().size() > 1)
    throw ModelError("cannot decorate the composite label " + label.str());
  Atom atom;
  if (label.atoms().empty()) {
    atom.id = "unit";
  } else {
    atom = *label.atoms().front();
  }
  atom.id += std::string(kMuTag) + std::to_string(k);
  atom.mu_order = k;
  AtomPtr ptr = decorated ? decorated->declare(atom) : std::make_shared<const Atom>(atom);
  const RawAtom raw{ptr, false};
  return Generator::normalize(std::span(&raw, 1), label.eps(), label.tpow());
}

Element specialize_equivariant(const DvrModel& model, AtomRegistry* decorated) {
  model.validate();
  const LogSubcomplex sub = log_subcomplex(model);
  std::map<std::string, int> multiplicity;
  for (const auto& v : model.vertical) multiplicity[v.id] = v.e;
  for (const auto& id : sub.a)
    if (!model.strata.contains(StratumKey{id}))
      throw ModelError("missing label for stratum {" + id + "}");
  Element out;
  for (const auto& key : subsets(sub.a)) {
    const auto it = model.strata.find(key);
    if (it == model.strata.end()) continue;
    int e = 0;
    for (const auto& id : key) e = std::gcd(e, multiplicity[id]);
    const int size = static_cast<int>(key.size());
    out.add_term(decorate(it->second, e, decorated).times_T(size - 1), size % 2 == 1 ? 1 : -1);
  }
  return out;
}

Element forget_decorations(const Element& x, const AtomRegistry& base) {
  Element out(x.domain());
  for (const auto& [g, c] : x.terms()) {
    std::vector<RawAtom> raw;
    for (const auto& atom : g.atoms()) {
      const auto pos = atom->id.find(kMuTag);
      if (pos == std::string::npos) {
        raw.push_back({atom, false});
        continue;
      }
      const std::string stem = atom->id.substr(0, pos);
      if (stem == "unit") continue;
      raw.push_back({base.at(stem), false});
    }
    out.add_term(Generator::normalize(raw, g.eps(), g.tpow()), c);
  }
  return out;
}

}  // namespace logburn
