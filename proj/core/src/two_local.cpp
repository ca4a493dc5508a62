#include "logburn/two_local.hpp"

#include "logburn/error.hpp"
#include "logburn/random.hpp"
#include "logburn/residue.hpp"

#include <functional>

namespace logburn {

SectorElement::SectorElement(int sector) : sector_(sector), value_(CoeffDomain::Dyadic) {
  if (sector != 1 && sector != -1) throw ArgumentError("sector must be +1 or -1");
}

SectorElement SectorElement::project(const Element& x, int sector) {
  SectorElement out(sector);
  for (const auto& [g, c] : x.terms()) {
    if (sector == -1 && g.absorbs_eps()) continue;
    out.value_.add_term(g.strip_eps(), sector == -1 && g.eps() == 1 ? -c : c);
  }
  return out;
}

void SectorElement::require_same_sector(const SectorElement& o) const {
  if (sector_ != o.sector_) throw ArgumentError("elements of different sectors");
}

SectorElement SectorElement::operator+(const SectorElement& o) const {
  require_same_sector(o);
  return {sector_, value_ + o.value_};
}

SectorElement SectorElement::operator-(const SectorElement& o) const {
  require_same_sector(o);
  return {sector_, value_ - o.value_};
}

SectorElement SectorElement::operator-() const { return {sector_, -value_}; }

SectorElement SectorElement::operator*(const SectorElement& o) const {
  require_same_sector(o);
  return project(value_ * o.value_, sector_);
}

SectorElement SectorElement::times_T(int power) const {
  return project(value_.times_T(power), sector_);
}

SectorElement SectorElement::half() const { return {sector_, value_.half()}; }

SectorElement SectorElement::homogeneous_part(int n) const {
  return {sector_, value_.homogeneous_part(n)};
}

SectorSplit sector_split(const Element& x) {
  return {SectorElement::project(x, 1), SectorElement::project(x, -1)};
}

Element reconstruct(const SectorSplit& split) {
  const Element one = Element::one(CoeffDomain::Dyadic);
  const Element eps = Element::eps(CoeffDomain::Dyadic);
  return (split.plus.lift() * (one + eps)).half() + (split.minus.lift() * (one - eps)).half();
}

SectorElement sector_boundary(const SectorElement& x, const Universe& universe) {
  return SectorElement::project(boundary(x.lift(), universe), x.sector());
}

SectorElement involution_F(const SectorElement& x, const Universe& universe) {
  if (x.sector() != 1) throw ArgumentError("F is defined on the eps = 1 sector");
  return x - sector_boundary(x, universe).times_T(1);
}

PlusMinusSplit plus_minus_split(const SectorElement& x, const Universe& universe) {
  const SectorElement fx = involution_F(x, universe);
  return {(x + fx).half(), (x - fx).half()};
}

bool SectorAlgebraReport::ok() const noexcept {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

SectorAlgebraReport check_sector_algebra(const Universe& universe, std::size_t samples,
                                         std::uint64_t seed) {
  random::Rng rng(seed);
  std::vector<AtomPtr> atoms;
  for (const auto& [id, a] : universe.registry().atoms()) atoms.push_back(a);
  random::ElementOptions opts;
  opts.domain = CoeffDomain::Dyadic;
  opts.max_terms = 3;
  opts.max_atoms = 2;

  std::vector<Element> pool{Element::one(CoeffDomain::Dyadic), Element::T(1, CoeffDomain::Dyadic)};
  for (const auto& a : atoms) pool.emplace_back(Generator::of(a), 1, CoeffDomain::Dyadic);
  for (std::size_t i = 0; i < samples; ++i) pool.push_back(random::random_element(rng, atoms, opts));

  std::vector<CheckResult> checks;
  auto run = [&](const std::string& name, const std::function<bool(std::size_t, std::string&)>& body) {
    CheckResult r{name, true, 0, {}};
    for (std::size_t i = 0; i < pool.size(); ++i) {
      std::string detail;
      ++r.trials;
      if (!body(i, detail) && r.passed) {
        r.passed = false;
        r.detail = detail;
      }
    }
    checks.push_back(std::move(r));
  };
  auto partner = [&](std::size_t i) -> const Element& { return pool[(i * 7 + 3) % pool.size()]; };
  auto plus = [](const Element& x) { return SectorElement::project(x, 1); };
  auto minus = [](const Element& x) { return SectorElement::project(x, -1); };
  auto d = [&](const SectorElement& x) { return sector_boundary(x, universe); };
  auto F = [&](const SectorElement& x) { return involution_F(x, universe); };

  run("split is multiplicative", [&](std::size_t i, std::string& why) {
    const Element& a = pool[i];
    const Element& b = partner(i);
    const SectorSplit ab = sector_split(a * b);
    const SectorSplit sa = sector_split(a);
    const SectorSplit sb = sector_split(b);
    why = a.str() + " ; " + b.str();
    return ab.plus == sa.plus * sb.plus && ab.minus == sa.minus * sb.minus;
  });
  run("split reconstructs", [&](std::size_t i, std::string& why) {
    why = pool[i].str();
    return reconstruct(sector_split(pool[i])) == pool[i].to_dyadic();
  });
  run("F multiplicative", [&](std::size_t i, std::string& why) {
    const SectorElement a = plus(pool[i]);
    const SectorElement b = plus(partner(i));
    why = a.str() + " ; " + b.str();
    return F(a * b) == F(a) * F(b);
  });
  run("F^2 = id", [&](std::size_t i, std::string& why) {
    const SectorElement a = plus(pool[i]);
    why = a.str();
    return F(F(a)) == a;
  });
  run("d F = -d and F d = d", [&](std::size_t i, std::string& why) {
    const SectorElement a = plus(pool[i]);
    why = a.str();
    return d(F(a)) == -d(a) && F(d(a)) == d(a);
  });
  run("d vanishes on B+", [&](std::size_t i, std::string& why) {
    const auto split = plus_minus_split(plus(pool[i]), universe);
    why = split.bplus.str();
    return d(split.bplus).is_zero();
  });
  run("(1/2)d and T are inverse", [&](std::size_t i, std::string& why) {
    const auto split = plus_minus_split(plus(pool[i]), universe);
    why = split.bplus.str() + " ; " + split.bminus.str();
    return d(split.bplus.times_T(1)).half() == split.bplus &&
           d(split.bminus).half().times_T(1) == split.bminus;
  });
  run("graded Leibniz in sector -1", [&](std::size_t i, std::string& why) {
    const SectorElement a0 = minus(pool[i]);
    const SectorElement b0 = minus(partner(i));
    bool ok = true;
    // Check every pair of homogeneous parts.
    for (const auto& [ga, ca] : a0.value().terms()) {
      const SectorElement a = a0.homogeneous_part(ga.degree());
      for (const auto& [gb, cb] : b0.value().terms()) {
        const SectorElement b = b0.homogeneous_part(gb.degree());
        auto dprime = [&](const SectorElement& x, int deg) {
          return deg % 2 == 1 ? d(x) : -d(x);  // (-1)^(1+deg)
        };
        const int da = ga.degree();
        const int db = gb.degree();
        const SectorElement lhs = dprime(a * b, da + db);
        const SectorElement rhs_b = a * dprime(b, db);
        const SectorElement rhs = dprime(a, da) * b + (da % 2 == 0 ? rhs_b : -rhs_b);
        if (lhs != rhs) {
          ok = false;
          why = a.str() + " ; " + b.str();
        }
      }
    }
    return ok;
  });
  run("d d = 0 in both sectors", [&](std::size_t i, std::string& why) {
    why = pool[i].str();
    return d(d(plus(pool[i]))).is_zero() && d(d(minus(pool[i]))).is_zero();
  });
  return {std::move(checks)};
}

}  // namespace logburn
