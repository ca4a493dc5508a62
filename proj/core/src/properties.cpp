#include "logburn/properties.hpp"

#include "logburn/birational.hpp"
#include "logburn/error.hpp"
#include "logburn/io.hpp"
#include "logburn/random.hpp"
#include "logburn/residue.hpp"
#include "logburn/snc_complex.hpp"
#include "logburn/specialization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>

namespace logburn::properties {

namespace {

using random::Rng;

// Runs `trial` `trials` times; a trial returns an empty string on success
// and a description otherwise. Exceptions count as failures.
CheckResult run(const std::string& name, std::size_t trials,
                const std::function<std::string(std::size_t)>& trial) {
  CheckResult result{name, true, 0, {}};
  for (std::size_t i = 0; i < trials; ++i) {
    std::string failure;
    try {
      failure = trial(i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++result.trials;
    if (!failure.empty() && result.passed) {
      result.passed = false;
      result.detail = "trial " + std::to_string(i) + ": " + failure;
    }
  }
  return result;
}

Universe merged(const SncComplex& a, const SncComplex& b) {
  Universe u = universe_from_complex(a);
  u.merge(universe_from_complex(b));
  return u;
}

// Two random complexes with disjoint atoms, at most 6 vertices and ambient
// dimension at most 5 together.
std::pair<SncComplex, SncComplex> random_pair(Rng& rng) {
  random::ComplexOptions left{1, 3, 3, "k", true};
  SncComplex k = random::random_complex(rng, left);
  random::ComplexOptions right{1, std::max(1, 5 - k.dim()), 3, "l", true};
  SncComplex l = random::random_complex(rng, right);
  return {std::move(k), std::move(l)};
}

std::vector<AtomPtr> atom_list(const Universe& u) {
  std::vector<AtomPtr> out;
  for (const auto& [id, atom] : u.registry().atoms()) out.push_back(atom);
  return out;
}

std::string mismatch(const Element& expected, const Element& actual) {
  return "expected " + expected.str() + ", got " + actual.str();
}

void collect(const Generator& g, AtomRegistry& out) {
  for (const auto& a : g.atoms()) out.declare(a);
}

void collect(const MorphismData& f, AtomRegistry& out) {
  collect(f.source, out);
  collect(f.target, out);
  for (const auto& e : f.exceptional) {
    out.declare(e.divisor);
    collect(e.residue, out);
  }
}

void collect(const RoofPresentation& r, AtomRegistry& out) {
  collect(r.x, out);
  collect(r.y, out);
  collect(r.p, out);
  collect(r.q, out);
}

}  // namespace

CheckResult toric_boundaries(int max_n) {
  return run("toric boundaries", static_cast<std::size_t>(max_n), [](std::size_t i) -> std::string {
    const int n = static_cast<int>(i) + 1;
    Element expected = Element::T(n - 1);
    expected += n % 2 == 1 ? Element(Generator::T(n - 1).times_eps()) : -Element(Generator::T(n - 1).times_eps());
    const Element direct = boundary(Element::T(n), Universe{});
    if (direct != expected) return "d(T^" + std::to_string(n) + "): " + mismatch(expected, direct);
    if (n <= 5) {
      const Element geometric = residue_element(toric_complex(n));
      if (geometric != expected) return "toric complex " + std::to_string(n) + ": " + mismatch(expected, geometric);
    }
    return {};
  });
}

CheckResult dual_paths(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  return run("residue element vs boundary", trials, [&](std::size_t i) -> std::string {
    if (i % 2 == 0) {
      auto [k, l] = random_pair(rng);
      const SncComplex p = product(k, l);
      const Element geometric = residue_element(p);
      const Element algebraic = boundary(Element(p.top_label()), merged(k, l));
      return geometric == algebraic ? std::string() : mismatch(geometric, algebraic);
    }
    random::ComplexOptions opts{1, 4, 4, "k", true};
    const SncComplex k = random::random_complex(rng, opts);
    const SncComplex t = toric_complex(rng.between(1, std::max(1, std::min(5 - k.dim(), 2))));
    const SncComplex p = rng.chance(1, 2) ? product(k, t) : product(t, k);
    const Element geometric = residue_element(p);
    const Element algebraic = boundary(Element(p.top_label()), universe_from_complex(k));
    return geometric == algebraic ? std::string() : mismatch(geometric, algebraic);
  });
}

CheckResult dd_zero(std::uint64_t seed, std::size_t trials, Mutation mutation) {
  Rng rng(seed);
  const std::string name = mutation == Mutation::None ? "dd = 0" : "dd = 0 (mutated)";
  return run(name, trials, [&](std::size_t) -> std::string {
    random::ComplexOptions opts{mutation == Mutation::None ? 1 : 2, 5, 6, "x", true};
    for (;;) {
      const SncComplex k = random::random_complex(rng, opts);
      Universe u = universe_from_complex(k);
      if (mutation == Mutation::VertexBoundary) {
        std::vector<AtomPtr> targets;
        for (const auto& [face, comps] : k.faces())
          if (face.size() == 1)
            for (const auto& c : comps)
              if (!c.label.atoms().empty()) targets.push_back(c.label.atoms().front());
        if (targets.empty()) continue;
        const AtomPtr a = targets[rng.below(targets.size())];
        u.override_boundary(a->id, u.boundary_of(*a) + Element::T(a->dim - 1));
      }
      const Dd0Report top = verify_dd0(Element(k.top_label()), u);
      if (!top.ok()) return "top: " + top.residual.str();
      for (const auto& [id, atom] : u.registry().atoms()) {
        const Dd0Report r = verify_dd0(Element(Generator::of(atom)), u);
        if (!r.ok()) return id + ": " + r.residual.str();
      }
      return {};
    }
  });
}

CheckResult leibniz(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  return run("twisted Leibniz rule", trials, [&](std::size_t) -> std::string {
    auto [k, l] = random_pair(rng);
    const Universe u = merged(k, l);
    const LeibnizReport geometric = verify_leibniz_product(k, l, u);
    if (!geometric.ok()) return "product: " + geometric.difference.str();
    const auto atoms = atom_list(u);
    random::ElementOptions opts{3, 2, 2, CoeffDomain::Integer};
    const Element a = random::random_homogeneous(rng, atoms, opts);
    const Element b = random::random_homogeneous(rng, atoms, opts);
    const LeibnizReport pair = verify_leibniz(a, b, u);
    if (!pair.ok()) return "a = " + a.str() + ", b = " + b.str() + ": " + pair.difference.str();
    const LeibnizReport with_t = verify_leibniz(a, Element::T(), u);
    if (!with_t.ok()) return "a = " + a.str() + ", b = T: " + with_t.difference.str();
    return {};
  });
}

CheckResult blowup_invariance(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  return run("blow-up invariance", trials, [&](std::size_t) -> std::string {
    random::ComplexOptions opts{1, 5, 5, "x", true};
    const SncComplex k = random::random_complex(rng, opts);
    const SncComplex b = random::random_blowups(rng, k, rng.between(1, 3));
    const Element before = residue_element(k);
    const Element after = residue_element(b);
    return before == after ? std::string() : mismatch(before, after);
  });
}

std::vector<CheckResult> sector_algebra(std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  std::vector<CheckResult> total;
  for (int round = 0; round < 3; ++round) {
    random::ComplexOptions opts{1, 4, 4, "x", true};
    const Universe u = universe_from_complex(random::random_complex(rng, opts));
    const SectorAlgebraReport report = check_sector_algebra(u, samples, rng.next());
    if (total.empty()) {
      total = report.checks;
      continue;
    }
    for (std::size_t i = 0; i < total.size(); ++i) {
      total[i].trials += report.checks[i].trials;
      if (total[i].passed && !report.checks[i].passed) {
        total[i].passed = false;
        total[i].detail = report.checks[i].detail;
      }
    }
  }
  return total;
}

CheckResult c_groupoid(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  return run("c-invariant groupoid", trials, [&](std::size_t) -> std::string {
    const RoofChain chain = random::random_chain(rng, rng.between(1, 4), rng.between(1, 3));
    Element sum;
    for (const auto& phi : chain.roofs) {
      const Element c = c_invariant(phi);
      sum += c;
      if (!c_invariant(identity_roof(phi.x)).is_zero()) return "c(id) != 0";
      if (c_invariant(inverse(phi)) != -c) return "c(inverse) != -c";
      const MorphismData id_w{phi.p.source, phi.p.source, {}};
      const RoofPresentation with_id = compose(phi, identity_roof(phi.y), Glue{id_w, phi.q});
      if (c_invariant(with_id) != c) return "composing with the identity changed c";
      const RoofPresentation loop = compose(phi, inverse(phi), Glue{id_w, id_w});
      if (!c_invariant(loop).is_zero()) return "c(inverse o phi) = " + c_invariant(loop).str();
      const Glue refine = random::random_glue(rng, phi, identity_roof(phi.y), "h");
      const MorphismData id_u{refine.u.source, refine.u.source, {}};
      const RoofPresentation finer{phi.x, phi.y, compose_morphisms(refine.u, phi.p),
                                   compose_morphisms(refine.u, phi.q)};
      const Element defect = independence_defect(phi, finer, Glue{refine.u, id_u});
      if (!defect.is_zero()) return "roofs of the same map disagree by " + defect.str();
    }
    const Element c = c_invariant(composite(chain));
    return c == sum ? std::string() : "composite: " + mismatch(sum, c);
  });
}

CheckResult specialization(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  return run("specialization", trials, [&](std::size_t) -> std::string {
    DvrModel m = random::random_model(rng, {});
    const Rational k = kappa(m);
    bool attained = false;
    for (const auto& v : m.vertical) {
      const Rational value = k * v.e + v.d;
      if (value < Rational(-1)) return "constraint violated for " + v.id;
      attained = attained || value == Rational(-1);
    }
    if (!attained) return "kappa is not attained";
    if (k.denominator() == 1) specialize(m);
    for (auto& v : m.vertical) v.e = 1;
    DvrModel vertical_only{m.n, m.vertical, {}, {}};
    std::set<std::string> vertical_ids;
    for (const auto& v : m.vertical) vertical_ids.insert(v.id);
    for (const auto& [key, label] : m.strata)
      if (std::all_of(key.begin(), key.end(), [&](const std::string& id) { return vertical_ids.contains(id); }))
        vertical_only.strata.emplace(key, label);
    const Element expected = specialize(vertical_only);
    const Element equivariant = forget_decorations(specialize_equivariant(m), AtomRegistry{});
    return expected == equivariant ? std::string() : mismatch(expected, equivariant);
  });
}

CheckResult round_trip(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  return run("document round trip", trials, [&](std::size_t) -> std::string {
    std::vector<io::Document> docs;
    random::ComplexOptions opts{1, 4, 4, "x", true};
    const SncComplex k = random::random_complex(rng, opts);
    const Universe u = universe_from_complex(k);
    docs.emplace_back(io::UniverseDoc{u});
    docs.emplace_back(io::ComplexDoc{io::atoms_of(k), k});
    random::ElementOptions eopts{4, 3, 2, rng.chance(1, 2) ? CoeffDomain::Dyadic : CoeffDomain::Integer};
    const Element x = random::random_element(rng, atom_list(u), eopts);
    docs.emplace_back(io::ElementDoc{io::atoms_of(x), x});
    const DvrModel m = random::random_model(rng, {});
    AtomRegistry model_atoms;
    for (const auto& [key, label] : m.strata) collect(label, model_atoms);
    docs.emplace_back(io::ModelDoc{model_atoms, m});
    const RoofChain chain = random::random_chain(rng, rng.between(1, 3), rng.between(1, 3));
    AtomRegistry chain_atoms;
    for (const auto& r : chain.roofs) collect(r, chain_atoms);
    for (const auto& g : chain.glues) {
      collect(g.u, chain_atoms);
      collect(g.v, chain_atoms);
    }
    docs.emplace_back(io::RoofDoc{chain_atoms, chain.roofs.front()});
    docs.emplace_back(io::ChainDoc{chain_atoms, chain});
    for (const auto& doc : docs) {
      const std::string printed = io::print_document(doc);
      const std::string again = io::print_document(io::parse_document(printed));
      if (printed != again) return io::kind_of(doc) + " document changed on reparse";
    }
    return {};
  });
}

bool run_selftest(std::uint64_t seed, std::ostream& out, const SelftestSizes& sizes) {
  std::vector<CheckResult> results;
  results.push_back(toric_boundaries(8));
  results.push_back(dual_paths(seed, sizes.complexes));
  results.push_back(dd_zero(seed + 1, sizes.complexes));
  results.push_back(leibniz(seed + 2, sizes.complexes));
  results.push_back(blowup_invariance(seed + 3, sizes.complexes));
  for (auto& r : sector_algebra(seed + 4, sizes.sector_samples)) results.push_back(std::move(r));
  results.push_back(c_groupoid(seed + 5, sizes.chains));
  results.push_back(specialization(seed + 6, sizes.models));
  results.push_back(round_trip(seed + 7, sizes.documents));
  bool ok = true;
  out << "seed " << seed << "\n";
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.trials << " trials)";
    if (!r.passed) out << ": " << r.detail;
    out << "\n";
    ok = ok && r.passed;
  }
  out << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok;
}

}  // namespace logburn::properties
