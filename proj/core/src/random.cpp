#include "logburn/random.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace logburn::random {

namespace {

Face face_of_mask(unsigned mask) {
  Face f;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) f.push_back(i);
  return f;
}

std::string face_tag(const Face& f) {
  std::string s;
  for (int v : f) s += std::to_string(v + 1);
  return s;
}

Face minus_position(const Face& f, std::size_t pos) {
  Face out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != pos) out.push_back(f[i]);
  return out;
}

}  // namespace

SncComplex random_complex(Rng& rng, const ComplexOptions& options) {
  const int n = rng.between(options.min_dim, options.max_dim);
  const int m = rng.between(1, options.max_vertices);
  std::vector<std::string> vertices;
  for (int i = 1; i <= m; ++i) vertices.push_back(std::to_string(i));

  auto make_label = [&](int dim, const std::string& id) {
    if (dim == 0 && rng.chance(1, 6)) return rng.chance(1, 2) ? Generator::epsilon() : Generator::unit();
    Generator g = Generator::of(std::make_shared<const Atom>(Atom{id, dim, false, std::nullopt}));
    return rng.chance(1, 2) ? g.times_eps() : g;
  };

  SncComplex::FaceMap faces;
  const unsigned full = 1u << m;
  for (int k = 1; k <= std::min(n, m); ++k) {
    for (unsigned mask = 1; mask < full; ++mask) {
      if (std::popcount(mask) != k) continue;
      const Face face = face_of_mask(mask);
      std::vector<std::vector<std::size_t>> candidates;
      if (k == 1) {
        if (rng.chance(9, 10)) candidates.push_back({});
      } else {
        std::vector<const std::vector<Component>*> subs;
        bool closed = true;
        for (std::size_t i = 0; i < face.size(); ++i) {
          auto it = faces.find(minus_position(face, i));
          if (it == faces.end()) {
            closed = false;
            break;
          }
          subs.push_back(&it->second);
        }
        if (!closed) continue;
        std::vector<std::size_t> tuple(face.size(), 0);
        while (true) {
          bool consistent = true;
          for (std::size_t i = 0; consistent && i < face.size() && k >= 3; ++i)
            for (std::size_t j = i + 1; j < face.size(); ++j)
              if ((*subs[i])[tuple[i]].parents[j - 1] != (*subs[j])[tuple[j]].parents[i]) {
                consistent = false;
                break;
              }
          if (consistent) candidates.push_back(tuple);
          std::size_t pos = 0;
          while (pos < tuple.size() && ++tuple[pos] == subs[pos]->size()) tuple[pos++] = 0;
          if (pos == tuple.size()) break;
        }
      }
      if (candidates.empty()) continue;
      int count = 1;
      if (k > 1) {
        if (rng.chance(1, 3))
          count = 0;
        else if (options.multiple_components && rng.chance(1, 5))
          count = 2;
      }
      std::vector<Component> comps;
      for (int c = 0; c < count; ++c) {
        const auto& parents = candidates[rng.below(candidates.size())];
        const std::string id = "c" + std::to_string(c);
        comps.push_back({id, make_label(n - k, options.prefix + "D" + face_tag(face) + "." + std::to_string(c)),
                         parents});
      }
      if (!comps.empty()) faces.emplace(face, std::move(comps));
    }
  }
  Generator top = Generator::of(std::make_shared<const Atom>(Atom{options.prefix + "X", n, false, std::nullopt}));
  if (rng.chance(1, 2)) top = top.times_eps();
  return SncComplex(n, std::move(vertices), top, std::move(faces));
}

Element random_element(Rng& rng, const std::vector<AtomPtr>& atoms, const ElementOptions& options) {
  Element out(options.domain);
  const int terms = rng.between(1, options.max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<RawAtom> raw;
    if (!atoms.empty()) {
      const int factors = rng.between(0, options.max_atoms);
      for (int f = 0; f < factors; ++f)
        raw.push_back({atoms[rng.below(atoms.size())], rng.chance(1, 4)});
    }
    Generator g = Generator::normalize(raw, rng.between(0, 1), rng.between(0, options.max_tpow));
    Dyadic c = rng.between(1, 5);
    if (rng.chance(1, 2)) c = -c;
    if (options.domain == CoeffDomain::Dyadic) c = Dyadic(c.numerator(), static_cast<std::uint32_t>(rng.between(0, 2)));
    out.add_term(g, c);
  }
  return out;
}

Element random_homogeneous(Rng& rng, const std::vector<AtomPtr>& atoms,
                           const ElementOptions& options) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Element x = random_element(rng, atoms, options);
    if (x.is_zero()) continue;
    auto it = x.terms().begin();
    std::advance(it, static_cast<long>(rng.below(x.size())));
    return x.homogeneous_part(it->first.degree());
  }
  return Element(Generator::T(1), 1, options.domain);
}

SncComplex random_blowups(Rng& rng, SncComplex complex, int depth) {
  for (int i = 0; i < depth; ++i) {
    const auto& faces = complex.faces();
    if (faces.empty()) break;
    auto it = faces.begin();
    std::advance(it, static_cast<long>(rng.below(faces.size())));
    const std::size_t comp = rng.below(it->second.size());
    complex = blowup_stratum(complex, it->first, comp);
  }
  return complex;
}

}  // namespace logburn::random

namespace logburn::random {

namespace {

AtomPtr fresh_atom(const std::string& id, int dim) {
  return std::make_shared<const Atom>(Atom{id, dim, false, std::nullopt});
}

// Random generator of degree `dim`: a fresh atom times a T power, eps-twisted.
Generator fresh_label(Rng& rng, const std::string& id, int dim) {
  const int t = dim > 0 && rng.chance(1, 3) ? rng.between(1, dim) : 0;
  Generator g = Generator::of(fresh_atom(id, dim - t)).times_T(t);
  return rng.chance(1, 2) ? g.times_eps() : g;
}

std::vector<ExceptionalDivisor> fresh_exceptional(Rng& rng, int dim, int count, const std::string& prefix,
                                                  int& counter) {
  std::vector<ExceptionalDivisor> out;
  for (int i = 0; i < count; ++i) {
    const std::string tag = prefix + "E" + std::to_string(counter++);
    out.push_back({fresh_atom(tag, dim - 1), fresh_label(rng, tag + "r", dim - 1)});
  }
  return out;
}

}  // namespace

RoofPresentation random_roof(Rng& rng, const Generator& x, const Generator& y,
                             const std::string& prefix) {
  const int n = x.degree();
  int counter = 0;
  const Generator w = Generator::of(fresh_atom(prefix + "W", n));
  MorphismData p{w, x, fresh_exceptional(rng, n, rng.between(0, 3), prefix + "p", counter)};
  MorphismData q{w, y, fresh_exceptional(rng, n, rng.between(0, 3), prefix + "q", counter)};
  return {x, y, p, q};
}

Glue random_glue(Rng& rng, const RoofPresentation& phi, const RoofPresentation& psi,
                 const std::string& prefix) {
  const int n = phi.x.degree();
  int counter = 0;
  const Generator u_src = Generator::of(fresh_atom(prefix + "U", n));
  const auto common = fresh_exceptional(rng, n, rng.between(0, 2), prefix + "z", counter);
  // q o u and r o v both blow down common + exc(q) + exc(r).
  MorphismData u{u_src, phi.p.source, common};
  u.exceptional.insert(u.exceptional.end(), psi.p.exceptional.begin(), psi.p.exceptional.end());
  MorphismData v{u_src, psi.p.source, common};
  v.exceptional.insert(v.exceptional.end(), phi.q.exceptional.begin(), phi.q.exceptional.end());
  return {u, v};
}

RoofChain random_chain(Rng& rng, int length, int dim, const std::string& prefix) {
  RoofChain chain;
  std::vector<Generator> classes;
  for (int i = 0; i <= length; ++i)
    classes.push_back(fresh_label(rng, prefix + "X" + std::to_string(i), dim));
  for (int i = 0; i < length; ++i)
    chain.roofs.push_back(random_roof(rng, classes[i], classes[i + 1], prefix + std::to_string(i)));
  RoofPresentation acc = chain.roofs.front();
  for (int i = 1; i < length; ++i) {
    chain.glues.push_back(random_glue(rng, acc, chain.roofs[i], prefix + "g" + std::to_string(i)));
    acc = compose(acc, chain.roofs[i], chain.glues.back());
  }
  return chain;
}

DvrModel random_model(Rng& rng, const ModelOptions& options) {
  DvrModel m;
  m.n = rng.between(0, options.max_n);
  const int nv = rng.between(1, options.max_vertical);
  const int nh = rng.between(0, options.max_horizontal);
  std::vector<std::string> ids;
  for (int i = 0; i < nv; ++i) {
    m.vertical.push_back({"a" + std::to_string(i + 1), rng.between(1, options.max_e),
                          rng.between(-options.max_abs_d, options.max_abs_d)});
    ids.push_back(m.vertical.back().id);
  }
  for (int i = 0; i < nh; ++i) {
    m.horizontal.push_back({"b" + std::to_string(i + 1), rng.between(-1, 1)});
    ids.push_back(m.horizontal.back().id);
  }
  const unsigned count = static_cast<unsigned>(ids.size());
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < (1u << count); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  const unsigned vertical_mask = (1u << nv) - 1;
  auto key_of = [&](unsigned mask) {
    StratumKey key;
    for (unsigned i = 0; i < count; ++i)
      if (mask >> i & 1u) key.push_back(ids[i]);
    std::sort(key.begin(), key.end());
    return key;
  };
  for (unsigned mask : masks) {
    if ((mask & vertical_mask) == 0) continue;
    const int size = std::popcount(mask);
    const int dim = m.n + 1 - size;
    if (dim < 0) continue;
    if (size > 1) {
      if (!rng.chance(2, 3)) continue;
      bool closed = true;
      for (unsigned i = 0; i < count && closed; ++i) {
        const unsigned sub = mask & ~(1u << i);
        if (sub != mask && (sub & vertical_mask) != 0 && !m.strata.contains(key_of(sub))) closed = false;
      }
      if (!closed) continue;
    }
    std::string tag = options.prefix + "S";
    for (const auto& id : key_of(mask)) tag += id;
    Generator g = Generator::of(fresh_atom(tag, dim));
    m.strata.emplace(key_of(mask), rng.chance(1, 2) ? g.times_eps() : g);
  }
  return m;
}

}  // namespace logburn::random
