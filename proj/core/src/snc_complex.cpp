#include "logburn/snc_complex.hpp"

#include "logburn/error.hpp"

#include <algorithm>
#include <set>

namespace logburn {

namespace {

Face without_position(const Face& face, std::size_t pos) {
  Face out;
  out.reserve(face.size() - 1);
  for (std::size_t i = 0; i < face.size(); ++i)
    if (i != pos) out.push_back(face[i]);
  return out;
}

bool contains_all(const Face& outer, const Face& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

Face set_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face set_difference(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string unique_name(std::string base, const std::set<std::string>& used) {
  while (used.contains(base)) base += "'";
  return base;
}

int sign_of(std::size_t size) { return size % 2 == 1 ? 1 : -1; }  // (-1)^(size-1)

}  // namespace

SncComplex::SncComplex(int dim, std::vector<std::string> vertices, Generator top_label,
                       FaceMap faces)
    : dim_(dim), vertices_(std::move(vertices)), top_(std::move(top_label)), faces_(std::move(faces)) {
  std::erase_if(faces_, [](const auto& kv) { return kv.second.empty(); });
  validate();
}

std::string SncComplex::face_name(const Face& face) const {
  std::string s = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i > 0) s += ",";
    if (face[i] >= 0 && static_cast<std::size_t>(face[i]) < vertices_.size())
      s += vertices_[static_cast<std::size_t>(face[i])];
    else
      s += "#" + std::to_string(face[i]);
  }
  return s + "}";
}

int SncComplex::vertex_index(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return static_cast<int>(i);
  throw ArgumentError("unknown vertex '" + std::string(name) + "'");
}

const std::vector<Component>* SncComplex::components(const Face& face) const {
  auto it = faces_.find(face);
  return it == faces_.end() ? nullptr : &it->second;
}

std::size_t SncComplex::ancestor(const Face& face, std::size_t comp, const Face& sub) const {
  if (sub.empty() || !contains_all(face, sub))
    throw ArgumentError("ancestor: " + face_name(sub) + " is not a nonempty subface of " +
                        face_name(face));
  Face current = face;
  while (current.size() > sub.size()) {
    std::size_t pos = 0;
    while (std::binary_search(sub.begin(), sub.end(), current[pos])) ++pos;
    comp = faces_.at(current)[comp].parents[pos];
    current = without_position(current, pos);
  }
  return comp;
}

void SncComplex::validate() {
  if (dim_ < 0) throw ValidationError("negative ambient dimension");
  std::set<std::string> names;
  for (const auto& v : vertices_) {
    if (v.empty()) throw ValidationError("empty vertex name");
    if (!names.insert(v).second) throw ValidationError("duplicate vertex '" + v + "'");
  }
  if (top_.degree() != dim_)
    throw ValidationError("top label " + top_.str() + " has degree " +
                          std::to_string(top_.degree()) + ", expected " + std::to_string(dim_));
  const int nv = static_cast<int>(vertices_.size());
  for (const auto& [face, comps] : faces_) {
    const std::string fname = face_name(face);
    if (face.empty()) throw ValidationError("empty face key");
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (face[i] < 0 || face[i] >= nv) throw ValidationError("face " + fname + " has an unknown vertex");
      if (i > 0 && face[i - 1] >= face[i])
        throw ValidationError("face " + fname + " is not strictly sorted");
    }
    const int want = dim_ - static_cast<int>(face.size());
    std::set<std::string> ids;
    for (const auto& c : comps) {
      if (!ids.insert(c.id).second)
        throw ValidationError("face " + fname + " has duplicate component '" + c.id + "'");
      if (c.label.degree() != want)
        throw ValidationError("component '" + c.id + "' of face " + fname + " has label " +
                              c.label.str() + " of degree " + std::to_string(c.label.degree()) +
                              ", expected " + std::to_string(want));
      if (face.size() == 1) {
        if (!c.parents.empty())
          throw ValidationError("component '" + c.id + "' of face " + fname +
                                " must not list parents");
        continue;
      }
      if (c.parents.size() != face.size())
        throw ValidationError("component '" + c.id + "' of face " + fname + " needs " +
                              std::to_string(face.size()) + " parents");
      for (std::size_t i = 0; i < face.size(); ++i) {
        Face sub = without_position(face, i);
        auto it = faces_.find(sub);
        if (it == faces_.end())
          throw ValidationError("downward closure violated: face " + fname +
                                " is nonempty but face " + face_name(sub) + " is empty");
        if (c.parents[i] >= it->second.size())
          throw ValidationError("component '" + c.id + "' of face " + fname +
                                " has an out-of-range parent in face " + face_name(sub));
      }
    }
  }
  // Containment must not depend on the order in which vertices are removed.
  for (const auto& [face, comps] : faces_) {
    if (face.size() < 3) continue;
    for (const auto& c : comps) {
      for (std::size_t i = 0; i < face.size(); ++i) {
        for (std::size_t j = i + 1; j < face.size(); ++j) {
          const auto& via_i = faces_.at(without_position(face, i))[c.parents[i]];
          const auto& via_j = faces_.at(without_position(face, j))[c.parents[j]];
          if (via_i.parents[j - 1] != via_j.parents[i])
            throw ValidationError("inconsistent containment for component '" + c.id +
                                  "' of face " + face_name(face));
        }
      }
    }
  }
}

Element residue_element(const SncComplex& complex) {
  Element out;
  for (const auto& [face, comps] : complex.faces()) {
    const int k = static_cast<int>(face.size());
    for (const auto& c : comps) out.add_term(c.label.times_T(k - 1), sign_of(face.size()));
  }
  return out;
}

SncComplex product(const SncComplex& left, const SncComplex& right) {
  std::vector<std::string> vertices = left.vertices();
  std::set<std::string> used(vertices.begin(), vertices.end());
  for (const auto& v : right.vertices()) {
    std::string name = unique_name(v, used);
    used.insert(name);
    vertices.push_back(name);
  }
  const int offset = static_cast<int>(left.vertices().size());
  const int right_dim = right.dim();

  // Both sides get a pseudo-face {} whose single component is the top label.
  const std::vector<Component> left_top{{"", left.top_label(), {}}};
  const std::vector<Component> right_top{{"", right.top_label(), {}}};
  auto left_comps = [&](const Face& a) -> const std::vector<Component>& {
    return a.empty() ? left_top : *left.components(a);
  };
  auto right_comps = [&](const Face& b) -> const std::vector<Component>& {
    return b.empty() ? right_top : *right.components(b);
  };

  std::vector<Face> left_faces{{}};
  for (const auto& [a, _] : left.faces()) left_faces.push_back(a);
  std::vector<Face> right_faces{{}};
  for (const auto& [b, _] : right.faces()) right_faces.push_back(b);

  SncComplex::FaceMap faces;
  for (const auto& a : left_faces) {
    for (const auto& b : right_faces) {
      if (a.empty() && b.empty()) continue;
      Face merged = a;
      for (int v : b) merged.push_back(v + offset);
      const auto& lc = left_comps(a);
      const auto& rc = right_comps(b);
      const bool twist = (a.size() * static_cast<std::size_t>(right_dim - static_cast<int>(b.size()))) % 2 == 1;
      std::vector<Component> comps;
      comps.reserve(lc.size() * rc.size());
      for (std::size_t i = 0; i < lc.size(); ++i) {
        for (std::size_t j = 0; j < rc.size(); ++j) {
          Component comp;
          if (a.empty())
            comp.id = rc[j].id;
          else if (b.empty())
            comp.id = lc[i].id;
          else
            comp.id = lc[i].id + "*" + rc[j].id;
          comp.label = lc[i].label * rc[j].label;
          if (twist) comp.label = comp.label.times_eps();
          if (merged.size() > 1) {
            for (std::size_t p = 0; p < a.size(); ++p) {
              std::size_t pi = a.size() == 1 ? 0 : lc[i].parents[p];
              std::size_t width = right_comps(b).size();
              comp.parents.push_back(pi * width + j);
            }
            for (std::size_t p = 0; p < b.size(); ++p) {
              std::size_t pj = b.size() == 1 ? 0 : rc[j].parents[p];
              Face b_minus = without_position(b, p);
              std::size_t width = right_comps(b_minus).size();
              comp.parents.push_back(i * width + pj);
            }
          }
          comps.push_back(std::move(comp));
        }
      }
      faces.emplace(std::move(merged), std::move(comps));
    }
  }
  return SncComplex(left.dim() + right.dim(), std::move(vertices),
                    left.top_label() * right.top_label(), std::move(faces));
}

SncComplex blowup_stratum(const SncComplex& complex, const Face& face, std::size_t component) {
  if (face.empty()) throw ArgumentError("blow-up centre must be a nonempty face");
  const auto* centre = complex.components(face);
  if (!centre) throw ArgumentError("face " + complex.face_name(face) + " is empty");
  if (component >= centre->size())
    throw ArgumentError("face " + complex.face_name(face) + " has no component #" +
                        std::to_string(component));
  const Face& b = face;
  constexpr std::size_t kGone = static_cast<std::size_t>(-1);

  std::vector<std::string> vertices = complex.vertices();
  const int e = static_cast<int>(vertices.size());
  vertices.push_back(unique_name("E", std::set<std::string>(vertices.begin(), vertices.end())));

  auto inside_centre = [&](const Face& g, std::size_t d) {
    return (g == b ? d : complex.ancestor(g, d, b)) == component;
  };

  // Strict transforms: faces containing the centre lose the components inside it.
  std::map<Face, std::vector<std::size_t>> remap;
  for (const auto& [a, comps] : complex.faces()) {
    if (!contains_all(a, b)) continue;
    std::vector<std::size_t> idx(comps.size(), kGone);
    std::size_t next = 0;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (!inside_centre(a, i)) idx[i] = next++;
    remap.emplace(a, std::move(idx));
  }
  SncComplex::FaceMap faces;
  for (const auto& [a, comps] : complex.faces()) {
    auto rm = remap.find(a);
    std::vector<Component> kept;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (rm != remap.end() && rm->second[i] == kGone) continue;
      Component c = comps[i];
      for (std::size_t p = 0; p < c.parents.size(); ++p) {
        auto sub = remap.find(without_position(a, p));
        if (sub != remap.end()) c.parents[p] = sub->second[c.parents[p]];
      }
      kept.push_back(std::move(c));
    }
    if (!kept.empty()) faces.emplace(a, std::move(kept));
  }

  // Exceptional strata E n D'_A for B not inside A: one component per
  // component of D_{A u B} lying in the centre.
  struct Pending {
    Face a;
    Face g;
    std::size_t d;
  };
  std::vector<Pending> pending;
  std::map<std::pair<Face, std::size_t>, std::size_t> new_index;
  for (const auto& [g, comps] : complex.faces()) {
    if (!contains_all(g, b)) continue;
    const Face outside = set_difference(g, b);
    const std::size_t nb = b.size();
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << nb); ++mask) {
      Face s;
      for (std::size_t k = 0; k < nb; ++k)
        if (mask & (std::size_t{1} << k)) s.push_back(b[k]);
      Face a = set_union(outside, s);
      Face key = a;
      key.push_back(e);
      for (std::size_t d = 0; d < comps.size(); ++d) {
        if (!inside_centre(g, d)) continue;
        auto& list = faces[key];
        new_index[{a, d}] = list.size();
        const int extra = static_cast<int>(nb - s.size()) - 1;
        list.push_back({comps[d].id + "@" + vertices.back(), comps[d].label.times_T(extra), {}});
        pending.push_back({a, g, d});
      }
    }
  }
  for (const auto& [a, g, d] : pending) {
    if (a.empty()) continue;
    Face key = a;
    key.push_back(e);
    auto& comp = faces[key][new_index.at({a, d})];
    for (std::size_t p = 0; p < a.size(); ++p) {
      Face a_minus = without_position(a, p);
      Face g_minus = set_union(a_minus, b);
      std::size_t dd = g_minus == g ? d : complex.ancestor(g, d, g_minus);
      comp.parents.push_back(new_index.at({a_minus, dd}));
    }
    comp.parents.push_back(complex.ancestor(g, d, a));
  }
  return SncComplex(complex.dim(), std::move(vertices), complex.top_label(), std::move(faces));
}

SncComplex point_complex(const Generator& top) { return SncComplex(top.degree(), {}, top, {}); }

SncComplex toric_complex(int n) {
  if (n < 0 || n > 16) throw ArgumentError("toric complex needs 0 <= n <= 16");
  if (n == 0) return point_complex();
  std::vector<std::string> vertices;
  if (n == 1) {
    vertices = {"0", "inf"};
  } else {
    for (int i = 0; i <= n; ++i) vertices.push_back(std::to_string(i));
  }
  SncComplex::FaceMap faces;
  const unsigned full = (1u << (n + 1)) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    Face f;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) f.push_back(i);
    const int codim = static_cast<int>(f.size());
    Generator label = Generator::T(n - codim);
    // dt/t has residue 1 at 0 and -1 at infinity. For n >= 2 the sign of a
    // point stratum is multiplied by T^(n-1) and therefore immaterial.
    if (n == 1 && f[0] == 1) label = Generator::epsilon();
    faces.emplace(f, std::vector<Component>{{"c", label, std::vector<std::size_t>(codim > 1 ? codim : 0, 0)}});
  }
  return SncComplex(n, std::move(vertices), Generator::T(n), std::move(faces));
}

Universe universe_from_complex(const SncComplex& complex, ShuffleSign sign) {
  Universe u;
  struct Source {
    Face face;
    std::size_t comp;
    Generator label;
  };
  std::vector<Source> sources{{{}, 0, complex.top_label()}};
  for (const auto& [face, comps] : complex.faces())
    for (std::size_t i = 0; i < comps.size(); ++i) sources.push_back({face, i, comps[i].label});

  for (const auto& src : sources) {
    const auto& atoms = src.label.atoms();
    if (atoms.empty()) continue;
    const std::string where =
        src.face.empty() ? std::string("top label") : "face " + complex.face_name(src.face);
    if (atoms.size() > 1 || src.label.tpow() > 0)
      throw UnsupportedLabelError(where + ": label " + src.label.str() +
                                  " is not eps^e times a single atom");
    Element expansion;
    for (const auto& [g, comps] : complex.faces()) {
      if (g.size() <= src.face.size() || !contains_all(g, src.face)) continue;
      const Face c = set_difference(g, src.face);
      std::size_t inversions = 0;
      if (sign == ShuffleSign::Iterated)
        for (int gamma : c)
          for (int alpha : src.face)
            if (alpha < gamma) ++inversions;
      for (std::size_t d = 0; d < comps.size(); ++d) {
        if (!src.face.empty() && complex.ancestor(g, d, src.face) != src.comp) continue;
        Generator term = comps[d].label.times_T(static_cast<int>(c.size()) - 1);
        if (inversions % 2 == 1) term = term.times_eps();
        expansion.add_term(term, sign_of(c.size()));
      }
    }
    // label = eps^e * atom, hence d(atom) = eps^e * d(label).
    if (src.label.eps() == 1) expansion = expansion.times_eps();
    for (const auto& [g, _] : expansion.terms())
      for (const auto& a : g.atoms()) u.declare(a);
    u.declare(atoms.front());
    u.set_boundary(atoms.front()->id, expansion);
  }
  return u;
}

}  // namespace logburn
