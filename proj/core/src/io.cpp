#include "logburn/io.hpp"

#include "logburn/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <limits>
#include <set>

namespace logburn::io {

using json = nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Expressions

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '=' ||
         c == '.' || c == '\'';
}

bool valid_atom_id(std::string_view id) {
  if (id.empty() || !ident_start(id.front())) return false;
  if (id == "eps" || id == "T") return false;
  return std::all_of(id.begin(), id.end(), ident_char);
}

class ExprParser {
 public:
  ExprParser(std::string_view text, const AtomRegistry& registry, CoeffDomain domain)
      : text_(text), registry_(registry), domain_(domain) {}

  Element parse() {
    skip();
    if (at_end()) fail("empty expression");
    Element value = sum();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 1, static_cast<int>(pos_) + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Element sum() {
    Element acc(domain_);
    bool negative = false;
    skip();
    if (accept('-'))
      negative = true;
    else
      accept('+');
    for (;;) {
      Element t = product();
      acc += negative ? -t : t;
      skip();
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        return acc;
    }
  }

  Element product() {
    Element acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Element power() {
    if (accept('-')) return -power();
    Element base = primary();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    const std::string digits = number();
    if (digits.size() > 3 || std::stoi(digits) > 64) {
      pos_ = start;
      fail("exponent too large");
    }
    Element out = Element::one(domain_);
    for (int i = std::stoi(digits); i > 0; --i) out = out * base;
    return out;
  }

  std::string number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    if (!ident_start(peek())) fail("expected an atom id");
    while (!at_end() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  AtomPtr atom(const std::string& id, std::size_t start) {
    AtomPtr a = registry_.find(id);
    if (!a) {
      pos_ = start;
      fail("unknown atom '" + id + "'");
    }
    return a;
  }

  Element primary() {
    skip();
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = number();
      if (peek() == '/') {
        ++pos_;
        if (peek() != '2') fail("expected '2' in a dyadic literal");
        ++pos_;
        if (peek() != '^') fail("expected '^' in a dyadic literal");
        ++pos_;
        literal += "/2^" + number();
      }
      Dyadic value;
      try {
        value = Dyadic::parse(literal);
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
      if (domain_ == CoeffDomain::Integer && !value.is_integer()) {
        pos_ = start;
        fail("non-integral coefficient in an integer element");
      }
      return Element(Generator::unit(), value, domain_);
    }
    if (c == '(') {
      ++pos_;
      Element inner = sum();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      std::vector<RawAtom> raw;
      do {
        skip();
        const std::size_t at = pos_;
        raw.push_back({atom(identifier(), at), false});
      } while (accept('*'));
      expect(']');
      return Element(Generator::normalize(raw, 0, 0), 1, domain_);
    }
    if (ident_start(c)) {
      const std::string id = identifier();
      if (id == "eps") return Element::eps(domain_);
      if (id == "T") return Element::T(1, domain_);
      return Element(Generator::of(atom(id, start)), 1, domain_);
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const AtomRegistry& registry_;
  CoeffDomain domain_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// JSON helpers

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string indexed(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& require_object(const json& j, const std::string& path,
                           std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw SchemaError("field '" + path + "' must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw SchemaError("unknown field '" + join(path, key) + "'");
  }
  return j;
}

const json* optional(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& required(const json& obj, const std::string& path, const char* key) {
  const json* v = optional(obj, key);
  if (!v) throw SchemaError("missing field '" + join(path, key) + "'");
  return *v;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError("field '" + path + "' must be a string");
  return j.get<std::string>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError("field '" + path + "' must be an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw SchemaError("field '" + path + "' is out of range");
  return static_cast<int>(v);
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError("field '" + path + "' must be a boolean");
  return j.get<bool>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError("field '" + path + "' must be an array");
  return j;
}

Element element_field(const json& j, const std::string& path, const AtomRegistry& registry,
                      CoeffDomain domain = CoeffDomain::Integer) {
  const std::string text = as_string(j, path);
  try {
    return parse_element(text, registry, domain);
  } catch (const ParseError& e) {
    throw SchemaError("field '" + path + "': " + e.what());
  }
}

Generator generator_field(const json& j, const std::string& path, const AtomRegistry& registry) {
  const std::string text = as_string(j, path);
  try {
    return parse_generator(text, registry);
  } catch (const ParseError& e) {
    throw SchemaError("field '" + path + "': " + e.what());
  } catch (const ArgumentError& e) {
    throw SchemaError("field '" + path + "': " + e.what());
  }
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  std::vector<std::string> out;
  const json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_string(arr[i], indexed(path, i)));
  return out;
}

// Atom declarations; `boundaries` receives the raw boundary field of each
// atom when given (universe documents only).
AtomRegistry parse_atoms(const json& arr, const std::string& path,
                         std::vector<std::pair<std::string, const json*>>* boundaries) {
  AtomRegistry registry;
  as_array(arr, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = indexed(path, i);
    const json& a = boundaries
                        ? require_object(arr[i], p, {"id", "dim", "eps_self_dual", "mu_order", "boundary"})
                        : require_object(arr[i], p, {"id", "dim", "eps_self_dual", "mu_order"});
    Atom atom;
    atom.id = as_string(required(a, p, "id"), join(p, "id"));
    if (!valid_atom_id(atom.id)) throw SchemaError("field '" + join(p, "id") + "': invalid atom id '" + atom.id + "'");
    atom.dim = as_int(required(a, p, "dim"), join(p, "dim"));
    if (atom.dim < 0) throw SchemaError("field '" + join(p, "dim") + "' must be nonnegative");
    if (const json* v = optional(a, "eps_self_dual")) atom.eps_self_dual = as_bool(*v, join(p, "eps_self_dual"));
    if (const json* v = optional(a, "mu_order")) {
      atom.mu_order = as_int(*v, join(p, "mu_order"));
      if (*atom.mu_order < 1) throw SchemaError("field '" + join(p, "mu_order") + "' must be positive");
    }
    if (registry.find(atom.id)) throw SchemaError("atom '" + atom.id + "' declared twice");
    registry.declare(atom);
    if (boundaries) boundaries->emplace_back(atom.id, optional(a, "boundary"));
  }
  return registry;
}

json print_atom(const Atom& atom) {
  json j = {{"id", atom.id}, {"dim", atom.dim}, {"eps_self_dual", atom.eps_self_dual}};
  if (atom.mu_order) j["mu_order"] = *atom.mu_order;
  return j;
}

json print_atoms(const AtomRegistry& registry) {
  json arr = json::array();
  for (const auto& [id, atom] : registry.atoms()) arr.push_back(print_atom(*atom));
  return arr;
}

// ---------------------------------------------------------------------------
// Kinds

UniverseDoc parse_universe(const json& root) {
  require_object(root, "", {"kind", "version", "atoms"});
  std::vector<std::pair<std::string, const json*>> boundaries;
  AtomRegistry registry = parse_atoms(required(root, "", "atoms"), "atoms", &boundaries);
  UniverseDoc doc;
  for (const auto& [id, atom] : registry.atoms()) doc.universe.declare(atom);
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    const auto& [id, field] = boundaries[i];
    if (!field) continue;
    const std::string p = join(indexed("atoms", i), "boundary");
    const std::string text = as_string(*field, p);
    if (text == "unknown") continue;
    try {
      if (text == "closed") {
        doc.universe.set_closed(id);
      } else {
        doc.universe.set_boundary(id, element_field(*field, p, registry));
      }
    } catch (const RegistryError& e) {
      throw ValidationError("atom '" + id + "': " + e.what());
    } catch (const ArgumentError& e) {
      throw ValidationError("atom '" + id + "': " + e.what());
    }
  }
  return doc;
}

json print_universe(const UniverseDoc& doc) {
  json atoms = json::array();
  const Universe& u = doc.universe;
  for (const auto& [id, atom] : u.registry().atoms()) {
    json j = print_atom(*atom);
    switch (u.state(id)) {
      case Universe::State::Known:
        j["boundary"] = u.expansions().find(id)->second.str();
        break;
      case Universe::State::Closed:
        j["boundary"] = "closed";
        break;
      case Universe::State::Unknown:
        j["boundary"] = "unknown";
        break;
    }
    atoms.push_back(std::move(j));
  }
  return {{"atoms", atoms}};
}

ElementDoc parse_element_doc(const json& root) {
  require_object(root, "", {"kind", "version", "atoms", "domain", "value"});
  ElementDoc doc{parse_atoms(required(root, "", "atoms"), "atoms", nullptr), {}};
  CoeffDomain domain = CoeffDomain::Integer;
  if (const json* d = optional(root, "domain")) {
    const std::string name = as_string(*d, "domain");
    if (name == "dyadic")
      domain = CoeffDomain::Dyadic;
    else if (name != "integer")
      throw SchemaError("field 'domain' must be \"integer\" or \"dyadic\"");
  }
  doc.value = element_field(required(root, "", "value"), "value", doc.atoms, domain);
  return doc;
}

json print_element_doc(const ElementDoc& doc) {
  return {{"atoms", print_atoms(doc.atoms)},
          {"domain", doc.value.domain() == CoeffDomain::Dyadic ? "dyadic" : "integer"},
          {"value", doc.value.str()}};
}

struct RawComponent {
  std::string id;
  Generator label;
  std::optional<std::vector<std::string>> parents;
  std::string path;
};

ComplexDoc parse_complex(const json& root) {
  require_object(root, "", {"kind", "version", "atoms", "dim", "vertices", "top", "faces"});
  AtomRegistry atoms = parse_atoms(required(root, "", "atoms"), "atoms", nullptr);
  const int dim = as_int(required(root, "", "dim"), "dim");
  const std::vector<std::string> vertices = string_list(required(root, "", "vertices"), "vertices");
  std::map<std::string, int, std::less<>> position;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!position.emplace(vertices[i], static_cast<int>(i)).second)
      throw SchemaError("vertex '" + vertices[i] + "' listed twice");
  const Generator top = generator_field(required(root, "", "top"), "top", atoms);

  std::map<Face, std::vector<RawComponent>> raw;
  const json& faces = as_array(required(root, "", "faces"), "faces");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::string p = indexed("faces", i);
    const json& f = require_object(faces[i], p, {"vertices", "components"});
    Face face;
    for (const auto& name : string_list(required(f, p, "vertices"), join(p, "vertices"))) {
      const auto it = position.find(name);
      if (it == position.end()) throw SchemaError("field '" + join(p, "vertices") + "' names unknown vertex '" + name + "'");
      face.push_back(it->second);
    }
    std::sort(face.begin(), face.end());
    if (face.empty()) throw SchemaError("field '" + join(p, "vertices") + "' is empty");
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
      throw SchemaError("field '" + join(p, "vertices") + "' repeats a vertex");
    std::vector<RawComponent> comps;
    const json& cs = as_array(required(f, p, "components"), join(p, "components"));
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const std::string cp = indexed(join(p, "components"), k);
      const json& c = require_object(cs[k], cp, {"id", "label", "parents"});
      RawComponent rc{as_string(required(c, cp, "id"), join(cp, "id")),
                      generator_field(required(c, cp, "label"), join(cp, "label"), atoms),
                      std::nullopt, cp};
      if (const json* par = optional(c, "parents")) rc.parents = string_list(*par, join(cp, "parents"));
      comps.push_back(std::move(rc));
    }
    if (!raw.emplace(face, std::move(comps)).second)
      throw SchemaError("face " + std::string(p) + " is listed twice");
  }

  SncComplex::FaceMap map;
  for (const auto& [face, comps] : raw) {
    std::vector<Component> out;
    for (const auto& rc : comps) {
      Component c{rc.id, rc.label, {}};
      if (face.size() > 1) {
        if (rc.parents && rc.parents->size() != face.size())
          throw SchemaError("field '" + join(rc.path, "parents") + "' must list " +
                            std::to_string(face.size()) + " parents");
        for (std::size_t i = 0; i < face.size(); ++i) {
          Face sub = face;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
          const auto it = raw.find(sub);
          if (it == raw.end()) {
            // Left to the complex validator, which names the missing face.
            c.parents.push_back(0);
            continue;
          }
          const auto& subcomps = it->second;
          if (!rc.parents) {
            if (subcomps.size() != 1)
              throw SchemaError("field '" + join(rc.path, "parents") + "' is required here");
            c.parents.push_back(0);
            continue;
          }
          const auto pos = std::find_if(subcomps.begin(), subcomps.end(),
                                        [&](const RawComponent& s) { return s.id == (*rc.parents)[i]; });
          if (pos == subcomps.end())
            throw SchemaError("field '" + join(rc.path, "parents") + "' names unknown component '" +
                              (*rc.parents)[i] + "'");
          c.parents.push_back(static_cast<std::size_t>(pos - subcomps.begin()));
        }
      }
      out.push_back(std::move(c));
    }
    map.emplace(face, std::move(out));
  }
  return ComplexDoc{std::move(atoms), SncComplex(dim, vertices, top, std::move(map))};
}

json print_complex(const ComplexDoc& doc) {
  const SncComplex& k = doc.complex;
  json faces = json::array();
  for (const auto& [face, comps] : k.faces()) {
    json names = json::array();
    for (int v : face) names.push_back(k.vertices()[static_cast<std::size_t>(v)]);
    json cs = json::array();
    for (const auto& c : comps) {
      json parents = json::array();
      for (std::size_t i = 0; i < c.parents.size(); ++i) {
        Face sub = face;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        parents.push_back((*k.components(sub))[c.parents[i]].id);
      }
      cs.push_back({{"id", c.id}, {"label", c.label.str()}, {"parents", parents}});
    }
    faces.push_back({{"vertices", names}, {"components", cs}});
  }
  return {{"atoms", print_atoms(doc.atoms)},
          {"dim", k.dim()},
          {"vertices", k.vertices()},
          {"top", k.top_label().str()},
          {"faces", faces}};
}

ModelDoc parse_model(const json& root) {
  require_object(root, "", {"kind", "version", "atoms", "n", "vertical", "horizontal", "strata"});
  ModelDoc doc{parse_atoms(required(root, "", "atoms"), "atoms", nullptr), {}};
  DvrModel& m = doc.model;
  m.n = as_int(required(root, "", "n"), "n");
  const json& vertical = as_array(required(root, "", "vertical"), "vertical");
  for (std::size_t i = 0; i < vertical.size(); ++i) {
    const std::string p = indexed("vertical", i);
    const json& v = require_object(vertical[i], p, {"id", "e", "d"});
    m.vertical.push_back({as_string(required(v, p, "id"), join(p, "id")),
                          as_int(required(v, p, "e"), join(p, "e")),
                          as_int(required(v, p, "d"), join(p, "d"))});
  }
  if (const json* horizontal = optional(root, "horizontal")) {
    as_array(*horizontal, "horizontal");
    for (std::size_t i = 0; i < horizontal->size(); ++i) {
      const std::string p = indexed("horizontal", i);
      const json& h = require_object((*horizontal)[i], p, {"id", "d"});
      m.horizontal.push_back({as_string(required(h, p, "id"), join(p, "id")),
                              as_int(required(h, p, "d"), join(p, "d"))});
    }
  }
  const json& strata = as_array(required(root, "", "strata"), "strata");
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string p = indexed("strata", i);
    const json& s = require_object(strata[i], p, {"components", "label"});
    StratumKey key = string_list(required(s, p, "components"), join(p, "components"));
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
      throw SchemaError("field '" + join(p, "components") + "' repeats a component");
    const Generator label = generator_field(required(s, p, "label"), join(p, "label"), doc.atoms);
    if (!m.strata.emplace(std::move(key), label).second)
      throw SchemaError("stratum " + p + " is listed twice");
  }
  m.validate();
  return doc;
}

json print_model(const ModelDoc& doc) {
  const DvrModel& m = doc.model;
  json vertical = json::array();
  for (const auto& v : m.vertical) vertical.push_back({{"id", v.id}, {"e", v.e}, {"d", v.d}});
  json horizontal = json::array();
  for (const auto& h : m.horizontal) horizontal.push_back({{"id", h.id}, {"d", h.d}});
  json strata = json::array();
  for (const auto& [key, label] : m.strata) strata.push_back({{"components", key}, {"label", label.str()}});
  return {{"atoms", print_atoms(doc.atoms)},
          {"n", m.n},
          {"vertical", vertical},
          {"horizontal", horizontal},
          {"strata", strata}};
}

MorphismData parse_morphism(const json& j, const std::string& path, const AtomRegistry& atoms) {
  require_object(j, path, {"source", "target", "exceptional"});
  MorphismData f{generator_field(required(j, path, "source"), join(path, "source"), atoms),
                 generator_field(required(j, path, "target"), join(path, "target"), atoms),
                 {}};
  const std::string ep = join(path, "exceptional");
  const json& exc = as_array(required(j, path, "exceptional"), ep);
  for (std::size_t i = 0; i < exc.size(); ++i) {
    const std::string p = indexed(ep, i);
    const json& e = require_object(exc[i], p, {"divisor", "residue"});
    const std::string id = as_string(required(e, p, "divisor"), join(p, "divisor"));
    AtomPtr divisor = atoms.find(id);
    if (!divisor) throw SchemaError("field '" + join(p, "divisor") + "' names unknown atom '" + id + "'");
    f.exceptional.push_back({divisor, generator_field(required(e, p, "residue"), join(p, "residue"), atoms)});
  }
  return f;
}

json print_morphism(const MorphismData& f) {
  json exc = json::array();
  for (const auto& e : f.exceptional)
    exc.push_back({{"divisor", e.divisor->id}, {"residue", e.residue.str()}});
  return {{"source", f.source.str()}, {"target", f.target.str()}, {"exceptional", exc}};
}

RoofPresentation parse_roof_body(const json& j, const std::string& path, const AtomRegistry& atoms) {
  RoofPresentation roof{generator_field(required(j, path, "x"), join(path, "x"), atoms),
                        generator_field(required(j, path, "y"), join(path, "y"), atoms),
                        parse_morphism(required(j, path, "p"), join(path, "p"), atoms),
                        parse_morphism(required(j, path, "q"), join(path, "q"), atoms)};
  roof.validate();
  return roof;
}

json print_roof_body(const RoofPresentation& roof) {
  return {{"x", roof.x.str()}, {"y", roof.y.str()}, {"p", print_morphism(roof.p)}, {"q", print_morphism(roof.q)}};
}

RoofDoc parse_roof(const json& root) {
  require_object(root, "", {"kind", "version", "atoms", "x", "y", "p", "q"});
  RoofDoc doc{parse_atoms(required(root, "", "atoms"), "atoms", nullptr), {}};
  doc.roof = parse_roof_body(root, "", doc.atoms);
  return doc;
}

ChainDoc parse_chain(const json& root) {
  require_object(root, "", {"kind", "version", "atoms", "roofs", "glues"});
  ChainDoc doc{parse_atoms(required(root, "", "atoms"), "atoms", nullptr), {}};
  const json& roofs = as_array(required(root, "", "roofs"), "roofs");
  for (std::size_t i = 0; i < roofs.size(); ++i) {
    const std::string p = indexed("roofs", i);
    require_object(roofs[i], p, {"x", "y", "p", "q"});
    doc.chain.roofs.push_back(parse_roof_body(roofs[i], p, doc.atoms));
  }
  const json& glues = as_array(required(root, "", "glues"), "glues");
  for (std::size_t i = 0; i < glues.size(); ++i) {
    const std::string p = indexed("glues", i);
    require_object(glues[i], p, {"u", "v"});
    doc.chain.glues.push_back({parse_morphism(required(glues[i], p, "u"), join(p, "u"), doc.atoms),
                         parse_morphism(required(glues[i], p, "v"), join(p, "v"), doc.atoms)});
  }
  if (doc.chain.roofs.empty()) throw SchemaError("field 'roofs' must not be empty");
  if (doc.chain.glues.size() + 1 != doc.chain.roofs.size())
    throw SchemaError("field 'glues' must have one entry fewer than 'roofs'");
  composite(doc.chain);
  return doc;
}

json print_chain(const ChainDoc& doc) {
  json roofs = json::array();
  for (const auto& r : doc.chain.roofs) roofs.push_back(print_roof_body(r));
  json glues = json::array();
  for (const auto& g : doc.chain.glues) glues.push_back({{"u", print_morphism(g.u)}, {"v", print_morphism(g.v)}});
  return {{"atoms", print_atoms(doc.atoms)}, {"roofs", roofs}, {"glues", glues}};
}

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

void collect(const Generator& g, AtomRegistry& out) {
  for (const auto& a : g.atoms()) out.declare(a);
}

}  // namespace

Element parse_element(std::string_view text, const AtomRegistry& registry, CoeffDomain domain) {
  return ExprParser(text, registry, domain).parse();
}

Generator parse_generator(std::string_view text, const AtomRegistry& registry) {
  const Element x = parse_element(text, registry);
  if (x.size() != 1 || x.terms().begin()->second != Dyadic(1))
    throw ArgumentError("'" + std::string(text) + "' is not a single generator");
  return x.terms().begin()->first;
}

std::string kind_of(const Document& doc) {
  static constexpr const char* kNames[] = {"universe", "element", "complex", "model", "roof", "chain"};
  return kNames[doc.index()];
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t offset = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    std::string reason = e.what();
    const auto colon = reason.find(": ", reason.find("column"));
    reason = colon == std::string::npos ? "syntax error" : reason.substr(colon + 2);
    throw ParseError(reason, line, static_cast<int>(offset - line_start) + 1);
  }
  if (!root.is_object()) throw SchemaError("document must be a JSON object");
  const std::string kind = as_string(required(root, "", "kind"), "kind");
  const std::string version = as_string(required(root, "", "version"), "version");
  if (version != "1") throw SchemaError("unsupported version '" + version + "'");
  if (kind == "universe") return parse_universe(root);
  if (kind == "element") return parse_element_doc(root);
  if (kind == "complex") return parse_complex(root);
  if (kind == "model") return parse_model(root);
  if (kind == "roof") return parse_roof(root);
  if (kind == "chain") return parse_chain(root);
  throw SchemaError("unknown document kind '" + kind + "'");
}

std::string print_document(const Document& doc) {
  json body = std::visit(Overloaded{
                             [](const UniverseDoc& d) { return print_universe(d); },
                             [](const ElementDoc& d) { return print_element_doc(d); },
                             [](const ComplexDoc& d) { return print_complex(d); },
                             [](const ModelDoc& d) { return print_model(d); },
                             [](const RoofDoc& d) {
                               json j = print_roof_body(d.roof);
                               j["atoms"] = print_atoms(d.atoms);
                               return j;
                             },
                             [](const ChainDoc& d) { return print_chain(d); },
                         },
                         doc);
  body["kind"] = kind_of(doc);
  body["version"] = "1";
  return body.dump(2) + "\n";
}

AtomRegistry atoms_of(const Element& x) {
  AtomRegistry out;
  for (const auto& [g, c] : x.terms()) collect(g, out);
  return out;
}

AtomRegistry atoms_of(const SncComplex& complex) {
  AtomRegistry out;
  collect(complex.top_label(), out);
  for (const auto& [face, comps] : complex.faces())
    for (const auto& c : comps) collect(c.label, out);
  return out;
}

}  // namespace logburn::io
