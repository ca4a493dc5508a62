#pragma once

// JSON documents and the element expression syntax. See FORMAT.md.

#include "logburn/birational.hpp"
#include "logburn/ring.hpp"
#include "logburn/snc_complex.hpp"
#include "logburn/specialization.hpp"
#include "logburn/universe.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace logburn::io {

/// Parses an expression such as `2 * [a*b] * eps - 3/2^1 * T^2 + (1 + eps) * c`.
/// Atom ids are resolved through `registry`. ParseError carries the
/// position within `text` (line 1).
Element parse_element(std::string_view text, const AtomRegistry& registry,
                      CoeffDomain domain = CoeffDomain::Integer);

/// Like parse_element but the result must be a single generator with
/// coefficient 1.
Generator parse_generator(std::string_view text, const AtomRegistry& registry);

struct UniverseDoc {
  Universe universe;
};

struct ElementDoc {
  AtomRegistry atoms;
  Element value;
};

struct ComplexDoc {
  AtomRegistry atoms;
  SncComplex complex;
};

struct ModelDoc {
  AtomRegistry atoms;
  DvrModel model;
};

struct RoofDoc {
  AtomRegistry atoms;
  RoofPresentation roof;
};

struct ChainDoc {
  AtomRegistry atoms;
  RoofChain chain;
};

using Document = std::variant<UniverseDoc, ElementDoc, ComplexDoc, ModelDoc, RoofDoc, ChainDoc>;

/// "universe", "element", "complex", "model", "roof" or "chain".
std::string kind_of(const Document& doc);

/// Parses and validates a document. ParseError for malformed JSON, SchemaError
/// for a wrong shape (naming the field), ValidationError for violated
/// invariants.
Document parse_document(std::string_view text);

/// Canonical serialization: sorted keys, two-space indentation, trailing newline.
std::string print_document(const Document& doc);

/// Atoms occurring in an element or in the labels of a complex.
AtomRegistry atoms_of(const Element& x);
AtomRegistry atoms_of(const SncComplex& complex);

}  // namespace logburn::io
