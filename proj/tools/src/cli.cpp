#include "logburn_cli/cli.hpp"

#include "logburn/birational.hpp"
#include "logburn/error.hpp"
#include "logburn/io.hpp"
#include "logburn/properties.hpp"
#include "logburn/residue.hpp"
#include "logburn/snc_complex.hpp"
#include "logburn/specialization.hpp"
#include "logburn/two_local.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace logburn::cli {

namespace {

// Unreadable files and documents of the wrong kind.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

io::Document load(const std::string& path, std::istream& in) {
  try {
    return io::parse_document(read_input(path, in));
  } catch (const ParseError& e) {
    throw InputError(path + ": syntax error: " + e.what());
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class Doc>
Doc load_as(const std::string& path, std::istream& in) {
  io::Document doc = load(path, in);
  if (auto* d = std::get_if<Doc>(&doc)) return std::move(*d);
  throw InputError(path + ": unexpected document kind '" + io::kind_of(doc) + "'");
}

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string set_str(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
  return out + "}";
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream s(text);
  while (std::getline(s, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

// Atoms to resolve a command-line expression against: those of any
// document kind that declares atoms.
AtomRegistry registry_of(const io::Document& doc) {
  return std::visit(
      [](const auto& d) -> AtomRegistry {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, io::UniverseDoc>)
          return d.universe.registry();
        else
          return d.atoms;
      },
      doc);
}

Universe universe_of(const io::Document& doc) {
  if (const auto* u = std::get_if<io::UniverseDoc>(&doc)) return u->universe;
  if (const auto* c = std::get_if<io::ComplexDoc>(&doc)) return universe_from_complex(c->complex);
  throw InputError("expected a universe or complex document, got '" + io::kind_of(doc) + "'");
}

Element expression(const std::string& text, const AtomRegistry& atoms, CoeffDomain domain) {
  try {
    return io::parse_element(text, atoms, domain);
  } catch (const ParseError& e) {
    throw InputError("expression '" + text + "': " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic with classes of varieties with logarithmic volume forms", "logburn"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::function<int()> action;

  // normalize
  std::string normalize_file;
  std::string normalize_expr;
  std::string normalize_atoms;
  bool normalize_dyadic = false;
  auto* normalize = app.add_subcommand("normalize", "Print an element in canonical form");
  normalize->add_option("file", normalize_file, "Element document ('-' for stdin)");
  normalize->add_option("--expr", normalize_expr, "Expression to normalize instead of a document");
  normalize->add_option("--atoms", normalize_atoms, "Document declaring the atoms used by --expr");
  normalize->add_flag("--dyadic", normalize_dyadic, "Parse --expr with dyadic coefficients");
  normalize->callback([&] {
    action = [&]() -> int {
      if (!normalize_expr.empty()) {
        const AtomRegistry atoms = normalize_atoms.empty() ? AtomRegistry{} : registry_of(load(normalize_atoms, in));
        out << expression(normalize_expr, atoms, normalize_dyadic ? CoeffDomain::Dyadic : CoeffDomain::Integer).str()
            << "\n";
        return kOk;
      }
      if (normalize_file.empty()) throw InputError("normalize needs a document or --expr");
      out << load_as<io::ElementDoc>(normalize_file, in).value.str() << "\n";
      return kOk;
    };
  });

  // mul
  std::vector<std::string> mul_files;
  auto* mul = app.add_subcommand("mul", "Multiply element documents left to right");
  mul->add_option("files", mul_files, "Element documents")->required()->expected(2, -1);
  mul->callback([&] {
    action = [&]() -> int {
      Element acc = load_as<io::ElementDoc>(mul_files.front(), in).value;
      for (std::size_t i = 1; i < mul_files.size(); ++i) {
        Element next = load_as<io::ElementDoc>(mul_files[i], in).value;
        if (acc.domain() != next.domain()) {
          acc = acc.to_dyadic();
          next = next.to_dyadic();
        }
        acc = acc * next;
      }
      out << acc.str() << "\n";
      return kOk;
    };
  });

  // residue
  std::string residue_file;
  auto* residue = app.add_subcommand("residue", "Residue of the top class of a complex");
  residue->add_option("file", residue_file, "Complex document")->required();
  residue->callback([&] {
    action = [&]() -> int {
      out << residue_element(load_as<io::ComplexDoc>(residue_file, in).complex).str() << "\n";
      return kOk;
    };
  });

  // verify dd0 / leibniz
  auto* verify = app.add_subcommand("verify", "Check identities of the residue map");
  verify->require_subcommand(1);

  std::string dd0_file;
  std::string dd0_universe;
  std::vector<std::string> dd0_elements;
  auto* dd0 = verify->add_subcommand("dd0", "Check that d(d(x)) = 0; silent on success");
  dd0->add_option("file", dd0_file, "Complex or universe document: check every atom (and the top class)");
  dd0->add_option("--universe", dd0_universe, "Universe or complex document providing boundaries");
  dd0->add_option("--element", dd0_elements, "Expression to check (repeatable)");
  dd0->callback([&] {
    action = [&]() -> int {
      std::vector<Element> targets;
      Universe u;
      if (!dd0_universe.empty()) {
        if (dd0_elements.empty()) throw InputError("--universe needs at least one --element");
        u = universe_of(load(dd0_universe, in));
        for (const auto& e : dd0_elements) targets.push_back(expression(e, u.registry(), CoeffDomain::Integer));
      } else {
        if (dd0_file.empty()) throw InputError("verify dd0 needs a document or --universe");
        const io::Document doc = load(dd0_file, in);
        u = universe_of(doc);
        if (const auto* c = std::get_if<io::ComplexDoc>(&doc)) targets.emplace_back(c->complex.top_label());
        for (const auto& [id, atom] : u.registry().atoms())
          if (u.state(id) != Universe::State::Unknown) targets.emplace_back(Generator::of(atom));
      }
      int status = kOk;
      for (const auto& x : targets) {
        const Dd0Report report = verify_dd0(x, u);
        if (!report.ok()) {
          out << "d(d(" << x.str() << ")) = " << report.residual.str() << "\n";
          status = kVerificationFailed;
        }
      }
      return status;
    };
  });

  std::vector<std::string> leibniz_files;
  std::string leibniz_universe;
  std::string leibniz_a;
  std::string leibniz_b;
  auto* leibniz = verify->add_subcommand("leibniz", "Check the twisted Leibniz rule; silent on success");
  leibniz->add_option("complexes", leibniz_files, "Two complex documents: compare with their product")->expected(0, 2);
  leibniz->add_option("--universe", leibniz_universe, "Universe or complex document providing boundaries");
  leibniz->add_option("--a", leibniz_a, "Left factor (homogeneous expression)");
  leibniz->add_option("--b", leibniz_b, "Right factor (homogeneous expression)");
  leibniz->callback([&] {
    action = [&]() -> int {
      LeibnizReport report;
      if (!leibniz_universe.empty()) {
        if (leibniz_a.empty() || leibniz_b.empty()) throw InputError("--universe needs --a and --b");
        const Universe u = universe_of(load(leibniz_universe, in));
        report = verify_leibniz(expression(leibniz_a, u.registry(), CoeffDomain::Integer),
                                expression(leibniz_b, u.registry(), CoeffDomain::Integer), u);
      } else {
        if (leibniz_files.size() != 2) throw InputError("verify leibniz needs two complexes or --universe");
        const SncComplex left = load_as<io::ComplexDoc>(leibniz_files[0], in).complex;
        const SncComplex right = load_as<io::ComplexDoc>(leibniz_files[1], in).complex;
        Universe u = universe_from_complex(left);
        u.merge(universe_from_complex(right));
        report = verify_leibniz_product(left, right, u);
      }
      if (report.ok()) return kOk;
      if (!report.difference.is_zero()) out << "difference: " << report.difference.str() << "\n";
      if (report.times_T_difference && !report.times_T_difference->is_zero())
        out << "times T difference: " << report.times_T_difference->str() << "\n";
      return kVerificationFailed;
    };
  });

  // blowup
  std::string blowup_file;
  std::string blowup_face;
  std::size_t blowup_component = 0;
  auto* blowup = app.add_subcommand("blowup", "Blow up a stratum and print the new complex");
  blowup->add_option("file", blowup_file, "Complex document")->required();
  blowup->add_option("--face", blowup_face, "Comma-separated vertex names of the stratum")->required();
  blowup->add_option("--component", blowup_component, "Index of the stratum component (default 0)");
  blowup->callback([&] {
    action = [&]() -> int {
      io::ComplexDoc doc = load_as<io::ComplexDoc>(blowup_file, in);
      Face face;
      for (const auto& name : split_commas(blowup_face)) {
        const int v = doc.complex.vertex_index(name);
        if (v < 0) throw InputError("unknown vertex '" + name + "'");
        face.push_back(v);
      }
      std::sort(face.begin(), face.end());
      SncComplex result = blowup_stratum(doc.complex, face, blowup_component);
      out << io::print_document(io::ComplexDoc{doc.atoms, std::move(result)});
      return kOk;
    };
  });

  // product
  std::vector<std::string> product_files;
  auto* product_cmd = app.add_subcommand("product", "Print the complex of a product");
  product_cmd->add_option("files", product_files, "Two complex documents")->required()->expected(2);
  product_cmd->callback([&] {
    action = [&]() -> int {
      io::ComplexDoc left = load_as<io::ComplexDoc>(product_files[0], in);
      const io::ComplexDoc right = load_as<io::ComplexDoc>(product_files[1], in);
      left.atoms.merge(right.atoms);
      out << io::print_document(io::ComplexDoc{left.atoms, product(left.complex, right.complex)});
      return kOk;
    };
  });

  // cinv
  std::string cinv_file;
  bool cinv_compose = false;
  auto* cinv = app.add_subcommand("cinv", "Invariant c of a birational map given by a roof");
  cinv->add_option("file", cinv_file, "Roof document, or chain document with --compose")->required();
  cinv->add_flag("--compose", cinv_compose, "Read a chain and check additivity along it");
  cinv->callback([&] {
    action = [&]() -> int {
      if (!cinv_compose) {
        out << c_invariant(load_as<io::RoofDoc>(cinv_file, in).roof).str() << "\n";
        return kOk;
      }
      const io::ChainDoc doc = load_as<io::ChainDoc>(cinv_file, in);
      Element sum;
      for (std::size_t i = 0; i < doc.chain.roofs.size(); ++i) {
        const Element c = c_invariant(doc.chain.roofs[i]);
        out << "c[" << i << "] = " << c.str() << "\n";
        sum += c;
      }
      const Element total = c_invariant(composite(doc.chain));
      out << "sum = " << sum.str() << "\n";
      out << "c(composite) = " << total.str() << "\n";
      return total == sum ? kOk : kVerificationFailed;
    };
  });

  // sectors
  std::string sectors_file;
  std::string sectors_universe;
  auto* sectors = app.add_subcommand("sectors", "Split an element along eps = +1 and eps = -1");
  sectors->add_option("file", sectors_file, "Element document")->required();
  sectors->add_option("--universe", sectors_universe, "Boundaries for the B+/B- split of the eps = +1 part");
  sectors->callback([&] {
    action = [&]() -> int {
      const Element x = load_as<io::ElementDoc>(sectors_file, in).value;
      const SectorSplit split = sector_split(x);
      std::ostringstream text;
      text << "eps=+1: " << split.plus.str() << "\n";
      text << "eps=-1: " << split.minus.str() << "\n";
      if (!sectors_universe.empty()) {
        const Universe u = universe_of(load(sectors_universe, in));
        const PlusMinusSplit pm = plus_minus_split(split.plus, u);
        text << "B+: " << pm.bplus.str() << "\n";
        text << "B-: " << pm.bminus.str() << "\n";
      }
      out << text.str();
      return kOk;
    };
  });

  // specialize
  std::string specialize_file;
  bool equivariant = false;
  auto* specialize_cmd = app.add_subcommand("specialize", "Specialization of a model over a DVR");
  specialize_cmd->add_option("file", specialize_file, "Model document")->required();
  specialize_cmd->add_flag("--equivariant", equivariant, "Use mu-decorated classes (any kappa)");
  specialize_cmd->callback([&] {
    action = [&]() -> int {
      const DvrModel model = load_as<io::ModelDoc>(specialize_file, in).model;
      const LogSubcomplex sub = log_subcomplex(model);
      const Element value = equivariant ? specialize_equivariant(model) : specialize(model);
      out << "kappa = " << rational_str(kappa(model)) << "\n";
      out << "A_o = " << set_str(sub.a) << "\n";
      out << "B_o = " << set_str(sub.b) << "\n";
      out << "class = " << value.str() << "\n";
      return kOk;
    };
  });

  // selftest
  std::uint64_t seed = 1;
  auto* selftest = app.add_subcommand("selftest", "Run the randomized property suite");
  selftest->add_option("--seed", seed, "Random seed (default 1)");
  selftest->callback([&] {
    action = [&]() -> int { return properties::run_selftest(seed, out) ? kOk : kVerificationFailed; };
  });

  // canon / universe
  std::string canon_file;
  auto* canon = app.add_subcommand("canon", "Print a document in canonical form");
  canon->add_option("file", canon_file, "Any document")->required();
  canon->callback([&] {
    action = [&]() -> int {
      out << io::print_document(load(canon_file, in));
      return kOk;
    };
  });

  std::string universe_file;
  auto* universe = app.add_subcommand("universe", "Print the boundary table derived from a complex");
  universe->add_option("file", universe_file, "Complex document")->required();
  universe->callback([&] {
    action = [&]() -> int {
      const io::ComplexDoc doc = load_as<io::ComplexDoc>(universe_file, in);
      out << io::print_document(io::UniverseDoc{universe_from_complex(doc.complex)});
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace logburn::cli
