// Acceptance runner: one PASS/FAIL line per criterion, each with a wall-clock
// limit. Exits nonzero if any criterion fails.

#include "logburn/io.hpp"
#include "logburn/properties.hpp"
#include "logburn/random.hpp"
#include "logburn/residue.hpp"
#include "logburn/snc_complex.hpp"
#include "logburn/specialization.hpp"
#include "logburn/two_local.hpp"
#include "logburn_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace {

using namespace logburn;
using random::Rng;

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void require(const CheckResult& r, std::size_t min_trials) {
    if (!r.passed) fail(r.name + ": " + r.detail);
    else if (r.trials < min_trials) fail(r.name + ": only " + std::to_string(r.trials) + " trials");
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && s > limit_s) o.fail("took " + std::to_string(s) + " s");
  if (!o.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", s, limit_s);
  std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << title << " (" << timing << ")";
  if (!o.ok) std::cout << ": " << o.note;
  std::cout << std::endl;
}

// d(T^n) by repeated application of the twisted Leibniz rule to T^(n-1) * T,
// starting from d(T) = 1 + eps.
Element leibniz_power_oracle(int n) {
  const Element t = Element::T();
  const Element dt = Element::one() + Element::eps();
  Element power = Element::one();
  Element dpower;
  for (int k = 1; k <= n; ++k) {
    dpower = Element::eps() * dpower * t + power * dt - t * dpower * dt;
    power = power * t;
  }
  return dpower;
}

std::vector<AtomPtr> atoms_of(const Universe& u) {
  std::vector<AtomPtr> out;
  for (const auto& [id, a] : u.registry().atoms()) out.push_back(a);
  return out;
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome exact_torus_values() {
  Outcome o;
  const Universe empty;
  if (boundary(Element::T(), empty) != Element::one() + Element::eps()) o.fail("d(T)");
  for (int n = 1; n <= 8; ++n) {
    const Element d = boundary(Element::T(n), empty);
    const Element unified = (Element::one() + (n % 2 == 1 ? Element::eps() : -Element::eps())) * Element::T(n - 1);
    if (d != unified) o.fail("unified form at n=" + std::to_string(n) + ": " + d.str());
    if (d != leibniz_power_oracle(n)) o.fail("Leibniz oracle at n=" + std::to_string(n));
    if (n % 2 == 0 && !d.is_zero()) o.fail("d(T^" + std::to_string(n) + ") = " + d.str());
    if (n % 2 == 1 && n >= 3 && d != Element(Generator::T(n - 1), 2))
      o.fail("d(T^" + std::to_string(n) + ") = " + d.str());
  }
  return o;
}

Outcome dual_paths() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const SncComplex k = toric_complex(n);
    if (residue_element(k) != boundary(Element(k.top_label()), universe_from_complex(k)))
      o.fail("toric complex " + std::to_string(n));
  }
  // Single complexes: the top atom's expansion must reproduce the residue.
  Rng rng(2001);
  for (int i = 0; i < 200; ++i) {
    const SncComplex k = random::random_complex(rng, {1, 5, 6, "x", true});
    const Element geometric = residue_element(k);
    const Element algebraic = boundary(Element(k.top_label()), universe_from_complex(k));
    if (geometric != algebraic) o.fail("random complex " + std::to_string(i) + ": " + geometric.str());
  }
  // Products, where the two sides are computed independently.
  o.require(properties::dual_paths(2002, 200), 200);
  return o;
}

Outcome dd_zero() {
  Outcome o;
  o.require(properties::dd_zero(3001, 200), 200);
  for (int n = 1; n <= 5; ++n) {
    const SncComplex k = toric_complex(n);
    if (!verify_dd0(Element(k.top_label()), universe_from_complex(k)).ok()) o.fail("toric " + std::to_string(n));
  }
  // Negative control: every single mutation must be caught.
  int caught = 0;
  const int mutations = 50;
  for (int i = 0; i < mutations; ++i)
    caught += !properties::dd_zero(3100 + static_cast<std::uint64_t>(i), 1, properties::Mutation::VertexBoundary).passed;
  if (caught != mutations)
    o.fail("negative control: " + std::to_string(mutations - caught) + " mutated universes still satisfy d d = 0");
  return o;
}

Outcome twisted_leibniz() {
  Outcome o;
  o.require(properties::leibniz(4001, 200), 200);
  // Negative control: the untwisted rule d(a)b + a d(b) - T d(a) d(b) must
  // disagree with the residue of a product whose right factor has odd
  // dimension. (With b = T the twist is invisible, since eps T = T.)
  Rng rng(4002);
  int disagreements = 0;
  for (int i = 0; i < 50; ++i) {
    const SncComplex k = random::random_complex(rng, {1, 3, 3, "k", true});
    const int odd = rng.chance(1, 2) ? 1 : 3;
    const SncComplex l = random::random_complex(rng, {odd, odd, 3, "l", true});
    Universe u = universe_from_complex(k);
    u.merge(universe_from_complex(l));
    const Element a(k.top_label()), b(l.top_label());
    const Element da = boundary(a, u), db = boundary(b, u);
    const Element naive = da * b + a * db - Element::T() * da * db;
    disagreements += residue_element(product(k, l)) != naive;
  }
  if (disagreements == 0) o.fail("negative control: the untwisted rule was never rejected");
  return o;
}

Outcome blowups() {
  Outcome o;
  o.require(properties::blowup_invariance(5001, 200), 200);
  Rng rng(5002);
  int deep = 0;
  for (int i = 0; i < 50; ++i) {
    const SncComplex k = random::random_complex(rng, {2, 5, 5, "x", true});
    const SncComplex b = random::random_blowups(rng, k, 3);
    if (residue_element(b) != residue_element(k)) o.fail("depth-3 blow-up " + std::to_string(i));
    deep += b.vertices().size() == k.vertices().size() + 3;
  }
  // Blowing up a single vertex only renames it; most sequences must still be genuine.
  if (deep < 25) o.fail("only " + std::to_string(deep) + " depth-3 sequences added three vertices");
  return o;
}

Outcome two_local() {
  Outcome o;
  const std::set<std::string> required = {"F multiplicative", "F^2 = id", "d F = -d and F d = d",
                                          "d vanishes on B+", "(1/2)d and T are inverse",
                                          "graded Leibniz in sector -1"};
  std::set<std::string> seen;
  for (const auto& r : properties::sector_algebra(6001, 100)) {
    o.require(r, 100);
    seen.insert(r.name);
  }
  for (const auto& name : required)
    if (!seen.contains(name)) o.fail("missing check '" + name + "'");
  return o;
}

Outcome c_invariant_groupoid() {
  Outcome o;
  o.require(properties::c_groupoid(7001, 100), 100);
  return o;
}

// Smallest candidate threshold (-1 - d)/e that satisfies every constraint.
Rational kappa_oracle(const std::vector<VerticalComponent>& vertical) {
  std::optional<Rational> best;
  for (const auto& c : vertical) {
    const Rational t(-1 - c.d, c.e);
    const bool feasible = std::all_of(vertical.begin(), vertical.end(), [&](const VerticalComponent& v) {
      return t * Rational(v.e) + Rational(v.d) >= Rational(-1);
    });
    if (feasible && (!best || t < *best)) best = t;
  }
  return *best;
}

Outcome specialization() {
  Outcome o;
  Rng rng(8001);
  for (int i = 0; i < 500; ++i) {
    const DvrModel m = random::random_model(rng, {});
    for (const auto& v : m.vertical)
      if (v.e < 1 || v.e > 6 || v.d < -4 || v.d > 4) o.fail("profile out of range");
    if (kappa(m) != kappa_oracle(m.vertical)) o.fail("kappa mismatch on model " + std::to_string(i));
  }
  const auto smooth = std::get<io::ModelDoc>(io::parse_document(read(std::string(LOGBURN_FIXTURES) + "/smooth.model.json")));
  const Element s = specialize(smooth.model);
  if (s.size() != 1 || s.str() != "[Xo]") o.fail("smooth model gives " + s.str());
  o.require(properties::specialization(8002, 500), 500);
  return o;
}

Outcome io_round_trip() {
  Outcome o;
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LOGBURN_FIXTURES)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    const std::string text = read(entry.path());
    const std::string printed = io::print_document(io::parse_document(text));
    if (printed != text) o.fail(entry.path().filename().string() + " is not canonical");
    if (io::print_document(io::parse_document(printed)) != printed) o.fail(entry.path().filename().string());
  }
  if (files == 0) o.fail("no fixtures found");
  o.require(properties::round_trip(9001, 50), 50);
  auto capture = [](const std::vector<std::string>& args) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  const std::vector<std::string> selftest = {"selftest", "--seed", "42"};
  const std::string first = capture(selftest);
  if (first != capture(selftest)) o.fail("selftest output differs between runs");
  const std::vector<std::string> residue = {"residue", std::string(LOGBURN_FIXTURES) + "/two_divisors.complex.json"};
  if (capture(residue) != capture(residue)) o.fail("residue output differs between runs");
  return o;
}

}  // namespace

int main() {
  criterion(1, "exact torus boundaries", 1, exact_torus_values);
  criterion(2, "residue element agrees with boundary of the top atom", 10, dual_paths);
  criterion(3, "d d = 0 with negative control", 30, dd_zero);
  criterion(4, "twisted Leibniz rule and b = T", 30, twisted_leibniz);
  criterion(5, "blow-up invariance", 30, blowups);
  criterion(6, "two-local sector identities", 30, two_local);
  criterion(7, "c-invariant groupoid", 5, c_invariant_groupoid);
  criterion(8, "specialization", 5, specialization);
  criterion(9, "document round trip and reproducible output", 5, io_round_trip);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
