// Command-line front end: construct or load algebras, certify axes,
// decompose elements, run the identity suite, emit reports.
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "axial/axis.hpp"
#include "axial/catalog.hpp"
#include "axial/constructions.hpp"

namespace {

using namespace axial;

struct CliError : Error {
  using Error::Error;
};

FieldSpec parse_field_flag(const std::string& text) {
  if (text.empty() || text == "Q" || text == "QQ") return FieldSpec::rationals();
  std::string t = text;
  if (t.rfind("GF", 0) == 0) t = t.substr(2);
  if (!t.empty() && t.front() == '(') t = t.substr(1);
  if (!t.empty() && t.back() == ')') t.pop_back();
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw CliError(Error::Cat::Parse, "bad field '" + text + "' (use Q or GF<p>)");
  return FieldSpec::prime_field(std::stoull(t));
}

bool is_unsigned_int(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

// expr := ['+'|'-'] term (('+'|'-') term)*
// term := [scalar '*'] atom | scalar? atom;  atom := e<k> | 'a' | 'b'
// The whole-string literal "0" denotes the zero element.
Element parse_element(const std::string& text, const Fixture& fx) {
  const AlgebraRef& A = fx.algebra;
  const Field& F = A->field();
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw CliError(Error::Cat::Parse, "empty element expression");
  if (s == "0") return A->zero();

  Element acc = A->zero();
  std::size_t i = 0;
  while (i < s.size()) {
    Scalar sign = F.one();
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = F.neg(sign);
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string term = s.substr(start, i - start);
    if (term.empty())
      throw CliError(Error::Cat::Parse, "dangling sign in '" + text + "'");

    Scalar coeff = F.one();
    std::string atom = term;
    std::size_t star = term.find('*');
    if (star != std::string::npos) {
      coeff = scalar_parse(term.substr(0, star), A->field_spec());
      atom = term.substr(star + 1);
    }
    Element base = A->zero();
    if (atom == "a" || atom == "b") {
      const std::optional<Element>& named = (atom == "a") ? fx.a : fx.b;
      if (!named)
        throw CliError(Error::Cat::Parse,
                       "fixture '" + fx.name + "' defines no element '" + atom + "'");
      base = *named;
    } else if (atom.size() >= 2 && atom[0] == 'e' &&
               is_unsigned_int(atom.substr(1))) {
      std::size_t k = std::stoull(atom.substr(1));
      if (k >= A->dim())
        throw CliError(Error::Cat::Parse,
                       "basis index " + std::to_string(k) + " out of range (dim " +
                           std::to_string(A->dim()) + ")");
      base = A->basis_element(k);
    } else {
      throw CliError(Error::Cat::Parse, "bad term '" + term + "' in '" + text + "'");
    }
    acc = add(acc, scale(F.mul(sign, coeff), base));
  }
  return acc;
}

// Axis selectors additionally accept a bare basis index.
Element parse_selector(const std::string& text, const Fixture& fx) {
  if (is_unsigned_int(text)) {
    std::size_t k = std::stoull(text);
    if (k >= fx.algebra->dim())
      throw CliError(Error::Cat::Parse,
                     "basis index " + std::to_string(k) + " out of range (dim " +
                         std::to_string(fx.algebra->dim()) + ")");
    return fx.algebra->basis_element(k);
  }
  return parse_element(text, fx);
}

std::string coords_to_string(const Element& x) {
  const Field& F = x.algebra->field();
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ", ";
    out += F.to_string(x.coords[i]);
  }
  out += ")";
  return out;
}

struct Options {
  std::string fixture;
  std::string input;
  std::string field = "Q";
  std::string element;
  std::string axis;
  std::string x;
  std::string a;
  std::string b;
  std::string tier = "mandatory";
  std::string filter;
  std::string report;
  std::string out;
};

Fixture resolve_input(const Options& o) {
  const bool have_fixture = !o.fixture.empty();
  const bool have_input = !o.input.empty();
  if (have_fixture == have_input)
    throw CliError(Error::Cat::Parse, "exactly one of --fixture/--input is required");
  if (have_input) {
    if (o.field != "Q")
      throw CliError(Error::Cat::Parse, "--field applies only to --fixture");
    return Fixture{o.input, load_algebra(o.input), {}, {}};
  }
  return fixture_by_name(o.fixture, parse_field_flag(o.field));
}

int cmd_validate(const Options& o) {
  Fixture fx = resolve_input(o);
  std::cout << "dim: " << fx.algebra->dim() << "\n";
  std::cout << "commutative: yes\nfrobenius: yes\n";
  std::cout << "radical dim: " << radical(fx.algebra).dim() << "\n";
  return 0;
}

// One extra certification route's verdict on c: true / false / not-axis by
// precondition (an idempotency or unit-form failure already refutes the axis
// definition, so it counts as a NOT-axis verdict).
bool route_verdict(bool (*route)(const Element&), const Element& c) {
  try {
    return route(c);
  } catch (const NotIdempotent&) {
    return false;
  } catch (const FormNotOne&) {
    return false;
  }
}

int cmd_axis(const Options& o) {
  Fixture fx = resolve_input(o);
  if (o.element.empty())
    throw CliError(Error::Cat::Parse, "axis requires --element");
  Element c = parse_selector(o.element, fx);

  bool main_ok = false;
  std::string verdict;
  std::optional<AxisCertificate> cert;
  try {
    cert = verify_axis(c);
    main_ok = true;
  } catch (const NotAnAxis& e) {
    verdict = e.what();
  }
  const bool q_ok = route_verdict(&verify_axis_via_q, c);
  const bool p_ok = route_verdict(&verify_axis_via_p, c);
  if (q_ok != main_ok || p_ok != main_ok)
    throw CliError(Error::Cat::Internal,
                   std::string("certification routes disagree: direct=") +
                       (main_ok ? "axis" : "not-axis") + " q=" +
                       (q_ok ? "axis" : "not-axis") + " p=" +
                       (p_ok ? "axis" : "not-axis"));
  if (!main_ok) {
    std::cout << verdict << "\n";
    return 1;
  }
  std::cout << "axis: yes\n";
  std::cout << "dims: (1, " << cert->zero.dim() << ", " << cert->half.dim()
            << ")\n";
  std::cout << "routes agree: yes\n";
  return 0;
}

int cmd_decompose(const Options& o) {
  Fixture fx = resolve_input(o);
  if (o.axis.empty() || o.x.empty())
    throw CliError(Error::Cat::Parse, "decompose requires --axis and --x");
  AxisCertificate cert = verify_axis(parse_selector(o.axis, fx));
  Element x = parse_element(o.x, fx);
  Decomposition d = decompose(cert, x);
  const Field& F = fx.algebra->field();
  std::cout << "alpha: " << F.to_string(d.alpha) << "\n";
  std::cout << "x0: " << coords_to_string(d.x0) << "\n";
  std::cout << "xhalf: " << coords_to_string(d.xhalf) << "\n";
  return 0;
}

int cmd_miyamoto(const Options& o) {
  Fixture fx = resolve_input(o);
  if (o.axis.empty()) throw CliError(Error::Cat::Parse, "miyamoto requires --axis");
  Element c = parse_selector(o.axis, fx);
  AxisCertificate cert;
  try {
    cert = verify_axis(c);
  } catch (const NotAnAxis& e) {
    throw CliError(Error::Cat::Precondition, e.what());
  }
  const Field& F = fx.algebra->field();
  Mat tau = miyamoto(cert);
  for (std::size_t i = 0; i < tau.rows; ++i) {
    for (std::size_t j = 0; j < tau.cols; ++j)
      std::cout << (j ? "\t" : "") << F.to_string(tau.at(i, j));
    std::cout << "\n";
  }
  if (!is_automorphism(fx.algebra, tau).pass)
    throw CliError(Error::Cat::Internal, "miyamoto map is not an automorphism");
  if (!mat_equal(mat_mul(F, tau, tau), mat_identity(F, tau.rows)))
    throw CliError(Error::Cat::Internal, "miyamoto map does not square to identity");
  std::cout << "automorphism: yes\ninvolution: yes\n";
  return 0;
}

int cmd_suite(const Options& o) {
  Fixture fx = resolve_input(o);
  std::string sel_a = o.a, sel_b = o.b;
  if (sel_a.empty() && fx.a) sel_a = "a";
  if (sel_b.empty() && fx.b) sel_b = "b";
  if (sel_a.empty() || sel_b.empty())
    throw CliError(Error::Cat::Parse,
                   "fixture '" + fx.name + "' has no named axes; pass --a and --b");

  Tier tier;
  if (o.tier == "mandatory")
    tier = Tier::Mandatory;
  else if (o.tier == "extended")
    tier = Tier::Extended;
  else
    throw CliError(Error::Cat::Parse, "bad tier '" + o.tier + "'");

  AxisCertificate ca, cb;
  try {
    ca = verify_axis(parse_selector(sel_a, fx));
    cb = verify_axis(parse_selector(sel_b, fx));
  } catch (const NotAnAxis& e) {
    throw CliError(Error::Cat::Precondition, e.what());
  }
  AxisPair pair = make_axis_pair(ca, cb);
  const Field& F = fx.algebra->field();
  std::cout << "lambda: " << F.to_string(pair.lambda) << "\n";

  std::vector<IdentityReport> reports = run_suite(pair, tier, o.filter);
  if (!o.report.empty()) {
    std::ofstream rf(o.report);
    if (!rf) throw CliError(Error::Cat::Parse, "cannot open '" + o.report + "'");
    rf << suite_report_tsv(reports);
  }
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    if (!r.applicable)
      ++skipped;
    else if (r.failures.empty())
      ++passed;
    else
      ++failed;
  }
  std::cout << "passed: " << passed << "  failed: " << failed
            << "  skipped: " << skipped << "\n";
  DerivationCriterionReport dc = check_derivation_criterion(pair);
  std::cout << "derivation: commutator=" << (dc.commutator_is_derivation ? "yes" : "no")
            << " criterion=" << (dc.criterion() ? "yes" : "no")
            << " equivalent=" << (dc.equivalent() ? "yes" : "no") << "\n";
  return suite_pass(reports) ? 0 : 1;
}

int cmd_construct(const Options& o) {
  if (o.fixture.empty())
    throw CliError(Error::Cat::Parse, "construct requires --fixture");
  if (o.out.empty()) throw CliError(Error::Cat::Parse, "construct requires --out");
  Fixture fx = fixture_by_name(o.fixture, parse_field_flag(o.field));
  save_algebra(fx.algebra, o.out);
  std::cout << "wrote " << o.out << " (dim " << fx.algebra->dim() << ")\n";
  return 0;
}

int exit_code(Error::Cat cat) {
  switch (cat) {
    case Error::Cat::Parse: return 2;
    case Error::Cat::Math: return 1;
    case Error::Cat::Internal: return 3;
    case Error::Cat::Precondition: return 4;
  }
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for commutative Frobenius algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--fixture", o.fixture,
                    "built-in fixture (spin:<lambda>, lambda-one, matsuo:S3, "
                    "matsuo:S4, split)");
    cmd->add_option("--input", o.input, "algebra file to load");
    cmd->add_option("--field", o.field, "field for built-in fixtures: Q or GF<p>");
  };

  CLI::App* validate = app.add_subcommand("validate", "load and validate an algebra");
  add_common(validate);
  CLI::App* axis = app.add_subcommand("axis", "certify an element as an axis");
  add_common(axis);
  axis->add_option("--element", o.element, "candidate element (expression or index)");
  CLI::App* decomp = app.add_subcommand("decompose", "eigenspace decomposition");
  add_common(decomp);
  decomp->add_option("--axis", o.axis, "axis element");
  decomp->add_option("--x", o.x, "element to decompose");
  CLI::App* miy = app.add_subcommand("miyamoto", "print the Miyamoto involution");
  add_common(miy);
  miy->add_option("--axis", o.axis, "axis element");
  CLI::App* suite = app.add_subcommand("suite", "run the identity suite on a pair");
  add_common(suite);
  suite->add_option("--a", o.a, "first axis (defaults to the fixture's a)");
  suite->add_option("--b", o.b, "second axis (defaults to the fixture's b)");
  suite->add_option("--tier", o.tier, "mandatory (default) or extended");
  suite->add_option("--filter", o.filter, "only run identities whose id starts here");
  suite->add_option("--report", o.report, "write the TSV report to this path");
  CLI::App* construct = app.add_subcommand("construct", "write a fixture to a file");
  add_common(construct);
  construct->add_option("--out", o.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (axis->parsed()) return cmd_axis(o);
    if (decomp->parsed()) return cmd_decompose(o);
    if (miy->parsed()) return cmd_miyamoto(o);
    if (suite->parsed()) return cmd_suite(o);
    if (construct->parsed()) return cmd_construct(o);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.cat);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
