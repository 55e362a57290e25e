#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gammacalc/algebras.hpp"
#include "gammacalc/errors.hpp"
#include "gammacalc/gamma_set.hpp"
#include "gammacalc/json_io.hpp"
#include "gammacalc/monads.hpp"
#include "gammacalc/prolongation.hpp"
#include "gammacalc/theories.hpp"

using namespace gammacalc;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_malformed = 2;

// Exit code 1 with a message, for checks that fail on well-formed input.
struct Violated
{
  std::string message;
};

std::string superscript(std::size_t n)
{
  static char const *digits[] = {"⁰", "¹", "²", "³", "⁴",
                                 "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n), out;
  for (char c : s)
    out += digits[c - '0'];
  return out;
}

std::string table_string(std::vector<Elem> const &t)
{
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < t.size(); ++i)
    out << (i ? "," : "") << t[i];
  out << ']';
  return out.str();
}

void print_report(LawReport const &r, std::ostream &out)
{
  out << r.suite << ": checked " << r.checked << ", violations "
      << r.violation_count << '\n';
  for (auto const &v : r.violations)
    out << "  " << v.law << ' ' << v.witness.dump() << '\n';
}

GammaSet load_gamma_set(std::string const &path)
{ return gamma_set_from_json(read_json_file(path)); }

void require_valid(GammaSet const &a, std::string const &path)
{
  LawReport r = validate(a);
  if (r.ok())
    return;
  r.suite = path;
  std::ostringstream out;
  out << "not a functor:\n";
  print_report(r, out);
  throw Violated{out.str()};
}

void write_checked(GammaSet const &c, std::string const &path)
{
  Json j = gamma_set_to_json(c);
  if (!validate(gamma_set_from_json(j)).ok())
    throw Violated{"output does not re-validate"};
  write_json_file(path, j);
}

// ---------------------------------------------------------------- eval

int run_eval(std::string const &path, std::size_t k)
{
  GammaSet a = load_gamma_set(path);
  if (k > a.bound())
    throw std::invalid_argument("degree " + std::to_string(k) +
                                " exceeds the bound " +
                                std::to_string(a.bound()));
  std::cout << "A(" << k << ") = " << a.level(k) + 1
            << " elements including basepoint (" << a.level(k)
            << " nonbase)\n";
  for (auto const &sigma : symmetric_group(k)) {
    if (sigma == PointedMap::identity(k))
      continue;
    std::cout << "  permutation " << table_string(sigma.table()) << " acts as "
              << table_string(a.action(sigma).table()) << '\n';
  }
  return exit_ok;
}

// ---------------------------------------------------------------- prolong

std::size_t parse_target(std::string const &arg)
{
  if (arg.rfind("X:", 0) != 0 || arg.size() == 2)
    throw std::invalid_argument("expected X:<size>, got \"" + arg + "\"");
  std::size_t pos = 0;
  std::size_t n = std::stoul(arg.substr(2), &pos);
  if (pos != arg.size() - 2)
    throw std::invalid_argument("expected X:<size>, got \"" + arg + "\"");
  return n;
}

int run_prolong(std::string const &path, std::string const &target, bool json)
{
  GammaSet a = load_gamma_set(path);
  require_valid(a, path);
  std::size_t x = parse_target(target);
  CoendTable t = prolong(a, x);
  if (json) {
    std::cout << dump_json(coend_table_to_json(t)) << '\n';
    return exit_ok;
  }
  std::cout << "X has " << x << " nonbase elements (" << x + 1
            << " including basepoint)\n";
  std::cout << "classes: " << t.classes().cardinality()
            << " including basepoint (" << t.classes().size()
            << " nonbase)\n";
  std::cout << "class degree label eval\n";
  for (Elem c = 1; c <= t.classes().size(); ++c) {
    auto const &w = t.witness(c);
    std::cout << c << ' ' << w.degree << ' ' << w.label << ' '
              << table_string(map_at(w.degree, x, w.eval).table()) << '\n';
  }
  return exit_ok;
}

// ---------------------------------------------------------------- products

int run_smash(std::string const &pa, std::string const &pb,
              std::string const &out, std::optional<std::size_t> bound)
{
  GammaSet a = load_gamma_set(pa), b = load_gamma_set(pb);
  require_valid(a, pa);
  require_valid(b, pb);
  std::size_t da = presentation_degree(a), db = presentation_degree(b);
  DaySmash d = day_smash(a, b, da, db, bound);
  write_checked(d.set, out);
  std::cout << "presentation degrees " << da << ", " << db << "; bound "
            << d.set.bound() << '\n';
  for (std::size_t k = 0; k <= d.set.bound(); ++k)
    std::cout << "(A∧B)(" << k << ") = " << d.set.level(k) + 1
              << " including basepoint\n";
  return exit_ok;
}

int run_circle(std::string const &pa, std::string const &pb,
               std::string const &out)
{
  GammaSet a = load_gamma_set(pa), b = load_gamma_set(pb);
  require_valid(a, pa);
  require_valid(b, pb);
  CircleProduct c = circle(a, b, presentation_degree(a));
  write_checked(c.set, out);
  for (std::size_t k = 0; k <= c.set.bound(); ++k)
    std::cout << "(A∘B)(" << k << ") = " << c.set.level(k) + 1
              << " including basepoint\n";
  return exit_ok;
}

int run_assembly(std::string const &pa, std::string const &pb, bool check)
{
  GammaSet a = load_gamma_set(pa), b = load_gamma_set(pb);
  require_valid(a, pa);
  require_valid(b, pb);
  std::size_t da = presentation_degree(a), db = presentation_degree(b);
  Assembly as = assembly(a, b, da, db);
  for (std::size_t k = 0; k <= as.circ.set.bound(); ++k) {
    std::cout << "k=" << k << "  (A∧B)(" << k
              << ")=" << as.day.set.level(k) + 1 << "  (A∘B)(" << k
              << ")=" << as.circ.set.level(k) + 1 << "  bijective: "
              << (as.map.components[k].is_bijective() ? "yes" : "no") << '\n';
  }
  std::cout << "counts include the basepoint\n";
  if (!check)
    return exit_ok;
  LawReport nat = check_natural(as.day.set, as.circ.set, as.map);
  nat.suite = "assembly naturality";
  LawReport lax = check_assembly_lax(a, b, da);
  lax.suite = "assembly lax monoidal";
  print_report(nat, std::cout);
  print_report(lax, std::cout);
  return nat.ok() && lax.ok() ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------- spheres

int run_spheres(std::size_t n, std::size_t d)
{
  std::string sn = superscript(n);
  GammaSet rep = representable(n, d);
  GammaSubobject bd = boundary(n, d), out = outer_boundary(n, d);
  GammaQuotient by_out = quotient_gamma(rep, out);
  GammaQuotient by_bd = quotient_gamma(rep, bd);
  bool ok = true;

  std::cout << "counts include the basepoint\n";
  for (std::size_t k = 0; k <= d; ++k) {
    std::cout << "k=" << k << "  Γ" << sn << "(" << k
              << ")=" << rep.level(k) + 1 << "  ∂Γ" << sn << "(" << k
              << ")=" << bd.cardinality(k) << "  ∂_outΓ" << sn << "(" << k
              << ")=" << out.cardinality(k) << "  (Γ" << sn << "/∂_outΓ" << sn
              << ")(" << k << ")=" << by_out.set.level(k) + 1 << "  (Γ" << sn
              << "/∂Γ" << sn << ")(" << k << ")=" << by_bd.set.level(k) + 1
              << '\n';
  }

  if (n >= 1 && d >= n) {
    PartitionCorrespondence pc = partition_correspondence(n, d);
    std::cout << "partitions of {1.." << n << "}: " << pc.cells.size() << '\n';
    for (auto const &cell : pc.cells) {
      std::cout << "  ";
      for (auto const &block : cell.blocks) {
        std::cout << '{';
        for (std::size_t i = 0; i < block.size(); ++i)
          std::cout << (i ? "," : "") << block[i];
        std::cout << '}';
      }
      std::cout << "  element " << cell.element << '\n';
    }
    std::cout << "refinement reverses containment: "
              << (pc.report.ok() ? "OK" : "FAIL") << '\n';
    ok = ok && pc.report.ok();

    SphereCofiber cof = cofiber_sequence_spheres(n, d);
    std::cout << "∂Γ" << sn << "/∂_outΓ" << sn << " → Γ" << sn << "/∂_outΓ"
              << sn << " → Γ" << sn << "/∂Γ" << sn << " exact: "
              << (cof.report.ok() ? "OK" : "FAIL") << '\n';
    ok = ok && cof.report.ok();
  } else {
    std::cout << "partitions and cofiber sequence need max degree >= n\n";
  }

  if (n == 2 && d < 2) {
    std::cout << "∂Γ²/∂_outΓ² ≅ Γ¹: vacuous\n";
  } else if (n == 2) {
    SphereRemark r = sphere_remark_check(d);
    bool holds = r.iso && r.report.ok();
    std::cout << "∂Γ²/∂_outΓ² ≅ Γ¹: " << (holds ? "OK" : "FAIL") << '\n';
    ok = ok && holds;
  }
  return ok ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------- cofibrant

int run_cofibrant(std::string const &path)
{
  GammaSet a = load_gamma_set(path);
  require_valid(a, path);
  for (std::size_t n = 1; n <= a.bound(); ++n) {
    Latching l = latching(a, n);
    std::size_t count = std::count(l.member.begin(), l.member.end(), true);
    std::cout << "L" << n << " = " << count << " of " << a.level(n) + 1
              << " elements including basepoint\n";
  }
  auto w = cofibrancy_witness(a);
  if (!w) {
    std::cout << "cofibrant: yes\n";
    return exit_ok;
  }
  std::cout << "cofibrant: no; degree " << w->degree << " element "
            << w->element << " fixed by "
            << table_string(w->permutation.table()) << '\n';
  return exit_violation;
}

// ---------------------------------------------------------------- validate

int run_validate(std::string const &path)
{
  GammaSet a = load_gamma_set(path);
  LawReport r = validate(a);
  r.suite = "validate " + path;
  print_report(r, std::cout);
  return r.ok() ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------- laws

struct Subject
{
  MonadPtr monad;
  std::optional<GammaTheory> theory;
};

Subject make_subject(std::string const &name, std::size_t bound)
{
  auto from_theory = [](GammaTheory th) {
    MonadPtr m = monad_from_theory(th);
    return Subject{m, std::move(th)};
  };
  if (name == "powerset")
    return from_theory(free_semilattice_theory(bound));
  if (name.size() == 6 && name.rfind("gamma", 0) == 0 &&
      name[5] >= '1' && name[5] <= '3')
    return from_theory(representable_theory(name[5] - '0', bound));
  if (name == "smash:S0")
    return Subject{monoid_to_monad(unit_monoid()), std::nullopt};
  if (name == "smash:sign")
    return Subject{monoid_to_monad(sign_monoid()), std::nullopt};
  if (name == "smash:nilpotent")
    return Subject{monoid_to_monad(nilpotent_monoid()), std::nullopt};
  throw std::invalid_argument("unknown theory \"" + name + "\"");
}

std::size_t skipped = 0;

// Runs one instance; instances beyond the element budget are skipped and
// reported on standard error.
void guarded(std::vector<LawReport> &parts, std::string const &what,
             std::function<LawReport()> const &f)
{
  try {
    parts.push_back(f());
  } catch (SizeGuard const &e) {
    ++skipped;
    std::cerr << "skipped " << what << ": " << e.what() << '\n';
  }
}

std::vector<LawReport> strength_suite(SetMonad const &t, std::size_t s)
{
  std::vector<LawReport> parts;
  guarded(parts, "strong monad laws",
          [&] { return check_strong_monad(t, s); });
  guarded(parts, "strength and enrichment",
          [&] { return check_strength_enrichment(t, s); });
  return parts;
}

std::vector<LawReport> theory_suite(Subject const &sub, std::size_t s)
{
  if (!sub.theory)
    throw std::invalid_argument("the theory suite needs a Gamma-theory");
  GammaTheory const &th = *sub.theory;
  std::vector<LawReport> parts;
  parts.push_back(validate_theory(th));
  parts.back().suite = "theory:" + th.name;
  guarded(parts, "monad routes", [&] {
    return compare_monad_routes(th, s, std::min<std::size_t>(s, 2));
  });
  EndomorphismRing er = endomorphism_gamma_ring(th);
  parts.push_back(validate_ring(er.ring));
  parts.back().suite = "ring:" + th.name;
  parts.push_back(er.two_path);
  parts.back().suite = "ring two paths:" + th.name;
  return parts;
}

std::vector<LawReport> morita_suite(SetMonad const &t, std::size_t s)
{
  std::vector<LawReport> parts;
  LambdaReport lr = check_lambda(t, s);
  parts.push_back(lr.laws);
  LawReport bij;
  bij.suite = "lambda bijective iff monoid induced:" + t.name();
  if (s >= 2) {
    bool all = std::all_of(lr.bijective.begin(), lr.bijective.end(),
                           [](bool b) { return b; });
    nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
    for (bool b : lr.bijective)
      sizes.push_back(b);
    bij.check(all == t.monoid_induced(), "lambda bijectivity",
              {{"bijective_by_size", sizes},
               {"monoid_induced", t.monoid_induced()}});
  }
  parts.push_back(bij);
  for (std::size_t x = 0; x <= s; ++x) {
    guarded(parts, "free module comparison",
            [&] { return free_module_comparison(t, x); });
    guarded(parts, "restricted modules", [&] {
      LawReport r;
      r.suite = "restricted modules:" + t.name();
      for (auto const &alg : enumerate_algebras(t, x))
        r.merge(check_module(restrict_along_lambda(t, alg)));
      return r;
    });
  }
  return parts;
}

std::vector<LawReport> algebras_suite(SetMonad const &t, std::size_t s)
{
  std::vector<LawReport> parts;
  for (std::size_t x = 0; x <= s; ++x) {
    guarded(parts, "algebras of size " + std::to_string(x), [&] {
      LawReport r;
      r.suite = "algebras:" + t.name();
      auto algs = enumerate_algebras(t, x);
      for (auto const &alg : algs) {
        r.merge(split_coequalizer_check(t, alg));
        AlgebraCoequalizer c = canonical_coequalizer(t, alg);
        r.check(c.algebra.carrier == x, "canonical coequalizer is X",
                {{"size", x}});
      }
      for (std::size_t y = 0; y <= s; ++y) {
        for (auto const &a : algs) {
          for (auto const &b : enumerate_algebras(t, y)) {
            EnrichedHom h = enriched_hom_algebras(t, a, b);
            auto brute = algebra_morphisms(t, a, b);
            std::vector<PointedMap> listed;
            for (Elem i = 0; i <= h.set.size(); ++i)
              listed.push_back(h.map(i));
            r.check(listed == brute, "enriched hom equals morphisms",
                    {{"dom", a.structure.table()},
                     {"cod", b.structure.table()}});
          }
        }
      }
      return r;
    });
  }
  for (std::size_t z = 0; z <= s; ++z) {
    for (std::size_t x = 0; x <= s; ++x) {
      for (std::size_t y = 0; y <= s; ++y) {
        guarded(parts, "adjunctions", [&] {
          LawReport r;
          r.suite = "adjunctions:" + t.name();
          for (auto const &a : enumerate_algebras(t, x)) {
            for (auto const &b : enumerate_algebras(t, y)) {
              AdjunctionCheck ten = tensor_adjunction(t, z, a, b);
              AdjunctionCheck cot = cotensor_adjunction(t, z, b, a);
              r.merge(ten.report);
              r.merge(cot.report);
              r.check(ten.left == ten.right, "tensor cardinality",
                      {{"z", z}, {"left", ten.left}, {"right", ten.right}});
              r.check(cot.left == cot.right, "cotensor cardinality",
                      {{"z", z}, {"left", cot.left}, {"right", cot.right}});
            }
          }
          return r;
        });
      }
    }
  }
  return parts;
}

std::vector<LawReport> bar_suite(SetMonad const &t, std::size_t s)
{
  constexpr std::size_t levels = 2;
  std::vector<LawReport> parts;
  guarded(parts, "bar resolution of the free algebra on I", [&] {
    return bar_resolution(t, free_algebra(t, 1), levels).report;
  });
  for (std::size_t x = 0; x <= s; ++x) {
    guarded(parts, "bar resolutions of size " + std::to_string(x), [&] {
      LawReport r;
      r.suite = "bar:" + t.name();
      for (auto const &alg : enumerate_algebras(t, x))
        r.merge(bar_resolution(t, alg, levels).report);
      return r;
    });
  }
  return parts;
}

int run_laws(std::string const &suite, std::string const &theory,
             std::size_t card, bool json)
{
  if (card == 0)
    throw std::invalid_argument("--size counts the basepoint, so it is >= 1");
  std::size_t size = card - 1;
  Subject sub = make_subject(theory, std::max<std::size_t>(card, 1));
  SetMonad const &t = *sub.monad;
  std::vector<LawReport> parts;
  if (suite == "strength")
    parts = strength_suite(t, size);
  else if (suite == "theory")
    parts = theory_suite(sub, size);
  else if (suite == "morita")
    parts = morita_suite(t, size);
  else if (suite == "algebras")
    parts = algebras_suite(t, size);
  else
    parts = bar_suite(t, size);

  LawReport total;
  total.suite = suite + ":" + t.name();
  for (auto const &p : parts)
    total.merge(p);
  if (json) {
    std::cout << dump_json(total.to_json()) << '\n';
  } else {
    std::cout << "suite " << suite << ", monad " << t.name()
              << ", objects with at most " << card
              << " elements including basepoint\n";
    for (auto const &p : parts)
      print_report(p, std::cout);
    std::cout << "total: checked " << total.checked << ", violations "
              << total.violation_count << '\n';
  }
  if (!total.ok())
    return exit_violation;
  if (skipped > 0) {
    std::cerr << skipped << " instances exceed the element budget\n";
    return exit_malformed;
  }
  return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Discrete Gamma-sets and finitary strong monads"};
  app.require_subcommand(1);
  int code = exit_ok;
  std::function<int()> action;

  std::string path_a, path_b, out_path, target, suite = "strength";
  std::string theory = "powerset";
  std::size_t at = 0, n = 2, max_degree = 3, size = 3;
  std::optional<std::size_t> bound;
  bool check = false, json = false;

  auto *eval = app.add_subcommand("eval", "Print A(k)");
  eval->add_option("A", path_a, "Gamma-set file")->required();
  eval->add_option("--at", at, "Degree")->required();
  eval->callback([&] { action = [&] { return run_eval(path_a, at); }; });

  auto *pro = app.add_subcommand("prolong", "Evaluate the prolongation");
  pro->add_option("A", path_a, "Gamma-set file")->required();
  pro->add_option("X", target, "X:<nonbase size>")->required();
  pro->add_flag("--json", json, "Print the coend table as JSON");
  pro->callback([&] {
    action = [&] { return run_prolong(path_a, target, json); };
  });

  auto *sm = app.add_subcommand("smash", "Day convolution");
  sm->add_option("A", path_a)->required();
  sm->add_option("B", path_b)->required();
  sm->add_option("-o", out_path, "Output file")->required();
  sm->add_option("--bound", bound, "Degree bound of the result");
  sm->callback([&] {
    action = [&] { return run_smash(path_a, path_b, out_path, bound); };
  });

  auto *ci = app.add_subcommand("circle", "Circle product");
  ci->add_option("A", path_a)->required();
  ci->add_option("B", path_b)->required();
  ci->add_option("-o", out_path, "Output file")->required();
  ci->callback([&] {
    action = [&] { return run_circle(path_a, path_b, out_path); };
  });

  auto *as = app.add_subcommand("assembly", "Assembly map");
  as->add_option("A", path_a)->required();
  as->add_option("B", path_b)->required();
  as->add_flag("--check", check, "Check naturality and lax monoidal laws");
  as->callback([&] {
    action = [&] { return run_assembly(path_a, path_b, check); };
  });

  auto *sp = app.add_subcommand("spheres", "Boundary combinatorics");
  sp->add_option("--n", n, "Degree of the representable");
  sp->add_option("--max-degree", max_degree, "Degree bound");
  sp->callback([&] { action = [&] { return run_spheres(n, max_degree); }; });

  auto *co = app.add_subcommand("cofibrant", "Freeness off the latching part");
  co->add_option("A", path_a)->required();
  co->callback([&] { action = [&] { return run_cofibrant(path_a); }; });

  auto *la = app.add_subcommand("laws", "Run a law suite");
  la->add_option("--suite", suite, "Suite")
      ->check(CLI::IsMember({"strength", "theory", "morita", "algebras",
                             "bar"}));
  la->add_option("--theory", theory,
                 "powerset, gamma1..gamma3, smash:S0, smash:sign or "
                 "smash:nilpotent");
  la->add_option("--size", size,
                 "Largest test object, counting the basepoint; degree "
                 "bound for the theory suite");
  la->add_flag("--json", json, "Print the merged law report as JSON");
  la->callback([&] {
    action = [&] { return run_laws(suite, theory, size, json); };
  });

  auto *va = app.add_subcommand("validate", "Check functoriality");
  va->add_option("A", path_a)->required();
  va->callback([&] { action = [&] { return run_validate(path_a); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return exit_malformed;
  }

  try {
    code = action();
  } catch (Violated const &v) {
    std::cerr << v.message;
    return exit_violation;
  } catch (std::invalid_argument const &e) {
    std::cerr << e.what() << '\n';
    return exit_malformed;
  } catch (std::out_of_range const &e) {
    std::cerr << e.what() << '\n';
    return exit_malformed;
  } catch (GammaError const &e) {
    std::cerr << e.what() << '\n';
    return exit_malformed;
  }
  return code;
}
