#include "goldman/cli.hpp"

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "goldman/bracket.hpp"
#include "goldman/geometricity.hpp"
#include "goldman/maps.hpp"
#include "goldman/selftest.hpp"
#include "goldman/surface.hpp"

namespace goldman {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kNotIsomorphism = 3;
constexpr int kNotGeometric = 4;
constexpr int kNotPeripheral = 5;

int cmd_info(const std::string& path, std::ostream& out) {
  const RibbonSurface s = RibbonSurface::load(path);
  out << "rank " << s.rank() << "\n";
  out << "chi " << s.euler_characteristic() << "\n";
  out << "genus " << s.genus() << "\n";
  out << "boundary " << s.boundary_count() << "\n";
  for (int i = 0; i < s.boundary_count(); ++i)
    out << "C" << i << ": " << s.boundary_words()[static_cast<std::size_t>(i)].str() << "\n";
  return kOk;
}

int cmd_bracket(const std::string& path, const std::string& xs, const std::string& ys,
                std::ostream& out) {
  const RibbonSurface s = RibbonSurface::load(path);
  const CyclicWord x = parse_class(xs, s.rank());
  const CyclicWord y = parse_class(ys, s.rank());
  out << bracket(s, x, y).str() << "\n";
  return kOk;
}

int cmd_peripheral(const std::string& path, const std::string& xs, std::ostream& out) {
  const RibbonSurface s = RibbonSurface::load(path);
  const CyclicWord x = parse_class(xs, s.rank());
  const PeripheralInfo info = is_peripheral(s, x);
  if (!info.peripheral) {
    out << "not peripheral\n";
    return kNotPeripheral;
  }
  out << "peripheral component " << info.component << " exponent " << info.exponent << "\n";
  return kOk;
}

int cmd_mapcheck(const std::string& from, const std::string& to, const std::string& map_text,
                 int samples, int maxlen, bool strict, std::ostream& out) {
  const RibbonSurface s1 = RibbonSurface::load(from);
  const RibbonSurface s2 = RibbonSurface::load(to);
  const Homomorphism f = Homomorphism::parse(map_text, s1.rank(), s2.rank());
  const DecisionReport rep = is_geometric(f, s1, s2);
  out << rep.str();
  if (rep.reason == DecisionReport::Reason::not_isomorphism) return kNotIsomorphism;
  if (!rep.geometric) {
    const auto w = find_witness(f, s1, s2, maxlen, 2LL * samples, false);
    if (w) out << "witness: (" << w->x.str() << ", " << w->y.str() << ")\n";
    return kNotGeometric;
  }
  if (strict && rep.orientation_sign != 1) {
    out << "strict: not bracket-commuting\n";
    const auto w = find_witness(f, s1, s2, maxlen, 2LL * samples, true);
    if (w) out << "witness: (" << w->x.str() << ", " << w->y.str() << ")\n";
    return kNotGeometric;
  }
  return kOk;
}

int cmd_witness(const std::string& from, const std::string& to, const std::string& map_text,
                int maxlen, long long budget, bool strict, std::ostream& out) {
  const RibbonSurface s1 = RibbonSurface::load(from);
  const RibbonSurface s2 = RibbonSurface::load(to);
  const Homomorphism f = Homomorphism::parse(map_text, s1.rank(), s2.rank());
  if (!is_isomorphism(f)) {
    out << "not an isomorphism\n";
    return kNotIsomorphism;
  }
  const auto w = find_witness(f, s1, s2, maxlen, budget, strict);
  if (!w) {
    out << "witness: absent\n";
    return kNotGeometric;
  }
  out << "witness: (" << w->x.str() << ", " << w->y.str() << ")\n";
  return kOk;
}

int cmd_selftest(const SelftestOptions& options, std::ostream& out) {
  out << "seed " << options.seed << "\n";
  const auto results = run_selftest(options);
  bool all_ok = true;
  for (const SuiteResult& r : results) {
    out << r.name << ": " << r.cases << " cases, ";
    if (r.failures == 0) {
      out << "pass\n";
    } else {
      all_ok = false;
      out << r.failures << " failures (first: " << r.first_failure << ")\n";
    }
  }
  out << "selftest: " << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? kOk : kInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Goldman bracket and geometricity decisions on ribbon surfaces"};
  app.require_subcommand(1);

  std::string surface_file, from_file, to_file, map_text, word_x, word_y;

  auto* info = app.add_subcommand("info", "surface summary: rank, chi, genus, boundary words");
  info->add_option("surface", surface_file, "surface file")->required();

  auto* brk = app.add_subcommand("bracket", "Goldman bracket of two classes");
  brk->add_option("surface", surface_file)->required();
  brk->add_option("x", word_x, "first class")->required();
  brk->add_option("y", word_y, "second class")->required();

  auto* peri = app.add_subcommand("peripheral", "is the class a boundary power?");
  peri->add_option("surface", surface_file)->required();
  peri->add_option("x", word_x, "class to test")->required();

  int samples = 500, maxlen = 6;
  bool strict = false;
  auto* mc = app.add_subcommand("mapcheck", "decide geometricity of a map");
  mc->add_option("from", from_file, "source surface file")->required();
  mc->add_option("to", to_file, "target surface file")->required();
  mc->add_option("map", map_text, "generator images, e.g. a->ab,b->b")->required();
  mc->add_option("--samples", samples, "witness search budget in pairs");
  mc->add_option("--maxlen", maxlen, "witness search total length bound");
  mc->add_flag("--strict", strict, "only orientation +1 counts as commuting");

  long long budget = 10000;
  auto* wit = app.add_subcommand("witness", "search for a non-commuting pair");
  wit->add_option("from", from_file)->required();
  wit->add_option("to", to_file)->required();
  wit->add_option("map", map_text)->required();
  wit->add_option("--maxlen", maxlen, "total length bound");
  wit->add_option("--budget", budget, "bracket evaluation budget");
  wit->add_flag("--strict", strict, "also accept anticommuting pairs");

  SelftestOptions st;
  auto* self = app.add_subcommand("selftest", "run the invariant suites");
  self->add_option("--rank-max", st.rank_max, "largest sampled rank");
  self->add_option("--len-max", st.len_max, "largest class length");
  self->add_option("--trials", st.trials, "sampled cases per suite");
  self->add_option("--seed", st.seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (info->parsed()) return cmd_info(surface_file, out);
    if (brk->parsed()) return cmd_bracket(surface_file, word_x, word_y, out);
    if (peri->parsed()) return cmd_peripheral(surface_file, word_x, out);
    if (mc->parsed()) return cmd_mapcheck(from_file, to_file, map_text, samples, maxlen, strict, out);
    if (wit->parsed()) return cmd_witness(from_file, to_file, map_text, maxlen, budget, strict, out);
    if (self->parsed()) return cmd_selftest(st, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  err << "usage error: no command\n";
  return kUsage;
}

}  // namespace goldman
