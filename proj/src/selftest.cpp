#include "goldman/selftest.hpp"

#include <functional>

#include "goldman/bracket.hpp"
#include "goldman/enumerate.hpp"
#include "goldman/strands.hpp"
#include "goldman/surface.hpp"

namespace goldman {

namespace {

RibbonSurface torus() {
  return RibbonSurface::validate(2, {Letter::make(0, false), Letter::make(1, false),
                                     Letter::make(0, true), Letter::make(1, true)});
}

RibbonSurface pants() {
  return RibbonSurface::validate(2, {Letter::make(0, false), Letter::make(0, true),
                                     Letter::make(1, false), Letter::make(1, true)});
}

struct Recorder {
  SuiteResult result;
  void record(bool ok, const std::function<std::string()>& describe) {
    ++result.cases;
    if (!ok) {
      ++result.failures;
      if (result.first_failure.empty()) result.first_failure = describe();
    }
  }
};

RibbonSurface random_surface(WordSampler& rng, int rank_max) {
  const int rank = rng.uniform(2, rank_max);
  return RibbonSurface::validate(rank, rng.random_dart_order(rank));
}

SuiteResult run_skew(const SelftestOptions& o, WordSampler& rng) {
  Recorder rec;
  rec.result.name = "skew-symmetry";
  for (const RibbonSurface& s : {torus(), pants()}) {
    const auto classes = classes_up_to(s.rank(), o.len_max);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i; j < classes.size(); ++j) {
        const bool ok =
            bracket(s, classes[i], classes[j]) == chain_negate(bracket(s, classes[j], classes[i]));
        rec.record(ok, [&] { return "[" + classes[i].str() + "," + classes[j].str() + "]"; });
      }
  }
  for (int t = 0; t < o.trials; ++t) {
    const RibbonSurface s = random_surface(rng, o.rank_max);
    const CyclicWord x = rng.random_class(s.rank(), o.len_max);
    const CyclicWord y = rng.random_class(s.rank(), o.len_max);
    const bool ok = bracket(s, x, y) == chain_negate(bracket(s, y, x));
    rec.record(ok, [&] { return "[" + x.str() + "," + y.str() + "]"; });
  }
  return rec.result;
}

SuiteResult run_jacobi(const SelftestOptions& o, WordSampler& rng) {
  Recorder rec;
  rec.result.name = "jacobi";
  for (int t = 0; t < o.trials; ++t) {
    const RibbonSurface s = random_surface(rng, o.rank_max);
    const CyclicWord x = rng.random_class(s.rank(), o.len_max);
    const CyclicWord y = rng.random_class(s.rank(), o.len_max);
    const CyclicWord z = rng.random_class(s.rank(), o.len_max);
    Chain sum = bracket_chain(s, bracket(s, x, y), Chain::unit(z));
    sum += bracket_chain(s, bracket(s, y, z), Chain::unit(x));
    sum += bracket_chain(s, bracket(s, z, x), Chain::unit(y));
    rec.record(sum.is_zero(),
               [&] { return "(" + x.str() + "," + y.str() + "," + z.str() + ")"; });
  }
  return rec.result;
}

SuiteResult run_peripheral(const SelftestOptions& o, WordSampler& rng) {
  Recorder rec;
  rec.result.name = "peripheral-annihilation";
  for (const RibbonSurface& s : {torus(), pants()}) {
    const auto classes = classes_up_to(s.rank(), o.len_max);
    for (const CyclicWord& w : s.boundary_words())
      for (const CyclicWord& y : classes)
        rec.record(bracket(s, w, y).is_zero(),
                   [&] { return "[" + w.str() + "," + y.str() + "]"; });
  }
  for (int t = 0; t < o.trials; ++t) {
    const RibbonSurface s = random_surface(rng, o.rank_max);
    const auto& bw = s.boundary_words();
    const CyclicWord w = bw[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(bw.size()) - 1))];
    const CyclicWord y = rng.random_class(s.rank(), o.len_max);
    rec.record(bracket(s, w, y).is_zero(),
               [&] { return "[" + w.str() + "," + y.str() + "]"; });
  }
  return rec.result;
}

SuiteResult run_bands(const SelftestOptions& o, WordSampler& rng) {
  Recorder rec;
  rec.result.name = "band-consistency";
  {
    const RibbonSurface s = torus();
    const auto classes = classes_up_to(s.rank(), std::min(o.len_max, 3));
    for (const CyclicWord& x : classes)
      for (const CyclicWord& y : classes) {
        const auto [sx, sy] = build_strand_pair(s, x, y);
        rec.record(band_consistent(s, sx, sy),
                   [&] { return "(" + x.str() + "," + y.str() + ")"; });
      }
  }
  for (int t = 0; t < o.trials; ++t) {
    const RibbonSurface s = random_surface(rng, o.rank_max);
    const CyclicWord x = rng.random_class(s.rank(), o.len_max);
    const CyclicWord y = rng.random_class(s.rank(), o.len_max);
    const auto [sx, sy] = build_strand_pair(s, x, y);
    rec.record(band_consistent(s, sx, sy),
               [&] { return "(" + x.str() + "," + y.str() + ")"; });
  }
  return rec.result;
}

SuiteResult run_conjugation(const SelftestOptions& o, WordSampler& rng) {
  Recorder rec;
  rec.result.name = "conjugation-invariance";
  const RibbonSurface s = torus();
  for (int t = 0; t < o.trials; ++t) {
    const RibbonSurface surf = (t % 2 == 0) ? s : random_surface(rng, o.rank_max);
    const CyclicWord x = rng.random_class(surf.rank(), o.len_max);
    const Word conj = rng.random_word(surf.rank(), rng.uniform(0, o.len_max));
    const Word perturbed = concat(concat(conj, x.rotation(static_cast<std::size_t>(
                                                    rng.uniform(0, static_cast<int>(x.size()) - 1)))),
                                  invert(conj));
    const CyclicWord back = cyclic_canonical(perturbed);
    const CyclicWord y = rng.random_class(surf.rank(), o.len_max);
    const bool ok = back == x && bracket(surf, back, y) == bracket(surf, x, y);
    rec.record(ok, [&] { return x.str() + " vs " + perturbed.str(); });
  }
  return rec.result;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  WordSampler rng(options.seed);
  std::vector<SuiteResult> out;
  out.push_back(run_skew(options, rng));
  out.push_back(run_jacobi(options, rng));
  out.push_back(run_peripheral(options, rng));
  out.push_back(run_bands(options, rng));
  out.push_back(run_conjugation(options, rng));
  return out;
}

}  // namespace goldman
