#include "goldman/strands.hpp"

#include <algorithm>
#include <stdexcept>

namespace goldman {

namespace {

// One chord endpoint during construction.
struct End {
  int curve;     // 0 or 1
  int junction;  // index into the curve's word
  bool arrival;  // true: the strand enters the disk here (in_dart side)
};

// The two periodic dart itineraries attached to an end. f_ray reads the
// strand outward from the endpoint (away from the disk); g_ray reads the
// itinerary of the opposite endpoint of the same band passage, i.e. the
// strand in the other direction. f_ray starts with the end's own arc dart,
// g_ray with its inverse.
struct RayContext {
  const CyclicWord* word[2];

  Letter f_ray(const End& e, std::ptrdiff_t k) const {
    const CyclicWord& w = *word[e.curve];
    if (!e.arrival) return w.at(e.junction + k);
    return w.at(e.junction - 1 - k).inverse();
  }
  Letter g_ray(const End& e, std::ptrdiff_t k) const {
    const CyclicWord& w = *word[e.curve];
    if (!e.arrival) return w.at(e.junction - k).inverse();
    return w.at(e.junction - 1 + k);
  }
  std::size_t length(const End& e) const { return word[e.curve]->size(); }
  // Index of the band passage an end belongs to: the letter occurrence it
  // starts (departure) or finishes (arrival).
  int occurrence(const End& e) const {
    if (!e.arrival) return e.junction;
    const auto L = static_cast<int>(length(e));
    return (e.junction - 1 + L) % L;
  }
};

class EndOrder {
 public:
  EndOrder(const RibbonSurface& s, RayContext rays) : s_(&s), rays_(rays) {}

  // Strict order of ends along one arc, counterclockwise.
  bool operator()(const End& e, const End& f) const {
    const Letter arc = arc_of(e);
    // Rays toward the positive side of the band are compared first; this
    // fixes on which side of a band each linked pair crosses, and keeps the
    // two arcs of every band consistent with each other.
    int c;
    if (!arc.is_inverse()) {
      c = compare_f(e, f);
      if (c != 0) return c < 0;
      c = compare_g(e, f);
      if (c != 0) return c > 0;
    } else {
      c = compare_g(e, f);
      if (c != 0) return c > 0;
      c = compare_f(e, f);
      if (c != 0) return c < 0;
    }
    // Bi-infinitely parallel strands: push curve/occurrence order to one
    // side, reading direction flipped between departures and arrivals.
    if (e.arrival != f.arrival) return !e.arrival;
    const auto ke = std::make_pair(e.curve, rays_.occurrence(e));
    const auto kf = std::make_pair(f.curve, rays_.occurrence(f));
    return e.arrival ? (kf < ke) : (ke < kf);
  }

  Letter arc_of(const End& e) const { return rays_.f_ray(e, 0); }

 private:
  // Lexicographic comparison of the rank-coded itineraries: at the first
  // divergence, rank darts counterclockwise from the inverse of the last
  // common dart. Returns 0 when the rays agree through the Fine-Wilf bound
  // (then they agree forever).
  template <typename Ray>
  int compare(const End& e, const End& f, Ray ray) const {
    const std::ptrdiff_t bound =
        static_cast<std::ptrdiff_t>(rays_.length(e) + rays_.length(f));
    Letter prev = ray(e, 0);
    const int n2 = s_->dart_count();
    for (std::ptrdiff_t k = 1; k <= bound; ++k) {
      const Letter a = ray(e, k);
      const Letter b = ray(f, k);
      if (a == b) {
        prev = a;
        continue;
      }
      const int pu = s_->position(prev.inverse());
      const int ra = (s_->position(a) - pu + n2) % n2;
      const int rb = (s_->position(b) - pu + n2) % n2;
      return ra < rb ? -1 : 1;
    }
    return 0;
  }

  int compare_f(const End& e, const End& f) const {
    return compare(e, f, [this](const End& x, std::ptrdiff_t k) { return rays_.f_ray(x, k); });
  }
  int compare_g(const End& e, const End& f) const {
    return compare(e, f, [this](const End& x, std::ptrdiff_t k) { return rays_.g_ray(x, k); });
  }

  const RibbonSurface* s_;
  RayContext rays_;
};

}  // namespace

std::pair<StrandSystem, StrandSystem> build_strand_pair(const RibbonSurface& s,
                                                        const CyclicWord& x,
                                                        const CyclicWord& y) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("build_strand_pair: trivial class has no strand system");

  StrandSystem sys[2];
  const CyclicWord* words[2] = {&x, &y};
  for (int c = 0; c < 2; ++c) {
    sys[c].curve_id = c;
    sys[c].word = *words[c];
    const auto L = words[c]->size();
    sys[c].junctions.resize(L);
    sys[c].in_slot.resize(L);
    sys[c].out_slot.resize(L);
    for (std::size_t i = 0; i < L; ++i) {
      const Letter out = words[c]->at(static_cast<std::ptrdiff_t>(i));
      const Letter in = words[c]->at(static_cast<std::ptrdiff_t>(i) - 1).inverse();
      if (in == out) throw std::logic_error("junction with equal in and out dart");
      sys[c].junctions[i] = StrandSystem::Junction{in, out};
    }
  }

  RayContext rays{{words[0], words[1]}};
  const EndOrder less(s, rays);

  // Bucket the ends per arc, sort each arc, hand out slots.
  std::vector<std::vector<End>> per_arc(static_cast<std::size_t>(s.dart_count()));
  for (int c = 0; c < 2; ++c) {
    const auto L = words[c]->size();
    for (std::size_t i = 0; i < L; ++i) {
      const auto& j = sys[c].junctions[i];
      per_arc[static_cast<std::size_t>(s.position(j.out_dart))].push_back(
          End{c, static_cast<int>(i), false});
      per_arc[static_cast<std::size_t>(s.position(j.in_dart))].push_back(
          End{c, static_cast<int>(i), true});
    }
  }

  int circle = 0;
  for (int p = 0; p < s.dart_count(); ++p) {
    auto& ends = per_arc[static_cast<std::size_t>(p)];
    std::sort(ends.begin(), ends.end(), less);
    for (std::size_t k = 0; k < ends.size(); ++k) {
      const End& e = ends[k];
      StrandSystem::EndSlot slot{p, static_cast<int>(k), circle++};
      if (e.arrival)
        sys[e.curve].in_slot[static_cast<std::size_t>(e.junction)] = slot;
      else
        sys[e.curve].out_slot[static_cast<std::size_t>(e.junction)] = slot;
    }
  }
  return {std::move(sys[0]), std::move(sys[1])};
}

std::vector<Crossing> crossings(const StrandSystem& sys_x, const StrandSystem& sys_y) {
  std::vector<Crossing> out;
  const int total = static_cast<int>(2 * (sys_x.word.size() + sys_y.word.size()));
  const auto between = [total](int p, int from, int to) {
    // strictly inside the counterclockwise open interval (from, to)
    const int span = (to - from + total) % total;
    const int off = (p - from + total) % total;
    return 0 < off && off < span;
  };
  for (std::size_t i = 0; i < sys_x.word.size(); ++i) {
    const int xi = sys_x.in_slot[i].circle;
    const int xo = sys_x.out_slot[i].circle;
    for (std::size_t j = 0; j < sys_y.word.size(); ++j) {
      const int yi = sys_y.in_slot[j].circle;
      const int yo = sys_y.out_slot[j].circle;
      const bool yi_in = between(yi, xi, xo);
      const bool yo_in = between(yo, xi, xo);
      if (yi_in == yo_in) continue;  // chords do not alternate
      out.push_back(Crossing{static_cast<int>(i), static_cast<int>(j), yi_in ? 1 : -1});
    }
  }
  return out;
}

bool band_consistent(const RibbonSurface& s, const StrandSystem& sys_x,
                     const StrandSystem& sys_y) {
  for (int g = 0; g < s.rank(); ++g) {
    // (positive-arc slot, negative-arc slot) per passage through band g.
    std::vector<std::pair<int, int>> passages;
    for (const StrandSystem* sys : {&sys_x, &sys_y}) {
      const auto L = sys->word.size();
      for (std::size_t k = 0; k < L; ++k) {
        const Letter l = sys->word.at(static_cast<std::ptrdiff_t>(k));
        if (l.generator() != g) continue;
        const auto& dep = sys->out_slot[k];
        const auto& arr = sys->in_slot[(k + 1) % L];
        if (!l.is_inverse())
          passages.emplace_back(dep.index, arr.index);
        else
          passages.emplace_back(arr.index, dep.index);
      }
    }
    std::sort(passages.begin(), passages.end());
    const int count = static_cast<int>(passages.size());
    for (int k = 0; k < count; ++k) {
      if (passages[static_cast<std::size_t>(k)].first != k) return false;
      if (passages[static_cast<std::size_t>(k)].second != count - 1 - k) return false;
    }
  }
  return true;
}

}  // namespace goldman
