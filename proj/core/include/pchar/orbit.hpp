#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pchar/error.hpp"
#include "pchar/pcgroup.hpp"

namespace pchar {

template <class Point>
struct OrbitData {
  std::vector<Point> points;            // points[0] is the base point
  std::vector<Element> transversal;     // base * transversal[k] == points[k]
  std::vector<Element> stabilizer_gens; // generate the point stabilizer
};

/// Orbit and stabilizer of `base` under a right action of the group with
/// induced generating sequence `pcgs` (every tail <h_i, ..., h_m> is normal
/// of index p in <h_{i-1}, ..., h_m>). `act(point, k)` returns point * pcgs[k].
///
/// Processing the sequence from the bottom, each step either leaves the
/// orbit unchanged (and yields a new stabilizer generator) or multiplies it
/// by exactly p.
template <class Point, class Hash, class Act>
OrbitData<Point> pc_orbit_stabilizer(const PcGroup& group, std::span<const Element> pcgs,
                                     const Point& base, Act&& act, std::size_t bound) {
  OrbitData<Point> out;
  std::unordered_map<Point, std::size_t, Hash> index;
  out.points.push_back(base);
  out.transversal.push_back(group.identity());
  index.emplace(base, 0);
  const unsigned p = group.prime();

  for (std::size_t k = pcgs.size(); k-- > 0;) {
    const Element& h = pcgs[k];
    Point image = act(out.points[0], k);
    if (auto it = index.find(image); it != index.end()) {
      out.stabilizer_gens.push_back(group.multiply(h, group.inverse(out.transversal[it->second])));
      continue;
    }
    const std::size_t len = out.points.size();
    if (len * p > bound)
      throw IndexOverflowError("orbit exceeds bound of " + std::to_string(bound) + " points");
    out.points.reserve(len * p);
    out.transversal.reserve(len * p);
    for (unsigned e = 1; e < p; ++e) {
      for (std::size_t d = 0; d < len; ++d) {
        const std::size_t src = (e - 1) * len + d;
        Point next = e == 1 && d == 0 ? std::move(image) : act(out.points[src], k);
        Element t = group.multiply(out.transversal[src], h);
        index.emplace(next, out.points.size());
        out.points.push_back(std::move(next));
        out.transversal.push_back(std::move(t));
      }
    }
  }
  return out;
}

}  // namespace pchar
