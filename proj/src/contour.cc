// Copyright 2026 The ransomgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ransomgame/errors.h"
#include "ransomgame/optimizer.h"

namespace ransomgame {
namespace {

struct Segment {
  std::size_t from;  // edge ids
  std::size_t to;
};

}  // namespace

std::vector<Polyline> contour_lines(std::span<const double> xs,
                                    std::span<const double> ys,
                                    std::span<const double> values, double level) {
  const std::size_t nx = xs.size();
  const std::size_t ny = ys.size();
  if (nx < 2 || ny < 2 || values.size() != nx * ny) {
    throw ConfigError("contour_lines: grid must be at least 2x2 and match values");
  }
  auto v = [&](std::size_t ix, std::size_t iy) { return values[iy * nx + ix]; };
  auto above = [&](std::size_t ix, std::size_t iy) { return v(ix, iy) > level; };

  // Edge ids: 2*(iy*nx+ix) is the edge from (ix,iy) to (ix+1,iy); 2*(...)+1
  // runs from (ix,iy) to (ix,iy+1).
  auto horizontal = [&](std::size_t ix, std::size_t iy) { return 2 * (iy * nx + ix); };
  auto vertical = [&](std::size_t ix, std::size_t iy) { return 2 * (iy * nx + ix) + 1; };

  std::map<std::size_t, Point2> crossing;
  auto crossing_on = [&](std::size_t id) -> bool {
    const std::size_t node = id / 2;
    const std::size_t ix = node % nx, iy = node / nx;
    const std::size_t jx = id % 2 == 0 ? ix + 1 : ix;
    const std::size_t jy = id % 2 == 0 ? iy : iy + 1;
    if (above(ix, iy) == above(jx, jy)) return false;
    if (!crossing.contains(id)) {
      const double t = (level - v(ix, iy)) / (v(jx, jy) - v(ix, iy));
      crossing[id] = {xs[ix] + t * (xs[jx] - xs[ix]), ys[iy] + t * (ys[jy] - ys[iy])};
    }
    return true;
  };

  std::vector<Segment> segments;
  for (std::size_t iy = 0; iy + 1 < ny; ++iy) {
    for (std::size_t ix = 0; ix + 1 < nx; ++ix) {
      const std::size_t bottom = horizontal(ix, iy);
      const std::size_t top = horizontal(ix, iy + 1);
      const std::size_t left = vertical(ix, iy);
      const std::size_t right = vertical(ix + 1, iy);
      std::vector<std::size_t> hits;
      for (std::size_t e : {bottom, right, top, left}) {
        if (crossing_on(e)) hits.push_back(e);
      }
      if (hits.size() == 2) {
        segments.push_back({hits[0], hits[1]});
      } else if (hits.size() == 4) {
        const double centre =
            0.25 * (v(ix, iy) + v(ix + 1, iy) + v(ix, iy + 1) + v(ix + 1, iy + 1));
        if ((centre > level) == above(ix, iy)) {
          segments.push_back({bottom, right});
          segments.push_back({top, left});
        } else {
          segments.push_back({bottom, left});
          segments.push_back({right, top});
        }
      }
    }
  }

  // Every crossing point is shared by at most two segments.
  std::map<std::size_t, std::vector<std::size_t>> incident;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    incident[segments[s].from].push_back(s);
    incident[segments[s].to].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);

  auto trace_from = [&](std::size_t edge) {
    Polyline line{crossing.at(edge)};
    std::size_t current = edge;
    while (true) {
      std::size_t next_segment = segments.size();
      for (std::size_t s : incident[current]) {
        if (!used[s]) {
          next_segment = s;
          break;
        }
      }
      if (next_segment == segments.size()) break;
      used[next_segment] = true;
      const Segment& seg = segments[next_segment];
      current = seg.from == current ? seg.to : seg.from;
      line.push_back(crossing.at(current));
    }
    return line;
  };

  std::vector<Polyline> lines;
  // Open lines start at boundary crossings, which touch a single segment.
  for (const auto& [edge, segs] : incident) {
    if (segs.size() == 1 && !used[segs.front()]) lines.push_back(trace_from(edge));
  }
  for (const auto& [edge, segs] : incident) {
    for (std::size_t s : segs) {
      if (!used[s]) lines.push_back(trace_from(edge));
    }
  }
  return lines;
}

}  // namespace ransomgame
