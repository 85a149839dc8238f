#include "dmfb/droplet.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "dmfb/error.hpp"

namespace dmfb {

int shadow_radius(int volume) {
  if (volume < 1) throw IntegrityError("droplet volume must be positive");
  int r = 1;
  while (ball_size(r) < 5 * volume) ++r;
  return r;
}

namespace {

std::vector<Cell> make_ball(int radius) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(ball_size(radius)));
  for (int y = -radius; y <= radius; ++y) {
    const int span = radius - std::abs(y);
    for (int x = -span; x <= span; ++x) cells.push_back({x, y});
  }
  return cells;
}

// The ring at distance radius+1: exactly the cells 4-adjacent to the
// ball without being in it.
std::vector<Cell> make_ring(int radius) {
  std::vector<Cell> cells;
  const int r = radius + 1;
  for (int y = -r; y <= r; ++y) {
    const int span = r - std::abs(y);
    if (span == 0) {
      cells.push_back({0, y});
    } else {
      cells.push_back({-span, y});
      cells.push_back({span, y});
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::mutex g_shape_mutex;

}  // namespace

const std::vector<Cell>& shadow_offsets(int radius) {
  static std::unordered_map<int, std::vector<Cell>> cache;
  std::lock_guard lock(g_shape_mutex);
  auto it = cache.find(radius);
  if (it == cache.end()) it = cache.emplace(radius, make_ball(radius)).first;
  return it->second;
}

const std::vector<Cell>& occlusion_offsets(int radius) {
  static std::unordered_map<int, std::vector<Cell>> cache;
  std::lock_guard lock(g_shape_mutex);
  auto it = cache.find(radius);
  if (it == cache.end()) it = cache.emplace(radius, make_ring(radius)).first;
  return it->second;
}

std::vector<Cell> shadow_cells(const Droplet& d) {
  std::vector<Cell> out;
  for (Cell off : shadow_offsets(shadow_radius(d.volume))) {
    out.push_back({d.center.x + off.x, d.center.y + off.y});
  }
  return out;
}

std::vector<Cell> occlusion_cells(const Droplet& d) {
  std::vector<Cell> out;
  for (Cell off : occlusion_offsets(shadow_radius(d.volume))) {
    out.push_back({d.center.x + off.x, d.center.y + off.y});
  }
  return out;
}

Droplet merge_droplets(std::span<const Droplet> parts, int new_id) {
  if (parts.size() < 2) throw IntegrityError("merge needs at least two droplets");
  Droplet out;
  out.id = new_id;
  out.volume = 0;
  const Droplet* anchor = &parts.front();
  for (const Droplet& p : parts) {
    out.contents.merge(p.contents);
    out.volume += p.volume;
    if (p.volume > anchor->volume || (p.volume == anchor->volume && p.id < anchor->id)) {
      anchor = &p;
    }
  }
  out.center = anchor->center;
  out.merge_group = anchor->merge_group;
  out.state = DropletState::Idle;
  return out;
}

void apply_reaction(Droplet& d, ReactionKind kind) {
  d.contents = Mixture{{react_product(d.contents, kind)}};
  d.state = DropletState::Idle;
}

}  // namespace dmfb
