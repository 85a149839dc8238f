#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dmfb/droplet.hpp"
#include "dmfb/geometry.hpp"

namespace dmfb {

// A planned space-time path: cells[i] is the droplet's center at time
// start_time + i. Consecutive cells differ by one cardinal step or are
// equal (a wait). The last cell is the goal.
struct Route {
  int droplet = -1;
  int start_time = 0;
  std::vector<Cell> cells;
  Cell goal{};

  int arrival_time() const {
    return start_time + static_cast<int>(cells.size()) - 1;
  }
  Cell position_at(int t) const;
};

// Resolves a droplet id to its merge group. Unclaimed droplets get a
// synthetic singleton group so that nothing may touch them.
class GroupMap {
 public:
  explicit GroupMap(const std::map<int, int>* claims) : claims_(claims) {}
  int of(int droplet) const {
    if (claims_) {
      auto it = claims_->find(droplet);
      if (it != claims_->end()) return it->second;
    }
    return -droplet - 2;
  }

 private:
  const std::map<int, int>* claims_ = nullptr;
};

enum class ZoneKind : std::uint8_t { Shadow, Occlusion };

// Space-time occupancy. Every route position stamps its shadow and
// occlusion cells at the previous, current and next time step; a
// droplet's final position is additionally held open-ended until its
// next route is planned. A cell with a stamp at time T is off-limits to
// other groups' shadows at all times up to T: a grid space occluded
// until T may not be overshadowed earlier.
class ReservationTable {
 public:
  static constexpr int kStanding = INT32_MIN;

  struct Entry {
    int droplet;
    int time;      // stamped time, or kStanding
    int src_time;  // route step (or stand start) that produced the stamp
    ZoneKind zone;
  };

  void add_route(const Route& route, int radius);
  void add_standing(int droplet, Cell center, int radius, int from_time);
  void release(int droplet);
  void gc(int before_time);

  bool shadow_blocked(Cell c, int t, int droplet, int group, const GroupMap& groups) const;
  bool occlusion_blocked_transit(Cell c, int t, int droplet, int group,
                                 const GroupMap& groups) const;
  bool occlusion_blocked_standing(Cell c, int t, int droplet, int group,
                                  const GroupMap& groups) const;

  // Zone projections overlapping the window [tick-1, tick+1], per the
  // most recent / current / next step rule; at most 3 per droplet.
  long live_projections(long tick) const;
  long live_projections_for(int droplet, long tick) const;

  bool has_entries(int droplet) const;
  std::size_t entry_count() const;

 private:
  struct DropletSpan {
    bool has_route = false;
    int route_first = 0, route_last = 0;
    bool standing = false;
    int standing_from = 0;
    std::vector<std::uint64_t> cells;  // keys touched, with duplicates
  };

  void stamp(int droplet, Cell c, int time, int src, ZoneKind zone);

  std::unordered_map<std::uint64_t, std::vector<Entry>> cells_;
  std::unordered_map<int, DropletSpan> spans_;
};

struct RouteRequest {
  int droplet = -1;
  int group = -1;
  Cell start{};
  Cell goal{};
  int start_time = 0;
  int radius = 1;
};

struct RoutingContext {
  const ReservationTable* table = nullptr;
  GroupMap groups{nullptr};
  int width = 0;
  int height = 0;
  // Reaction-site cells claimed by a group: other groups may transit but
  // not come to rest with their shadow over them.
  const std::map<std::uint64_t, int>* claimed_cells = nullptr;
  int horizon_factor = 4;  // searches give up at start + factor*(w+h)
};

// The feasibility predicate of the space-time graph, shared verbatim by
// the production A* and by any exhaustive oracle so both search the
// identical graph.
class SearchSpace {
 public:
  SearchSpace(const RouteRequest& req, const RoutingContext& ctx);

  bool can_occupy(Cell center, int t) const;  // transit through (center, t)
  bool can_stand(Cell center, int t) const;   // come to rest at (center, t)
  bool in_bounds(Cell c) const {
    return c.x >= 0 && c.y >= 0 && c.x < ctx_.width && c.y < ctx_.height;
  }
  int horizon() const { return horizon_; }

 private:
  RouteRequest req_;
  const RoutingContext& ctx_;
  int horizon_;
};

// Merge groups ordered by descending maximum member distance-to-goal
// (ties: lower group id first); within a group, ascending droplet id.
std::vector<RouteRequest> prioritize(std::vector<RouteRequest> pending);

// 3-D A* over (x, y, time) with unit-cost cardinal moves and waits,
// Manhattan heuristic, and f = g + h scoring. Ties prefer larger g, then
// lower y, x. Returns the route with minimal arrival time that respects
// the reservation table, or nullopt when the open set or horizon is
// exhausted (the caller retries on a later tick).
std::optional<Route> plan_route(const RouteRequest& req, const RoutingContext& ctx);

// Stamps a planned route into the table, re-validating every position;
// an infeasible position indicates a router bug and throws
// IntegrityError.
void reserve(const Route& route, int radius, const RoutingContext& ctx, ReservationTable& table);

struct RoutingOutcome {
  std::vector<Route> planned;
  std::vector<RouteRequest> deferred;
};

// Plans all pending requests in priority order. Droplets that cannot be
// routed are deferred, keeping their standing footprint in place.
RoutingOutcome route_all_pending(std::vector<RouteRequest> pending, RoutingContext& ctx,
                                 ReservationTable& table);

}  // namespace dmfb
