#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dmfb/geometry.hpp"
#include "dmfb/species.hpp"

namespace dmfb {

enum class DropletState : std::uint8_t { Idle, Routed, Reacting, Done };

constexpr int kNoGroup = -1;

// A routable fluid unit. Volume counts the unit (reservoir-pulled)
// droplets merged into it and drives the digitized footprint below.
struct Droplet {
  int id = -1;
  Mixture contents;
  Cell center;
  int volume = 1;
  int merge_group = kNoGroup;
  DropletState state = DropletState::Idle;
};

// Number of cells in the Manhattan ball of the given radius.
constexpr int ball_size(int radius) { return 2 * radius * (radius + 1) + 1; }

// Footprint growth rule: the smallest radius whose Manhattan ball covers
// at least five cells per merged unit droplet. Volume 1 gives the
// five-cell plus shape.
int shadow_radius(int volume);

// Center-relative shadow (Manhattan ball) and occlusion (the layer of
// cells 4-adjacent to the shadow without touching it). Cached per radius.
const std::vector<Cell>& shadow_offsets(int radius);
const std::vector<Cell>& occlusion_offsets(int radius);

std::vector<Cell> shadow_cells(const Droplet& d);
std::vector<Cell> occlusion_cells(const Droplet& d);

// Combines two or more touching droplets of one merge group. The result
// keeps the center of the largest constituent (ties to the lowest id),
// takes the multiset union of contents, and sums volumes.
Droplet merge_droplets(std::span<const Droplet> parts, int new_id);

// Transforms a droplet's contents into the reaction product. Volume is
// unchanged. Throws ProtocolError when the reagents do not match.
void apply_reaction(Droplet& d, ReactionKind kind);

}  // namespace dmfb
