#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dmfb/species.hpp"

namespace dmfb {

// The target product P: an ordered list of symbol ids.
struct Gene {
  std::vector<int> symbols;

  int length() const { return static_cast<int>(symbols.size()); }
};

struct CompilerConfig {
  // Maximum number of segments one assembly reaction may combine.
  int arity = 3;
};

enum class InstructionKind : std::uint8_t {
  GibsonMove,
  Gibson,
  PurifyMove,
  Purify,
  PcrMove,
  Pcr,
};

const char* instruction_name(InstructionKind k);
bool is_move(InstructionKind k);
ReactionKind reaction_of(InstructionKind k);

// One chemical instruction: a kind plus droplet descriptors. Move kinds
// carry one descriptor per droplet to gather; reaction kinds carry a
// single descriptor for the merged droplet.
struct Instruction {
  InstructionKind kind;
  std::vector<Mixture> operands;
};

struct AssemblyNode {
  // Immutable blueprint: the strand this node produces and the ordered
  // instructions that build it. Leaves and single-child pass-through
  // nodes have no instructions.
  std::string data;
  std::vector<Instruction> instructions;
  std::vector<std::unique_ptr<AssemblyNode>> children;
  int index = -1;  // creation order: leaves, then parents level by level
  int level = 0;   // 0 for leaves

  // Runtime registry, mutated only by the manager's tick loop.
  int cursor = 0;
  std::vector<int> droplets;

  bool leaf() const { return children.empty(); }
  bool pass_through() const { return children.size() == 1; }
};

struct CompiledTree {
  std::unique_ptr<AssemblyNode> root;
  std::vector<AssemblyNode*> nodes;  // creation order, root last
};

class LinkerAllocator {
 public:
  int allocate() { return next_++; }
  int allocated() const { return next_; }

 private:
  int next_ = 0;
};

// Data partitioning: up to `arity` items become singletons; longer lists
// split into full arity-tuples plus a shortened remainder tuple.
std::vector<std::pair<int, int>> partition_ranges(int count, int arity);

template <typename T>
std::vector<std::vector<T>> partition(const std::vector<T>& items, int arity) {
  std::vector<std::vector<T>> out;
  for (auto [start, len] : partition_ranges(static_cast<int>(items.size()), arity)) {
    out.emplace_back(items.begin() + start, items.begin() + start + len);
  }
  return out;
}

// Emits the instruction list that assembles the given child strands into
// one product: a Gibson-Move/Gibson pair per child attaching its
// junction linkers, one pair combining all linker-attached segments,
// then Purify and PCR pairs. Returns the instructions and the product
// strand name.
struct NodePlan {
  std::vector<Instruction> instructions;
  std::string product;
};
NodePlan generate_instructions(const std::vector<std::string>& child_data,
                               LinkerAllocator& linkers);

// Builds the arity-bounded assembly tree bottom-up and populates every
// multi-child node's instruction list.
CompiledTree build_tree(const Gene& gene, const CompilerConfig& cfg);

// Reservoir pulls implied by the compiled tree: one per symbol plus, for
// every k-child assembly node, 2(k-1) linkers, k+1 Gibson mixes, one
// Purify mix and one PCR mix.
long total_droplets(const Gene& gene, const CompilerConfig& cfg);

// Line-oriented text form of a tree's instructions, in emission order.
std::string serialize_instructions(const CompiledTree& tree);
std::string instruction_line(const Instruction& ins);

}  // namespace dmfb
