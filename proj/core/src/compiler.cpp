#include "dmfb/compiler.hpp"

#include <sstream>

#include "dmfb/error.hpp"

namespace dmfb {

const char* instruction_name(InstructionKind k) {
  switch (k) {
    case InstructionKind::GibsonMove: return "Gibson-Move";
    case InstructionKind::Gibson: return "Gibson";
    case InstructionKind::PurifyMove: return "Purify-Move";
    case InstructionKind::Purify: return "Purify";
    case InstructionKind::PcrMove: return "PCR-Move";
    case InstructionKind::Pcr: return "PCR";
  }
  return "?";
}

bool is_move(InstructionKind k) {
  return k == InstructionKind::GibsonMove || k == InstructionKind::PurifyMove ||
         k == InstructionKind::PcrMove;
}

ReactionKind reaction_of(InstructionKind k) {
  switch (k) {
    case InstructionKind::GibsonMove:
    case InstructionKind::Gibson: return ReactionKind::Gibson;
    case InstructionKind::PurifyMove:
    case InstructionKind::Purify: return ReactionKind::Purify;
    case InstructionKind::PcrMove:
    case InstructionKind::Pcr: return ReactionKind::PCR;
  }
  return ReactionKind::Gibson;
}

std::vector<std::pair<int, int>> partition_ranges(int count, int arity) {
  if (count <= 0) throw ConfigError("cannot partition an empty list");
  if (arity < 2) throw ConfigError("assembly arity must be at least 2");
  std::vector<std::pair<int, int>> out;
  if (count <= arity) {
    for (int i = 0; i < count; ++i) out.emplace_back(i, 1);
    return out;
  }
  int start = 0;
  while (count - start >= arity) {
    out.emplace_back(start, arity);
    start += arity;
  }
  if (start < count) out.emplace_back(start, count - start);
  return out;
}

NodePlan generate_instructions(const std::vector<std::string>& child_data,
                               LinkerAllocator& linkers) {
  const int k = static_cast<int>(child_data.size());
  if (k < 2) throw IntegrityError("instruction generation needs at least two segments");

  NodePlan plan;
  std::vector<std::string> flanked;
  flanked.reserve(static_cast<std::size_t>(k));

  for (int i = 0; i < k; ++i) {
    // Interior junctions: the left neighbour's right-set linker pairs
    // with this child's left-set linker. Allocation order matches the
    // per-child visit so ids come out L0, L1, L2, ... within a gene.
    std::string left, right;
    if (i > 0) left = linker_species(linkers.allocate());
    if (i < k - 1) right = linker_species(linkers.allocate());

    Instruction move{InstructionKind::GibsonMove, {}};
    if (!left.empty()) move.operands.push_back(Mixture{{left}});
    if (!right.empty()) move.operands.push_back(Mixture{{right}});
    move.operands.push_back(Mixture{{child_data[static_cast<std::size_t>(i)]}});
    move.operands.push_back(Mixture{{kGibsonMix}});

    Mixture mixed;
    for (const auto& op : move.operands) mixed.merge(op);
    plan.instructions.push_back(std::move(move));
    plan.instructions.push_back({InstructionKind::Gibson, {mixed}});

    flanked.push_back(left + child_data[static_cast<std::size_t>(i)] + right);
  }

  Instruction combine{InstructionKind::GibsonMove, {}};
  for (const auto& f : flanked) combine.operands.push_back(Mixture{{f}});
  combine.operands.push_back(Mixture{{kGibsonMix}});
  Mixture combined;
  for (const auto& op : combine.operands) combined.merge(op);
  plan.instructions.push_back(std::move(combine));
  plan.instructions.push_back({InstructionKind::Gibson, {combined}});

  std::string product;
  for (const auto& f : flanked) product += f;
  plan.product = product;

  plan.instructions.push_back(
      {InstructionKind::PurifyMove, {Mixture{{product}}, Mixture{{kPurifyMix}}}});
  plan.instructions.push_back({InstructionKind::Purify, {Mixture{{product, kPurifyMix}}}});
  plan.instructions.push_back(
      {InstructionKind::PcrMove, {Mixture{{product}}, Mixture{{kPcrMix}}}});
  plan.instructions.push_back({InstructionKind::Pcr, {Mixture{{product, kPcrMix}}}});
  return plan;
}

CompiledTree build_tree(const Gene& gene, const CompilerConfig& cfg) {
  if (gene.symbols.empty()) throw ConfigError("gene must contain at least one symbol");
  if (cfg.arity < 2) throw ConfigError("assembly arity must be at least 2");

  CompiledTree tree;
  LinkerAllocator linkers;

  std::vector<std::unique_ptr<AssemblyNode>> layer;
  for (int id : gene.symbols) {
    if (id < 0) throw ConfigError("symbol ids must be non-negative");
    auto leaf = std::make_unique<AssemblyNode>();
    leaf->data = symbol_species(id);
    layer.push_back(std::move(leaf));
  }

  int level = 0;
  auto make_parent = [&](std::vector<std::unique_ptr<AssemblyNode>> kids) {
    auto parent = std::make_unique<AssemblyNode>();
    parent->level = level;
    if (kids.size() == 1) {
      parent->data = kids.front()->data;  // pass-through: linkers deferred to its parent
    } else {
      std::vector<std::string> child_data;
      for (const auto& c : kids) child_data.push_back(c->data);
      NodePlan plan = generate_instructions(child_data, linkers);
      parent->data = plan.product;
      parent->instructions = std::move(plan.instructions);
    }
    parent->children = std::move(kids);
    return parent;
  };

  while (static_cast<int>(layer.size()) > cfg.arity) {
    ++level;
    std::vector<std::unique_ptr<AssemblyNode>> next;
    for (auto [start, len] : partition_ranges(static_cast<int>(layer.size()), cfg.arity)) {
      std::vector<std::unique_ptr<AssemblyNode>> kids;
      for (int i = 0; i < len; ++i) kids.push_back(std::move(layer[static_cast<std::size_t>(start + i)]));
      next.push_back(make_parent(std::move(kids)));
    }
    layer = std::move(next);
  }

  if (layer.size() == 1) {
    tree.root = std::move(layer.front());  // single-symbol gene: the leaf is the root
  } else {
    ++level;
    tree.root = make_parent(std::move(layer));
  }

  // Index nodes in creation order: leaves left to right, then each level
  // left to right, root last.
  std::vector<std::vector<AssemblyNode*>> by_level;
  auto collect = [&](auto&& self, AssemblyNode* n) -> void {
    for (auto& c : n->children) self(self, c.get());
    if (static_cast<int>(by_level.size()) <= n->level) by_level.resize(static_cast<std::size_t>(n->level) + 1);
    by_level[static_cast<std::size_t>(n->level)].push_back(n);
  };
  collect(collect, tree.root.get());
  for (auto& lvl : by_level) {
    for (AssemblyNode* n : lvl) {
      n->index = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(n);
    }
  }
  return tree;
}

long total_droplets(const Gene& gene, const CompilerConfig& cfg) {
  CompiledTree tree = build_tree(gene, cfg);
  long pulls = gene.length();
  for (const AssemblyNode* n : tree.nodes) {
    const int k = static_cast<int>(n->children.size());
    if (k >= 2) pulls += 3L * k + 1;  // 2(k-1) linkers + (k+1) Gibson + Purify + PCR mixes
  }
  return pulls;
}

std::string instruction_line(const Instruction& ins) {
  std::ostringstream out;
  out << instruction_name(ins.kind);
  for (const auto& op : ins.operands) {
    out << " [";
    for (std::size_t i = 0; i < op.items().size(); ++i) {
      if (i) out << ", ";
      out << op.items()[i];
    }
    out << "]";
  }
  return out.str();
}

std::string serialize_instructions(const CompiledTree& tree) {
  std::ostringstream out;
  for (const AssemblyNode* n : tree.nodes) {
    if (n->instructions.empty()) continue;
    out << "node " << n->index << " " << n->data << "\n";
    for (std::size_t i = 0; i < n->instructions.size(); ++i) {
      out << i + 1 << ". " << instruction_line(n->instructions[i]) << "\n";
    }
  }
  return out.str();
}

}  // namespace dmfb
