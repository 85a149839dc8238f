#pragma once

#include <string>
#include <vector>

namespace dmfb {

// Reagent names follow the protocol grammar: symbols "_S<k>_", linkers
// "L<k>", the three mix reagents, and concatenations produced by Gibson
// assembly (e.g. "_S1_L0L1_S0_L2L3_S2_").
using Species = std::string;

inline const Species kGibsonMix = "Gibson-mix";
inline const Species kPurifyMix = "Purify-mix";
inline const Species kPcrMix = "PCR-mix";

Species symbol_species(int id);
Species linker_species(int id);

bool is_symbol(const Species& s);
bool is_linker(const Species& s);
bool is_mix(const Species& s);

// Left-set linkers carry odd ids, right-set linkers even ids; the pair
// (L2j, L2j+1) is complementary and forms one junction.
bool is_right_linker(const Species& s);
bool is_left_linker(const Species& s);
int linker_id(const Species& s);

// One token of a strand name: either a symbol or a linker.
struct StrandToken {
  bool symbol = false;
  int id = 0;

  friend bool operator==(const StrandToken&, const StrandToken&) = default;
};

// Splits a strand name into its symbol/linker tokens. Throws
// ProtocolError on anything outside the grammar.
std::vector<StrandToken> tokenize_strand(const Species& s);

// A droplet's contents: a multiset of species, kept sorted so equality
// and hashing are canonical.
class Mixture {
 public:
  Mixture() = default;
  explicit Mixture(std::vector<Species> items);
  Mixture(std::initializer_list<Species> items);

  void add(const Species& s);
  void merge(const Mixture& other);

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const std::vector<Species>& items() const { return items_; }
  bool contains(const Species& s) const;
  int count(const Species& s) const;

  // Single-species accessor; throws unless size() == 1.
  const Species& sole() const;

  std::string str() const;  // "{a, b, c}"

  friend bool operator==(const Mixture&, const Mixture&) = default;
  friend auto operator<=>(const Mixture&, const Mixture&) = default;

 private:
  std::vector<Species> items_;  // sorted
};

enum class ReactionKind : std::uint8_t { Gibson, Purify, PCR };

const char* reaction_name(ReactionKind k);

// Applies the symbolic chemistry of one reaction to a droplet's mixed
// contents and returns the single product strand. Gibson chains all
// fragments via complementary linker ends and universal symbol
// overhangs; Purify and PCR pass the strand through unchanged. The
// matching mix reagent must be present exactly once and is consumed.
// Throws ProtocolError with an expected-vs-found diagnostic otherwise.
Species react_product(const Mixture& contents, ReactionKind kind);

}  // namespace dmfb
