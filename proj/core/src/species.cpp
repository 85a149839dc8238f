#include "dmfb/species.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dmfb/error.hpp"

namespace dmfb {

Species symbol_species(int id) { return "_S" + std::to_string(id) + "_"; }
Species linker_species(int id) { return "L" + std::to_string(id); }

bool is_symbol(const Species& s) {
  if (s.size() < 4 || s.front() != '_' || s[1] != 'S' || s.back() != '_') return false;
  for (std::size_t i = 2; i + 1 < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return s.size() > 3;
}

bool is_linker(const Species& s) {
  if (s.size() < 2 || s.front() != 'L') return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool is_mix(const Species& s) {
  return s == kGibsonMix || s == kPurifyMix || s == kPcrMix;
}

int linker_id(const Species& s) { return std::stoi(s.substr(1)); }

bool is_right_linker(const Species& s) {
  return is_linker(s) && linker_id(s) % 2 == 0;
}

bool is_left_linker(const Species& s) {
  return is_linker(s) && linker_id(s) % 2 == 1;
}

std::vector<StrandToken> tokenize_strand(const Species& s) {
  std::vector<StrandToken> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '_') {
      if (i + 1 >= s.size() || s[i + 1] != 'S') {
        throw ProtocolError("bad strand name '" + s + "' at offset " + std::to_string(i));
      }
      std::size_t j = i + 2;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 2 || j >= s.size() || s[j] != '_') {
        throw ProtocolError("bad symbol token in strand '" + s + "'");
      }
      tokens.push_back({true, std::stoi(s.substr(i + 2, j - i - 2))});
      i = j + 1;
    } else if (s[i] == 'L') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) throw ProtocolError("bad linker token in strand '" + s + "'");
      tokens.push_back({false, std::stoi(s.substr(i + 1, j - i - 1))});
      i = j;
    } else {
      throw ProtocolError("bad strand name '" + s + "' at offset " + std::to_string(i));
    }
  }
  if (tokens.empty()) throw ProtocolError("empty strand name");
  return tokens;
}

Mixture::Mixture(std::vector<Species> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
}

Mixture::Mixture(std::initializer_list<Species> items) : items_(items) {
  std::sort(items_.begin(), items_.end());
}

void Mixture::add(const Species& s) {
  items_.insert(std::upper_bound(items_.begin(), items_.end(), s), s);
}

void Mixture::merge(const Mixture& other) {
  std::vector<Species> merged;
  merged.reserve(items_.size() + other.items_.size());
  std::merge(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
             std::back_inserter(merged));
  items_ = std::move(merged);
}

bool Mixture::contains(const Species& s) const {
  return std::binary_search(items_.begin(), items_.end(), s);
}

int Mixture::count(const Species& s) const {
  auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), s);
  return static_cast<int>(hi - lo);
}

const Species& Mixture::sole() const {
  if (items_.size() != 1) {
    throw ProtocolError("expected a single species, found " + str());
  }
  return items_.front();
}

std::string Mixture::str() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out << ", ";
    out << items_[i];
  }
  out << "}";
  return out.str();
}

const char* reaction_name(ReactionKind k) {
  switch (k) {
    case ReactionKind::Gibson: return "Gibson";
    case ReactionKind::Purify: return "Purify";
    case ReactionKind::PCR: return "PCR";
  }
  return "?";
}

namespace {

struct Fragment {
  std::vector<StrandToken> tokens;

  bool left_universal() const { return tokens.front().symbol; }
  bool right_universal() const { return tokens.back().symbol; }
  bool bare_linker() const { return tokens.size() == 1 && !tokens.front().symbol; }
};

std::string fragment_name(const Fragment& f) {
  std::string out;
  for (const auto& t : f.tokens) {
    out += t.symbol ? symbol_species(t.id) : linker_species(t.id);
  }
  return out;
}

// Gibson chaining: join fragments until one remains. Three specific
// attachments are chemically possible:
//   a) right end L(2j) onto a left end L(2j+1)  (complementary pair)
//   b) a bare right-set linker onto a universal right end
//   c) a bare left-set linker onto a universal left end
// Each pass applies the first legal join in a canonical scan, which is
// unique for well-formed instructions because linker ids are never
// reused within a gene.
Species gibson_chain(std::vector<Fragment> frags, const Mixture& original) {
  auto fail = [&](const std::string& why) -> Species {
    throw ProtocolError("Gibson cannot assemble " + original.str() + ": " + why);
  };

  while (frags.size() > 1) {
    bool joined = false;
    // a) complementary junction pair
    for (std::size_t a = 0; a < frags.size() && !joined; ++a) {
      if (frags[a].bare_linker()) continue;
      const StrandToken& r = frags[a].tokens.back();
      if (r.symbol || r.id % 2 != 0) continue;
      for (std::size_t b = 0; b < frags.size(); ++b) {
        if (b == a || frags[b].bare_linker()) continue;
        const StrandToken& l = frags[b].tokens.front();
        if (!l.symbol && l.id == r.id + 1) {
          frags[a].tokens.insert(frags[a].tokens.end(), frags[b].tokens.begin(),
                                 frags[b].tokens.end());
          frags.erase(frags.begin() + static_cast<long>(b));
          joined = true;
          break;
        }
      }
    }
    if (joined) continue;
    // b) / c) bare linker onto a universal overhang
    for (std::size_t a = 0; a < frags.size() && !joined; ++a) {
      if (!frags[a].bare_linker()) continue;
      const bool right_set = frags[a].tokens.front().id % 2 == 0;
      for (std::size_t b = 0; b < frags.size(); ++b) {
        if (b == a || frags[b].bare_linker()) continue;
        if (right_set && frags[b].right_universal()) {
          frags[b].tokens.push_back(frags[a].tokens.front());
        } else if (!right_set && frags[b].left_universal()) {
          frags[b].tokens.insert(frags[b].tokens.begin(), frags[a].tokens.front());
        } else {
          continue;
        }
        frags.erase(frags.begin() + static_cast<long>(a));
        joined = true;
        break;
      }
    }
    if (!joined) {
      fail("no joinable ends among remaining fragments");
    }
  }
  if (frags.empty()) fail("no DNA fragments present");
  return fragment_name(frags.front());
}

}  // namespace

Species react_product(const Mixture& contents, ReactionKind kind) {
  const Species& mix = kind == ReactionKind::Gibson  ? kGibsonMix
                       : kind == ReactionKind::Purify ? kPurifyMix
                                                      : kPcrMix;
  if (contents.count(mix) != 1) {
    throw ProtocolError(std::string(reaction_name(kind)) + " expects exactly one " + mix +
                        ", found " + contents.str());
  }
  std::vector<Fragment> frags;
  for (const auto& s : contents.items()) {
    if (s == mix) continue;
    if (is_mix(s)) {
      throw ProtocolError(std::string(reaction_name(kind)) + " found foreign reagent " + s +
                          " in " + contents.str());
    }
    frags.push_back({tokenize_strand(s)});
  }
  if (frags.empty()) {
    throw ProtocolError(std::string(reaction_name(kind)) + " found no DNA in " + contents.str());
  }
  if (kind == ReactionKind::Gibson) {
    return gibson_chain(std::move(frags), contents);
  }
  // Purify and PCR operate on a single strand and leave its name as is.
  if (frags.size() != 1) {
    throw ProtocolError(std::string(reaction_name(kind)) + " expects a single strand, found " +
                        contents.str());
  }
  return fragment_name(frags.front());
}

}  // namespace dmfb
