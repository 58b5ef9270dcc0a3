#include "geosat/kernel.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace geosat {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {}

UniversePtr Universe::create(std::vector<std::string> names, std::size_t maxSize) {
  const std::size_t cap = std::min(maxSize, kAbsoluteMaxUniverse);
  if (names.size() > cap) {
    throw UniverseTooLarge("universe of " + std::to_string(names.size()) +
                           " symbols exceeds the maximum of " + std::to_string(cap));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw DuplicateSymbol("duplicate symbol '" + n + "'");
    }
  }
  return UniversePtr(new Universe(std::move(names)));
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool same_universe(const Universe& a, const Universe& b) {
  return &a == &b || a.names() == b.names();
}

std::size_t mask_card(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

bool node_less(Mask a, Mask b) {
  if (a == b) return false;
  const auto ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  // Same cardinality: the set holding the lowest differing index comes first.
  const Mask low = (a ^ b) & (0u - (a ^ b));
  return (a & low) != 0;
}

KSet::KSet(UniversePtr universe, Mask bits) : universe_(std::move(universe)), bits_(bits) {
  if (!universe_) throw Error("KSet requires a universe");
  if (!mask_subset(bits_, universe_->full_mask())) {
    throw Error("KSet bits outside the universe");
  }
}

KSet KSet::of(const UniversePtr& universe, std::initializer_list<std::size_t> indices) {
  Mask m = 0;
  for (auto i : indices) {
    if (!universe || i >= universe->size()) throw UnknownSymbol("symbol index out of range");
    m |= Mask{1} << i;
  }
  return KSet(universe, m);
}

KSet KSet::of_names(const UniversePtr& universe, std::initializer_list<std::string_view> names) {
  Mask m = 0;
  for (auto n : names) {
    auto idx = universe ? universe->index_of(n) : std::nullopt;
    if (!idx) throw UnknownSymbol("unknown symbol '" + std::string(n) + "'");
    m |= Mask{1} << *idx;
  }
  return KSet(universe, m);
}

bool KSet::subset_of(const KSet& other) const {
  if (!same_universe(universe_, other.universe_)) {
    throw MixedUniverse("subset test across universes");
  }
  return mask_subset(bits_, other.bits_);
}

KSet KSet::union_with(const KSet& other) const {
  if (!same_universe(universe_, other.universe_)) {
    throw MixedUniverse("union across universes");
  }
  return KSet(universe_, bits_ | other.bits_);
}

std::vector<std::string> KSet::element_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    if (contains(i)) out.push_back(universe_->name(i));
  }
  return out;
}

std::string KSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    if (!contains(i)) continue;
    if (!first) out += ' ';
    out += universe_->name(i);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

std::vector<Mask> canonical_disjuncts(std::vector<Mask> ds) {
  std::sort(ds.begin(), ds.end(), node_less);
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return ds;
}

}  // namespace

Sequent::Sequent(UniversePtr universe, Mask premise, std::vector<Mask> disjuncts)
    : universe_(std::move(universe)),
      premise_(premise),
      disjuncts_(canonical_disjuncts(std::move(disjuncts))) {
  if (!universe_) throw Error("Sequent requires a universe");
  const Mask full = universe_->full_mask();
  if (!mask_subset(premise_, full)) throw Error("sequent premise outside the universe");
  for (Mask d : disjuncts_) {
    if (!mask_subset(d, full)) throw Error("sequent disjunct outside the universe");
  }
}

bool Sequent::is_normalized() const {
  for (Mask d : disjuncts_) {
    if (!mask_subset(premise_, d)) return false;
  }
  return true;
}

bool Sequent::trivially_true() const {
  for (Mask d : disjuncts_) {
    if (mask_subset(d, premise_)) return true;
  }
  return false;
}

std::string Sequent::to_string() const {
  std::string out = KSet(universe_, premise_).to_string();
  out += " -> ";
  if (disjuncts_.empty()) {
    out += "false";
  } else {
    bool first = true;
    for (Mask d : disjuncts_) {
      if (!first) out += " | ";
      out += KSet(universe_, d).to_string();
      first = false;
    }
  }
  return out;
}

Sequent normalize(const Sequent& s) {
  std::vector<Mask> ds;
  ds.reserve(s.disjuncts().size());
  for (Mask d : s.disjuncts()) ds.push_back(d | s.premise());
  return Sequent(s.universe(), s.premise(), std::move(ds));
}

bool satisfies(const KSet& X, const Sequent& s) {
  if (!same_universe(X.universe(), s.universe())) {
    throw MixedUniverse("model and sequent over different universes");
  }
  if (!mask_subset(s.premise(), X.bits())) return true;
  for (Mask d : s.disjuncts()) {
    if (mask_subset(d, X.bits())) return true;
  }
  return false;
}

Theory::Theory(UniversePtr universe, std::vector<Sequent> axioms)
    : universe_(std::move(universe)) {
  if (!universe_) throw Error("Theory requires a universe");
  axioms_.reserve(axioms.size());
  for (auto& ax : axioms) {
    if (!same_universe(ax.universe(), universe_)) {
      throw MixedUniverse("axiom over a different universe");
    }
    axioms_.push_back(normalize(ax));
  }
}

bool is_model(const KSet& X, const Theory& T) {
  if (!same_universe(X.universe(), T.universe())) {
    throw MixedUniverse("model and theory over different universes");
  }
  for (const auto& ax : T.axioms()) {
    if (!satisfies(X, ax)) return false;
  }
  return true;
}

namespace {

// Dictionary order on ascending index sequences: visit `base`, then extend
// with each index above `next` in turn.
template <typename Fn>
bool lex_subsets(Mask base, std::size_t next, std::size_t n, Fn&& visit) {
  if (!visit(base)) return false;
  for (std::size_t i = next; i < n; ++i) {
    if (!lex_subsets(base | (Mask{1} << i), i + 1, n, visit)) return false;
  }
  return true;
}

}  // namespace

std::vector<KSet> find_models(const Theory& T, std::optional<std::size_t> limit) {
  std::vector<KSet> out;
  if (limit && *limit == 0) return out;
  const std::size_t n = T.universe()->size();
  lex_subsets(0, 0, n, [&](Mask m) {
    KSet candidate(T.universe(), m);
    if (is_model(candidate, T)) {
      out.push_back(candidate);
      if (limit && out.size() >= *limit) return false;
    }
    return true;
  });
  return out;
}

}  // namespace geosat
