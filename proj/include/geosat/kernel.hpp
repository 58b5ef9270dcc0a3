#pragma once

// Symbol universes, K-finite subsets, sequents, theories, and two-valued
// model semantics. Everything here is an immutable value; all operations
// are pure and safe to share across threads.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geosat {

// A subset of a universe, one bit per symbol index (index 0 = lowest bit).
using Mask = std::uint32_t;

// Default limit on universe size. The site engine allocates tables with one
// entry per subset, so 2^|A| must stay addressable.
inline constexpr std::size_t kDefaultMaxUniverse = 24;
// Representation limit: node sets and subset tables are dense over 2^|A|.
inline constexpr std::size_t kAbsoluteMaxUniverse = 26;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateSymbol : Error { using Error::Error; };
struct UniverseTooLarge : Error { using Error::Error; };
struct MixedUniverse : Error { using Error::Error; };
struct UnknownSymbol : Error { using Error::Error; };

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

// An ordered finite set of distinct sentence symbols. The declaration order
// fixes the symbol indices and therefore every canonical order downstream.
class Universe {
 public:
  static UniversePtr create(std::vector<std::string> names,
                            std::size_t maxSize = kDefaultMaxUniverse);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  Mask full_mask() const {
    return size() == 0 ? 0 : (Mask{1} << size()) - 1;
  }

 private:
  explicit Universe(std::vector<std::string> names);
  std::vector<std::string> names_;
};

// Universes are compared extensionally (same names in the same order).
bool same_universe(const Universe& a, const Universe& b);
inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && same_universe(*a, *b));
}

std::size_t mask_card(Mask m);
bool mask_subset(Mask a, Mask b);  // a ⊆ b

// Canonical node order: cardinality ascending, then lexicographic on the
// ascending index sequence. Fixes traces and serialized node sets bit for
// bit.
bool node_less(Mask a, Mask b);

// A K-finite subset of a universe. Doubles as a node of the subset site and
// as a candidate model.
class KSet {
 public:
  KSet(UniversePtr universe, Mask bits);
  static KSet empty(UniversePtr universe) { return KSet(std::move(universe), 0); }
  static KSet of(const UniversePtr& universe, std::initializer_list<std::size_t> indices);
  static KSet of_names(const UniversePtr& universe, std::initializer_list<std::string_view> names);

  const UniversePtr& universe() const { return universe_; }
  Mask bits() const { return bits_; }
  std::size_t card() const { return mask_card(bits_); }
  bool empty_set() const { return bits_ == 0; }
  bool contains(std::size_t index) const { return (bits_ >> index) & 1u; }
  bool subset_of(const KSet& other) const;
  KSet union_with(const KSet& other) const;
  std::vector<std::string> element_names() const;
  std::string to_string() const;  // "{a b}"

  friend bool operator==(const KSet& a, const KSet& b) {
    return a.bits_ == b.bits_ && same_universe(a.universe_, b.universe_);
  }

 private:
  UniversePtr universe_;
  Mask bits_;
};

// A sequent p -> ⋁α over one universe. The empty premise encodes ⊤ and the
// empty disjunct set encodes ⊥. Disjuncts are kept canonical (deduplicated,
// in canonical node order).
class Sequent {
 public:
  Sequent(UniversePtr universe, Mask premise, std::vector<Mask> disjuncts);
  static Sequent bottom(UniversePtr universe, Mask premise) {
    return Sequent(std::move(universe), premise, {});
  }

  const UniversePtr& universe() const { return universe_; }
  Mask premise() const { return premise_; }
  const std::vector<Mask>& disjuncts() const { return disjuncts_; }
  bool is_bottom() const { return disjuncts_.empty(); }
  bool is_normalized() const;
  // True when some disjunct is contained in the premise; such a sequent
  // holds in every model.
  bool trivially_true() const;
  std::string to_string() const;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.premise_ == b.premise_ && a.disjuncts_ == b.disjuncts_ &&
           same_universe(a.universe_, b.universe_);
  }

 private:
  UniversePtr universe_;
  Mask premise_;
  std::vector<Mask> disjuncts_;
};

// Replace each disjunct q by premise ∪ q. Satisfaction is unchanged; ⊥ is a
// fixed point.
Sequent normalize(const Sequent& s);

// Sets semantics: premise ⊆ X implies some disjunct ⊆ X.
bool satisfies(const KSet& X, const Sequent& s);

// An ordered list of normalized axioms over one universe. The axiom order is
// part of the theory's identity and drives deterministic traces.
class Theory {
 public:
  Theory(UniversePtr universe, std::vector<Sequent> axioms);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Sequent>& axioms() const { return axioms_; }
  std::size_t size() const { return axioms_.size(); }

  friend bool operator==(const Theory& a, const Theory& b) {
    return a.axioms_ == b.axioms_ && same_universe(a.universe_, b.universe_);
  }

 private:
  UniversePtr universe_;
  std::vector<Sequent> axioms_;
};

bool is_model(const KSet& X, const Theory& T);

// Exhaustive model search over all 2^|A| subsets, in lexicographic subset
// order (dictionary order on ascending index sequences, ∅ first), truncated
// at `limit`. The search is exponential in |A|; the universe cap keeps it
// within reach.
std::vector<KSet> find_models(const Theory& T,
                              std::optional<std::size_t> limit = std::nullopt);

}  // namespace geosat
