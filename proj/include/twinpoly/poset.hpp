// Finite posets on labels 1..d: parsing, validation, and the subset
// enumerations (ideals, antichains, maximal chains, linear extensions)
// that the polytope constructions consume.
//
// Relations are stored as full transitive-closure bitmask rows, one
// uint32_t per element, so comparability queries are O(1).  Everything
// here is desk-scale by contract: d <= 20 throughout (the linear
// extension DP walks all 2^d subset masks).

#pragma once

#include "twinpoly/arith.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace twinpoly {

inline constexpr int kMaxPosetSize = 20;       // 2^d DP table bound
inline constexpr int kMaxEnumerationSize = 4;  // labeled-poset enumeration bound

class Poset {
 public:
  // d-element antichain (no relations).
  explicit Poset(int d = 0);

  static Poset antichain(int d) { return Poset(d); }
  static Poset chain(int d);

  // Builds the transitive closure of the given strict relations
  // p_a < p_b (1-based labels).  Throws ParseError on a cycle.
  static Poset from_relations(int d,
                              const std::vector<std::pair<int, int>>& rels);

  // Validates a candidate strict-order matrix (row i = mask of j with
  // element i below element j, internal 0-based indices).
  static bool is_strict_order(int d, const std::vector<std::uint32_t>& up);
  static Poset from_strict_order(int d, const std::vector<std::uint32_t>& up);

  int size() const { return n_; }
  const std::vector<int>& labels() const { return labels_; }
  std::uint32_t label_mask() const {
    std::uint32_t m = 0;
    for (int label : labels_) m |= 1u << (label - 1);
    return m;
  }
  bool has_default_labels() const;

  // Strict comparison by external label; both labels must be present.
  bool less(int label_a, int label_b) const;

  // Internal-index accessors (0-based, row order matches labels()).
  bool less_index(int i, int j) const { return up_[i] >> j & 1u; }
  std::uint32_t up_mask(int i) const { return up_[i]; }
  std::uint32_t down_mask(int i) const { return down_[i]; }

  int index_of_label(int label) const;
  std::uint32_t to_label_mask(std::uint32_t internal_mask) const;

  // Number of ordered pairs in the strict relation (after closure).
  int relation_size() const;

  bool operator==(const Poset& other) const;

 private:
  int n_ = 0;
  std::vector<int> labels_;          // strictly increasing external labels
  std::vector<std::uint32_t> up_;    // up_[i]: j with element i < element j
  std::vector<std::uint32_t> down_;  // down_[i]: j with element j < element i

  void rebuild_down();

  friend Poset induced_subposet(const Poset& p, std::uint32_t w);
};

// A poset together with a +/- sign per label; the relation is an ordinal
// sum with every plus element below every minus element.
struct SignedPoset {
  Poset poset;
  std::uint32_t plus_mask = 0;  // labels with sign +1

  int sign(int label) const {
    return (plus_mask >> (label - 1) & 1u) ? +1 : -1;
  }
  // Checks the ordinal-sum shape invariant.
  void validate() const;
};

// Family of label subsets in lexicographic order of their sorted label
// sequences ({} < {1} < {1,2} < {1,3} < {2} < ...).
struct SubsetList {
  std::vector<std::uint32_t> members;  // label masks (bit l-1 <-> label l)

  std::size_t size() const { return members.size(); }
  bool contains(std::uint32_t mask) const;
  void sort_and_dedup();
};

bool subset_lex_less(std::uint32_t a, std::uint32_t b);
std::vector<int> subset_labels(std::uint32_t mask);
std::string subset_to_string(std::uint32_t mask);

// --- poset file format -------------------------------------------------
//
// UTF-8, line based: '#' comment lines, one "d <n>" line, then zero or
// more "rel <i> <j>" lines declaring p_i < p_j.  The stored relation is
// the transitive closure; redundant declarations are fine.
Poset parse_poset(const std::string& text);
std::string poset_to_string(const Poset& p);

// --- enumerations ------------------------------------------------------

// All downward-closed subsets, including {} and the full set.
SubsetList ideals(const Poset& p);

// All pairwise-incomparable subsets, including {} and all singletons.
SubsetList antichains(const Poset& p);

// All inclusion-maximal totally ordered subsets.
SubsetList maximal_chains(const Poset& p);

// Exact linear extension count e(P), via DP over the ideal lattice.
Int count_linear_extensions(const Poset& p);

// Subposet induced on the labels of w; original labels are retained.
Poset induced_subposet(const Poset& p, std::uint32_t w);

// The ordinal sum P_W (+) Q_complement(W) on labels 1..d, signed +1 on W.
SignedPoset delta(const Poset& p, const Poset& q, std::uint32_t w);

Int count_linear_extensions_signed(const SignedPoset& sp);

// True iff some permutation of 1..d extends both relations, i.e. the
// union digraph is acyclic.
bool has_common_linear_extension(const Poset& p, const Poset& q);

// All labeled posets on 1..d, deterministically ordered.  d <= 4.
std::vector<Poset> enumerate_posets(int d);

// Image of p under the label permutation perm (perm[old-1] = new label).
Poset relabeled(const Poset& p, const std::vector<int>& perm);

}  // namespace twinpoly
