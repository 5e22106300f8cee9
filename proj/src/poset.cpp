#include "twinpoly/poset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <string>

namespace twinpoly {

namespace {

void check_size(int d) {
  if (d < 0) throw DomainError("element count must be nonnegative");
  if (d > kMaxPosetSize)
    throw CapacityError("poset has " + std::to_string(d) +
                        " elements; supported bound is " +
                        std::to_string(kMaxPosetSize));
}

}  // namespace

Poset::Poset(int d) : n_(d) {
  check_size(d);
  labels_.resize(n_);
  for (int i = 0; i < n_; ++i) labels_[i] = i + 1;
  up_.assign(n_, 0);
  down_.assign(n_, 0);
}

Poset Poset::chain(int d) {
  Poset p(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) p.up_[i] |= 1u << j;
  p.rebuild_down();
  return p;
}

Poset Poset::from_relations(int d,
                            const std::vector<std::pair<int, int>>& rels) {
  Poset p(d);
  for (auto [a, b] : rels) {
    if (a < 1 || a > d || b < 1 || b > d)
      throw DomainError("relation label out of range 1.." + std::to_string(d));
    const int i = a - 1, j = b - 1;
    if (i == j || p.less_index(j, i))
      throw ParseError("relation " + std::to_string(a) + " " +
                       std::to_string(b) +
                       " makes the order cyclic: not a partial order");
    if (p.less_index(i, j)) continue;
    // close: everything at-or-below i goes under everything at-or-above j
    const std::uint32_t lo = p.down_[i] | (1u << i);
    const std::uint32_t hi = p.up_[j] | (1u << j);
    for (int a2 = 0; a2 < d; ++a2) {
      if (!(lo >> a2 & 1u)) continue;
      p.up_[a2] |= hi;
    }
    p.rebuild_down();
  }
  return p;
}

bool Poset::is_strict_order(int d, const std::vector<std::uint32_t>& up) {
  for (int i = 0; i < d; ++i) {
    if (up[i] >> i & 1u) return false;  // irreflexive
    for (int j = 0; j < d; ++j) {
      if (!(up[i] >> j & 1u)) continue;
      if (up[j] >> i & 1u) return false;       // antisymmetric
      if ((up[j] & ~up[i]) != 0) return false; // transitive
    }
  }
  return true;
}

Poset Poset::from_strict_order(int d, const std::vector<std::uint32_t>& up) {
  if (!is_strict_order(d, up)) throw DomainError("not a strict partial order");
  Poset p(d);
  p.up_ = up;
  p.rebuild_down();
  return p;
}

void Poset::rebuild_down() {
  down_.assign(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (up_[i] >> j & 1u) down_[j] |= 1u << i;
}

bool Poset::has_default_labels() const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] != i + 1) return false;
  return true;
}

int Poset::index_of_label(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw DomainError("label " + std::to_string(label) + " not in poset");
  return static_cast<int>(it - labels_.begin());
}

bool Poset::less(int label_a, int label_b) const {
  return less_index(index_of_label(label_a), index_of_label(label_b));
}

std::uint32_t Poset::to_label_mask(std::uint32_t internal_mask) const {
  std::uint32_t out = 0;
  for (int i = 0; i < n_; ++i)
    if (internal_mask >> i & 1u) out |= 1u << (labels_[i] - 1);
  return out;
}

int Poset::relation_size() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) c += std::popcount(up_[i]);
  return c;
}

bool Poset::operator==(const Poset& other) const {
  return n_ == other.n_ && labels_ == other.labels_ && up_ == other.up_;
}

void SignedPoset::validate() const {
  if (!poset.has_default_labels())
    throw DomainError("signed poset must live on labels 1..d");
  const int d = poset.size();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      const bool pi = plus_mask >> i & 1u, pj = plus_mask >> j & 1u;
      if (pi && !pj && !poset.less_index(i, j))
        throw DomainError("ordinal-sum shape violated: plus element " +
                          std::to_string(i + 1) + " not below minus element " +
                          std::to_string(j + 1));
    }
}

// --- subset ordering ----------------------------------------------------

bool subset_lex_less(std::uint32_t a, std::uint32_t b) {
  // lexicographic on the ascending label sequences; a proper prefix is
  // smaller, so {} comes first
  while (a != 0 && b != 0) {
    const std::uint32_t la = a & -a, lb = b & -b;
    if (la != lb) return la < lb;
    a ^= la;
    b ^= lb;
  }
  return a == 0 && b != 0;
}

std::vector<int> subset_labels(std::uint32_t mask) {
  std::vector<int> out;
  for (int l = 0; mask != 0; ++l, mask >>= 1)
    if (mask & 1u) out.push_back(l + 1);
  return out;
}

std::string subset_to_string(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int label : subset_labels(mask)) {
    if (!first) s += ",";
    s += std::to_string(label);
    first = false;
  }
  return s + "}";
}

bool SubsetList::contains(std::uint32_t mask) const {
  return std::binary_search(members.begin(), members.end(), mask,
                            subset_lex_less);
}

void SubsetList::sort_and_dedup() {
  std::sort(members.begin(), members.end(), subset_lex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

// --- file format ----------------------------------------------------------

namespace {

bool parse_int(const std::string& tok, int& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int d = -1;
  std::vector<std::pair<int, int>> rels;
  std::vector<int> rel_lines;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;          // blank
    if (tok[0] == '#') continue;         // comment
    auto fail = [&](const std::string& msg) {
      return ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (tok == "d") {
      if (d >= 0) throw fail("duplicate d declaration");
      std::string val, extra;
      if (!(ls >> val) || (ls >> extra)) throw fail("expected 'd <n>'");
      if (!parse_int(val, d) || d <= 0) throw fail("d must be a positive integer");
      if (d > kMaxPosetSize)
        throw CapacityError("line " + std::to_string(lineno) + ": d = " + val +
                            " exceeds the supported bound " +
                            std::to_string(kMaxPosetSize));
    } else if (tok == "rel") {
      if (d < 0) throw fail("rel before d declaration");
      std::string sa, sb, extra;
      if (!(ls >> sa >> sb) || (ls >> extra)) throw fail("expected 'rel <i> <j>'");
      int a = 0, b = 0;
      if (!parse_int(sa, a) || !parse_int(sb, b))
        throw fail("expected integer labels");
      if (a < 1 || a > d || b < 1 || b > d)
        throw fail("label out of range 1.." + std::to_string(d));
      rels.emplace_back(a, b);
      rel_lines.push_back(lineno);
    } else {
      throw fail("unknown directive '" + tok + "'");
    }
  }
  if (d < 0) throw ParseError("missing d declaration");
  // add relations one at a time so cycle errors can name their line
  Poset p(d);
  for (std::size_t k = 0; k < rels.size(); ++k) {
    try {
      p = Poset::from_relations(
          d, std::vector<std::pair<int, int>>(rels.begin(),
                                              rels.begin() + k + 1));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(rel_lines[k]) + ": " +
                       e.what());
    }
  }
  return p;
}

std::string poset_to_string(const Poset& p) {
  std::string out = "d " + std::to_string(p.size()) + "\n";
  const auto& labels = p.labels();
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.less_index(i, j))
        out += "rel " + std::to_string(labels[i]) + " " +
               std::to_string(labels[j]) + "\n";
  return out;
}

// --- enumerations -----------------------------------------------------------

SubsetList ideals(const Poset& p) {
  const int n = p.size();
  SubsetList out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if ((m >> i & 1u) && (p.down_mask(i) & ~m) != 0) ok = false;
    if (ok) out.members.push_back(p.to_label_mask(m));
  }
  out.sort_and_dedup();
  return out;
}

SubsetList antichains(const Poset& p) {
  const int n = p.size();
  SubsetList out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if ((m >> i & 1u) && ((p.up_mask(i) | p.down_mask(i)) & m) != 0)
        ok = false;
    if (ok) out.members.push_back(p.to_label_mask(m));
  }
  out.sort_and_dedup();
  return out;
}

SubsetList maximal_chains(const Poset& p) {
  const int n = p.size();
  SubsetList out;
  if (n == 0) return out;
  // covers[i]: j covering i (i < j with nothing strictly between)
  std::vector<std::uint32_t> covers(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less_index(i, j) && (p.up_mask(i) & p.down_mask(j)) == 0)
        covers[i] |= 1u << j;
  // saturated chains from a minimal to a maximal element
  std::vector<std::pair<int, std::uint32_t>> stack;  // (top element, chain mask)
  for (int i = 0; i < n; ++i)
    if (p.down_mask(i) == 0) stack.emplace_back(i, 1u << i);
  while (!stack.empty()) {
    auto [top, chain] = stack.back();
    stack.pop_back();
    if (p.up_mask(top) == 0) {
      out.members.push_back(p.to_label_mask(chain));
      continue;
    }
    for (std::uint32_t c = covers[top]; c != 0; c &= c - 1) {
      const int j = std::countr_zero(c);
      stack.emplace_back(j, chain | (1u << j));
    }
  }
  out.sort_and_dedup();
  return out;
}

Int count_linear_extensions(const Poset& p) {
  const int n = p.size();
  if (n > kMaxPosetSize)
    throw CapacityError("linear extension DP bound exceeded");
  if (n == 0) return 1;
  std::vector<Int> count(std::size_t(1) << n, Int(0));
  count[0] = 1;
  const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
  for (std::uint32_t m = 1; m <= full; ++m) {
    // only downward-closed masks are reachable
    bool ideal = true;
    for (std::uint32_t t = m; t != 0 && ideal; t &= t - 1)
      if ((p.down_mask(std::countr_zero(t)) & ~m) != 0) ideal = false;
    if (!ideal) continue;
    Int acc = 0;
    for (std::uint32_t t = m; t != 0; t &= t - 1) {
      const int i = std::countr_zero(t);
      if ((p.up_mask(i) & m) == 0) acc += count[m ^ (1u << i)];
    }
    count[m] = std::move(acc);
  }
  return count[full];
}

Poset induced_subposet(const Poset& p, std::uint32_t w) {
  if ((w & ~p.label_mask()) != 0)
    throw DomainError("subset contains labels outside the poset");
  std::vector<int> keep;  // internal indices, ascending
  const auto& labels = p.labels();
  for (int i = 0; i < p.size(); ++i)
    if (w >> (labels[i] - 1) & 1u) keep.push_back(i);
  const int m = static_cast<int>(keep.size());
  Poset q(m);
  q.labels_.resize(m);
  q.up_.assign(m, 0);
  for (int a = 0; a < m; ++a) {
    q.labels_[a] = labels[keep[a]];
    for (int b = 0; b < m; ++b)
      if (p.less_index(keep[a], keep[b])) q.up_[a] |= 1u << b;
  }
  q.rebuild_down();
  return q;
}

SignedPoset delta(const Poset& p, const Poset& q, std::uint32_t w) {
  if (p.size() != q.size())
    throw DomainError("delta requires posets of equal size");
  if (!p.has_default_labels() || !q.has_default_labels())
    throw DomainError("delta requires posets on labels 1..d");
  const int d = p.size();
  const std::uint32_t full = d == 0 ? 0 : (1u << d) - 1;
  if ((w & ~full) != 0) throw DomainError("W contains labels outside 1..d");
  std::vector<std::uint32_t> up(d, 0);
  for (int i = 0; i < d; ++i) {
    const bool pi = w >> i & 1u;
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      const bool pj = w >> j & 1u;
      bool below;
      if (pi && pj)
        below = p.less_index(i, j);
      else if (!pi && !pj)
        below = q.less_index(i, j);
      else
        below = pi;  // every W element below every complement element
      if (below) up[i] |= 1u << j;
    }
  }
  return SignedPoset{Poset::from_strict_order(d, up), w};
}

Int count_linear_extensions_signed(const SignedPoset& sp) {
  return count_linear_extensions(sp.poset);
}

bool has_common_linear_extension(const Poset& p, const Poset& q) {
  if (p.size() != q.size())
    throw DomainError("posets must have equal size");
  const int d = p.size();
  std::vector<std::uint32_t> up(d);
  for (int i = 0; i < d; ++i) up[i] = p.up_mask(i) | q.up_mask(i);
  // transitive closure of the union, then look for a cycle
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      if (up[i] >> k & 1u) up[i] |= up[k];
  for (int i = 0; i < d; ++i)
    if (up[i] >> i & 1u) return false;
  return true;
}

std::vector<Poset> enumerate_posets(int d) {
  if (d < 1) throw DomainError("element count must be positive");
  if (d > kMaxEnumerationSize)
    throw CapacityError("labeled poset enumeration is bounded at d = " +
                        std::to_string(kMaxEnumerationSize));
  // ordered pairs (i,j), i != j, in a fixed order
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<Poset> out;
  const std::uint64_t limit = std::uint64_t(1) << pairs.size();
  std::vector<std::uint32_t> up(d);
  for (std::uint64_t code = 0; code < limit; ++code) {
    std::fill(up.begin(), up.end(), 0u);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (code >> b & 1u) up[pairs[b].first] |= 1u << pairs[b].second;
    if (Poset::is_strict_order(d, up))
      out.push_back(Poset::from_strict_order(d, up));
  }
  return out;
}

Poset relabeled(const Poset& p, const std::vector<int>& perm) {
  if (!p.has_default_labels())
    throw DomainError("relabeling requires labels 1..d");
  const int d = p.size();
  if (static_cast<int>(perm.size()) != d)
    throw DomainError("permutation size mismatch");
  std::vector<bool> seen(d, false);
  for (int v : perm) {
    if (v < 1 || v > d || seen[v - 1])
      throw DomainError("not a permutation of 1..d");
    seen[v - 1] = true;
  }
  std::vector<std::uint32_t> up(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (p.less_index(i, j))
        up[perm[i] - 1] |= 1u << (perm[j] - 1);
  return Poset::from_strict_order(d, up);
}

}  // namespace twinpoly
