#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gradalg/error.hpp"

namespace gradalg {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/* A finite group given by its full multiplication table. Elements are the
   indices 0..order-1. The table is validated at construction: Latin square,
   two-sided identity, associativity. Associativity is checked exhaustively;
   the check is mandatory up to order 64 and may be skipped above that by
   explicit opt-out. */
class Group {
 public:
  static GroupPtr make(std::vector<std::vector<int>> table,
                       std::vector<std::string> labels = {},
                       bool skip_assoc_check_above_64 = false);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  /* g h g^-1 */
  int conj(int g, int h) const { return table_[table_[g][h]][inverse_[g]]; }
  int element_order(int a) const;

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of_label(const std::string& s) const;  // -1 when absent

  bool same_table(const Group& other) const { return table_ == other.table_; }

 private:
  Group() = default;
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

/* A subgroup is a sorted element list plus the ambient group. The sorted
   list doubles as the embedding: abstract index k corresponds to ambient
   element elements[k]. */
class Subgroup {
 public:
  Subgroup() = default;
  /* Validates closure under product and inverse. */
  static Subgroup make(GroupPtr parent, std::vector<int> elements);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int g) const { return pos_[g] >= 0; }
  /* Abstract index of ambient element g, -1 when outside. */
  int position_of(int g) const { return pos_[g]; }
  int element(int k) const { return elements_[k]; }

  /* The subgroup re-indexed as a standalone group on 0..size-1. */
  GroupPtr as_group() const;

  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;
  std::vector<int> pos_;  // ambient index -> abstract index or -1
};

/* Smallest subgroup containing the seed elements (BFS closure). */
Subgroup subgroup_closure(const GroupPtr& G, const std::vector<int>& seed);

/* { g in G : g H g^-1 = H } */
Subgroup normalizer(const GroupPtr& G, const Subgroup& H);

/* g H g^-1, elements sorted. */
Subgroup conjugate_subgroup(const Subgroup& H, int g);

/* Partition of G into right cosets Hg. Cosets are sorted internally and
   listed in order of their minimal element, so coset 0 is H itself. */
struct Cosets {
  std::vector<std::vector<int>> cosets;
  std::vector<int> coset_of;  // ambient element -> coset index
};
Cosets right_cosets(const GroupPtr& G, const Subgroup& H);

/* All subgroups, found by closing every subset seed of bounded size; exact
   for the small groups used here. */
std::vector<Subgroup> all_subgroups(const GroupPtr& G);

/* Stock tables for tests and the catalog. */
GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr product_of_cyclics(int m, int n);  // C_m x C_n
GroupPtr symmetric_3();
GroupPtr dihedral_4();   // order 8: e,r,r2,r3,s,rs,r2s,r3s
GroupPtr quaternion_8();

}  // namespace gradalg
