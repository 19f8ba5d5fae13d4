#pragma once

#include <string>
#include <vector>

namespace hopflab {

/// Finite group given by its multiplication table.
struct GroupTable {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = ab
  std::vector<int> inv;
  int identity = 0;
  std::vector<std::string> labels;
  /// For permutation groups: perms[g][i] is the image of i (0-based);
  /// empty otherwise. Composition is (gh)(i) = g(h(i)).
  std::vector<std::vector<int>> perms;

  int mul(int a, int b) const { return table[a][b]; }
  int inverse(int a) const { return inv[a]; }
  /// b^{-1} a b
  int conj_by(int a, int b) const { return mul(inv[b], mul(a, b)); }
  int element_order(int a) const;
  int index_of(const std::string& label) const;
  /// Element with the given permutation, -1 when absent.
  int find_perm(const std::vector<int>& p) const;
  bool is_abelian() const;
  /// Throws std::invalid_argument with a witness if the table is not a group.
  void validate() const;
};

GroupTable cyclic_group(int n);
GroupTable symmetric_group(int n);
GroupTable klein_four();
/// Dihedral group of order 2n.
GroupTable dihedral_group(int n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
/// Subgroup generated by the given elements, with labels inherited.
/// `embedding` receives the ambient index of every subgroup element.
GroupTable generated_subgroup(const GroupTable& g, const std::vector<int>& gens,
                              std::vector<int>* embedding = nullptr);
/// Built-in tables by name: S3, S4, C<n>, C2xC2, D4.
GroupTable group_by_name(const std::string& name);

/// +1 or -1 for permutation groups.
int sign(const GroupTable& g, int a);
/// Elements that are transpositions, in index order.
std::vector<int> transpositions(const GroupTable& g);
std::string cycle_label(const std::vector<int>& perm);

}  // namespace hopflab
