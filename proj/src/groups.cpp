#include "hopflab/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hopflab {

namespace {

GroupTable from_mul(int n, const std::vector<std::string>& labels,
                    const std::function<int(int, int)>& mul);

void fill_inverses(GroupTable& g) {
  g.inv.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      if (g.table[a][b] == g.identity) g.inv[a] = b;
    }
  }
}

GroupTable from_mul(int n, const std::vector<std::string>& labels,
                    const std::function<int(int, int)>& mul) {
  GroupTable g;
  g.order = n;
  g.labels = labels;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table[a][b] = mul(a, b);
  }
  g.identity = 0;
  fill_inverses(g);
  return g;
}

}  // namespace

int GroupTable::element_order(int a) const {
  int k = 1, x = a;
  while (x != identity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int GroupTable::index_of(const std::string& label) const {
  for (int i = 0; i < order; ++i) {
    if (labels[i] == label) return i;
  }
  throw std::out_of_range("no group element labelled " + label);
}

int GroupTable::find_perm(const std::vector<int>& p) const {
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) {
    if (perms[i] == p) return i;
  }
  return -1;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (table[a][b] != table[b][a]) return false;
    }
  }
  return true;
}

void GroupTable::validate() const {
  auto bad = [&](const std::string& w) { throw std::invalid_argument("invalid group table: " + w); };
  if (static_cast<int>(table.size()) != order) bad("row count");
  for (int a = 0; a < order; ++a) {
    if (static_cast<int>(table[a].size()) != order) bad("column count");
    if (table[identity][a] != a || table[a][identity] != a) bad("identity at " + labels[a]);
    if (inv[a] < 0 || table[a][inv[a]] != identity || table[inv[a]][a] != identity) {
      bad("inverse of " + labels[a]);
    }
    for (int b = 0; b < order; ++b) {
      if (table[a][b] < 0 || table[a][b] >= order) bad("entry out of range");
      for (int c = 0; c < order; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          bad("associativity at (" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")");
        }
      }
    }
  }
}

GroupTable cyclic_group(int n) {
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) labels.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
  return from_mul(n, labels, [n](int a, int b) { return (a + b) % n; });
}

std::string cycle_label(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

GroupTable symmetric_group(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_label(q));
  GroupTable g = from_mul(static_cast<int>(perms.size()), labels, [&](int a, int b) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
    return index.at(c);
  });
  g.perms = perms;
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  std::vector<std::string> labels;
  for (int i = 0; i < a.order; ++i) {
    for (int j = 0; j < b.order; ++j) labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
  }
  const int nb = b.order;
  GroupTable g = from_mul(a.order * nb, labels, [&](int x, int y) {
    return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  });
  g.identity = a.identity * nb + b.identity;
  fill_inverses(g);
  return g;
}

GroupTable klein_four() {
  GroupTable g = direct_product(cyclic_group(2), cyclic_group(2));
  g.labels = {"1", "b", "a", "ab"};
  return g;
}

GroupTable dihedral_group(int n) {
  // r^k s^e stored as e * n + k; s r s = r^{-1}.
  std::vector<std::string> labels;
  for (int e = 0; e < 2; ++e) {
    for (int k = 0; k < n; ++k) {
      std::string l = k == 0 ? "" : (k == 1 ? "r" : "r^" + std::to_string(k));
      if (e) l += "s";
      labels.push_back(l.empty() ? "1" : l);
    }
  }
  return from_mul(2 * n, labels, [n](int x, int y) {
    int e1 = x / n, k1 = x % n, e2 = y / n, k2 = y % n;
    int k = e1 ? ((k1 - k2) % n + n) % n : (k1 + k2) % n;
    return ((e1 + e2) % 2) * n + k;
  });
}

GroupTable generated_subgroup(const GroupTable& g, const std::vector<int>& gens,
                              std::vector<int>* embedding) {
  std::vector<int> elems{g.identity};
  std::vector<bool> in(g.order, false);
  in[g.identity] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      int x = g.mul(elems[i], s);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  }
  std::map<int, int> pos;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) pos[elems[i]] = i;
  std::vector<std::string> labels;
  for (int x : elems) labels.push_back(g.labels[x]);
  GroupTable h = from_mul(static_cast<int>(elems.size()), labels,
                          [&](int a, int b) { return pos.at(g.mul(elems[a], elems[b])); });
  if (!g.perms.empty()) {
    for (int x : elems) h.perms.push_back(g.perms[x]);
  }
  if (embedding) *embedding = elems;
  return h;
}

GroupTable group_by_name(const std::string& name) {
  if (name == "S3") return symmetric_group(3);
  if (name == "S4") return symmetric_group(4);
  if (name == "C2xC2" || name == "K4") return klein_four();
  if (name == "D4") return dihedral_group(4);
  if (name.size() > 1 && name[0] == 'C') {
    int n = std::stoi(name.substr(1));
    if (n >= 1) return cyclic_group(n);
  }
  throw std::invalid_argument("unknown group " + name);
}

int sign(const GroupTable& g, int a) {
  if (g.perms.empty()) throw std::invalid_argument("sign requires a permutation group");
  const auto& p = g.perms[a];
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) s = -s;
    }
  }
  return s;
}

std::vector<int> transpositions(const GroupTable& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order; ++a) {
    if (a == g.identity || g.perms.empty()) continue;
    int moved = 0;
    for (std::size_t i = 0; i < g.perms[a].size(); ++i) moved += g.perms[a][i] != static_cast<int>(i);
    if (moved == 2) out.push_back(a);
  }
  return out;
}

}  // namespace hopflab
