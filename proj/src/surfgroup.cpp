#include "fibcert/surfgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fib {

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word word_power(const Word& w, int n) {
  Word base = n >= 0 ? w : word_inverse(w);
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out = word_concat(out, base);
  return out;
}

SurfacePresentation SurfacePresentation::closed_surface(int genus) {
  if (genus < 0) throw std::invalid_argument("negative genus");
  return SurfacePresentation{genus, 0};
}

SurfacePresentation SurfacePresentation::punctured_surface(int genus,
                                                           int punctures) {
  if (genus < 0 || punctures < 1) {
    throw std::invalid_argument("punctured surface needs punctures >= 1");
  }
  return SurfacePresentation{genus, punctures};
}

std::vector<std::string> SurfacePresentation::generator_labels() const {
  std::vector<std::string> labels;
  for (int i = 1; i <= genus; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i));
  }
  for (int j = 1; j <= punctures; ++j) {
    labels.push_back("c" + std::to_string(j));
  }
  return labels;
}

int SurfacePresentation::generator_index(const std::string& label) const {
  if (label.size() < 2) throw std::invalid_argument("bad generator: " + label);
  char kind = label[0];
  int num = 0;
  try {
    num = std::stoi(label.substr(1));
  } catch (...) {
    throw std::invalid_argument("bad generator: " + label);
  }
  if (kind == 'a' && num >= 1 && num <= genus) return 2 * (num - 1) + 1;
  if (kind == 'b' && num >= 1 && num <= genus) return 2 * (num - 1) + 2;
  if (kind == 'c' && num >= 1 && num <= punctures) return 2 * genus + num;
  throw std::invalid_argument("unknown generator label: " + label);
}

Word SurfacePresentation::boundary_word() const {
  Word w;
  for (int i = 1; i <= genus; ++i) {
    int a = 2 * (i - 1) + 1, b = a + 1;
    w.push_back(a);
    w.push_back(b);
    w.push_back(-a);
    w.push_back(-b);
  }
  for (int j = 1; j <= punctures; ++j) w.push_back(2 * genus + j);
  return w;
}

std::vector<Word> SurfacePresentation::relators() const {
  if (punctures > 0) return {};  // free group
  if (genus == 0) return {};    // trivial group handled as free of rank 0
  return {boundary_word()};
}

int SurfacePresentation::free_rank() const {
  if (punctures > 0) return 2 * genus + punctures - 1;
  return 2 * genus;  // ambient free rank of the one-relator presentation
}

Word parse_word(const SurfacePresentation& pres, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool inverse = std::isupper(static_cast<unsigned char>(tok[0]));
    std::string label = tok;
    label[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(tok[0])));
    int idx = pres.generator_index(label);
    w.push_back(inverse ? -idx : idx);
  }
  return w;
}

std::string word_to_string(const SurfacePresentation& pres, const Word& w) {
  auto labels = pres.generator_labels();
  std::string out;
  for (int letter : w) {
    int idx = std::abs(letter) - 1;
    if (idx < 0 || idx >= static_cast<int>(labels.size())) {
      throw std::invalid_argument("letter out of range");
    }
    std::string lab = labels[idx];
    if (letter < 0) {
      lab[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(lab[0])));
    }
    if (!out.empty()) out += ' ';
    out += lab;
  }
  return out;
}

int euler_characteristic(int genus, int punctures) {
  return 2 - 2 * genus - punctures;
}

int riemann_hurwitz_genus(int base_genus, int degree,
                          const std::vector<int>& branch_multiplicities) {
  if (degree < 1) throw std::invalid_argument("cover degree must be >= 1");
  long chi = static_cast<long>(degree) * (2 - 2 * base_genus);
  for (int m : branch_multiplicities) {
    if (m < 2 || degree % m != 0) {
      throw std::invalid_argument(
          "malformed cover: branch multiplicity must divide the degree");
    }
    chi -= (degree / m) * (m - 1);
  }
  if (chi % 2 != 0 || chi > 2) {
    throw std::invalid_argument("malformed cover: odd Euler characteristic");
  }
  return static_cast<int>((2 - chi) / 2);
}

FiniteGroup FiniteGroup::elementary_abelian_2(int rank) {
  if (rank < 0 || rank > 20) {
    throw std::invalid_argument("elementary abelian rank out of range");
  }
  FiniteGroup g;
  g.order_ = 1u << rank;
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<uint32_t>> table) {
  FiniteGroup g;
  g.order_ = static_cast<uint32_t>(table.size());
  if (g.order_ == 0) throw std::invalid_argument("empty group table");
  for (const auto& row : table) {
    if (row.size() != g.order_) throw std::invalid_argument("ragged group table");
    for (uint32_t v : row) {
      if (v >= g.order_) throw std::invalid_argument("group table entry out of range");
    }
  }
  for (uint32_t x = 0; x < g.order_; ++x) {
    if (table[0][x] != x || table[x][0] != x) {
      throw std::invalid_argument("group table: element 0 must be the identity");
    }
  }
  g.table_ = std::move(table);
  // every element needs an inverse; mult associativity is trusted input
  for (uint32_t x = 0; x < g.order_; ++x) {
    bool found = false;
    for (uint32_t y = 0; y < g.order_; ++y) {
      if (g.table_[x][y] == 0) {
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("group table: missing inverse");
  }
  return g;
}

uint32_t FiniteGroup::mult(uint32_t x, uint32_t y) const {
  if (x >= order_ || y >= order_) throw std::invalid_argument("element out of range");
  if (table_.empty()) return x ^ y;
  return table_[x][y];
}

uint32_t FiniteGroup::inverse(uint32_t x) const {
  if (x >= order_) throw std::invalid_argument("element out of range");
  if (table_.empty()) return x;
  for (uint32_t y = 0; y < order_; ++y) {
    if (table_[x][y] == 0) return y;
  }
  throw std::logic_error("group table without inverse");
}

uint32_t FiniteQuotient::evaluate(const Word& w) const {
  uint32_t acc = 0;
  for (int letter : w) {
    int idx = std::abs(letter) - 1;
    if (idx < 0 || idx >= static_cast<int>(images.size())) {
      throw std::invalid_argument("unknown generator in word");
    }
    uint32_t g = images[idx];
    if (letter < 0) g = group.inverse(g);
    acc = group.mult(acc, g);
  }
  return acc;
}

std::vector<uint32_t> FiniteQuotient::image_subgroup() const {
  std::set<uint32_t> seen{0};
  std::queue<uint32_t> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    uint32_t x = bfs.front();
    bfs.pop();
    for (uint32_t img : images) {
      for (uint32_t y : {group.mult(x, img), group.mult(x, group.inverse(img))}) {
        if (seen.insert(y).second) bfs.push(y);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool FiniteQuotient::surjective() const {
  return image_subgroup().size() == group.order();
}

FiniteQuotient make_quotient(const SurfacePresentation& pres, FiniteGroup g,
                             std::vector<uint32_t> images) {
  if (static_cast<int>(images.size()) != pres.generator_count()) {
    throw std::invalid_argument("one image per generator required");
  }
  FiniteQuotient q{std::move(g), std::move(images)};
  for (const Word& r : pres.relators()) {
    if (q.evaluate(r) != 0) {
      throw std::invalid_argument("generator images do not satisfy the relator");
    }
  }
  return q;
}

FiniteQuotient mod2_homology_cover(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  auto pres = SurfacePresentation::closed_surface(genus);
  std::vector<uint32_t> images;
  for (int k = 0; k < 2 * genus; ++k) images.push_back(1u << k);
  return make_quotient(pres, FiniteGroup::elementary_abelian_2(2 * genus),
                       std::move(images));
}

bool kernel_membership(const Word& w, const FiniteQuotient& q) {
  return q.evaluate(w) == 0;
}

CosetAction kernel_cosets(const FiniteQuotient& q) {
  if (!q.surjective()) {
    throw std::invalid_argument("quotient map is not surjective");
  }
  CosetAction ca;
  ca.coset_count = static_cast<int>(q.group.order());
  ca.action.resize(q.images.size());
  for (size_t k = 0; k < q.images.size(); ++k) {
    ca.action[k].resize(ca.coset_count);
    for (int c = 0; c < ca.coset_count; ++c) {
      ca.action[k][c] =
          static_cast<int>(q.group.mult(static_cast<uint32_t>(c), q.images[k]));
    }
  }
  return ca;
}

CosetAction preimage_cosets(const FiniteQuotient& q,
                            const std::vector<uint32_t>& subgroup) {
  std::set<uint32_t> sub(subgroup.begin(), subgroup.end());
  if (sub.find(0) == sub.end()) {
    throw std::invalid_argument("subgroup must contain the identity");
  }
  // canonical label of the right coset (subgroup * x) = minimal element
  auto coset_label = [&](uint32_t x) {
    uint32_t best = q.group.mult(*sub.begin(), x);
    for (uint32_t s : sub) best = std::min(best, q.group.mult(s, x));
    return best;
  };
  std::vector<uint32_t> labels;  // label -> coset index, discovered by BFS
  std::vector<int> index_of(q.group.order(), -1);
  std::queue<uint32_t> bfs;
  uint32_t root = coset_label(0);
  labels.push_back(root);
  index_of[root] = 0;
  bfs.push(root);
  std::vector<std::vector<int>> action(q.images.size());
  while (!bfs.empty()) {
    uint32_t x = bfs.front();
    bfs.pop();
    for (size_t k = 0; k < q.images.size(); ++k) {
      for (uint32_t img : {q.images[k], q.group.inverse(q.images[k])}) {
        uint32_t y = coset_label(q.group.mult(x, img));
        if (index_of[y] < 0) {
          index_of[y] = static_cast<int>(labels.size());
          labels.push_back(y);
          bfs.push(y);
        }
      }
    }
  }
  CosetAction ca;
  ca.coset_count = static_cast<int>(labels.size());
  for (size_t k = 0; k < q.images.size(); ++k) {
    action[k].resize(ca.coset_count);
    for (int c = 0; c < ca.coset_count; ++c) {
      action[k][c] = index_of[coset_label(q.group.mult(labels[c], q.images[k]))];
    }
  }
  ca.action = std::move(action);
  return ca;
}

namespace {

// inverse permutation per generator: where does coset c come from under x?
std::vector<std::vector<int>> invert_action(const CosetAction& ca) {
  std::vector<std::vector<int>> inv(ca.action.size());
  for (size_t k = 0; k < ca.action.size(); ++k) {
    inv[k].assign(ca.coset_count, -1);
    for (int c = 0; c < ca.coset_count; ++c) {
      int d = ca.action[k][c];
      if (d < 0 || d >= ca.coset_count || inv[k][d] != -1) {
        throw std::invalid_argument("coset action is not a permutation");
      }
      inv[k][d] = c;
    }
  }
  return inv;
}

}  // namespace

SubgroupPresentation reidemeister_schreier(int ambient_rank,
                                           const std::vector<Word>& relators,
                                           const CosetAction& ca) {
  if (static_cast<int>(ca.action.size()) != ambient_rank) {
    throw std::invalid_argument("coset action rank mismatch");
  }
  const int n = ca.coset_count;
  auto inv = invert_action(ca);

  // Shortlex BFS tree from the trivial coset; trying the letters in order
  // a1, a1^-1, b1, b1^-1, ... makes the transversal words shortlex-minimal.
  std::vector<int> order;         // cosets in BFS (= shortlex) order
  std::vector<int> tree_from(n, -1), tree_letter(n, 0);
  {
    std::vector<bool> seen(n, false);
    std::queue<int> bfs;
    seen[0] = true;
    bfs.push(0);
    while (!bfs.empty()) {
      int c = bfs.front();
      bfs.pop();
      order.push_back(c);
      for (int k = 0; k < ambient_rank; ++k) {
        for (int sign : {+1, -1}) {
          int d = sign > 0 ? ca.action[k][c] : inv[k][c];
          if (!seen[d]) {
            seen[d] = true;
            tree_from[d] = c;
            tree_letter[d] = sign * (k + 1);
            bfs.push(d);
          }
        }
      }
    }
    if (static_cast<int>(order.size()) != n) {
      throw std::invalid_argument("coset action is not transitive");
    }
  }

  std::vector<Word> rep(n);  // transversal words
  for (int c : order) {
    if (tree_from[c] >= 0) {
      rep[c] = rep[tree_from[c]];
      rep[c].push_back(tree_letter[c]);
    }
  }

  // Schreier generator ids per positive edge (coset, generator);
  // 0 marks a tree edge (trivial generator).
  std::vector<std::vector<int>> gen_id(n, std::vector<int>(ambient_rank, 0));
  SubgroupPresentation out;
  out.index = n;
  int next_id = 1;
  for (int c : order) {
    for (int k = 0; k < ambient_rank; ++k) {
      int d = ca.action[k][c];
      bool tree_edge = (tree_from[d] == c && tree_letter[d] == k + 1) ||
                       (tree_from[c] == d && tree_letter[c] == -(k + 1));
      if (tree_edge) continue;
      gen_id[c][k] = next_id++;
      Word g = rep[c];
      g.push_back(k + 1);
      Word back = word_inverse(rep[d]);
      g.insert(g.end(), back.begin(), back.end());
      out.schreier_generators.push_back(std::move(g));
    }
  }

  // Reidemeister rewriting of every relator through every coset.
  for (const Word& r : relators) {
    for (int t : order) {
      Word rewritten;
      int c = t;
      for (int letter : r) {
        int k = std::abs(letter) - 1;
        if (k < 0 || k >= ambient_rank) {
          throw std::invalid_argument("relator letter out of range");
        }
        if (letter > 0) {
          if (gen_id[c][k] != 0) rewritten.push_back(gen_id[c][k]);
          c = ca.action[k][c];
        } else {
          c = inv[k][c];
          if (gen_id[c][k] != 0) rewritten.push_back(-gen_id[c][k]);
        }
      }
      if (c != t) throw std::logic_error("relator does not stabilize its coset");
      out.rewritten_relators.push_back(std::move(rewritten));
    }
  }
  return out;
}

SubgroupPresentation reidemeister_schreier(const SurfacePresentation& pres,
                                           const FiniteQuotient& q) {
  return reidemeister_schreier(pres.generator_count(), pres.relators(),
                               kernel_cosets(q));
}

int abelianized_rank(const SubgroupPresentation& sub) {
  const int gens = sub.generator_count();
  if (gens == 0) return 0;
  if (sub.rewritten_relators.empty()) return gens;
  Matrix exponents(static_cast<int>(sub.rewritten_relators.size()), gens);
  for (size_t r = 0; r < sub.rewritten_relators.size(); ++r) {
    for (int letter : sub.rewritten_relators[r]) {
      int k = std::abs(letter) - 1;
      exponents.at(static_cast<int>(r), k) += letter > 0 ? 1 : -1;
    }
  }
  return gens - rank(std::move(exponents));
}

}  // namespace fib
