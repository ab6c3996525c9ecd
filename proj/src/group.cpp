#include "hyperfan/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace hyperfan {

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (mul(a, b) == 0) return b;
  throw DomainError("element has no inverse");
}

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != 0) {
    x = mul(x, a);
    ++n;
    if (n > order) throw DomainError("element order exceeds group order");
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::map<int, int> FiniteGroup::order_histogram() const {
  std::map<int, int> h;
  for (int a = 0; a < order; ++a) ++h[element_order(a)];
  return h;
}

namespace {

void validate_group(FiniteGroup& g) {
  const int n = g.order;
  // Latin square
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(static_cast<std::size_t>(n), false), col(static_cast<std::size_t>(n), false);
    for (int b = 0; b < n; ++b) {
      int r = g.mul(a, b), c = g.mul(b, a);
      if (r < 0 || r >= n || c < 0 || c >= n) throw InvalidInputError("Cayley entry out of range");
      if (row[static_cast<std::size_t>(r)] || col[static_cast<std::size_t>(c)])
        throw InvalidInputError("Cayley table is not a Latin square");
      row[static_cast<std::size_t>(r)] = col[static_cast<std::size_t>(c)] = true;
    }
  }
  // identity, normalized to index 0
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) != b || g.mul(b, a) != b) { ok = false; break; }
    if (ok) e = a;
  }
  if (e < 0) throw InvalidInputError("Cayley table has no identity");
  if (e != 0) {
    // relabel by swapping 0 <-> e
    auto swapc = [&](int x) { return x == 0 ? e : x == e ? 0 : x; };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        t[static_cast<std::size_t>(swapc(a))][static_cast<std::size_t>(swapc(b))] = swapc(g.mul(a, b));
    g.table = std::move(t);
    for (int& x : g.generators) x = swapc(x);
  }
  // inverses
  for (int a = 0; a < n; ++a) g.inverse(a);
  // associativity, exhaustive at this scale
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw InvalidInputError("Cayley table is not associative");
  }
}

}  // namespace

FiniteGroup group_from_cayley(const std::vector<std::vector<int>>& one_based,
                              std::vector<std::string> generator_names,
                              std::vector<int> generator_indices) {
  FiniteGroup g;
  g.order = static_cast<int>(one_based.size());
  if (g.order == 0) throw InvalidInputError("empty Cayley table");
  for (const auto& row : one_based) {
    if (row.size() != one_based.size()) throw InvalidInputError("Cayley table is not square");
    std::vector<int> r;
    for (int x : row) r.push_back(x - 1);
    g.table.push_back(std::move(r));
  }
  g.generator_names = std::move(generator_names);
  for (int x : generator_indices) g.generators.push_back(x - 1);
  validate_group(g);
  return g;
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generator_images,
                                    std::vector<std::string> generator_names,
                                    std::size_t element_bound) {
  if (generator_images.empty()) throw InvalidInputError("no permutation generators");
  const std::size_t deg = generator_images[0].size();
  using Perm = std::vector<int>;
  std::vector<Perm> gens;
  for (const auto& img : generator_images) {
    if (img.size() != deg) throw InvalidInputError("permutations have mixed degrees");
    Perm p(deg);
    std::vector<bool> seen(deg, false);
    for (std::size_t i = 0; i < deg; ++i) {
      int v = img[i] - 1;
      if (v < 0 || static_cast<std::size_t>(v) >= deg || seen[static_cast<std::size_t>(v)])
        throw InvalidInputError("generator image is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
      p[i] = v;
    }
    gens.push_back(std::move(p));
  }
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [&](const Perm& a, const Perm& b) {  // (a*b)(i) = a(b(i))
    Perm c(deg);
    for (std::size_t i = 0; i < deg; ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  };
  std::map<Perm, int> index;
  std::vector<Perm> elems{id};
  index[id] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const Perm& gp : gens) {
      Perm nxt = compose(elems[static_cast<std::size_t>(cur)], gp);
      if (!index.count(nxt)) {
        if (elems.size() >= element_bound)
          throw ResourceBoundError("permutation closure exceeds element bound");
        index[nxt] = static_cast<int>(elems.size());
        elems.push_back(nxt);
        queue.push_back(index[nxt]);
      }
    }
  }
  FiniteGroup g;
  g.order = static_cast<int>(elems.size());
  g.table.assign(static_cast<std::size_t>(g.order), std::vector<int>(static_cast<std::size_t>(g.order)));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      g.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          index.at(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  g.generator_names = std::move(generator_names);
  for (const Perm& gp : gens) g.generators.push_back(index.at(gp));
  validate_group(g);
  return g;
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Word w;
  std::string token;
  std::istringstream in(text);
  std::string normalized;
  for (char c : text) normalized += (c == '*') ? ' ' : c;
  std::istringstream stream(normalized);
  while (stream >> token) {
    std::string name = token;
    long long power = 1;
    auto caret = token.find('^');
    if (caret != std::string::npos) {
      name = token.substr(0, caret);
      power = std::stoll(token.substr(caret + 1));
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InvalidInputError("unknown generator in word: " + name);
    int letter = static_cast<int>(it - names.begin()) + 1;
    for (long long i = 0; i < std::llabs(power); ++i) w.push_back(power > 0 ? letter : -letter);
  }
  return w;
}

namespace {

// Todd-Coxeter coset enumeration (HLT with coincidences), trivial subgroup.
class CosetEnumerator {
 public:
  CosetEnumerator(int num_gens, const std::vector<Word>& relators, std::size_t ceiling)
      : ngens_(num_gens), ceiling_(ceiling) {
    for (const Word& r : relators) relators_.push_back(to_letters(r));
    add_coset();
  }

  void run() {
    for (std::size_t alpha = 0; alpha < table_.size(); ++alpha) {
      if (!alive(static_cast<int>(alpha))) continue;
      for (const auto& rel : relators_) {
        scan_and_fill(static_cast<int>(alpha), rel);
        if (!alive(static_cast<int>(alpha))) break;
      }
      if (!alive(static_cast<int>(alpha))) continue;
      for (int x = 0; x < 2 * ngens_; ++x) {
        if (entry(static_cast<int>(alpha), x) < 0) {
          int beta = add_coset();
          set_entry(static_cast<int>(alpha), x, beta);
        }
      }
    }
  }

  // live cosets, compressed; returns the coset table acting by generators
  std::vector<std::vector<int>> compressed_table(std::vector<int>& live_of) {
    std::vector<int> live;
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (alive(static_cast<int>(i))) live.push_back(static_cast<int>(i));
    std::vector<int> newid(table_.size(), -1);
    for (std::size_t i = 0; i < live.size(); ++i) newid[static_cast<std::size_t>(live[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> out(live.size(), std::vector<int>(static_cast<std::size_t>(2 * ngens_)));
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (int x = 0; x < 2 * ngens_; ++x) {
        int d = entry(live[i], x);
        if (d < 0) throw DomainError("coset table incomplete after enumeration");
        out[i][static_cast<std::size_t>(x)] = newid[static_cast<std::size_t>(rep(d))];
      }
    }
    live_of = std::move(newid);
    return out;
  }

 private:
  using Letters = std::vector<int>;  // 2g for generator g, 2g+1 for its inverse

  Letters to_letters(const Word& w) const {
    Letters out;
    for (int s : w) {
      if (s == 0 || std::abs(s) > ngens_) throw InvalidInputError("word letter out of range");
      out.push_back(s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1);
    }
    return out;
  }
  static int inv_letter(int x) { return x ^ 1; }

  int add_coset() {
    if (table_.size() >= ceiling_)
      throw ResourceBoundError("coset enumeration exceeded the ceiling of " +
                               std::to_string(ceiling_) + " cosets");
    table_.emplace_back(static_cast<std::size_t>(2 * ngens_), -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  int rep(int a) {
    while (parent_[static_cast<std::size_t>(a)] != a) {
      parent_[static_cast<std::size_t>(a)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
      a = parent_[static_cast<std::size_t>(a)];
    }
    return a;
  }
  bool alive(int a) { return rep(a) == a; }

  int entry(int a, int x) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)]; }
  void set_entry(int a, int x, int b) {
    table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] = b;
    table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(inv_letter(x))] = a;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int gamma = queue.front();
      queue.pop_front();
      for (int x = 0; x < 2 * ngens_; ++x) {
        int delta = entry(gamma, x);
        if (delta < 0) continue;
        table_[static_cast<std::size_t>(delta)][static_cast<std::size_t>(inv_letter(x))] = -1;
        int mu = rep(gamma), nu = rep(delta);
        int mu_x = entry(mu, x);
        if (mu_x >= 0) {
          merge(nu, mu_x, queue);
        } else {
          int nu_ix = entry(nu, inv_letter(x));
          if (nu_ix >= 0) merge(mu, nu_ix, queue);
          else set_entry(mu, x, nu);
        }
      }
    }
  }

  void scan_and_fill(int alpha, const Letters& rel) {
    std::size_t i = 0, j = rel.size();
    int f = alpha, b = alpha;
    for (;;) {
      while (i < j && entry(f, rel[i]) >= 0) f = entry(f, rel[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, inv_letter(rel[j - 1])) >= 0) b = entry(b, inv_letter(rel[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set_entry(f, rel[i], b);
        return;
      }
      int beta = add_coset();
      set_entry(f, rel[i], beta);
      f = beta;
      ++i;
    }
  }

  int ngens_;
  std::size_t ceiling_;
  std::vector<Letters> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

FiniteGroup group_from_presentation(const std::vector<std::string>& generator_names,
                                    const std::vector<Word>& relators,
                                    std::size_t coset_ceiling) {
  if (generator_names.empty()) throw InvalidInputError("presentation needs generators");
  CosetEnumerator enumerator(static_cast<int>(generator_names.size()), relators, coset_ceiling);
  enumerator.run();
  std::vector<int> newid;
  std::vector<std::vector<int>> coset_table = enumerator.compressed_table(newid);
  const int n = static_cast<int>(coset_table.size());

  // words reaching each coset from the identity coset
  std::vector<std::vector<int>> word(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < coset_table[0].size(); ++x) {
      int d = coset_table[static_cast<std::size_t>(c)][x];
      if (!seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = true;
        word[static_cast<std::size_t>(d)] = word[static_cast<std::size_t>(c)];
        word[static_cast<std::size_t>(d)].push_back(static_cast<int>(x));
        queue.push_back(d);
      }
    }
  }
  FiniteGroup g;
  g.order = n;
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int c = a;
      for (int x : word[static_cast<std::size_t>(b)]) c = coset_table[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
      g.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
    }
  }
  g.generator_names = generator_names;
  for (std::size_t i = 0; i < generator_names.size(); ++i)
    g.generators.push_back(coset_table[0][2 * i]);
  validate_group(g);
  return g;
}

int evaluate_word(const FiniteGroup& g, const Word& w) {
  int acc = 0;
  for (int s : w) {
    if (s == 0 || std::abs(s) > static_cast<int>(g.generators.size()))
      throw InvalidInputError("word letter out of range");
    int elem = g.generators[static_cast<std::size_t>(std::abs(s) - 1)];
    if (s < 0) elem = g.inverse(elem);
    acc = g.mul(acc, elem);
  }
  return acc;
}

std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& seeds) {
  std::set<int> elems{0};
  std::deque<int> queue{0};
  std::vector<int> gens;
  for (int s : seeds) {
    if (s < 0 || s >= g.order) throw InvalidInputError("invalid element index");
    gens.push_back(s);
    gens.push_back(g.inverse(s));
  }
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int s : gens) {
      int b = g.mul(a, s);
      if (elems.insert(b).second) queue.push_back(b);
    }
  }
  return {elems.begin(), elems.end()};
}

std::vector<int> normal_closure(const FiniteGroup& g, const std::vector<int>& seeds) {
  if (seeds.empty()) throw InvalidInputError("normal closure needs at least one seed");
  std::vector<int> conjugates;
  for (int s : seeds) {
    if (s < 0 || s >= g.order) throw InvalidInputError("invalid element index");
    for (int h = 0; h < g.order; ++h)
      conjugates.push_back(g.mul(g.mul(h, s), g.inverse(h)));
  }
  return subgroup_generated(g, conjugates);
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  std::set<int> n(elements.begin(), elements.end());
  if (!n.count(0)) return false;
  for (int a : n) {
    for (int b : n)
      if (!n.count(g.mul(a, b))) return false;
    if (!n.count(g.inverse(a))) return false;
  }
  for (int h = 0; h < g.order; ++h)
    for (int a : n)
      if (!n.count(g.mul(g.mul(h, a), g.inverse(h)))) return false;
  return true;
}

FiniteGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal_elements) {
  if (!is_normal_subgroup(g, normal_elements))
    throw InvalidInputError("subgroup is not normal");
  std::set<int> nset(normal_elements.begin(), normal_elements.end());
  std::vector<int> coset_of(static_cast<std::size_t>(g.order), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order; ++a) {
    if (coset_of[static_cast<std::size_t>(a)] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int x : nset) coset_of[static_cast<std::size_t>(g.mul(a, x))] = id;
  }
  const int q = static_cast<int>(reps.size());
  if (q * static_cast<int>(nset.size()) != g.order)
    throw DomainError("coset partition failed (Lagrange violated)");
  FiniteGroup out;
  out.order = q;
  out.table.assign(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      out.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          coset_of[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(a)],
                                                  reps[static_cast<std::size_t>(b)]))];
  // well-definedness: products of arbitrary coset members land in one coset
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (coset_of[static_cast<std::size_t>(g.mul(a, b))] !=
          out.mul(coset_of[static_cast<std::size_t>(a)], coset_of[static_cast<std::size_t>(b)]))
        throw DomainError("quotient multiplication is not well-defined");
  validate_group(out);
  return out;
}

std::vector<int> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw InvalidInputError("abelian invariants of a nonabelian group");
  if (g.order == 1) return {};
  int best = 0, best_order = 1;
  for (int a = 0; a < g.order; ++a) {
    int o = g.element_order(a);
    if (o > best_order) { best = a; best_order = o; }
  }
  // a cyclic subgroup of maximal order is a direct summand
  std::vector<int> invs{best_order};
  FiniteGroup q = quotient_group(g, subgroup_generated(g, {best}));
  for (int d : abelian_invariants(q)) invs.push_back(d);
  return invs;
}

namespace {

FiniteGroup dihedral_group(int m) {
  // r^i s^e with s r s = r^-1; element index 2*i + e
  int n = 2 * m;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  auto id = [&](int i, int e) { return 2 * mod_pos(i, m) + e; };
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < m; ++j)
        for (int b = 0; b < 2; ++b)
          t[static_cast<std::size_t>(id(i, a))][static_cast<std::size_t>(id(j, b))] =
              id(i + (a ? -j : j), (a + b) % 2);
  std::vector<std::vector<int>> one_based;
  for (auto& row : t) {
    std::vector<int> r;
    for (int x : row) r.push_back(x + 1);
    one_based.push_back(r);
  }
  return group_from_cayley(one_based);
}

FiniteGroup dicyclic_group(int m) {
  // a^i x^e, i mod 2m, with x^2 = a^m and x a x^-1 = a^-1; index 2*i + e
  int n = 4 * m;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  auto id = [&](int i, int e) { return 2 * mod_pos(i, 2 * m) + e; };
  for (int i = 0; i < 2 * m; ++i)
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < 2 * m; ++j)
        for (int b = 0; b < 2; ++b) {
          int i2 = i + (a ? -j : j);
          int e2 = a + b;
          if (e2 == 2) { i2 += m; e2 = 0; }
          t[static_cast<std::size_t>(id(i, a))][static_cast<std::size_t>(id(j, b))] = id(i2, e2);
        }
  std::vector<std::vector<int>> one_based;
  for (auto& row : t) {
    std::vector<int> r;
    for (int x : row) r.push_back(x + 1);
    one_based.push_back(r);
  }
  return group_from_cayley(one_based);
}

std::string histogram_string(const std::map<int, int>& h) {
  std::string s;
  for (const auto& [o, c] : h)
    s += (s.empty() ? "" : ",") + std::to_string(o) + ":" + std::to_string(c);
  return s;
}

}  // namespace

std::string identify_group(const FiniteGroup& g) {
  if (g.order == 1) return "trivial";
  if (g.is_abelian()) {
    std::vector<int> invs = abelian_invariants(g);
    std::string label;
    for (std::size_t i = 0; i < invs.size(); ++i)
      label += (i ? "x" : "") + std::string("Z") + std::to_string(invs[i]);
    return label;
  }
  if (g.order <= 24) {
    struct Named {
      std::string label;
      int order;
      std::string hist;
    };
    static const std::vector<Named> table = [] {
      std::vector<Named> t;
      for (int m = 3; m <= 12; ++m) {
        FiniteGroup d = dihedral_group(m);
        t.push_back({m == 3 ? "S3" : "D" + std::to_string(m), d.order,
                     histogram_string(d.order_histogram())});
      }
      for (int m = 2; m <= 6; ++m) {
        FiniteGroup dc = dicyclic_group(m);
        t.push_back({m == 2 ? "Q8" : "Dic" + std::to_string(m), dc.order,
                     histogram_string(dc.order_histogram())});
      }
      return t;
    }();
    std::string hist = histogram_string(g.order_histogram());
    std::string match;
    int hits = 0;
    for (const Named& cand : table) {
      if (cand.order == g.order && cand.hist == hist) {
        ++hits;
        match = cand.label;
      }
    }
    if (hits == 1) return match;
  }
  return "order-" + std::to_string(g.order) + " group, order histogram (" +
         histogram_string(g.order_histogram()) + ")";
}

}  // namespace hyperfan
