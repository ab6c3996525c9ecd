#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperfan/types.hpp"

namespace hyperfan {

// Finite group as a Cayley table (0-based internally; element 0 = identity
// after normalization).  Generators, when known, are element indices.
struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<std::string> generator_names;
  std::vector<int> generators;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const;
  int element_order(int a) const;
  bool is_abelian() const;
  std::map<int, int> order_histogram() const;  // element order -> count
};

// Validates Latin-square property, identity, inverses; associativity is
// checked exhaustively for order <= 64.
FiniteGroup group_from_cayley(const std::vector<std::vector<int>>& one_based_table,
                              std::vector<std::string> generator_names = {},
                              std::vector<int> generator_indices = {});

// Closure of permutation generators (images 1-based).
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generator_images,
                                    std::vector<std::string> generator_names = {},
                                    std::size_t element_bound = 20000);

// Word in generators: +i / -i mean the i-th generator (1-based) / its inverse.
using Word = std::vector<int>;

// "g4^-1 g3 g4 g3^-2" -> word over the named generators.
Word parse_word(const std::string& text, const std::vector<std::string>& generator_names);

// Bounded Todd-Coxeter coset enumeration over the trivial subgroup.
FiniteGroup group_from_presentation(const std::vector<std::string>& generator_names,
                                    const std::vector<Word>& relators,
                                    std::size_t coset_ceiling = 100000);

int evaluate_word(const FiniteGroup& g, const Word& w);

// Smallest normal subgroup containing the seeds, as a sorted element set.
std::vector<int> normal_closure(const FiniteGroup& g, const std::vector<int>& seeds);

std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& seeds);

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

// G/N with well-definedness of the coset table verified.
FiniteGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal_elements);

// Invariant factors of an abelian group, largest first (e.g. Z10 x Z2 -> {10, 2}).
std::vector<int> abelian_invariants(const FiniteGroup& g);

// "trivial", "Z6", "Z10xZ2", "S3", "Dic3", "Q8", "D4", ... or an
// order/histogram signature when no table entry matches uniquely.
std::string identify_group(const FiniteGroup& g);

}  // namespace hyperfan
