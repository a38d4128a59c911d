#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grouptope/permutation.hpp"
#include "grouptope/rational.hpp"

namespace grouptope {

/// Finite group given by permutation generators on {0,...,degree-1}.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  int degree_;
  std::vector<Permutation> generators_;
};

struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Klein4, Quaternion8, Product, Explicit };
  Kind kind;
  int param = 0;                           // cyclic/dihedral/symmetric
  std::vector<GroupSpec> factors;          // product (exactly two)
  std::vector<Permutation> generators;     // explicit

  std::string name() const;
};

/// One-line group-spec grammar:
///   cyclic <k> | dihedral <k> | symmetric <k> | klein4 | quaternion8
///   | product <spec> ; <spec>
///   | gens <cycle-notation permutations separated by whitespace>
GroupSpec parse_group_spec(const std::string& text);
std::string serialize_group_spec(const GroupSpec& spec);

/// Faithful permutation representation. Named families use their natural
/// action when one exists (cyclic/dihedral/symmetric), the regular
/// representation otherwise (klein4, quaternion8).
PermutationGroup realize_group(const GroupSpec& spec);

inline constexpr std::size_t kEnumerationGuard = 100000;

/// Breadth-first closure over the generators. Throws if the order exceeds
/// kEnumerationGuard; use order_of for large groups.
std::vector<Permutation> enumerate_elements(const PermutationGroup& g);

/// Exact order: closure enumeration below the guard, Schreier-Sims
/// stabilizer chain above it.
BigInt order_of(const PermutationGroup& g);

/// Order of the group generated by `generators`, by stabilizer chain.
BigInt schreier_sims_order(int degree, const std::vector<Permutation>& generators);

/// Smallest k such that some k-subset of elements generates the whole group.
/// Brute force; requires |G| <= 1000 (returns nullopt above the guard).
std::optional<int> minimum_generator_count(const PermutationGroup& g);

}  // namespace grouptope
