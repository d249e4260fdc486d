#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "artinres/scalar.hpp"

namespace artinres {

/// Linear functional on jets: (branch, degree) -> coefficient.
using Functional = std::map<std::pair<int, int>, Scalar>;

/// A jet on every branch: branch -> (degree -> coefficient).
using BranchJet = std::vector<std::map<int, Scalar>>;

/// Subalgebra of k[x_1]/(x_1^N) x ... x k[x_n]/(x_n^N), either cut out by
/// linear conditions (plus equal constant terms) or generated by jets.
class SingularityPresentation {
 public:
  /// The functionals are row reduced; the equal-constants conditions are
  /// added here.
  static SingularityPresentation from_conditions(Field field, int branches, int jet_order,
                                                 std::vector<Functional> conditions);
  /// Subalgebra generated by 1 and the given jets.
  static SingularityPresentation from_generators(Field field, int branches, int jet_order,
                                                 std::vector<BranchJet> generators);

  Field field() const { return field_; }
  int branches() const { return branches_; }
  int jet_order() const { return jet_order_; }
  bool by_generators() const { return by_generators_; }
  const std::vector<Functional>& conditions() const { return conditions_; }
  const std::vector<BranchJet>& generators() const { return generators_; }

  SingularityPresentation with_jet_order(int n) const;

  /// Dimension of the subalgebra at jet order n (the span of all products
  /// of elements of the condition subspace and 1).
  std::size_t subalgebra_dimension(int n) const;

  std::string to_string() const;

 private:
  SingularityPresentation() = default;

  Field field_;
  int branches_ = 0;
  int jet_order_ = 0;
  bool by_generators_ = false;
  std::vector<Functional> conditions_;
  std::vector<BranchJet> generators_;
};

/// Codimension of the subalgebra, certified by agreement at N and N + 1.
/// Throws NotStabilized.
int delta_invariant(const SingularityPresentation& p);
int branch_count(const SingularityPresentation& p);
int genus(const SingularityPresentation& p);

enum class GenusOneClass { Cusp, Tacnode, Lines, NotGenusOne };

struct SingularityReport {
  int m = 0;
  int delta = 0;
  int genus = 0;
  GenusOneClass cls = GenusOneClass::NotGenusOne;
  int jet_order = 0;

  std::string class_name() const;
  /// Normal form of the genus-one singularity.
  std::string model() const;
};

SingularityReport classify_genus_one(const SingularityPresentation& p);

/// The plain node: two branches, equal constants.
SingularityPresentation node_presentation(Field field, int jet_order);
/// n general lines through the origin of A^{n-1}, generated by the
/// coordinate functions restricted to the lines.
SingularityPresentation lines_presentation(Field field, int n, int jet_order);

}  // namespace artinres
