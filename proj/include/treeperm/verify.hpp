#ifndef TREEPERM_VERIFY_HPP
#define TREEPERM_VERIFY_HPP

#include <cstdint>
#include <string>

#include "treeperm/enumeration.hpp"
#include "treeperm/shape.hpp"

namespace treeperm {

struct VerifyReport {
  TreeShape shape;
  std::uint64_t permutations = 0;   // (dn)!
  std::uint64_t shape_classes = 0;  // distinct shapes seen
  bool pass = false;
  std::string failure;  // empty when pass

  /// "PASS (720 permutations, 5 shapes, 2 implementations agree)" or
  /// "FAIL (<reason>)".
  std::string summary() const;
};

/// Exhaustive sweep over all (dn)! permutations of a shape:
///   - forward/inverse round trip under both policies,
///   - agreement of the imperative and order-theoretic implementations,
///   - charge conservation and unique terminal +1 in every trace,
///   - root agreement between the absent-label rule and the final step,
///   - distinctness of all produced kid vectors,
///   - shape census against fuss_catalan with uniform n!*m! multiplicity.
VerifyReport verify_shape(const TreeShape& shape,
                          Label max_length = kDefaultEnumerationLimit);

}  // namespace treeperm

#endif  // TREEPERM_VERIFY_HPP
