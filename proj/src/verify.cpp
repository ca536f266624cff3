#include "treeperm/verify.hpp"

#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "treeperm/abstract_maps.hpp"
#include "treeperm/bijection.hpp"
#include "treeperm/counting.hpp"
#include "treeperm/error.hpp"
#include "treeperm/labeled_tree.hpp"
#include "treeperm/text.hpp"

namespace treeperm {

namespace {

// Empty string when the trace is internally consistent: every post-step
// snapshot sums to +1 and the terminal snapshot holds a single +1 at the
// reported root.
std::string check_trace(const ChargeTrace& trace, Label expected_root) {
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const std::vector<int>& charges = trace.steps[s].charges;
    const long sum = std::accumulate(charges.begin(), charges.end(), 0L);
    if (sum != 1) {
      return "charge sum " + std::to_string(sum) + " after step " +
             std::to_string(s);
    }
  }
  if (trace.steps.empty()) return "";
  const std::vector<int>& last = trace.steps.back().charges;
  Label positive = -1;
  for (std::size_t j = 0; j < last.size(); ++j) {
    if (last[j] == 0) continue;
    if (last[j] != 1 || positive != -1) {
      return "terminal charge is not a single +1";
    }
    positive = static_cast<Label>(j);
  }
  if (positive != trace.root) {
    return "terminal +1 at " + std::to_string(positive) +
           " but trace root is " + std::to_string(trace.root);
  }
  if (trace.root != expected_root) {
    return "trace root " + std::to_string(trace.root) +
           " disagrees with absent-label root " +
           std::to_string(expected_root);
  }
  return "";
}

}  // namespace

std::string VerifyReport::summary() const {
  if (!pass) return "FAIL (" + failure + ")";
  return "PASS (" + std::to_string(permutations) + " permutations, " +
         std::to_string(shape_classes) + " shapes, 2 implementations agree)";
}

VerifyReport verify_shape(const TreeShape& shape, Label max_length) {
  VerifyReport report{.shape = shape};

  const auto fail = [&report](std::string why) {
    report.pass = false;
    report.failure = std::move(why);
    return report;
  };

  std::map<std::string, std::uint64_t> census;
  PermutationEnumerator perms(shape.edge_count(), max_length);
  while (std::optional<Permutation> perm = perms.next()) {
    const std::string tag = " for permutation " + format_perm(*perm);

    const KidVector kids = perm_to_tree(*perm, shape);
    if (tree_to_perm(kids) != *perm) {
      return fail("round trip breaks" + tag);
    }
    const KidVector kids_hi =
        perm_to_tree(*perm, shape, ChildPolicy::LargestLabel);
    if (tree_to_perm(kids_hi, ChildPolicy::LargestLabel) != *perm) {
      return fail("round trip under the largest-label policy breaks" + tag);
    }

    const ChargeTrace trace = trace_construction(*perm, shape);
    const std::string trace_problem = check_trace(trace, kids.root());
    if (!trace_problem.empty()) {
      return fail(trace_problem + tag);
    }

    const LabeledTree direct = from_kid_vector(kids);
    if (to_kid_vector(compute_T(*perm, shape), shape) != kids) {
      return fail("implementations disagree" + tag);
    }
    if (compute_P(direct) != *perm) {
      return fail("sort-based inverse disagrees" + tag);
    }

    ++census[shape_key(kids)];
    ++report.permutations;
  }

  if (BigCount(static_cast<unsigned long>(report.permutations)) !=
      labeled_count(shape.arity(), shape.node_count())) {
    return fail("saw " + std::to_string(report.permutations) +
                " permutations, expected (dn)!");
  }

  report.shape_classes = census.size();
  if (BigCount(static_cast<unsigned long>(report.shape_classes)) !=
      fuss_catalan(shape.arity(), shape.node_count())) {
    return fail(std::to_string(report.shape_classes) +
                " distinct shapes, expected " +
                to_decimal(fuss_catalan(shape.arity(), shape.node_count())));
  }
  const BigCount per_shape =
      factorial(shape.node_count()) * factorial(shape.leaf_count());
  for (const auto& [key, count] : census) {
    if (BigCount(static_cast<unsigned long>(count)) != per_shape) {
      return fail("shape " + key + " appears " + std::to_string(count) +
                  " times, expected n!*m! = " + to_decimal(per_shape));
    }
  }

  report.pass = true;
  return report;
}

}  // namespace treeperm
