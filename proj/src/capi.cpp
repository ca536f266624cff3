#include "treeperm.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treeperm/abstract_maps.hpp"
#include "treeperm/bijection.hpp"
#include "treeperm/counting.hpp"
#include "treeperm/enumeration.hpp"
#include "treeperm/error.hpp"
#include "treeperm/labeled_tree.hpp"
#include "treeperm/sampler.hpp"
#include "treeperm/text.hpp"
#include "treeperm/verify.hpp"

struct treeperm_tree {
  treeperm::LabeledTree impl;
};

struct treeperm_enum {
  treeperm::TreeEnumerator impl;
};

struct treeperm_sampler {
  treeperm::SeededGenerator impl;
};

namespace {

using treeperm::ErrorCode;
using treeperm::Label;

thread_local std::string g_last_error;

struct BadArgument {
  std::string message;
};

treeperm_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidShape: return TREEPERM_ERR_INVALID_SHAPE;
    case ErrorCode::InvalidPermutation: return TREEPERM_ERR_INVALID_PERMUTATION;
    case ErrorCode::WrongLength: return TREEPERM_ERR_WRONG_LENGTH;
    case ErrorCode::LabelOutOfRange: return TREEPERM_ERR_LABEL_OUT_OF_RANGE;
    case ErrorCode::DuplicateChild: return TREEPERM_ERR_DUPLICATE_CHILD;
    case ErrorCode::NoUniqueRoot: return TREEPERM_ERR_NO_UNIQUE_ROOT;
    case ErrorCode::CycleDetected: return TREEPERM_ERR_CYCLE_DETECTED;
    case ErrorCode::InvalidTree: return TREEPERM_ERR_INVALID_TREE;
    case ErrorCode::NodeNotFound: return TREEPERM_ERR_NODE_NOT_FOUND;
    case ErrorCode::ParseError: return TREEPERM_ERR_PARSE;
    case ErrorCode::StyleArityMismatch: return TREEPERM_ERR_STYLE_ARITY_MISMATCH;
    case ErrorCode::TooLarge: return TREEPERM_ERR_TOO_LARGE;
    case ErrorCode::RankOutOfRange: return TREEPERM_ERR_RANK_OUT_OF_RANGE;
    case ErrorCode::InternalCorruption: return TREEPERM_ERR_INTERNAL;
  }
  return TREEPERM_ERR_INTERNAL;
}

template <typename F>
treeperm_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return TREEPERM_OK;
  } catch (const treeperm::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const BadArgument& e) {
    g_last_error = e.message;
    return TREEPERM_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TREEPERM_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TREEPERM_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw BadArgument{std::string(what) + " must not be NULL"};
}

/* malloc-backed copies so treeperm_free can be plain free. */
using CBlock = std::unique_ptr<void, decltype(&std::free)>;

CBlock dup_string(const std::string& s) {
  void* p = std::malloc(s.size() + 1);
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return CBlock(p, &std::free);
}

CBlock dup_labels(const std::vector<Label>& v) {
  const std::size_t bytes = v.size() * sizeof(treeperm_label);
  void* p = std::malloc(bytes == 0 ? 1 : bytes);
  if (p == nullptr) throw std::bad_alloc();
  if (bytes != 0) std::memcpy(p, v.data(), bytes);
  return CBlock(p, &std::free);
}

void give_string(char** out, const std::string& s) {
  if (out == nullptr) return;
  *out = static_cast<char*>(dup_string(s).release());
}

void give_labels(treeperm_label** out, const std::vector<Label>& v) {
  if (out == nullptr) return;
  *out = static_cast<treeperm_label*>(dup_labels(v).release());
}

treeperm::ChildPolicy policy_of(int policy) {
  switch (policy) {
    case TREEPERM_POLICY_SMALLEST_LABEL:
      return treeperm::ChildPolicy::SmallestLabel;
    case TREEPERM_POLICY_LARGEST_LABEL:
      return treeperm::ChildPolicy::LargestLabel;
  }
  throw BadArgument{"unknown policy " + std::to_string(policy)};
}

treeperm::RenderStyle style_of(int style) {
  switch (style) {
    case TREEPERM_STYLE_SEXPR: return treeperm::RenderStyle::SExpr;
    case TREEPERM_STYLE_FUNCTIONAL: return treeperm::RenderStyle::Functional;
    case TREEPERM_STYLE_INFIX: return treeperm::RenderStyle::Infix;
  }
  throw BadArgument{"unknown style " + std::to_string(style)};
}

std::vector<Label> copy_in(const treeperm_label* data, std::size_t length,
                           const char* what) {
  if (length != 0) require(data != nullptr, what);
  return std::vector<Label>(data, data + length);
}

treeperm::Permutation perm_in(const treeperm_label* data, std::size_t length,
                              const char* what) {
  return treeperm::Permutation::from_entries(copy_in(data, length, what));
}

treeperm::KidVector kids_in(Label d, Label n, const treeperm_label* kids) {
  const treeperm::TreeShape shape(d, n);
  return treeperm::KidVector::validated(
      shape, copy_in(kids, static_cast<std::size_t>(shape.edge_count()),
                     "kids"));
}

}  // namespace

extern "C" {

const char* treeperm_version(void) { return "1.0.0"; }

const char* treeperm_status_name(treeperm_status status) {
  switch (status) {
    case TREEPERM_OK: return "ok";
    case TREEPERM_ERR_INVALID_SHAPE: return "invalid shape";
    case TREEPERM_ERR_INVALID_PERMUTATION: return "invalid permutation";
    case TREEPERM_ERR_WRONG_LENGTH: return "wrong length";
    case TREEPERM_ERR_LABEL_OUT_OF_RANGE: return "label out of range";
    case TREEPERM_ERR_DUPLICATE_CHILD: return "duplicate child";
    case TREEPERM_ERR_NO_UNIQUE_ROOT: return "no unique root";
    case TREEPERM_ERR_CYCLE_DETECTED: return "cycle detected";
    case TREEPERM_ERR_INVALID_TREE: return "invalid tree";
    case TREEPERM_ERR_NODE_NOT_FOUND: return "node not found";
    case TREEPERM_ERR_PARSE: return "parse error";
    case TREEPERM_ERR_STYLE_ARITY_MISMATCH: return "style arity mismatch";
    case TREEPERM_ERR_TOO_LARGE: return "too large";
    case TREEPERM_ERR_RANK_OUT_OF_RANGE: return "rank out of range";
    case TREEPERM_ERR_INTERNAL: return "internal error";
    case TREEPERM_ERR_NOMEM: return "out of memory";
    case TREEPERM_ERR_INVALID_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

const char* treeperm_last_error(void) { return g_last_error.c_str(); }

void treeperm_free(void* p) { std::free(p); }

treeperm_status treeperm_shape_check(treeperm_label d, treeperm_label n) {
  return guarded([&] { treeperm::TreeShape shape(d, n); (void)shape; });
}

treeperm_status treeperm_edge_count(treeperm_label d, treeperm_label n,
                                    treeperm_label* out) {
  return guarded([&] {
    const Label value = treeperm::TreeShape(d, n).edge_count();
    if (out) *out = value;
  });
}

treeperm_status treeperm_leaf_count(treeperm_label d, treeperm_label n,
                                    treeperm_label* out) {
  return guarded([&] {
    const Label value = treeperm::TreeShape(d, n).leaf_count();
    if (out) *out = value;
  });
}

treeperm_status treeperm_perm_parse(const char* text,
                                    treeperm_label** entries_out,
                                    size_t* length_out) {
  return guarded([&] {
    require(text != nullptr, "text");
    const treeperm::Permutation perm = treeperm::parse_perm(text);
    give_labels(entries_out, perm.entries());
    if (length_out) *length_out = perm.entries().size();
  });
}

treeperm_status treeperm_labels_format(const treeperm_label* labels,
                                       size_t length, char** out) {
  return guarded([&] {
    give_string(out, treeperm::format_labels(copy_in(labels, length, "labels")));
  });
}

treeperm_status treeperm_perm_to_kids(treeperm_label d, treeperm_label n,
                                      const treeperm_label* perm,
                                      size_t perm_length, int policy,
                                      treeperm_label** kids_out,
                                      treeperm_label* root_out) {
  return guarded([&] {
    const treeperm::KidVector kids =
        treeperm::perm_to_tree(perm_in(perm, perm_length, "perm"),
                               treeperm::TreeShape(d, n), policy_of(policy));
    give_labels(kids_out, kids.kids());
    if (root_out) *root_out = kids.root();
  });
}

treeperm_status treeperm_kids_to_perm(treeperm_label d, treeperm_label n,
                                      const treeperm_label* kids, int policy,
                                      treeperm_label** perm_out) {
  return guarded([&] {
    const treeperm::Permutation perm =
        treeperm::tree_to_perm(kids_in(d, n, kids), policy_of(policy));
    give_labels(perm_out, perm.entries());
  });
}

treeperm_status treeperm_kids_validate(treeperm_label d, treeperm_label n,
                                       const treeperm_label* kids) {
  return guarded([&] { kids_in(d, n, kids); });
}

treeperm_status treeperm_kids_root(treeperm_label d, treeperm_label n,
                                   const treeperm_label* kids,
                                   treeperm_label* root_out) {
  return guarded([&] {
    const Label root = kids_in(d, n, kids).root();
    if (root_out) *root_out = root;
  });
}

treeperm_status treeperm_tree_from_kids(treeperm_label d, treeperm_label n,
                                        const treeperm_label* kids,
                                        treeperm_tree** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    treeperm::LabeledTree t = treeperm::from_kid_vector(kids_in(d, n, kids));
    *out = new treeperm_tree{std::move(t)};
  });
}

treeperm_status treeperm_tree_parse(const char* text, int style,
                                    treeperm_tree** out) {
  return guarded([&] {
    require(text != nullptr, "text");
    require(out != nullptr, "out");
    treeperm::LabeledTree t = treeperm::parse_tree(text, style_of(style));
    *out = new treeperm_tree{std::move(t)};
  });
}

treeperm_status treeperm_tree_shape(const treeperm_tree* tree,
                                    treeperm_label* d_out,
                                    treeperm_label* n_out) {
  return guarded([&] {
    require(tree != nullptr, "tree");
    const treeperm::TreeShape shape = treeperm::tree_shape(tree->impl);
    if (d_out) *d_out = shape.arity();
    if (n_out) *n_out = shape.node_count();
  });
}

treeperm_status treeperm_tree_kids(const treeperm_tree* tree,
                                   treeperm_label** kids_out,
                                   size_t* length_out,
                                   treeperm_label* root_out) {
  return guarded([&] {
    require(tree != nullptr, "tree");
    const treeperm::KidVector kids = treeperm::to_kid_vector(tree->impl);
    give_labels(kids_out, kids.kids());
    if (length_out) *length_out = kids.kids().size();
    if (root_out) *root_out = kids.root();
  });
}

treeperm_status treeperm_tree_render(const treeperm_tree* tree, int style,
                                     unsigned flags, char** out) {
  return guarded([&] {
    require(tree != nullptr, "tree");
    treeperm::RenderOptions options;
    options.style = style_of(style);
    options.unicode_times = (flags & TREEPERM_RENDER_UNICODE_TIMES) != 0;
    give_string(out, treeperm::render(tree->impl, options));
  });
}

void treeperm_tree_free(treeperm_tree* tree) { delete tree; }

treeperm_status treeperm_tree_to_perm_abstract(const treeperm_tree* tree,
                                               treeperm_label** perm_out,
                                               size_t* length_out) {
  return guarded([&] {
    require(tree != nullptr, "tree");
    const treeperm::Permutation perm = treeperm::compute_P(tree->impl);
    give_labels(perm_out, perm.entries());
    if (length_out) *length_out = perm.entries().size();
  });
}

treeperm_status treeperm_tree_from_perm_abstract(treeperm_label d,
                                                 treeperm_label n,
                                                 const treeperm_label* perm,
                                                 size_t perm_length,
                                                 treeperm_tree** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    treeperm::LabeledTree t = treeperm::compute_T(
        perm_in(perm, perm_length, "perm"), treeperm::TreeShape(d, n));
    *out = new treeperm_tree{std::move(t)};
  });
}

treeperm_status treeperm_catalan(treeperm_label n, char** decimal_out) {
  return guarded([&] {
    give_string(decimal_out, treeperm::to_decimal(treeperm::catalan(n)));
  });
}

treeperm_status treeperm_fuss_catalan(treeperm_label d, treeperm_label n,
                                      char** decimal_out) {
  return guarded([&] {
    give_string(decimal_out, treeperm::to_decimal(treeperm::fuss_catalan(d, n)));
  });
}

treeperm_status treeperm_labeled_count(treeperm_label d, treeperm_label n,
                                       char** decimal_out) {
  return guarded([&] {
    give_string(decimal_out,
                treeperm::to_decimal(treeperm::labeled_count(d, n)));
  });
}

treeperm_status treeperm_count_shapes(treeperm_label d, treeperm_label n,
                                      treeperm_label max_length,
                                      char** decimal_out) {
  return guarded([&] {
    give_string(decimal_out,
                treeperm::to_decimal(treeperm::count_shapes(
                    treeperm::TreeShape(d, n), max_length)));
  });
}

treeperm_status treeperm_perm_rank(const treeperm_label* perm, size_t length,
                                   char** rank_decimal_out) {
  return guarded([&] {
    give_string(rank_decimal_out,
                treeperm::to_decimal(
                    treeperm::rank_perm(perm_in(perm, length, "perm"))));
  });
}

treeperm_status treeperm_perm_unrank(const char* rank_decimal,
                                     treeperm_label length,
                                     treeperm_label** perm_out) {
  return guarded([&] {
    require(rank_decimal != nullptr, "rank_decimal");
    treeperm::BigCount rank;
    if (rank.set_str(rank_decimal, 10) != 0) {
      throw treeperm::Error(ErrorCode::ParseError,
                            std::string("not a decimal integer: \"") +
                                rank_decimal + "\"");
    }
    const treeperm::Permutation perm = treeperm::unrank_perm(rank, length);
    give_labels(perm_out, perm.entries());
  });
}

treeperm_status treeperm_enum_new(treeperm_label d, treeperm_label n,
                                  int policy, treeperm_label max_length,
                                  treeperm_enum** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = new treeperm_enum{treeperm::TreeEnumerator(
        treeperm::TreeShape(d, n), policy_of(policy), max_length)};
  });
}

treeperm_status treeperm_enum_next(treeperm_enum* e, uint64_t* rank_out,
                                   treeperm_label** perm_out,
                                   treeperm_label** kids_out, int* done_out) {
  return guarded([&] {
    require(e != nullptr, "enumerator");
    std::optional<treeperm::EnumeratedTree> row = e->impl.next();
    if (!row.has_value()) {
      if (done_out) *done_out = 1;
      return;
    }
    /* Stage both arrays before handing either out so a failed second
     * allocation leaks nothing. */
    CBlock perm_block = dup_labels(row->perm.entries());
    CBlock kids_block = dup_labels(row->kids.kids());
    if (rank_out) *rank_out = row->rank;
    if (perm_out) *perm_out = static_cast<treeperm_label*>(perm_block.release());
    if (kids_out) *kids_out = static_cast<treeperm_label*>(kids_block.release());
    if (done_out) *done_out = 0;
  });
}

void treeperm_enum_free(treeperm_enum* e) { delete e; }

treeperm_status treeperm_sampler_new(uint64_t seed, treeperm_sampler** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = new treeperm_sampler{treeperm::SeededGenerator(seed)};
  });
}

treeperm_status treeperm_sampler_stream(uint64_t base_seed, uint64_t index,
                                        treeperm_sampler** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = new treeperm_sampler{
        treeperm::SeededGenerator::stream(base_seed, index)};
  });
}

treeperm_status treeperm_sample_perm(treeperm_sampler* s,
                                     treeperm_label length,
                                     treeperm_label** perm_out) {
  return guarded([&] {
    require(s != nullptr, "sampler");
    give_labels(perm_out,
                treeperm::sample_permutation(s->impl, length).entries());
  });
}

treeperm_status treeperm_sample_kids(treeperm_sampler* s, treeperm_label d,
                                     treeperm_label n, int policy,
                                     treeperm_label** kids_out,
                                     treeperm_label* root_out) {
  return guarded([&] {
    require(s != nullptr, "sampler");
    const treeperm::KidVector kids = treeperm::sample_tree(
        s->impl, treeperm::TreeShape(d, n), policy_of(policy));
    give_labels(kids_out, kids.kids());
    if (root_out) *root_out = kids.root();
  });
}

void treeperm_sampler_free(treeperm_sampler* s) { delete s; }

treeperm_status treeperm_verify(treeperm_label d, treeperm_label n,
                                treeperm_label max_length, int* pass_out,
                                char** summary_out) {
  return guarded([&] {
    const treeperm::VerifyReport report =
        treeperm::verify_shape(treeperm::TreeShape(d, n), max_length);
    if (pass_out) *pass_out = report.pass ? 1 : 0;
    give_string(summary_out, report.summary());
  });
}

}  // extern "C"
