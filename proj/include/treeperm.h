/*
 * treeperm: bijections between permutations of length d*n and labeled
 * n-node d-ary trees, with exact counting, enumeration, ranking, uniform
 * sampling, and text rendering.
 *
 * Conventions:
 *   - Every fallible function returns a treeperm_status; TREEPERM_OK is 0.
 *     On failure, outputs are untouched and treeperm_last_error() holds a
 *     one-line message (thread-local, valid until the next library call
 *     on the same thread).
 *   - Returned strings and arrays are malloc'd; release them with
 *     treeperm_free(). Opaque handles have their own _free functions.
 *   - Any output pointer may be NULL to skip that output.
 *   - A permutation of length L is an array hitting each of 0..L-1 once.
 *   - A kid vector for (d, n) has length d*n; entry d*q + r is the label
 *     of the r-th child of node q. Node labels are 0..n-1, leaf labels
 *     n..d*n, and exactly one label (the root) is absent.
 *   - Counts are returned as decimal strings; they outgrow 64 bits fast.
 */

#ifndef TREEPERM_H
#define TREEPERM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int64_t treeperm_label;

typedef enum {
  TREEPERM_OK = 0,
  TREEPERM_ERR_INVALID_SHAPE = 1,
  TREEPERM_ERR_INVALID_PERMUTATION = 2,
  TREEPERM_ERR_WRONG_LENGTH = 3,
  TREEPERM_ERR_LABEL_OUT_OF_RANGE = 4,
  TREEPERM_ERR_DUPLICATE_CHILD = 5,
  TREEPERM_ERR_NO_UNIQUE_ROOT = 6,
  TREEPERM_ERR_CYCLE_DETECTED = 7,
  TREEPERM_ERR_INVALID_TREE = 8,
  TREEPERM_ERR_NODE_NOT_FOUND = 9,
  TREEPERM_ERR_PARSE = 10,
  TREEPERM_ERR_STYLE_ARITY_MISMATCH = 11,
  TREEPERM_ERR_TOO_LARGE = 12,
  TREEPERM_ERR_RANK_OUT_OF_RANGE = 13,
  TREEPERM_ERR_INTERNAL = 14,
  TREEPERM_ERR_NOMEM = 15,
  TREEPERM_ERR_INVALID_ARGUMENT = 16
} treeperm_status;

/* Which label with charge +1 becomes the next child. SMALLEST is the
 * reference behavior; both are exact inverses of their own forward map. */
#define TREEPERM_POLICY_SMALLEST_LABEL 0
#define TREEPERM_POLICY_LARGEST_LABEL 1

#define TREEPERM_STYLE_SEXPR 0      /* (0 (1 3 2) 4) */
#define TREEPERM_STYLE_FUNCTIONAL 1 /* f0(f1(3,2),4) */
#define TREEPERM_STYLE_INFIX 2      /* ((bxa)+c), arity 2 only */

/* Render flag: emit U+00D7 for multiplication instead of ASCII 'x'. */
#define TREEPERM_RENDER_UNICODE_TIMES 1u

typedef struct treeperm_tree treeperm_tree;
typedef struct treeperm_enum treeperm_enum;
typedef struct treeperm_sampler treeperm_sampler;

const char* treeperm_version(void);
const char* treeperm_status_name(treeperm_status status);
const char* treeperm_last_error(void);
void treeperm_free(void* p);

/* ---- shape parameters ------------------------------------------------ */

treeperm_status treeperm_shape_check(treeperm_label d, treeperm_label n);
treeperm_status treeperm_edge_count(treeperm_label d, treeperm_label n,
                                    treeperm_label* out);
treeperm_status treeperm_leaf_count(treeperm_label d, treeperm_label n,
                                    treeperm_label* out);

/* ---- permutation and label text -------------------------------------- */

/* "3,2,0,1" (whitespace tolerated, blank means empty) to a validated
 * permutation. */
treeperm_status treeperm_perm_parse(const char* text,
                                    treeperm_label** entries_out,
                                    size_t* length_out);

/* Inverse of the above: comma-separated decimals, no spaces. */
treeperm_status treeperm_labels_format(const treeperm_label* labels,
                                       size_t length, char** out);

/* ---- the two bijections ----------------------------------------------- */

/* Charge construction. perm must have length d*n; kids_out receives a
 * malloc'd array of length d*n and root_out the absent label. */
treeperm_status treeperm_perm_to_kids(treeperm_label d, treeperm_label n,
                                      const treeperm_label* perm,
                                      size_t perm_length, int policy,
                                      treeperm_label** kids_out,
                                      treeperm_label* root_out);

/* Exact inverse of treeperm_perm_to_kids under the same policy. */
treeperm_status treeperm_kids_to_perm(treeperm_label d, treeperm_label n,
                                      const treeperm_label* kids, int policy,
                                      treeperm_label** perm_out);

treeperm_status treeperm_kids_validate(treeperm_label d, treeperm_label n,
                                       const treeperm_label* kids);
treeperm_status treeperm_kids_root(treeperm_label d, treeperm_label n,
                                   const treeperm_label* kids,
                                   treeperm_label* root_out);

/* ---- recursive trees --------------------------------------------------- */

treeperm_status treeperm_tree_from_kids(treeperm_label d, treeperm_label n,
                                        const treeperm_label* kids,
                                        treeperm_tree** out);

/* Parses TREEPERM_STYLE_SEXPR or TREEPERM_STYLE_FUNCTIONAL text; infix is
 * render-only. */
treeperm_status treeperm_tree_parse(const char* text, int style,
                                    treeperm_tree** out);

treeperm_status treeperm_tree_shape(const treeperm_tree* tree,
                                    treeperm_label* d_out,
                                    treeperm_label* n_out);
treeperm_status treeperm_tree_kids(const treeperm_tree* tree,
                                   treeperm_label** kids_out,
                                   size_t* length_out,
                                   treeperm_label* root_out);
treeperm_status treeperm_tree_render(const treeperm_tree* tree, int style,
                                     unsigned flags, char** out);
void treeperm_tree_free(treeperm_tree* tree);

/* Order-theoretic pair, independent of the charge construction: the
 * sort-based map from a tree to the permutation ordering its proper
 * subtrees, and its step-indexed inverse. The pair agrees with the charge
 * construction under the smallest-label policy. */
treeperm_status treeperm_tree_to_perm_abstract(const treeperm_tree* tree,
                                               treeperm_label** perm_out,
                                               size_t* length_out);
treeperm_status treeperm_tree_from_perm_abstract(treeperm_label d,
                                                 treeperm_label n,
                                                 const treeperm_label* perm,
                                                 size_t perm_length,
                                                 treeperm_tree** out);

/* ---- exact counting and ranking ---------------------------------------- */

treeperm_status treeperm_catalan(treeperm_label n, char** decimal_out);
treeperm_status treeperm_fuss_catalan(treeperm_label d, treeperm_label n,
                                      char** decimal_out);
treeperm_status treeperm_labeled_count(treeperm_label d, treeperm_label n,
                                       char** decimal_out);

/* Distinct shapes over the full enumeration; equals fuss_catalan but is
 * computed by actually enumerating. Refuses d*n > max_length. */
treeperm_status treeperm_count_shapes(treeperm_label d, treeperm_label n,
                                      treeperm_label max_length,
                                      char** decimal_out);

/* Lexicographic rank among all permutations of the same length. */
treeperm_status treeperm_perm_rank(const treeperm_label* perm, size_t length,
                                   char** rank_decimal_out);
treeperm_status treeperm_perm_unrank(const char* rank_decimal,
                                     treeperm_label length,
                                     treeperm_label** perm_out);

/* ---- enumeration -------------------------------------------------------- */

/* Streams every permutation of length d*n in lexicographic order together
 * with its tree; rank is the 0-based position in that order. */
treeperm_status treeperm_enum_new(treeperm_label d, treeperm_label n,
                                  int policy, treeperm_label max_length,
                                  treeperm_enum** out);

/* done becomes 1 when the stream is exhausted; the outputs are only
 * written while done is 0. Any output pointer may be NULL to skip it. */
treeperm_status treeperm_enum_next(treeperm_enum* e, uint64_t* rank_out,
                                   treeperm_label** perm_out,
                                   treeperm_label** kids_out, int* done_out);
void treeperm_enum_free(treeperm_enum* e);

/* ---- seeded sampling ------------------------------------------------------ */

/* Deterministic: one seed, one sample stream, identical on every
 * platform. Parallel streams take seeds base, base+1, ... */
treeperm_status treeperm_sampler_new(uint64_t seed, treeperm_sampler** out);
treeperm_status treeperm_sampler_stream(uint64_t base_seed, uint64_t index,
                                        treeperm_sampler** out);
treeperm_status treeperm_sample_perm(treeperm_sampler* s,
                                     treeperm_label length,
                                     treeperm_label** perm_out);
treeperm_status treeperm_sample_kids(treeperm_sampler* s, treeperm_label d,
                                     treeperm_label n, int policy,
                                     treeperm_label** kids_out,
                                     treeperm_label* root_out);
void treeperm_sampler_free(treeperm_sampler* s);

/* ---- self-check ------------------------------------------------------------ */

/* Sweeps all (d*n)! permutations: round trips both policies, checks the
 * two implementations against each other, audits every charge trace, and
 * matches the shape census against the closed-form counts. pass_out gets
 * 0/1; summary_out gets the one-line report either way. */
treeperm_status treeperm_verify(treeperm_label d, treeperm_label n,
                                treeperm_label max_length, int* pass_out,
                                char** summary_out);

#ifdef __cplusplus
}
#endif

#endif /* TREEPERM_H */
