// Command-line front end over the shared-library C API. Everything here
// goes through treeperm.h; the C++ core stays behind the boundary.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "treeperm.h"

namespace {

struct CFree {
  void operator()(void* p) const { treeperm_free(p); }
};
using OwnedLabels = std::unique_ptr<treeperm_label, CFree>;
using OwnedString = std::unique_ptr<char, CFree>;

struct TreeFree {
  void operator()(treeperm_tree* t) const { treeperm_tree_free(t); }
};
using OwnedTree = std::unique_ptr<treeperm_tree, TreeFree>;

struct EnumFree {
  void operator()(treeperm_enum* e) const { treeperm_enum_free(e); }
};
using OwnedEnum = std::unique_ptr<treeperm_enum, EnumFree>;

struct SamplerFree {
  void operator()(treeperm_sampler* s) const { treeperm_sampler_free(s); }
};
using OwnedSampler = std::unique_ptr<treeperm_sampler, SamplerFree>;

// Domain failures exit 1 with a single diagnostic line.
int fail(treeperm_status status) {
  std::fprintf(stderr, "error: %s\n", treeperm_last_error());
  (void)status;
  return 1;
}

#define CHECK_OK(call)                        \
  do {                                        \
    const treeperm_status s_ = (call);        \
    if (s_ != TREEPERM_OK) return fail(s_);   \
  } while (0)

int style_from_name(const std::string& name) {
  if (name == "sexpr") return TREEPERM_STYLE_SEXPR;
  if (name == "functional") return TREEPERM_STYLE_FUNCTIONAL;
  return TREEPERM_STYLE_INFIX;
}

int policy_from_name(const std::string& name) {
  return name == "largest" ? TREEPERM_POLICY_LARGEST_LABEL
                           : TREEPERM_POLICY_SMALLEST_LABEL;
}

std::string format_or_die(const treeperm_label* labels, size_t length) {
  char* text = nullptr;
  if (treeperm_labels_format(labels, length, &text) != TREEPERM_OK) {
    std::fprintf(stderr, "error: %s\n", treeperm_last_error());
    std::exit(1);
  }
  std::string out(text);
  treeperm_free(text);
  return out;
}

struct P2tArgs {
  treeperm_label d = 0;
  treeperm_label n = 0;
  std::string perm_text;
  std::string policy = "smallest";
  std::string style = "sexpr";
  bool unicode_times = false;
};

int run_p2t(const P2tArgs& a) {
  treeperm_label* entries = nullptr;
  size_t length = 0;
  CHECK_OK(treeperm_perm_parse(a.perm_text.c_str(), &entries, &length));
  OwnedLabels entries_owner(entries);

  treeperm_label* kids = nullptr;
  CHECK_OK(treeperm_perm_to_kids(a.d, a.n, entries, length,
                                 policy_from_name(a.policy), &kids, nullptr));
  OwnedLabels kids_owner(kids);

  treeperm_label edge_count = 0;
  CHECK_OK(treeperm_edge_count(a.d, a.n, &edge_count));
  std::printf("kids: %s\n",
              format_or_die(kids, static_cast<size_t>(edge_count)).c_str());

  treeperm_tree* tree = nullptr;
  CHECK_OK(treeperm_tree_from_kids(a.d, a.n, kids, &tree));
  OwnedTree tree_owner(tree);

  char* rendered = nullptr;
  const unsigned flags = a.unicode_times ? TREEPERM_RENDER_UNICODE_TIMES : 0u;
  CHECK_OK(
      treeperm_tree_render(tree, style_from_name(a.style), flags, &rendered));
  OwnedString rendered_owner(rendered);
  std::printf("tree: %s\n", rendered);
  return 0;
}

struct T2pArgs {
  std::string tree_text;
  std::string policy = "smallest";
  std::string style = "sexpr";
};

int run_t2p(const T2pArgs& a) {
  treeperm_tree* tree = nullptr;
  CHECK_OK(treeperm_tree_parse(a.tree_text.c_str(), style_from_name(a.style),
                               &tree));
  OwnedTree tree_owner(tree);

  treeperm_label d = 0, n = 0;
  CHECK_OK(treeperm_tree_shape(tree, &d, &n));

  treeperm_label* kids = nullptr;
  CHECK_OK(treeperm_tree_kids(tree, &kids, nullptr, nullptr));
  OwnedLabels kids_owner(kids);

  treeperm_label* perm = nullptr;
  CHECK_OK(
      treeperm_kids_to_perm(d, n, kids, policy_from_name(a.policy), &perm));
  OwnedLabels perm_owner(perm);

  treeperm_label edge_count = 0;
  CHECK_OK(treeperm_edge_count(d, n, &edge_count));
  std::printf("perm: %s\n",
              format_or_die(perm, static_cast<size_t>(edge_count)).c_str());
  return 0;
}

int run_count(treeperm_label d, treeperm_label n) {
  char* shapes = nullptr;
  CHECK_OK(treeperm_fuss_catalan(d, n, &shapes));
  OwnedString shapes_owner(shapes);
  char* labeled = nullptr;
  CHECK_OK(treeperm_labeled_count(d, n, &labeled));
  OwnedString labeled_owner(labeled);
  std::printf("shapes: %s, labeled: %s\n", shapes, labeled);
  return 0;
}

struct EnumArgs {
  treeperm_label d = 0;
  treeperm_label n = 0;
  std::string style = "sexpr";
  bool unicode_times = false;
  treeperm_label limit = 12;
};

int run_enumerate(const EnumArgs& a) {
  treeperm_enum* e = nullptr;
  CHECK_OK(treeperm_enum_new(a.d, a.n, TREEPERM_POLICY_SMALLEST_LABEL,
                             a.limit, &e));
  OwnedEnum enum_owner(e);

  const unsigned flags = a.unicode_times ? TREEPERM_RENDER_UNICODE_TIMES : 0u;
  const int style = style_from_name(a.style);
  treeperm_label edge_count = 0;
  CHECK_OK(treeperm_edge_count(a.d, a.n, &edge_count));

  while (true) {
    uint64_t rank = 0;
    treeperm_label* perm = nullptr;
    treeperm_label* kids = nullptr;
    int done = 0;
    CHECK_OK(treeperm_enum_next(e, &rank, &perm, &kids, &done));
    if (done) break;
    OwnedLabels perm_owner(perm);
    OwnedLabels kids_owner(kids);

    treeperm_tree* tree = nullptr;
    CHECK_OK(treeperm_tree_from_kids(a.d, a.n, kids, &tree));
    OwnedTree tree_owner(tree);
    char* rendered = nullptr;
    CHECK_OK(treeperm_tree_render(tree, style, flags, &rendered));
    OwnedString rendered_owner(rendered);

    std::printf("%" PRIu64 "\t%s\t%s\n", rank,
                format_or_die(perm, static_cast<size_t>(edge_count)).c_str(),
                rendered);
  }
  return 0;
}

struct SampleArgs {
  treeperm_label d = 0;
  treeperm_label n = 0;
  uint64_t seed = 0;
  uint64_t count = 1;
};

int run_sample(const SampleArgs& a) {
  treeperm_sampler* s = nullptr;
  CHECK_OK(treeperm_sampler_new(a.seed, &s));
  OwnedSampler sampler_owner(s);

  treeperm_label edge_count = 0;
  CHECK_OK(treeperm_edge_count(a.d, a.n, &edge_count));

  for (uint64_t i = 0; i < a.count; ++i) {
    treeperm_label* kids = nullptr;
    CHECK_OK(treeperm_sample_kids(s, a.d, a.n, TREEPERM_POLICY_SMALLEST_LABEL,
                                  &kids, nullptr));
    OwnedLabels kids_owner(kids);

    treeperm_tree* tree = nullptr;
    CHECK_OK(treeperm_tree_from_kids(a.d, a.n, kids, &tree));
    OwnedTree tree_owner(tree);
    char* rendered = nullptr;
    CHECK_OK(treeperm_tree_render(tree, TREEPERM_STYLE_SEXPR, 0, &rendered));
    OwnedString rendered_owner(rendered);

    std::printf("%s\t%s\n",
                format_or_die(kids, static_cast<size_t>(edge_count)).c_str(),
                rendered);
  }
  return 0;
}

int run_verify(treeperm_label d, treeperm_label n, treeperm_label limit) {
  int pass = 0;
  char* summary = nullptr;
  CHECK_OK(treeperm_verify(d, n, limit, &pass, &summary));
  OwnedString summary_owner(summary);
  std::printf("%s\n", summary);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutations of length d*n <-> labeled n-node d-ary trees"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  const auto add_style = [](CLI::App* cmd, std::string& style) {
    cmd->add_option("--style", style, "Tree text form")
        ->check(CLI::IsMember({"sexpr", "functional", "infix"}))
        ->capture_default_str();
  };
  const auto add_policy = [](CLI::App* cmd, std::string& policy) {
    cmd->add_option("--policy", policy, "Child selection among charge +1")
        ->check(CLI::IsMember({"smallest", "largest"}))
        ->capture_default_str();
  };

  P2tArgs p2t;
  CLI::App* p2t_cmd =
      app.add_subcommand("p2t", "Build the tree for a permutation");
  p2t_cmd->add_option("--d", p2t.d, "Arity")->required();
  p2t_cmd->add_option("--n", p2t.n, "Node count")->required();
  p2t_cmd->add_option("perm", p2t.perm_text, "Permutation, e.g. \"3,2,0,1\"")
      ->required();
  add_policy(p2t_cmd, p2t.policy);
  add_style(p2t_cmd, p2t.style);
  p2t_cmd->add_flag("--unicode-times", p2t.unicode_times,
                    "Render multiplication as U+00D7");

  T2pArgs t2p;
  CLI::App* t2p_cmd =
      app.add_subcommand("t2p", "Recover the permutation of a tree");
  t2p_cmd->add_option("tree", t2p.tree_text, "Tree text, e.g. \"(0 (1 3 2) 4)\"")
      ->required();
  add_policy(t2p_cmd, t2p.policy);
  t2p_cmd->add_option("--style", t2p.style, "Tree text form")
      ->check(CLI::IsMember({"sexpr", "functional"}))
      ->capture_default_str();

  treeperm_label count_d = 0, count_n = 0;
  CLI::App* count_cmd =
      app.add_subcommand("count", "Shape and labeled-tree counts");
  count_cmd->add_option("--d", count_d, "Arity")->required();
  count_cmd->add_option("--n", count_n, "Node count")->required();

  EnumArgs enm;
  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "Every permutation and its tree, lexicographically");
  enum_cmd->add_option("--d", enm.d, "Arity")->required();
  enum_cmd->add_option("--n", enm.n, "Node count")->required();
  add_style(enum_cmd, enm.style);
  enum_cmd->add_flag("--unicode-times", enm.unicode_times,
                     "Render multiplication as U+00D7");
  enum_cmd->add_option("--limit", enm.limit, "Highest d*n to enumerate")
      ->capture_default_str();

  SampleArgs smp;
  CLI::App* sample_cmd =
      app.add_subcommand("sample", "Uniform labeled trees from a seed");
  sample_cmd->add_option("--d", smp.d, "Arity")->required();
  sample_cmd->add_option("--n", smp.n, "Node count")->required();
  sample_cmd->add_option("--seed", smp.seed, "Generator seed")
      ->capture_default_str();
  sample_cmd->add_option("--count", smp.count, "Number of samples")
      ->capture_default_str();

  treeperm_label verify_d = 0, verify_n = 0, verify_limit = 12;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Exhaustive round-trip and cross-implementation sweep");
  verify_cmd->add_option("--d", verify_d, "Arity")->required();
  verify_cmd->add_option("--n", verify_n, "Node count")->required();
  verify_cmd->add_option("--limit", verify_limit, "Highest d*n to sweep")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (p2t_cmd->parsed()) return run_p2t(p2t);
  if (t2p_cmd->parsed()) return run_t2p(t2p);
  if (count_cmd->parsed()) return run_count(count_d, count_n);
  if (enum_cmd->parsed()) return run_enumerate(enm);
  if (sample_cmd->parsed()) return run_sample(smp);
  if (verify_cmd->parsed()) return run_verify(verify_d, verify_n, verify_limit);
  return 0;
}
