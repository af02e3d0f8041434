#ifndef DGRE_ORACLE_HPP
#define DGRE_ORACLE_HPP

// Brute-force reference semantics. Words are plain string vectors and every
// operation is a literal set comprehension over them; nothing here uses the
// term algebra of sopf.hpp.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dgre/graph.hpp"
#include "dgre/mutation_op.hpp"
#include "dgre/sopf.hpp"

namespace dgre::oracle {

using Word = std::vector<std::string>;

// Unordered bag of words; duplicates are tolerated and ignored when
// comparing.
struct NaiveLang {
    std::vector<Word> words;
};

// Applies op as the literal algorithm over strings. companion is the graph
// before the operator and is used only for precondition checks and for
// listing a node's arcs. Throws Error on the same preconditions the model
// operators reject.
NaiveLang ref_apply(const NaiveLang& lang, const MutationOp& op, const Dg& companion);

bool equivalent(const SopfRe& a, const NaiveLang& b);

// Exhaustive DFS path enumeration, independent of enumerate_paths.
NaiveLang naive_paths(const Dg& g);

struct CrossCheckReport {
    bool pass = true;
    std::size_t word_count = 0;
    std::vector<Word> missing; // found by DFS, absent from enumerate_paths
    std::vector<Word> extra;   // produced by enumerate_paths only
    std::vector<Symbol> uncovered_nodes; // nodes occurring in no word
};

CrossCheckReport cross_check_initial(const Dg& g);

struct GenConfig {
    std::size_t node_count = 0; // at most 12
    double arc_density = 0.5;
    std::uint64_t seed = 0;
    std::size_t script_length = 0;
    // Lets random_script emit operators that must be rejected.
    bool adversarial = false;
};

inline constexpr std::size_t kMaxNodes = 12;

// Arcs are sampled only forward along a random node permutation.
Dg random_model(const GenConfig& cfg);
std::vector<MutationOp> random_script(const GenConfig& cfg, const Dg& g);

} // namespace dgre::oracle

#endif
