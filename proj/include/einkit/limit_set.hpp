#pragma once

#include <functional>
#include <optional>

#include "einkit/causality.hpp"

namespace einkit {

enum class RelationHint { Free, Unknown };

// Finitely generated subgroup given by validated generators. Inverses are
// cached exactly via g^{-1} = J g^T J. Generators are named a, b, c, ... and
// their inverses A, B, C, ... in word strings.
struct GroupPresentation {
  std::vector<GroupElement> generators;
  std::vector<GroupElement> inverses;
  RelationHint relation_hint = RelationHint::Free;
  int n = 0;

  int letter_count() const { return static_cast<int>(generators.size()) * 2; }
  // letter index: 0..k-1 generators, k..2k-1 inverses
  const GroupElement& letter(int idx) const {
    const int k = static_cast<int>(generators.size());
    return idx < k ? generators[idx] : inverses[idx - k];
  }
  static char letter_name(int idx, int gen_count) {
    return idx < gen_count ? static_cast<char>('a' + idx)
                           : static_cast<char>('A' + (idx - gen_count));
  }
};

GroupPresentation make_presentation(std::vector<GroupElement> generators,
                                    RelationHint hint = RelationHint::Free);

// Evaluate a word such as "abA" (left-to-right product).
GroupElement evaluate_word(const GroupPresentation& G, const std::string& word);

struct Word {
  std::string name;
  GroupElement element;
};

constexpr std::size_t kDefaultWordBudget = 2'000'000;

// All freely reduced words of length 1..max_len. With RelationHint::Unknown,
// elements whose matrices agree within 1e-8 are deduplicated. Throws
// BudgetExceeded beyond `budget` words.
std::vector<Word> enumerate_words(const GroupPresentation& G, int max_len,
                                  std::size_t budget = kDefaultWordBudget);

// Streaming traversal over reduced words (depth-first, letters in order);
// stops early when the visitor returns false. Used where materializing the
// word list would be wasteful.
void visit_words(const GroupPresentation& G, int max_len,
                 const std::function<bool(const std::string&, const GroupElement&)>& visit,
                 std::size_t budget = kDefaultWordBudget);

struct LimitPoint {
  KleinPoint point;      // null class in Ein(1,n-1), sign-sensitive rep
  std::string word;      // word whose pole produced the point
  double gap = 0.0;      // Cartan gap of that word
};

// Sampled limit set of a presentation. Invariants: pairwise distance (angle
// metric on lines) >= dedupe_radius, all reps null. When `lift` is present it
// is acausal and contained in one affine slab, and lift[i] projects back to
// points[i].
struct LimitSetSample {
  std::vector<LimitPoint> points;
  double dedupe_radius = 0.0;
  double invariance_residual = 0.0;
  int n = 0;
  std::optional<std::vector<UniversalPoint>> lift;

  std::size_t size() const { return points.size(); }
};

struct LimitSetOptions {
  int max_len = 8;
  double gap_min = 10.0;
  double dedupe_radius = 1e-4;
  std::size_t budget = kDefaultWordBudget;
};

// Collects attracting poles of enumerated words whose Cartan gap reaches
// gap_min (every word and its inverse is enumerated, so both poles of each
// element appear). Poles come from renormalized repeated squaring with a
// dense-eigensolve fallback; either way they sit within ~e^{-gap} of the
// Cartan pole. Deduped after a canonical sort, so the result does not depend
// on traversal order. Throws EmptySample when nothing reaches gap_min.
LimitSetSample approximate_limit_set(const GroupPresentation& G,
                                     const LimitSetOptions& options);

struct NegativityReport {
  bool negative = false;
  double worst_value = 0.0;  // maximal pairwise inner product over chosen signs
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
  std::vector<int> signs;    // chosen sign per point (+1/-1)
};

// Searches sign representatives (greedy along a nearest-neighbour spanning
// tree, then verified globally) making all pairwise inner products negative.
// Negativity is a property of the double cover, so representative signs are
// exactly the data being certified.
NegativityReport certify_negative(const LimitSetSample& S, double margin = 1e-9);

// Chooses sign representatives and universal time branches so the lift is
// acausal inside one affine slab: the first point is lifted to theta in
// [0, 2*pi) and every other branch is the unique one within pi of it. Throws
// InconsistentLift when the forced assignment violates some pairwise
// constraint (the sample is then not genuinely negative), NotNegative when
// the sign search already fails.
LimitSetSample lift_acausal(const LimitSetSample& S);

// max over generators s and sample points x of the distance from s.x to the
// sample (angle metric); decreasing in max_len for honest approximations.
double invariance_residual(const LimitSetSample& S, const GroupPresentation& G);

}  // namespace einkit
