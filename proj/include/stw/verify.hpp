#pragma once

#include <cstdint>
#include <random>
#include <optional>
#include <string>
#include <vector>

#include "stw/canonical.hpp"
#include "stw/exact_count.hpp"
#include "stw/moves.hpp"
#include "stw/segments.hpp"
#include "stw/tree.hpp"

namespace stw {

// Largest order the exhaustive verifiers accept.
inline constexpr int kMaxVerifyOrder = 12;

enum class Verdict { Confirmed, Violated, ConfirmedWithNotes };
const char* to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

// Instance class of a report: a segment sequence, an (n, m) pair, or the
// sampling parameters of a randomized check.
struct InstanceClass {
  std::optional<SegmentSequence> segments;
  std::optional<int> n;
  std::optional<int> m;
  std::vector<int> k;
  std::optional<long long> samples;
  std::optional<std::uint64_t> seed;
  friend bool operator==(const InstanceClass&, const InstanceClass&) = default;
};

struct NamedPredicate {
  std::string name;
  bool value = false;
  friend bool operator==(const NamedPredicate&, const NamedPredicate&) = default;
};

struct ArgTree {
  CanonicalCode code;
  std::vector<NamedPredicate> predicates;
  friend bool operator==(const ArgTree&, const ArgTree&) = default;
};

struct VerificationReport {
  std::string theorem;
  InstanceClass instance;
  ExactCount extremal_value;
  std::vector<ArgTree> arg_trees;
  Verdict verdict = Verdict::Confirmed;
  std::string notes;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Structural claims about an extremal quasi-caterpillar, each evaluated
// under one common backbone.
struct StructurePredicateSet {
  bool is_quasi_caterpillar = false;
  bool max_degree_le4 = false;
  bool degree4_only_at_ends = false;
  bool backbone_unimodal = false;
  bool pendants_anti_unimodal = false;

  bool all() const {
    return is_quasi_caterpillar && max_degree_le4 && degree4_only_at_ends && backbone_unimodal &&
           pendants_anti_unimodal;
  }
  std::vector<NamedPredicate> named() const;
};

// r_1 <= .. <= r_j >= .. >= r_k for some j.
bool is_unimodal(const std::vector<int>& values);
// Some ordering inside each group makes the concatenation non-increasing
// then non-decreasing.
bool admits_valley(const std::vector<std::vector<int>>& groups);

StructurePredicateSet structure_predicates(const Tree& t, const BackboneView& view);
// Predicates under the best backbone: one passing everything if it exists,
// otherwise the one passing the most (first in backbone order).
StructurePredicateSet structure_predicates(const Tree& t);

// Families (i..iv) whose order-consistent construction is isomorphic to t.
std::vector<std::string> matching_families(const Tree& t);

// Verifier options; jobs <= 0 picks the hardware concurrency.
struct VerifyOptions {
  int jobs = 0;
};

std::vector<VerificationReport> verify_min_starlike(int max_n, const std::vector<int>& k_set,
                                                    const VerifyOptions& options = {});
std::vector<VerificationReport> verify_max_quasi_caterpillar(int max_n,
                                                             const std::vector<int>& k_set,
                                                             const VerifyOptions& options = {});
std::vector<VerificationReport> verify_structure(int max_n, const std::vector<int>& k_set,
                                                 const VerifyOptions& options = {});
std::vector<VerificationReport> verify_min_balanced(int max_n, const std::vector<int>& k_set,
                                                    const VerifyOptions& options = {});
std::vector<VerificationReport> verify_max_caterpillar_family(int max_n,
                                                              const std::vector<int>& k_set,
                                                              const VerifyOptions& options = {});

enum class SwitchShape {
  Lemma,              // |X| > |Y| and |A| > |B|
  Mirrored,           // |X| < |Y| and |A| > |B|
  IsomorphicControl,  // B is a rooted copy of A
};

// A randomly built tree with a valid switch of the requested shape.
struct SwitchInstance {
  Tree tree;
  SwitchMove move;
  SwitchSizes sizes;
};

SwitchInstance random_switch_instance(std::mt19937_64& rng, SwitchShape shape);

// Seeded random switch instances: Lemma-shaped ones must increase SW_k,
// mirrored ones decrease it, isomorphic controls leave it unchanged.
VerificationReport verify_lemma31(long long samples, std::uint64_t seed,
                                  const std::vector<int>& k_set);

bool any_violated(const std::vector<VerificationReport>& reports);

}  // namespace stw
