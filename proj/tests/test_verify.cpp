#include <doctest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "stw/canonical.hpp"
#include "stw/enumeration.hpp"
#include "stw/error.hpp"
#include "stw/generators.hpp"
#include "stw/report.hpp"
#include "stw/segments.hpp"
#include "stw/steiner.hpp"
#include "stw/verify.hpp"

using namespace stw;

namespace {

const VerificationReport* find_segments(const std::vector<VerificationReport>& reports,
                                        const std::vector<int>& lengths, int k) {
  for (const auto& r : reports) {
    if (r.instance.segments && r.instance.segments->lengths() == lengths &&
        r.instance.k == std::vector<int>{k}) {
      return &r;
    }
  }
  return nullptr;
}

const VerificationReport* find_count(const std::vector<VerificationReport>& reports, int n, int m,
                                     int k) {
  for (const auto& r : reports) {
    if (r.instance.n == n && r.instance.m == m && r.instance.k == std::vector<int>{k}) return &r;
  }
  return nullptr;
}

bool predicate(const ArgTree& a, const std::string& name) {
  for (const auto& p : a.predicates) {
    if (p.name == name) return p.value;
  }
  FAIL("missing predicate " << name);
  return false;
}

// Extremes per segment class from the labelled-free oracle values.
std::map<std::pair<std::vector<int>, int>, std::pair<long long, long long>> class_extremes(int max_n) {
  std::map<std::pair<std::vector<int>, int>, std::pair<long long, long long>> out;
  for (int n = 2; n <= max_n; ++n) {
    TreeStream s = all_trees(n);
    while (auto t = s.next()) {
      const auto lengths = oracle::segment_lengths(*t);
      for (int k = 2; k <= std::min(n, 4); ++k) {
        const long long v = oracle::sw_k(*t, k);
        auto [it, fresh] = out.try_emplace({lengths, k}, v, v);
        if (!fresh) {
          it->second.first = std::min(it->second.first, v);
          it->second.second = std::max(it->second.second, v);
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("unimodal and valley checks") {
  CHECK(is_unimodal({}));
  CHECK(is_unimodal({1, 2, 2, 3, 1}));
  CHECK(is_unimodal({3, 2, 1}));
  CHECK_FALSE(is_unimodal({2, 1, 2}));
  CHECK(admits_valley({{3}, {1, 2}, {2}}));
  CHECK_FALSE(admits_valley({{1}, {3}, {1}}));
  CHECK(admits_valley({{}, {2, 1}, {}}));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    std::vector<std::vector<int>> groups(1 + rng() % 5);
    for (auto& g : groups) {
      const int size = static_cast<int>(rng() % 4);
      for (int j = 0; j < size; ++j) g.push_back(1 + static_cast<int>(rng() % 4));
    }
    CHECK(admits_valley(groups) == oracle::valley_by_permutation(groups));
  }
}

TEST_CASE("structure predicates on the order-15 quasi-caterpillar") {
  const auto p = structure_predicates(fixture::quasi_cat15());
  CHECK(p.is_quasi_caterpillar);
  CHECK(p.max_degree_le4);
  CHECK(p.degree4_only_at_ends == false);  // v_3 carries two pendants mid-backbone
  CHECK(p.named().size() == 5);
  CHECK(p.named()[0].name == "isQuasiCaterpillar");
  CHECK_FALSE(structure_predicates(fixture::star(5)).max_degree_le4);
}

TEST_CASE("verdict strings") {
  for (Verdict v : {Verdict::Confirmed, Verdict::Violated, Verdict::ConfirmedWithNotes}) {
    CHECK(parse_verdict(to_string(v)) == v);
  }
  CHECK(std::string(to_string(Verdict::ConfirmedWithNotes)) == "confirmed-with-notes");
  CHECK_THROWS_AS(parse_verdict("maybe"), Error);
  VerificationReport bad;
  bad.verdict = Verdict::Violated;
  CHECK(any_violated({VerificationReport{}, bad}));
  CHECK_FALSE(any_violated({VerificationReport{}}));
}

TEST_CASE("starlike minimum spot checks") {
  const auto reports = verify_min_starlike(7, {2, 3});
  const auto* five = find_segments(reports, {1, 1, 1, 1, 1}, 2);
  REQUIRE(five != nullptr);
  REQUIRE(five->arg_trees.size() == 1);
  CHECK(five->arg_trees[0].code == canonical_code(fixture::star(5)));
  CHECK(five->verdict == Verdict::Confirmed);
  const auto* single = find_segments(reports, {2, 1, 1}, 2);
  REQUIRE(single != nullptr);
  CHECK(single->verdict == Verdict::Confirmed);
  CHECK(find_segments(reports, {2, 1}, 2) == nullptr);
  CHECK_THROWS_AS(verify_min_starlike(13, {2}), Error);
}

TEST_CASE("extremal values agree with oracle values, n <= 8") {
  const auto extremes = class_extremes(8);
  const auto mins = verify_min_starlike(8, {2, 3, 4});
  const auto maxs = verify_max_quasi_caterpillar(8, {2, 3, 4});
  int checked = 0;
  for (const auto& [key, range] : extremes) {
    const auto& [lengths, k] = key;
    if (lengths.size() == 2) continue;
    const auto* lo = find_segments(mins, lengths, k);
    const auto* hi = find_segments(maxs, lengths, k);
    REQUIRE(lo != nullptr);
    REQUIRE(hi != nullptr);
    CHECK(lo->extremal_value == range.first);
    CHECK(hi->extremal_value == range.second);
    CHECK(ExactCount(oracle::sw_k(starlike(SegmentSequence(lengths)), k)) == range.first);
    CHECK(lo->verdict == Verdict::Confirmed);
    ++checked;
  }
  CHECK(checked == static_cast<int>(mins.size()));
  CHECK(checked == static_cast<int>(maxs.size()));
}

TEST_CASE("structure spot instance") {
  const auto reports = verify_structure(10, {2});
  const auto* r = find_segments(reports, {2, 2, 1, 1, 1, 1, 1}, 2);
  REQUIRE(r != nullptr);
  CHECK(r->verdict == Verdict::Confirmed);
  for (const ArgTree& a : r->arg_trees) {
    if (!predicate(a, "isQuasiCaterpillar")) continue;
    CHECK(predicate(a, "maxDegreeLe4"));
    CHECK(predicate(a, "degree4OnlyAtEnds"));
    CHECK(predicate(a, "backboneUnimodal"));
    CHECK(predicate(a, "pendantsAntiUnimodal"));
  }
}

TEST_CASE("balanced minimum and caterpillar maximum") {
  const auto mins = verify_min_balanced(9, {2, 3, 4});
  const auto* r = find_count(mins, 6, 3, 2);
  REQUIRE(r != nullptr);
  REQUIRE(r->arg_trees.size() == 1);
  CHECK(r->arg_trees[0].code == canonical_code(balanced_starlike(6, 3)));
  CHECK(segment_sequence(tree_from_code(r->arg_trees[0].code.code)) == SegmentSequence({2, 2, 1}));
  const auto* p5 = find_count(mins, 5, 1, 2);
  REQUIRE(p5 != nullptr);
  CHECK(p5->extremal_value == 20);
  CHECK_FALSE(any_violated(mins));
  const auto maxs = verify_max_caterpillar_family(9, {2, 3, 4});
  CHECK_FALSE(any_violated(maxs));
  for (const auto& rep : maxs) {
    for (const ArgTree& a : rep.arg_trees) {
      const Tree t = tree_from_code(a.code.code);
      CHECK(predicate(a, "isCaterpillar") == is_caterpillar(t));
    }
    if (rep.verdict == Verdict::ConfirmedWithNotes) {
      CHECK(rep.notes.find("order-consistent") != std::string::npos);
    }
  }
}

TEST_CASE("lemma report") {
  const VerificationReport r = verify_lemma31(200, 42, {2, 3, 4});
  CHECK(r.theorem == "lemma31");
  CHECK(r.verdict == Verdict::Confirmed);
  CHECK(r.instance.samples == 200);
  CHECK(r.instance.seed == 42u);
  CHECK(verify_lemma31(200, 42, {2, 3, 4}) == r);
}

TEST_CASE("reports are deterministic and worker-count independent") {
  const auto a = verify_structure(9, {2, 3}, VerifyOptions{1});
  const auto b = verify_structure(9, {2, 3}, VerifyOptions{4});
  CHECK(a == b);
  CHECK(reports_to_json(a) == reports_to_json(b));
}

TEST_CASE("json round trip and arg-tree re-parse") {
  std::vector<VerificationReport> all = verify_min_starlike(8, {2, 3});
  for (auto& r : verify_max_caterpillar_family(8, {3})) all.push_back(r);
  all.push_back(verify_lemma31(20, 1, {2}));
  const std::string json = reports_to_json(all);
  const auto back = reports_from_json(json);
  CHECK(back == all);
  for (const auto& r : back) {
    if (r.theorem == "lemma31") {
      CHECK(r.extremal_value > 0);  // smallest observed delta
      continue;
    }
    for (const ArgTree& a : r.arg_trees) {
      CHECK(sw_k(tree_from_code(a.code.code), r.instance.k[0]) == r.extremal_value);
    }
  }
  CHECK(json.find("\"extremalValue\": \"") != std::string::npos);
  CHECK_THROWS_AS(reports_from_json("{"), Error);
  CHECK_THROWS_AS(reports_from_json("[{\"theorem\": 3}]"), Error);
}
