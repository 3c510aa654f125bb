#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgh/adversary.hpp"
#include "fgh/errors.hpp"
#include "fgh/notation.hpp"
#include "fgh/ordinal.hpp"
#include "support/generators.hpp"

using namespace fgh;
using namespace fgh::testing;

namespace {

Ordinal o(const char* text) { return parse(text); }

DescendingSequence seq_of(const char* alpha, std::vector<const char*> entries) {
  DescendingSequence s;
  s.alpha = parse(alpha);
  for (const char* e : entries) s.entries.push_back(parse(e));
  return s;
}

const DescendingSequence& worked() {
  static const DescendingSequence s = seq_of("1", {"w", "5", "3", "1", "0"});
  return s;
}

}  // namespace

TEST_CASE("validate_sequence") {
  CHECK_NOTHROW(validate_sequence(worked()));
  CHECK_NOTHROW(validate_sequence(seq_of("1", {"w", "1", "0"})));
  CHECK_NOTHROW(validate_sequence(seq_of("2", {"w^2", "w*5 + 3", "w", "4"})));

  auto index_of = [](const DescendingSequence& s) -> std::size_t {
    try {
      validate_sequence(s);
    } catch (const ValidationError& e) {
      return e.index;
    }
    FAIL("expected ValidationError");
    return static_cast<std::size_t>(-1);
  };

  CHECK(index_of(seq_of("1", {"w", "3", "5"})) == 2);
  CHECK(index_of(seq_of("2", {"w", "3", "1"})) == 0);
  CHECK(index_of(seq_of("1", {"w", "5"})) == 1);
  CHECK(index_of(seq_of("1", {})) == 0);
  CHECK(index_of(seq_of("1", {"w", "5", "5", "3"})) == 2);

  DescendingSequence eps;
  eps.alpha = Ordinal::epsilon0();
  eps.entries = {Ordinal::epsilon0(), o("w"), o("1")};
  CHECK(index_of(eps) == 0);
}

TEST_CASE("base function prefix: worked example") {
  std::vector<Nat> f = base_function_prefix(worked());
  REQUIRE(f.size() == 4);
  CHECK(f[0] == 7);
  CHECK(f[1] == 8);
  CHECK(f[2] == 9);
  CHECK(f[3] == 10);

  std::vector<Nat> g = base_function_prefix(seq_of("1", {"w", "1", "0"}));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == 3);
  CHECK(g[1] == 4);
}

TEST_CASE("base function prefix: constraints and minimality") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    DescendingSequence seq = random_sequence_below_omega2(rng);
    std::vector<Nat> f = base_function_prefix(seq);
    REQUIRE(f.size() == seq.entries.size() - 1);

    for (std::size_t x = 0; x < f.size(); ++x) {
      Nat mc_next = max_coefficient(seq.entries[x + 1]);
      // the defining constraints
      REQUIRE(f[x] > mc_next + x + 1);
      if (x > 0) REQUIRE(f[x] > f[x - 1]);
      // minimality: one less violates a constraint
      Nat lowered = f[x] - 1;
      bool breaks_mc = lowered <= mc_next + x + 1;
      bool breaks_mono = x > 0 && lowered <= f[x - 1];
      REQUIRE((breaks_mc || breaks_mono));
    }
  }
}

TEST_CASE("build_base_function honors the guard policy") {
  BaseFunction fail_f = build_base_function(worked(), GuardPolicy::Fail);
  CHECK(eval_base(fail_f, 0) == 7);
  CHECK(eval_base(fail_f, 3) == 10);
  CHECK_THROWS_AS(eval_base(fail_f, 4), OutOfDomain);

  BaseFunction ext_f = build_base_function(worked(), GuardPolicy::Extend);
  CHECK(eval_base(ext_f, 3) == 10);
  CHECK(eval_base(ext_f, 4) == 11);
  CHECK(eval_base(ext_f, 8) == 15);
}

TEST_CASE("schedule: worked example under extend") {
  Schedule sched = schedule(worked(), Budget{}, GuardPolicy::Extend);
  REQUIRE(sched.entries.size() == 4);
  CHECK(sched.stop == StopReason::Complete);

  CHECK(sched.entries[0].i == 0);
  CHECK(sched.entries[0].a == 0);
  CHECK(sched.entries[0].kase == ScheduleCase::Two);
  REQUIRE(sched.entries[0].two.has_value());
  CHECK(sched.entries[0].two->b == 0);
  CHECK(sched.entries[0].two->beta == Ordinal{});
  CHECK(sched.entries[0].two->n == 1);
  CHECK(sched.entries[0].two->z == 8);

  const std::uint64_t want_a[] = {0, 2, 3, 4};
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(sched.entries[i].i == i);
    CHECK(sched.entries[i].a == want_a[i]);
    CHECK(sched.entries[i].kase == ScheduleCase::One);
  }
}

TEST_CASE("verify_claim: worked example, both policies") {
  ClaimReport fail_rep = verify_claim(worked());
  CHECK(fail_rep.status == ClaimStatus::FuelExhausted);
  REQUIRE(fail_rep.schedule.note.has_value());
  CHECK(fail_rep.schedule.note->find("past its prefix") != std::string::npos);
  CHECK(fail_rep.schedule.note->find("step 2") != std::string::npos);
  REQUIRE(fail_rep.checks.size() == 2);
  CHECK_FALSE(fail_rep.failed_index.has_value());

  ClaimReport rep = verify_claim(worked(), Budget{}, GuardPolicy::Extend);
  CHECK(rep.status == ClaimStatus::AllVerified);
  REQUIRE(rep.checks.size() == 4);
  REQUIRE(rep.f_prefix.size() == 4);

  // i = 0: h = w > 5, reg = f(0)
  CHECK(rep.checks[0].a == 0);
  CHECK(rep.checks[0].measure == o("w"));
  CHECK(rep.checks[0].bound == o("5"));
  CHECK(rep.checks[0].reg == 7);
  CHECK(rep.checks[0].f_i == 7);

  // i = 1 at a = 2: state [(0,7)] reg 8
  CHECK(rep.checks[1].a == 2);
  CHECK(rep.checks[1].measure == o("7"));
  CHECK(rep.checks[1].bound == o("3"));
  CHECK(rep.checks[1].reg == 8);

  // i = 2 at a = 3: state [(0,6)] reg 15 (f extended: f(8) = 15)
  CHECK(rep.checks[2].a == 3);
  CHECK(rep.checks[2].measure == o("6"));
  CHECK(rep.checks[2].reg == 15);

  // i = 3 at a = 4: state [(0,5)] reg 22
  CHECK(rep.checks[3].a == 4);
  CHECK(rep.checks[3].measure == o("5"));
  CHECK(rep.checks[3].bound == Ordinal{});
  CHECK(rep.checks[3].reg == 22);
  CHECK(rep.checks[3].f_i == 10);

  for (const IndexCheck& c : rep.checks) {
    CHECK(c.ok());
  }
}

TEST_CASE("verify_claim: short sequence completes under fail policy") {
  ClaimReport rep = verify_claim(seq_of("1", {"w", "1", "0"}));
  CHECK(rep.status == ClaimStatus::AllVerified);
  REQUIRE(rep.checks.size() == 2);

  CHECK(rep.checks[0].measure == o("w"));
  CHECK(rep.checks[0].bound == o("1"));
  CHECK(rep.checks[0].reg == 3);
  CHECK(rep.checks[0].f_i == 3);

  CHECK(rep.checks[1].a == 2);
  CHECK(rep.checks[1].measure == o("3"));
  CHECK(rep.checks[1].bound == Ordinal{});
  CHECK(rep.checks[1].reg == 4);
  CHECK(rep.checks[1].f_i == 4);
}

TEST_CASE("verify_claim never fails on valid sequences") {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 25; ++trial) {
    DescendingSequence seq = random_sequence_below_omega2(rng);
    ClaimReport rep = verify_claim(seq, Budget(1000000));
    CAPTURE(render(seq.entries[1]));
    REQUIRE(rep.status != ClaimStatus::FailedAt);
    REQUIRE(rep.status != ClaimStatus::Converged);
    for (const IndexCheck& c : rep.checks) {
      REQUIRE(c.measure_ok);
      REQUIRE(c.register_ok);
    }
  }
}

TEST_CASE("verify_claim completes on gentle sequences above w") {
  // every checked inequality verifiable end to end, exponent 2 this time
  ClaimReport rep = verify_claim(seq_of("2", {"w^2", "1", "0"}), Budget{}, GuardPolicy::Extend);
  CHECK(rep.status == ClaimStatus::AllVerified);
  REQUIRE(rep.checks.size() == 2);
  CHECK(rep.checks[0].measure == o("w^2"));
  CHECK(rep.checks[0].bound == o("1"));
  CHECK(rep.checks[1].measure_ok);
  CHECK(rep.checks[1].register_ok);
}

TEST_CASE("schedule checkpoints strictly increase and match claim range") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    DescendingSequence seq = random_sequence_below_omega2(rng);
    Schedule sched = schedule(seq, Budget(200000));
    const std::size_t m = seq.entries.size() - 1;
    CHECK(sched.entries.size() <= m);
    for (std::size_t i = 0; i < sched.entries.size(); ++i) {
      CHECK(sched.entries[i].i == i);
      if (i > 0) CHECK(sched.entries[i].a > sched.entries[i - 1].a);
    }
    if (!sched.entries.empty()) CHECK(sched.entries[0].a == 0);
  }
}

TEST_CASE("tiny fuel yields a partial schedule") {
  ClaimReport rep = verify_claim(worked(), Budget(1), GuardPolicy::Extend);
  CHECK(rep.status == ClaimStatus::FuelExhausted);
  CHECK(rep.schedule.stop == StopReason::FuelExhausted);
  CHECK(rep.schedule.fuel_spent <= 1);
  CHECK(rep.schedule.entries.size() < 4);
}

TEST_CASE("claim report JSON shape") {
  ClaimReport rep = verify_claim(worked(), Budget{}, GuardPolicy::Extend);
  nlohmann::json j = nlohmann::json::parse(to_json(rep));

  CHECK(j["status"] == "all_verified");
  REQUIRE(j["checks"].is_array());
  REQUIRE(j["checks"].size() == 4);
  CHECK(j["checks"][0]["measure"] == "w");
  CHECK(j["checks"][0]["bound"] == "5");
  CHECK(j["checks"][0]["reg"] == "7");
  CHECK(j["checks"][0]["measure_ok"] == true);
  CHECK(j["f_prefix"] == nlohmann::json({"7", "8", "9", "10"}));
  CHECK(j["schedule"]["stop"] == "complete");
  CHECK(j["schedule"]["entries"].size() == 4);
  CHECK(j["schedule"]["entries"][0]["case"] == "two");
  CHECK(j["schedule"]["entries"][0]["b"] == 0);
  CHECK(j["schedule"]["entries"][0]["n"] == 1);
  CHECK(j["schedule"]["entries"][0]["z"] == "8");
  CHECK(j["schedule"]["entries"][1]["case"] == "one");

  nlohmann::json fail_j = nlohmann::json::parse(to_json(verify_claim(worked())));
  CHECK(fail_j["status"] == "fuel_exhausted");
  CHECK(fail_j["schedule"]["note"].get<std::string>().find("step 2") != std::string::npos);

  nlohmann::json sj = nlohmann::json::parse(to_json(schedule(worked(), Budget{}, GuardPolicy::Extend)));
  CHECK(sj["entries"].size() == 4);
  CHECK(sj["stop"] == "complete");
}

TEST_CASE("parse_sequence_text") {
  DescendingSequence s = parse_sequence_text(
      "# a comment\n"
      "alpha: 1\n"
      "\n"
      "w   # head\n"
      "5\n"
      "3\n"
      "1\n"
      "0\n");
  CHECK(s.alpha == o("1"));
  REQUIRE(s.entries.size() == 5);
  CHECK(s.entries[0] == o("w"));
  CHECK(s.entries[4] == Ordinal{});

  // no trailing newline, extra spaces around the header value
  DescendingSequence t = parse_sequence_text("alpha:  2 \nw^2\nw\n0");
  CHECK(t.alpha == o("2"));
  CHECK(t.entries.size() == 3);

  CHECK_THROWS_AS(parse_sequence_text(""), ParseError);
  CHECK_THROWS_AS(parse_sequence_text("# only comments\n"), ParseError);
  CHECK_THROWS_AS(parse_sequence_text("w\n5\n"), ParseError);

  // offsets are anchored to the whole text, not the line
  try {
    parse_sequence_text("alpha: 1\nw\n5!\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 12);  // the '!' inside the third line
  }
}

TEST_CASE("load_sequence_file") {
  std::string path = "/tmp/fgh_test_seq_" + std::to_string(::getpid()) + ".seq";
  {
    std::ofstream out(path);
    out << "alpha: 1\nw\n2\n1\n0\n";
  }
  DescendingSequence s = load_sequence_file(path);
  CHECK(s.entries.size() == 4);
  ClaimReport rep = verify_claim(s, Budget{}, GuardPolicy::Extend);
  CHECK(rep.status == ClaimStatus::AllVerified);
  CHECK(rep.checks.size() == 3);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_sequence_file("/nonexistent/nope.seq"), Error);
}
