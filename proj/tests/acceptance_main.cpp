// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria run against the library; where noted they also
// drive the installed binaries (paths in BRAIDCONES_CLI / BRAIDCONES_VERIFY).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braidcones/certificate.hpp"
#include "braidcones/cone.hpp"
#include "braidcones/family.hpp"
#include "braidcones/oracle.hpp"
#include "braidcones/search.hpp"
#include "json.hpp"

using namespace braidcones;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int run_command(const std::string& command, std::string* out = nullptr) {
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return -1;
  char buffer[4096];
  std::string collected;
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
    collected.append(buffer, n);
  }
  int status = pclose(pipe);
  if (out) *out = collected;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* env_cli() { return std::getenv("BRAIDCONES_CLI"); }
const char* env_verify() { return std::getenv("BRAIDCONES_VERIFY"); }

// ---------------------------------------------------------------------------
// 1. Headline reproduction: s1 s2^-3 refuted at k = 4 (3..5 tolerated), < 60 s.

Outcome criterion1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto r = obstruct(parse_braid("s1 s2^-3"), 6);
  double secs = seconds_since(t0);
  if (!r.proven_not_order_preserving) {
    return {false, "verdict was inconclusive"};
  }
  if (r.k < 3 || r.k > 5) {
    return {false, "refuted at k = " + std::to_string(r.k) +
                       ", outside the 3..5 tolerance"};
  }
  if (secs >= 60.0) {
    return {false, "took " + std::to_string(secs) + " s"};
  }
  if (!verify(*r.certificate).ok) return {false, "certificate did not verify"};
  o.detail = "k = " + std::to_string(r.k) + ", " + std::to_string(secs) + " s";
  if (env_cli()) {
    std::string out;
    int code = run_command(std::string(env_cli()) +
                               " obstruct \"s1 s2^-3\" --max-k 6",
                           &out);
    if (code != 0) return {false, "CLI exit code " + std::to_string(code)};
    auto report = json::parse(out);
    if (report.at("k").get<int>() != r.k) {
      return {false, "CLI disagrees on k"};
    }
    o.detail += ", CLI exit 0";
  }
  return o;
}

// ---------------------------------------------------------------------------
// 2. Family theorem at desk scale: s1 s2^{2m+1} refuted for m in -3..2 within
//    max_k = 8 and 10 minutes each; replay_family_proof on -8..8 in < 1 s.

Outcome criterion2() {
  std::string detail;
  for (int m = -3; m <= 2; ++m) {
    int exponent = 2 * m + 1;
    std::vector<Letter> letters{1};
    for (int i = 0; i < (exponent > 0 ? exponent : -exponent); ++i) {
      letters.push_back(exponent > 0 ? 2 : -2);
    }
    auto t0 = std::chrono::steady_clock::now();
    auto r = obstruct(make_braid(3, letters), 8);
    double secs = seconds_since(t0);
    if (!r.proven_not_order_preserving) {
      return {false, "m = " + std::to_string(m) + " not refuted by k = 8"};
    }
    if (secs >= 600.0) {
      return {false, "m = " + std::to_string(m) + " took " +
                         std::to_string(secs) + " s"};
    }
    if (!verify(*r.certificate).ok) {
      return {false, "m = " + std::to_string(m) + " certificate invalid"};
    }
    detail += "m=" + std::to_string(m) + ":k" + std::to_string(r.k) + " ";
  }
  auto t0 = std::chrono::steady_clock::now();
  for (int m = -8; m <= 8; ++m) {
    auto replay = replay_family_proof(m);
    if (!replay.ok) {
      return {false,
              "replay failed at m = " + std::to_string(m) + ": " + replay.failing};
    }
  }
  double replay_secs = seconds_since(t0);
  if (replay_secs >= 1.0) {
    return {false, "replay of m in -8..8 took " + std::to_string(replay_secs) +
                       " s"};
  }
  return {true, detail + "replay(-8..8) " + std::to_string(replay_secs) + " s"};
}

// ---------------------------------------------------------------------------
// 3. Known order-preserving control: s1 s2^-2 finds a cone at every k <= 4.

Outcome criterion3() {
  auto braid = parse_braid("s1 s2^-2");
  std::vector<Word> seed{Word::reduce(3, {-1, 2})};
  for (int k = 1; k <= 4; ++k) {
    for (bool inner : {true, false}) {
      SearchOptions opts;
      opts.inner_reduction = inner;
      auto r = mod_preserve_precone(braid, seed, k, opts);
      if (r.verdict != Verdict::PreconeFound) {
        return {false, "false refutation at k = " + std::to_string(k) +
                           (inner ? " (reduced action)" : " (raw action)")};
      }
    }
  }
  auto driver = obstruct(braid, 4);
  if (driver.proven_not_order_preserving) {
    return {false, "driver falsely refuted the control braid"};
  }
  return {true, "cones found at k = 1..4 with both actions"};
}

// ---------------------------------------------------------------------------
// 4. Certificate integrity: emitted certificates verify; 20 single-field
//    mutations of the golden certificate all fail verification.

bool mutation_fails(const json& mutated) {
  try {
    Certificate c = deserialize_certificate(mutated.dump());
    return !verify(c).ok;
  } catch (const std::exception&) {
    return true;  // malformed counts as failing verification
  }
}

json* find_step(json& node, const std::string& rule) {
  if (node.at("type") == "branch") {
    if (auto* s = find_step(node.at("with_alpha"), rule)) return s;
    return find_step(node.at("with_alpha_inverse"), rule);
  }
  for (auto* chain : {&node.at("chain_witness"), &node.at("chain_inverse")}) {
    for (auto& step : *chain) {
      if (step.at("rule") == rule) return &step;
    }
  }
  return nullptr;
}

json* find_leaf(json& node) {
  if (node.at("type") == "contradiction") return &node;
  return find_leaf(node.at("with_alpha"));
}

Outcome criterion4() {
  auto r = obstruct(parse_braid("s1 s2^-3"), 6);
  if (!r.proven_not_order_preserving) return {false, "no golden certificate"};
  const std::string golden_text = serialize(*r.certificate);
  if (!verify(*r.certificate).ok) return {false, "golden does not verify"};

  if (env_cli() && env_verify()) {
    std::ofstream("/tmp/braidcones_acc_golden.json") << golden_text;
    if (run_command(std::string(env_verify()) +
                    " /tmp/braidcones_acc_golden.json") != 0) {
      return {false, "standalone verifier rejected the golden certificate"};
    }
  }

  const json golden = json::parse(golden_text);
  std::vector<std::pair<std::string, std::function<void(json&)>>> mutations;
  auto add = [&](const std::string& name, std::function<void(json&)> fn) {
    mutations.emplace_back(name, std::move(fn));
  };
  add("braid letter sign flip", [](json& j) { j["braid"][1] = 2; });
  add("braid letter appended", [](json& j) { j["braid"].push_back(-2); });
  add("braid letter removed", [](json& j) { j["braid"].erase(3); });
  add("strand count below the braid letters", [](json& j) { j["strands"] = 2; });
  add("k lowered below a branch word", [](json& j) { j["k"] = 3; });
  add("seed word changed", [](json& j) { j["seed"][0] = json::array({-1, 3}); });
  add("seed list emptied", [](json& j) { j["seed"] = json::array(); });
  add("forward conjugator changed",
      [](json& j) { j["inner_conjugators"][0] = json::array({1}); });
  add("inverse conjugator changed",
      [](json& j) { j["inner_conjugators"][1] = json::array({2}); });
  add("root branch word changed",
      [](json& j) { j["tree"]["alpha"] = json::array({1, -2}); });
  add("children swapped", [](json& j) {
    std::swap(j["tree"]["with_alpha"], j["tree"]["with_alpha_inverse"]);
  });
  add("leaf witness changed", [](json& j) {
    json& leaf = *find_leaf(j["tree"]);
    json w = leaf["witness"];
    w[0] = w[0].get<int>() > 0 ? w[0].get<int>() + 1 : w[0].get<int>() - 1;
    leaf["witness"] = w;
  });
  add("chain step result tampered", [](json& j) {
    json& step = *find_step(j["tree"], "product");
    step["result"].push_back(step["result"].back().get<int>());
  });
  add("chain step argument swapped", [](json& j) {
    json& step = *find_step(j["tree"], "product");
    step["args"][0] = json::array({3, 3, 3});
  });
  add("rule string swapped", [](json& j) {
    json& step = *find_step(j["tree"], "product");
    step["rule"] = "conj_gen";
  });
  add("chain emptied", [](json& j) {
    find_leaf(j["tree"])->at("chain_witness") = json::array();
  });
  add("inverse chain final result tampered", [](json& j) {
    json& leaf = *find_leaf(j["tree"]);
    leaf["chain_inverse"].back()["result"] = json::array({1, 2, 3});
  });
  add("conjugating letter flipped", [](json& j) {
    json& step = *find_step(j["tree"], "conj_gen");
    step["args"][0] = -step["args"][0].get<int>();
  });
  add("format version bumped", [](json& j) { j["format_version"] = 2; });
  add("node type corrupted", [](json& j) { j["tree"]["type"] = "contradiction"; });

  if (mutations.size() != 20) {
    return {false, "expected 20 mutations, have " +
                       std::to_string(mutations.size())};
  }
  for (auto& [name, fn] : mutations) {
    json mutated = golden;
    fn(mutated);
    if (mutated.dump() == golden.dump()) {
      return {false, "mutation '" + name + "' did not change the certificate"};
    }
    if (!mutation_fails(mutated)) {
      return {false, "mutation '" + name + "' still verifies"};
    }
  }
  return {true, "golden verifies; all 20 mutations rejected"};
}

// ---------------------------------------------------------------------------
// 5. Oracle equivalence over the braid suites, strict paper mode.

Outcome criterion5() {
  const char* suite3[] = {"s1",      "s1^-1",    "s1 s2",      "s1 s2^-1",
                          "s1 s2^-2", "s1 s2^-3", "s1^2 s2^-1", "s2 s1^-1",
                          "1",       "s1 s2 s1"};
  int compared = 0;
  for (int k = 1; k <= 3; ++k) {
    for (const char* text : suite3) {
      auto t0 = std::chrono::steady_clock::now();
      auto r = crosscheck(parse_braid(text, 3), 3, k);
      if (!r.ok) {
        return {false, std::string("mismatch at n=3 k=") + std::to_string(k) +
                           " braid " + text};
      }
      if (seconds_since(t0) >= 300.0) {
        return {false, std::string("n=3 case ") + text + " too slow"};
      }
      compared += (r.all_mode_compared ? 1 : 0) + (r.zero_mode_compared ? 1 : 0);
    }
  }
  // two strands: every braid is a power of s1
  for (int k = 1; k <= 4; ++k) {
    for (int e = -5; e <= 4; ++e) {
      std::vector<Letter> letters(static_cast<std::size_t>(e < 0 ? -e : e),
                                  e < 0 ? -1 : 1);
      auto t0 = std::chrono::steady_clock::now();
      auto r = crosscheck(make_braid(2, letters), 2, k);
      if (!r.ok) {
        return {false, "mismatch at n=2 k=" + std::to_string(k) +
                           " braid s1^" + std::to_string(e)};
      }
      if (seconds_since(t0) >= 300.0) {
        return {false, "n=2 case s1^" + std::to_string(e) + " too slow"};
      }
      compared += (r.all_mode_compared ? 1 : 0) + (r.zero_mode_compared ? 1 : 0);
    }
  }
  return {true, std::to_string(compared) + " search/census comparisons agree"};
}

// ---------------------------------------------------------------------------
// 6. Lemma property suites.

Outcome criterion6() {
  // exponent-sum invariance over 200 random (braid, word) pairs
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> blen(0, 8), wlen(0, 10),
      bgen(1, 2), sign(0, 1), wpos(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> letters;
    for (int i = 0, n = blen(rng); i < n; ++i) {
      letters.push_back(bgen(rng) * (sign(rng) ? 1 : -1));
    }
    auto a = FreeAutomorphism::from_braid(make_braid(3, letters));
    std::vector<Letter> wl;
    for (int i = 0, n = wlen(rng); i < n; ++i) {
      wl.push_back(letter_at_position(wpos(rng)));
    }
    Word w = Word::reduce(3, wl);
    if (a.apply(w).exponent_sum() != w.exponent_sum()) {
      return {false, "exponent sum not preserved"};
    }
  }

  // braid relations as automorphism identities for n <= 5
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      if (!(FreeAutomorphism::from_braid(make_braid(n, {i, i + 1, i})) ==
            FreeAutomorphism::from_braid(make_braid(n, {i + 1, i, i + 1})))) {
        return {false, "braid relation failed at n=" + std::to_string(n)};
      }
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        if (!(FreeAutomorphism::from_braid(make_braid(n, {i, j})) ==
              FreeAutomorphism::from_braid(make_braid(n, {j, i})))) {
          return {false, "far commutation failed at n=" + std::to_string(n)};
        }
      }
    }
  }

  // zerocone <-> precone correspondence on all oracle-feasible censuses
  for (int n : {2, 3}) {
    for (int k = 1; k <= 2; ++k) {
      for (const auto& cone : enumerate_cones(n, k, BallMode::All).witnesses) {
        std::vector<Word> restricted;
        for (const Word& w : cone) {
          if (w.exponent_sum() == 0) restricted.push_back(w);
        }
        if (!is_precone(restricted, n, k, BallMode::ZeroSum)) {
          return {false, "precone intersection is not a zerocone"};
        }
      }
      for (const auto& cone :
           enumerate_cones(n, k, BallMode::ZeroSum).witnesses) {
        if (!is_precone(pos_lift(cone, n, k), n, k, BallMode::All)) {
          return {false, "zerocone lift is not a precone"};
        }
      }
    }
  }
  for (const auto& cone : enumerate_cones(2, 4, BallMode::ZeroSum).witnesses) {
    if (!is_precone(pos_lift(cone, 2, 4), 2, 4, BallMode::All)) {
      return {false, "zerocone lift is not a precone at n=2 k=4"};
    }
  }

  // word counts against 2n(2n-1)^{k-1} at n = 3, k <= 6
  std::uint64_t expected_layer = 6;
  std::uint64_t expected_total = 0;
  for (int k = 1; k <= 6; ++k) {
    expected_total += expected_layer;
    auto ball = enumerate_ball(3, k, BallMode::All);
    if (ball.members.size() != expected_total) {
      return {false, "ball count mismatch at k = " + std::to_string(k)};
    }
    expected_layer *= 5;
  }
  return {true, "exp-sum, braid relations, cone lifts, ball counts"};
}

// ---------------------------------------------------------------------------
// 7. Determinism: byte-identical certificates across reruns and threads.

Outcome criterion7() {
  auto r1 = obstruct(parse_braid("s1 s2^-3"), 6);
  auto r2 = obstruct(parse_braid("s1 s2^-3"), 6);
  if (!r1.proven_not_order_preserving || !r2.proven_not_order_preserving) {
    return {false, "refutation missing"};
  }
  if (serialize(*r1.certificate) != serialize(*r2.certificate)) {
    return {false, "two sequential runs differ"};
  }
  SearchOptions threaded;
  threaded.threads = 4;
  auto r4 = obstruct(parse_braid("s1 s2^-3"), 6, {}, BallMode::ZeroSum, threaded);
  if (serialize(*r4.certificate) != serialize(*r1.certificate)) {
    return {false, "threads=4 differs from threads=1"};
  }
  std::string detail = "library runs byte-identical";
  if (env_cli()) {
    int c1 = run_command(std::string(env_cli()) +
                         " obstruct \"s1 s2^-3\" --max-k 6 --emit-proof "
                         "/tmp/braidcones_acc_t1.json");
    int c4 = run_command(std::string(env_cli()) +
                         " obstruct \"s1 s2^-3\" --max-k 6 --threads 4 "
                         "--emit-proof /tmp/braidcones_acc_t4.json");
    if (c1 != 0 || c4 != 0) return {false, "CLI runs failed"};
    if (read_file("/tmp/braidcones_acc_t1.json") !=
            read_file("/tmp/braidcones_acc_t4.json") ||
        read_file("/tmp/braidcones_acc_t1.json").empty()) {
      return {false, "CLI certificates differ across thread counts"};
    }
    detail += "; CLI files byte-identical";
  }
  return {true, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "headline reproduction (s1 s2^-3 at k = 4)", criterion1},
      {2, "family theorem at desk scale", criterion2},
      {3, "order-preserving control is never refuted", criterion3},
      {4, "certificate integrity under mutation", criterion4},
      {5, "oracle equivalence (strict paper mode)", criterion5},
      {6, "lemma property suites", criterion6},
      {7, "determinism across runs and threads", criterion7},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("CRITERION %d [%s] %s — %s\n", c.number,
                o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
