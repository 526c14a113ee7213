#include "braidcones/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "braidcones/autom.hpp"
#include "braidcones/errors.hpp"
#include "braidcones/search.hpp"

namespace braidcones {

namespace {

struct PairSpace {
  WordBall ball;  // mode ball
  std::unordered_map<Word, std::uint32_t, WordHash> index;
  std::vector<std::uint32_t> pair_of;
  std::vector<std::uint8_t> side;  // 0 for the first-seen pair member
  std::uint32_t pairs = 0;
};

PairSpace build_pair_space(int n, int k, BallMode mode, std::size_t pair_cap) {
  PairSpace ps;
  ps.ball = enumerate_ball(n, k, mode);
  const auto& members = ps.ball.members;
  for (std::uint32_t i = 0; i < members.size(); ++i) {
    ps.index.emplace(members[i], i);
  }
  ps.pair_of.assign(members.size(), 0);
  ps.side.assign(members.size(), 0);
  std::vector<bool> seen(members.size(), false);
  for (std::uint32_t i = 0; i < members.size(); ++i) {
    if (seen[i]) continue;
    const std::uint32_t j = ps.index.at(inv(members[i]));
    ps.pair_of[i] = ps.pairs;
    ps.side[i] = 0;
    ps.pair_of[j] = ps.pairs;
    ps.side[j] = 1;
    seen[i] = seen[j] = true;
    ++ps.pairs;
  }
  if (ps.pairs > pair_cap) {
    throw ResourceLimitError(
        "oracle refuses " + std::to_string(ps.pairs) +
            " inverse pairs (cap " + std::to_string(pair_cap) + ")",
        k);
  }
  return ps;
}

struct BinaryConstraint { std::uint32_t a, b, c; };  // a,b in Q => c in Q
struct UnaryConstraint { std::uint32_t a, c; };      // a in Q => c in Q

struct ConstraintTables {
  std::vector<BinaryConstraint> products;
  std::vector<UnaryConstraint> conjugates;
  std::vector<UnaryConstraint> actions;  // preservation, possibly two-sided
};

ConstraintTables build_axiom_constraints(const PairSpace& ps, int n, int k) {
  ConstraintTables t;
  const auto& members = ps.ball.members;
  for (std::uint32_t i = 0; i < members.size(); ++i) {
    for (std::uint32_t j = 0; j < members.size(); ++j) {
      Word p = mul(members[i], members[j]);
      if (p.is_identity()) continue;  // i and j are an inverse pair
      if (auto it = ps.index.find(p); it != ps.index.end()) {
        t.products.push_back({i, j, it->second});
      }
    }
  }
  // Conjugators range over the full ball W_k in both modes.
  const WordBall full = enumerate_ball(n, k, BallMode::All);
  std::vector<UnaryConstraint> conj_raw;
  for (const Word& g : full.members) {
    for (std::uint32_t i = 0; i < members.size(); ++i) {
      Word c = conj(members[i], g);
      if (c == members[i]) continue;
      if (auto it = ps.index.find(c); it != ps.index.end()) {
        conj_raw.push_back({i, it->second});
      }
    }
  }
  std::sort(conj_raw.begin(), conj_raw.end(),
            [](const UnaryConstraint& x, const UnaryConstraint& y) {
              return x.a != y.a ? x.a < y.a : x.c < y.c;
            });
  conj_raw.erase(std::unique(conj_raw.begin(), conj_raw.end(),
                             [](const UnaryConstraint& x,
                                const UnaryConstraint& y) {
                               return x.a == y.a && x.c == y.c;
                             }),
                 conj_raw.end());
  t.conjugates = std::move(conj_raw);
  return t;
}

void add_action_constraints(ConstraintTables& t, const PairSpace& ps,
                            const FreeAutomorphism& a) {
  const auto& members = ps.ball.members;
  for (std::uint32_t i = 0; i < members.size(); ++i) {
    Word im = a.apply(members[i]);
    if (auto it = ps.index.find(im); it != ps.index.end()) {
      if (it->second != i) t.actions.push_back({i, it->second});
    }
  }
}

ConeCensus run_census(int n, int k, BallMode mode,
                      const std::optional<BraidWord>& braid,
                      const std::optional<Word>& require, bool two_sided,
                      std::size_t pair_cap, bool collect_witnesses) {
  PairSpace ps = build_pair_space(n, k, mode, pair_cap);
  ConstraintTables t = build_axiom_constraints(ps, n, k);
  if (braid) {
    add_action_constraints(t, ps, FreeAutomorphism::from_braid(*braid));
    if (two_sided) {
      add_action_constraints(t, ps, FreeAutomorphism::from_braid(invert(*braid)));
    }
  }

  std::optional<std::uint32_t> require_idx;
  if (require) {
    auto it = ps.index.find(*require);
    if (it == ps.index.end()) {
      throw std::invalid_argument("required word '" + require->str() +
                                  "' is not in the ball");
    }
    require_idx = it->second;
  }

  ConeCensus census{n, k, mode, 0, 0, {}};
  const std::uint64_t assignments = std::uint64_t{1} << ps.pairs;
  for (std::uint64_t mask = 0; mask < assignments; ++mask) {
    auto member = [&](std::uint32_t i) {
      return ((mask >> ps.pair_of[i]) & 1) == ps.side[i];
    };
    if (require_idx && !member(*require_idx)) continue;
    bool axioms = true;
    for (const auto& c : t.products) {
      if (member(c.a) && member(c.b) && !member(c.c)) { axioms = false; break; }
    }
    if (axioms) {
      for (const auto& c : t.conjugates) {
        if (member(c.a) && !member(c.c)) { axioms = false; break; }
      }
    }
    if (!axioms) continue;
    ++census.total;
    bool kept = true;
    for (const auto& c : t.actions) {
      if (member(c.a) && !member(c.c)) { kept = false; break; }
    }
    if (!kept) continue;
    ++census.preserved;
    if (collect_witnesses) {
      std::vector<Word> cone;
      for (std::uint32_t i = 0; i < ps.ball.members.size(); ++i) {
        if (member(i)) cone.push_back(ps.ball.members[i]);
      }
      census.witnesses.push_back(std::move(cone));
    }
  }
  return census;
}

}  // namespace

ConeCensus enumerate_cones(int n, int k, BallMode mode, std::size_t pair_cap,
                           bool collect_witnesses) {
  return run_census(n, k, mode, std::nullopt, std::nullopt, true, pair_cap,
                    collect_witnesses);
}

ConeCensus enumerate_preserved(const BraidWord& braid, int n, int k,
                               BallMode mode,
                               const std::optional<Word>& require,
                               bool two_sided, std::size_t pair_cap,
                               bool collect_witnesses) {
  if (braid.strands != n) {
    throw std::invalid_argument("braid strand count does not match n");
  }
  return run_census(n, k, mode, braid, require, two_sided, pair_cap,
                    collect_witnesses);
}

bool is_precone(std::span<const Word> cone, int n, int k, BallMode mode) {
  const WordBall ball = enumerate_ball(n, k, mode);
  std::unordered_map<Word, bool, WordHash> in_cone;
  for (const Word& w : cone) {
    if (w.is_identity()) return false;
    if (w.length() > k) return false;
    if (mode == BallMode::ZeroSum && w.exponent_sum() != 0) return false;
    if (!in_cone.emplace(w, true).second) return false;  // duplicate
  }
  auto member = [&](const Word& w) { return in_cone.contains(w); };
  // Partition: each ball member lies in exactly one of Q, Q^-1.
  for (const Word& w : ball.members) {
    if (member(w) == member(inv(w))) return false;
  }
  // In-ball products and conjugates stay inside.
  const WordBall full = enumerate_ball(n, k, BallMode::All);
  for (const Word& a : cone) {
    for (const Word& b : cone) {
      Word p = mul(a, b);
      if (p.is_identity()) return false;
      if (p.length() <= k && (mode == BallMode::All || p.exponent_sum() == 0) &&
          !member(p)) {
        return false;
      }
    }
    for (const Word& g : full.members) {
      Word c = conj(a, g);
      if (c.length() <= k && !member(c)) return false;
    }
  }
  return true;
}

std::size_t inverse_pair_count(int n, int k, BallMode mode) {
  return enumerate_ball(n, k, mode).members.size() / 2;
}

CrosscheckReport crosscheck(const BraidWord& braid, int n, int k,
                            std::size_t pair_cap) {
  CrosscheckReport report;
  SearchOptions strict;
  strict.inner_reduction = false;
  strict.strict_paper_mode = true;

  const Word x1 = Word::generator(n, 1);
  if (inverse_pair_count(n, k, BallMode::All) <= pair_cap) {
    ConeCensus census = enumerate_preserved(braid, n, k, BallMode::All, x1,
                                            /*two_sided=*/true, pair_cap,
                                            /*collect_witnesses=*/false);
    SearchResult search = preserve_precone(braid, {x1}, k, strict);
    report.all_mode_compared = true;
    report.all_search_found = search.verdict == Verdict::PreconeFound;
    report.all_census_nonempty = census.preserved > 0;
    if (report.all_search_found != report.all_census_nonempty) {
      report.ok = false;
    }
  }

  const Word seed = Word::reduce(n, {-1, 2});
  if (inverse_pair_count(n, k, BallMode::ZeroSum) <= pair_cap) {
    std::optional<Word> require;
    if (seed.length() <= k) require = seed;
    ConeCensus census = enumerate_preserved(braid, n, k, BallMode::ZeroSum,
                                            require, /*two_sided=*/true,
                                            pair_cap,
                                            /*collect_witnesses=*/false);
    SearchResult search = mod_preserve_precone(braid, {seed}, k, strict);
    report.zero_mode_compared = true;
    report.zero_search_found = search.verdict == Verdict::PreconeFound;
    report.zero_census_nonempty = census.preserved > 0;
    if (report.zero_search_found != report.zero_census_nonempty) {
      report.ok = false;
    }
  }
  return report;
}

}  // namespace braidcones
