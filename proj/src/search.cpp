#include "braidcones/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <stdexcept>
#include <utility>

namespace braidcones {

namespace {

struct EngineContext {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::size_t> max_cone{0};
};

void note_cone_size(EngineContext& ctx, std::size_t size) {
  std::size_t seen = ctx.max_cone.load(std::memory_order_relaxed);
  while (seen < size &&
         !ctx.max_cone.compare_exchange_weak(seen, size,
                                             std::memory_order_relaxed)) {
  }
}

struct EngineResult {
  bool found_precone = false;
  std::unique_ptr<ProofNode> tree;  // set when found_precone is false
};

std::unique_ptr<ProofNode> contradiction_node(const ConeState& state) {
  const ContradictionWitness& c = state.contradiction();
  return ProofNode::contradiction(c.witness, state.extract_chain(c.witness),
                                  state.extract_chain(c.witness_inverse));
}

/// Depth-first exploration with an explicit stack; backtracking rolls the
/// single state back instead of copying it per node.
EngineResult explore_sequential(ConeState& state, EngineContext& ctx) {
  struct Frame {
    ConeState::Mark mark;
    Word alpha;
    bool on_inverse = false;
    std::unique_ptr<ProofNode> first_child;
  };
  std::vector<Frame> stack;

  for (;;) {
    ctx.nodes.fetch_add(1, std::memory_order_relaxed);
    state.saturate();
    note_cone_size(ctx, state.cone_size());

    if (!state.contradicted()) {
      auto alpha = state.next_undecided();
      if (!alpha) {
        // Total and closed: P is itself a preserved cone. Unwind fully; the
        // recursive "or" short-circuits all pending inverse branches.
        return EngineResult{true, nullptr};
      }
      stack.push_back(Frame{state.mark(), *alpha, false, nullptr});
      state.add_branch(*alpha);
      continue;
    }

    std::unique_ptr<ProofNode> refuted = contradiction_node(state);
    for (;;) {
      if (stack.empty()) return EngineResult{false, std::move(refuted)};
      Frame& top = stack.back();
      if (!top.on_inverse) {
        state.rollback(top.mark);
        top.first_child = std::move(refuted);
        top.on_inverse = true;
        state.add_branch(inv(top.alpha));
        break;
      }
      refuted = ProofNode::branch(top.alpha, std::move(top.first_child),
                                  std::move(refuted));
      state.rollback(top.mark);
      stack.pop_back();
    }
  }
}

/// Forks the two branches of the first `fork_levels` tree levels onto
/// separate threads. Both children always run to completion, so the combined
/// verdict and tree are identical to the sequential ones.
EngineResult explore(ConeState state, EngineContext& ctx, int fork_levels) {
  if (fork_levels <= 0) return explore_sequential(state, ctx);

  ctx.nodes.fetch_add(1, std::memory_order_relaxed);
  state.saturate();
  note_cone_size(ctx, state.cone_size());
  if (state.contradicted()) {
    return EngineResult{false, contradiction_node(state)};
  }
  auto alpha = state.next_undecided();
  if (!alpha) return EngineResult{true, nullptr};

  ConeState inverse_state = state;
  inverse_state.add_branch(inv(*alpha));
  auto future = std::async(
      std::launch::async,
      [&ctx, fork_levels](ConeState st) {
        return explore(std::move(st), ctx, fork_levels - 1);
      },
      std::move(inverse_state));

  state.add_branch(*alpha);
  EngineResult with_alpha = explore(std::move(state), ctx, fork_levels - 1);
  EngineResult with_inverse = future.get();

  if (with_alpha.found_precone) return with_alpha;
  if (with_inverse.found_precone) return with_inverse;
  return EngineResult{false,
                      ProofNode::branch(*alpha, std::move(with_alpha.tree),
                                        std::move(with_inverse.tree))};
}

int fork_levels_for(int threads) {
  int levels = 0;
  while ((1 << (levels + 1)) <= threads) ++levels;
  return levels;
}

SearchResult run_search(const BraidWord& braid, std::vector<Word> seed, int k,
                        BallMode mode, const SearchOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = braid.strands;
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (seed.empty()) throw std::invalid_argument("seed must be nonempty");

  FreeAutomorphism forward = FreeAutomorphism::from_braid(braid);
  FreeAutomorphism inverse = FreeAutomorphism::from_braid(invert(braid));
  Word conj_forward = Word::identity(n);
  Word conj_inverse = Word::identity(n);
  if (options.inner_reduction) {
    InnerReduction rf = inner_reduce(forward);
    forward = std::move(rf.autom);
    conj_forward = std::move(rf.conjugator);
    InnerReduction ri = inner_reduce(inverse);
    inverse = std::move(ri.autom);
    conj_inverse = std::move(ri.conjugator);
  }

  const WordBall ball = enumerate_ball(n, k, mode, options.ball_cap);
  ConeOptions cone_opts;
  cone_opts.strict_paper_mode = options.strict_paper_mode;
  cone_opts.member_cap = std::max(options.ball_cap, ball.members.size());
  ConeState state(k, mode, forward, inverse, &ball, cone_opts);

  std::sort(seed.begin(), seed.end(), shortlex_less);
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  for (const Word& w : seed) state.add_seed(w);

  EngineContext ctx;
  EngineResult result =
      explore(std::move(state), ctx, fork_levels_for(options.threads));

  SearchResult out;
  out.verdict = result.found_precone ? Verdict::PreconeFound : Verdict::NoPrecone;
  out.k = k;
  out.stats.nodes = ctx.nodes.load();
  out.stats.max_cone_size = ctx.max_cone.load();
  out.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  if (!result.found_precone) {
    Certificate cert;
    cert.braid = braid;
    cert.k = k;
    cert.seed = std::move(seed);
    cert.conj_forward = std::move(conj_forward);
    cert.conj_inverse = std::move(conj_inverse);
    cert.root = std::move(result.tree);
    cert.metadata = CertificateMetadata{mode, options.inner_reduction,
                                        options.strict_paper_mode};
    out.certificate = std::move(cert);
  }
  return out;
}

}  // namespace

SearchResult preserve_precone(const BraidWord& braid, std::vector<Word> seed,
                              int k, const SearchOptions& options) {
  return run_search(braid, std::move(seed), k, BallMode::All, options);
}

SearchResult mod_preserve_precone(const BraidWord& braid,
                                  std::vector<Word> seed, int k,
                                  const SearchOptions& options) {
  return run_search(braid, std::move(seed), k, BallMode::ZeroSum, options);
}

DriverResult obstruct(const BraidWord& braid, int max_k,
                      std::vector<Word> seed, BallMode mode,
                      const SearchOptions& options) {
  if (max_k < 1) throw std::invalid_argument("max_k must be >= 1");
  const int n = braid.strands;
  if (seed.empty()) {
    seed.push_back(mode == BallMode::ZeroSum
                       ? Word::reduce(n, {-1, 2})
                       : Word::generator(n, 1));
  }
  int min_len = 1;
  if (mode == BallMode::All) {
    for (const Word& w : seed) min_len = std::max(min_len, w.length());
  }

  DriverResult out;
  auto accumulate = [&out](const SearchResult& r) {
    out.stats.nodes += r.stats.nodes;
    out.stats.max_cone_size =
        std::max(out.stats.max_cone_size, r.stats.max_cone_size);
    out.stats.wall_ms += r.stats.wall_ms;
  };
  auto run = [&](int k, const SearchOptions& opts) {
    return mode == BallMode::ZeroSum
               ? mod_preserve_precone(braid, seed, k, opts)
               : preserve_precone(braid, seed, k, opts);
  };
  for (int k = min_len; k <= max_k; ++k) {
    out.k = k;
    SearchResult r;
    try {
      r = run(k, options);
    } catch (ResourceLimitError& e) {
      e.k_reached = k;
      throw;
    }
    accumulate(r);
    if (r.verdict == Verdict::NoPrecone) {
      out.proven_not_order_preserving = true;
      out.certificate = std::move(r.certificate);
      return out;
    }
    // The shortened and the raw action can each reach contradictions the
    // other only finds at a larger radius, and either refutation is sound,
    // so give the raw action a second opinion at this radius. A raw run
    // that outgrows the member cap is abandoned, not an error.
    if (options.inner_reduction) {
      SearchOptions raw = options;
      raw.inner_reduction = false;
      try {
        SearchResult r2 = run(k, raw);
        accumulate(r2);
        if (r2.verdict == Verdict::NoPrecone) {
          out.proven_not_order_preserving = true;
          out.certificate = std::move(r2.certificate);
          return out;
        }
      } catch (const ResourceLimitError&) {
      }
    }
  }
  return out;
}

}  // namespace braidcones
