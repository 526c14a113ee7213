#include "braidcones/cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidcones {

ConeState::ConeState(int radius, BallMode mode, FreeAutomorphism forward,
                     FreeAutomorphism inverse, const WordBall* ball,
                     ConeOptions opts)
    : radius_(radius),
      mode_(mode),
      forward_(std::move(forward)),
      inverse_(std::move(inverse)),
      ball_(ball),
      opts_(opts) {
  if (radius_ < 1) throw std::invalid_argument("radius must be >= 1");
  if (forward_.rank() != inverse_.rank()) {
    throw std::invalid_argument("forward/inverse rank mismatch");
  }
  if (ball_ == nullptr || ball_->radius != radius_ || ball_->mode != mode_ ||
      ball_->rank != forward_.rank()) {
    throw std::invalid_argument("ball does not match the cone parameters");
  }
  if (mode_ == BallMode::ZeroSum) {
    // Zero-sum closure relies on the actions preserving exponent sum, which
    // for automorphisms of this shape means generator images of sum one.
    for (const auto* a : {&forward_, &inverse_}) {
      for (int i = 1; i <= a->rank(); ++i) {
        if (a->image(i).exponent_sum() != 1) {
          throw std::invalid_argument(
              "zero-sum mode needs exponent-preserving actions; image of x" +
              std::to_string(i) + " has sum " +
              std::to_string(a->image(i).exponent_sum()));
        }
      }
    }
  }
}

bool ConeState::in_ball(const Word& w) const {
  if (w.length() > radius_) return false;
  return mode_ == BallMode::All || w.exponent_sum() == 0;
}

void ConeState::add_seed(const Word& w) {
  if (w.rank() != rank()) throw std::invalid_argument("seed rank mismatch");
  if (w.is_identity()) throw std::invalid_argument("identity seed");
  if (mode_ == BallMode::ZeroSum && w.exponent_sum() != 0) {
    throw std::invalid_argument("seed word '" + w.str() +
                                "' has nonzero exponent sum");
  }
  if (!in_ball(w) && mode_ == BallMode::All) {
    throw std::invalid_argument("seed word '" + w.str() +
                                "' does not fit in the radius-" +
                                std::to_string(radius_) + " ball");
  }
  insert(w, Derivation{Rule::Seed, 0, 0, 0});
}

void ConeState::add_branch(const Word& w) {
  insert(w, Derivation{Rule::Branch, 0, 0, 0});
}

void ConeState::record_pair(const Word& a, const Word& b) {
  if (compare_words(a, b) == std::strong_ordering::less) {
    contradiction_ = ContradictionWitness{a, b};
  } else {
    contradiction_ = ContradictionWitness{b, a};
  }
}

void ConeState::insert(const Word& w, const Derivation& d) {
  if (contradiction_) return;
  if (w.is_identity()) {
    // Images and conjugates of nonidentity words are nonidentity, so the
    // identity can only appear as the product of an inverse pair inside P.
    record_pair(p_order_[d.parent_a], p_order_[d.parent_b]);
    return;
  }
  const bool ball_member = in_ball(w);
  if (!ball_member && mode_ == BallMode::All) return;  // discard overflow
  auto& index = ball_member ? p_index_ : e_index_;
  auto& order = ball_member ? p_order_ : e_order_;
  auto& derivs = ball_member ? p_derivs_ : e_derivs_;
  if (index.contains(w)) return;  // first derivation wins
  if (p_order_.size() + e_order_.size() >= opts_.member_cap) {
    throw ResourceLimitError(
        "prospective cone exceeds the configured cap of " +
            std::to_string(opts_.member_cap) + " members",
        radius_);
  }
  index.emplace(w, static_cast<std::uint32_t>(order.size()));
  order.push_back(w);
  derivs.push_back(d);
  if (!opts_.strict_paper_mode) {
    Word w_inv = inv(w);
    if (p_index_.contains(w_inv) || e_index_.contains(w_inv)) {
      record_pair(w, w_inv);
    }
  }
}

void ConeState::saturate() {
  while (!contradiction_ && processed_ < p_order_.size()) {
    const std::uint32_t wi = processed_++;
    const Word w = p_order_[wi];  // by value: p_order_ may grow
    const std::size_t limit = p_order_.size();
    for (std::uint32_t j = 0; j < limit && !contradiction_; ++j) {
      const Word b = p_order_[j];  // by value: inserts may reallocate
      insert(mul(w, b), Derivation{Rule::Product, 0, wi, j});
      if (contradiction_) break;
      insert(mul(b, w), Derivation{Rule::Product, 0, j, wi});
    }
    if (contradiction_) break;
    for (int pos = 0; pos < 2 * rank() && !contradiction_; ++pos) {
      Letter l = letter_at_position(pos);
      insert(conj_by_letter(w, l), Derivation{Rule::ConjGen, l, wi, 0});
    }
    if (contradiction_) break;
    insert(forward_.apply(w), Derivation{Rule::Forward, 0, wi, 0});
    if (contradiction_) break;
    insert(inverse_.apply(w), Derivation{Rule::Inverse, 0, wi, 0});
  }
}

std::optional<Word> ConeState::next_undecided() {
  const auto& members = ball_->members;
  while (scan_ < members.size()) {
    const Word& w = members[scan_];
    if (p_index_.contains(w) || p_index_.contains(inv(w))) {
      ++scan_;
      continue;
    }
    return w;
  }
  return std::nullopt;
}

ConeState::Mark ConeState::mark() const {
  return Mark{static_cast<std::uint32_t>(p_order_.size()),
              static_cast<std::uint32_t>(e_order_.size()), processed_, scan_};
}

void ConeState::rollback(const Mark& m) {
  for (std::size_t i = m.p_size; i < p_order_.size(); ++i) {
    p_index_.erase(p_order_[i]);
  }
  p_order_.resize(m.p_size);
  p_derivs_.resize(m.p_size);
  for (std::size_t i = m.e_size; i < e_order_.size(); ++i) {
    e_index_.erase(e_order_[i]);
  }
  e_order_.resize(m.e_size);
  e_derivs_.resize(m.e_size);
  processed_ = m.processed;
  scan_ = m.scan;
  contradiction_.reset();
}

const Derivation* ConeState::find_derivation(const Word& w) const {
  if (auto it = p_index_.find(w); it != p_index_.end()) {
    return &p_derivs_[it->second];
  }
  if (auto it = e_index_.find(w); it != e_index_.end()) {
    return &e_derivs_[it->second];
  }
  return nullptr;
}

std::vector<ChainStep> ConeState::extract_chain(const Word& target) const {
  std::vector<ChainStep> chain;
  std::unordered_map<Word, bool, WordHash> emitted;
  // Post-order walk of the derivation DAG, parents emitted before children.
  struct Item { Word word; bool expanded; };
  std::vector<Item> stack{{target, false}};
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    if (emitted.contains(item.word)) continue;
    const Derivation* d = find_derivation(item.word);
    if (d == nullptr) {
      throw std::logic_error("no derivation recorded for '" + item.word.str() +
                             "'");
    }
    if (!item.expanded) {
      stack.push_back({item.word, true});
      switch (d->rule) {
        case Rule::Seed:
        case Rule::Branch:
          break;
        case Rule::Product:
          stack.push_back({p_order_[d->parent_b], false});
          stack.push_back({p_order_[d->parent_a], false});
          break;
        case Rule::ConjGen:
        case Rule::Forward:
        case Rule::Inverse:
          stack.push_back({p_order_[d->parent_a], false});
          break;
      }
      continue;
    }
    ChainStep step;
    step.rule = d->rule;
    step.result = item.word;
    switch (d->rule) {
      case Rule::Seed:
      case Rule::Branch:
        break;
      case Rule::Product:
        step.arg_a = p_order_[d->parent_a];
        step.arg_b = p_order_[d->parent_b];
        break;
      case Rule::ConjGen:
        step.generator = d->generator;
        step.arg_a = p_order_[d->parent_a];
        break;
      case Rule::Forward:
      case Rule::Inverse:
        step.arg_a = p_order_[d->parent_a];
        break;
    }
    emitted.emplace(item.word, true);
    chain.push_back(std::move(step));
  }
  return chain;
}

std::vector<Word> pos_lift(std::span<const Word> zerocone, int n, int k,
                           std::size_t ball_cap) {
  WordBall full = enumerate_ball(n, k, BallMode::All, ball_cap);
  std::vector<Word> out;
  for (const Word& w : full.members) {
    if (w.exponent_sum() > 0) out.push_back(w);
  }
  out.insert(out.end(), zerocone.begin(), zerocone.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace braidcones
