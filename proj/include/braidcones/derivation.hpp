#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "braidcones/word.hpp"

namespace braidcones {

/// How a word entered the prospective cone.
enum class Rule : std::uint8_t { Seed, Branch, Product, ConjGen, Forward, Inverse };

const char* rule_name(Rule r);  // "seed", "branch", "product", "conj_gen", ...
std::optional<Rule> rule_from_name(std::string_view s);

/// Compact in-engine derivation record; parents are indices into the cone's
/// insertion order (parents always live in P, never in the overflow set).
struct Derivation {
  Rule rule = Rule::Seed;
  Letter generator = 0;  // ConjGen only: the signed conjugating letter
  std::uint32_t parent_a = 0;
  std::uint32_t parent_b = 0;  // Product only
};

/// One replayable certificate step, parents spelled out by value. Replaying
/// the rule on the args must yield exactly `result`.
struct ChainStep {
  Rule rule = Rule::Seed;
  Letter generator = 0;  // ConjGen only
  Word arg_a, arg_b;     // Product: both; ConjGen/Forward/Inverse: arg_a
  Word result;
  bool operator==(const ChainStep&) const = default;
};

}  // namespace braidcones
