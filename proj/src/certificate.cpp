#include "braidcones/certificate.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "json.hpp"

namespace braidcones {

namespace {
using nlohmann::json;
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Seed: return "seed";
    case Rule::Branch: return "branch";
    case Rule::Product: return "product";
    case Rule::ConjGen: return "conj_gen";
    case Rule::Forward: return "forward";
    case Rule::Inverse: return "inverse";
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view s) {
  if (s == "seed") return Rule::Seed;
  if (s == "branch") return Rule::Branch;
  if (s == "product") return Rule::Product;
  if (s == "conj_gen") return Rule::ConjGen;
  if (s == "forward") return Rule::Forward;
  if (s == "inverse") return Rule::Inverse;
  return std::nullopt;
}

std::unique_ptr<ProofNode> ProofNode::branch(Word alpha,
                                             std::unique_ptr<ProofNode> with,
                                             std::unique_ptr<ProofNode> without) {
  auto node = std::make_unique<ProofNode>();
  node->kind = Kind::Branch;
  node->alpha = std::move(alpha);
  node->with_alpha = std::move(with);
  node->with_alpha_inverse = std::move(without);
  return node;
}

std::unique_ptr<ProofNode> ProofNode::contradiction(
    Word witness, std::vector<ChainStep> chain_witness,
    std::vector<ChainStep> chain_inverse) {
  auto node = std::make_unique<ProofNode>();
  node->kind = Kind::Contradiction;
  node->witness = std::move(witness);
  node->chain_witness = std::move(chain_witness);
  node->chain_inverse = std::move(chain_inverse);
  return node;
}

bool ProofNode::equals(const ProofNode& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Branch) {
    return alpha == o.alpha && with_alpha && o.with_alpha &&
           with_alpha->equals(*o.with_alpha) && with_alpha_inverse &&
           o.with_alpha_inverse &&
           with_alpha_inverse->equals(*o.with_alpha_inverse);
  }
  return witness == o.witness && chain_witness == o.chain_witness &&
         chain_inverse == o.chain_inverse;
}

bool Certificate::equals(const Certificate& o) const {
  if (!(braid == o.braid) || k != o.k || seed != o.seed ||
      !(conj_forward == o.conj_forward) || !(conj_inverse == o.conj_inverse) ||
      !(metadata == o.metadata)) {
    return false;
  }
  if (!root || !o.root) return root == nullptr && o.root == nullptr;
  return root->equals(*o.root);
}

namespace {

json word_to_json(const Word& w) { return json(w.letters()); }

Word word_from_json(const json& j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("word must be an array");
  std::vector<Letter> letters;
  letters.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw std::invalid_argument("word letters must be integers");
    }
    letters.push_back(e.get<int>());
  }
  return Word::from_reduced(rank, letters);
}

json step_to_json(const ChainStep& s) {
  json args = json::array();
  switch (s.rule) {
    case Rule::Seed:
    case Rule::Branch:
      break;
    case Rule::Product:
      args.push_back(word_to_json(s.arg_a));
      args.push_back(word_to_json(s.arg_b));
      break;
    case Rule::ConjGen:
      args.push_back(s.generator);
      args.push_back(word_to_json(s.arg_a));
      break;
    case Rule::Forward:
    case Rule::Inverse:
      args.push_back(word_to_json(s.arg_a));
      break;
  }
  return json{{"rule", rule_name(s.rule)},
              {"args", std::move(args)},
              {"result", word_to_json(s.result)}};
}

ChainStep step_from_json(const json& j, int rank) {
  ChainStep s;
  auto rule = rule_from_name(j.at("rule").get<std::string>());
  if (!rule) {
    throw std::invalid_argument("unknown rule '" +
                                j.at("rule").get<std::string>() + "'");
  }
  s.rule = *rule;
  const json& args = j.at("args");
  if (!args.is_array()) throw std::invalid_argument("step args must be an array");
  switch (s.rule) {
    case Rule::Seed:
    case Rule::Branch:
      if (!args.empty()) throw std::invalid_argument("seed/branch take no args");
      break;
    case Rule::Product:
      if (args.size() != 2) throw std::invalid_argument("product takes two args");
      s.arg_a = word_from_json(args[0], rank);
      s.arg_b = word_from_json(args[1], rank);
      break;
    case Rule::ConjGen:
      if (args.size() != 2 || !args[0].is_number_integer()) {
        throw std::invalid_argument("conj_gen takes [letter, word]");
      }
      s.generator = args[0].get<int>();
      s.arg_a = word_from_json(args[1], rank);
      break;
    case Rule::Forward:
    case Rule::Inverse:
      if (args.size() != 1) throw std::invalid_argument("action takes one arg");
      s.arg_a = word_from_json(args[0], rank);
      break;
  }
  s.result = word_from_json(j.at("result"), rank);
  return s;
}

json node_to_json(const ProofNode& node) {
  if (node.kind == ProofNode::Kind::Branch) {
    return json{{"type", "branch"},
                {"alpha", word_to_json(node.alpha)},
                {"with_alpha", node_to_json(*node.with_alpha)},
                {"with_alpha_inverse", node_to_json(*node.with_alpha_inverse)}};
  }
  json cw = json::array();
  for (const auto& s : node.chain_witness) cw.push_back(step_to_json(s));
  json ci = json::array();
  for (const auto& s : node.chain_inverse) ci.push_back(step_to_json(s));
  return json{{"type", "contradiction"},
              {"witness", word_to_json(node.witness)},
              {"chain_witness", std::move(cw)},
              {"chain_inverse", std::move(ci)}};
}

std::unique_ptr<ProofNode> node_from_json(const json& j, int rank) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "branch") {
    return ProofNode::branch(word_from_json(j.at("alpha"), rank),
                             node_from_json(j.at("with_alpha"), rank),
                             node_from_json(j.at("with_alpha_inverse"), rank));
  }
  if (type == "contradiction") {
    std::vector<ChainStep> cw, ci;
    for (const auto& e : j.at("chain_witness")) {
      cw.push_back(step_from_json(e, rank));
    }
    for (const auto& e : j.at("chain_inverse")) {
      ci.push_back(step_from_json(e, rank));
    }
    return ProofNode::contradiction(word_from_json(j.at("witness"), rank),
                                    std::move(cw), std::move(ci));
  }
  throw std::invalid_argument("unknown node type '" + type + "'");
}

}  // namespace

std::string serialize(const Certificate& c) {
  json seed = json::array();
  for (const auto& w : c.seed) seed.push_back(word_to_json(w));
  json j{{"format_version", 1},
         {"braid", json(c.braid.letters)},
         {"strands", c.braid.strands},
         {"k", c.k},
         {"seed", std::move(seed)},
         {"inner_conjugators",
          json::array({word_to_json(c.conj_forward), word_to_json(c.conj_inverse)})},
         {"metadata",
          json{{"mode", mode_name(c.metadata.mode)},
               {"inner_reduction", c.metadata.inner_reduction},
               {"strict_paper_mode", c.metadata.strict_paper_mode}}},
         {"tree", node_to_json(*c.root)}};
  return j.dump(2) + "\n";
}

Certificate deserialize_certificate(const std::string& json_text) {
  try {
    json j = json::parse(json_text);
    if (j.at("format_version").get<int>() != 1) {
      throw std::invalid_argument("unsupported format_version");
    }
    Certificate c;
    const int strands = j.at("strands").get<int>();
    std::vector<Letter> braid_letters;
    for (const auto& e : j.at("braid")) braid_letters.push_back(e.get<int>());
    c.braid = make_braid(strands, std::move(braid_letters));
    c.k = j.at("k").get<int>();
    if (c.k < 1) throw std::invalid_argument("k must be >= 1");
    for (const auto& e : j.at("seed")) {
      c.seed.push_back(word_from_json(e, strands));
    }
    const json& conjs = j.at("inner_conjugators");
    if (!conjs.is_array() || conjs.size() != 2) {
      throw std::invalid_argument("inner_conjugators must hold two words");
    }
    c.conj_forward = word_from_json(conjs[0], strands);
    c.conj_inverse = word_from_json(conjs[1], strands);
    if (j.contains("metadata")) {
      const json& m = j.at("metadata");
      c.metadata.mode = mode_from_name(m.at("mode").get<std::string>());
      c.metadata.inner_reduction = m.at("inner_reduction").get<bool>();
      c.metadata.strict_paper_mode = m.at("strict_paper_mode").get<bool>();
    }
    c.root = node_from_json(j.at("tree"), strands);
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") +
                                e.what());
  }
}

namespace {

class Verifier {
 public:
  explicit Verifier(const Certificate& c) : cert_(c) {
    fwd_ = compose(FreeAutomorphism::inner(c.conj_forward),
                   FreeAutomorphism::from_braid(c.braid));
    bwd_ = compose(FreeAutomorphism::inner(c.conj_inverse),
                   FreeAutomorphism::from_braid(invert(c.braid)));
    for (const Word& w : c.seed) seeds_.insert(w);
  }

  VerifyResult run() {
    if (!cert_.root) return fail("tree", "missing proof tree");
    if (cert_.conj_forward.rank() != cert_.braid.strands ||
        cert_.conj_inverse.rank() != cert_.braid.strands) {
      return fail("inner_conjugators", "conjugator rank mismatch");
    }
    for (const Word& w : cert_.seed) {
      if (w.rank() != cert_.braid.strands) {
        return fail("seed", "seed word rank mismatch");
      }
      if (w.is_identity()) return fail("seed", "identity seed");
    }
    std::vector<Word> assumptions;
    return walk(*cert_.root, "tree", assumptions);
  }

 private:
  VerifyResult fail(std::string path, std::string message) {
    return VerifyResult{false, std::move(path), std::move(message)};
  }

  VerifyResult walk(const ProofNode& node, const std::string& path,
                    std::vector<Word>& assumptions) {
    if (node.kind == ProofNode::Kind::Branch) {
      if (!node.with_alpha || !node.with_alpha_inverse) {
        return fail(path, "branch node missing a child");
      }
      const Word& a = node.alpha;
      if (a.is_identity()) return fail(path, "branch on the identity");
      if (a.rank() != cert_.braid.strands) {
        return fail(path, "branch word rank mismatch");
      }
      if (a.length() > cert_.k) {
        return fail(path, "branch word longer than k");
      }
      if (cert_.metadata.mode == BallMode::ZeroSum && a.exponent_sum() != 0) {
        return fail(path, "branch word has nonzero exponent sum");
      }
      assumptions.push_back(a);
      if (auto r = walk(*node.with_alpha, path + ".with_alpha", assumptions);
          !r.ok) {
        return r;
      }
      assumptions.back() = inv(a);
      auto r = walk(*node.with_alpha_inverse, path + ".with_alpha_inverse",
                    assumptions);
      assumptions.pop_back();
      return r;
    }

    if (node.witness.is_identity()) {
      return fail(path, "identity witness");
    }
    Word derived_witness, derived_inverse;
    if (auto r = replay(node.chain_witness, path + ".chain_witness",
                        assumptions, derived_witness);
        !r.ok) {
      return r;
    }
    if (auto r = replay(node.chain_inverse, path + ".chain_inverse",
                        assumptions, derived_inverse);
        !r.ok) {
      return r;
    }
    if (!(derived_witness == node.witness)) {
      return fail(path, "chain_witness does not derive the witness");
    }
    if (!mul(node.witness, derived_inverse).is_identity()) {
      return fail(path, "chain_inverse does not derive the witness inverse");
    }
    return VerifyResult{true, "", ""};
  }

  VerifyResult replay(const std::vector<ChainStep>& chain,
                      const std::string& path,
                      const std::vector<Word>& assumptions, Word& out) {
    if (chain.empty()) return fail(path, "empty chain");
    std::unordered_set<Word, WordHash> derived;
    auto available = [&](const Word& w) {
      if (derived.contains(w) || seeds_.contains(w)) return true;
      for (const Word& a : assumptions) {
        if (a == w) return true;
      }
      return false;
    };
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const ChainStep& s = chain[i];
      const std::string at = path + " step " + std::to_string(i);
      if (s.result.rank() != cert_.braid.strands) {
        return fail(at, "result rank mismatch");
      }
      switch (s.rule) {
        case Rule::Seed:
          if (!seeds_.contains(s.result)) {
            return fail(at, "seed step result is not a recorded seed");
          }
          break;
        case Rule::Branch: {
          bool found = false;
          for (const Word& a : assumptions) {
            if (a == s.result) { found = true; break; }
          }
          if (!found) {
            return fail(at, "branch step result is not assumed on this path");
          }
          break;
        }
        case Rule::Product:
          if (!available(s.arg_a) || !available(s.arg_b)) {
            return fail(at, "product argument not available");
          }
          if (!(mul(s.arg_a, s.arg_b) == s.result)) {
            return fail(at, "product does not yield the stated result");
          }
          break;
        case Rule::ConjGen: {
          if (s.generator == 0 || s.generator > cert_.braid.strands ||
              s.generator < -cert_.braid.strands) {
            return fail(at, "conjugating letter out of range");
          }
          if (!available(s.arg_a)) {
            return fail(at, "conjugation argument not available");
          }
          if (!(conj_by_letter(s.arg_a, s.generator) == s.result)) {
            return fail(at, "conjugation does not yield the stated result");
          }
          break;
        }
        case Rule::Forward:
          if (!available(s.arg_a)) {
            return fail(at, "forward-action argument not available");
          }
          if (!(fwd_.apply(s.arg_a) == s.result)) {
            return fail(at, "forward action does not yield the stated result");
          }
          break;
        case Rule::Inverse:
          if (!available(s.arg_a)) {
            return fail(at, "inverse-action argument not available");
          }
          if (!(bwd_.apply(s.arg_a) == s.result)) {
            return fail(at, "inverse action does not yield the stated result");
          }
          break;
      }
      derived.insert(s.result);
    }
    out = chain.back().result;
    return VerifyResult{true, "", ""};
  }

  const Certificate& cert_;
  FreeAutomorphism fwd_, bwd_;
  std::unordered_set<Word, WordHash> seeds_;
};

}  // namespace

VerifyResult verify(const Certificate& c) { return Verifier(c).run(); }

namespace {

void render_step(const ChainStep& s, std::string& out,
                 const std::string& indent) {
  out += indent;
  switch (s.rule) {
    case Rule::Seed:
      out += s.result.str() + "  lies in P (seed)";
      break;
    case Rule::Branch:
      out += s.result.str() + "  lies in P (case assumption)";
      break;
    case Rule::Product:
      out += s.result.str() + "  =  (" + s.arg_a.str() + ") (" + s.arg_b.str() +
             ")";
      break;
    case Rule::ConjGen: {
      std::string g = "x" + std::to_string(s.generator > 0 ? s.generator
                                                           : -s.generator);
      if (s.generator < 0) g += "^-1";
      out += s.result.str() + "  =  (" + s.arg_a.str() + ")^(" + g + ")";
      break;
    }
    case Rule::Forward:
      out += s.result.str() + "  =  b(" + s.arg_a.str() + ")";
      break;
    case Rule::Inverse:
      out += s.result.str() + "  =  b'(" + s.arg_a.str() + ")";
      break;
  }
  out += '\n';
}

void render_node(const ProofNode& node, std::string& out, int depth,
                 const std::string& label) {
  std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  if (node.kind == ProofNode::Kind::Branch) {
    out += indent + label + "Either " + node.alpha.str() + " or its inverse " +
           inv(node.alpha).str() + " lies in P.\n";
    out += indent + "Case A: suppose " + node.alpha.str() + " lies in P.\n";
    render_node(*node.with_alpha, out, depth + 1, "");
    out += indent + "Case B: suppose " + inv(node.alpha).str() +
           " lies in P.\n";
    render_node(*node.with_alpha_inverse, out, depth + 1, "");
    return;
  }
  std::string indent2 = indent + "  ";
  out += indent + label + "Derive, using that P is closed under products, " +
         "conjugation, and the actions b and b':\n";
  for (const auto& s : node.chain_witness) render_step(s, out, indent2);
  for (const auto& s : node.chain_inverse) render_step(s, out, indent2);
  out += indent + "Both " + node.witness.str() + " and its inverse " +
         inv(node.witness).str() +
         " lie in P, contradicting P being a positive cone.\n";
}

}  // namespace

std::string render_human(const Certificate& c) {
  std::string out;
  const int n = c.braid.strands;
  out += "Certificate: the " + std::to_string(n) + "-strand braid  " +
         braid_str(c.braid) + "  preserves no bi-order of the free group F_" +
         std::to_string(n) + ".\n\n";
  out += "Notation: g^h denotes h g h^-1. Let b be the braid action on F_" +
         std::to_string(n) + " composed with conjugation by  " +
         c.conj_forward.str() + " , and b' the inverse braid action composed " +
         "with conjugation by  " + c.conj_inverse.str() +
         " ; both preserve exactly the positive cones the braid action "
         "preserves.\n\n";
  out += "Assume P is a positive cone of F_" + std::to_string(n) +
         " preserved by the braid action. Replacing P by P^-1 if necessary, "
         "assume the seed word";
  if (c.seed.size() > 1) out += "s";
  out += "  ";
  for (std::size_t i = 0; i < c.seed.size(); ++i) {
    if (i) out += " , ";
    out += c.seed[i].str();
  }
  out += "  lie";
  if (c.seed.size() == 1) out += "s";
  out += " in P.\n\n";
  render_node(*c.root, out, 0, "");
  out += "\nEvery case is contradictory, so no such P exists.\n";
  return out;
}

}  // namespace braidcones
