#pragma once

#include <memory>
#include <string>
#include <vector>

#include "braidcones/autom.hpp"
#include "braidcones/ball.hpp"
#include "braidcones/braid.hpp"
#include "braidcones/derivation.hpp"

namespace braidcones {

/// A node of the proof tree. Internal nodes split on a word alpha (one child
/// assumes alpha in P, the other alpha^{-1}); leaves exhibit a word and its
/// inverse, each with a replayable derivation chain.
struct ProofNode {
  enum class Kind { Branch, Contradiction };
  Kind kind = Kind::Contradiction;

  // Branch
  Word alpha;
  std::unique_ptr<ProofNode> with_alpha;
  std::unique_ptr<ProofNode> with_alpha_inverse;

  // Contradiction
  Word witness;
  std::vector<ChainStep> chain_witness;
  std::vector<ChainStep> chain_inverse;

  static std::unique_ptr<ProofNode> branch(Word alpha,
                                           std::unique_ptr<ProofNode> with,
                                           std::unique_ptr<ProofNode> without);
  static std::unique_ptr<ProofNode> contradiction(
      Word witness, std::vector<ChainStep> chain_witness,
      std::vector<ChainStep> chain_inverse);

  bool equals(const ProofNode& o) const;
};

/// Semantic flags the certificate was produced under, recorded verbatim.
/// Runtime knobs that cannot change the result (thread count, caps) are
/// deliberately not recorded: certificates are byte-identical across them.
struct CertificateMetadata {
  BallMode mode = BallMode::ZeroSum;
  bool inner_reduction = true;
  bool strict_paper_mode = false;
  bool operator==(const CertificateMetadata&) const = default;
};

/// The full proof object: replaying every chain against the automorphisms
/// rebuilt from `braid` and `inner_conjugators` certifies that no positive
/// cone containing the seed is preserved by the braid action.
struct Certificate {
  BraidWord braid;
  int k = 0;
  std::vector<Word> seed;
  Word conj_forward;  // inner conjugator composed after the braid action
  Word conj_inverse;  // inner conjugator composed after the inverse action
  std::unique_ptr<ProofNode> root;
  CertificateMetadata metadata;

  bool equals(const Certificate& o) const;
};

/// Stable-byte JSON encoding (keys sorted, 2-space indent).
std::string serialize(const Certificate& c);
/// Throws std::invalid_argument on malformed input or unknown format_version.
Certificate deserialize_certificate(const std::string& json_text);

struct VerifyResult {
  bool ok = false;
  std::string node_path;  // empty when ok
  std::string message;
};

/// Independent replay: rebuilds both automorphisms from the recorded braid
/// and inner conjugators, replays every chain step, checks each step's inputs
/// are available on its tree path (seed, ancestor branch words, or earlier
/// results in the same chain), and checks witness * inverse == 1 per leaf.
VerifyResult verify(const Certificate& c);

/// Prose rendering of a verified certificate, one case per branch, with
/// conjugation written g^h = h g h^{-1}. Words re-parse under Word::parse.
std::string render_human(const Certificate& c);

}  // namespace braidcones
