// Command-line surface over the search engine. Subcommands:
//   obstruct  run the incrementing-k driver on a braid
//   verify    replay a certificate file
//   oracle    brute-force cone census at small k
//   family    replay the sigma_1 sigma_2^{2m+1} identity chain
//   calc      free-group word calculator
//
// obstruct exit codes: 0 proven not order-preserving, 1 inconclusive at
// max-k, 2 usage/parse error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidcones/certificate.hpp"
#include "braidcones/errors.hpp"
#include "braidcones/family.hpp"
#include "braidcones/oracle.hpp"
#include "braidcones/search.hpp"

namespace {

using braidcones::BallMode;
using braidcones::BraidWord;
using braidcones::FreeAutomorphism;
using braidcones::Letter;
using braidcones::Word;
using nlohmann::json;

struct CommonArgs {
  std::string braid_text;
  std::optional<int> strands;
};

BraidWord parse_common_braid(const CommonArgs& args) {
  return braidcones::parse_braid(args.braid_text, args.strands);
}

// ---------------------------------------------------------------- obstruct

int cmd_obstruct(const CommonArgs& common, int max_k, const std::string& mode_s,
                 const std::string& seed_text, bool no_inner, bool strict,
                 std::size_t ball_cap, int threads,
                 const std::string& proof_path, bool verbose) {
  BraidWord braid = parse_common_braid(common);
  BallMode mode = braidcones::mode_from_name(mode_s);
  braidcones::SearchOptions options;
  options.inner_reduction = !no_inner;
  options.strict_paper_mode = strict;
  options.ball_cap = ball_cap;
  options.threads = threads;

  std::vector<Word> seed;
  if (!seed_text.empty()) {
    seed.push_back(Word::parse(seed_text, braid.strands));
  }
  if (verbose) {
    std::cerr << "obstruct " << braid_str(braid) << " strands "
              << braid.strands << " mode " << mode_name(mode) << " max-k "
              << max_k << "\n";
  }

  braidcones::DriverResult result =
      braidcones::obstruct(braid, max_k, std::move(seed), mode, options);

  json report{
      {"verdict", result.proven_not_order_preserving
                      ? "proven_not_order_preserving"
                      : "inconclusive"},
      {"k", result.k},
      {"nodes", result.stats.nodes},
      {"max_cone_size", result.stats.max_cone_size},
      {"wall_ms", result.stats.wall_ms}};
  std::cout << report.dump() << "\n";

  if (result.proven_not_order_preserving && !proof_path.empty()) {
    std::ofstream out(proof_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << proof_path << "'\n";
      return 2;
    }
    out << braidcones::serialize(*result.certificate);
  }
  return result.proven_not_order_preserving ? 0 : 1;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& path, bool human) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read '" << path << "'\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  braidcones::Certificate cert;
  try {
    cert = braidcones::deserialize_certificate(buffer.str());
  } catch (const std::exception& e) {
    std::cerr << "corrupt certificate: " << e.what() << "\n";
    return 2;
  }
  braidcones::VerifyResult result = braidcones::verify(cert);
  if (!result.ok) {
    std::cout << "FAIL at " << result.node_path << ": " << result.message
              << "\n";
    return 1;
  }
  if (human) {
    std::cout << braidcones::render_human(cert);
  } else {
    std::cout << "OK: certificate verifies; the braid "
              << braid_str(cert.braid) << " preserves no bi-order of F_"
              << cert.braid.strands << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ oracle

int cmd_oracle(const CommonArgs& common, int k, const std::string& mode_s,
               const std::string& require_text, bool one_sided,
               bool witnesses, std::size_t pair_cap) {
  BraidWord braid = parse_common_braid(common);
  BallMode mode = braidcones::mode_from_name(mode_s);
  std::optional<Word> require;
  if (!require_text.empty()) {
    require = Word::parse(require_text, braid.strands);
  }
  braidcones::ConeCensus census = braidcones::enumerate_preserved(
      braid, braid.strands, k, mode, require, !one_sided, pair_cap, witnesses);
  json report{{"n", census.n},
              {"k", census.k},
              {"mode", mode_name(census.mode)},
              {"braid", braid_str(braid)},
              {"total", census.total},
              {"preserved", census.preserved}};
  if (witnesses) {
    json w = json::array();
    for (const auto& cone : census.witnesses) {
      json one = json::array();
      for (const auto& word : cone) one.push_back(word.str());
      w.push_back(std::move(one));
    }
    report["witnesses"] = std::move(w);
  }
  std::cout << report.dump() << "\n";
  return 0;
}

// ------------------------------------------------------------------ family

int cmd_family(int m) {
  braidcones::FamilyReplay replay = braidcones::replay_family_proof(m);
  json report{{"m", m}, {"ok", replay.ok}};
  if (!replay.ok) report["failing"] = replay.failing;
  std::cout << report.dump() << "\n";
  return replay.ok ? 0 : 1;
}

// -------------------------------------------------------------------- calc
//
// expr    := factor+                 juxtaposition is multiplication
// factor  := atom ('^' INT | '^' '(' expr ')')*   power / conjugation g^(h)
// atom    := x<i> | x<i>^<e> | 1 | '(' expr ')' | b '(' expr ')' | B '(' expr ')'
// with b the forward braid action and B the inverse one (needs --braid).

struct CalcToken {
  enum Kind { Gen, Int, Caret, LParen, RParen, Fwd, Bwd, End } kind;
  int value = 0;
};

std::vector<CalcToken> calc_tokenize(const std::string& text) {
  std::vector<CalcToken> out;
  std::size_t i = 0;
  auto parse_number = [&]() {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(
                                             text[start])))) {
      throw std::invalid_argument("expected a number at '" +
                                  text.substr(start) + "'");
    }
    return std::stoi(text.substr(start, i - start));
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    switch (c) {
      case '^': out.push_back({CalcToken::Caret}); ++i; break;
      case '(': out.push_back({CalcToken::LParen}); ++i; break;
      case ')': out.push_back({CalcToken::RParen}); ++i; break;
      case 'x': {
        ++i;
        int index = parse_number();
        out.push_back({CalcToken::Gen, index});
        break;
      }
      case 'b': out.push_back({CalcToken::Fwd}); ++i; break;
      case 'B': out.push_back({CalcToken::Bwd}); ++i; break;
      default:
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
          out.push_back({CalcToken::Int, parse_number()});
        } else {
          throw std::invalid_argument(std::string("bad character '") + c +
                                      "' in expression");
        }
    }
  }
  out.push_back({CalcToken::End});
  return out;
}

class CalcParser {
 public:
  CalcParser(std::vector<CalcToken> tokens, int rank,
             const std::optional<FreeAutomorphism>& fwd,
             const std::optional<FreeAutomorphism>& bwd)
      : tokens_(std::move(tokens)), rank_(rank), fwd_(fwd), bwd_(bwd) {}

  Word parse() {
    Word result = expr();
    expect(CalcToken::End, "end of expression");
    return result;
  }

 private:
  const CalcToken& peek() const { return tokens_[pos_]; }
  CalcToken next() { return tokens_[pos_++]; }
  void expect(CalcToken::Kind kind, const char* what) {
    if (next().kind != kind) {
      throw std::invalid_argument(std::string("expected ") + what);
    }
  }

  bool starts_atom(CalcToken::Kind k) const {
    return k == CalcToken::Gen || k == CalcToken::Int ||
           k == CalcToken::LParen || k == CalcToken::Fwd ||
           k == CalcToken::Bwd;
  }

  Word expr() {
    Word result = factor();
    while (starts_atom(peek().kind)) result = mul(result, factor());
    return result;
  }

  Word factor() {
    Word base = atom();
    while (peek().kind == CalcToken::Caret) {
      next();
      if (peek().kind == CalcToken::Int) {
        base = power(base, next().value);
      } else if (peek().kind == CalcToken::LParen) {
        next();
        Word by = expr();
        expect(CalcToken::RParen, "')'");
        base = conj(base, by);  // g^h = h g h^-1
      } else {
        throw std::invalid_argument("expected an exponent or (word) after ^");
      }
    }
    return base;
  }

  Word atom() {
    CalcToken tok = next();
    switch (tok.kind) {
      case CalcToken::Gen:
        return Word::generator(rank_, tok.value);
      case CalcToken::Int:
        if (tok.value == 1) return Word::identity(rank_);
        throw std::invalid_argument("bare integers other than 1 are not words");
      case CalcToken::LParen: {
        Word w = expr();
        expect(CalcToken::RParen, "')'");
        return w;
      }
      case CalcToken::Fwd:
      case CalcToken::Bwd: {
        const auto& action = tok.kind == CalcToken::Fwd ? fwd_ : bwd_;
        if (!action) {
          throw std::invalid_argument(
              "braid action used in the expression but no --braid given");
        }
        expect(CalcToken::LParen, "'(' after action");
        Word w = expr();
        expect(CalcToken::RParen, "')'");
        return action->apply(w);
      }
      default:
        throw std::invalid_argument("unexpected token in expression");
    }
  }

  std::vector<CalcToken> tokens_;
  std::size_t pos_ = 0;
  int rank_;
  const std::optional<FreeAutomorphism>& fwd_;
  const std::optional<FreeAutomorphism>& bwd_;
};

int cmd_calc(const std::string& expression, const std::string& braid_text,
             std::optional<int> strands) {
  std::vector<CalcToken> tokens = calc_tokenize(expression);
  std::optional<BraidWord> braid;
  if (!braid_text.empty()) {
    braid = braidcones::parse_braid(braid_text, strands);
  }
  int rank = 2;
  if (strands) rank = *strands;
  if (braid) rank = braid->strands;
  if (!strands && !braid) {
    for (const auto& t : tokens) {
      if (t.kind == CalcToken::Gen) rank = std::max(rank, t.value);
    }
  }
  std::optional<FreeAutomorphism> fwd, bwd;
  if (braid) {
    fwd = FreeAutomorphism::from_braid(*braid);
    bwd = FreeAutomorphism::from_braid(invert(*braid));
  }
  CalcParser parser(std::move(tokens), rank, fwd, bwd);
  std::cout << parser.parse().str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid order-preservingness obstruction toolkit"};
  app.require_subcommand(1);

  CommonArgs common;
  int max_k = 8;
  std::string mode_s = "zero";
  std::string seed_text;
  bool no_inner = false;
  bool strict = false;
  std::size_t ball_cap = braidcones::kDefaultBallCap;
  int threads = 1;
  std::string proof_path;
  bool verbose = false;

  auto* obstruct = app.add_subcommand(
      "obstruct", "search for k-precones preserved by a braid");
  obstruct->add_option("braid", common.braid_text, "braid word, e.g. \"s1 s2^-3\"")
      ->required();
  obstruct->add_option("--strands", common.strands,
                       "strand count (default: max index + 1)");
  obstruct->add_option("--max-k", max_k, "largest radius to try")
      ->capture_default_str();
  obstruct->add_option("--mode", mode_s, "pre (full ball) or zero (zero-sum)")
      ->capture_default_str();
  obstruct->add_option("--seed", seed_text,
                       "seed word (default: x1^-1 x2 in zero mode, x1 in pre)");
  obstruct->add_flag("--no-inner-reduction", no_inner,
                     "use the raw braid action");
  obstruct->add_flag("--strict-paper-mode", strict,
                     "contradictions only via a derived identity");
  obstruct->add_option("--ball-cap", ball_cap, "word ball size cap")
      ->capture_default_str();
  obstruct->add_option("--threads", threads, "branch-parallel exploration")
      ->capture_default_str();
  obstruct->add_option("--emit-proof", proof_path,
                       "write the certificate JSON here on refutation");
  obstruct->add_flag("--verbose", verbose, "progress on stderr");

  std::string verify_path;
  bool verify_human = false;
  auto* verify = app.add_subcommand("verify", "replay a certificate file");
  verify->add_option("path", verify_path, "certificate JSON path")->required();
  verify->add_flag("--human", verify_human, "print the prose proof on success");

  CommonArgs oracle_common;
  int oracle_k = 2;
  std::string oracle_mode = "zero";
  std::string require_text;
  bool one_sided = false;
  bool witnesses = false;
  std::size_t pair_cap = braidcones::kOraclePairCap;
  auto* oracle = app.add_subcommand(
      "oracle", "brute-force census of preserved cones at small k");
  oracle->add_option("braid", oracle_common.braid_text, "braid word")->required();
  oracle->add_option("--strands", oracle_common.strands, "strand count");
  oracle->add_option("--k", oracle_k, "radius")->required();
  oracle->add_option("--mode", oracle_mode, "pre or zero")->capture_default_str();
  oracle->add_option("--require", require_text, "keep only cones containing this word");
  oracle->add_flag("--one-sided", one_sided,
                   "check preservation under the braid only, not its inverse");
  oracle->add_flag("--witnesses", witnesses, "include the preserved cones");
  oracle->add_option("--pair-cap", pair_cap, "inverse-pair cap")
      ->capture_default_str();

  int family_m = 0;
  auto* family = app.add_subcommand(
      "family", "replay the identity chain for s1 s2^{2m+1}");
  family->add_option("--m", family_m, "family parameter")->required();

  std::string calc_expr;
  std::string calc_braid;
  std::optional<int> calc_strands;
  auto* calc = app.add_subcommand("calc", "free-group word calculator");
  calc->add_option("expression", calc_expr,
                   "e.g. \"(x1^-1 x2)^(x3)\"; b(w)/B(w) apply the braid action")
      ->required();
  calc->add_option("--braid", calc_braid, "braid for b()/B() in expressions");
  calc->add_option("--strands", calc_strands, "rank of the free group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (obstruct->parsed()) {
      return cmd_obstruct(common, max_k, mode_s, seed_text, no_inner, strict,
                          ball_cap, threads, proof_path, verbose);
    }
    if (verify->parsed()) return cmd_verify(verify_path, verify_human);
    if (oracle->parsed()) {
      return cmd_oracle(oracle_common, oracle_k, oracle_mode, require_text,
                        one_sided, witnesses, pair_cap);
    }
    if (family->parsed()) return cmd_family(family_m);
    if (calc->parsed()) return cmd_calc(calc_expr, calc_braid, calc_strands);
  } catch (const braidcones::ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << " (k = " << e.k_reached
              << ")\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
