// Command-line front end: word checks, morphism application and
// classification, censuses, avoidance searches and the one-shot
// reproduction suite.
//
// Exit codes: 0 success (and all reproduction claims confirmed),
// 1 reproduction claim mismatch, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nrw/avoid.hpp"
#include "nrw/classify.hpp"
#include "nrw/fixtures.hpp"
#include "nrw/io.hpp"
#include "nrw/morphism.hpp"
#include "nrw/reproduce.hpp"
#include "nrw/search.hpp"
#include "nrw/word.hpp"

namespace {

using namespace nrw;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
  }
};

Morphism load_morphism(const std::string& spec) {
  constexpr std::string_view prefix = "fixture:";
  if (spec.rfind(prefix, 0) == 0) return fixtures::morphism(spec.substr(prefix.size()));
  std::ifstream f(spec, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open morphism file: " + spec);
  std::stringstream ss;
  ss << f.rdbuf();
  return io::parse_morphism(ss.str());
}

Word parse_cli_word(const std::string& text, int alphabet_size) {
  if (alphabet_size > 0)
    return io::parse_word(text, Alphabet(alphabet_size, io::infer_style(text)));
  return io::parse_word(text);
}

RepetitionKind kind_from_name(const std::string& name) {
  if (name == "square") return RepetitionKind::Square;
  if (name == "cube") return RepetitionKind::Cube;
  if (name == "overlap") return RepetitionKind::Overlap;
  if (name == "weak-square") return RepetitionKind::WeakSquare;
  throw CLI::ValidationError("--properties", "unknown property: " + name);
}

std::string verdict_line(const PropertyDecision& d) {
  std::ostringstream os;
  os << io::to_string(d.property) << ": " << io::to_string(d.verdict);
  switch (d.verdict) {
    case Verdict::ProvenTrue:
    case Verdict::ProvenFalse:
      os << " (" << d.criterion << ")";
      break;
    case Verdict::RefutedBy:
      os << " preimage " << io::render_word(d.refutation->preimage) << " ("
         << io::to_string(d.refutation->witness.kind) << " at " << d.refutation->witness.start
         << " period " << d.refutation->witness.period << ")";
      break;
    case Verdict::VerifiedUpTo:
      os << " K=" << d.test_word_length << " L=" << d.prefix_length << " (not a proof)";
      break;
  }
  return os.str();
}

int cmd_check_word(const std::string& word_text, const std::vector<std::string>& props,
                   int alphabet_size, bool json, const Output& out) {
  const Word w = parse_cli_word(word_text, alphabet_size);
  std::vector<RepetitionKind> kinds;
  if (props.empty()) {
    kinds = {RepetitionKind::Square, RepetitionKind::Cube, RepetitionKind::Overlap,
             RepetitionKind::WeakSquare};
  } else {
    for (const std::string& p : props) kinds.push_back(kind_from_name(p));
  }
  std::ostringstream text;
  io::ordered_json results = io::ordered_json::array();
  for (RepetitionKind k : kinds) {
    const auto wit = find_repetition(w.span(), k);
    if (wit)
      text << io::to_string(k) << " at " << wit->start << " period " << wit->period << "\n";
    else
      text << io::to_string(k) << " none\n";
    io::ordered_json r{{"kind", io::to_string(k)}};
    r["witness"] = wit ? io::witness_json(*wit) : io::ordered_json(nullptr);
    results.push_back(r);
  }
  if (json) {
    io::ordered_json j{{"schema_version", io::kSchemaVersion},
                       {"word", io::render_word(w)},
                       {"results", results}};
    out.write(j.dump(2));
  } else {
    out.write(text.str());
  }
  return 0;
}

int cmd_apply(const std::string& morphism_spec, const std::string& word_text, bool json,
              const Output& out) {
  const Morphism m = load_morphism(morphism_spec);
  const Word w = io::parse_word(word_text, m.alphabet());
  const Word image = m.apply(w);
  if (json) {
    io::ordered_json j{{"schema_version", io::kSchemaVersion},
                       {"morphism", io::morphism_json(m)},
                       {"word", io::render_word(w)},
                       {"image", io::render_word(image)}};
    out.write(j.dump(2));
  } else {
    out.write(io::render_word(image));
  }
  return 0;
}

int cmd_fixed_point(const std::string& morphism_spec, const std::string& seed_text,
                    std::size_t len, bool json, const Output& out) {
  const Morphism m = load_morphism(morphism_spec);
  if (seed_text.size() != 1) throw CLI::ValidationError("--seed", "seed must be a single letter");
  const auto seed = io::parse_letter(seed_text[0], m.alphabet().style());
  if (!seed || *seed >= m.alphabet().size())
    throw CLI::ValidationError("--seed", "seed letter outside the morphism alphabet");
  const Word prefix = fixed_point_prefix(m, *seed, len);
  if (json) {
    io::ordered_json j{{"schema_version", io::kSchemaVersion},
                       {"morphism", io::morphism_json(m)},
                       {"seed", seed_text},
                       {"length", prefix.size()},
                       {"prefix", io::render_word(prefix)}};
    out.write(j.dump(2));
  } else {
    out.write(io::render_word(prefix));
  }
  return 0;
}

int cmd_classify(const std::string& morphism_spec, std::size_t bound_k, std::size_t bound_l,
                 bool json, const Output& out) {
  const Morphism m = load_morphism(morphism_spec);
  const MorphismReport rep = classify(m, ClassifyConfig{bound_k, bound_l});
  if (json) {
    out.write(io::report_json(rep).dump(2));
    return 0;
  }
  std::ostringstream os;
  os << io::render_morphism(m);
  if (const auto r = m.uniform_rank()) os << "uniform rank: " << *r << "\n";
  for (const PropertyDecision& d : rep.decisions) os << verdict_line(d) << "\n";
  os << "thue-morphism: " << (rep.thue.value ? "yes" : "no");
  if (rep.thue.value && rep.thue.bounded)
    os << " (cubefree/overlap-free verified up to K=" << rep.thue.test_word_length
       << " L=" << rep.thue.prefix_length << ", not a proof)";
  os << "\n";
  out.write(os.str());
  return 0;
}

int cmd_search(const std::string& kind, int rank, int alphabet_size, const SearchConfig& scfg,
               bool orbits, bool json, bool timings, const Output& out) {
  SearchReport rep;
  if (kind == "squarefree")
    rep = search_uniform_squarefree(rank, scfg);
  else if (kind == "cyclic")
    rep = search_cyclic_squarefree(rank, scfg);
  else if (kind == "thue")
    rep = search_weakly_squarefree_thue(
        rank, alphabet_size == 2 ? Alphabet::binary01() : Alphabet::ternary(), scfg);
  else if (kind == "triple")
    rep = search_triple_property(rank, scfg);
  else
    throw CLI::ValidationError("kind", "expected squarefree, cyclic, thue or triple");

  if (orbits) rep.orbit_classes = orbit_reduce(rep.survivors, symmetry_transforms());

  if (json) {
    out.write(io::search_json(rep, timings).dump(2));
    return 0;
  }
  std::ostringstream os;
  os << io::emit_census_table(rep);
  os << "# kind " << rep.kind << ", rank " << rep.rank << ", pool " << rep.pool_size
     << ", survivors " << rep.survivors.size();
  if (rep.refuted_count)
    os << ", refuted " << rep.refuted_count << " (validated " << rep.refutations_validated << ")";
  os << "\n";
  for (const OrbitClass& cls : rep.orbit_classes)
    os << "# orbit " << serialize_morphism(cls.representative) << " size " << cls.size
       << " outside " << cls.outside << "\n";
  if (timings) os << "# wall time " << rep.wall_time.count() << " ms\n";
  out.write(os.str());
  return 0;
}

int cmd_avoid(const std::vector<std::string>& forbid, int alphabet_size,
              const std::vector<std::string>& props, std::size_t budget,
              const std::string& check_word, const std::string& morphism_spec,
              const std::string& seed_text, std::size_t len, const std::string& dot_path,
              bool json, const Output& out) {
  KindMask mask = 0;
  if (props.empty())
    mask = kSquarefree;
  else if (props.size() == 1 && props[0] == "none")
    mask = kAvoidNone;
  else
    for (const std::string& p : props) mask |= kind_bit(kind_from_name(p));

  if (!morphism_spec.empty()) {
    const Morphism m = load_morphism(morphism_spec);
    if (seed_text.size() != 1) throw CLI::ValidationError("--seed", "seed must be a single letter");
    const auto seed = io::parse_letter(seed_text[0], m.alphabet().style());
    if (!seed || *seed >= m.alphabet().size())
      throw CLI::ValidationError("--seed", "seed letter outside the morphism alphabet");
    AvoidanceQuery q{m.alphabet(), {}, mask, budget};
    for (const std::string& f : forbid) q.forbidden.push_back(io::parse_word(f, m.alphabet()));
    const PrefixCheckReport rep = check_fixed_point_avoidance(m, *seed, q, len);
    if (json) {
      out.write(io::prefix_check_json(rep).dump(2));
    } else {
      std::ostringstream os;
      os << "prefix length " << rep.prefix_length << ": "
         << (rep.result.ok ? "no violation found" : "violation") << "\n";
      if (!rep.result.ok)
        os << io::verify_json(rep.result)["violation"].dump() << "\n";
      out.write(os.str());
    }
    return 0;
  }

  const Alphabet alphabet(alphabet_size > 0 ? alphabet_size : 3,
                          [&] {
                            std::string all = check_word;
                            for (const std::string& f : forbid) all += f;
                            return io::infer_style(all);
                          }());
  AvoidanceQuery q{alphabet, {}, mask, budget};
  for (const std::string& f : forbid) q.forbidden.push_back(io::parse_word(f, alphabet));

  if (!check_word.empty()) {
    constexpr std::string_view prefix = "fixture:";
    const Word w = check_word.rfind(prefix, 0) == 0
                       ? fixtures::word(check_word.substr(prefix.size()))
                       : io::parse_word(check_word, alphabet);
    AvoidanceQuery qw{w.alphabet(), {}, mask, budget};
    for (const std::string& f : forbid) qw.forbidden.push_back(io::parse_word(f, w.alphabet()));
    const VerifyResult res = verify_avoidance(w, qw);
    if (json) {
      out.write(io::verify_json(res).dump(2));
    } else {
      out.write(res.ok ? "ok" : "violation: " + io::verify_json(res)["violation"].dump());
    }
    return 0;
  }

  std::optional<std::ofstream> dot_file;
  std::ostream* dot = nullptr;
  if (!dot_path.empty()) {
    dot_file.emplace(dot_path, std::ios::binary);
    if (!*dot_file) throw std::runtime_error("cannot open dot file: " + dot_path);
    dot = &*dot_file;
  }
  const AvoidanceOutcome outcome = max_avoiding(q, dot);
  if (json) {
    out.write(io::avoidance_json(outcome).dump(2));
    return 0;
  }
  std::ostringstream os;
  if (outcome.status == AvoidanceOutcome::Status::Exhausted) {
    os << "max length " << outcome.max_len << "\n";
    for (const Word& w : outcome.witnesses) os << io::render_word(w) << "\n";
  } else {
    os << "open at budget " << outcome.max_len << ", sample "
       << io::render_word(outcome.witnesses.at(0)) << "\n";
  }
  os << "# nodes visited " << outcome.nodes_visited << "\n";
  out.write(os.str());
  return 0;
}

int cmd_reproduce(const reproduce::Config& cfg, const std::string& only_claim, bool json,
                  const Output& out) {
  std::vector<reproduce::ClaimResult> results;
  if (only_claim.empty()) {
    results = reproduce::run_all(cfg, json ? nullptr : &std::cerr);
  } else {
    results.push_back(reproduce::run_claim(only_claim, cfg));
  }

  bool all_pass = true;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream os;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.name
       << std::string(width - r.name.size() + 2, ' ') << r.elapsed.count() << " ms";
    if (!r.detail.empty()) os << "  " << r.detail;
    os << "\n";
  }
  os << (all_pass ? "all claims confirmed" : "CLAIM MISMATCH") << "\n";

  if (json) {
    io::ordered_json arr = io::ordered_json::array();
    for (const auto& r : results)
      arr.push_back(io::ordered_json{{"claim", r.name},
                                     {"pass", r.pass},
                                     {"detail", r.detail},
                                     {"wall_time_ms", r.elapsed.count()}});
    out.write(io::ordered_json{{"schema_version", io::kSchemaVersion},
                               {"claims", arr},
                               {"all_pass", all_pass}}
                  .dump(2));
  } else {
    out.write(os.str());
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis of non-repeating words and the morphisms that preserve them"};
  app.require_subcommand(1);

  std::string format = "text";
  Output out;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out.path, "write output to a file instead of stdout");

  // check-word
  auto* check = app.add_subcommand("check-word", "locate repetitions inside a word");
  std::string word_text;
  std::vector<std::string> props;
  int alphabet_size = 0;
  check->add_option("word", word_text, "the word to scan")->required();
  check->add_option("--properties", props, "square, cube, overlap, weak-square")->delimiter(',');
  check->add_option("--alphabet", alphabet_size, "alphabet size (default: inferred)");

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "apply a morphism to a word");
  std::string morphism_spec, apply_word;
  apply_cmd->add_option("morphism", morphism_spec, "morphism file or fixture:<name>")->required();
  apply_cmd->add_option("word", apply_word, "the word to map")->required();

  // fixed-point
  auto* fp = app.add_subcommand("fixed-point", "prefix of the fixed point from a seed letter");
  std::string fp_morphism, fp_seed = "1";
  std::size_t fp_len = 100;
  fp->add_option("morphism", fp_morphism, "morphism file or fixture:<name>")->required();
  fp->add_option("--seed", fp_seed, "seed letter (default 1)");
  fp->add_option("--len", fp_len, "minimum prefix length");

  // classify
  auto* cls = app.add_subcommand("classify", "decide or bound the preservation properties");
  std::string cls_morphism;
  std::size_t bound_k = 8, bound_l = 10000;
  cls->add_option("morphism", cls_morphism, "morphism file or fixture:<name>")->required();
  cls->add_option("--bound-K", bound_k, "max preimage length for bounded checks");
  cls->add_option("--bound-L", bound_l, "min fixed-point prefix length scanned");

  // search
  auto* search = app.add_subcommand("search", "censuses and candidate sweeps");
  std::string search_kind;
  int rank = 11, search_alphabet = 3, threads = 0;
  bool no_prune = false, orbits = false, timings = false;
  search->add_option("kind", search_kind, "squarefree | cyclic | thue | triple")->required();
  search->add_option("--rank", rank, "uniform rank")->required();
  search->add_option("--alphabet", search_alphabet, "2 or 3 (thue sweep only)")
      ->check(CLI::IsMember({2, 3}));
  search->add_option("--threads", threads, "worker threads (0 = auto)");
  search->add_flag("--no-prune", no_prune, "audit mode: skip the pair prefilter");
  search->add_flag("--orbits", orbits, "also reduce survivors to orbit classes");
  search->add_flag("--timings", timings, "include wall time in the output");
  search->add_option("--bound-K", bound_k, "max preimage length for bounded checks");
  search->add_option("--bound-L", bound_l, "min fixed-point prefix length scanned");

  // avoid
  auto* avoid = app.add_subcommand("avoid", "factor avoidance: search, verify, prefix check");
  std::vector<std::string> forbid;
  std::size_t budget = 64, prefix_len = 100000;
  std::string check_word_text, avoid_morphism, avoid_seed = "1", dot_path;
  avoid->add_option("--forbid", forbid, "forbidden factor (repeatable)");
  avoid->add_option("--alphabet", alphabet_size, "alphabet size (default 3)");
  avoid->add_option("--property", props, "square, cube, overlap, weak-square or none")
      ->delimiter(',');
  avoid->add_option("--budget", budget, "DFS depth cap");
  avoid->add_option("--check", check_word_text, "verify a word (or fixture:<name>) instead");
  avoid->add_option("--morphism", avoid_morphism, "check a fixed-point prefix of this morphism");
  avoid->add_option("--seed", avoid_seed, "seed letter for --morphism");
  avoid->add_option("--len", prefix_len, "minimum prefix length for --morphism");
  avoid->add_option("--dot", dot_path, "write the explored tree as DOT");

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "run every reproduction claim and report");
  std::string only_claim;
  rep->add_option("--claim", only_claim, "run a single claim by name");
  rep->add_option("--bound-K", bound_k, "max preimage length for bounded checks");
  rep->add_option("--bound-L", bound_l, "min fixed-point prefix length scanned");
  rep->add_option("--threads", threads, "worker threads (0 = auto)");
  rep->add_flag("--no-prune", no_prune, "audit mode: skip the census pair prefilter");
  auto* list = app.add_subcommand("claims", "list reproduction claim names");

  // shared --format/--out may appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const bool json = format == "json";
  try {
    if (*check) return cmd_check_word(word_text, props, alphabet_size, json, out);
    if (*apply_cmd) return cmd_apply(morphism_spec, apply_word, json, out);
    if (*fp) return cmd_fixed_point(fp_morphism, fp_seed, fp_len, json, out);
    if (*cls) return cmd_classify(cls_morphism, bound_k, bound_l, json, out);
    if (*search)
      return cmd_search(search_kind, rank, search_alphabet,
                        SearchConfig{threads, !no_prune, bound_k, bound_l}, orbits, json, timings,
                        out);
    if (*avoid)
      return cmd_avoid(forbid, alphabet_size, props, budget, check_word_text, avoid_morphism,
                       avoid_seed, prefix_len, dot_path, json, out);
    if (*rep)
      return cmd_reproduce(reproduce::Config{bound_k, bound_l, threads, no_prune}, only_claim,
                           json, out);
    if (*list) {
      std::string names;
      for (const std::string& n : reproduce::claim_names()) names += n + "\n";
      out.write(names);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
