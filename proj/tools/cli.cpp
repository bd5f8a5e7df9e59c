#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "lwg/embedding_http.hpp"
#include "lwg/lwg.hpp"

namespace lwg::cli {
namespace {

namespace fs = std::filesystem;

struct Io {
  std::ostream& out;
  std::ostream& err;
};

// Writes `content` to `path` via a temp file + rename; "-" means stdout.
void write_output(const std::string& path, const std::string& content, Io& io) {
  if (path == "-") {
    io.out << content;
    io.out.flush();
    return;
  }
  const fs::path target(path);
  std::random_device rd;
  const fs::path tmp = target.string() + ".tmp-" + std::to_string(::getpid()) + "-" +
                       std::to_string(rd());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + tmp.string());
    f << content;
    f.close();
    if (!f) {
      fs::remove(tmp);
      throw InputError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError("cannot move output into place: " + target.string() + ": " + ec.message());
  }
}

void check_output_path(const std::string& path) {
  if (path == "-") return;
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw InputError("output directory does not exist: " + parent.string());
  }
}

std::pair<std::string, fs::path> split_lang_file(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
    throw Error(ErrorKind::kUsage, "expected LANG=FILE, got '" + spec + "'");
  }
  fs::path file = spec.substr(eq + 1);
  if (!fs::is_regular_file(file)) throw InputError("no such file: " + file.string());
  return {spec.substr(0, eq), file};
}

template <class T>
std::vector<T> parse_csv(const std::string& csv, T (*conv)(std::string_view)) {
  std::vector<T> out;
  for (auto piece : text::split(csv, ',')) {
    piece = text::trim(piece);
    if (!piece.empty()) out.push_back(conv(piece));
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kUsage, "not an unsigned integer: '" + std::string(s) + "'");
  }
  return v;
}

ShuffleSetting parse_setting(std::string_view s) { return ShuffleSetting::parse(s); }

std::string jobs_help() { return "Worker threads (0 = all cores)"; }

// ---------------------------------------------------------------- group

struct GroupArgs {
  std::string rules;
  std::string delimiter = "_";
  std::string in;
  std::string out = "-";
  std::string stats;
  std::string language = "hin";
  unsigned jobs = 0;
};

void run_group(const GroupArgs& a, Io& io) {
  check_output_path(a.out);
  if (!a.stats.empty()) check_output_path(a.stats);
  RuleSet rules = a.rules.empty() ? default_rules() : load_rules(read_file(a.rules));
  if (a.delimiter.empty() || text::contains_space(a.delimiter)) {
    throw Error(ErrorKind::kUsage, "--delimiter must be non-empty and whitespace-free");
  }
  rules.delimiter = a.delimiter;

  const auto sentences = parse_conllu(read_file(a.in));
  std::vector<GroupedSentence> grouped(sentences.size());
  parallel_for(sentences.size(), a.jobs,
               [&](std::size_t i) { grouped[i] = group_sentence(sentences[i], rules); });

  std::ostringstream jsonl;
  write_grouped(grouped, jsonl);
  write_output(a.out, jsonl.str(), io);

  if (!a.stats.empty()) {
    std::ostringstream tsv;
    write_stats_tsv(corpus_stats({{a.language, grouped}}), tsv);
    write_output(a.stats, tsv.str(), io);
  }
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  std::vector<std::string> plain;
  std::vector<std::string> grouped;
  std::string out = "-";
};

void run_stats(const StatsArgs& a, Io& io) {
  check_output_path(a.out);
  if (a.plain.empty() && a.grouped.empty()) {
    throw Error(ErrorKind::kUsage, "give at least one --plain or --grouped corpus");
  }
  std::vector<std::pair<std::string, CorpusView>> corpora;
  for (const auto& spec : a.plain) {
    auto [lang, file] = split_lang_file(spec);
    corpora.emplace_back(lang, parse_plain(read_file(file)));
  }
  for (const auto& spec : a.grouped) {
    auto [lang, file] = split_lang_file(spec);
    corpora.emplace_back(lang, read_grouped(read_file(file)));
  }
  std::ostringstream tsv;
  write_stats_tsv(corpus_stats(corpora), tsv);
  write_output(a.out, tsv.str(), io);
}

// ---------------------------------------------------------------- shuffle

struct ShuffleArgs {
  std::string setting = "full";
  bool preserve_groups = false;
  std::uint64_t seed = 0;
  std::string in;
  std::string out = "-";
  unsigned jobs = 0;
};

void run_shuffle(const ShuffleArgs& a, Io& io) {
  check_output_path(a.out);
  const ShuffleSetting setting = ShuffleSetting::parse(a.setting);
  const auto sentences = read_grouped(read_file(a.in));

  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (setting.kind == ShuffleSetting::Kind::kLengthFiltered &&
        sentences[i].tokens.size() >= static_cast<std::size_t>(setting.param)) {
      continue;
    }
    rows.push_back(i);
  }

  std::vector<std::string> lines(rows.size());
  parallel_for(rows.size(), a.jobs, [&](std::size_t k) {
    const auto& g = sentences[rows[k]];
    const ShuffleSpec spec{setting, a.preserve_groups, derive_seed(a.seed, g.id)};
    const ShuffledSentence s = shuffle(units_of(g, a.preserve_groups), spec);
    nlohmann::json j{{"id", g.id},
                     {"original", s.original},
                     {"permuted", s.permuted},
                     {"permutation", s.permutation},
                     {"spec",
                      {{"setting", setting.name()},
                       {"preserve_groups", a.preserve_groups},
                       {"seed", a.seed},
                       {"sentence_seed", spec.seed}}}};
    lines[k] = j.dump() + "\n";
  });
  std::string all;
  for (auto& l : lines) all += l;
  write_output(a.out, all, io);
  io.err << "lwg shuffle: " << rows.size() << " of " << sentences.size()
         << " sentences shuffled (" << setting.name() << ")\n";
}

// ---------------------------------------------------------------- simeval

struct SimevalArgs {
  std::vector<std::string> corpus;
  std::string pivot = "hin";
  std::string grouped;
  std::string settings = "full,w5,w10,filtered20";
  std::string seeds = "1,2,3,4,5";
  std::string provider = "builtin";
  std::size_t dim = NgramHashEmbedder::kDefaultDimension;
  std::uint64_t hash_seed = NgramHashEmbedder::kDefaultHashSeed;
  std::string endpoint;
  std::size_t batch_size = 32;
  unsigned max_in_flight = 4;
  int retries = 2;
  std::string out = "-";
  unsigned jobs = 0;
};

void run_simeval(const SimevalArgs& a, Io& io, bool dim_given) {
  check_output_path(a.out);
  std::vector<std::pair<std::string, fs::path>> files;
  for (const auto& spec : a.corpus) files.push_back(split_lang_file(spec));
  const ParallelCorpus corpus = load_parallel(files);
  const auto grouped = read_grouped(read_file(a.grouped));
  const auto settings = parse_csv<ShuffleSetting>(a.settings, parse_setting);
  if (settings.empty()) throw Error(ErrorKind::kUsage, "--settings is empty");

  SimilarityOptions opts;
  opts.pivot = a.pivot;
  opts.seeds = parse_csv<std::uint64_t>(a.seeds, parse_u64);
  opts.jobs = a.jobs;

  std::unique_ptr<EmbeddingProvider> provider;
  if (a.provider == "builtin") {
    provider = std::make_unique<NgramHashEmbedder>(a.dim, a.hash_seed);
  } else if (a.provider == "external") {
    HttpEmbedderConfig cfg;
    cfg.endpoint = a.endpoint;
    cfg.dimension = dim_given ? a.dim : 0;
    cfg.batch_size = a.batch_size;
    cfg.max_in_flight = a.max_in_flight;
    cfg.retries = a.retries;
    cfg.apply_environment();
    if (cfg.endpoint.empty()) {
      throw Error(ErrorKind::kUsage, "external provider needs --endpoint or LWG_EMBED_ENDPOINT");
    }
    if (cfg.dimension == 0) {
      throw InputError("external provider needs --dim or LWG_EMBED_DIM");
    }
    provider = std::make_unique<HttpEmbedder>(cfg);
  } else {
    throw Error(ErrorKind::kUsage, "--provider must be builtin or external");
  }

  try {
    const SimilarityTable table = similarity_experiment(corpus, grouped, settings, *provider, opts);
    std::ostringstream tsv;
    write_similarity_tsv(table, tsv);
    write_output(a.out, tsv.str(), io);
  } catch (const ExperimentAborted& e) {
    std::ostringstream tsv;
    write_similarity_tsv(e.partial(), tsv);
    write_output(a.out, tsv.str(), io);
    throw;
  }
}

// ---------------------------------------------------------------- chunk

struct ChunkArgs {
  std::string mode = "fixed";
  int width = kDefaultChunkWidth;
  std::string in;
  std::string out = "-";
  unsigned jobs = 0;
};

void run_chunk(const ChunkArgs& a, Io& io) {
  check_output_path(a.out);
  if (a.mode != "fixed" && a.mode != "grouped") {
    throw Error(ErrorKind::kUsage, "--mode must be fixed or grouped");
  }
  const auto sentences = read_grouped(read_file(a.in));
  std::vector<std::string> lines(sentences.size());
  parallel_for(sentences.size(), a.jobs, [&](std::size_t i) {
    const auto& g = sentences[i];
    const ChunkPlan plan =
        a.mode == "fixed" ? chunk_fixed(g.tokens, a.width) : chunk_grouped(g, a.width);
    nlohmann::json j{{"id", g.id},
                     {"mode", a.mode},
                     {"width", a.width},
                     {"boundaries", plan.boundaries},
                     {"chunks", plan.chunk_texts()}};
    lines[i] = j.dump() + "\n";
  });
  std::string all;
  for (auto& l : lines) all += l;
  write_output(a.out, all, io);
}

// ---------------------------------------------------------------- prompt

struct PromptArgs {
  std::string shots;
  std::string test;
  std::string src_lang = "Hindi";
  std::string tgt_lang;
  std::string mask = "<mask>";
  std::string out;
  unsigned jobs = 0;
};

std::string safe_file_stem(const std::string& id) {
  std::string s;
  for (char c : id) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
    s.push_back(ok ? c : '_');
  }
  return s.empty() ? "_" : s;
}

void run_prompt(const PromptArgs& a, Io& io) {
  if (!fs::is_directory(a.out)) throw InputError("output directory does not exist: " + a.out);
  const auto shots = read_shots(read_file(a.shots));

  struct TestChunk {
    std::string id;
    std::size_t index;
    std::string text;
  };
  std::vector<TestChunk> work;
  const std::string test_doc = read_file(a.test);
  const auto all = text::lines(test_doc);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (text::trim(all[i]).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(all[i]);
      const auto id = j.at("id").get<std::string>();
      const auto chunks = j.at("chunks").get<std::vector<std::string>>();
      for (std::size_t c = 0; c < chunks.size(); ++c) work.push_back({id, c, chunks[c]});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(i + 1, std::string(a.test) + ": " + e.what());
    }
  }

  parallel_for(work.size(), a.jobs, [&](std::size_t k) {
    PromptDocument doc;
    doc.source_lang = a.src_lang;
    doc.target_lang = a.tgt_lang;
    doc.shots = shots;
    doc.test_chunk = work[k].text;
    doc.mask_token = a.mask;
    const fs::path file = fs::path(a.out) / (safe_file_stem(work[k].id) + "." +
                                             std::to_string(work[k].index) + ".txt");
    write_output(file.string(), build_prompt(doc), io);
  });
  io.err << "lwg prompt: wrote " << work.size() << " prompts to " << a.out << "\n";
}

// ---------------------------------------------------------------- chrf

struct ChrfArgs {
  std::string hyp;
  std::string ref;
  int nc = 6;
  int nw = 2;
  double beta = 2.0;
  bool lowercase = false;
  bool sentence_level = false;
  std::string out = "-";
};

std::vector<std::string> raw_lines(const std::string& path) {
  std::vector<std::string> out;
  const std::string doc = read_file(path);
  for (auto l : text::lines(doc)) out.emplace_back(l);
  return out;
}

void run_chrf(const ChrfArgs& a, Io& io) {
  check_output_path(a.out);
  ChrfConfig cfg;
  cfg.char_order = a.nc;
  cfg.word_order = a.nw;
  cfg.beta = a.beta;
  cfg.lowercase = a.lowercase;
  cfg.check();
  const auto hyps = raw_lines(a.hyp);
  const auto refs = raw_lines(a.ref);
  if (hyps.size() != refs.size()) {
    throw InputError("hypothesis has " + std::to_string(hyps.size()) +
                     " lines, reference has " + std::to_string(refs.size()));
  }
  std::ostringstream os;
  char buf[64];
  if (a.sentence_level) {
    for (std::size_t i = 0; i < hyps.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.4f", chrfpp(hyps[i], refs[i], cfg));
      os << i + 1 << '\t' << buf << '\n';
    }
  }
  std::snprintf(buf, sizeof buf, "%.4f", corpus_chrfpp(hyps, refs, cfg));
  os << (a.nw > 0 ? "chrF++" : "chrF") << '\t' << buf << '\t' << cfg.signature() << '\n';
  write_output(a.out, os.str(), io);
}

// ---------------------------------------------------------------- buckets

struct BucketArgs {
  std::string scores;
  std::string src;
  std::string metric;
  std::size_t min_instances = 20;
  std::string out = "-";
};

void run_buckets(const BucketArgs& a, Io& io) {
  check_output_path(a.out);
  const auto rows = ingest_external_scores(read_file(a.scores));
  const auto sources = parse_plain(read_file(a.src));
  std::unordered_map<std::string, int> lengths;
  for (const auto& s : sources) lengths[s.id] = static_cast<int>(s.words.size());
  std::vector<LengthScore> pairs;
  for (const auto& r : rows) {
    if (!a.metric.empty() && r.metric != a.metric) continue;
    const auto it = lengths.find(r.id);
    if (it == lengths.end()) throw InputError("score id '" + r.id + "' has no source sentence");
    pairs.push_back({it->second, r.score});
  }
  if (pairs.empty()) throw InputError("no scores to bucket");
  std::ostringstream tsv;
  write_bucket_tsv(bucket_scores(pairs, a.min_instances), tsv);
  write_output(a.out, tsv.str(), io);
}

// ---------------------------------------------------------------- wiring

void add_common(CLI::App* sub, unsigned& jobs) {
  sub->add_option("--config", "key=value file supplying any flag; command line wins");
  sub->add_option("--jobs", jobs, jobs_help())->capture_default_str();
}

bool given_on_command_line(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.starts_with(flag + "=")) return true;
  }
  return false;
}

// Subcommand config files are expanded into flags ahead of parsing, so that
// a flag given on the command line replaces the file's value.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
  if (args.size() < 2) return args;
  const CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(args[1]);
  } catch (const CLI::OptionNotFound&) {
    return args;
  }
  std::string file;
  for (std::size_t i = 2; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) file = args[i + 1];
    if (args[i].starts_with("--config=")) file = args[i].substr(9);
  }
  if (file.empty()) return args;
  std::ifstream in(file);
  if (!in) throw InputError("cannot open config file: " + file);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_config(in);
  } catch (const CLI::ParseError& e) {
    throw InputError(file + ": " + e.what());
  }
  std::vector<std::string> extra;
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    const std::string flag = "--" + item.name;
    if (flag == "--config" || given_on_command_line(args, flag)) continue;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr) {
      throw Error(ErrorKind::kUsage, file + ": unknown key '" + item.name + "'");
    }
    if (opt->get_expected_max() == 0) {
      if (item.inputs.size() == 1 && CLI::detail::to_flag_value(item.inputs[0]) > 0) {
        extra.push_back(flag);
      }
      continue;
    }
    for (const auto& v : item.inputs) {
      extra.push_back(flag);
      extra.push_back(v);
    }
  }
  args.insert(args.begin() + 2, extra.begin(), extra.end());
  return args;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Io io{out, err};
  CLI::App app{"Local word grouping toolkit for Hindi: grouping, perturbation, chunking, "
               "prompts and metrics"};
  app.name("lwg");
  app.require_subcommand(1);

  GroupArgs group;
  auto* g = app.add_subcommand("group", "Group annotated CoNLL-U sentences into word groups");
  g->add_option("--rules", group.rules, "Rules file (default: built-in Hindi table)")
      ->check(CLI::ExistingFile);
  g->add_option("--delimiter", group.delimiter, "Joiner inside rendered groups")
      ->capture_default_str();
  g->add_option("--in", group.in, "CoNLL-U input")->required()->check(CLI::ExistingFile);
  g->add_option("--out", group.out, "Grouped JSONL output ('-' = stdout)")->capture_default_str();
  g->add_option("--stats", group.stats, "Also write word/group counts TSV here");
  g->add_option("--language", group.language, "Language label for --stats")
      ->capture_default_str();
  add_common(g, group.jobs);

  StatsArgs stats;
  auto* st = app.add_subcommand("stats", "Word and group counts per language (TSV)");
  st->add_option("--plain", stats.plain, "LANG=FILE plain corpus, one sentence per line");
  st->add_option("--grouped", stats.grouped, "LANG=FILE grouped JSONL corpus");
  st->add_option("--out", stats.out, "TSV output ('-' = stdout)")->capture_default_str();
  unsigned stats_jobs = 0;
  add_common(st, stats_jobs);

  ShuffleArgs shuf;
  auto* sh = app.add_subcommand("shuffle", "Seeded shuffling of grouped sentences");
  sh->add_option("--setting", shuf.setting, "full | wN (window) | filteredN (< N words, full)")
      ->capture_default_str();
  sh->add_flag("--preserve-groups", shuf.preserve_groups, "Shuffle whole groups, not words");
  sh->add_option("--seed", shuf.seed, "Base seed (per sentence: seed XOR FNV-1a(id))")
      ->capture_default_str();
  sh->add_option("--in", shuf.in, "Grouped JSONL input")->required()->check(CLI::ExistingFile);
  sh->add_option("--out", shuf.out, "JSONL output ('-' = stdout)")->capture_default_str();
  add_common(sh, shuf.jobs);

  SimevalArgs sim;
  auto* se = app.add_subcommand("simeval", "Shuffled-sentence embedding similarity table");
  se->add_option("--corpus", sim.corpus, "LANG=FILE parallel corpus column (repeatable)")
      ->required();
  se->add_option("--pivot", sim.pivot, "Language whose sentences are shuffled")
      ->capture_default_str();
  se->add_option("--grouped", sim.grouped, "Grouped JSONL of the pivot column, row-aligned")
      ->required()
      ->check(CLI::ExistingFile);
  se->add_option("--settings", sim.settings, "Comma-separated shuffle settings")
      ->capture_default_str();
  se->add_option("--seeds", sim.seeds, "Comma-separated seeds")->capture_default_str();
  se->add_option("--provider", sim.provider, "builtin | external")->capture_default_str();
  auto* dim_opt = se->add_option("--dim", sim.dim, "Embedding dimension (external: or LWG_EMBED_DIM)")
                      ->capture_default_str();
  se->add_option("--hash-seed", sim.hash_seed, "Builtin feature-hash seed")->capture_default_str();
  se->add_option("--endpoint", sim.endpoint, "External service URL (or LWG_EMBED_ENDPOINT)");
  se->add_option("--batch-size", sim.batch_size, "Texts per external request")
      ->capture_default_str();
  se->add_option("--max-in-flight", sim.max_in_flight, "Concurrent external requests")
      ->capture_default_str();
  se->add_option("--retries", sim.retries, "Retries per external request")->capture_default_str();
  se->add_option("--out", sim.out, "TSV output ('-' = stdout)")->capture_default_str();
  add_common(se, sim.jobs);

  ChunkArgs chunk;
  auto* ch = app.add_subcommand("chunk", "Split grouped sentences into translation chunks");
  ch->add_option("--mode", chunk.mode, "fixed | grouped")->capture_default_str();
  ch->add_option("--width", chunk.width, "Chunk width in words (target width when grouped)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  ch->add_option("--in", chunk.in, "Grouped JSONL input")->required()->check(CLI::ExistingFile);
  ch->add_option("--out", chunk.out, "JSONL output ('-' = stdout)")->capture_default_str();
  add_common(ch, chunk.jobs);

  PromptArgs prompt;
  auto* pr = app.add_subcommand("prompt", "Render few-shot prompts, one file per test chunk");
  pr->add_option("--shots", prompt.shots, "Shots JSONL {src_chunks, tgt_chunks}")
      ->required()
      ->check(CLI::ExistingFile);
  pr->add_option("--test", prompt.test, "Chunk JSONL from `lwg chunk`")
      ->required()
      ->check(CLI::ExistingFile);
  pr->add_option("--src-lang", prompt.src_lang, "Source language name")->capture_default_str();
  pr->add_option("--tgt-lang", prompt.tgt_lang, "Target language name")->required();
  pr->add_option("--mask", prompt.mask, "Placeholder for the chunk to predict")
      ->capture_default_str();
  pr->add_option("--out", prompt.out, "Output directory")->required();
  add_common(pr, prompt.jobs);

  ChrfArgs chrf;
  auto* cf = app.add_subcommand("chrf", "Corpus chrF++ (optionally per sentence)");
  cf->add_option("--hyp", chrf.hyp, "Hypotheses, one per line")->required()->check(CLI::ExistingFile);
  cf->add_option("--ref", chrf.ref, "References, one per line")->required()->check(CLI::ExistingFile);
  cf->add_option("--nc", chrf.nc, "Character n-gram order")->capture_default_str();
  cf->add_option("--nw", chrf.nw, "Word n-gram order")->capture_default_str();
  cf->add_option("--beta", chrf.beta, "Recall weight")->capture_default_str();
  cf->add_flag("--lowercase", chrf.lowercase, "Lowercase before scoring");
  cf->add_flag("--sentence-level", chrf.sentence_level, "Also print per-line scores");
  cf->add_option("--out", chrf.out, "Output ('-' = stdout)")->capture_default_str();
  unsigned chrf_jobs = 0;
  add_common(cf, chrf_jobs);

  BucketArgs buck;
  auto* bk = app.add_subcommand("buckets", "Length-bucketed mean scores (TSV)");
  bk->add_option("--external-scores", buck.scores, "TSV id<TAB>metric<TAB>score")
      ->required()
      ->check(CLI::ExistingFile);
  bk->add_option("--src", buck.src, "Source sentences; ids are 1-based line numbers")
      ->required()
      ->check(CLI::ExistingFile);
  bk->add_option("--metric", buck.metric, "Only rows with this metric name");
  bk->add_option("--min-instances", buck.min_instances, "Merge buckets smaller than this")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bk->add_option("--out", buck.out, "TSV output ('-' = stdout)")->capture_default_str();
  unsigned bucket_jobs = 0;
  add_common(bk, bucket_jobs);

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = expand_config(app, std::move(args));
  } catch (const Error& e) {
    err << "lwg: error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  }
  std::vector<const char*> expanded;
  for (const auto& a : args) expanded.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(expanded.size()), expanded.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(ErrorKind::kUsage);
  }

  try {
    if (*g) run_group(group, io);
    else if (*st) run_stats(stats, io);
    else if (*sh) run_shuffle(shuf, io);
    else if (*se) run_simeval(sim, io, dim_opt->count() > 0);
    else if (*ch) run_chunk(chunk, io);
    else if (*pr) run_prompt(prompt, io);
    else if (*cf) run_chrf(chrf, io);
    else if (*bk) run_buckets(buck, io);
  } catch (const Error& e) {
    err << "lwg: error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "lwg: error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::kInput);
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"lwg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lwg::cli
