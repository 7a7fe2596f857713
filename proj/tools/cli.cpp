#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "nearplanar/classify.hpp"
#include "nearplanar/constructions.hpp"
#include "nearplanar/detail/parallel.hpp"
#include "nearplanar/rigidity.hpp"

namespace nearplanar::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  const PrimeField f(n);
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = f.pow(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = f.mul(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

struct RunConfig {
  int dim = 3;
  std::string primes_text;
  std::uint64_t seed = 0;
  int trials = 3;
  int jobs = 1;
  std::vector<std::string> inputs;
  std::string format = "jsonl";

  RandomConfig random() const {
    RandomConfig rc;
    if (!primes_text.empty()) rc.primes = parse_primes(primes_text);
    rc.trials = trials;
    rc.seed = seed;
    return rc;
  }
};

struct Record {
  std::int64_t index = 0;
  Graph graph;
};

// Reads graph6 records from the configured inputs (or stdin) in chunks;
// blank lines are skipped and parse errors carry the source line number.
class GraphReader {
 public:
  GraphReader(const std::vector<std::string>& paths, std::istream& in) : in_(in), paths_(paths) {}

  std::vector<Record> next_chunk(std::size_t limit) {
    std::vector<Record> out;
    std::string line;
    while (out.size() < limit) {
      std::istream* s = current();
      if (!s) break;
      if (!std::getline(*s, line)) {
        advance();
        continue;
      }
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        out.push_back({index_++, parse_graph6(line)});
      } catch (const Graph6Error& e) {
        throw UsageError(source_name() + ":" + std::to_string(line_no_) + ": " + e.what());
      }
    }
    return out;
  }

  std::vector<Graph> read_all() {
    std::vector<Graph> out;
    for (;;) {
      auto chunk = next_chunk(4096);
      if (chunk.empty()) return out;
      for (auto& r : chunk) out.push_back(std::move(r.graph));
    }
  }

 private:
  std::istream* current() {
    if (paths_.empty()) return done_ ? nullptr : &in_;
    while (pos_ < paths_.size()) {
      if (!file_.is_open()) {
        if (paths_[pos_] == "-") return &in_;
        file_.open(paths_[pos_]);
        if (!file_) throw UsageError("cannot open input '" + paths_[pos_] + "'");
        line_no_ = 0;
      }
      return &file_;
    }
    return nullptr;
  }

  void advance() {
    if (paths_.empty()) {
      done_ = true;
      return;
    }
    file_.close();
    file_.clear();
    ++pos_;
    line_no_ = 0;
  }

  std::string source_name() const {
    if (paths_.empty() || pos_ >= paths_.size() || paths_[pos_] == "-") return "<stdin>";
    return paths_[pos_];
  }

  std::istream& in_;
  std::vector<std::string> paths_;
  std::size_t pos_ = 0;
  std::ifstream file_;
  bool done_ = false;
  std::int64_t index_ = 0;
  std::int64_t line_no_ = 0;
};

// Reader -> worker pool -> order-restoring writer.  Each chunk is processed
// in parallel and written in input order, so output does not depend on jobs.
template <class F>
void stream_map(GraphReader& reader, int jobs, std::ostream& out, F&& f) {
  const std::size_t chunk = 64 * static_cast<std::size_t>(std::max(jobs, 1));
  for (;;) {
    const std::vector<Record> records = reader.next_chunk(chunk);
    if (records.empty()) return;
    std::vector<std::string> lines(records.size());
    detail::parallel_for(records.size(), jobs, [&](std::size_t i) { lines[i] = f(records[i]); });
    for (const auto& l : lines) out << l << '\n';
    out.flush();
  }
}

void check_config(const RunConfig& c) {
  if (c.dim < 1) throw UsageError("--dim must be at least 1");
  if (c.trials < 1) throw UsageError("--trials must be at least 1");
  if (c.jobs < 1) throw UsageError("--jobs must be at least 1");
  (void)c.random();
}

void add_common(CLI::App* sub, RunConfig& c, bool with_inputs) {
  sub->add_option("--seed", c.seed, "Base seed for generic placements")->capture_default_str();
  sub->add_option("--trials", c.trials, "Random placements per prime")->capture_default_str();
  sub->add_option("--primes", c.primes_text, std::string("Comma-separated primes (default from ") + kPrimesEnv + ")");
  sub->add_option("--jobs,-j", c.jobs, "Worker threads")->capture_default_str();
  if (with_inputs) sub->add_option("--input,-i", c.inputs, "graph6 input files ('-' for stdin)");
}

std::vector<Graph> enumerated_census(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n)
    for (Graph& g : enumerate_connected(n)) out.push_back(std::move(g));
  return out;
}

std::string rank_line(const Record& r, int dim, const RandomConfig& base, const std::string& format) {
  RandomConfig rc = base;
  rc.seed = graph_seed(base.seed, static_cast<std::uint64_t>(r.index));
  const RankResult res = generic_rank(r.graph, dim, rc);
  const std::string g6 = write_graph6(r.graph);
  const bool independent = res.rank == r.graph.size();
  const bool rigid = res.rank == rigid_rank(r.graph.order(), dim);
  if (format == "text") {
    return g6 + " rank=" + std::to_string(res.rank) + " independent=" + (independent ? "yes" : "no") +
           " rigid=" + (rigid ? "yes" : "no");
  }
  if (format == "csv") {
    return std::to_string(r.index) + "," + g6 + "," + std::to_string(dim) + "," + std::to_string(res.rank) + "," +
           (independent ? "1" : "0") + "," + (rigid ? "1" : "0");
  }
  ordered_json j;
  j["index"] = r.index;
  j["graph6"] = g6;
  j["dim"] = dim;
  j["n"] = r.graph.order();
  j["m"] = r.graph.size();
  j["rank"] = res.rank;
  j["independent"] = independent;
  j["rigid"] = rigid;
  j["stable"] = res.stable;
  std::vector<std::uint64_t> primes;
  for (auto p : res.primes)
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  j["primes"] = primes;
  j["rank_per_prime"] = res.rank_per_prime;
  j["failure_bound"] = res.failure_bound;
  return j.dump();
}

std::string classify_text(const ClassificationReport& r) {
  std::ostringstream s;
  s << r.graph6 << " n=" << r.n << " m=" << r.m << " planar=" << r.planar << " apicity=(" << r.apicity.vertex.value
    << "," << r.apicity.edge.value << "," << r.apicity.critical_vertex << "," << r.apicity.critical_edge
    << ") sparse=" << r.sparsity.sparse << " rank=" << r.rank.rank << " circuit=" << r.circuit
    << " rigid=" << r.rigid << " globally_rigid=" << r.globally_rigid() << " gcr=" << r.mlt.gcr << " mlt=["
    << r.mlt.lower << "," << r.mlt.upper << "]" << (r.counterexample ? " COUNTEREXAMPLE" : "");
  return s.str();
}

// Conjecture hunts: report graphs where the conjectured statement fails.
struct Hunt {
  std::string id;
  std::string statement;
  std::function<bool(GraphFacts&)> in_class;
  std::function<bool(GraphFacts&)> holds;
};

const std::vector<Hunt>& hunts() {
  static const std::vector<Hunt> list = {
      {"two-edge-apex-flexible-circuit-tight",
       "2-edge-apex flexible circuits in dimension 3 are (3,6)-tight",
       [](GraphFacts& f) { return !f.planar() && f.k_edge_apex(2) && f.circuit() && !f.rigid(); },
       [](GraphFacts& f) { return f.tight(); }},
      {"two-edge-apex-global-rigidity",
       "2-edge-apex: globally rigid iff 4-connected and G - e rigid for every edge e",
       [](GraphFacts& f) { return f.order() >= 5 && f.k_edge_apex(2); },
       [](GraphFacts& f) {
         bool predicted = f.connectivity() >= 4;
         if (predicted) {
           const HendricksonResult h = hendrickson_check(f.graph(), 3, f.random());
           predicted = h.redundantly_rigid;
         }
         const Verdict v = f.global_rigidity().verdict;
         return v == Verdict::kUndecided || predicted == (v == Verdict::kYes);
       }},
  };
  return list;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigidity of near-planar graphs: classification, verification and tables", "nearplanar"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv(kPrimesEnv)) cfg.primes_text = env;

  auto* classify_cmd = app.add_subcommand("classify", "graph6 stream -> JSONL classification reports");
  add_common(classify_cmd, cfg, true);
  classify_cmd->add_option("--dim", cfg.dim, "Dimension (reports are 3-dimensional)")->capture_default_str();
  classify_cmd->add_option("--format", cfg.format, "jsonl or text")->check(CLI::IsMember({"jsonl", "text"}));

  auto* rank_cmd = app.add_subcommand("rank", "graph6 stream -> generic rigidity rank");
  add_common(rank_cmd, cfg, true);
  rank_cmd->add_option("--dim", cfg.dim, "Dimension")->capture_default_str();
  rank_cmd->add_option("--format", cfg.format, "jsonl, csv or text")->check(CLI::IsMember({"jsonl", "csv", "text"}));

  int table = 0;
  int table_n = 0;
  std::string census_path;
  auto* tab_cmd = app.add_subcommand("tabulate", "count table rows over a complete census");
  add_common(tab_cmd, cfg, false);
  tab_cmd->add_option("--table", table, "Table 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  tab_cmd->add_option("--n", table_n, "Order of the counted graphs")->required();
  tab_cmd->add_option("--census", census_path, "graph6 census file (default stdin)");
  std::string tab_format = "csv";
  tab_cmd->add_option("--format", tab_format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));

  std::string theorem;
  int max_n = kMaxEnumerationOrder;
  int min_n = 1;
  auto* verify_cmd = app.add_subcommand("verify", "check a rule against a census");
  add_common(verify_cmd, cfg, false);
  verify_cmd->add_option("--theorem", theorem, "Rule id or 'all'")->required();
  verify_cmd->add_option("--max-n", max_n, "Largest enumerated order")->capture_default_str();
  verify_cmd->add_option("--min-n", min_n, "Smallest enumerated order")->capture_default_str();
  verify_cmd->add_option("--census", census_path, "graph6 census file instead of enumeration");

  std::string gen_name;
  std::vector<int> gen_params;
  bool gen_info = false;
  auto* gen_cmd = app.add_subcommand("gen", "print a catalog graph as graph6");
  gen_cmd->add_option("name", gen_name, "Catalog name")->required();
  gen_cmd->add_option("params", gen_params, "Integer parameters");
  gen_cmd->add_flag("--info", gen_info, "Print the catalog entry as JSON instead");

  int enum_n = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "print all connected graphs on n vertices");
  enum_cmd->add_option("--n", enum_n, "Order")->required();

  std::string conjecture;
  auto* hunt_cmd = app.add_subcommand("hunt", "search a census for conjecture counterexamples (no pass/fail)");
  add_common(hunt_cmd, cfg, false);
  hunt_cmd->add_option("--conjecture", conjecture, "Conjecture id")->required();
  hunt_cmd->add_option("--max-n", max_n, "Largest enumerated order")->capture_default_str();
  hunt_cmd->add_option("--census", census_path, "graph6 census file instead of enumeration");

  auto* rules_cmd = app.add_subcommand("rules", "list rule ids and statements");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  check_config(cfg);
  const RandomConfig rc = cfg.random();

  auto load_census = [&](int lo, int hi) {
    if (!census_path.empty()) {
      GraphReader r({census_path}, in);
      return std::make_pair(r.read_all(), "file " + census_path);
    }
    if (hi > kMaxEnumerationOrder || lo < 1)
      throw UsageError("enumeration supports n = 1.." + std::to_string(kMaxEnumerationOrder) +
                       "; pass --census for larger orders");
    return std::make_pair(enumerated_census(lo, hi),
                          "connected graphs n = " + std::to_string(lo) + ".." + std::to_string(hi));
  };

  if (*classify_cmd) {
    if (cfg.dim != 3) throw UsageError("classify reports are 3-dimensional; use 'rank --dim' for other dimensions");
    GraphReader reader(cfg.inputs, in);
    bool bad = false;
    std::vector<char> flags;
    stream_map(reader, cfg.jobs, out, [&](const Record& r) {
      ClassifyConfig cc;
      cc.random = rc;
      cc.random.seed = graph_seed(rc.seed, static_cast<std::uint64_t>(r.index));
      cc.index = r.index;
      const ClassificationReport rep = classify(r.graph, cc);
      if (rep.counterexample || !rep.consistency_violations().empty()) {
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        bad = true;
      }
      return cfg.format == "text" ? classify_text(rep) : rep.to_json();
    });
    if (bad) {
      err << "nearplanar: counterexample recorded in the classification output\n";
      return kCounterexample;
    }
    return kOk;
  }

  if (*rank_cmd) {
    GraphReader reader(cfg.inputs, in);
    if (cfg.format == "csv") out << "index,graph6,dim,rank,independent,rigid\n";
    stream_map(reader, cfg.jobs, out, [&](const Record& r) { return rank_line(r, cfg.dim, rc, cfg.format); });
    return kOk;
  }

  if (*tab_cmd) {
    std::vector<Graph> census;
    if (census_path.empty()) {
      GraphReader r({}, in);
      census = r.read_all();
    } else {
      GraphReader r({census_path}, in);
      census = r.read_all();
    }
    RunOptions opt{rc, cfg.jobs};
    const Table t = tabulate(table, census, table_n, opt);
    if (tab_format == "jsonl") {
      ordered_json j;
      j["table"] = t.id;
      j["n"] = t.n;
      for (std::size_t c = 0; c < t.columns.size(); ++c) j[t.columns[c]] = t.counts[c];
      out << j.dump() << '\n';
    } else {
      out << t.csv_header() << '\n' << t.csv_row() << '\n';
    }
    return kOk;
  }

  if (*verify_cmd) {
    if (theorem != "all" && !is_known_rule(theorem)) throw UsageError("unknown rule id '" + theorem + "' (see 'rules')");
    auto [census, description] = load_census(min_n, max_n);
    RunOptions opt{rc, cfg.jobs};
    const VerificationReport rep = verify_theorem(theorem, census, description, opt);
    out << rep.to_json() << '\n';
    if (!rep.pass()) {
      err << "nearplanar: " << rep.counterexamples.size() << " counterexample(s) to " << theorem << '\n';
      return kCounterexample;
    }
    return kOk;
  }

  if (*gen_cmd) {
    const CatalogEntry e = catalog_entry(gen_name, gen_params);
    if (gen_info) {
      ordered_json j;
      j["name"] = e.name;
      j["params"] = e.params;
      j["graph6"] = write_graph6(e.graph);
      j["labels"] = e.labels;
      j["annotations"] = e.annotations;
      ordered_json checks = ordered_json::object();
      for (const auto& [k, v] : e.checks) checks[k] = v;
      j["checks"] = checks;
      j["valid"] = e.valid();
      out << j.dump() << '\n';
      return kOk;
    }
    if (!e.valid()) {
      err << "nearplanar: catalog entry '" << e.name << "' failed checks:";
      for (const auto& f : e.failed_checks()) err << " [" << f << "]";
      err << '\n';
      return kUsage;
    }
    out << write_graph6(e.graph) << '\n';
    return kOk;
  }

  if (*enum_cmd) {
    for (const Graph& g : enumerate_connected(enum_n)) out << write_graph6(g) << '\n';
    return kOk;
  }

  if (*hunt_cmd) {
    const Hunt* h = nullptr;
    for (const Hunt& x : hunts())
      if (x.id == conjecture) h = &x;
    if (!h) {
      std::string ids;
      for (const Hunt& x : hunts()) ids += " " + x.id;
      throw UsageError("unknown conjecture '" + conjecture + "'; known:" + ids);
    }
    auto [census, description] = load_census(1, max_n);
    std::vector<char> in_class(census.size(), 0);
    std::vector<char> fails(census.size(), 0);
    detail::parallel_for(census.size(), cfg.jobs, [&](std::size_t i) {
      RandomConfig r = rc;
      r.seed = graph_seed(rc.seed, i);
      GraphFacts f(census[i], r);
      if (!h->in_class(f)) return;
      in_class[i] = 1;
      fails[i] = !h->holds(f);
    });
    ordered_json j;
    j["conjecture"] = h->id;
    j["statement"] = h->statement;
    j["census"] = description;
    j["graphs"] = census.size();
    std::int64_t examined = 0;
    ordered_json found = ordered_json::array();
    for (std::size_t i = 0; i < census.size(); ++i) {
      examined += in_class[i];
      if (fails[i]) found.push_back(write_graph6(census[i]));
    }
    j["in_class"] = examined;
    j["candidates"] = found;
    out << j.dump() << '\n';
    return kOk;
  }

  if (*rules_cmd) {
    for (const RuleInfo& r : rule_catalog())
      out << r.id << (r.asserted ? "" : " (fixture)") << "\t" << r.statement << '\n';
    return kOk;
  }
  return kUsage;
}

}  // namespace

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    std::uint64_t p = 0;
    try {
      p = std::stoull(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("prime list: '" + tok + "' is not a number");
    }
    if (used != tok.size()) throw UsageError("prime list: '" + tok + "' is not a number");
    if (p < 3 || p > (std::uint64_t{1} << 62) || !is_prime(p))
      throw UsageError("prime list: " + tok + " is not a prime in [3, 2^62]");
    out.push_back(p);
  }
  if (out.empty()) throw UsageError("prime list is empty");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return run(args, in, out, err);
  } catch (const IncompleteCensusError& e) {
    err << "nearplanar: " << e.what() << '\n';
  } catch (const UnsupportedSizeError& e) {
    err << "nearplanar: unsupported size: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "nearplanar: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace nearplanar::cli
