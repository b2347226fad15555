#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "crossfam/core.hpp"
#include "crossfam/cross_families.hpp"
#include "crossfam/oracle.hpp"
#include "crossfam/orders.hpp"
#include "crossfam/report.hpp"
#include "crossfam/shadows.hpp"

namespace crossfam::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long long parse_integer(const std::string& text, const std::string& what) {
  const std::string s = trim(text);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw UsageError("invalid " + what + " '" + text + "'");
}

int parse_int(const std::string& text, const std::string& what) {
  const long long v = parse_integer(text, what);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw UsageError(what + " out of range");
  }
  return static_cast<int>(v);
}

Count parse_count(const std::string& text, const std::string& what) {
  const std::string s = trim(text);
  if (!s.empty() && s[0] != '-') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
  }
  throw UsageError("invalid " + what + " '" + text + "'");
}

KSubset parse_set(int n, int k, const std::string& text) {
  std::vector<int> elements;
  if (!trim(text).empty()) {
    for (const auto& part : split(text, ',')) elements.push_back(parse_int(part, "set element"));
  }
  std::sort(elements.begin(), elements.end());
  if (static_cast<int>(elements.size()) != k) {
    throw UsageError("set '" + text + "' has " + std::to_string(elements.size()) +
                     " elements, expected k=" + std::to_string(k));
  }
  try {
    return KSubset(n, elements);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid set '") + text + "': " + e.what());
  }
}

SetFamily parse_family(Params p, const std::string& text) {
  std::vector<std::string> literals;
  if (!text.empty() && text[0] == '@') {
    std::ifstream file(text.substr(1));
    if (!file) throw UsageError("cannot read family file '" + text.substr(1) + "'");
    std::string line;
    while (std::getline(file, line)) {
      if (!trim(line).empty()) literals.push_back(line);
    }
  } else {
    for (const auto& part : split(text, ';')) {
      if (!part.empty()) literals.push_back(part);
    }
  }
  std::vector<KSubset> sets;
  for (const auto& lit : literals) sets.push_back(parse_set(p.n, p.k, lit));
  return SetFamily(p, sets);
}

OrderKind order_arg(const std::string& text) {
  try {
    return parse_order(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Params params_arg(const std::string& n, const std::string& k) {
  if (n.empty() || k.empty()) throw UsageError("--n and --k are required");
  try {
    return Params(parse_int(n, "n"), parse_int(k, "k"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SegmentSpec segment_arg(Params p, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("segment must be order:size");
  const OrderKind order = order_arg(text.substr(0, colon));
  try {
    return SegmentSpec(order, p, parse_count(text.substr(colon + 1), "segment size"));
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

struct Options {
  std::string n, k, i, t, m, a, order = "lex", format, set, rank, segment, family;
  std::string emit = "sizes";
  std::string mode = "auto";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100'000;
  bool ordered = false;
  std::string claim;
};

OutputFormat format_or(const Options& o, OutputFormat fallback) {
  if (o.format.empty()) return fallback;
  try {
    return parse_format(o.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Plain-value output shared by the single-shot commands.
void emit_fields(std::ostream& out, OutputFormat fmt,
                 const std::vector<std::pair<std::string, std::string>>& fields,
                 const nlohmann::json& record) {
  switch (fmt) {
    case OutputFormat::json:
      out << record.dump() << '\n';
      return;
    case OutputFormat::csv: {
      std::string head, row;
      for (const auto& [key, value] : fields) {
        head += (head.empty() ? "" : ",") + key;
        const bool quote = value.find_first_of(",\"") != std::string::npos;
        row += (row.empty() ? "" : ",") + (quote ? "\"" + value + "\"" : value);
      }
      out << head << '\n' << row << '\n';
      return;
    }
    case OutputFormat::human:
      if (fields.size() == 1) {
        out << fields.front().second << '\n';
        return;
      }
      for (std::size_t j = 0; j < fields.size(); ++j) {
        out << (j ? " " : "") << fields[j].first << '=' << fields[j].second;
      }
      out << '\n';
      return;
  }
}

int cmd_rank(const Options& o, std::ostream& out) {
  const Params p = params_arg(o.n, o.k);
  if (o.set.empty()) throw UsageError("--set is required");
  const KSubset s = parse_set(p.n, p.k, o.set);
  const Count r = rank(s, order_arg(o.order));
  emit_fields(out, format_or(o, OutputFormat::human), {{"rank", std::to_string(r)}},
              {{"n", p.n}, {"k", p.k}, {"order", o.order}, {"set", s.to_string()}, {"rank", r}});
  return 0;
}

int cmd_unrank(const Options& o, std::ostream& out) {
  const Params p = params_arg(o.n, o.k);
  if (o.rank.empty()) throw UsageError("--rank is required");
  const Count r = parse_count(o.rank, "rank");
  KSubset s;
  try {
    s = unrank(r, order_arg(o.order), p);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  emit_fields(out, format_or(o, OutputFormat::human), {{"set", s.to_string()}},
              {{"n", p.n}, {"k", p.k}, {"order", o.order}, {"rank", r}, {"set", s.to_string()}});
  return 0;
}

int cmd_segment(const Options& o, std::ostream& out) {
  const Params p = params_arg(o.n, o.k);
  SegmentSpec spec;
  if (!o.segment.empty()) {
    spec = segment_arg(p, o.segment);
  } else if (!o.m.empty()) {
    spec = segment_arg(p, o.order + ":" + o.m);
  } else {
    throw UsageError("--m or --segment is required");
  }
  const SetFamily f = initial_segment(spec);
  const OutputFormat fmt = format_or(o, OutputFormat::human);
  if (fmt == OutputFormat::json) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& s : f.members()) sets.push_back(s.to_string());
    out << nlohmann::json{{"n", p.n}, {"k", p.k}, {"order", std::string(to_string(spec.order))},
                          {"size", spec.size}, {"sets", sets}}
               .dump()
        << '\n';
  } else {
    if (fmt == OutputFormat::csv) out << "rank,set\n";
    // Family storage is numeric (colex); print in the requested order.
    std::vector<KSubset> sets = f.members();
    std::sort(sets.begin(), sets.end(), [&](const KSubset& x, const KSubset& y) {
      return compare(x, y, spec.order) < 0;
    });
    for (std::size_t r = 0; r < sets.size(); ++r) {
      if (fmt == OutputFormat::csv) {
        out << r << ",\"" << sets[r].to_string() << "\"\n";
      } else {
        out << sets[r].to_string() << '\n';
      }
    }
  }
  return 0;
}

int cmd_shadow(const Options& o, std::ostream& out) {
  const Params p = params_arg(o.n, o.k);
  if (o.t.empty()) throw UsageError("--t is required");
  const int t = o.t == "k" ? p.k : parse_int(o.t, "t");
  if (t < 0 || t > p.k) throw UsageError("t must lie in [0, k]");
  SetFamily f;
  if (!o.family.empty()) {
    f = parse_family(p, o.family);
  } else if (!o.segment.empty()) {
    f = initial_segment(segment_arg(p, o.segment));
  } else if (!o.m.empty()) {
    f = initial_segment(segment_arg(p, "colex:" + o.m));
  } else {
    throw UsageError("one of --family, --segment or --m is required");
  }
  const Count m = f.size();
  const Count sh = shadow(f, t).size();
  const Count kk = kk_min_shadow(ShadowQuery(p, t, m));
  const double lb = (p.k >= 1 && t >= 1) ? lovasz_bound(static_cast<std::int64_t>(m), p.k, t)
                                         : static_cast<double>(kk);
  emit_fields(out, format_or(o, OutputFormat::human),
              {{"m", std::to_string(m)},
               {"shadow", std::to_string(sh)},
               {"kk_min", std::to_string(kk)},
               {"lovasz", format_double(lb)}},
              {{"n", p.n}, {"k", p.k}, {"t", t}, {"m", m}, {"shadow", sh},
               {"kk_min", kk}, {"lovasz", lb}});
  return 0;
}

int cmd_maxb(const Options& o, std::ostream& out) {
  const Params p = params_arg(o.n, o.k);
  if (o.a.empty()) throw UsageError("--a is required");
  const Count a = parse_count(o.a, "a");
  Count b = 0;
  try {
    b = max_compatible_b(p.n, p.k, a);
  } catch (const std::logic_error& e) {
    throw UsageError(e.what());
  }
  emit_fields(out, format_or(o, OutputFormat::human), {{"max_b", std::to_string(b)}},
              {{"n", p.n}, {"k", p.k}, {"a", a}, {"max_b", b}});
  return 0;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  const Params p = params_arg(o.n, o.k);
  if (o.i.empty()) throw UsageError("--i is required");
  if (o.emit != "sizes" && o.emit != "sets") throw UsageError("--emit must be sizes or sets");
  const int i = parse_int(o.i, "i");
  ExtremalPair pair;
  try {
    pair = build_extremal_pair(p.n, p.k, i);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool cross = is_cross_intersecting(pair.a_family, pair.b_family);
  const Count product = checked_mul(pair.a_size, pair.b_size);
  const OutputFormat fmt = format_or(o, OutputFormat::human);
  const bool sets = o.emit == "sets";
  if (fmt == OutputFormat::json) {
    nlohmann::json j{{"n", p.n},         {"k", p.k},
                     {"i", i},           {"a_size", pair.a_size},
                     {"b_size", pair.b_size}, {"product", product},
                     {"cross_intersecting", cross}, {"boundary", pair.boundary}};
    if (sets) {
      j["a_sets"] = nlohmann::json::array();
      j["b_sets"] = nlohmann::json::array();
      for (const auto& s : pair.a_family.members()) j["a_sets"].push_back(s.to_string());
      for (const auto& s : pair.b_family.members()) j["b_sets"].push_back(s.to_string());
    }
    out << j.dump() << '\n';
  } else if (fmt == OutputFormat::csv) {
    if (sets) {
      out << "family,set\n";
      for (const auto& s : pair.a_family.members()) out << "A,\"" << s.to_string() << "\"\n";
      for (const auto& s : pair.b_family.members()) out << "B,\"" << s.to_string() << "\"\n";
    } else {
      out << "n,k,i,a_size,b_size,product,cross_intersecting\n"
          << p.n << ',' << p.k << ',' << i << ',' << pair.a_size << ',' << pair.b_size
          << ',' << product << ',' << (cross ? "true" : "false") << '\n';
    }
  } else {
    out << "|A|=" << pair.a_size << " |B|=" << pair.b_size << " product=" << product
        << " cross_intersecting=" << (cross ? "yes" : "no")
        << (pair.boundary ? " (n=2k)" : "") << '\n';
    if (sets) {
      for (const auto& s : pair.a_family.members()) out << "A " << s.to_string() << '\n';
      for (const auto& s : pair.b_family.members()) out << "B " << s.to_string() << '\n';
    }
  }
  return cross ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

using Task = std::function<std::vector<Verdict>()>;

SweepMode family_mode(const Options& o, int n, int k) {
  const Count layer = binom(n, k);
  const bool fits = layer < 64 && (Count{1} << layer) <= exhaustive_cap();
  if (o.mode == "auto") return fits ? SweepMode::exhaustive_families : SweepMode::sampled;
  if (o.mode == "exhaustive") {
    if (!fits) {
      throw UsageError("exhaustive mode at n=" + std::to_string(n) + ", k=" +
                       std::to_string(k) + " exceeds the cap of " +
                       std::to_string(exhaustive_cap()) +
                       " families (set CROSSFAM_MAX_EXHAUSTIVE to raise it)");
    }
    return SweepMode::exhaustive_families;
  }
  if (o.mode == "sampled") {
    if (layer > 64) throw UsageError("sampled mode needs C(n,k) <= 64");
    return SweepMode::sampled;
  }
  throw UsageError("--mode must be auto, exhaustive or sampled");
}

void require_segment_cap(int n, int k) {
  if (binom(n, k) > kSegmentPairsCap) {
    throw UsageError("segment sweep at n=" + std::to_string(n) + ", k=" +
                     std::to_string(k) + " exceeds C(n,k) <= 10^4");
  }
}

std::vector<Task> plan_tasks(const Options& o) {
  if (o.n.empty() || o.k.empty()) throw UsageError("--n and --k are required");
  const auto ns = parse_int_list(o.n);
  const auto ks = parse_int_list(o.k);
  std::optional<std::vector<int>> is;
  if (!o.i.empty()) is = parse_int_list(o.i);
  for (int n : ns) {
    if (n < 1 || n > kMaxGround) throw UsageError("n must lie in [1, 64]");
  }
  for (int k : ks) {
    if (k < 0) throw UsageError("k must be nonnegative");
  }
  auto i_list = [&](int lo, int hi) {
    std::vector<int> out;
    for (int i : is.value_or(IntRange{lo, hi}.values())) {
      if (i >= lo && i <= hi) out.push_back(i);
    }
    return out;
  };
  auto t_value = [&]() {
    if (o.t.empty()) throw UsageError("--t is required for " + o.claim);
    return parse_int(o.t, "t");
  };

  std::vector<Task> tasks;
  const std::string& c = o.claim;
  for (int n : ns) {
    for (int k : ks) {
      if (k > n) continue;
      if (c == "pyber") {
        if (k < 1 || n < 2 * k) continue;
        require_segment_cap(n, k);
        tasks.push_back([=] { return std::vector<Verdict>{check_pyber(n, k)}; });
      } else if (c == "thm2") {
        if (k < 2 || n < 2 * k) continue;
        require_segment_cap(n, k);
        for (int i : i_list(3, k + 1)) {
          tasks.push_back([=] { return std::vector<Verdict>{check_thm2(n, k, i)}; });
        }
      } else if (c == "thm1") {
        if (k < 1 || n <= 2 * k) continue;
        require_segment_cap(n, k);
        tasks.push_back([=] {
          std::vector<Verdict> out{check_thm1_segments(n, k)};
          if (k >= 2) out.push_back(check_thm1_consistency(n, k));
          const Count layer = binom(n, k);
          Count families = 0;
          try {
            families = binom(static_cast<std::int64_t>(layer), binom(n - 1, k - 1));
          } catch (const std::overflow_error&) {
            families = std::numeric_limits<Count>::max();
          }
          if (k >= 2 && layer <= 64 && families <= exhaustive_cap()) {
            out.push_back(check_thm1_boundary(n, k));
          }
          return out;
        });
      } else if (c == "prop1") {
        if (k < 2 || n < 2 * k) continue;
        require_segment_cap(n, k);
        tasks.push_back([=] {
          return std::vector<Verdict>{verify_prop1(n, k), check_prop1_graph(n, k)};
        });
      } else if (c == "lemma7") {
        if (k < 1 || n < 2 * k) continue;
        require_segment_cap(n, k);
        for (int j : i_list(1, k)) {
          tasks.push_back([=] { return std::vector<Verdict>{verify_lemma7(n, k, j)}; });
        }
      } else if (c == "kk") {
        const int t = t_value();
        if (t < 0 || t > k) continue;
        const SweepMode mode = family_mode(o, n, k);
        if (binom(n, t) > 64) throw UsageError("kk check needs C(n,t) <= 64");
        const auto samples = o.samples;
        const auto seed = o.seed;
        tasks.push_back([=] { return check_kk(n, k, t, mode, samples, seed); });
      } else if (c == "mors") {
        const int t = t_value();
        if (!(k > t && t >= 1)) continue;
        tasks.push_back([=] { return std::vector<Verdict>{check_mors(n, k, t)}; });
      } else if (c == "hilton") {
        if (k < 1) continue;
        const SweepMode mode = family_mode(o, n, k);
        const auto samples = o.samples;
        const auto seed = o.seed;
        tasks.push_back([=] {
          return std::vector<Verdict>{check_hilton(n, k, mode, samples, seed)};
        });
      } else if (c == "inequalities") {
        if (k < 1 || n < 2 * k) continue;
        tasks.push_back([=] {
          auto out = check_inequalities(n, k);
          if (k >= 2) out.push_back(check_thm2_monotone(n, k));
          return out;
        });
      } else {
        throw UsageError("unknown claim '" + c +
                         "' (pyber, thm1, thm2, prop1, lemma7, kk, mors, hilton, "
                         "inequalities)");
      }
    }
  }
  if (tasks.empty()) {
    throw UsageError("no parameter point in range satisfies the preconditions of " + c);
  }
  return tasks;
}

class RecordSink {
 public:
  RecordSink(std::ostream& out, OutputFormat fmt, bool ordered)
      : out_(out), fmt_(fmt), ordered_(ordered) {
    if (fmt_ == OutputFormat::csv) out_ << csv_header() << '\n';
  }

  void deliver(std::size_t index, std::vector<Verdict> records) {
    std::lock_guard lock(mutex_);
    if (!ordered_) {
      write(records);
      return;
    }
    pending_.emplace(index, std::move(records));
    while (!pending_.empty() && pending_.begin()->first == next_) {
      write(pending_.begin()->second);
      pending_.erase(pending_.begin());
      ++next_;
    }
  }

  const RunSummary& summary() const { return summary_; }

 private:
  void write(const std::vector<Verdict>& records) {
    for (const auto& v : records) {
      summary_.add(v);
      switch (fmt_) {
        case OutputFormat::json:
          out_ << verdict_to_json(v) << '\n';
          break;
        case OutputFormat::csv:
          out_ << verdict_to_csv(v) << '\n';
          break;
        case OutputFormat::human:
          out_ << verdict_to_human(v) << '\n';
          break;
      }
    }
    out_.flush();
  }

  std::ostream& out_;
  OutputFormat fmt_;
  bool ordered_;
  std::mutex mutex_;
  std::map<std::size_t, std::vector<Verdict>> pending_;
  std::size_t next_ = 0;
  RunSummary summary_;
};

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt = format_or(o, OutputFormat::json);
  if (o.jobs == 0) throw UsageError("--jobs must be positive");
  const std::vector<Task> tasks = plan_tasks(o);

  RecordSink sink(out, fmt, o.ordered);
  std::atomic<std::size_t> cursor{0};
  std::mutex error_mutex;
  std::string error;
  auto worker = [&] {
    for (std::size_t idx; (idx = cursor.fetch_add(1)) < tasks.size();) {
      std::vector<Verdict> records;
      try {
        records = tasks[idx]();
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (error.empty()) error = e.what();
      }
      sink.deliver(idx, std::move(records));
    }
  };
  const unsigned jobs =
      static_cast<unsigned>(std::min<std::size_t>(o.jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  const RunSummary& s = sink.summary();
  switch (fmt) {
    case OutputFormat::json:
      out << summary_to_json(s) << '\n';
      break;
    case OutputFormat::csv:
      err << summary_to_human(s) << '\n';
      break;
    case OutputFormat::human:
      out << summary_to_human(s) << '\n';
      break;
  }
  if (!error.empty()) {
    err << "error: " << error << '\n';
    return 2;
  }
  return s.failed == 0 ? 0 : 1;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots), "range");
    const int hi = parse_int(text.substr(dots + 2), "range");
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part, "value"));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for cross-intersecting families of k-subsets"};
  app.name("crossfam");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "ground set size (verify: range such as 4..14)");
    sub->add_option("--k", o.k, "set size (verify: range)");
    sub->add_option("--format", o.format, "json, csv or human");
  };
  auto with_order = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "lex, colex or revcolex");
  };

  auto* rank_cmd = app.add_subcommand("rank", "rank of a set in an order");
  common(rank_cmd);
  with_order(rank_cmd);
  rank_cmd->add_option("--set", o.set, "comma-separated 1-based elements");

  auto* unrank_cmd = app.add_subcommand("unrank", "set at a 0-based rank");
  common(unrank_cmd);
  with_order(unrank_cmd);
  unrank_cmd->add_option("--rank", o.rank, "0-based rank");

  auto* segment_cmd = app.add_subcommand("segment", "list an initial segment");
  common(segment_cmd);
  with_order(segment_cmd);
  segment_cmd->add_option("--m", o.m, "segment size");
  segment_cmd->add_option("--segment", o.segment, "order:size");

  auto* shadow_cmd = app.add_subcommand("shadow", "shadow size against the lower bounds");
  common(shadow_cmd);
  shadow_cmd->add_option("--t", o.t, "shadow level, or k");
  shadow_cmd->add_option("--m", o.m, "size of a colex segment");
  shadow_cmd->add_option("--segment", o.segment, "order:size");
  shadow_cmd->add_option("--family", o.family, "sets as 1,2;3,4 or @file");

  auto* maxb_cmd = app.add_subcommand("maxb", "largest lex segment compatible with L(a)");
  common(maxb_cmd);
  maxb_cmd->add_option("--a", o.a, "size of the first segment");

  auto* extremal_cmd = app.add_subcommand("extremal", "the extremal pair for parameter i");
  common(extremal_cmd);
  extremal_cmd->add_option("--i", o.i, "2 <= i <= k+1");
  extremal_cmd->add_option("--emit", o.emit, "sizes or sets");

  auto verify_flags = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--i", o.i, "values of i (lemma7: j)");
    sub->add_option("--t", o.t, "shadow level (kk, mors)");
    sub->add_option("--mode", o.mode, "auto, exhaustive or sampled (kk, hilton)");
    sub->add_option("--samples", o.samples, "sample count for sampled mode");
    sub->add_option("--seed", o.seed, "sampling seed");
    sub->add_option("--jobs", o.jobs, "worker threads");
    sub->add_flag("--ordered", o.ordered, "emit records in parameter order");
  };
  auto* verify_cmd = app.add_subcommand("verify", "check a claim over parameter ranges");
  verify_cmd->add_option("claim", o.claim, "pyber, thm1, thm2, prop1, lemma7, kk, mors, hilton, inequalities")
      ->required();
  verify_flags(verify_cmd);
  auto* ineq_cmd = app.add_subcommand("inequalities", "same as verify inequalities");
  verify_flags(ineq_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (rank_cmd->parsed()) return cmd_rank(o, out);
    if (unrank_cmd->parsed()) return cmd_unrank(o, out);
    if (segment_cmd->parsed()) return cmd_segment(o, out);
    if (shadow_cmd->parsed()) return cmd_shadow(o, out);
    if (maxb_cmd->parsed()) return cmd_maxb(o, out);
    if (extremal_cmd->parsed()) return cmd_extremal(o, out);
    if (ineq_cmd->parsed()) o.claim = "inequalities";
    return cmd_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace crossfam::cli
