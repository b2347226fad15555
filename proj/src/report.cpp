#include "crossfam/report.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace crossfam {

namespace {

using nlohmann::json;

constexpr Count kJsonSafeInteger = Count{1} << 53;

json encode_count(Count c) {
  if (c > kJsonSafeInteger) return std::to_string(c);
  return c;
}

Count decode_count(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
  }
  if (j.is_number_unsigned() || j.is_number_integer()) return j.get<Count>();
  throw std::invalid_argument("expected an integer");
}

json encode_optional(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<int> decode_optional(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return it->get<int>();
}

std::string attained_text(const std::vector<SizePair>& pairs) {
  std::string out;
  for (const auto& [a, b] : pairs) {
    if (!out.empty()) out += ';';
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out;
}

std::vector<SizePair> parse_attained(std::string_view text) {
  std::vector<SizePair> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ';') {
      ++pos;
      continue;
    }
    const auto close = text.find(')', pos);
    if (text[pos] != '(' || close == std::string_view::npos) {
      throw std::invalid_argument("bad attained_at field");
    }
    const std::string inner(text.substr(pos + 1, close - pos - 1));
    const auto comma = inner.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad attained_at pair");
    out.emplace_back(std::stoull(inner.substr(0, comma)),
                     std::stoull(inner.substr(comma + 1)));
    pos = close + 1;
  }
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(std::string_view row) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const char c = row[i];
    if (quoted) {
      if (c == '"' && i + 1 < row.size() && row[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV row");
  return fields;
}

std::string optional_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::optional<int> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stoi(s);
}

}  // namespace

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::human:
      return "human";
  }
  return "?";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "human") return OutputFormat::human;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string verdict_to_json(const Verdict& v) {
  json j = json::object();
  j["claim"] = v.claim;
  j["n"] = encode_optional(v.n);
  j["k"] = encode_optional(v.k);
  j["i"] = encode_optional(v.i);
  if (v.t) j["t"] = *v.t;
  j["expected"] = encode_count(v.expected);
  j["observed"] = encode_count(v.observed);
  j["relation"] = std::string(to_string(v.relation));
  json pairs = json::array();
  for (const auto& [a, b] : v.attained_at) {
    pairs.push_back(json::array({encode_count(a), encode_count(b)}));
  }
  j["attained_at"] = std::move(pairs);
  j["passed"] = v.passed;
  j["seed"] = v.seed ? encode_count(*v.seed) : json(nullptr);
  j["note"] = v.note;
  return j.dump();
}

Verdict verdict_from_json(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON record: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("JSON record is not an object");
  try {
    Verdict v;
    v.claim = j.at("claim").get<std::string>();
    v.n = decode_optional(j, "n");
    v.k = decode_optional(j, "k");
    v.i = decode_optional(j, "i");
    v.t = decode_optional(j, "t");
    v.expected = decode_count(j.at("expected"));
    v.observed = decode_count(j.at("observed"));
    v.relation = parse_relation(j.at("relation").get<std::string>());
    for (const auto& pair : j.at("attained_at")) {
      v.attained_at.emplace_back(decode_count(pair.at(0)),
                                 decode_count(pair.at(1)));
    }
    v.passed = j.at("passed").get<bool>();
    if (!j.at("seed").is_null()) v.seed = decode_count(j.at("seed"));
    if (auto it = j.find("note"); it != j.end()) v.note = it->get<std::string>();
    return v;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON record: ") + e.what());
  }
}

std::string csv_header() {
  return "claim,n,k,i,t,expected,observed,relation,attained_at,passed,seed,note";
}

std::string verdict_to_csv(const Verdict& v) {
  std::ostringstream out;
  out << csv_quote(v.claim) << ',' << optional_text(v.n) << ','
      << optional_text(v.k) << ',' << optional_text(v.i) << ','
      << optional_text(v.t) << ',' << v.expected << ',' << v.observed << ','
      << to_string(v.relation) << ',' << csv_quote(attained_text(v.attained_at))
      << ',' << (v.passed ? "true" : "false") << ','
      << (v.seed ? std::to_string(*v.seed) : std::string()) << ','
      << csv_quote(v.note);
  return out.str();
}

Verdict verdict_from_csv(std::string_view row) {
  const auto f = csv_split(row);
  if (f.size() != 12) {
    throw std::invalid_argument("CSV row has " + std::to_string(f.size()) +
                                " fields, expected 12");
  }
  try {
    Verdict v;
    v.claim = f[0];
    v.n = parse_optional(f[1]);
    v.k = parse_optional(f[2]);
    v.i = parse_optional(f[3]);
    v.t = parse_optional(f[4]);
    v.expected = std::stoull(f[5]);
    v.observed = std::stoull(f[6]);
    v.relation = parse_relation(f[7]);
    v.attained_at = parse_attained(f[8]);
    if (f[9] != "true" && f[9] != "false") {
      throw std::invalid_argument("bad passed field");
    }
    v.passed = f[9] == "true";
    if (!f[10].empty()) v.seed = std::stoull(f[10]);
    v.note = f[11];
    return v;
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(std::string("bad CSV row: ") + e.what());
  }
}

std::string verdict_to_human(const Verdict& v) {
  std::ostringstream out;
  out << (v.passed ? "PASS " : "FAIL ") << v.claim;
  if (v.n) out << " n=" << *v.n;
  if (v.k) out << " k=" << *v.k;
  if (v.i) out << " i=" << *v.i;
  if (v.t) out << " t=" << *v.t;
  out << "  observed " << v.observed << ' ' << to_string(v.relation)
      << " expected " << v.expected;
  if (!v.attained_at.empty()) out << "  attained " << attained_text(v.attained_at);
  if (v.seed) out << "  seed " << *v.seed;
  if (!v.note.empty()) out << "  [" << v.note << ']';
  return out.str();
}

std::string summary_to_json(const RunSummary& s) {
  json j = {{"summary", true},
            {"records", s.records},
            {"passed", s.passed},
            {"failed", s.failed}};
  return j.dump();
}

std::string summary_to_human(const RunSummary& s) {
  return std::to_string(s.records) + " records, " + std::to_string(s.passed) +
         " passed, " + std::to_string(s.failed) + " failed";
}

}  // namespace crossfam
