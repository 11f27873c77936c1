#include "enclave/io.hpp"

#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "enclave/errors.hpp"
#include "json.hpp"

namespace enclave {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::size_t body_length(std::uint64_t n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.substr(0, kGraph6Header.size()) == kGraph6Header) s.remove_prefix(kGraph6Header.size());
  if (s.empty()) throw parse_error("empty graph6 token");
  for (char c : s) {
    auto byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126) {
      throw parse_error("graph6 byte " + std::to_string(byte) + " outside 63..126");
    }
  }
  auto at = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(s[i]) - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (at(0) < 63) {
    n = at(0);
    pos = 1;
  } else if (s.size() >= 2 && at(1) == 63) {
    if (s.size() < 8) throw parse_error("truncated graph6 order");
    for (std::size_t i = 2; i < 8; ++i) n = n << 6 | at(i);
    pos = 8;
  } else {
    if (s.size() < 4) throw parse_error("truncated graph6 order");
    for (std::size_t i = 1; i < 4; ++i) n = n << 6 | at(i);
    pos = 4;
  }
  if (n > static_cast<std::uint64_t>(kMaxOrder)) {
    throw cap_exceeded("graph6 order " + std::to_string(n) + " exceeds supported width " +
                       std::to_string(kMaxOrder));
  }
  if (n == 0) throw parse_error("graph6 order 0 is not supported");

  const std::size_t expected = body_length(n);
  const std::size_t actual = s.size() - pos;
  if (actual < expected) throw parse_error("truncated graph6 body");
  if (actual > expected) throw parse_error("graph6 body has trailing bytes");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((at(pos + bit / 6) >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  for (; bit < expected * 6; ++bit) {
    if ((at(pos + bit / 6) >> (5 - bit % 6)) & 1U) throw parse_error("nonzero graph6 padding");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.raw_neighbors(j).contains(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const parse_error& e) {
      throw parse_error(e.what(), number);
    } catch (const cap_exceeded& e) {
      throw cap_exceeded("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

namespace {

bool read_int(std::istringstream& words, int& value) {
  std::string token;
  if (!(words >> token)) return false;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && end == token.data() + token.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  int n = -1;
  int n_line = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (trim(raw).empty()) continue;
    std::istringstream words(raw);
    std::string extra;
    if (n < 0) {
      std::string keyword;
      words >> keyword;
      if (keyword != "n" || !read_int(words, n) || (words >> extra)) {
        throw parse_error("expected 'n <count>'", line);
      }
      if (n < 1 || n > kMaxOrder) {
        throw parse_error("vertex count " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxOrder), line);
      }
      n_line = line;
      continue;
    }
    int u = 0;
    int v = 0;
    if (!read_int(words, u) || !read_int(words, v) || (words >> extra)) {
      throw parse_error("expected 'u v'", line);
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw parse_error("endpoint outside 0.." + std::to_string(n - 1) + " declared at line " +
                        std::to_string(n_line), line);
    }
    if (u == v) throw parse_error("loop at vertex " + std::to_string(u), line);
    edges.emplace_back(u, v);
  }
  if (n < 0) throw parse_error("missing 'n <count>' line");
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

bool SweepRecord::violated() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return true;
  }
  return false;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const SweepRecord& r) {
  ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.report.n;
  j["gamma"] = r.report.gamma;
  j["Gamma"] = r.report.Gamma;
  j["psi"] = r.report.psi;
  j["Psi"] = r.report.Psi;
  j["alpha"] = r.report.alpha;
  j["IR"] = r.report.IR;
  j["psg_plus"] = r.values.psg_plus;
  j["psg_minus"] = r.values.psg_minus;
  j["gg"] = r.values.gg ? ordered_json(*r.values.gg) : ordered_json(nullptr);
  j["ggp"] = r.values.ggp ? ordered_json(*r.values.ggp) : ordered_json(nullptr);
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back(ordered_json{{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  return j;
}

ordered_json summary_json(const SweepSummary& s) {
  ordered_json checks = ordered_json::array();
  for (const CheckTally& t : s.per_check) {
    checks.push_back(ordered_json{{"name", t.name}, {"applied", t.applied}, {"failed", t.failed}});
  }
  return ordered_json{{"summary",
                       {{"graphs_checked", s.graphs_checked},
                        {"graphs_skipped", s.graphs_skipped},
                        {"violations", s.violations},
                        {"checks", checks},
                        {"warnings", s.warnings}}}};
}

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

void emit_report(std::ostream& out, const std::vector<SweepRecord>& records,
                 const SweepSummary& summary, ReportFormat format) {
  if (format == ReportFormat::records) {
    for (const SweepRecord& r : records) out << record_json(r).dump() << '\n';
    out << summary_json(summary).dump() << '\n';
    return;
  }
  if (!records.empty()) {
    out << std::left << std::setw(14) << "graph6" << std::right;
    for (const char* h : {"n", "gamma", "Gamma", "psi", "Psi", "alpha", "IR", "psg+", "psg-", "gg", "gg'"}) {
      out << std::setw(6) << h;
    }
    out << "  status\n";
    for (const SweepRecord& r : records) {
      out << std::left << std::setw(14) << r.graph6 << std::right << std::setw(6) << r.report.n
          << std::setw(6) << r.report.gamma << std::setw(6) << r.report.Gamma << std::setw(6)
          << r.report.psi << std::setw(6) << r.report.Psi << std::setw(6) << r.report.alpha
          << std::setw(6) << r.report.IR << std::setw(6) << r.values.psg_plus << std::setw(6)
          << r.values.psg_minus << std::setw(6) << optional_text(r.values.gg) << std::setw(6)
          << optional_text(r.values.ggp) << "  ";
      bool any = false;
      for (const CheckResult& c : r.checks) {
        if (c.passed) continue;
        out << (any ? "; " : "FAIL ") << c.name << " (" << c.detail << ")";
        any = true;
      }
      out << (any ? "" : "ok") << '\n';
    }
    out << '\n';
  }
  out << "graphs checked: " << summary.graphs_checked << '\n'
      << "graphs skipped: " << summary.graphs_skipped << '\n'
      << "violations:     " << summary.violations << '\n';
  for (const CheckTally& t : summary.per_check) {
    out << "  " << std::left << std::setw(34) << t.name << std::right << " applied "
        << std::setw(9) << t.applied << "  failed " << t.failed << '\n';
  }
  for (const std::string& w : summary.warnings) out << "warning: " << w << '\n';
}

std::string emit_report(const std::vector<SweepRecord>& records, const SweepSummary& summary,
                        ReportFormat format) {
  std::ostringstream out;
  emit_report(out, records, summary, format);
  return out.str();
}

SweepRecord parse_record_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad record: ") + e.what());
  }
  SweepRecord r;
  try {
    r.graph6 = j.at("graph6").get<std::string>();
    r.report.n = j.at("n").get<int>();
    r.report.gamma = j.at("gamma").get<int>();
    r.report.Gamma = j.at("Gamma").get<int>();
    r.report.psi = j.at("psi").get<int>();
    r.report.Psi = j.at("Psi").get<int>();
    r.report.alpha = j.at("alpha").get<int>();
    r.report.IR = j.at("IR").get<int>();
    r.values.psg_plus = j.at("psg_plus").get<int>();
    r.values.psg_minus = j.at("psg_minus").get<int>();
    if (!j.at("gg").is_null()) r.values.gg = j.at("gg").get<int>();
    if (!j.at("ggp").is_null()) r.values.ggp = j.at("ggp").get<int>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back(CheckResult{c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                                     c.at("detail").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad record: ") + e.what());
  }
  return r;
}

}  // namespace enclave
