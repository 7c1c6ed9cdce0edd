#include "fsf/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "fsf/format.hpp"
#include "fsf/response.hpp"

namespace fsf {
namespace {

constexpr std::string_view kCsvHeader =
    "source,n,kind,expansion,bw,m1,t,binding,coeffs,claimed_psl_db,corrected_psl_db";

/// file:line:field position for parse diagnostics (1-based).
struct Where {
  std::string file;
  int line = 0;
  int column = 0;
};

[[noreturn]] void fail(const Where& w, const std::string& what) {
  throw ParseError(w.file + ":" + std::to_string(w.line) + ":" +
                   std::to_string(w.column) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (std::size_t next; (next = s.find(sep, pos)) != std::string_view::npos; pos = next + 1)
    out.push_back(s.substr(pos, next - pos));
  out.push_back(s.substr(pos));
  return out;
}

double parse_double(std::string_view field, const Where& w) {
  std::string text(field);
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') fail(w, "bad number '" + text + "'");
  return v;
}

int parse_int(std::string_view field, const Where& w) {
  std::string text(field);
  char* end = nullptr;
  long v = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0') fail(w, "bad integer '" + text + "'");
  return static_cast<int>(v);
}

Source parse_source(std::string_view s, const Where& w) {
  if (s == "this-paper-optimal") return Source::this_paper_optimal;
  if (s == "rabiner") return Source::rabiner;
  if (s == "lyons") return Source::lyons;
  if (s == "rorabaugh") return Source::rorabaugh;
  if (s == "rybka") return Source::rybka;
  fail(w, "unknown source '" + std::string(s) + "'");
}

std::vector<PublishedFixture> parse_table(const std::string& name, std::string_view csv,
                                          const std::string& file) {
  std::vector<PublishedFixture> out;
  std::size_t pos = 0;
  int line_no = 0;
  bool saw_header = false;
  while (pos <= csv.size()) {
    std::size_t nl = csv.find('\n', pos);
    std::string_view line =
        csv.substr(pos, nl == std::string_view::npos ? csv.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? csv.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    Where w{file, line_no, 1};
    if (!saw_header) {
      if (line != kCsvHeader) fail(w, "unexpected header '" + std::string(line) + "'");
      saw_header = true;
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 11)
      fail(w, "expected 11 fields, got " + std::to_string(fields.size()));

    PublishedFixture f;
    f.table = name;
    w.column = 1;
    f.source = parse_source(fields[0], w);
    w.column = 2;
    f.spec.n = parse_int(fields[1], w);
    w.column = 3;
    if (fields[2] == "lowpass")
      f.spec.kind = FilterKind::lowpass;
    else if (fields[2] == "bandpass")
      f.spec.kind = FilterKind::bandpass;
    else
      fail(w, "unknown kind '" + std::string(fields[2]) + "'");
    w.column = 4;
    if (fields[3] == "cosine")
      f.spec.expansion = Expansion::cosine;
    else if (fields[3] == "sine")
      f.spec.expansion = Expansion::sine;
    else
      fail(w, "unknown expansion '" + std::string(fields[3]) + "'");
    w.column = 5;
    f.spec.bw = parse_int(fields[4], w);
    w.column = 6;
    f.spec.m1 = fields[5].empty() ? 0 : parse_int(fields[5], w);
    w.column = 7;
    f.spec.t = parse_int(fields[6], w);
    w.column = 8;
    if (fields[7].empty() || fields[7] == "symmetric")
      f.spec.binding = Binding::symmetric;
    else if (fields[7] == "independent")
      f.spec.binding = Binding::independent;
    else
      fail(w, "unknown binding '" + std::string(fields[7]) + "'");
    w.column = 9;
    for (std::string_view c : split(fields[8], ' ')) {
      if (c.empty()) continue;
      double v = parse_double(c, w);
      if (!(v >= 0.0 && v <= 1.0)) fail(w, "coefficient out of [0,1]: '" + std::string(c) + "'");
      f.coefficients.push_back(v);
    }
    w.column = 10;
    if (!fields[9].empty()) f.claimed_psl_db = parse_double(fields[9], w);
    w.column = 11;
    if (!fields[10].empty()) f.corrected_psl_db = parse_double(fields[10], w);

    w.column = 2;
    try {
      validate(f.spec);
    } catch (const SpecInfeasible& e) {
      fail(w, e.what());
    }
    int arity = f.spec.t;
    if (f.spec.kind == FilterKind::bandpass && f.spec.binding == Binding::independent)
      arity *= 2;
    if (static_cast<int>(f.coefficients.size()) != arity)
      throw ArityMismatch(file + ":" + std::to_string(line_no) + ":9: expected " +
                          std::to_string(arity) + " coefficients, got " +
                          std::to_string(f.coefficients.size()));
    out.push_back(std::move(f));
  }
  if (!saw_header) throw ParseError(file + ":1:1: empty fixture table");
  return out;
}

std::vector<std::pair<std::string, int>> parse_manifest(std::string_view csv,
                                                        const std::string& file) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t pos = 0;
  int line_no = 0;
  bool saw_header = false;
  while (pos <= csv.size()) {
    std::size_t nl = csv.find('\n', pos);
    std::string_view line =
        csv.substr(pos, nl == std::string_view::npos ? csv.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? csv.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    Where w{file, line_no, 1};
    if (!saw_header) {
      if (line != "table,rows") fail(w, "unexpected header '" + std::string(line) + "'");
      saw_header = true;
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 2) fail(w, "expected 2 fields");
    w.column = 2;
    out.emplace_back(std::string(fields[0]), parse_int(fields[1], w));
  }
  if (!saw_header) throw ParseError(file + ":1:1: empty manifest");
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError(p.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_manifest(const std::vector<std::pair<std::string, int>>& manifest,
                    const std::map<std::string, int>& counts, const std::string& file) {
  for (const auto& [name, rows] : manifest) {
    auto it = counts.find(name);
    if (it == counts.end())
      throw ParseError(file + ": manifest table '" + name + "' has no fixture file");
    if (it->second != rows)
      throw ParseError(file + ": manifest expects " + std::to_string(rows) + " rows for '" +
                       name + "', found " + std::to_string(it->second));
  }
}

TableRowResult check_row(const PublishedFixture& f, double g, const DesignResult* design) {
  TableRowResult r;
  r.fixture = f;
  TransitionAssignment a{f.coefficients, f.spec.binding};
  PslReport rep = psl(f.spec, a, g);
  r.recomputed_psl_db = rep.psl_db;
  if (f.corrected_psl_db && r.recomputed_psl_db) {
    r.corrected_delta_db = *r.recomputed_psl_db - *f.corrected_psl_db;
    r.corrected_ok = std::abs(*r.corrected_delta_db) <= psl_tolerance_db(*f.corrected_psl_db);
  } else if (f.corrected_psl_db) {
    r.corrected_ok = false;
  }
  if (design) {
    r.design = *design;
    const std::vector<double>& got = design->assignment.values;
    if (got.size() == f.coefficients.size())
      for (std::size_t i = 0; i < got.size(); ++i)
        r.coefficient_deltas.push_back(got[i] - f.coefficients[i]);
    if (design->psl_db && r.recomputed_psl_db)
      r.design_psl_delta_db = *design->psl_db - *r.recomputed_psl_db;
  }
  return r;
}

int source_rank(Source s) {
  switch (s) {
    case Source::this_paper_optimal: return 0;
    case Source::rabiner: return 1;
    case Source::lyons: return 2;
    case Source::rorabaugh: return 3;
    case Source::rybka: return 4;
  }
  return 5;
}

bool row_less(const TableRowResult& a, const TableRowResult& b) {
  const FilterSpec& x = a.fixture.spec;
  const FilterSpec& y = b.fixture.spec;
  auto key = [](const FilterSpec& s) {
    return std::make_tuple(s.n, s.bw, s.m1, static_cast<int>(s.kind),
                           static_cast<int>(s.expansion), s.t, static_cast<int>(s.binding));
  };
  if (key(x) != key(y)) return key(x) < key(y);
  if (source_rank(a.fixture.source) != source_rank(b.fixture.source))
    return source_rank(a.fixture.source) < source_rank(b.fixture.source);
  return a.fixture.table < b.fixture.table;
}

bool claimed_struck(const TableRowResult& r) {
  return r.fixture.claimed_psl_db && r.recomputed_psl_db &&
         std::abs(*r.fixture.claimed_psl_db - *r.recomputed_psl_db) > kStrikeDb;
}

std::string join_shortest(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += shortest(v[i]);
  }
  return out;
}

std::string opt_str(const std::optional<double>& v) { return v ? shortest(*v) : std::string(); }

std::string opt_fixed4(const std::optional<double>& v) {
  if (!v) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

}  // namespace

const char* to_string(Source s) {
  switch (s) {
    case Source::this_paper_optimal: return "this-paper-optimal";
    case Source::rabiner: return "rabiner";
    case Source::lyons: return "lyons";
    case Source::rorabaugh: return "rorabaugh";
    case Source::rybka: return "rybka";
  }
  return "?";
}

Source source_from_string(std::string_view s) {
  return parse_source(s, Where{"<string>", 1, 1});
}

std::vector<std::pair<std::string, int>> manifest_counts() {
  return parse_manifest(embedded_manifest(), "<embedded manifest>");
}

std::vector<PublishedFixture> embedded_fixtures() {
  std::vector<PublishedFixture> out;
  std::map<std::string, int> counts;
  for (const EmbeddedTable& t : embedded_tables()) {
    std::string name(t.name);
    auto rows = parse_table(name, t.csv, "<embedded " + name + ">");
    counts[name] = static_cast<int>(rows.size());
    out.insert(out.end(), rows.begin(), rows.end());
  }
  check_manifest(manifest_counts(), counts, "<embedded manifest>");
  return out;
}

std::vector<PublishedFixture> load_fixtures(const std::string& path) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (fs::is_regular_file(p))
    return parse_table(p.stem().string(), read_file(p), p.filename().string());
  if (!fs::is_directory(p)) throw ParseError(path + ": no such file or directory");
  fs::path dir = fs::is_directory(p / "fixtures") ? p / "fixtures" : p;

  std::map<std::string, fs::path> by_name;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".csv" &&
        entry.path().stem() != "manifest")
      by_name.emplace(entry.path().stem().string(), entry.path());

  std::vector<std::pair<std::string, fs::path>> ordered;
  for (const EmbeddedTable& t : embedded_tables()) {
    auto it = by_name.find(std::string(t.name));
    if (it != by_name.end()) {
      ordered.push_back(*it);
      by_name.erase(it);
    }
  }
  ordered.insert(ordered.end(), by_name.begin(), by_name.end());

  std::vector<PublishedFixture> out;
  std::map<std::string, int> counts;
  for (const auto& [name, file] : ordered) {
    auto rows = parse_table(name, read_file(file), file.filename().string());
    counts[name] = static_cast<int>(rows.size());
    out.insert(out.end(), rows.begin(), rows.end());
  }

  for (const fs::path& cand :
       {p / "manifest.csv", dir / "manifest.csv", dir.parent_path() / "manifest.csv"}) {
    if (!fs::is_regular_file(cand)) continue;
    check_manifest(parse_manifest(read_file(cand), cand.filename().string()), counts,
                   cand.filename().string());
    break;
  }
  return out;
}

TableRowResult verify_fixture(const PublishedFixture& f, double g) {
  if (f.source == Source::this_paper_optimal) {
    SolveOptions opt;
    opt.g = g;
    DesignResult d = optimize(f.spec, opt);
    return check_row(f, g, &d);
  }
  return check_row(f, g, nullptr);
}

std::vector<TableRowResult> run_preset(std::string_view preset, std::optional<int> n_filter,
                                       double g, const std::vector<PublishedFixture>* fixtures) {
  std::vector<PublishedFixture> owned;
  if (!fixtures) {
    owned = embedded_fixtures();
    fixtures = &owned;
  }
  bool known = false;
  for (const PublishedFixture& f : *fixtures)
    if (f.table == preset) {
      known = true;
      break;
    }
  if (!known) throw UnknownPreset("unknown preset '" + std::string(preset) + "'");

  std::map<std::string, DesignResult> designs;
  std::vector<TableRowResult> out;
  for (const PublishedFixture& f : *fixtures) {
    if (f.table != preset) continue;
    if (n_filter && f.spec.n != *n_filter) continue;
    std::ostringstream key;
    key << f.spec.n << '|' << to_string(f.spec.kind) << '|' << to_string(f.spec.expansion) << '|'
        << f.spec.bw << '|' << f.spec.m1 << '|' << f.spec.t << '|' << to_string(f.spec.binding);
    auto it = designs.find(key.str());
    if (it == designs.end()) {
      SolveOptions opt;
      opt.g = g;
      it = designs.emplace(key.str(), optimize(f.spec, opt)).first;
    }
    out.push_back(check_row(f, g, &it->second));
  }
  return out;
}

Report comparison_report(std::vector<TableRowResult> rows) {
  std::sort(rows.begin(), rows.end(), row_less);

  std::ostringstream md;
  std::ostringstream csv;
  md << "| n | kind | expansion | bw | m1 | t | binding | source | coefficients "
        "| claimed (dB) | corrected (dB) | recomputed (dB) | optimal (dB) |\n"
     << "|--:|---|---|--:|--:|--:|---|---|---|--:|--:|--:|--:|\n";
  csv << "table,n,kind,expansion,bw,m1,t,binding,source,coefficients,claimed_psl_db,"
         "claimed_struck,corrected_psl_db,recomputed_psl_db,corrected_delta_db,"
         "design_psl_db,design_coefficients,design_delta_db\n";

  for (const TableRowResult& r : rows) {
    const PublishedFixture& f = r.fixture;
    const bool bpf = f.spec.kind == FilterKind::bandpass;
    const bool struck = claimed_struck(r);
    std::string m1 = bpf ? std::to_string(f.spec.m1) : std::string();
    std::string binding = bpf ? to_string(f.spec.binding) : "";
    std::string claimed = opt_str(f.claimed_psl_db);

    md << "| " << f.spec.n << " | " << to_string(f.spec.kind) << " | "
       << to_string(f.spec.expansion) << " | " << f.spec.bw << " | " << m1 << " | " << f.spec.t
       << " | " << binding << " | " << to_string(f.source) << " | "
       << join_shortest(f.coefficients) << " | "
       << (struck ? "~~" + claimed + "~~" : claimed) << " | " << opt_str(f.corrected_psl_db)
       << " | " << opt_fixed4(r.recomputed_psl_db) << " | "
       << (r.design ? opt_fixed4(r.design->psl_db) : std::string()) << " |\n";

    csv << f.table << ',' << f.spec.n << ',' << to_string(f.spec.kind) << ','
        << to_string(f.spec.expansion) << ',' << f.spec.bw << ',' << m1 << ',' << f.spec.t << ','
        << binding << ',' << to_string(f.source) << ',' << join_shortest(f.coefficients) << ','
        << claimed << ',' << (f.claimed_psl_db ? (struck ? "1" : "0") : "") << ','
        << opt_str(f.corrected_psl_db) << ',' << opt_str(r.recomputed_psl_db) << ','
        << opt_str(r.corrected_delta_db) << ','
        << (r.design ? opt_str(r.design->psl_db) : std::string()) << ','
        << (r.design ? join_shortest(r.design->assignment.values) : std::string()) << ','
        << opt_str(r.design_psl_delta_db) << '\n';
  }
  return Report{md.str(), csv.str()};
}

}  // namespace fsf
