/*
 * Copyright 2026 The g2g Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance run: one PASS/FAIL line per primary criterion.
//   g2g-acceptance [--only <slug>] [--list]

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;
using SteadyClock = std::chrono::steady_clock;

namespace {

// Time limits, in seconds.
constexpr double kFixtureSeconds = 5.0;
constexpr double kPropertySeconds = 30.0;
constexpr double kCsvSeconds = 10.0;
constexpr double kSuiteSeconds = 120.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Run {
  int status = -1;
  std::string out;
  double seconds = 0;
};

Run run(const std::string& cmd) {
  Run r;
  const auto start = SteadyClock::now();
  FILE* p = ::popen((cmd + " 2>&1").c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = ::pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.seconds = std::chrono::duration<double>(SteadyClock::now() - start).count();
  return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::string secs(double s) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << s << "s";
  return o.str();
}

class Scratch {
 public:
  Scratch() {
    path_ = fs::temp_directory_path() / ("g2g_accept_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string admin(const Scratch& s, const std::string& args) {
  return quote(G2G_ADMIN_BIN) + " --db " + quote((s.path() / "g2g.db").string()) + " " + args;
}

// Seeds a fresh store and runs one reporting command; returns its JSON.
struct Report {
  json data;
  std::string error;
  double seconds = 0;
};

Report seeded_report(const char* command) {
  Scratch s;
  auto seeded = run(admin(s, "seed --fixture field-study"));
  if (seeded.status != 0) return {{}, "seed failed: " + seeded.out, seeded.seconds};
  auto r = run(admin(s, std::string(command) + " --json"));
  if (r.status != 0) return {{}, std::string(command) + " failed: " + r.out, seeded.seconds + r.seconds};
  auto j = json::parse(r.out, nullptr, false);
  if (j.is_discarded()) return {{}, std::string(command) + " printed invalid JSON", seeded.seconds + r.seconds};
  return {j, "", seeded.seconds + r.seconds};
}

// A reference cell; it matches when the measured value, rounded half-up to
// the number of decimals printed, equals the printed value.
struct Cell {
  std::string label;
  std::string printed;
  double actual;
};

bool matches(const Cell& c) {
  const auto dot = c.printed.find('.');
  const int decimals = dot == std::string::npos ? 0 : static_cast<int>(c.printed.size() - dot - 1);
  const double scale = std::pow(10.0, decimals);
  const auto want = std::llround(std::stod(c.printed) * scale);
  const auto got = static_cast<long long>(std::floor(c.actual * scale + 0.5 + 1e-9));
  return want == got;
}

Outcome compare(const std::vector<Cell>& cells, double seconds, double limit) {
  Outcome o;
  std::size_t ok = 0;
  std::string misses;
  for (const auto& c : cells) {
    if (matches(c)) {
      ++ok;
    } else {
      std::ostringstream m;
      m << c.label << " expected " << c.printed << " got " << c.actual;
      misses += (misses.empty() ? "" : "; ") + m.str();
    }
  }
  o.pass = ok == cells.size() && (limit <= 0 || seconds < limit);
  o.detail = std::to_string(ok) + "/" + std::to_string(cells.size()) + " cells match";
  if (!misses.empty()) o.detail += " [" + misses + "]";
  if (limit > 0) o.detail += ", " + secs(seconds) + " (limit " + secs(limit) + ")";
  return o;
}

Outcome fixture_usage() {
  auto r = seeded_report("usage-report");
  if (!r.error.empty()) return {false, r.error};
  const json& o = r.data.at("overall");
  struct Row {
    const char* metric;
    const char* label;
    std::array<const char*, 4> printed;  // mean, median, max, total
  };
  const std::vector<Row> table{
      {"shared_stories", "stories", {"1.93", "1", "5", "27"}},
      {"story_words", "words", {"231", "108", "1493", "3235"}},
      {"liked_stories", "liked", {"3", "3", "11", "42"}},
      {"income_uploads", "income", {"8.57", "6.5", "41", "120"}},
      {"expense_uploads", "expense", {"1.42", "1", "7", "20"}},
      {"trends_visits", "trends", {"4.5", "4.5", "9", "63"}},
  };
  std::vector<Cell> cells;
  for (const auto& row : table) {
    const json& m = o.at(row.metric);
    const char* stats[] = {"mean", "median", "max", "total"};
    for (int i = 0; i < 4; ++i) {
      cells.push_back({std::string(row.label) + "." + stats[i], row.printed[i], m.at(stats[i]).get<double>()});
    }
  }
  return compare(cells, r.seconds, kFixtureSeconds);
}

Outcome story_statistics() {
  auto r = seeded_report("story-statistics");
  if (!r.error.empty()) return {false, r.error};
  const json& d = r.data;
  const char* platforms[] = {"uber", "rover", "upwork"};
  std::vector<Cell> cells;
  auto row = [&](const std::string& label, const json& obj, std::array<const char*, 3> printed) {
    for (int i = 0; i < 3; ++i) {
      cells.push_back({label + "." + platforms[i], printed[i], obj.value(platforms[i], 0.0)});
    }
  };
  row("authored", d.at("authored"), {"15", "11", "1"});
  row("mean_per_user", d.at("mean_per_user"), {"2.143", "2.2", "0.5"});
  row("likes_from_uber", d.at("likes").at("uber"), {"13", "10", "0"});
  row("likes_from_rover", d.at("likes").at("rover"), {"10", "10", "0"});
  row("likes_from_upwork", d.at("likes").at("upwork"), {"1", "0", "0"});
  const json& a = d.at("audience");
  row("workers_only", a.value("workers", json::object()), {"2", "1", "0"});
  row("policymakers_only", a.value("policymakers", json::object()), {"0", "1", "0"});
  row("workers+policymakers", a.value("workers+policymakers", json::object()), {"1", "0", "0"});
  row("all_three", a.value("workers+policymakers+advocates", json::object()), {"12", "9", "1"});
  row("strategies", d.at("types").at("strategy"), {"10", "8", "0"});
  row("issues", d.at("types").at("issue"), {"5", "3", "1"});
  return compare(cells, r.seconds, 0);
}

Outcome policymaker_export() {
  Scratch s;
  auto seeded = run(admin(s, "seed --fixture field-study"));
  if (seeded.status != 0) return {false, "seed failed: " + seeded.out};
  const auto out = s.path() / "export";
  auto r = run(admin(s, "export --audience policymakers --out " + quote(out.string())));
  if (r.status != 0) return {false, "export failed: " + r.out};
  std::ifstream in(out / "stories.ndjson");
  std::size_t lines = 0;
  std::string line;
  while (std::getline(in, line)) lines += line.empty() ? 0 : 1;
  std::ifstream mf(out / "manifest.json");
  const auto manifest = json::parse(mf, nullptr, false);
  long declared = -1;
  if (manifest.is_object() && manifest.contains("counts")) declared = manifest["counts"].value("stories", -1L);
  constexpr std::size_t kExpected = 23;
  return {lines == kExpected && declared == static_cast<long>(kExpected),
          "expected 23 stories, bundle holds " + std::to_string(lines) + " (manifest says " +
              std::to_string(declared) + ")"};
}

Outcome tag_totals() {
  auto r = seeded_report("story-statistics");
  if (!r.error.empty()) return {false, r.error};
  const json& tags = r.data.at("tags");
  const std::vector<std::pair<const char*, const char*>> table{
      {"safety", "10"}, {"fair_pay", "6"}, {"care_giving", "5"}, {"stress", "4"}, {"technology", "4"},
      {"other", "3"},   {"ratings", "3"},  {"work_time", "2"},   {"algorithms", "1"}, {"discrimination", "1"}};
  std::vector<Cell> cells;
  for (const auto& [tag, printed] : table) {
    cells.push_back({tag, printed, tags.contains(tag) ? tags.at(tag).value("total_usage", 0.0) : 0.0});
  }
  return compare(cells, r.seconds, 0);
}

// Runs one test binary; the criterion holds when every test passes in time.
std::function<Outcome()> suite(const char* binary, double limit) {
  return [binary, limit] {
    const auto path = fs::path(G2G_TEST_BIN_DIR) / binary;
    if (!fs::exists(path)) return Outcome{false, std::string(binary) + " not built"};
    auto r = run(quote(path.string()) + " --gtest_brief=1");
    std::string tail = r.out;
    if (auto pos = tail.find("[  PASSED  ]"); pos != std::string::npos) tail = tail.substr(pos);
    else if (auto f = tail.find("[  FAILED  ]"); f != std::string::npos) tail = tail.substr(f);
    while (!tail.empty() && (tail.back() == '\n' || tail.back() == '\r')) tail.pop_back();
    for (auto& c : tail) {
      if (c == '\n') c = ' ';
    }
    const bool in_time = limit <= 0 || r.seconds < limit;
    std::string detail = std::string(binary) + ": " + tail + ", " + secs(r.seconds);
    if (limit > 0) detail += " (limit " + secs(limit) + ")";
    return Outcome{r.status == 0 && in_time, detail};
  };
}

struct Criterion {
  const char* slug;
  const char* title;
  std::function<Outcome()> check;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> kAll{
      {"fixture-usage", "seed + usage-report reproduces the descriptive statistics table", fixture_usage},
      {"story-statistics", "story-statistics reproduces the story statistics table", story_statistics},
      {"policymaker-export", "policymaker export holds exactly 23 stories", policymaker_export},
      {"tag-totals", "tag totals reproduce the tag table", tag_totals},
      {"scoping", "scoping property suite, >= 10^4 cases vs brute force", suite("test_prop_scoping", kPropertySeconds)},
      {"k-suppression", "k-suppression suite, k in 1..10", suite("test_prop_suppression", kPropertySeconds)},
      {"revocation", "revocation suite, 10^3 (dataset, deleted entry) pairs", suite("test_prop_revocation", 0)},
      {"conservation", "trends conservation on randomized ledgers", suite("test_prop_conservation", 0)},
      {"planner", "planner closed form on 100 (r, plan) pairs", suite("test_prop_planner", 0)},
      {"csv", "CSV golden parse, idempotent import, row-error isolation", suite("test_csv", kCsvSeconds)},
      {"audit-replay", "audit replay reconstructs final state; edited iff >= 1 edit", suite("test_prop_audit", 0)},
  };
  return kAll;
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--list") {
      for (const auto& c : criteria()) std::cout << c.slug << "\n";
      return 0;
    }
    if (a == "--only" && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::cerr << "usage: g2g-acceptance [--only <slug>] [--list]\n";
      return 2;
    }
  }
  const auto start = SteadyClock::now();
  int failed = 0;
  int ran = 0;
  for (const auto& c : criteria()) {
    if (!only.empty() && only != c.slug) continue;
    ++ran;
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.slug << ": " << c.title << " -- " << o.detail << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no criterion named '" << only << "'\n";
    return 2;
  }
  if (only.empty()) {
    const double total = std::chrono::duration<double>(SteadyClock::now() - start).count();
    std::cout << (total < kSuiteSeconds ? "PASS " : "FAIL ") << "total-runtime: " << secs(total) << " (limit "
              << secs(kSuiteSeconds) << ")" << std::endl;
    failed += total < kSuiteSeconds ? 0 : 1;
  }
  std::cout << (ran - failed >= 0 ? ran - failed : 0) << "/" << ran << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
