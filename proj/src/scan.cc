#include "circmagic/scan.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "json.hpp"

namespace circmagic {
namespace {

using nlohmann::json;

int column(const std::optional<SearchOutcome>& s) {
  if (!s) return 3;
  return static_cast<int>(s->kind);
}

Agreement compare(const DmVerdict& v, const std::optional<SearchOutcome>& s) {
  if (!s || v.status == Verdict::kUnknown) return Agreement::kInconclusive;
  switch (s->kind) {
    case SearchOutcome::Kind::kFound:
      return v.status == Verdict::kYes ? Agreement::kAgree : Agreement::kDisagree;
    case SearchOutcome::Kind::kExhausted:
      return v.status == Verdict::kNo ? Agreement::kAgree : Agreement::kDisagree;
    case SearchOutcome::Kind::kBudgetExceeded:
      break;
  }
  return Agreement::kInconclusive;
}

ScanRecord scan_one(const ConnectionSet& s, const ScanOptions& options) {
  ScanRecord r{.set = s, .filter = {}, .profile = {}, .admissible = {}, .families = {},
               .verdict = {}, .search = std::nullopt};
  const auto chars = admissible_set(s);
  for (const auto& c : chars) r.admissible.push_back(c.j);
  r.filter = candidate_filter(s, chars);
  r.profile = tag_profile(chars);
  for (auto& rec : recognize_all(s)) r.families.push_back(std::move(rec.family));
  r.verdict = decide(s, {options.budget, options.search_options});
  if (options.search) {
    SearchOptions so = options.search_options;
    so.prefilter = false;
    r.search = search_labeling(s, options.budget, so);
  }
  r.agreement = compare(r.verdict, r.search);
  return r;
}

// Runs every instance on a pool of workers; results land at their own index.
std::vector<ScanRecord> run_all(const std::vector<ConnectionSet>& sets, const ScanOptions& options) {
  std::vector<std::optional<ScanRecord>> slots(sets.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (size_t i = next++; i < sets.size(); i = next++) {
      try {
        slots[i] = scan_one(sets[i], options);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(sets.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<ScanRecord> out;
  out.reserve(sets.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<std::string> tags_of(const TagProfile& p) {
  std::vector<std::string> t;
  if (p.any_t1) t.emplace_back("T1");
  if (p.any_t2) t.emplace_back("T2");
  if (p.any_t3) t.emplace_back("T3");
  return t;
}

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"max_depth", s.max_depth},
          {"covered", s.covered},
          {"prefiltered", s.prefiltered}};
}

}  // namespace

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::kAgree:
      return "agree";
    case Agreement::kDisagree:
      return "disagree";
    case Agreement::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

void AgreementMatrix::add(const ScanRecord& r) {
  ++counts[static_cast<size_t>(r.verdict.status)][static_cast<size_t>(column(r.search))];
  switch (r.agreement) {
    case Agreement::kAgree:
      ++agree;
      break;
    case Agreement::kDisagree:
      ++disagree;
      break;
    case Agreement::kInconclusive:
      ++inconclusive;
      break;
  }
}

std::vector<ScanRecord> scan_order(Int n, const ScanOptions& options) {
  return run_all(enumerate_sets(n), options);
}

ScanReport exhaustive_scan(const ScanOptions& options) {
  if (options.n_min > options.n_max) throw DomainError("exhaustive_scan: n_min > n_max");
  const Int cap = options.search_options.hard_cap < 0 ? default_hard_cap()
                                                      : options.search_options.hard_cap;
  if (options.n_max > cap) {
    throw DomainError("exhaustive_scan: n_max = " + std::to_string(options.n_max) +
                      " exceeds the hard cap " + std::to_string(cap) +
                      " (raise it with CIRCMAGIC_HARD_CAP)");
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<ConnectionSet> sets;
  for (Int n = std::max<Int>(options.n_min, 7); n <= options.n_max; ++n) {
    for (auto& s : enumerate_sets(n)) sets.push_back(s);
  }
  ScanReport rep;
  rep.records = run_all(sets, options);
  for (const auto& r : rep.records) rep.matrix.add(r);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string to_json_line(const ScanRecord& r) {
  json j;
  j["n"] = r.set.n();
  j["set"] = r.set.to_string();
  j["admissible"] = r.admissible;
  j["tags"] = tags_of(r.profile);
  j["filter"] = r.filter.reason();
  json fams = json::array();
  for (const auto& f : r.families) fams.push_back(to_string(f));
  j["families"] = fams;
  j["decide"] = {{"status", to_string(r.verdict.status)},
                 {"reason", to_string(r.verdict.reason)},
                 {"step", r.verdict.step}};
  if (r.verdict.search) j["decide"]["search"] = stats_json(*r.verdict.search);
  if (r.search) {
    j["search"] = {{"outcome", to_string(r.search->kind)}, {"stats", stats_json(r.search->stats)}};
  } else {
    j["search"] = nullptr;
  }
  j["agreement"] = to_string(r.agreement);
  return j.dump();
}

std::string to_json(const AgreementMatrix& m) {
  static const char* kCols[] = {"found", "exhausted", "budget", "skipped"};
  static const char* kRows[] = {"yes", "no", "unknown"};
  json j;
  for (size_t v = 0; v < 3; ++v) {
    for (size_t c = 0; c < 4; ++c) j["matrix"][kRows[v]][kCols[c]] = m.counts[v][c];
  }
  j["agree"] = m.agree;
  j["disagree"] = m.disagree;
  j["inconclusive"] = m.inconclusive;
  return j.dump();
}

}  // namespace circmagic
