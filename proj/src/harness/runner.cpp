#include <chrono>
#include <future>
#include <iomanip>
#include <memory>
#include <sstream>
#include <thread>

#include "claims.hpp"

namespace cubtors::harness {

namespace {

bool inconclusive_error(const Error& e) {
  const std::string& k = e.kind();
  return k == "PrecisionExhausted" || k == "TooLarge" || k == "NoGoodPrimes";
}

ClaimReport blank_report(const ClaimRecord& claim) {
  ClaimReport r;
  r.id = claim.id;
  r.kind = claim.kind;
  r.expected = claim.expected;
  r.paper_ref = claim.paper_ref;
  return r;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "inconclusive";
  }
}

ClaimReport run_claim(const Catalog& catalog, const ClaimRecord& claim, const RunConfig& config) {
  ClaimReport r = blank_report(claim);
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto out = detail::evaluate(catalog, claim, config);
    r.status = out.status;
    r.computed = std::move(out.computed);
  } catch (const Error& e) {
    r.status = inconclusive_error(e) ? Status::Inconclusive : Status::Fail;
    r.computed = {{"error", e.kind()}, {"message", e.what()}};
  } catch (const std::exception& e) {
    // malformed inputs surface here (missing keys, unknown labels)
    r.status = Status::Fail;
    r.computed = {{"error", "InvalidClaim"}, {"message", e.what()}};
  }
  auto t1 = std::chrono::steady_clock::now();
  r.runtime_ms = config.deterministic ? 0.0 : std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

RunResult run_claims(const Catalog& catalog, const RunConfig& config) {
  std::vector<const ClaimRecord*> selected;
  if (config.ids.empty()) {
    for (const auto& c : catalog.claims) selected.push_back(&c);
  } else {
    for (const auto& id : config.ids) {
      const ClaimRecord* c = catalog.claim(id);
      if (!c) throw std::out_of_range("unknown claim id '" + id + "'");
      selected.push_back(c);
    }
  }
  std::sort(selected.begin(), selected.end(),
            [](const ClaimRecord* a, const ClaimRecord* b) { return claim_id_less(a->id, b->id); });
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  // Workers may outlive this call after a timeout, so they share ownership of
  // a private copy of everything they read.
  auto shared_catalog = std::make_shared<const Catalog>(catalog);
  auto shared_config = std::make_shared<const RunConfig>(config);

  struct Job {
    const ClaimRecord* claim;
    std::future<ClaimReport> result;
    std::chrono::steady_clock::time_point deadline;
    bool started = false;
    bool done = false;
  };
  std::vector<Job> jobs;
  for (auto* c : selected) jobs.push_back({c, {}, {}, false, false});

  RunResult out;
  out.reports.resize(jobs.size());
  const int width = std::max(1, config.jobs);
  const auto timeout = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(config.timeout_s > 0 ? config.timeout_s : 1e9));
  std::size_t next = 0, finished = 0;
  int running = 0;
  while (finished < jobs.size()) {
    while (running < width && next < jobs.size()) {
      Job& j = jobs[next++];
      std::packaged_task<ClaimReport()> task([cat = shared_catalog, cfg = shared_config, id = j.claim->id] {
        return run_claim(*cat, *cat->claim(id), *cfg);
      });
      j.result = task.get_future();
      j.deadline = std::chrono::steady_clock::now() + timeout;
      j.started = true;
      std::thread(std::move(task)).detach();
      ++running;
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      Job& j = jobs[i];
      if (!j.started || j.done) continue;
      if (j.result.wait_for(std::chrono::milliseconds(2)) == std::future_status::ready) {
        out.reports[i] = j.result.get();
      } else if (std::chrono::steady_clock::now() >= j.deadline) {
        ClaimReport r = blank_report(*j.claim);
        r.status = Status::Inconclusive;
        r.computed = {{"error", "Timeout"}, {"timeout_s", config.timeout_s}};
        r.runtime_ms = config.deterministic ? 0.0 : config.timeout_s * 1000.0;
        out.reports[i] = std::move(r);
        out.abandoned_workers = true;
      } else {
        continue;
      }
      j.done = true;
      ++finished;
      --running;
    }
  }
  return out;
}

int exit_code(const std::vector<ClaimReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return 1;
    if (r.status == Status::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

json reports_to_json(const std::vector<ClaimReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports)
    arr.push_back({{"id", r.id},
                   {"kind", r.kind},
                   {"status", to_string(r.status)},
                   {"expected", r.expected},
                   {"computed", r.computed},
                   {"runtime_ms", r.runtime_ms},
                   {"paper_ref", r.paper_ref}});
  return arr;
}

std::string reports_to_text(const std::vector<ClaimReport>& reports) {
  std::ostringstream os;
  int pass = 0, fail = 0, inc = 0;
  for (const auto& r : reports) {
    os << std::left << std::setw(5) << r.id << " " << std::setw(13) << to_string(r.status) << std::setw(21) << r.kind
       << " " << std::right << std::setw(10) << std::fixed << std::setprecision(1) << r.runtime_ms << " ms  expected "
       << r.expected.dump();
    if (r.status != Status::Pass) os << "\n      computed " << r.computed.dump();
    os << "\n";
    (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : inc)++;
  }
  os << pass << " pass, " << fail << " fail, " << inc << " inconclusive\n";
  return os.str();
}

}  // namespace cubtors::harness
