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

// HTTP/1.1 JSON server for the /v1 API.

#include <atomic>
#include <condition_variable>
#include <csignal>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <httplib.h>

#include "g2g/service/api.hpp"
#include "g2g/service/cron.hpp"

using namespace g2g;

namespace {

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

httplib::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int fail(const std::string& what) {
  std::cerr << "g2g-server: " << what << "\n";
  return 1;
}

}  // namespace

int main() {
  const std::string bind = env_or("G2G_BIND_ADDR", "127.0.0.1:8080");
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) return fail("G2G_BIND_ADDR must be host:port");
  const std::string host = bind.substr(0, colon);
  const int port = std::atoi(bind.c_str() + colon + 1);

  ServiceConfig config;
  config.k = std::atoi(env_or("G2G_K_THRESHOLD", "5").c_str());
  if (config.k < 1) return fail("G2G_K_THRESHOLD must be >= 1");
  config.invite_secret = env_or("G2G_INVITE_SECRET", "");
  if (config.invite_secret.empty()) return fail("G2G_INVITE_SECRET is required");
  if (auto cal = load_tax_calendar(env_or("G2G_TAX_CALENDAR", "data/tax_calendar.txt"))) {
    config.tax_calendar = *cal;
  } else {
    std::cerr << "warning: " << cal.error().message << "\n";
  }
  if (auto res = load_tax_resources(env_or("G2G_TAX_RESOURCES", "data/tax_resources.json"))) {
    config.tax_resources = *res;
  } else {
    std::cerr << "warning: " << res.error().message << "\n";
  }
  auto sweep_schedule = parse_cron(env_or("G2G_RETENTION_SWEEP_CRON", "@daily"));
  if (!sweep_schedule) return fail(sweep_schedule.error().message);

  auto clock = std::make_shared<SystemClock>();
  auto store = Store::open(env_or("G2G_DB_PATH", "g2g.db"), StoreOptions{true, clock});
  if (!store) return fail(store.error().message);
  Collective service(*store, std::make_shared<RandomIds>(), clock, config);
  Api api(service);

  httplib::Server server;
  auto handler = [&](const httplib::Request& req, httplib::Response& res) {
    ApiRequest r;
    r.method = req.method;
    r.path = req.path;
    for (const auto& [k, v] : req.params) r.query[k] = v;
    r.authorization = req.get_header_value("Authorization");
    r.content_type = req.get_header_value("Content-Type");
    r.body = req.body;
    ApiResponse out = api.handle(r);
    res.status = out.status;
    if (out.status != 204) res.set_content(out.body, out.content_type);
  };
  server.Get(R"(/v1/.*)", handler);
  server.Post(R"(/v1/.*)", handler);
  server.Patch(R"(/v1/.*)", handler);
  server.Delete(R"(/v1/.*)", handler);
  server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
    std::cerr << req.method << " " << req.path << " " << res.status << "\n";
  });

  // Retention sweeps on the configured schedule.
  std::mutex mu;
  std::condition_variable cv;
  bool stopping = false;
  std::thread sweeper([&] {
    std::unique_lock lock(mu);
    while (!stopping) {
      auto due = next_run(*sweep_schedule, clock->now());
      auto wait = std::chrono::duration_cast<std::chrono::milliseconds>(due - clock->now());
      if (cv.wait_for(lock, wait, [&] { return stopping; })) break;
      auto n = service.ledger().sweep_expired();
      if (n) std::cerr << "retention sweep removed " << n << " records\n";
    }
  });

  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "listening on " << host << ":" << port << "\n";
  bool ok = server.listen(host, port);
  {
    std::lock_guard lock(mu);
    stopping = true;
  }
  cv.notify_all();
  sweeper.join();
  return ok ? 0 : fail("cannot listen on " + bind);
}
