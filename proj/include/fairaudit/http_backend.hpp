#pragma once

#include <chrono>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "fairaudit/backend.hpp"
#include "fairaudit/common.hpp"

namespace fairaudit {

struct HttpBackendConfig {
  std::string endpoint;  // base URL, e.g. "http://127.0.0.1:8080"
  std::string path = "/v1/chat/completions";
  std::string api_key_env = "FAIRAUDIT_API_KEY";
  int max_attempts = 3;
  int backoff_initial_ms = 250;
  double timeout_seconds = 30.0;
};

using HttpLogger = std::function<void(std::string_view level, std::string_view message)>;

/// OpenAI-compatible chat-completions client. Transient failures (transport
/// errors, 408/429/5xx) are retried with exponential backoff up to
/// max_attempts; anything else fails immediately. The credential is read from
/// the configured environment variable and never logged.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpBackendConfig cfg, HttpLogger logger = nullptr)
      : cfg_(std::move(cfg)), logger_(std::move(logger)) {
    if (cfg_.endpoint.empty()) throw ConfigError("http backend: endpoint not configured");
    const char* key = std::getenv(cfg_.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
      throw ConfigError("http backend: credential missing; set " + cfg_.api_key_env);
    }
    api_key_ = key;
  }

  RawCompletion execute(const RankerRequest& request, const BackendContext&) override {
    const std::string body = build_body(request);
    log("debug", "request " + request.request_key + " body: " + body);

    std::string last_error;
    for (int attempt = 1; attempt <= cfg_.max_attempts; ++attempt) {
      if (attempt > 1) {
        const int delay_ms = cfg_.backoff_initial_ms << (attempt - 2);
        std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
      }
      const auto start = std::chrono::steady_clock::now();
      httplib::Client client(cfg_.endpoint);
      client.set_connection_timeout(std::chrono::duration<double>(cfg_.timeout_seconds));
      client.set_read_timeout(std::chrono::duration<double>(cfg_.timeout_seconds));
      httplib::Headers headers = {{"Authorization", "Bearer " + api_key_}};
      const auto response = client.Post(cfg_.path, headers, body, "application/json");

      if (!response) {
        last_error = "transport error: " + httplib::to_string(response.error());
        log("warn", "attempt " + std::to_string(attempt) + " failed, " + last_error);
        continue;
      }
      if (response->status >= 200 && response->status < 300) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        log("debug", "response " + request.request_key + " body: " + response->body);
        RawCompletion completion;
        completion.request_key = request.request_key;
        completion.text = parse_completion_text(response->body);
        completion.latency_ms =
            std::chrono::duration<double, std::milli>(elapsed).count();
        completion.backend_tag = "http";
        return completion;
      }
      last_error = "http status " + std::to_string(response->status);
      if (!is_retryable(response->status)) {
        throw BackendError("request " + request.request_key + " failed: " + last_error);
      }
      log("warn", "attempt " + std::to_string(attempt) + " failed, " + last_error);
    }
    throw BackendError("request " + request.request_key + " failed after " +
                       std::to_string(cfg_.max_attempts) + " attempts: " + last_error);
  }

  std::string_view tag() const override { return "http"; }

 private:
  static bool is_retryable(int status) {
    return status == 408 || status == 429 || status >= 500;
  }

  std::string build_body(const RankerRequest& request) const {
    nlohmann::json body;
    body["model"] = request.model_name;
    body["temperature"] = request.temperature;
    body["max_tokens"] = request.max_tokens;
    body["messages"] = nlohmann::json::array(
        {{{"role", "system"}, {"content", request.prompt.system_text}},
         {{"role", "user"}, {"content", request.prompt.user_text}}});
    return body.dump();
  }

  static std::string parse_completion_text(const std::string& body) {
    nlohmann::json payload;
    try {
      payload = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw BackendError(std::string("unparseable completion response: ") + e.what());
    }
    if (!payload.contains("choices") || payload["choices"].empty()) {
      throw BackendError("completion response has no choices");
    }
    const auto& first = payload["choices"][0];
    std::string text;
    if (first.contains("message") && first["message"].contains("content")) {
      text = first["message"]["content"].get<std::string>();
    } else if (first.contains("text")) {
      text = first["text"].get<std::string>();
    }
    if (text.empty()) throw BackendError("completion response has empty text");
    return text;
  }

  void log(std::string_view level, std::string_view message) const {
    if (logger_) logger_(level, message);
  }

  HttpBackendConfig cfg_;
  HttpLogger logger_;
  std::string api_key_;
};

}  // namespace fairaudit
