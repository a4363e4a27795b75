#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fairaudit/common.hpp"
#include "fairaudit/corpus.hpp"
#include "fairaudit/prompts.hpp"
#include "fairaudit/sha256.hpp"

namespace fairaudit {

namespace detail {

inline std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

inline std::string base64_encode(std::string_view data) {
  static constexpr char alphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 2 < data.size()) {
    const std::uint32_t n = (static_cast<unsigned char>(data[i]) << 16) |
                            (static_cast<unsigned char>(data[i + 1]) << 8) |
                            static_cast<unsigned char>(data[i + 2]);
    out.push_back(alphabet[(n >> 18) & 63]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out.push_back(alphabet[(n >> 6) & 63]);
    out.push_back(alphabet[n & 63]);
    i += 3;
  }
  const std::size_t rest = data.size() - i;
  if (rest == 1) {
    const std::uint32_t n = static_cast<unsigned char>(data[i]) << 16;
    out.push_back(alphabet[(n >> 18) & 63]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out += "==";
  } else if (rest == 2) {
    const std::uint32_t n = (static_cast<unsigned char>(data[i]) << 16) |
                            (static_cast<unsigned char>(data[i + 1]) << 8);
    out.push_back(alphabet[(n >> 18) & 63]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out.push_back(alphabet[(n >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

inline std::string base64_decode(std::string_view text) {
  const auto value_of = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
  };
  std::string out;
  std::uint32_t buffer = 0;
  int bits = 0;
  for (const char c : text) {
    if (c == '=') break;
    const int v = value_of(c);
    if (v < 0) throw DataError("invalid base64 payload");
    buffer = (buffer << 6) | static_cast<std::uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<char>((buffer >> bits) & 0xff));
    }
  }
  return out;
}

}  // namespace detail

/// Stable content digest over everything that shapes a completion: the
/// rendered prompt plus the model call parameters. Equal inputs give equal
/// keys; any field change gives a different key.
inline std::string cache_key(const Prompt& prompt, const std::string& model_name,
                             double temperature, int max_tokens) {
  std::string input = prompt.render_hash;
  input += '\x1f';
  input += model_name;
  input += '\x1f';
  input += detail::format_double(temperature);
  input += '\x1f';
  input += std::to_string(max_tokens);
  return sha256_hex(input);
}

struct RankerRequest {
  Prompt prompt;
  std::string model_name;
  double temperature = 0.0;
  int max_tokens = 512;
  std::string request_key;
};

inline RankerRequest make_request(Prompt prompt, std::string model_name, double temperature = 0.0,
                                  int max_tokens = 512) {
  RankerRequest req;
  req.request_key = cache_key(prompt, model_name, temperature, max_tokens);
  req.prompt = std::move(prompt);
  req.model_name = std::move(model_name);
  req.temperature = temperature;
  req.max_tokens = max_tokens;
  return req;
}

struct RawCompletion {
  std::string request_key;
  std::string text;
  double latency_ms = 0.0;
  std::string backend_tag;  // http | replay | synthetic
};

/// Extra inputs the synthetic backend needs; the http and replay backends
/// ignore it.
struct BackendContext {
  const UserRecord* user = nullptr;
  const Catalog* catalog = nullptr;
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual RawCompletion execute(const RankerRequest& request, const BackendContext& ctx) = 0;
  virtual std::string_view tag() const = 0;
};

/// Append-only completion cache. One record per line:
///   request_key \t model_name \t base64(completion text)
/// Concurrent readers are safe; appends are serialized by a mutex.
class ReplayStore {
 public:
  ReplayStore() = default;

  /// Opens (and reads, when present) the store at `path`; appends go there.
  /// A missing file is simply an empty store.
  explicit ReplayStore(const std::string& path) { open(path); }

  void open(const std::string& path) {
    path_ = path;
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const auto fields = split(line, "\t");
      if (fields.size() != 3) {
        throw DataError("replay store " + path + " line " + std::to_string(line_no) +
                        ": expected 3 fields");
      }
      records_[fields[0]] = {fields[1], detail::base64_decode(fields[2])};
    }
  }

  const std::string& path() const { return path_; }

  std::optional<std::pair<std::string, std::string>> lookup(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto found = records_.find(key);
    if (found == records_.end()) return std::nullopt;
    return found->second;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return records_.size();
  }

  void append(const std::string& key, const std::string& model, const std::string& text) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (records_.count(key)) return;  // content-addressed: identical key, identical record
    records_[key] = {model, text};
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw DataError("cannot append to replay store " + path_);
    out << key << '\t' << model << '\t' << detail::base64_encode(text) << '\n';
  }

 private:
  std::string path_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::pair<std::string, std::string>> records_;
};

/// Serves completions from a replay store. Without a fallback the store is
/// authoritative and a missing key is an error (strict replay); with a
/// fallback, misses are forwarded and the response is recorded.
class ReplayBackend : public Backend {
 public:
  explicit ReplayBackend(ReplayStore& store, Backend* fallback = nullptr)
      : store_(store), fallback_(fallback) {}

  RawCompletion execute(const RankerRequest& request, const BackendContext& ctx) override {
    if (const auto hit = store_.lookup(request.request_key)) {
      RawCompletion completion;
      completion.request_key = request.request_key;
      completion.text = hit->second;
      completion.backend_tag = "replay";
      return completion;
    }
    if (!fallback_) {
      throw BackendError("replay cache miss for request_key " + request.request_key);
    }
    RawCompletion completion = fallback_->execute(request, ctx);
    store_.append(request.request_key, request.model_name, completion.text);
    return completion;
  }

  std::string_view tag() const override { return "replay"; }

 private:
  ReplayStore& store_;
  Backend* fallback_;
};

}  // namespace fairaudit
