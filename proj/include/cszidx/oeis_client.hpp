#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cszidx/graph_io.hpp"

namespace cszidx::oeis {

inline constexpr const char* kDefaultEndpoint = "https://oeis.org/search";
inline constexpr const char* kEndpointEnv = "CSZIDX_OEIS_ENDPOINT";

enum class MatchMode { subsequence, prefix };

struct SequenceQuery {
  std::vector<std::uint64_t> terms;
  MatchMode match_mode = MatchMode::subsequence;
};

struct Match {
  std::string id;  // A-number, e.g. "A000290"
  std::string name;
  std::vector<std::uint64_t> data;  // leading terms as listed by the server

  friend bool operator==(const Match&, const Match&) = default;
};

/// Transport failure; the same query may succeed when retried.
class NetworkError : public std::runtime_error {
 public:
  explicit NetworkError(const std::string& what, int status = 0)
      : std::runtime_error(what), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

/// The server answered, but not with a payload we understand.
class ResponseParseError : public std::runtime_error {
 public:
  ResponseParseError(const std::string& what, const std::string& payload)
      : std::runtime_error(what + "; payload starts with: " + payload.substr(0, 160)) {}
};

inline std::string endpoint_from_env() {
  const char* env = std::getenv(kEndpointEnv);
  return (env != nullptr && *env != '\0') ? std::string(env) : std::string(kDefaultEndpoint);
}

inline std::string join_terms(const std::vector<std::uint64_t>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(terms[i]);
  }
  return out;
}

inline std::string build_query_url(const std::string& endpoint, const SequenceQuery& q) {
  if (q.terms.empty()) throw PreconditionError("OEIS query needs at least one term");
  return endpoint + "?q=" + join_terms(q.terms) + "&fmt=json";
}

namespace detail {

inline std::vector<std::uint64_t> parse_terms(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.front() == '-') break;  // negative terms never match
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      break;  // terms beyond 64 bits cannot match a 64-bit query
    }
  }
  return out;
}

inline bool starts_with(const std::vector<std::uint64_t>& data,
                        const std::vector<std::uint64_t>& prefix) {
  return data.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), data.begin());
}

}  // namespace detail

/// Parses a fmt=json search response. Accepts the legacy object form
/// ({"results": [...] | null, ...}), a bare results array, and null.
inline std::vector<Match> parse_response(const std::string& body, const SequenceQuery& q) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ResponseParseError(std::string("malformed JSON: ") + e.what(), body);
  }
  const nlohmann::json* results = &doc;
  if (doc.is_object()) {
    if (!doc.contains("results")) throw ResponseParseError("object without results field", body);
    results = &doc["results"];
  }
  std::vector<Match> out;
  if (results->is_null()) return out;
  if (!results->is_array()) throw ResponseParseError("results is not an array", body);
  for (const auto& item : *results) {
    if (!item.is_object() || !item.contains("number") || !item["number"].is_number_integer()) {
      throw ResponseParseError("result without integer number field", body);
    }
    char id[16];
    std::snprintf(id, sizeof id, "A%06lld", item["number"].get<long long>());
    Match m{id, item.value("name", std::string{}), {}};
    if (item.contains("data") && item["data"].is_string()) {
      m.data = detail::parse_terms(item["data"].get<std::string>());
    }
    if (q.match_mode == MatchMode::prefix && !detail::starts_with(m.data, q.terms)) continue;
    out.push_back(std::move(m));
  }
  return out;
}

/// Fetches a URL and returns the response body, or throws NetworkError.
using Transport = std::function<std::string(const std::string& url)>;

/// Serves a saved response body for every request.
inline Transport fixture_transport(std::string path) {
  return [path = std::move(path)](const std::string&) { return read_text_file(path); };
}

/// Spaces consecutive calls at least `interval` apart.
class RateLimiter {
 public:
  explicit RateLimiter(std::chrono::milliseconds interval) : interval_(interval) {}

  void wait() {
    std::lock_guard lock(mutex_);
    const auto now = std::chrono::steady_clock::now();
    if (used_ && now < last_ + interval_) std::this_thread::sleep_until(last_ + interval_);
    last_ = std::chrono::steady_clock::now();
    used_ = true;
  }

 private:
  std::mutex mutex_;
  std::chrono::milliseconds interval_;
  std::chrono::steady_clock::time_point last_{};
  bool used_ = false;
};

inline constexpr std::chrono::milliseconds kLiveInterval{1000};

/// Sequence lookup client. Requests go through one transport and are
/// serialized; the rate limiter applies to every request.
class Client {
 public:
  Client(Transport transport, std::string endpoint,
         std::chrono::milliseconds interval = std::chrono::milliseconds{0})
      : transport_(std::move(transport)), endpoint_(std::move(endpoint)), limiter_(interval) {}

  const std::string& endpoint() const noexcept { return endpoint_; }

  std::string url_for(const SequenceQuery& q) const { return build_query_url(endpoint_, q); }

  std::vector<Match> query(const SequenceQuery& q) {
    const std::string url = url_for(q);
    std::lock_guard lock(mutex_);
    limiter_.wait();
    return parse_response(transport_(url), q);
  }

 private:
  Transport transport_;
  std::string endpoint_;
  RateLimiter limiter_;
  std::mutex mutex_;
};

}  // namespace cszidx::oeis
