#pragma once

// HTTP transport for the OEIS client. Define CPPHTTPLIB_OPENSSL_SUPPORT and
// link OpenSSL to reach https endpoints.

#include <string>

#include <httplib.h>

#include "cszidx/oeis_client.hpp"

namespace cszidx::oeis {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string target;  // /path?query
};

inline SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw PreconditionError("URL without scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

inline Transport http_transport(int timeout_seconds = 20) {
  return [timeout_seconds](const std::string& url) {
    const SplitUrl parts = split_url(url);
    httplib::Client client(parts.origin);
    if (!client.is_valid()) {
      throw NetworkError("unsupported endpoint " + parts.origin +
                         " (https needs a build with OpenSSL)");
    }
    client.set_connection_timeout(timeout_seconds, 0);
    client.set_read_timeout(timeout_seconds, 0);
    client.set_follow_location(true);
    const auto res = client.Get(parts.target);
    if (!res) {
      throw NetworkError("request to " + parts.origin + " failed: " +
                         httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw NetworkError("HTTP status " + std::to_string(res->status) + " from " + parts.origin,
                         res->status);
    }
    return res->body;
  };
}

/// Live client against the configured endpoint, at most one request per second.
inline Client live_client() {
  return Client(http_transport(), endpoint_from_env(), kLiveInterval);
}

}  // namespace cszidx::oeis
