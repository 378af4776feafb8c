#pragma once

// Requires linking OpenSSL; define CPPHTTPLIB_OPENSSL_SUPPORT before any other
// httplib include in the translation unit.

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <string>

#include "lrfill/oeis/fetch.hpp"

namespace lrfill::oeis {

/// Transport doing one HTTPS GET per call.
inline Transport http_transport(int timeout_seconds = 20) {
  return [timeout_seconds](const std::string& url) -> std::string {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw FetchError("bad url " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    httplib::Client client(origin);
    client.set_connection_timeout(timeout_seconds, 0);
    client.set_read_timeout(timeout_seconds, 0);
    client.set_follow_location(true);
    const auto res = client.Get(path);
    if (!res) throw FetchError("GET " + url + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw FetchError("GET " + url + " returned HTTP " + std::to_string(res->status));
    return res->body;
  };
}

}  // namespace lrfill::oeis
